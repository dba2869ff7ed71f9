#include "common.hpp"

namespace wsa {
namespace {

std::vector<ArrowSpec> triangle_arrows() {
  return {{"abar", "1", "1"}, {"alpha", "1", "2"}, {"beta", "2", "1"},
          {"gamma", "2", "3"}, {"delta", "3", "2"}, {"eps", "3", "3"}};
}

TEST(TriangulationQuiver, TriangleDerivedPermutations) {
  const auto q = TriangulationQuiver::build({"1", "2", "3"}, triangle_arrows(),
                                            {{"abar", "alpha", "beta"}, {"gamma", "eps", "delta"}});
  auto A = [&](const char* n) { return q.arrow(n); };
  EXPECT_EQ(q.bar(A("abar")), A("alpha"));
  EXPECT_EQ(q.bar(A("beta")), A("gamma"));
  EXPECT_EQ(q.bar(A("eps")), A("delta"));
  // g = bar o f, worked by hand: (abar)(eps)(alpha gamma delta beta)
  EXPECT_EQ(q.g(A("abar")), A("abar"));
  EXPECT_EQ(q.g(A("eps")), A("eps"));
  EXPECT_EQ(q.g(A("alpha")), A("gamma"));
  EXPECT_EQ(q.g(A("gamma")), A("delta"));
  EXPECT_EQ(q.g(A("delta")), A("beta"));
  EXPECT_EQ(q.g(A("beta")), A("alpha"));
  EXPECT_EQ(q.g_cycles().size(), 3u);
  EXPECT_EQ(q.n(A("alpha")), 4);
  EXPECT_EQ(q.n(A("abar")), 1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    EXPECT_EQ(q.f(q.f(q.f(a))), a);
    EXPECT_EQ(q.target(a), q.source(q.f(a)));
    EXPECT_EQ(q.g_inv(q.g(a)), a);
    EXPECT_EQ(q.bar(q.bar(a)), a);
  }
  EXPECT_TRUE(q.is_loop(A("abar")));
  EXPECT_EQ(q.g_pow(A("alpha"), 6), A("delta"));
}

TEST(TriangulationQuiver, FixedPointOfF) {
  const auto d = catalog_loop_pair();
  const auto& q = d.quiver;
  EXPECT_EQ(q.f(q.arrow("kappa")), q.arrow("kappa"));
  EXPECT_EQ(q.f_cycles().size(), 4u);
}

TEST(TriangulationQuiver, Rejections) {
  using test::error_kind;
  const std::vector<std::string> V{"1", "2", "3"};
  // f-cycle of length 4 on a consistent quiver is an f^3 violation
  EXPECT_EQ(error_kind([] { load_document(test::data_path("bad_f_fourth_power.json")); }), ErrorKind::FCubeNotIdentity);
  EXPECT_EQ(error_kind([] { load_document(test::data_path("bad_target_mismatch.json")); }), ErrorKind::FTargetMismatch);
  EXPECT_EQ(error_kind([] { load_document(test::data_path("bad_out_degree.json")); }), ErrorKind::NotTwoRegular);
  EXPECT_EQ(error_kind([] { load_document(test::data_path("bad_disconnected.json")); }), ErrorKind::NotConnected);
  // an arrow missing from f
  EXPECT_EQ(error_kind([&] {
              TriangulationQuiver::build(V, triangle_arrows(), {{"abar", "alpha", "beta"}, {"gamma", "eps"}});
            }),
            ErrorKind::FNotPermutation);
  // unknown endpoint
  EXPECT_EQ(error_kind([&] {
              auto arrows = triangle_arrows();
              arrows[0].target = "9";
              TriangulationQuiver::build(V, arrows, {{"abar", "alpha", "beta"}, {"gamma", "eps", "delta"}});
            }),
            ErrorKind::InvalidDocument);
}

TEST(Combinatorics, AssumptionClauses) {
  auto d = catalog_triangle();
  const auto& q = d.quiver;
  EXPECT_TRUE(check_assumptions(q, d.m).empty());
  // alpha's g-cycle has n = 4; clause (3) needs m n >= 4 beside the virtual loop abar
  d.m[q.g_cycles().cycle_index(q.arrow("abar"))] = 1;  // m n = 1 breaks clause (1)
  const auto v = check_assumptions(q, d.m);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().clause, 1);
}

TEST(Combinatorics, VirtualArrowsAndQPrime) {
  const auto d = catalog_spherical();
  const auto virt = classify_virtual(d.quiver, d.m);
  int count = 0;
  for (bool b : virt) count += b;
  EXPECT_EQ(count, 4);  // two virtual g-2-cycles
  EXPECT_TRUE(virtual_facts(d.quiver, d.m).passed());
  EXPECT_TRUE(quiver_invariants(d.quiver).passed());

  // one Q' configuration per glued copy
  for (int n : {1, 2, 3}) {
    const auto g = generate_glued(n);
    EXPECT_EQ(find_qprime_configs(g.quiver).size(), static_cast<std::size_t>(n)) << n;
    EXPECT_TRUE(qprime_observation(g.quiver).passed()) << n;
  }
}

}  // namespace
}  // namespace wsa
