#include "common.hpp"

namespace wsa {
namespace {

TEST(Verifier, CatalogVerifies) {
  for (const char* entry : {"T", "S", "LOOP-PAIR", "GLUED(1)", "GLUED(2)"}) {
    const auto r = verify_all(seeded_parameters(catalog(entry), 7));
    EXPECT_TRUE(r.verified()) << entry << "\n" << report_text(r);
    EXPECT_EQ(r.checks.size(), check_ids().size());
    for (std::size_t k = 0; k < r.checks.size(); ++k) EXPECT_EQ(r.checks[k].id, check_ids()[k]);
  }
}

TEST(Verifier, ExceptionalZetaScalarOnTriangle) {
  const auto p = WeightedPresentation::make(catalog_triangle());
  const auto A = test::build(p);
  const auto& q = p.quiver();
  const PrimeField F(101);
  // alpha beta alpha = c_abar c_alpha A_alpha, worked out from two type-1 relations
  const auto o = zeta_outcome(A, q.arrow("alpha"));
  EXPECT_TRUE(o.excepted);
  EXPECT_FALSE(o.vanishes);
  ASSERT_TRUE(o.lambda.has_value());
  EXPECT_EQ(*o.lambda, F.from_int(2 * 3));
  EXPECT_EQ(o.expected, o.lambda);
  EXPECT_EQ(o.target, q.arrow("alpha"));
  const auto z = zeta_outcome(A, q.arrow("beta"));
  EXPECT_FALSE(z.excepted);
  EXPECT_TRUE(z.vanishes);
}

TEST(Verifier, SymmetrizingFormCertificate) {
  for (const char* entry : {"T", "S", "GLUED(1)"}) {
    const auto A = test::build(test::seeded(entry));
    const auto phi = symmetrizing_form(A);
    EXPECT_EQ(phi.gram_rank, A.dim()) << entry;
    const auto& F = A.field();
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto x = A.basis_vector(i), y = A.basis_vector(j);
        ASSERT_EQ(phi(F, A.multiply(x, y)), phi(F, A.multiply(y, x))) << entry << " " << i << " " << j;
      }
  }
}

TEST(Verifier, SocleIsSpannedByB) {
  const auto p = test::seeded("S");
  const auto A = test::build(p);
  const auto& q = p.quiver();
  for (int v = 0; v < q.num_vertices(); ++v) {
    const auto soc = A.socle_right(v);
    ASSERT_EQ(soc.size(), 1u) << v;
    const auto B = A.evaluate(p.B(q.out_arrows(v)[0]));
    EXPECT_TRUE(proportion(A.field(), soc[0], B).has_value());
  }
}

TEST(Verifier, SingularTriangleLabels) {
  auto d = seeded_parameters(catalog_triangle(), 7);
  const auto& q = d.quiver;
  for (const char* a : {"abar", "alpha", "eps"}) d.c[q.g_cycles().cycle_index(q.arrow(a))] = Rational(1);
  const auto r = verify_all(d);
  EXPECT_FALSE(r.verified());
  const auto& l = r.labels;
  EXPECT_NE(std::find(l.begin(), l.end(), "SINGULAR-TRIANGLE"), l.end());
  EXPECT_TRUE(r.get("period-four").failed());
}

TEST(Verifier, ExtraSocleFixtures) {
  const auto deg = verify_all(load_document(test::data_path("extra_socle_degenerate.json")));
  // the extra socle element also breaks symmetry, so CHECK-FAILURE rides along
  ASSERT_FALSE(deg.labels.empty());
  EXPECT_EQ(deg.labels.front(), "DEGENERATE") << report_text(deg);
  for (const auto& l : deg.labels) EXPECT_EQ(l.rfind("SINGULAR", 0), std::string::npos) << l;
  EXPECT_TRUE(deg.get("socle-symmetry").failed());
  const auto A = test::build(WeightedPresentation::make(load_document(test::data_path("extra_socle_degenerate.json"))));
  const auto found = detect_extra_socle(A);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_TRUE(found[0].site.degenerate);
  EXPECT_TRUE(found[0].annihilated);
  EXPECT_TRUE(found[0].outside_b);
  EXPECT_EQ(found[0].socle_dim, 2u);

  const auto reg = verify_all(load_document(test::data_path("extra_socle_regular.json")));
  EXPECT_TRUE(reg.verified()) << report_text(reg);
  EXPECT_TRUE(reg.get("extra-socle").passed());
}

TEST(Verifier, AssumptionFailureShortCircuits) {
  const auto r = verify_all(load_document(test::data_path("bad_assumption.json")));
  EXPECT_TRUE(r.get("assumption").failed());
  for (const auto& c : r.checks)
    if (c.id != "assumption") {
      EXPECT_EQ(c.status, CheckStatus::NotApplicable) << c.id;
    }
}

TEST(Verifier, SeededParametersAreDeterministicAndGeneric) {
  const auto a = seeded_parameters(catalog_spherical(), 11);
  const auto b = seeded_parameters(catalog_spherical(), 11);
  EXPECT_EQ(a.c, b.c);
  EXPECT_TRUE(parameters_generic(WeightedPresentation::make(a)));
  EXPECT_NE(seeded_parameters(catalog_spherical(), 12).c, a.c);
}

TEST(Verifier, JsonReportShape) {
  const auto r = verify_all(catalog_triangle());
  const auto j = report_json(r);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["classification"], "VERIFIED WEIGHTED SURFACE ALGEBRA");
  ASSERT_EQ(j["checks"].size(), check_ids().size());
  EXPECT_EQ(j["checks"][0]["id"], "assumption");
  EXPECT_EQ(report_json(verify_all(catalog_triangle())).dump(), j.dump());
}

}  // namespace
}  // namespace wsa
