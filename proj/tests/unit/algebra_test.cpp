#include "../oracle/brute_force.hpp"
#include "common.hpp"

namespace wsa {
namespace {

class OracleEquivalence : public ::testing::TestWithParam<const char*> {};

TEST_P(OracleEquivalence, DimensionsMatchBruteForce) {
  const auto p = test::seeded(GetParam());
  const auto A = test::build(p);
  const oracle::BruteForce bf(p.data(), 101);
  const int D = p.max_mn() + 2;
  const auto at_d = bf.dimension(D);
  const auto at_d1 = bf.dimension(D + 1);
  EXPECT_EQ(at_d.total, at_d1.total);
  EXPECT_EQ(at_d.per_vertex, at_d1.per_vertex);
  EXPECT_EQ(A.dim(), at_d.total);
  for (int v = 0; v < p.quiver().num_vertices(); ++v) EXPECT_EQ(A.right_dim(v), at_d.per_vertex[v]) << v;
  EXPECT_TRUE(A.stabilized());
}

INSTANTIATE_TEST_SUITE_P(Catalog, OracleEquivalence, ::testing::Values("T", "S", "LOOP-PAIR", "GLUED(1)"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::erase_if(s, [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); });
                           return s;
                         });

TEST(QuotientAlgebra, TriangleDimensions) {
  const auto p = WeightedPresentation::make(catalog_triangle());
  const auto A = test::build(p);
  const auto& q = p.quiver();
  EXPECT_EQ(A.dim(), 20u);
  EXPECT_EQ(A.right_dim(q.vertex("1")), 6u);
  EXPECT_EQ(A.right_dim(q.vertex("2")), 8u);
  EXPECT_EQ(A.right_dim(q.vertex("3")), 6u);
  EXPECT_EQ(A.truncation(), 6);
  // Cartan matrix is symmetric for a symmetric algebra
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(A.block_dim(i, j), A.block_dim(j, i));
  // same answer over the rationals
  const auto AQ = QuotientAlgebra<RationalField>::build(p, RationalField{});
  EXPECT_EQ(AQ.dim(), 20u);
}

TEST(QuotientAlgebra, CatalogDimensions) {
  EXPECT_EQ(test::build(test::seeded("S")).dim(), 40u);
  EXPECT_EQ(test::build(test::seeded("LOOP-PAIR")).dim(), 55u);
  EXPECT_EQ(test::build(test::seeded("GLUED(1)")).dim(), 52u);
  EXPECT_EQ(test::build(test::seeded("GLUED(2)")).dim(), 178u);
}

TEST(QuotientAlgebra, HandComputedProducts) {
  const auto p = WeightedPresentation::make(catalog_triangle());
  const auto A = test::build(p);
  const auto& q = p.quiver();
  const PrimeField F(101);
  auto ev = [&](const char* s) { return A.evaluate(parse_path(q, s)); };
  const auto c_abar = F.from_int(2), c_alpha = F.from_int(3);
  // alpha beta alpha = c_abar abar alpha = c_abar c_alpha alpha gamma delta
  EXPECT_TRUE(vectors_equal(F, ev("alpha*beta*alpha"), A.scale(F.mul(c_abar, c_alpha), ev("alpha*gamma*delta"))));
  // type-1 relation itself
  EXPECT_TRUE(vectors_equal(F, ev("alpha*beta"), A.scale(c_abar, ev("abar"))));
  // zero relation xi(alpha) = alpha gamma eps
  EXPECT_TRUE(A.is_zero(ev("alpha*gamma*eps")));
  // B_alpha and B_abar are nonzero and proportional
  const auto Ba = A.evaluate(p.B(q.arrow("alpha")));
  const auto Bb = A.evaluate(p.B(q.arrow("abar")));
  EXPECT_FALSE(A.is_zero(Ba));
  EXPECT_TRUE(proportion(F, Bb, Ba).has_value());
  // anything longer than B vanishes
  EXPECT_TRUE(A.is_zero(A.times_arrow(Ba, q.arrow("alpha"))));
  EXPECT_TRUE(A.is_zero(A.times_arrow(Ba, q.arrow("abar"))));
}

TEST(QuotientAlgebra, MultiplicationIsAssociativeAndUnital) {
  const auto A = test::build(test::seeded("S"));
  const auto one = A.one();
  for (std::size_t b = 0; b < A.dim(); ++b) {
    const auto x = A.basis_vector(b);
    EXPECT_TRUE(vectors_equal(A.field(), A.multiply(one, x), x));
    EXPECT_TRUE(vectors_equal(A.field(), A.multiply(x, one), x));
  }
  EXPECT_TRUE(check_associativity(A).passed());
}

TEST(QuotientAlgebra, ExplicitTruncationBelowStabilityIsRejected) {
  const auto p = WeightedPresentation::make(catalog_triangle());
  EXPECT_EQ(test::error_kind([&] { test::Alg::build(p, PrimeField(101), 3); }), ErrorKind::TruncationUnstable);
  EXPECT_EQ(test::Alg::build(p, PrimeField(101), 9).dim(), 20u);
}

TEST(QuotientAlgebra, RadicalFiltration) {
  const auto A = test::build(WeightedPresentation::make(catalog_triangle()));
  // J^0 = A, J^k shrinks to zero; J/J^2 has one basis vector per Gabriel arrow
  EXPECT_EQ(A.radical_power(0).dim(), 20u);
  EXPECT_EQ(A.radical_power(1).dim(), 17u);
  EXPECT_EQ(A.radical_power(1).dim() - A.radical_power(2).dim(), 4u);
  int k = 1;
  while (A.radical_power(k).dim() > 0) ++k;
  EXPECT_LE(k, A.truncation());
}

}  // namespace
}  // namespace wsa
