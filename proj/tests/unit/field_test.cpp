#include "common.hpp"

namespace wsa {
namespace {

TEST(PrimeField, ArithmeticModP) {
  const PrimeField F(101);
  EXPECT_EQ(F.add(100, 5), 4u);
  EXPECT_EQ(F.sub(3, 7), 97u);
  EXPECT_EQ(F.mul(50, 3), 49u);
  EXPECT_EQ(F.inv(2), 51u);
  for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u) << a;
  EXPECT_EQ(F.from_int(-1), 100u);
  EXPECT_EQ(F.from_rational(Rational(3, 4)), F.div(3, 4));
}

TEST(PrimeField, RejectsCompositeAndDivisionByZero) {
  EXPECT_EQ(test::error_kind([] { PrimeField F(100); }), ErrorKind::InvalidScalar);
  const PrimeField F(7);
  EXPECT_TRUE(test::error_kind([&] { (void)F.inv(0); }).has_value());
  EXPECT_TRUE(test::error_kind([&] { (void)F.from_rational(Rational(1, 14)); }).has_value());
}

TEST(FieldSpec, CharacteristicZeroOrPrime) {
  EXPECT_EQ(FieldSpec::make(0).characteristic, 0u);
  EXPECT_EQ(FieldSpec::make(101).characteristic, 101u);
  EXPECT_EQ(test::error_kind([] { FieldSpec::make(91); }), ErrorKind::InvalidScalar);
  EXPECT_EQ(test::error_kind([] { FieldSpec::make(-5); }), ErrorKind::InvalidScalar);
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(rational_to_string(Rational(-3, 9)), "-1/3");
  for (const char* bad : {"", "1/0", "x", "1.5", "2/"})
    EXPECT_EQ(test::error_kind([&] { parse_rational(bad); }), ErrorKind::InvalidScalar) << bad;
}

TEST(Matrix, RrefRankOverRationals) {
  const RationalField Q;
  auto m = Matrix<RationalField>::from_rows(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  const auto r = rref(Q, m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  // [1 0 1; 0 1 1; 0 0 0]
  EXPECT_EQ(r.reduced(0, 2), Rational(1));
  EXPECT_EQ(r.reduced(1, 2), Rational(1));
  EXPECT_EQ(rank(Q, m.transpose(Q)), 2u);
}

TEST(Matrix, RankDependsOnCharacteristic) {
  // det = 7, so singular exactly in characteristic 7
  const std::vector<std::vector<std::int64_t>> rows{{2, 1}, {1, 4}};
  for (std::uint32_t p : {5u, 7u, 101u}) {
    const PrimeField F(p);
    std::vector<Vec<PrimeField>> v;
    for (const auto& r : rows) v.push_back({F.from_int(r[0]), F.from_int(r[1])});
    EXPECT_EQ(rank(F, Matrix<PrimeField>::from_rows(F, v, 2)), p == 7 ? 1u : 2u) << p;
  }
}

TEST(Subspace, MembershipAndLeftKernel) {
  const PrimeField F(11);
  auto s = Subspace<PrimeField>::span(F, 3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains({1, 2, 1}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
  const auto k = left_kernel(F, {{1, 2}, {2, 4}, {0, 1}}, 2);
  ASSERT_EQ(k.size(), 1u);
  // only 2 * row0 - row1 = 0, up to scale
  EXPECT_EQ(k[0][1], F.mul(k[0][0], F.neg(F.inv(2))));
  EXPECT_EQ(k[0][2], 0u);
  EXPECT_NE(k[0][0], 0u);
}

}  // namespace
}  // namespace wsa
