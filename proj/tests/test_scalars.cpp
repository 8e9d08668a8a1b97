#include <gtest/gtest.h>

#include <numeric>

#include "qdef/expr_parser.hpp"
#include "qdef/scalar.hpp"
#include "support.hpp"

namespace qdef {
namespace {

const CyclotomicField& F(unsigned n) { return CyclotomicField::get(n); }
Scalar z(unsigned n, std::int64_t e = 1) { return Scalar::zeta_power(F(n), e); }
Scalar c(unsigned n, std::int64_t v) { return Scalar(F(n), v); }

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(3, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("-4/6").to_string(), "-2/3");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, PromotesBeyondSixtyFourBits) {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big * big;
  EXPECT_EQ(sq / big / big, big);
  EXPECT_EQ((sq + 1) - sq, Rational(1));
  EXPECT_EQ(sq.to_mpq(), mpq_class(big.to_mpq() * big.to_mpq() * big.to_mpq()));
  Rational harmonic = 0;
  mpq_class reference = 0;
  for (int i = 1; i <= 60; ++i) {
    harmonic += Rational(1, i);
    reference += mpq_class(1, i);
  }
  EXPECT_EQ(harmonic.to_mpq(), reference);
  EXPECT_EQ(harmonic - harmonic, Rational(0));
}

TEST(Scalar, Addition) {
  EXPECT_EQ(c(5, 0) + z(5), z(5));
  EXPECT_EQ(z(4) + z(4), c(4, 2) * z(4));
  EXPECT_EQ(z(3) + z(3, 2), c(3, -1));
}

TEST(Scalar, Multiplication) {
  Scalar a = parse_scalar("3/2 - z^2", F(5));
  EXPECT_EQ(c(5, 1) * a, a);
  EXPECT_EQ(z(4) * z(4), c(4, -1));
  EXPECT_EQ(z(3) * z(3, 2), c(3, 1));
}

TEST(Scalar, Inverse) {
  EXPECT_EQ(c(7, 1).inverse(), c(7, 1));
  EXPECT_EQ(z(4).inverse(), -z(4));
  EXPECT_EQ(c(2, -1).inverse(), c(2, -1));
  EXPECT_THROW(c(3, 0).inverse(), DivisionByZero);
}

TEST(Scalar, QuantumIntegers) {
  EXPECT_TRUE(quantum_integer(0, z(5)).is_zero());
  EXPECT_TRUE(quantum_integer(2, c(2, -1)).is_zero());
  EXPECT_TRUE(quantum_integer(3, z(3)).is_zero());
  EXPECT_EQ(quantum_factorial(0, z(5)), c(5, 1));
  EXPECT_EQ(quantum_factorial(2, z(3)), c(3, 1) + z(3));
  EXPECT_TRUE(quantum_factorial(2, c(2, -1)).is_zero());
  for (unsigned i = 0; i <= 20; ++i) EXPECT_EQ(quantum_integer(i, Scalar(1)), Scalar(static_cast<std::int64_t>(i)));
}

TEST(Scalar, PrimitiveRoots) {
  EXPECT_TRUE(is_primitive_root(c(2, -1), 2));
  EXPECT_FALSE(is_primitive_root(c(2, 1), 2));
  EXPECT_FALSE(is_primitive_root(z(4, 2), 4));
  EXPECT_TRUE(is_primitive_root(z(4, 2), 2));
  EXPECT_TRUE(is_primitive_root(z(6, 5), 6));
  EXPECT_EQ(root_of_unity_order(z(12, 8)), 3u);
  EXPECT_EQ(root_of_unity_order(-z(3)), 6u);
  EXPECT_EQ(root_of_unity_order(c(5, 2)), std::nullopt);
}

TEST(Scalar, FieldMismatchIsRejected) {
  EXPECT_THROW(z(3) + z(4), FieldMismatch);
  EXPECT_THROW(z(3) * z(5), FieldMismatch);
  EXPECT_EQ(Scalar(Rational(1, 2)) + z(3), parse_scalar("1/2 + z", F(3)));
}

TEST(Scalar, CanonicalPrinting) {
  EXPECT_EQ(parse_scalar("-1/2*z^3 + 2", F(5)).to_string(), "2 - 1/2*z^3");
  EXPECT_EQ(z(3, 2).to_string(), "-1 - z");
  EXPECT_EQ(c(4, 0).to_string(), "0");
  EXPECT_EQ(parse_scalar("z^-1", F(4)).to_string(), "-z");
  EXPECT_EQ(parse_scalar("(1 + z)*(1 - z)", F(4)).to_string(), "2");
  EXPECT_EQ(parse_scalar("-z", F(3)).to_string(), "-z");
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(parse_scalar("1 +", F(3)), ParseError);
  EXPECT_THROW(parse_scalar("w1", F(3)), ParseError);
  EXPECT_THROW(parse_scalar("1/0", F(3)), ParseError);
  EXPECT_THROW(parse_scalar("(z", F(3)), ParseError);
}

class ScalarProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(ScalarProperties, FieldAxioms) {
  const CyclotomicField& field = F(GetParam());
  std::mt19937_64 rng(GetParam() * 7919);
  for (int s = 0; s < 1000; ++s) {
    Scalar a = testing::random_scalar(rng, field);
    Scalar b = testing::random_scalar(rng, field);
    Scalar d = testing::random_scalar(rng, field);
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a - a, Scalar(field, 0));
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    ASSERT_EQ(Scalar::from_coefficients(field, a.coefficients()), a);
    ASSERT_EQ(parse_scalar(a.to_string(), field), a);
  }
}

TEST_P(ScalarProperties, QuantumFactorialsOfPrimitiveRoots) {
  const unsigned n = GetParam();
  for (unsigned e = 1; e < n; ++e) {
    if (std::gcd(e, n) != 1) continue;
    Scalar q = z(n, e);
    ASSERT_TRUE(is_primitive_root(q, n));
    ASSERT_TRUE(quantum_integer(n, q).is_zero());
    for (unsigned i = 0; i < n; ++i) ASSERT_FALSE(quantum_factorial(i, q).is_zero()) << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ScalarProperties, ::testing::Values(2u, 3u, 4u, 5u, 6u, 8u, 12u));

}  // namespace
}  // namespace qdef
