#include <cliffchar/cyclotomic.hpp>
#include <cliffchar/word.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cliffchar;

namespace {

Cyclotomic z8(int k) { return Cyclotomic::zeta(8, k); }
const Cyclotomic sqrt2 = z8(1) - z8(3);

Cyclotomic random_element(std::mt19937_64& rng, int e) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> c(e);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclotomic::make(e, c);
}

}  // namespace

TEST(Rational, ArithmeticAndPromotion) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3).str(), "-1/3");
  Rational big(INT64_MAX);
  Rational sum = big + big;
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ(sum - big, big);
  EXPECT_TRUE((sum - big).is_small());
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Cyclotomic, MakeReduces) {
  auto z = Cyclotomic::make(8, {0, 1, 0, 0, 0, 0, 0, 0});
  ASSERT_EQ(z.coeffs().size(), 4u);
  EXPECT_EQ(z.coeffs()[1], Rational(1));
  auto m1 = Cyclotomic::make(8, {0, 0, 0, 0, 1});
  EXPECT_EQ(m1, Cyclotomic(-1));
  EXPECT_EQ(m1.coeffs()[0], Rational(-1));
  EXPECT_EQ((sqrt2 * sqrt2).scaled(Rational(1, 4)), Cyclotomic(Rational(1, 2)));
  EXPECT_THROW(Cyclotomic::make(0, {1}), Error);
}

TEST(Cyclotomic, FieldOps) {
  EXPECT_EQ(z8(1) * z8(7), Cyclotomic(1));
  EXPECT_EQ(z8(1) + z8(1).conj(), sqrt2);
  EXPECT_EQ(sqrt2 * sqrt2, Cyclotomic(2));
  EXPECT_EQ(Cyclotomic(2).inv(), Cyclotomic(Rational(1, 2)));
  EXPECT_THROW(Cyclotomic::rational(0, 8).inv(), Error);
}

TEST(Cyclotomic, Conj) {
  EXPECT_EQ(z8(1).conj(), -z8(3));
  EXPECT_EQ(Cyclotomic(Rational(5, 7)).conj(), Cyclotomic(Rational(5, 7)));
  EXPECT_EQ(sqrt2.conj(), sqrt2);
}

TEST(Cyclotomic, ToFloat) {
  auto v = z8(1).to_complex();
  EXPECT_NEAR(v.real(), 0.70710678118654752, 1e-12);
  EXPECT_NEAR(v.imag(), 0.70710678118654752, 1e-12);
  EXPECT_NEAR(Cyclotomic(-1).to_complex().real(), -1.0, 1e-15);
  EXPECT_NEAR(sqrt2.to_complex().real(), 1.41421356237309505, 1e-12);
  EXPECT_NEAR(sqrt2.to_complex().imag(), 0.0, 1e-12);
}

TEST(Cyclotomic, RationalInteger) {
  EXPECT_TRUE(Cyclotomic(3).is_rational_integer());
  EXPECT_FALSE(z8(1).is_rational_integer());
  EXPECT_FALSE((z8(1) + z8(7)).is_rational_integer());
  EXPECT_FALSE(Cyclotomic(Rational(1, 2)).is_rational_integer());
}

TEST(Cyclotomic, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(rng, i % 2 ? 8 : 24);
    EXPECT_EQ(Cyclotomic::parse(a.str(), a.conductor()), a) << a.str();
  }
  EXPECT_EQ(Cyclotomic::parse("-7"), Cyclotomic(-7));
  EXPECT_EQ(Cyclotomic::parse("1/2 - 3*z8^2"), Cyclotomic(Rational(1, 2)) - z8(2).scaled(3));
}

class CyclotomicProperties : public ::testing::TestWithParam<int> {};

TEST_P(CyclotomicProperties, FieldAxioms) {
  const int e = GetParam();
  std::mt19937_64 rng(1234 + e);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_element(rng, e), b = random_element(rng, e), c = random_element(rng, e);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) ASSERT_EQ(a * a.inv(), Cyclotomic(1));
    ASSERT_EQ(a.conj().conj(), a);
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
    auto fa = a.to_complex(), fb = b.to_complex();
    ASSERT_LT(std::abs((a * b).to_complex() - fa * fb), 1e-9);
    ASSERT_LT(std::abs((a + b).to_complex() - (fa + fb)), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CyclotomicProperties, ::testing::Values(8, 24));

TEST(Cyclotomic, LiftRoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(rng, 8), b = random_element(rng, 8);
    EXPECT_EQ(a == b, a.lift(24) == b.lift(24));
    EXPECT_EQ(a.lift(24), a);
    EXPECT_EQ((a * b).lift(24), a.lift(24) * b.lift(24));
  }
  EXPECT_EQ(Cyclotomic::zeta(24, 3), z8(1));
  EXPECT_EQ(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(8, 2), Cyclotomic::zeta(24, 8) + Cyclotomic::zeta(24, 6));
}

TEST(Word, Parse) {
  EXPECT_EQ(to_string(parse_word("H1 p2^-1  z1")), "h1 p2^-1 z1");
  EXPECT_EQ(parse_word("( z1 h2 h1 )^3").size(), 9u);
  EXPECT_EQ(to_string(parse_word("(h1 p1)^-2")), "p1^-1 h1^-1 p1^-1 h1^-1");
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(parse_word("h1 ) p1"), Error);
  EXPECT_THROW(parse_word("(h1"), Error);
  EXPECT_THROW(parse_word("h1^"), Error);
  EXPECT_THROW(parse_word("3h"), Error);
}
