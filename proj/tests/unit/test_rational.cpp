#include <gtest/gtest.h>

#include <climits>
#include <vector>

#include "dzid/rational.hpp"
#include "support.hpp"

using namespace dzid;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-7/1920").str(), "-7/1920");
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("5").str(), "5");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ExactAtScale) {
  Rational r = Rational(1, 3);
  for (int i = 0; i < 200; ++i) r *= Rational(1, 3);
  Rational back = r;
  for (int i = 0; i < 201; ++i) back *= 3;
  EXPECT_TRUE(back.is_one());
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(pochhammer(5, 0), 1);
  EXPECT_EQ(pochhammer(5, 3), 60);
  EXPECT_EQ(pochhammer(3, 4), 0);
  EXPECT_EQ(pochhammer(-2, 2), 6);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_THROW(double_factorial(-3), std::domain_error);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(2, 3), 0);
}

TEST(Rational, FieldAxiomsRandom) {
  testkit::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = rng.rational(1000, 1000), b = rng.rational(1000, 1000), c = rng.rational(50, 50);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * a.inverse(), Rational(1));
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a < b, b > a);
  }
}

TEST(Rational, AgreesWithGmpAcrossWordBoundary) {
  const long edge[] = {1, 2, 3, 7, (1L << 31) + 11, (1L << 62) - 57, INT64_MAX, INT64_MAX - 1, INT64_MIN + 1, INT64_MIN};
  std::vector<Rational> xs;
  std::vector<mpq_class> ref;
  for (long n : edge)
    for (long d : {1L, 3L, (1L << 40) + 1, INT64_MAX}) {
      xs.emplace_back(BigInt(n), BigInt(d));
      mpq_class q{mpz_class(n), mpz_class(d)};
      q.canonicalize();
      ref.push_back(q);
    }
  auto same = [](const Rational& r, const mpq_class& q) { return r.numerator() == q.get_num() && r.denominator() == q.get_den(); };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ASSERT_TRUE(same(xs[i], ref[i]));
    EXPECT_TRUE(same(-xs[i], mpq_class(-ref[i])));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      EXPECT_TRUE(same(xs[i] + xs[j], mpq_class(ref[i] + ref[j])));
      EXPECT_TRUE(same(xs[i] - xs[j], mpq_class(ref[i] - ref[j])));
      EXPECT_TRUE(same(xs[i] * xs[j], mpq_class(ref[i] * ref[j])));
      EXPECT_TRUE(same(xs[i] / xs[j], mpq_class(ref[i] / ref[j])));
      EXPECT_EQ(xs[i] == xs[j], ref[i] == ref[j]);
      EXPECT_EQ(xs[i] < xs[j], ref[i] < ref[j]);
    }
  }
}
