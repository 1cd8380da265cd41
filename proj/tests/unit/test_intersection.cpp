#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "dzid/intersection.hpp"
#include "properties.hpp"

using namespace dzid;

TEST(Intersection, KnownValues) {
  IntersectionOracle o;
  EXPECT_EQ(o(0, {0, 0, 0}), Rational(1));
  EXPECT_EQ(o(1, {1}), Rational(1, 24));
  EXPECT_EQ(o(2, {4}), Rational(1, 1152));
  EXPECT_EQ(o(2, {2, 3}), Rational(29, 5760));
  EXPECT_EQ(o(2, {3, 2}), Rational(29, 5760));
  EXPECT_EQ(o(3, {7}), Rational(1, 82944));
  EXPECT_EQ(o(4, {10}), Rational(1, 7962624));
  EXPECT_EQ(o(1, {1, 1}), Rational(1, 24));
  EXPECT_EQ(o(0, {1, 1, 0, 0, 0}), Rational(2));
}

TEST(Intersection, DimensionMismatchIsZero) {
  IntersectionOracle o;
  EXPECT_EQ(o(2, {3}), Rational(0));
  EXPECT_EQ(o(0, {1, 0, 0}), Rational(0));
}

TEST(Intersection, UnstableOrNegativeThrows) {
  IntersectionOracle o;
  EXPECT_THROW(o(0, {0, 0}), std::invalid_argument);
  EXPECT_THROW(o(1, {}), std::invalid_argument);
  EXPECT_THROW(o(1, {-1, 2}), std::invalid_argument);
  EXPECT_THROW(o(-1, {1}), std::invalid_argument);
}

TEST(Intersection, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "dzid_cache_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "intersections.txt";
  IntersectionOracle a;
  a(3, {7});
  a(2, {2, 3});
  a.save(file);
  IntersectionOracle b;
  b.load(file);
  EXPECT_EQ(b.memo_size(), a.memo_size());
  EXPECT_EQ(b(3, {7}), Rational(1, 82944));
  std::filesystem::remove_all(dir);
}

TEST(Intersection, StringAndDilatonRandom) {
  testkit::Rng rng(2024);
  IntersectionOracle o;
  testkit::Tally t;
  testkit::string_and_dilaton(o, 100, rng, t);
  EXPECT_EQ(t.checks, 100);
  for (const auto& f : t.failures) ADD_FAILURE() << f;
}
