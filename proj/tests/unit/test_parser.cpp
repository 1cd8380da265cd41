#include <gtest/gtest.h>

#include "dzid/expr_parser.hpp"

using namespace dzid;

TEST(Parser, Potentials) {
  const Potential p = parse_potential_text("# A2\nN = 2\nF = 1/2*v1^2*v2 + 1/72*v2^4\n");
  EXPECT_EQ(p.dim, 2);
  EXPECT_EQ(p.F, Rational(1, 2) * DiffPoly::var(1, 0, 2) * DiffPoly::var(2, 0) + Rational(1, 72) * DiffPoly::var(2, 0, 4));
  EXPECT_EQ(parse_potential_text("N=1; F=v1^3/6").F, Rational(1, 6) * DiffPoly::var(1, 0, 3));
}

TEST(Parser, Expressions) {
  EXPECT_EQ(parse_polynomial("-(v1 - 2)^2", 1), -(DiffPoly::var(1, 0) - 2).pow(2));
  EXPECT_EQ(parse_polynomial("2*v1*v2 - v2*v1", 2), DiffPoly::var(1, 0) * DiffPoly::var(2, 0));
  EXPECT_EQ(parse_polynomial("3/4", 1), DiffPoly(Rational(3, 4)));
  EXPECT_EQ(parse_polynomial("v1^0", 1), DiffPoly(1));
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_potential_text("N = 2\nF = v1 + * v2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
  EXPECT_THROW(parse_polynomial("v3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("v1/v2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("v1/0", 2), ParseError);
  EXPECT_THROW(parse_polynomial("v1^-1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("(v1", 2), ParseError);
  EXPECT_THROW(parse_potential_text("N = 0\nF = 1"), ParseError);
  EXPECT_THROW(parse_potential_text("N = 1\nN = 1\nF = v1"), ParseError);
  EXPECT_THROW(parse_potential_text("M = 1"), ParseError);
  EXPECT_THROW(parse_potential_text("N = 1"), ParseError);
}
