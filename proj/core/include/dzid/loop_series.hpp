#pragma once

#include <map>

#include "dzid/diffpoly.hpp"

namespace dzid {

/// Finite sum  sum_e c_e * (v^1 - lambda)^(-e/2)  with DiffPoly coefficients.
/// lambda itself never appears; only the half-integer exponent is tracked.
class LoopSeries {
 public:
  using Terms = std::map<int, DiffPoly>;

  LoopSeries() = default;
  explicit LoopSeries(Terms terms);
  /// c * (v^1 - lambda)^(-half_exponent/2)
  static LoopSeries power(int half_exponent, const DiffPoly& c = DiffPoly(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] DiffPoly coefficient(int half_exponent) const;

  LoopSeries& operator+=(const LoopSeries& o);
  LoopSeries& operator-=(const LoopSeries& o);
  friend LoopSeries operator+(LoopSeries a, const LoopSeries& b) { return a += b; }
  friend LoopSeries operator-(LoopSeries a, const LoopSeries& b) { return a -= b; }
  friend LoopSeries operator*(const LoopSeries& a, const LoopSeries& b);
  friend LoopSeries operator*(const DiffPoly& c, const LoopSeries& s);
  friend bool operator==(const LoopSeries&, const LoopSeries&) = default;

  /// Highest half-exponent present; throws on the zero series.
  [[nodiscard]] int leading_exponent() const;

 private:
  void add(int e, const DiffPoly& c);
  Terms terms_;
};

/// x-derivative: dx on coefficients plus
/// dx (v^1-lambda)^(-e/2) = (-e/2) v^{1,1} (v^1-lambda)^(-(e+2)/2).
LoopSeries loop_dx(const LoopSeries& s);

/// dx^n (v^1 - lambda)^(-1/2), cached.
const LoopSeries& half_power_derivative(int n);

/// -(2 n1 - 1)!! (2 n2 - 1)!! / 2^(n1 + n2)
Rational leading_constant(int n1, int n2);

}  // namespace dzid
