#pragma once

#include "dzid/diffpoly.hpp"

namespace dzid {

/// num/den with den nonzero. No cancellation is attempted; equality is
/// decided by cross-multiplication.
class DiffFrac {
 public:
  DiffFrac() : num_(0), den_(1) {}
  DiffFrac(DiffPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  DiffFrac(DiffPoly num, DiffPoly den);

  [[nodiscard]] const DiffPoly& num() const { return num_; }
  [[nodiscard]] const DiffPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  friend DiffFrac operator+(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator-(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator*(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator/(const DiffFrac& a, const DiffFrac& b);
  DiffFrac operator-() const { return {-num_, den_}; }
  DiffFrac& operator+=(const DiffFrac& o) { return *this = *this + o; }
  DiffFrac& operator-=(const DiffFrac& o) { return *this = *this - o; }
  DiffFrac& operator*=(const DiffFrac& o) { return *this = *this * o; }
  friend bool operator==(const DiffFrac& a, const DiffFrac& b);

  [[nodiscard]] DiffFrac dx() const;
  [[nodiscard]] DiffFrac partial(JetVar v) const;
  [[nodiscard]] Rational eval_at(const Assignment& at) const;
  /// Polynomial numerator over a denominator that is a single monomial is
  /// rewritten as a Laurent DiffPoly when the monomial is invertible.
  [[nodiscard]] bool as_poly(DiffPoly& out) const;

  [[nodiscard]] std::string str() const;

 private:
  DiffPoly num_;
  DiffPoly den_;
};

}  // namespace dzid
