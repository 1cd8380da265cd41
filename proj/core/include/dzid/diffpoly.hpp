#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dzid/rational.hpp"

namespace dzid {

/// The jet variable v^{alpha,order}; alpha is 1-based.
struct JetVar {
  int alpha = 1;
  int order = 0;
  friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

class SingularEvaluation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Product of jet variables with nonzero integer exponents, kept sorted by
/// variable. Only first jets v^{alpha,1} may carry negative exponents.
class Monomial {
 public:
  using Factor = std::pair<JetVar, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(JetVar v, int exponent = 1);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] int exponent(JetVar v) const;
  [[nodiscard]] int dx_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

using Assignment = std::map<JetVar, Rational>;

class DiffPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(int c) : DiffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  DiffPoly(const Monomial& m, const Rational& c);

  static DiffPoly var(int alpha, int order, int exponent = 1);
  static DiffPoly var(JetVar v, int exponent = 1) { return var(v.alpha, v.order, exponent); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  DiffPoly operator-() const;
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);
  [[nodiscard]] DiffPoly pow(unsigned e) const;

  [[nodiscard]] DiffPoly dx() const;
  [[nodiscard]] DiffPoly dx(unsigned times) const;
  [[nodiscard]] DiffPoly partial(JetVar v) const;
  [[nodiscard]] Rational eval_at(const Assignment& at) const;
  [[nodiscard]] std::set<int> dx_degrees() const;
  [[nodiscard]] std::set<JetVar> variables() const;

  /// "c * v[a,s]^e * ..." terms joined by " + " / " - ".
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::string latex() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

std::string jet_text(JetVar v);

}  // namespace dzid
