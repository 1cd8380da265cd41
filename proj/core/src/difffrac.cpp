#include "dzid/difffrac.hpp"

namespace dzid {

DiffFrac::DiffFrac(DiffPoly num, DiffPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("DiffFrac: zero denominator");
}

DiffFrac operator+(const DiffFrac& a, const DiffFrac& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

DiffFrac operator-(const DiffFrac& a, const DiffFrac& b) { return a + (-b); }

DiffFrac operator*(const DiffFrac& a, const DiffFrac& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

DiffFrac operator/(const DiffFrac& a, const DiffFrac& b) {
  if (b.num_.is_zero()) throw std::domain_error("DiffFrac: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const DiffFrac& a, const DiffFrac& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

DiffFrac DiffFrac::dx() const {
  if (den_.is_constant()) return {num_.dx(), den_};
  return {num_.dx() * den_ - num_ * den_.dx(), den_ * den_};
}

DiffFrac DiffFrac::partial(JetVar v) const {
  if (den_.is_constant()) return {num_.partial(v), den_};
  return {num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_};
}

Rational DiffFrac::eval_at(const Assignment& at) const {
  const Rational d = den_.eval_at(at);
  if (d.is_zero()) throw SingularEvaluation("singular evaluation: denominator vanishes");
  return num_.eval_at(at) / d;
}

bool DiffFrac::as_poly(DiffPoly& out) const {
  if (den_.size() != 1) return false;
  const auto& [m, c] = *den_.terms().begin();
  std::vector<Monomial::Factor> inv;
  for (const auto& [v, e] : m.factors()) {
    if (v.order != 1) return false;
    inv.emplace_back(v, -e);
  }
  out = num_ * DiffPoly(Monomial(std::move(inv)), c.inverse());
  return true;
}

std::string DiffFrac::str() const {
  if (den_ == DiffPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace dzid
