#include "dzid/diffpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dzid {

namespace {

void check_factor(const Monomial::Factor& f) {
  if (f.first.alpha < 1 || f.first.order < 0) throw std::invalid_argument("jet variable out of range");
  if (f.second < 0 && f.first.order != 1)
    throw std::invalid_argument("only first jets v[a,1] may appear with negative exponent");
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(f);
    if (factors_.back().second == 0) factors_.pop_back();
  }
  for (const auto& f : factors_) check_factor(f);
}

Monomial Monomial::of(JetVar v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::exponent(JetVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const JetVar& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::dx_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += v.order * e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

DiffPoly::DiffPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

DiffPoly::DiffPoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

DiffPoly DiffPoly::var(int alpha, int order, int exponent) {
  return DiffPoly(Monomial::of(JetVar{alpha, order}, exponent), Rational(1));
}

bool DiffPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational DiffPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) { return *this = *this * o; }

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

DiffPoly DiffPoly::dx() const {
  DiffPoly out;
  for (const auto& [m, c] : terms_) {
    const auto& fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& [v, e] = fs[i];
      std::vector<Monomial::Factor> rest = fs;
      rest[i].second -= 1;
      rest.emplace_back(JetVar{v.alpha, v.order + 1}, 1);
      out.add_term(Monomial(std::move(rest)), c * Rational(e));
    }
  }
  return out;
}

DiffPoly DiffPoly::dx(unsigned times) const {
  DiffPoly out = *this;
  for (unsigned i = 0; i < times; ++i) out = out.dx();
  return out;
}

DiffPoly DiffPoly::partial(JetVar v) const {
  DiffPoly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto& f : fs)
      if (f.first == v) f.second -= 1;
    out.add_term(Monomial(std::move(fs)), c * Rational(e));
  }
  return out;
}

Rational DiffPoly::eval_at(const Assignment& at) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) throw std::invalid_argument("eval_at: unassigned variable " + jet_text(v));
      if (e < 0 && it->second.is_zero()) throw SingularEvaluation("singular evaluation at " + jet_text(v));
      Rational base = e < 0 ? it->second.inverse() : it->second;
      for (int k = 0; k < (e < 0 ? -e : e); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::set<int> DiffPoly::dx_degrees() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.dx_degree());
  return out;
}

std::set<JetVar> DiffPoly::variables() const {
  std::set<JetVar> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

std::string jet_text(JetVar v) { return "v[" + std::to_string(v.alpha) + "," + std::to_string(v.order) + "]"; }

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational a = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool need_sep = false;
    if (!a.is_one() || m.is_one()) {
      os << a;
      need_sep = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_sep) os << " * ";
      os << jet_text(v);
      if (e != 1) os << "^" << e;
      need_sep = true;
    }
  }
  return os.str();
}

std::string DiffPoly::latex() const {
  if (terms_.empty()) return "0";
  auto jet = [](JetVar v, int e) {
    std::string base = "v^{" + std::to_string(v.alpha) + "," + std::to_string(v.order) + "}";
    return e == 1 ? base : "(" + base + ")^{" + std::to_string(e) + "}";
  };
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (c.sign() < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string num, den;
    const BigInt p = abs(c.numerator()), q = c.denominator();
    if (p != 1) num = p.get_str();
    if (q != 1) den = q.get_str();
    for (const auto& [v, e] : m.factors()) {
      if (e > 0)
        num += jet(v, e);
      else
        den += jet(v, -e);
    }
    if (num.empty()) num = "1";
    out += den.empty() ? num : "\\frac{" + num + "}{" + den + "}";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << p.str(); }

}  // namespace dzid
