#include "dzid/loop_series.hpp"

#include <deque>
#include <mutex>

namespace dzid {

LoopSeries::LoopSeries(Terms terms) {
  for (auto& [e, c] : terms) add(e, c);
}

LoopSeries LoopSeries::power(int half_exponent, const DiffPoly& c) {
  LoopSeries s;
  s.add(half_exponent, c);
  return s;
}

DiffPoly LoopSeries::coefficient(int half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? DiffPoly() : it->second;
}

void LoopSeries::add(int e, const DiffPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LoopSeries& LoopSeries::operator+=(const LoopSeries& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LoopSeries& LoopSeries::operator-=(const LoopSeries& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LoopSeries operator*(const LoopSeries& a, const LoopSeries& b) {
  LoopSeries out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

LoopSeries operator*(const DiffPoly& c, const LoopSeries& s) {
  LoopSeries out;
  if (c.is_zero()) return out;
  for (const auto& [e, x] : s.terms_) out.add(e, c * x);
  return out;
}

int LoopSeries::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading_exponent of zero series");
  return terms_.rbegin()->first;
}

LoopSeries loop_dx(const LoopSeries& s) {
  LoopSeries::Terms out;
  const DiffPoly vx = DiffPoly::var(1, 1);
  for (const auto& [e, c] : s.terms()) {
    out[e] += c.dx();
    if (e != 0) out[e + 2] += c * vx * Rational(-e, 2);
  }
  return LoopSeries(std::move(out));
}

const LoopSeries& half_power_derivative(int n) {
  static std::mutex mutex;
  static std::deque<LoopSeries> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.push_back(LoopSeries::power(1));
  while (static_cast<int>(cache.size()) <= n) cache.push_back(loop_dx(cache.back()));
  return cache[n];
}

Rational leading_constant(int n1, int n2) {
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n1 + n2);
  return -Rational(double_factorial(2L * n1 - 1) * double_factorial(2L * n2 - 1), two_pow);
}

}  // namespace dzid
