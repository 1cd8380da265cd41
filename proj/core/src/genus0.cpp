#include "dzid/genus0.hpp"

#include <algorithm>

namespace dzid {

namespace {

int polynomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m.factors()) d += e;
  return d;
}

}  // namespace

const DiffPoly& Genus0::theta(int alpha, int p) {
  const auto key = std::make_pair(alpha, p);
  if (auto it = theta_.find(key); it != theta_.end()) return it->second;
  const int n = dim();
  DiffPoly result;
  if (p == 0) {
    for (int mu = 1; mu <= n; ++mu)
      if (!model_.eta(alpha, mu).is_zero()) result += model_.eta(alpha, mu) * DiffPoly::var(mu, 0);
  } else {
    std::vector<DiffPoly> grad;
    for (int g = 1; g <= n; ++g) grad.push_back(theta(alpha, p - 1).partial(JetVar{g, 0}));
    std::vector<std::vector<DiffPoly>> hess(n, std::vector<DiffPoly>(n));
    DiffPoly euler;
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = 1; nu <= n; ++nu) {
        DiffPoly h;
        for (int g = 1; g <= n; ++g)
          if (!grad[g - 1].is_zero()) h += model_.c_up(g, mu, nu) * grad[g - 1];
        euler += DiffPoly::var(mu, 0) * DiffPoly::var(nu, 0) * h;
        hess[mu - 1][nu - 1] = std::move(h);
      }
    // A degree-d homogeneous f satisfies v^mu v^nu d_mu d_nu f = d(d-1) f.
    for (const auto& [m, c] : euler.terms()) {
      const int d = polynomial_degree(m);
      result.add_term(m, c / Rational(d * (d - 1)));
    }
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = 1; nu <= n; ++nu)
        if (result.partial(JetVar{mu, 0}).partial(JetVar{nu, 0}) != hess[mu - 1][nu - 1])
          throw ModelError("theta recursion not integrable at (" + std::to_string(alpha) + "," + std::to_string(p) + ")");
  }
  return theta_.emplace(key, std::move(result)).first->second;
}

const DiffPoly& Genus0::omega(int a, int p, int b, int q) {
  const auto key = std::make_tuple(a, p, b, q);
  if (auto it = omega_.find(key); it != omega_.end()) return it->second;
  DiffPoly result;
  if (p == 0) {
    result = theta(b, q + 1).partial(JetVar{a, 0});
  } else {
    const int n = dim();
    for (int mu = 1; mu <= n; ++mu) {
      const DiffPoly left = theta(a, p).partial(JetVar{mu, 0});
      if (left.is_zero()) continue;
      for (int nu = 1; nu <= n; ++nu)
        if (!model_.eta_inv(mu, nu).is_zero())
          result += model_.eta_inv(mu, nu) * (left * theta(b, q + 1).partial(JetVar{nu, 0}));
    }
    result -= omega(a, p - 1, b, q + 1);
  }
  return omega_.emplace(key, std::move(result)).first->second;
}

DiffPoly Genus0::two_point_up(int g, int b, int k) {
  DiffPoly out;
  for (int mu = 1; mu <= dim(); ++mu)
    if (!model_.eta_inv(g, mu).is_zero()) out += model_.eta_inv(g, mu) * omega(mu, 0, b, k);
  return out;
}

const DiffPoly& Genus0::flow_coefficient(int beta, int q, int gamma, int s) {
  const auto key = std::make_tuple(beta, q, gamma, s);
  if (auto it = flow_.find(key); it != flow_.end()) return it->second;
  DiffPoly result;
  if (s == 0) {
    DiffPoly h;
    for (int mu = 1; mu <= dim(); ++mu)
      if (!model_.eta_inv(gamma, mu).is_zero())
        h += model_.eta_inv(gamma, mu) * theta(beta, q + 1).partial(JetVar{mu, 0});
    result = h.dx();
  } else {
    result = flow_coefficient(beta, q, gamma, s - 1).dx();
  }
  return flow_.emplace(key, std::move(result)).first->second;
}

DiffPoly Genus0::apply_flow(int beta, int q, const DiffPoly& f) {
  DiffPoly out;
  for (const JetVar& v : f.variables()) out += flow_coefficient(beta, q, v.alpha, v.order) * f.partial(v);
  return out;
}

const DiffPoly& Genus0::correlator(std::vector<Insertion> insertions) {
  if (insertions.empty()) throw std::invalid_argument("correlator needs at least one insertion");
  std::sort(insertions.begin(), insertions.end());
  if (auto it = corr_.find(insertions); it != corr_.end()) return it->second;
  DiffPoly result;
  if (insertions.size() == 1) {
    result = theta(insertions[0].alpha, insertions[0].p + 1);
  } else if (insertions.size() == 2) {
    result = omega(insertions[0].alpha, insertions[0].p, insertions[1].alpha, insertions[1].p);
  } else if (insertions.front() == Insertion{1, 0}) {
    // the unit flow is dx
    result = correlator(std::vector<Insertion>(insertions.begin() + 1, insertions.end())).dx();
  } else {
    const Insertion last = insertions.back();
    std::vector<Insertion> rest(insertions.begin(), insertions.end() - 1);
    const DiffPoly base = correlator(rest);
    result = apply_flow(last.alpha, last.p, base);
  }
  return corr_.emplace(std::move(insertions), std::move(result)).first->second;
}

}  // namespace dzid
