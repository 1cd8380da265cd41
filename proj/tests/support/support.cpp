#include "support.hpp"

#include <functional>

namespace dzid::testkit {

namespace {

/// <<tau_{a,p} ... tau_{1,0}^k>> with the listed insertions plus k unit insertions.
DiffPoly corr(Genus0& g0, std::vector<Insertion> ins, int units) {
  for (int i = 0; i < units; ++i) ins.push_back({1, 0});
  return g0.correlator(ins);
}

/// Raises the index of the first insertion slot, which carries alpha = nu.
template <class F>
DiffPoly raise(Genus0& g0, int upper, F&& with_lower) {
  DiffPoly out;
  for (int nu = 1; nu <= g0.dim(); ++nu) {
    const Rational& e = g0.model().eta_inv(upper, nu);
    if (!e.is_zero()) out += e * with_lower(nu);
  }
  return out;
}

}  // namespace

Rational Rng::rational(int max_num, int max_den) {
  int num = 0;
  while (num == 0) num = uniform(-max_num, max_num);
  return Rational(num, uniform(1, max_den));
}

DiffPoly random_diffpoly(Rng& rng, int dim, int max_order, int terms, int max_degree) {
  DiffPoly out;
  for (int t = 0; t < terms; ++t) {
    DiffPoly mono(rng.rational(5, 4));
    const int deg = rng.uniform(1, max_degree);
    for (int i = 0; i < deg; ++i) mono *= DiffPoly::var(rng.jet(dim, max_order));
    out += mono;
  }
  return out;
}

std::vector<std::vector<int>> tuples(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, lo);
  if (n == 0) return {{}};
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi) cur[i--] = lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> labeled_splits(int n, int m) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& owner : tuples(n, 0, m - 1)) {
    std::vector<std::vector<int>> parts(m);
    for (int i = 0; i < n; ++i) parts[owner[i]].push_back(i);
    out.push_back(std::move(parts));
  }
  return out;
}

DiffPoly ex_chain(Genus0& g0, int alpha, int a, int beta) {
  const int n = g0.dim();
  // row vector indexed by g_j, starting at g_0 = beta
  std::vector<DiffPoly> row(n);
  row[beta - 1] = DiffPoly(1);
  for (int j = 0; j <= a; ++j) {
    std::vector<DiffPoly> next(n);
    for (int g = 1; g <= n; ++g) {
      if (row[g - 1].is_zero()) continue;
      for (int d = 1; d <= n; ++d) {
        if (j == a && d != alpha) continue;
        const DiffPoly step = raise(g0, g, [&](int nu) { return g0.omega(nu, 0, d, 0).dx(); });
        if (!step.is_zero()) next[d - 1] += row[g - 1] * step;
      }
    }
    row = std::move(next);
  }
  return row[alpha - 1];
}

DiffPoly a_closed_form(Genus0& g0, int m, int alpha, int p, int beta, int r) {
  const int n = g0.dim();
  DiffPoly total;
  std::vector<int> j(m + 2, 0);  // j[1..m+1]
  std::function<void(int)> rec = [&](int k) {
    if (k <= m + 1) {
      const int hi = k == 1 ? r - 1 : j[k - 1] - 1;
      for (int x = 0; x <= hi; ++x) {
        j[k] = x;
        rec(k + 1);
      }
      return;
    }
    Rational weight = Rational(binomial(r, j[1] + 1));
    for (int q = 1; q <= m; ++q) weight *= Rational(binomial(j[q], j[q + 1] + 1));
    // left factor, lower index g_1
    std::vector<DiffPoly> vec(n);
    for (int g = 1; g <= n; ++g) vec[g - 1] = corr(g0, {{alpha, p - m - 1}, {g, 0}}, j[m + 1] + 1);
    for (int l = 1; l <= m; ++l) {
      const int units = j[m + 1 - l] - j[m + 2 - l];
      std::vector<DiffPoly> next(n);
      for (int g = 1; g <= n; ++g) {
        if (vec[g - 1].is_zero()) continue;
        for (int d = 1; d <= n; ++d)
          next[d - 1] += vec[g - 1] * raise(g0, g, [&](int nu) { return corr(g0, {{nu, 0}, {d, 0}}, units); });
      }
      vec = std::move(next);
    }
    DiffPoly sum;
    for (int g = 1; g <= n; ++g) {
      if (vec[g - 1].is_zero()) continue;
      sum += vec[g - 1] * raise(g0, g, [&](int nu) {
        return raise(g0, beta, [&](int mu) { return corr(g0, {{nu, 0}, {mu, 0}}, r - j[1]); });
      });
    }
    total += weight * sum;
  };
  rec(1);
  return total;
}

DiffPoly jet_monomial(const std::vector<int>& betas, const std::vector<int>& bs) {
  DiffPoly out(1);
  for (std::size_t i = 0; i < betas.size(); ++i) out *= DiffPoly::var(betas[i], bs[i]);
  return out;
}

}  // namespace dzid::testkit
