#include "dzid/kdv_loop.hpp"

#include <algorithm>
#include <deque>

#include "dzid/linalg.hpp"

namespace dzid {

namespace {

void partitions_into(int total, int parts, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  const int hi = std::min(max_part, total - 2 * (parts - 1));
  for (int p = hi; p >= 2; --p) {
    if (p * parts < total) break;
    prefix.push_back(p);
    partitions_into(total - p, parts - 1, p, prefix, out);
    prefix.pop_back();
  }
}

const LoopSeries& loop_kernel(int r) {
  static std::mutex mutex;
  static std::deque<LoopSeries> cache;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= r) {
    const int n = static_cast<int>(cache.size());
    LoopSeries k = LoopSeries::power(2);
    for (int i = 0; i < n; ++i) k = loop_dx(k);
    for (int j = 1; j <= n; ++j)
      k += DiffPoly(Rational(binomial(n, j))) *
           (half_power_derivative(j - 1) * half_power_derivative(n - j + 1));
    cache.push_back(std::move(k));
  }
  return cache[r];
}

}  // namespace

std::vector<Partition> enumerate_partitions(int g, int n) {
  std::vector<Partition> out;
  const int total = 3 * g - 3 + n;
  if (n < 1 || 2 * n > total) return out;
  Partition prefix;
  partitions_into(total, n, total, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> all_partitions(int g) {
  if (g == 1) return {{1}};
  std::vector<Partition> out;
  for (int n = 1; n <= 3 * g - 3; ++n) {
    auto part = enumerate_partitions(g, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt aut_order(const Partition& mu) {
  BigInt r = 1;
  std::map<int, unsigned> mult;
  for (int p : mu) ++mult[p];
  for (const auto& [p, m] : mult) r *= factorial(m);
  return r;
}

DiffPoly partition_monomial(int g, const Partition& mu) {
  std::vector<Monomial::Factor> fs;
  for (int p : mu) fs.emplace_back(JetVar{1, p}, 1);
  fs.emplace_back(JetVar{1, 1}, -(g + static_cast<int>(mu.size()) - 1));
  return DiffPoly(Monomial(std::move(fs)), Rational(1));
}

Rational KdVFreeEnergy::coefficient(const Partition& mu) const {
  auto it = coeffs.find(mu);
  return it == coeffs.end() ? Rational(0) : it->second;
}

DiffPoly KdVFreeEnergy::realize() const {
  if (genus == 1) throw std::logic_error("genus-one free energy is logarithmic; use its derivatives");
  DiffPoly out;
  for (const auto& [mu, c] : coeffs) out += c * partition_monomial(genus, mu);
  return out;
}

DiffPoly KdVFreeEnergy::partial(int r) const {
  if (genus == 1) return r == 1 ? DiffPoly::var(1, 1, -1) * coefficient({1}) : DiffPoly();
  return realize().partial(JetVar{1, r});
}

DiffPoly KdVFreeEnergy::partial2(int k, int l) const {
  if (genus == 1) return (k == 1 && l == 1) ? DiffPoly::var(1, 1, -2) * (-coefficient({1})) : DiffPoly();
  return realize().partial(JetVar{1, k}).partial(JetVar{1, l});
}

LoopSeries loop_lhs(const std::vector<DiffPoly>& gradient) {
  LoopSeries out;
  for (std::size_t r = 0; r < gradient.size(); ++r)
    if (!gradient[r].is_zero()) out += gradient[r] * loop_kernel(static_cast<int>(r));
  return out;
}

LoopSeries loop_rhs(int g, const std::vector<KdVFreeEnergy>& lower) {
  if (static_cast<int>(lower.size()) < g - 1) throw std::invalid_argument("loop_rhs: lower genera missing");
  LoopSeries out;
  if (g >= 2) {
    const int top = 3 * (g - 1) - 2;
    std::vector<std::vector<DiffPoly>> grads(g);
    for (int m = 1; m < g; ++m)
      for (int r = 0; r <= 3 * m - 2; ++r) grads[m].push_back(lower[m - 1].partial(r));
    const KdVFreeEnergy& prev = lower[g - 2];
    for (int k = 0; k <= top; ++k)
      for (int l = 0; l <= top; ++l) {
        DiffPoly s = prev.partial2(k, l);
        for (int m = 1; m < g; ++m) {
          const int o = g - m;
          if (k <= 3 * m - 2 && l <= 3 * o - 2) s += grads[m][k] * grads[o][l];
        }
        if (s.is_zero()) continue;
        out += (s * Rational(1, 2)) * (half_power_derivative(k + 1) * half_power_derivative(l + 1));
      }
    LoopSeries base = LoopSeries::power(6, DiffPoly::var(1, 1));
    for (int k = 0; k <= top; ++k) {
      base = loop_dx(base);
      const DiffPoly d = prev.partial(k);
      if (!d.is_zero()) out += (d * Rational(1, 8)) * base;
    }
  } else {
    out = LoopSeries::power(4, DiffPoly(Rational(-1, 16)));
  }
  return out;
}

KdVFreeEnergy solve_kdv_loop(int g, const std::vector<KdVFreeEnergy>& lower) {
  if (g < 1) throw std::invalid_argument("solve_kdv_loop: genus must be >= 1");
  if (g == 1) return KdVFreeEnergy{1, {{{1}, Rational(1, 24)}}};
  if (static_cast<int>(lower.size()) < g - 1) throw std::invalid_argument("solve_kdv_loop: lower genera missing");

  const auto parts = all_partitions(g);
  const int top = 3 * g - 2;
  std::map<std::pair<int, Monomial>, std::size_t> rows;
  std::vector<std::map<std::size_t, Rational>> columns(parts.size());
  auto row_of = [&](int e, const Monomial& m) {
    return rows.try_emplace({e, m}, rows.size()).first->second;
  };
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const DiffPoly f = partition_monomial(g, parts[j]);
    std::vector<DiffPoly> grad;
    for (int r = 0; r <= top; ++r) grad.push_back(f.partial(JetVar{1, r}));
    const LoopSeries lhs = loop_lhs(grad);
    for (const auto& [e, c] : lhs.terms())
      for (const auto& [m, x] : c.terms()) columns[j][row_of(e, m)] = x;
  }
  std::map<std::size_t, Rational> rhs_entries;
  const LoopSeries rhs = loop_rhs(g, lower);
  for (const auto& [e, c] : rhs.terms())
    for (const auto& [m, x] : c.terms()) rhs_entries[row_of(e, m)] = x;

  Matrix<Rational> a(rows.size(), std::vector<Rational>(parts.size()));
  std::vector<Rational> b(rows.size());
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (const auto& [i, x] : columns[j]) a[i][j] = x;
  for (const auto& [i, x] : rhs_entries) b[i] = x;

  const LinearSolution sol = solve_linear_exact(a, b);
  if (sol.status == SolveStatus::inconsistent) throw LoopSystemError("inconsistent loop system at genus " + std::to_string(g));
  if (sol.status == SolveStatus::underdetermined) throw LoopSystemError("underdetermined loop system at genus " + std::to_string(g));

  KdVFreeEnergy out{g, {}};
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!sol.solution[j].is_zero()) out.coeffs.emplace(parts[j], sol.solution[j]);
  return out;
}

RelationSides relation_av_sides(int g, const std::vector<KdVFreeEnergy>& table) {
  if (g < 2) throw std::invalid_argument("relation_av: genus must be >= 2");
  if (static_cast<int>(table.size()) < g) throw std::invalid_argument("relation_av: table must hold genera 1..g");
  const int n = 3 * g - 2;
  Rational factor = -Rational(factorial(n));
  for (int k = 1; k <= n; ++k) factor += Rational(binomial(n, k)) * leading_constant(k - 1, 3 * g - 1 - k);
  RelationSides sides;
  sides.lhs = factor * table[g - 1].partial(n);
  for (int m = 1; m < g; ++m)
    sides.rhs += Rational(1, 2) * leading_constant(3 * m - 1, 3 * g - 3 * m - 1) *
                 (table[m - 1].partial(3 * m - 2) * table[g - m - 1].partial(3 * g - 3 * m - 2));
  for (int k = 1; k <= 3 * g - 5; ++k)
    sides.rhs += Rational(1, 2) * leading_constant(k + 1, 3 * g - 3 - k) * table[g - 2].partial2(k, 3 * g - 4 - k);
  sides.rhs -= Rational(factorial(n), 16) * (DiffPoly::var(1, 1, -1) * table[g - 2].partial(3 * g - 5));
  return sides;
}

bool check_relation_av(int g, const std::vector<KdVFreeEnergy>& table) {
  const auto sides = relation_av_sides(g, table);
  return sides.lhs == sides.rhs;
}

const KdVFreeEnergy& KdVTable::get(int g) {
  if (g < 1) throw std::invalid_argument("KdVTable: genus must be >= 1");
  std::lock_guard lock(mutex_);
  while (static_cast<int>(genera_.size()) < g) {
    std::vector<KdVFreeEnergy> lower(genera_.begin(), genera_.end());
    genera_.push_back(solve_kdv_loop(static_cast<int>(genera_.size()) + 1, lower));
  }
  return genera_[g - 1];
}

std::vector<KdVFreeEnergy> KdVTable::up_to(int g) {
  get(g);
  std::lock_guard lock(mutex_);
  return {genera_.begin(), genera_.begin() + g};
}

KdVTable& shared_kdv_table() {
  static KdVTable table;
  return table;
}

}  // namespace dzid
