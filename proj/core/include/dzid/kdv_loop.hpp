#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "dzid/diffpoly.hpp"
#include "dzid/loop_series.hpp"

namespace dzid {

/// Parts in weakly decreasing order.
using Partition = std::vector<int>;

/// Partitions of 3g-3+n into exactly n parts, each >= 2.
std::vector<Partition> enumerate_partitions(int g, int n);
/// Union over n of enumerate_partitions(g, n); for g = 1 just {(1)}.
std::vector<Partition> all_partitions(int g);
/// Product of factorials of part multiplicities.
BigInt aut_order(const Partition& mu);

class LoopSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Genus-g KdV free energy. For g >= 2 it is  sum_mu C_mu v^{1,(mu)} / (v^{1,1})^{g+l(mu)-1};
/// genus one is the logarithm (1/24) log v^{1,1}, stored as C_{(1)} = 1/24 and
/// only accessed through its derivatives.
struct KdVFreeEnergy {
  int genus = 1;
  std::map<Partition, Rational> coeffs;

  [[nodiscard]] Rational coefficient(const Partition& mu) const;
  /// Realized DiffPoly; throws for genus one.
  [[nodiscard]] DiffPoly realize() const;
  [[nodiscard]] DiffPoly partial(int r) const;
  [[nodiscard]] DiffPoly partial2(int k, int l) const;
  /// Jet order bound: derivatives in v^{1,r} vanish for r > max_order().
  [[nodiscard]] int max_order() const { return 3 * genus - 2; }
};

/// The monomial v^{1,(mu)} / (v^{1,1})^{g+l(mu)-1}.
DiffPoly partition_monomial(int g, const Partition& mu);

/// Left-hand side of the KdV loop equation applied to a function f of the
/// jets v^{1,r} (given through its gradient up to order max_order).
LoopSeries loop_lhs(const std::vector<DiffPoly>& gradient);
/// Right-hand side of the genus-g loop equation; lower[m-1] is F_m.
LoopSeries loop_rhs(int g, const std::vector<KdVFreeEnergy>& lower);

/// Solves the genus-g loop equation against the ansatz. lower must hold F_1..F_{g-1}.
KdVFreeEnergy solve_kdv_loop(int g, const std::vector<KdVFreeEnergy>& lower);

/// Both sides of the leading-term relation between F_g and lower genera.
struct RelationSides {
  DiffPoly lhs;
  DiffPoly rhs;
};
RelationSides relation_av_sides(int g, const std::vector<KdVFreeEnergy>& table);
bool check_relation_av(int g, const std::vector<KdVFreeEnergy>& table);

/// Lazily solved, internally synchronized table of F_1, F_2, ...
class KdVTable {
 public:
  const KdVFreeEnergy& get(int g);
  std::vector<KdVFreeEnergy> up_to(int g);

 private:
  std::mutex mutex_;
  std::deque<KdVFreeEnergy> genera_;
};

KdVTable& shared_kdv_table();

}  // namespace dzid
