#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "dzid/difffrac.hpp"
#include "dzid/frobenius.hpp"

namespace dzid {

/// tau_{alpha,p}
struct Insertion {
  int alpha = 1;
  int p = 0;
  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// Genus-zero data of a model restricted to the jet space of the topological
/// solution: deformed flat coordinates theta, two-point functions Omega,
/// Principal Hierarchy flows and n-point correlators.
///
/// Caches are per instance and unsynchronized: use one Genus0 per thread.
/// The model must outlive the session.
class Genus0 {
 public:
  explicit Genus0(const FrobeniusModel& model) : model_(model) {}
  explicit Genus0(const FrobeniusModel&& model) = delete;

  [[nodiscard]] const FrobeniusModel& model() const { return model_; }
  [[nodiscard]] int dim() const { return model_.dim(); }

  /// theta_{alpha,p}(v) with no constant or linear part for p >= 1.
  const DiffPoly& theta(int alpha, int p);
  /// Omega_{a,p; b,q}(v) = <<tau_{a,p} tau_{b,q}>>.
  const DiffPoly& omega(int a, int p, int b, int q);
  /// <<tau^g_0 tau_{b,k}>> = eta^{g m} Omega_{m,0; b,k}
  DiffPoly two_point_up(int g, int b, int k);

  /// Coefficient of d/dv^{gamma,s} in the flow D_{beta,q}:
  /// dx^{s+1}(eta^{gamma mu} d_mu theta_{beta,q+1}).
  const DiffPoly& flow_coefficient(int beta, int q, int gamma, int s);
  DiffPoly apply_flow(int beta, int q, const DiffPoly& f);

  /// Genus-zero correlator <<tau_{a1,p1} ... tau_{an,pn}>> as a differential
  /// polynomial; symmetric in its arguments.
  const DiffPoly& correlator(std::vector<Insertion> insertions);

 private:
  const FrobeniusModel& model_;
  std::map<std::pair<int, int>, DiffPoly> theta_;
  std::map<std::tuple<int, int, int, int>, DiffPoly> omega_;
  std::map<std::tuple<int, int, int, int>, DiffPoly> flow_;
  std::map<std::vector<Insertion>, DiffPoly> corr_;
};

}  // namespace dzid
