#pragma once

#include <map>
#include <vector>

#include "dzid/difffrac.hpp"
#include "dzid/genus0.hpp"
#include "dzid/trees.hpp"

namespace dzid {

/// sum_{(mu,r)} H^{mu,r}(v) d/dt^{mu,r}, keyed by (mu, r).
using TimeField = std::map<Insertion, DiffPoly>;

/// Coefficients of a jet vector field sum xi^{(g,s)} d/dv^{g,s}; absent keys are zero.
using JetField = std::map<JetVar, DiffPoly>;

/// A function on the jet space that operators act on: either a fraction of
/// differential polynomials or scale * log(arg). Only derivatives of the
/// logarithm are ever formed.
class JetFunction {
 public:
  JetFunction(DiffPoly p) : value_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  JetFunction(DiffFrac f) : value_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  static JetFunction log(const Rational& scale, DiffPoly arg);

  [[nodiscard]] bool is_log() const { return is_log_; }
  [[nodiscard]] bool is_zero() const { return !is_log_ && value_.is_zero(); }
  /// Throws for a logarithm.
  [[nodiscard]] const DiffFrac& value() const;
  [[nodiscard]] JetFunction partial(JetVar v) const;
  [[nodiscard]] std::set<JetVar> variables() const;
  [[nodiscard]] std::string str() const;

 private:
  JetFunction() = default;
  DiffFrac value_;
  bool is_log_ = false;
  Rational scale_;
  DiffPoly arg_;
};

/// sum over one jet variable per field of prod xi_i * d^m target / dv...dv;
/// the fields never differentiate each other's coefficients.
DiffFrac normal_ordered_apply(const std::vector<JetField>& fields, const JetFunction& target);
DiffPoly normal_ordered_apply(const std::vector<JetField>& fields, const DiffPoly& target);

/// Applies Eguchi-Xiong, tree and A operators for one model. Holds caches; not
/// thread-safe (one engine per worker, like Genus0).
class OperatorEngine {
 public:
  explicit OperatorEngine(Genus0& genus0) : g0_(genus0) {}

  [[nodiscard]] Genus0& genus0() { return g0_; }
  [[nodiscard]] int dim() const { return g0_.dim(); }

  /// O_{beta,p} in time derivatives.
  const TimeField& ex_field(int beta, int p);
  /// A^m_{alpha,p} via its recursion; requires p >= m + 1.
  TimeField a_field(int m, int alpha, int p);
  /// A^m_{alpha,p} from its defining sum of Eguchi-Xiong fields.
  TimeField a_field_by_definition(int m, int alpha, int p);

  /// Coefficient of d/dv^{g,s} of a time field realized on jets.
  DiffPoly jet_coefficient(const TimeField& field, JetVar v);
  JetField jet_field(const TimeField& field, const std::set<JetVar>& vars);
  DiffFrac apply_field(const TimeField& field, const JetFunction& target);
  DiffPoly apply_field(const TimeField& field, const DiffPoly& target);

  DiffFrac ex_operator_action(int beta, int p, const JetFunction& target);
  DiffPoly ex_operator_action(int beta, int p, const DiffPoly& target);

  /// A^{m_1} o ... o A^{m_l} applied to target (the last factor acts first).
  DiffFrac a_operator_action(const std::vector<int>& ms, const std::vector<Insertion>& ps, const JetFunction& target);
  DiffPoly a_operator_action(const std::vector<int>& ms, const std::vector<Insertion>& ps, const DiffPoly& target);

  /// Time-normal-ordered product of O_{alpha_i,q_i} applied to target: the t
  /// derivatives act jointly on target, never on each other's coefficients.
  DiffFrac ordered_product(const std::vector<Insertion>& fields, const JetFunction& target);

  /// :prod_{h} O_{alpha(h),q(h)}: <<tau_{minus_alpha,0}>>, a genus-zero correlator.
  const DiffPoly& vertex_value(int minus_alpha, std::vector<Insertion> fields);

  /// O_{{alpha_1,a_1;...;alpha_n,a_n}} applied to target.
  DiffFrac tree_operator_action(const std::vector<Insertion>& pairs, const JetFunction& target);
  DiffPoly tree_operator_action(const std::vector<Insertion>& pairs, const DiffPoly& target);

  /// Whether the n-th order operator `apply` kills every function of v alone,
  /// tested on all monomials of degree <= order in v^{1,0}..v^{N,0}.
  template <class Apply>
  bool kills_v_functions(Apply&& apply, int order);

 private:
  /// sum over choices of prod H: sorted extra insertions -> coefficient.
  const std::map<std::vector<Insertion>, DiffPoly>& expansion(std::vector<Insertion> fields);
  /// Jet coefficient on v^{g,s} of the block of time derivatives `fields`.
  const DiffPoly& block_coefficient(const std::vector<Insertion>& sorted_fields, JetVar v);

  Genus0& g0_;
  std::map<Insertion, TimeField> ex_;
  std::map<std::vector<Insertion>, std::map<std::vector<Insertion>, DiffPoly>> expansion_;
  std::map<std::pair<std::vector<Insertion>, JetVar>, DiffPoly> block_;
  std::map<std::pair<int, std::vector<Insertion>>, DiffPoly> vertex_;
  std::map<int, std::vector<RootedTree>> trees_;
};

template <class Apply>
bool OperatorEngine::kills_v_functions(Apply&& apply, int order) {
  const int n = dim();
  std::vector<int> idx;
  bool ok = true;
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (!ok) return;
    if (depth > 0) {
      DiffPoly mono(1);
      for (int a : idx) mono *= DiffPoly::var(a, 0);
      if (!apply(mono).is_zero()) ok = false;
    }
    if (depth == order) return;
    for (int a = start; a <= n; ++a) {
      idx.push_back(a);
      self(self, a, depth + 1);
      idx.pop_back();
    }
  };
  rec(rec, 1, 0);
  return ok;
}

}  // namespace dzid
