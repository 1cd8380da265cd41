#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dzid/kdv_loop.hpp"
#include "dzid/linalg.hpp"
#include "dzid/operators.hpp"

namespace dzid {

/// Rows and columns indexed 1..N through at(row, col); entries M^row_col.
struct MgMatrix {
  int genus = 1;
  Matrix<DiffPoly> m;
  [[nodiscard]] const DiffPoly& at(int row, int col) const { return m[row - 1][col - 1]; }
};

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  DiffFrac lhs;
  DiffFrac rhs;
  bool equal = false;
  std::string witness;  // first differing monomial, empty when equal

  [[nodiscard]] std::string text() const;
  /// {"name", "params", "equal", "witness", "lhs", "rhs"}
  [[nodiscard]] std::string json() const;
};

/// The genus-g free energy on jets: the KdV solution for N = 1, and
/// (1/24) log det(c_{abg} v^{g,1}) at genus one for any N.
JetFunction free_energy(const FrobeniusModel& model, int g);

/// <<tau_{a,p} tau_{b,q} tau^c_0>>
DiffPoly three_point_up(Genus0& g0, Insertion a, Insertion b, int c);

MgMatrix mg_matrix(Genus0& g0, int g);

/// Common x-degree of all terms, or nullopt when inhomogeneous.
std::optional<int> homogeneous_dx_degree(const DiffFrac& f);

IdentityReport compare(std::string name, std::vector<std::pair<std::string, std::string>> params, DiffFrac lhs,
                       DiffFrac rhs);

/// Tree operator O_{{alpha_i, k_i}} on F_g against |Aut mu| C_{g;mu} times the
/// chain of three-point functions contracted with M[g].
IdentityReport check_universal(OperatorEngine& ops, int g, const Partition& mu, const std::vector<int>& alphas);
IdentityReport check_genus1(OperatorEngine& ops, int alpha, int p);
IdentityReport check_aop_single(OperatorEngine& ops, int g, int alpha, int p);
IdentityReport check_a21(OperatorEngine& ops, int alpha1, int p1, int alpha2, int p2);

}  // namespace dzid
