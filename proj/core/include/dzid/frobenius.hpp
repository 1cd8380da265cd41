#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dzid/diffpoly.hpp"
#include "dzid/expr_parser.hpp"
#include "dzid/linalg.hpp"

namespace dzid {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WdvvResult {
  bool pass = true;
  /// (alpha, beta, gamma, delta), 1-based, of the first asymmetric component.
  std::array<int, 4> witness{};
};

/// Polynomial Frobenius potential with constant, invertible metric
/// eta_{ab} = d1 da db F and associative structure constants. Immutable after
/// construction; all indices are 1-based.
class FrobeniusModel {
 public:
  /// Validates eta and WDVV; throws ModelError ("eta not constant",
  /// "eta singular", "WDVV violated at ...").
  static FrobeniusModel from_potential(const Potential& p);
  static FrobeniusModel parse(std::string_view text);
  static FrobeniusModel from_file(const std::filesystem::path& file);

  static FrobeniusModel point();
  static FrobeniusModel a2();
  static FrobeniusModel a3();

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const DiffPoly& potential() const { return F_; }
  [[nodiscard]] const Rational& eta(int a, int b) const { return eta_[a - 1][b - 1]; }
  [[nodiscard]] const Rational& eta_inv(int a, int b) const { return eta_inv_[a - 1][b - 1]; }
  /// c_{abc} = da db dc F
  [[nodiscard]] const DiffPoly& c(int a, int b, int g) const { return c_low_[idx(a, b, g)]; }
  /// c^g_{ab} = eta^{g m} c_{m a b}
  [[nodiscard]] const DiffPoly& c_up(int g, int a, int b) const { return c_up_[idx(g, a, b)]; }

 private:
  friend WdvvResult wdvv_check(const Potential& p);
  static FrobeniusModel build_unchecked(const Potential& p);

  [[nodiscard]] std::size_t idx(int a, int b, int g) const {
    return (static_cast<std::size_t>(a - 1) * dim_ + (b - 1)) * dim_ + (g - 1);
  }

  int dim_ = 0;
  DiffPoly F_;
  Matrix<Rational> eta_, eta_inv_;
  std::vector<DiffPoly> c_low_, c_up_;
};

/// Associativity sum_m c_{abm} eta^{mn} c_{ncd} symmetric under b <-> c.
/// Requires a constant invertible eta; throws ModelError otherwise.
WdvvResult wdvv_check(const Potential& p);
WdvvResult wdvv_check(const FrobeniusModel& m);

}  // namespace dzid
