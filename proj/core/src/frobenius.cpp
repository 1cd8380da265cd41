#include "dzid/frobenius.hpp"

#include <fstream>
#include <sstream>

namespace dzid {

namespace {

std::string witness_text(const std::array<int, 4>& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + ")";
}

}  // namespace

FrobeniusModel FrobeniusModel::build_unchecked(const Potential& p) {
  if (p.dim < 1) throw ModelError("dimension must be positive");
  FrobeniusModel m;
  m.dim_ = p.dim;
  m.F_ = p.F;
  const int n = p.dim;
  const auto size = static_cast<std::size_t>(n) * n * n;
  m.c_low_.assign(size, DiffPoly());
  m.c_up_.assign(size, DiffPoly());
  for (int a = 1; a <= n; ++a) {
    const DiffPoly fa = p.F.partial(JetVar{a, 0});
    for (int b = a; b <= n; ++b) {
      const DiffPoly fab = fa.partial(JetVar{b, 0});
      for (int g = b; g <= n; ++g) {
        const DiffPoly fabg = fab.partial(JetVar{g, 0});
        for (auto [x, y, z] : {std::array{a, b, g}, std::array{a, g, b}, std::array{b, a, g},
                               std::array{b, g, a}, std::array{g, a, b}, std::array{g, b, a}})
          m.c_low_[m.idx(x, y, z)] = fabg;
      }
    }
  }
  m.eta_.assign(n, std::vector<Rational>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const DiffPoly& e = m.c(1, a, b);
      if (!e.is_constant()) throw ModelError("eta not constant: d1 d" + std::to_string(a) + " d" + std::to_string(b) + " F = " + e.str());
      m.eta_[a - 1][b - 1] = e.constant_term();
    }
  m.eta_inv_.assign(n, std::vector<Rational>(n));
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> unit(n);
    unit[col] = 1;
    const LinearSolution s = solve_linear_exact(m.eta_, unit);
    if (s.status != SolveStatus::unique) throw ModelError("eta singular");
    for (int row = 0; row < n; ++row) m.eta_inv_[row][col] = s.solution[row];
  }
  for (int g = 1; g <= n; ++g)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        DiffPoly sum;
        for (int mu = 1; mu <= n; ++mu)
          if (!m.eta_inv(g, mu).is_zero()) sum += m.eta_inv(g, mu) * m.c(mu, a, b);
        m.c_up_[m.idx(g, a, b)] = sum;
      }
  return m;
}

WdvvResult wdvv_check(const FrobeniusModel& m) {
  const int n = m.dim();
  auto assoc = [&](int a, int b, int c, int d) {
    DiffPoly sum;
    for (int mu = 1; mu <= n; ++mu) {
      const DiffPoly& x = m.c(a, b, mu);
      if (x.is_zero()) continue;
      sum += x * m.c_up(mu, c, d);
    }
    return sum;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          if (assoc(a, b, c, d) != assoc(a, c, b, d)) return {false, {a, b, c, d}};
  return {};
}

WdvvResult wdvv_check(const Potential& p) { return wdvv_check(FrobeniusModel::build_unchecked(p)); }

FrobeniusModel FrobeniusModel::from_potential(const Potential& p) {
  FrobeniusModel m = build_unchecked(p);
  const WdvvResult w = wdvv_check(m);
  if (!w.pass) throw ModelError("WDVV violated at " + witness_text(w.witness));
  return m;
}

FrobeniusModel FrobeniusModel::parse(std::string_view text) { return from_potential(parse_potential_text(text)); }

FrobeniusModel FrobeniusModel::from_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open model file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

FrobeniusModel FrobeniusModel::point() { return parse("N = 1; F = 1/6*v1^3"); }

FrobeniusModel FrobeniusModel::a2() { return parse("N = 2; F = 1/2*v1^2*v2 + 1/72*v2^4"); }

FrobeniusModel FrobeniusModel::a3() {
  return parse("N = 3; F = 1/2*v1^2*v3 + 1/2*v1*v2^2 - 1/16*v2^2*v3^2 + 1/960*v3^5");
}

}  // namespace dzid
