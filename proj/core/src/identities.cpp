#include "dzid/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dzid/intersection.hpp"
#include "json.hpp"

namespace dzid {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

Matrix<DiffPoly> multiply(const Matrix<DiffPoly>& a, const Matrix<DiffPoly>& b) {
  const std::size_t n = a.size();
  Matrix<DiffPoly> out(n, std::vector<DiffPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/// <<tau_{a,p} tau^b_0 tau^c_0>> with two raised indices.
DiffPoly three_point_up2(Genus0& g0, Insertion a, int b, int c) {
  const FrobeniusModel& m = g0.model();
  DiffPoly out;
  for (int x = 1; x <= g0.dim(); ++x) {
    if (m.eta_inv(b, x).is_zero()) continue;
    for (int y = 1; y <= g0.dim(); ++y)
      if (!m.eta_inv(c, y).is_zero()) out += (m.eta_inv(b, x) * m.eta_inv(c, y)) * g0.correlator({a, {x, 0}, {y, 0}});
  }
  return out;
}

void require_kdv(const OperatorEngine& ops, int g) {
  if (ops.dim() != 1 && g >= 2) throw ModelError("free energy unavailable for N>=2, g>=2");
}

}  // namespace

std::string IdentityReport::text() const {
  std::ostringstream os;
  os << name << " [";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ", " : "") << params[i].first << "=" << params[i].second;
  os << "]: " << (equal ? "PASS" : "FAIL");
  if (!equal) {
    os << "\n  lhs = " << lhs.str() << "\n  rhs = " << rhs.str();
    if (!witness.empty()) os << "\n  witness: " << witness;
  }
  return os.str();
}

std::string IdentityReport::json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["equal"] = equal;
  j["witness"] = witness;
  j["lhs"] = lhs.str();
  j["rhs"] = rhs.str();
  return j.dump();
}

JetFunction free_energy(const FrobeniusModel& model, int g) {
  if (g < 1) throw std::invalid_argument("free energy needs g >= 1");
  const int n = model.dim();
  if (g == 1) {
    Matrix<DiffPoly> m(n, std::vector<DiffPoly>(n));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          if (!model.c(a, b, c).is_zero()) m[a - 1][b - 1] += model.c(a, b, c) * DiffPoly::var(c, 1);
    return JetFunction::log(Rational(1, 24), det_adjugate(m).first);
  }
  if (n != 1) throw ModelError("free energy unavailable for N>=2, g>=2");
  return JetFunction(shared_kdv_table().get(g).realize());
}

DiffPoly three_point_up(Genus0& g0, Insertion a, Insertion b, int c) {
  DiffPoly out;
  for (int x = 1; x <= g0.dim(); ++x)
    if (!g0.model().eta_inv(c, x).is_zero()) out += g0.model().eta_inv(c, x) * g0.correlator({a, b, {x, 0}});
  return out;
}

MgMatrix mg_matrix(Genus0& g0, int g) {
  if (g < 1) throw std::invalid_argument("mg_matrix needs g >= 1");
  const int n = g0.dim();
  Matrix<DiffPoly> id(n, std::vector<DiffPoly>(n));
  for (int i = 0; i < n; ++i) id[i][i] = DiffPoly(1);
  if (g == 1) return {1, id};
  Matrix<DiffPoly> m(n, std::vector<DiffPoly>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int l = 1; l <= n; ++l)
        for (int u = 1; u <= n; ++u) {
          const DiffPoly left = three_point_up(g0, {l, 0}, {u, 0}, a);
          if (left.is_zero()) continue;
          m[a - 1][b - 1] += left * three_point_up2(g0, {b, 0}, l, u);
        }
  Matrix<DiffPoly> out = id;
  for (int i = 1; i < g; ++i) out = multiply(out, m);
  return {g, out};
}

std::optional<int> homogeneous_dx_degree(const DiffFrac& f) {
  const std::set<int> num = f.num().dx_degrees();
  const std::set<int> den = f.den().dx_degrees();
  if (num.size() != 1 || den.size() != 1) return std::nullopt;
  return *num.begin() - *den.begin();
}

IdentityReport compare(std::string name, std::vector<std::pair<std::string, std::string>> params, DiffFrac lhs,
                       DiffFrac rhs) {
  IdentityReport r{std::move(name), std::move(params), std::move(lhs), std::move(rhs), false, ""};
  const DiffPoly diff = r.lhs.den() == r.rhs.den() ? r.lhs.num() - r.rhs.num()
                                                   : r.lhs.num() * r.rhs.den() - r.rhs.num() * r.lhs.den();
  r.equal = diff.is_zero();
  if (!r.equal) {
    const auto& [m, c] = *diff.terms().begin();
    r.witness = DiffPoly(m, c).str();
  }
  return r;
}

IdentityReport check_universal(OperatorEngine& ops, int g, const Partition& mu, const std::vector<int>& alphas) {
  const int n = static_cast<int>(mu.size());
  if (alphas.size() != mu.size()) throw std::invalid_argument("check_universal: one index per part");
  if (g == 1) {
    if (mu != Partition{1}) throw std::invalid_argument("check_universal: genus one takes mu = (1)");
  } else {
    int sum = 0;
    for (int k : mu) {
      if (k < 2) throw std::invalid_argument("check_universal: parts must be >= 2");
      sum += k;
    }
    if (g < 2 || sum != 3 * g - 3 + n) throw std::invalid_argument("check_universal: mu is not in P(g,n)");
  }
  require_kdv(ops, g);
  Genus0& g0 = ops.genus0();
  const int dim = ops.dim();
  std::vector<Insertion> pairs;
  for (int i = 0; i < n; ++i) {
    if (alphas[i] < 1 || alphas[i] > dim) throw std::invalid_argument("check_universal: index out of range");
    pairs.push_back({alphas[i], mu[i]});
  }
  Partition sorted = mu;
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<std::pair<std::string, std::string>> params{
      {"N", std::to_string(dim)}, {"g", std::to_string(g)}, {"mu", join(mu)}, {"alphas", join(alphas)}};

  // RHS: sum M[g]^{g0}_{gn} prod_i <<tau_{alpha_i} tau_{g_{i-1}} tau^{g_i}>>
  Matrix<DiffPoly> chain(dim, std::vector<DiffPoly>(dim));
  for (int i = 0; i < dim; ++i) chain[i][i] = DiffPoly(1);
  for (int i = 0; i < n; ++i) {
    Matrix<DiffPoly> p(dim, std::vector<DiffPoly>(dim));
    for (int a = 1; a <= dim; ++a)
      for (int b = 1; b <= dim; ++b) p[a - 1][b - 1] = three_point_up(g0, {alphas[i], 0}, {a, 0}, b);
    chain = multiply(chain, p);
  }
  const MgMatrix mg = mg_matrix(g0, g);
  DiffPoly contracted;
  for (int a = 1; a <= dim; ++a)
    for (int b = 1; b <= dim; ++b) contracted += mg.at(a, b) * chain[a - 1][b - 1];
  const Rational constant = Rational(aut_order(sorted)) * shared_kdv_table().get(g).coefficient(sorted);
  const DiffFrac rhs(constant * contracted);

  const JetFunction f = free_energy(g0.model(), g);
  if (g == 1) {
    auto apply = [&](const DiffPoly& x) { return ops.tree_operator_action(pairs, x); };
    if (!ops.kills_v_functions(apply, n)) {
      IdentityReport r{"universal", params, DiffFrac(), rhs, false, "operator does not annihilate functions of v"};
      return r;
    }
  }
  return compare("universal", std::move(params), ops.tree_operator_action(pairs, f), rhs);
}

IdentityReport check_genus1(OperatorEngine& ops, int alpha, int p) {
  if (p < 1) throw std::invalid_argument("check_genus1 needs p >= 1");
  Genus0& g0 = ops.genus0();
  std::vector<std::pair<std::string, std::string>> params{
      {"N", std::to_string(ops.dim())}, {"alpha", std::to_string(alpha)}, {"p", std::to_string(p)}};
  DiffPoly rhs;
  for (int b = 1; b <= ops.dim(); ++b) rhs += three_point_up(g0, {alpha, p - 1}, {b, 0}, b);
  rhs *= Rational(1, 24);
  const TimeField field = ops.a_field(0, alpha, p);
  if (!ops.kills_v_functions([&](const DiffPoly& x) { return ops.apply_field(field, x); }, 1))
    return {"genus1", params, DiffFrac(), DiffFrac(rhs), false, "operator does not annihilate functions of v"};
  return compare("genus1", std::move(params), ops.apply_field(field, free_energy(g0.model(), 1)), DiffFrac(rhs));
}

IdentityReport check_aop_single(OperatorEngine& ops, int g, int alpha, int p) {
  if (g < 1) throw std::invalid_argument("check_aop_single needs g >= 1");
  if (p < 3 * g - 2) throw std::invalid_argument("check_aop_single needs p >= 3g-2");
  require_kdv(ops, g);
  Genus0& g0 = ops.genus0();
  const int dim = ops.dim();
  std::vector<std::pair<std::string, std::string>> params{{"N", std::to_string(dim)},
                                                          {"g", std::to_string(g)},
                                                          {"alpha", std::to_string(alpha)},
                                                          {"p", std::to_string(p)}};
  const MgMatrix mg = mg_matrix(g0, g);
  DiffPoly rhs;
  for (int b = 1; b <= dim; ++b)
    for (int m = 1; m <= dim; ++m)
      if (!mg.at(m, b).is_zero()) rhs += three_point_up(g0, {alpha, p - (3 * g - 2)}, {m, 0}, b) * mg.at(m, b);
  rhs *= intersection_number(g, {3 * g - 2});
  const JetFunction f = free_energy(g0.model(), g);
  const TimeField field = ops.a_field(3 * g - 3, alpha, p);
  if (g == 1 && !ops.kills_v_functions([&](const DiffPoly& x) { return ops.apply_field(field, x); }, 1))
    return {"aop_single", params, DiffFrac(), DiffFrac(rhs), false, "operator does not annihilate functions of v"};
  return compare("aop_single", std::move(params), ops.apply_field(field, f), DiffFrac(rhs));
}

IdentityReport check_a21(OperatorEngine& ops, int alpha1, int p1, int alpha2, int p2) {
  if (p1 < 2 || p2 < 3) throw std::invalid_argument("check_a21 needs p1 >= 2 and p2 >= 3");
  require_kdv(ops, 2);
  Genus0& g0 = ops.genus0();
  const int dim = ops.dim();
  std::vector<std::pair<std::string, std::string>> params{{"N", std::to_string(dim)},
                                                          {"alpha1", std::to_string(alpha1)},
                                                          {"p1", std::to_string(p1)},
                                                          {"alpha2", std::to_string(alpha2)},
                                                          {"p2", std::to_string(p2)}};
  const MgMatrix mg = mg_matrix(g0, 2);
  DiffPoly rhs;
  for (int b = 1; b <= dim; ++b)
    for (int m = 1; m <= dim; ++m) {
      const DiffPoly left = three_point_up(g0, {alpha1, p1 - 2}, {b, 0}, m);
      if (left.is_zero()) continue;
      for (int l = 1; l <= dim; ++l)
        if (!mg.at(l, m).is_zero()) rhs += left * three_point_up(g0, {alpha2, p2 - 3}, {l, 0}, b) * mg.at(l, m);
    }
  rhs *= Rational(29, 5760);
  const DiffFrac lhs = ops.a_operator_action({2, 1}, {{alpha2, p2}, {alpha1, p1}}, free_energy(g0.model(), 2));
  return compare("a21", std::move(params), lhs, DiffFrac(rhs));
}

}  // namespace dzid
