#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "properties.hpp"

using namespace dzid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_reports(const std::vector<IdentityReport>& reports) {
  Outcome o;
  int failed = 0;
  for (const IdentityReport& r : reports)
    if (!r.equal) {
      if (failed++ == 0) o.detail = r.text();
      o.pass = false;
    }
  if (o.pass) o.detail = std::to_string(reports.size()) + " identities";
  return o;
}

Outcome from_tally(const testkit::Tally& t) {
  Outcome o{t.ok(), std::to_string(t.checks) + " checks"};
  if (!t.ok()) o.detail += ", " + std::to_string(t.failures.size()) + " failed, first: " + t.failures.front();
  return o;
}

Outcome genus_two_exact() {
  const KdVFreeEnergy& f = shared_kdv_table().get(2);
  const std::map<Partition, Rational> expected{{{4}, Rational(1, 1152)}, {{3, 2}, Rational(-7, 1920)},
                                               {{2, 2, 2}, Rational(1, 360)}};
  std::map<Partition, Rational> nonzero;
  for (const auto& [mu, c] : f.coeffs)
    if (!c.is_zero()) nonzero.emplace(mu, c);
  return {nonzero == expected, "F_2 = " + f.realize().str()};
}

Outcome oracle_cross_check() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) {
    const Rational c = shared_kdv_table().get(g).coefficient({3 * g - 2});
    const Rational i = intersection_number(g, {3 * g - 2});
    o.detail += (g > 1 ? ", " : "") + std::string("g=") + std::to_string(g) + ": " + c.str();
    if (c != i) {
      o.pass = false;
      o.detail += " vs oracle " + i.str();
    }
  }
  return o;
}

Outcome kdv_structure() {
  testkit::Rng rng(3);
  testkit::Tally t;
  testkit::kdv_structure(shared_kdv_table().up_to(4), 4, rng, t);
  return from_tally(t);
}

Outcome genus_two_point() {
  const FrobeniusModel pt = FrobeniusModel::point();
  Genus0 g0(pt);
  OperatorEngine ops(g0);
  const DiffPoly vx = DiffPoly::var(1, 1);
  const std::vector<std::pair<Partition, DiffPoly>> cases{{{4}, Rational(1, 1152) * vx.pow(3)},
                                                          {{3, 2}, Rational(-7, 1920) * vx.pow(4)},
                                                          {{2, 2, 2}, Rational(1, 60) * vx.pow(5)}};
  std::vector<IdentityReport> reports;
  for (const auto& [mu, value] : cases) {
    IdentityReport r = check_universal(ops, 2, mu, std::vector<int>(mu.size(), 1));
    r.equal = r.equal && r.lhs == DiffFrac(value);
    reports.push_back(std::move(r));
  }
  return from_reports(reports);
}

Outcome universal_sweep() {
  const FrobeniusModel pt = FrobeniusModel::point();
  Genus0 g0(pt);
  OperatorEngine ops(g0);
  std::vector<IdentityReport> reports;
  for (int g = 2; g <= 3; ++g)
    for (const Partition& mu : all_partitions(g)) {
      IdentityReport r = check_universal(ops, g, mu, std::vector<int>(mu.size(), 1));
      const Rational c = Rational(aut_order(mu)) * shared_kdv_table().get(g).coefficient(mu);
      const DiffPoly expected = c * DiffPoly::var(1, 1).pow(2 * g - 2 + static_cast<unsigned>(mu.size()));
      r.equal = r.equal && r.rhs == DiffFrac(expected);
      reports.push_back(std::move(r));
    }
  return from_reports(reports);
}

Outcome genus_one() {
  std::vector<IdentityReport> reports;
  for (const FrobeniusModel& m : {FrobeniusModel::point(), FrobeniusModel::a2(), FrobeniusModel::a3()}) {
    Genus0 g0(m);
    OperatorEngine ops(g0);
    for (int a = 1; a <= m.dim(); ++a)
      for (int p = 1; p <= 5; ++p) reports.push_back(check_genus1(ops, a, p));
  }
  return from_reports(reports);
}

Outcome a_operators() {
  const FrobeniusModel pt = FrobeniusModel::point();
  Genus0 g0(pt);
  OperatorEngine ops(g0);
  std::vector<IdentityReport> reports;
  for (auto [g, p] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{2, 6}, std::pair{3, 7}})
    reports.push_back(check_aop_single(ops, g, 1, p));
  for (auto [p1, p2] : {std::pair{2, 3}, std::pair{3, 4}}) reports.push_back(check_a21(ops, 1, p1, 1, p2));
  return from_reports(reports);
}

Outcome operator_properties() {
  testkit::Tally all;
  std::uint64_t seed = 8;
  for (const FrobeniusModel& m : {FrobeniusModel::point(), FrobeniusModel::a2()}) {
    const testkit::Tally t = testkit::operator_property_suite(m, 3, 4, seed++);
    all.checks += t.checks;
    all.failures.insert(all.failures.end(), t.failures.begin(), t.failures.end());
  }
  return from_tally(all);
}

Outcome oracle_self_consistency() {
  IntersectionOracle oracle;
  testkit::Rng rng(9);
  testkit::Tally t;
  testkit::string_and_dilaton(oracle, 100, rng, t);
  return from_tally(t);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"genus-two KdV free energy is exact", genus_two_exact},
      {"leading coefficients match the intersection oracle, g <= 4", oracle_cross_check},
      {"structural suite on the KdV free energies, g <= 4", kdv_structure},
      {"genus-two universal identities for the point model", genus_two_point},
      {"universal identity sweep at N = 1, g = 2, 3", universal_sweep},
      {"genus-one relation for point, A2, A3, p <= 5", genus_one},
      {"A-operator identities at N = 1", a_operators},
      {"operator-property suite on point and A2", operator_properties},
      {"string and dilaton equations on 100 random correlators", oracle_self_consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%.2fs): %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
