#pragma once

#include <random>
#include <vector>

#include "dzid/identities.hpp"

namespace dzid::testkit {

/// Deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Rational rational(int max_num, int max_den);
  JetVar jet(int dim, int max_order) { return {uniform(1, dim), uniform(0, max_order)}; }

 private:
  std::mt19937_64 gen_;
};

/// A few terms in v^{a,s}, s <= max_order, total degree <= max_degree.
DiffPoly random_diffpoly(Rng& rng, int dim, int max_order, int terms, int max_degree);

/// All tuples in [lo, hi]^n.
std::vector<std::vector<int>> tuples(int n, int lo, int hi);

/// Ordered set partitions of {0..n-1} into m possibly empty labeled parts.
std::vector<std::vector<std::vector<int>>> labeled_splits(int n, int m);

/// sum over g_1..g_a of prod_{j=0}^{a} dx<<tau^{g_j}_0 tau_{g_{j+1},0}>>, g_0 = beta, g_{a+1} = alpha.
DiffPoly ex_chain(Genus0& g0, int alpha, int a, int beta);

/// Closed form of A^m_{alpha,p}(v^{beta,r}) as a nested binomial sum of correlators.
DiffPoly a_closed_form(Genus0& g0, int m, int alpha, int p, int beta, int r);

/// prod v^{beta_j, b_j}
DiffPoly jet_monomial(const std::vector<int>& betas, const std::vector<int>& bs);

}  // namespace dzid::testkit
