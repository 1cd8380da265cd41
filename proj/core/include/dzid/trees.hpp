#pragma once

#include <string>
#include <vector>

#include "dzid/rational.hpp"

namespace dzid {

/// Stable rooted tree with n labeled legs. Vertex 0 is the root; every other
/// vertex has a parent and at least two positive half-edges.
///
/// Positive half-edges are numbered 0..n-1 for the legs sigma_1..sigma_n and
/// n + (v - 1) for the edge running from parent(v) to the non-root vertex v.
struct RootedTree {
  std::vector<int> parent;      // parent[0] == -1
  std::vector<int> leg_vertex;  // vertex carrying each leg

  [[nodiscard]] int legs() const { return static_cast<int>(leg_vertex.size()); }
  [[nodiscard]] int vertices() const { return static_cast<int>(parent.size()); }
  [[nodiscard]] int edges() const { return vertices() - 1; }
  [[nodiscard]] int half_edges() const { return legs() + edges(); }
  [[nodiscard]] bool is_leg(int h) const { return h < legs(); }
  /// Vertex the positive half-edge h is attached to.
  [[nodiscard]] int attached_vertex(int h) const;
  /// For an edge half-edge, the child vertex it points to.
  [[nodiscard]] int child_vertex(int h) const { return h - legs() + 1; }
  [[nodiscard]] int edge_half_edge(int v) const { return legs() + v - 1; }
  /// Positive half-edges attached to v.
  [[nodiscard]] std::vector<int> positive_at(int v) const;
  /// Legs descending from h, h included when it is a leg.
  [[nodiscard]] std::vector<int> descendant_legs(int h) const;
  /// Positive half-edges strictly below h.
  [[nodiscard]] std::vector<int> descendant_half_edges(int h) const;
  [[nodiscard]] bool is_stable() const;
  /// Label-respecting canonical form, e.g. "(1,2,(3,4))" for a root carrying
  /// legs 1, 2 and an edge to a vertex with legs 3, 4.
  [[nodiscard]] std::string canonical() const;
};

/// All stable rooted trees with n labeled legs, one per isomorphism class.
std::vector<RootedTree> enumerate_trees(int n);

/// q : positive half-edges -> Z_{>=0}
using QAssignment = std::vector<int>;

/// All q with sum q + |E| = chi and sum_{h at v} q(h) <= |H+(v)| - 2 at every
/// non-root v; assignments killed by the Pochhammer factor are kept.
std::vector<QAssignment> enumerate_q(const RootedTree& t, int chi);

/// (-1)^|E| prod_h (s_h)_{q_h+1} / prod_i (a_i+1)!  with
/// s_h = sum_{l in DL(h)} (a_l+1) - sum_{h' in DH(h)} (q_h'+1).
Rational tree_coefficient(const RootedTree& t, const QAssignment& q, const std::vector<int>& a);

}  // namespace dzid
