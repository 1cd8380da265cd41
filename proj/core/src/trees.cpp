#include "dzid/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dzid {

namespace {

struct Node {
  std::vector<int> legs;
  std::vector<Node> children;
};

void set_partitions(const std::vector<int>& items, std::size_t i, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (i == items.size()) {
    emit(blocks);
    return;
  }
  // blocks grows and shrinks in the recursion, so no references into it
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k].push_back(items[i]);
    set_partitions(items, i + 1, blocks, emit);
    blocks[k].pop_back();
  }
  blocks.push_back({items[i]});
  set_partitions(items, i + 1, blocks, emit);
  blocks.pop_back();
}

std::vector<Node> build(const std::vector<int>& legs, bool root);

/// All ways to hang the blocks of one set partition from a single vertex.
void expand(const std::vector<std::vector<int>>& blocks, std::vector<Node>& out) {
  std::vector<Node> partial{Node{}};
  for (const auto& b : blocks) {
    std::vector<Node> next;
    if (b.size() == 1) {
      for (auto node : partial) {
        node.legs.push_back(b[0]);
        next.push_back(std::move(node));
      }
    } else {
      const std::vector<Node> subtrees = build(b, false);
      for (const auto& node : partial)
        for (const auto& sub : subtrees) {
          Node n = node;
          n.children.push_back(sub);
          next.push_back(std::move(n));
        }
    }
    partial = std::move(next);
  }
  out.insert(out.end(), partial.begin(), partial.end());
}

std::vector<Node> build(const std::vector<int>& legs, bool root) {
  std::vector<Node> out;
  std::vector<std::vector<int>> blocks;
  set_partitions(legs, 0, blocks, [&](const std::vector<std::vector<int>>& p) {
    if (!root && p.size() < 2) return;
    expand(p, out);
  });
  return out;
}

void flatten(const Node& node, int parent, RootedTree& t) {
  const int id = static_cast<int>(t.parent.size());
  t.parent.push_back(parent);
  for (int leg : node.legs) t.leg_vertex[leg] = id;
  for (const auto& c : node.children) flatten(c, id, t);
}

}  // namespace

int RootedTree::attached_vertex(int h) const { return is_leg(h) ? leg_vertex[h] : parent[child_vertex(h)]; }

std::vector<int> RootedTree::positive_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < half_edges(); ++h)
    if (attached_vertex(h) == v) out.push_back(h);
  return out;
}

std::vector<int> RootedTree::descendant_legs(int h) const {
  if (is_leg(h)) return {h};
  std::vector<int> out;
  for (int h2 : descendant_half_edges(h))
    if (is_leg(h2)) out.push_back(h2);
  return out;
}

std::vector<int> RootedTree::descendant_half_edges(int h) const {
  std::vector<int> out;
  if (is_leg(h)) return out;
  std::vector<int> stack{child_vertex(h)};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int h2 : positive_at(v)) {
      out.push_back(h2);
      if (!is_leg(h2)) stack.push_back(child_vertex(h2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RootedTree::is_stable() const {
  for (int v = 1; v < vertices(); ++v)
    if (positive_at(v).size() < 2) return false;
  return true;
}

std::string RootedTree::canonical() const {
  std::function<std::pair<int, std::string>(int)> render = [&](int v) {
    std::vector<std::pair<int, std::string>> items;
    for (int h : positive_at(v)) {
      if (is_leg(h))
        items.emplace_back(h, std::to_string(h + 1));
      else
        items.push_back(render(child_vertex(h)));
    }
    std::sort(items.begin(), items.end());
    std::string s = "(";
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i].second;
    return std::make_pair(items.empty() ? legs() : items.front().first, s + ")");
  };
  return render(0).second;
}

std::vector<RootedTree> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  std::vector<int> legs(n);
  for (int i = 0; i < n; ++i) legs[i] = i;
  std::vector<RootedTree> out;
  for (const Node& root : build(legs, true)) {
    RootedTree t;
    t.leg_vertex.assign(n, 0);
    flatten(root, -1, t);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<QAssignment> enumerate_q(const RootedTree& t, int chi) {
  std::vector<QAssignment> out;
  const int budget = chi - t.edges();
  if (budget < 0) return out;
  const int h_count = t.half_edges();
  std::vector<int> cap(t.vertices(), -1);
  for (int v = 1; v < t.vertices(); ++v) cap[v] = static_cast<int>(t.positive_at(v).size()) - 2;
  std::vector<int> used(t.vertices(), 0);
  QAssignment q(h_count, 0);
  std::function<void(int, int)> rec = [&](int h, int left) {
    if (h == h_count) {
      if (left == 0) out.push_back(q);
      return;
    }
    const int v = t.attached_vertex(h);
    const int hi = v == 0 ? left : std::min(left, cap[v] - used[v]);
    for (int x = 0; x <= hi; ++x) {
      q[h] = x;
      used[v] += x;
      rec(h + 1, left - x);
      used[v] -= x;
    }
    q[h] = 0;
  };
  rec(0, budget);
  return out;
}

Rational tree_coefficient(const RootedTree& t, const QAssignment& q, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != t.legs()) throw std::invalid_argument("tree_coefficient: wrong number of legs");
  BigInt num = (t.edges() % 2 == 0) ? 1 : -1;
  for (int h = 0; h < t.half_edges(); ++h) {
    long s = 0;
    for (int l : t.descendant_legs(h)) s += a[l] + 1;
    for (int h2 : t.descendant_half_edges(h)) s -= q[h2] + 1;
    num *= pochhammer(BigInt(s), static_cast<unsigned>(q[h] + 1));
    if (num == 0) return Rational(0);
  }
  BigInt den = 1;
  for (int ai : a) den *= factorial(static_cast<unsigned>(ai + 1));
  return Rational(num, den);
}

}  // namespace dzid
