#include "dzid/operators.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dzid {

namespace {

DiffFrac normalize(DiffFrac f) {
  if (f.den().is_constant()) {
    if (f.den() == DiffPoly(1)) return f;
    return DiffFrac(f.num() * f.den().constant_term().inverse());
  }
  DiffPoly p;
  if (f.as_poly(p)) return DiffFrac(std::move(p));
  return f;
}

DiffPoly to_poly(const DiffFrac& f) {
  const DiffFrac g = normalize(f);
  if (!g.den().is_constant()) throw std::logic_error("operator result is not a differential polynomial: " + f.str());
  return g.num();
}

/// Partial derivatives of one target, keyed by the sorted multiset of variables.
class PartialCache {
 public:
  explicit PartialCache(const JetFunction& target) { cache_.emplace(std::vector<JetVar>{}, target); }

  const JetFunction& get(const std::vector<JetVar>& key) {
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<JetVar> parent(key.begin(), key.end() - 1);
    JetFunction d = get(parent).partial(key.back());
    return cache_.emplace(key, std::move(d)).first->second;
  }

 private:
  std::map<std::vector<JetVar>, JetFunction> cache_;
};

std::vector<JetVar> with(const std::vector<JetVar>& key, JetVar v) {
  std::vector<JetVar> out = key;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

DiffFrac apply_cached(const std::vector<JetField>& fields, PartialCache& cache) {
  std::function<DiffFrac(std::size_t, const std::vector<JetVar>&)> rec = [&](std::size_t j,
                                                                              const std::vector<JetVar>& key) {
    const JetFunction& g = cache.get(key);
    if (j == fields.size()) return g.value();
    DiffFrac sum;
    for (const auto& [v, xi] : fields[j]) {
      if (xi.is_zero()) continue;
      const std::vector<JetVar> next = with(key, v);
      if (cache.get(next).is_zero()) continue;
      const DiffFrac inner = rec(j + 1, next);
      if (!inner.is_zero()) sum += DiffFrac(xi) * inner;
    }
    return normalize(sum);
  };
  return rec(0, {});
}

void set_partitions(std::size_t n, std::size_t i, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (i == n) {
    emit(blocks);
    return;
  }
  // blocks grows and shrinks in the recursion, so no references into it
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k].push_back(static_cast<int>(i));
    set_partitions(n, i + 1, blocks, emit);
    blocks[k].pop_back();
  }
  blocks.push_back({static_cast<int>(i)});
  set_partitions(n, i + 1, blocks, emit);
  blocks.pop_back();
}

void add_scaled(TimeField& out, const TimeField& f, const DiffPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [k, h] : f) {
    DiffPoly& slot = out[k];
    slot += c * h;
    if (slot.is_zero()) out.erase(k);
  }
}

}  // namespace

JetFunction JetFunction::log(const Rational& scale, DiffPoly arg) {
  if (arg.is_zero()) throw std::invalid_argument("log of zero");
  JetFunction f;
  f.is_log_ = true;
  f.scale_ = scale;
  f.arg_ = std::move(arg);
  return f;
}

const DiffFrac& JetFunction::value() const {
  if (is_log_) throw std::logic_error("value of a logarithm is not a differential fraction");
  return value_;
}

JetFunction JetFunction::partial(JetVar v) const {
  if (is_log_) return JetFunction(normalize(DiffFrac(scale_ * arg_.partial(v), arg_)));
  return JetFunction(normalize(value_.partial(v)));
}

std::set<JetVar> JetFunction::variables() const {
  if (is_log_) return arg_.variables();
  std::set<JetVar> out = value_.num().variables();
  for (const JetVar& v : value_.den().variables()) out.insert(v);
  return out;
}

std::string JetFunction::str() const {
  if (is_log_) return scale_.str() + " * log(" + arg_.str() + ")";
  return value_.str();
}

DiffFrac normal_ordered_apply(const std::vector<JetField>& fields, const JetFunction& target) {
  PartialCache cache(target);
  return apply_cached(fields, cache);
}

DiffPoly normal_ordered_apply(const std::vector<JetField>& fields, const DiffPoly& target) {
  return to_poly(normal_ordered_apply(fields, JetFunction(target)));
}

const TimeField& OperatorEngine::ex_field(int beta, int p) {
  if (beta < 1 || beta > dim() || p < 0) throw std::invalid_argument("O_{beta,p}: index out of range");
  const Insertion key{beta, p};
  if (auto it = ex_.find(key); it != ex_.end()) return it->second;
  TimeField f{{key, DiffPoly(1)}};
  for (int k = 0; k < p; ++k)
    for (int g = 1; g <= dim(); ++g) {
      const DiffPoly c = g0_.two_point_up(g, beta, k);
      if (!c.is_zero()) add_scaled(f, ex_field(g, p - k - 1), -c);
    }
  return ex_.emplace(key, std::move(f)).first->second;
}

TimeField OperatorEngine::a_field(int m, int alpha, int p) {
  if (m < 0 || p < m + 1) throw std::invalid_argument("A^m_{alpha,p} needs p >= m+1");
  if (alpha < 1 || alpha > dim()) throw std::invalid_argument("A^m_{alpha,p}: index out of range");
  if (m == 0) {
    TimeField f{{Insertion{alpha, p}, DiffPoly(1)}};
    for (int g = 1; g <= dim(); ++g) add_scaled(f, TimeField{{Insertion{g, 0}, DiffPoly(1)}}, -g0_.two_point_up(g, alpha, p - 1));
    return f;
  }
  TimeField f = a_field(m - 1, alpha, p);
  for (int g = 1; g <= dim(); ++g) {
    const DiffPoly c = g0_.two_point_up(g, alpha, p - m - 1);
    if (!c.is_zero()) add_scaled(f, a_field(m - 1, g, m), -c);
  }
  return f;
}

TimeField OperatorEngine::a_field_by_definition(int m, int alpha, int p) {
  if (m < 0 || p < m + 1) throw std::invalid_argument("A^m_{alpha,p} needs p >= m+1");
  TimeField f = ex_field(alpha, p);
  for (int k = 0; k <= p - m - 2; ++k)
    for (int g = 1; g <= dim(); ++g) add_scaled(f, ex_field(g, p - k - 1), g0_.two_point_up(g, alpha, k));
  return f;
}

DiffPoly OperatorEngine::jet_coefficient(const TimeField& field, JetVar v) {
  DiffPoly out;
  for (const auto& [ins, h] : field) out += h * g0_.flow_coefficient(ins.alpha, ins.p, v.alpha, v.order);
  return out;
}

JetField OperatorEngine::jet_field(const TimeField& field, const std::set<JetVar>& vars) {
  JetField out;
  for (const JetVar& v : vars) {
    DiffPoly c = jet_coefficient(field, v);
    if (!c.is_zero()) out.emplace(v, std::move(c));
  }
  return out;
}

DiffFrac OperatorEngine::apply_field(const TimeField& field, const JetFunction& target) {
  return normal_ordered_apply({jet_field(field, target.variables())}, target);
}

DiffPoly OperatorEngine::apply_field(const TimeField& field, const DiffPoly& target) {
  return to_poly(apply_field(field, JetFunction(target)));
}

DiffFrac OperatorEngine::ex_operator_action(int beta, int p, const JetFunction& target) {
  return apply_field(ex_field(beta, p), target);
}

DiffPoly OperatorEngine::ex_operator_action(int beta, int p, const DiffPoly& target) {
  return to_poly(ex_operator_action(beta, p, JetFunction(target)));
}

DiffFrac OperatorEngine::a_operator_action(const std::vector<int>& ms, const std::vector<Insertion>& ps,
                                           const JetFunction& target) {
  if (ms.size() != ps.size()) throw std::invalid_argument("a_operator_action: ms and ps differ in length");
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ps[i].p < ms[i] + 1) throw std::invalid_argument("A^m_{alpha,p} needs p >= m+1");
  JetFunction cur = target;
  for (std::size_t i = ms.size(); i-- > 0;) cur = JetFunction(apply_field(a_field(ms[i], ps[i].alpha, ps[i].p), cur));
  return cur.value();
}

DiffPoly OperatorEngine::a_operator_action(const std::vector<int>& ms, const std::vector<Insertion>& ps,
                                           const DiffPoly& target) {
  return to_poly(a_operator_action(ms, ps, JetFunction(target)));
}

const std::map<std::vector<Insertion>, DiffPoly>& OperatorEngine::expansion(std::vector<Insertion> fields) {
  std::sort(fields.begin(), fields.end());
  if (auto it = expansion_.find(fields); it != expansion_.end()) return it->second;
  std::map<std::vector<Insertion>, DiffPoly> cur{{{}, DiffPoly(1)}};
  for (const Insertion& f : fields) {
    std::map<std::vector<Insertion>, DiffPoly> next;
    for (const auto& [ms, c] : cur)
      for (const auto& [ins, h] : ex_field(f.alpha, f.p)) {
        std::vector<Insertion> key = ms;
        key.insert(std::upper_bound(key.begin(), key.end(), ins), ins);
        DiffPoly& slot = next[key];
        slot += c * h;
        if (slot.is_zero()) next.erase(key);
      }
    cur = std::move(next);
  }
  return expansion_.emplace(std::move(fields), std::move(cur)).first->second;
}

const DiffPoly& OperatorEngine::block_coefficient(const std::vector<Insertion>& sorted_fields, JetVar v) {
  const auto key = std::make_pair(sorted_fields, v);
  if (auto it = block_.find(key); it != block_.end()) return it->second;
  // The t-derivatives of v^{g,s} are dx^s of those of v^g; the H factors stay outside dx.
  DiffPoly out;
  for (const auto& [ms, c] : expansion(sorted_fields)) {
    DiffPoly inner;
    for (int nu = 1; nu <= dim(); ++nu) {
      const Rational& e = g0_.model().eta_inv(v.alpha, nu);
      if (e.is_zero()) continue;
      std::vector<Insertion> ins = ms;
      ins.push_back({nu, 0});
      ins.insert(ins.end(), v.order + 1, Insertion{1, 0});  // each unit insertion is one dx
      inner += e * g0_.correlator(ins);
    }
    out += c * inner;
  }
  return block_.emplace(key, std::move(out)).first->second;
}

DiffFrac OperatorEngine::ordered_product(const std::vector<Insertion>& fields, const JetFunction& target) {
  if (fields.empty()) return target.value();
  const std::set<JetVar> vars = target.variables();
  PartialCache cache(target);
  DiffFrac total;
  std::vector<std::vector<int>> blocks;
  set_partitions(fields.size(), 0, blocks, [&](const std::vector<std::vector<int>>& p) {
    std::vector<JetField> jf;
    for (const auto& b : p) {
      std::vector<Insertion> sorted;
      for (int i : b) sorted.push_back(fields[i]);
      std::sort(sorted.begin(), sorted.end());
      JetField w;
      for (const JetVar& v : vars) {
        const DiffPoly& c = block_coefficient(sorted, v);
        if (!c.is_zero()) w.emplace(v, c);
      }
      if (w.empty()) return;
      jf.push_back(std::move(w));
    }
    total += apply_cached(jf, cache);
  });
  return normalize(total);
}

const DiffPoly& OperatorEngine::vertex_value(int minus_alpha, std::vector<Insertion> fields) {
  std::sort(fields.begin(), fields.end());
  auto key = std::make_pair(minus_alpha, fields);
  if (auto it = vertex_.find(key); it != vertex_.end()) return it->second;
  DiffPoly out;
  for (const auto& [ms, c] : expansion(fields)) {
    std::vector<Insertion> ins = ms;
    ins.push_back({minus_alpha, 0});
    out += c * g0_.correlator(ins);
  }
  return vertex_.emplace(std::move(key), std::move(out)).first->second;
}

DiffFrac OperatorEngine::tree_operator_action(const std::vector<Insertion>& pairs, const JetFunction& target) {
  const int n = static_cast<int>(pairs.size());
  if (n < 1) throw std::invalid_argument("tree operator needs at least one pair");
  std::vector<int> a;
  int chi = 0;
  for (const Insertion& pr : pairs) {
    if (pr.alpha < 1 || pr.alpha > dim() || pr.p < 0) throw std::invalid_argument("tree operator: index out of range");
    a.push_back(pr.p);
    chi += pr.p;
  }
  auto tit = trees_.find(n);
  if (tit == trees_.end()) tit = trees_.emplace(n, enumerate_trees(n)).first;

  std::vector<std::pair<int, int>> eta_pairs;  // (label at parent side, label at child side)
  for (int x = 1; x <= dim(); ++x)
    for (int y = 1; y <= dim(); ++y)
      if (!g0_.model().eta_inv(y, x).is_zero()) eta_pairs.emplace_back(x, y);

  std::map<std::vector<Insertion>, DiffFrac> root_memo;
  auto root_value = [&](std::vector<Insertion> fields) -> const DiffFrac& {
    std::sort(fields.begin(), fields.end());
    if (auto it = root_memo.find(fields); it != root_memo.end()) return it->second;
    DiffFrac r = ordered_product(fields, target);
    return root_memo.emplace(std::move(fields), std::move(r)).first->second;
  };

  DiffFrac total;
  for (const RootedTree& t : tit->second) {
    std::vector<std::vector<int>> at(t.vertices());
    for (int v = 0; v < t.vertices(); ++v) at[v] = t.positive_at(v);
    for (const QAssignment& q : enumerate_q(t, chi)) {
      const Rational coef = tree_coefficient(t, q, a);
      if (coef.is_zero()) continue;
      std::vector<int> label(t.half_edges());
      for (int i = 0; i < n; ++i) label[i] = pairs[i].alpha;
      std::vector<int> child_label(t.vertices(), 0);
      std::function<void(int, Rational)> rec = [&](int v, Rational weight) {
        if (v == t.vertices()) {
          DiffPoly scalar(weight);
          for (int u = 1; u < t.vertices(); ++u) {
            std::vector<Insertion> fs;
            for (int h : at[u]) fs.push_back({label[h], q[h]});
            const DiffPoly& val = vertex_value(child_label[u], fs);
            if (val.is_zero()) return;
            scalar *= val;
          }
          std::vector<Insertion> root_fields;
          for (int h : at[0]) root_fields.push_back({label[h], q[h]});
          const DiffFrac& r = root_value(root_fields);
          if (!r.is_zero()) total += DiffFrac(scalar) * r;
          return;
        }
        for (const auto& [x, y] : eta_pairs) {
          label[t.edge_half_edge(v)] = x;
          child_label[v] = y;
          rec(v + 1, weight * g0_.model().eta_inv(y, x));
        }
      };
      rec(1, coef);
    }
  }
  return normalize(total);
}

DiffPoly OperatorEngine::tree_operator_action(const std::vector<Insertion>& pairs, const DiffPoly& target) {
  return to_poly(tree_operator_action(pairs, JetFunction(target)));
}

}  // namespace dzid
