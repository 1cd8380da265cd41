#include "dzid/intersection.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dzid {

namespace {

bool unstable(int g, std::size_t n) { return 2 * g - 2 + static_cast<int>(n) <= 0; }

bool dimension_ok(int g, const std::vector<int>& ks) {
  return std::accumulate(ks.begin(), ks.end(), 0) == 3 * g - 3 + static_cast<int>(ks.size());
}

}  // namespace

Rational IntersectionOracle::operator()(int g, std::vector<int> ks) {
  if (g < 0) throw std::invalid_argument("intersection_number: negative genus");
  for (int k : ks)
    if (k < 0) throw std::invalid_argument("intersection_number: negative psi power");
  if (unstable(g, ks.size())) throw std::invalid_argument("intersection_number: unstable (g, n)");
  return lookup(g, std::move(ks));
}

Rational IntersectionOracle::lookup(int g, std::vector<int> ks) {
  if (g < 0 || unstable(g, ks.size()) || !dimension_ok(g, ks)) return Rational(0);
  std::sort(ks.begin(), ks.end());
  Key key{g, ks};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Rational value = compute(g, ks);
  std::lock_guard lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

Rational IntersectionOracle::compute(int g, const std::vector<int>& ks) {
  if (g == 0 && ks == std::vector<int>{0, 0, 0}) return Rational(1);
  if (g == 1 && ks == std::vector<int>{1}) return Rational(1, 24);

  // ks is sorted and, past the seeds, its largest entry is k + 1 >= 1.
  const int k = ks.back() - 1;
  const std::vector<int> rest(ks.begin(), ks.end() - 1);
  Rational sum;

  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> s = rest;
    const int kj = s[j];
    s[j] = k + kj;
    sum += Rational(double_factorial(2L * k + 2 * kj + 1), double_factorial(2L * kj - 1)) * lookup(g, s);
  }

  Rational split;
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    const Rational weight(double_factorial(2L * r + 1) * double_factorial(2L * s + 1));
    Rational inner;
    if (g >= 1) {
      std::vector<int> all = rest;
      all.push_back(r);
      all.push_back(s);
      inner += lookup(g - 1, all);
    }
    const std::size_t n = rest.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> left{r}, right{s};
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? left : right).push_back(rest[i]);
      for (int g1 = 0; g1 <= g; ++g1) {
        const Rational a = lookup(g1, left);
        if (a.is_zero()) continue;
        inner += a * lookup(g - g1, right);
      }
    }
    split += weight * inner;
  }
  sum += split * Rational(1, 2);
  return sum / Rational(double_factorial(2L * k + 3));
}

void IntersectionOracle::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return;
  std::string line;
  std::lock_guard lock(mutex_);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.size() < 2) continue;
    const int g = std::stoi(tokens.front());
    std::vector<int> ks;
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) ks.push_back(std::stoi(tokens[i]));
    std::sort(ks.begin(), ks.end());
    memo_.emplace(Key{g, ks}, Rational::parse(tokens.back()));
  }
}

void IntersectionOracle::save(const std::filesystem::path& file) const {
  std::ofstream out(file);
  std::lock_guard lock(mutex_);
  for (const auto& [key, value] : memo_) {
    out << key.first;
    for (int k : key.second) out << ' ' << k;
    out << ' ' << value << '\n';
  }
}

std::size_t IntersectionOracle::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

namespace {

std::filesystem::path cache_file() {
  const char* dir = std::getenv("DZID_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / "intersections.txt";
}

}  // namespace

IntersectionOracle& shared_oracle() {
  static IntersectionOracle oracle;
  static std::once_flag loaded;
  std::call_once(loaded, [] {
    if (auto f = cache_file(); !f.empty()) oracle.load(f);
  });
  return oracle;
}

void persist_shared_oracle() {
  if (auto f = cache_file(); !f.empty()) {
    std::filesystem::create_directories(f.parent_path());
    shared_oracle().save(f);
  }
}

Rational intersection_number(int g, const std::vector<int>& ks) { return shared_oracle()(g, ks); }

}  // namespace dzid
