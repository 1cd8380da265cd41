#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dzid/rational.hpp"

namespace dzid {

/// <tau_{k_1} ... tau_{k_n}>_g on the moduli space of stable curves, via the
/// DVV recursion. The memo table is internally synchronized.
class IntersectionOracle {
 public:
  /// Throws std::invalid_argument when 2g - 2 + n <= 0 or any k is negative.
  Rational operator()(int g, std::vector<int> ks);

  /// Reads/writes "g k1 k2 ... value" lines.
  void load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;
  [[nodiscard]] std::size_t memo_size() const;

 private:
  using Key = std::pair<int, std::vector<int>>;
  Rational compute(int g, const std::vector<int>& ks);
  Rational lookup(int g, std::vector<int> ks);

  mutable std::mutex mutex_;
  std::map<Key, Rational> memo_;
};

/// Process-wide oracle; loads and persists the memo in $DZID_CACHE_DIR when set.
IntersectionOracle& shared_oracle();
void persist_shared_oracle();

Rational intersection_number(int g, const std::vector<int>& ks);

}  // namespace dzid
