#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace rbx {

/// Exact binomial coefficient; throws InvalidParameters on 64-bit overflow.
/// Returns 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Elementary symmetric polynomial e_k of the given integers (the number of
/// k-sets meeting each group at most once when the values are group sizes).
std::uint64_t elementary_symmetric(std::span<const int> values, int k);

/// Calls `fn(std::span<const int>)` for every k-subset of [0, n) in
/// lexicographic order. Stops early when `fn` returns false.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!fn(std::span<const int>(c))) return;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::uint64_t vertex_mask(std::span<const int> vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) m |= std::uint64_t{1} << v;
  return m;
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

/// Pascal table for colex ranking of subsets of [0, 64).
class BinomialTable {
 public:
  explicit BinomialTable(int max_k);
  std::uint64_t at(int n, int k) const { return k > max_k_ || k < 0 || n < k ? 0 : table_[n * (max_k_ + 1) + k]; }
  /// Colex rank of a vertex set given as a bitmask (sum of C(v_i, i+1)).
  std::uint64_t colex_rank(std::uint64_t mask) const {
    std::uint64_t rank = 0;
    int i = 1;
    while (mask) {
      int v = std::countr_zero(mask);
      rank += at(v, i++);
      mask &= mask - 1;
    }
    return rank;
  }

 private:
  int max_k_;
  std::vector<std::uint64_t> table_;
};

}  // namespace rbx
