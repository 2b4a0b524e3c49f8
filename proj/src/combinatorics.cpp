#include "rbx/combinatorics.hpp"

#include <string>

#include "rbx/errors.hpp"

namespace rbx {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) throw InvalidParameters("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t elementary_symmetric(std::span<const int> values, int k) {
  if (k < 0) return 0;
  // e[j] after processing a prefix of values
  std::vector<unsigned __int128> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (int v : values)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * static_cast<unsigned>(v);
  if (e[k] > UINT64_MAX) throw InvalidParameters("elementary symmetric sum overflows");
  return static_cast<std::uint64_t>(e[k]);
}

BinomialTable::BinomialTable(int max_k) : max_k_(max_k), table_(65 * static_cast<std::size_t>(max_k + 1), 0) {
  for (int n = 0; n <= 64; ++n) {
    table_[n * (max_k_ + 1)] = 1;
    for (int k = 1; k <= max_k_ && k <= n; ++k) {
      std::uint64_t a = n > 0 ? at(n - 1, k - 1) : 0;
      std::uint64_t b = n > 0 ? at(n - 1, k) : 0;
      table_[n * (max_k_ + 1) + k] = a + b;
    }
  }
}

}  // namespace rbx
