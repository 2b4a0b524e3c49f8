#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rbx/errors.hpp"

namespace rbx::detail {

template <class Result>
struct BranchOutcome {
  std::optional<Result> found;
  std::uint64_t nodes = 0;
  /// branch stopped because its own node count passed the budget
  bool over_budget = false;
};

template <class Result>
struct OrderedSearchResult {
  std::optional<Result> found;
  std::uint64_t nodes = 0;
};

/// Runs root branches 0..count-1 and reports what a sequential scan in branch
/// order would report: the first branch with a result, the cumulative node
/// count up to it, and a budget error if that count passes `budget`.
///
/// `run(branch, budget, cutoff)` searches one branch; it may stop early once
/// `cutoff` drops below `branch` (a lower branch already succeeded).
template <class Result, class Run>
OrderedSearchResult<Result> search_branches_in_order(int count, int threads, std::uint64_t budget, const std::string& what,
                                                     Run&& run) {
  OrderedSearchResult<Result> out;
  if (threads <= 1 || count <= 1) {
    std::atomic<int> cutoff{std::numeric_limits<int>::max()};
    for (int b = 0; b < count; ++b) {
      auto o = run(b, budget - out.nodes, cutoff);
      out.nodes += o.nodes;
      if (o.over_budget || out.nodes > budget) throw BudgetExceeded(what, budget);
      if (o.found) {
        out.found = std::move(o.found);
        return out;
      }
    }
    return out;
  }

  std::vector<BranchOutcome<Result>> outcomes(static_cast<std::size_t>(count));
  std::vector<char> finished(static_cast<std::size_t>(count), 0);
  std::atomic<int> next{0};
  std::atomic<int> cutoff{std::numeric_limits<int>::max()};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed.load()) {
      int b = next.fetch_add(1);
      if (b >= count || b > cutoff.load()) return;
      try {
        auto o = run(b, budget, cutoff);
        if (o.found) {
          int cur = cutoff.load();
          while (b < cur && !cutoff.compare_exchange_weak(cur, b)) {
          }
        }
        outcomes[b] = std::move(o);
        finished[b] = 1;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n_threads = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (int b = 0; b < count; ++b) {
    // every branch up to the first success has run to completion
    const auto& o = outcomes[b];
    out.nodes += o.nodes;
    if (o.over_budget || out.nodes > budget) throw BudgetExceeded(what, budget);
    if (o.found) {
      out.found = o.found;
      return out;
    }
    if (!finished[b]) break;
  }
  return out;
}

}  // namespace rbx::detail
