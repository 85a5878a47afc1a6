#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kforce/error.hpp"

namespace kforce::detail {

inline constexpr std::uint64_t kBinomCap = std::uint64_t(1) << 62;

/// C(n, k), saturating at kBinomCap. Only ever compared against budgets.
inline std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > kBinomCap / (n - i)) return kBinomCap;
    r = r * (n - i) / (i + 1);
  }
  return std::min(r, kBinomCap);
}

struct FirstHit {
  std::vector<int> members;   // pool values, ascending
  int cardinality = 0;
  std::uint64_t rank = 0;     // lexicographic index within its cardinality block
};

/// Scans size-c subsets of pool with pool index `lead` fixed as the smallest
/// index, in lexicographic order. Returns the first satisfying subset and its
/// rank within the lead block.
template <class Pred>
std::optional<FirstHit> scan_lead_block(const std::vector<int>& pool, int c, int lead, Pred& pred) {
  const int P = int(pool.size());
  std::vector<int> idx(std::size_t(c), 0);
  idx[0] = lead;
  for (int j = 1; j < c; ++j) idx[std::size_t(j)] = lead + j;
  if (idx.back() >= P) return std::nullopt;
  std::vector<int> members(std::size_t(c), 0);
  std::uint64_t rank = 0;
  while (true) {
    for (int j = 0; j < c; ++j) members[std::size_t(j)] = pool[std::size_t(idx[std::size_t(j)])];
    if (pred(members)) return FirstHit{members, c, rank};
    ++rank;
    int i = c - 1;
    while (i >= 1 && idx[std::size_t(i)] == P - c + i) --i;
    if (i < 1) return std::nullopt;  // idx[0] stays fixed
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < c; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

template <class Pred>
std::optional<FirstHit> scan_cardinality(const std::vector<int>& pool, int c, int workers,
                                         Pred& pred) {
  const int P = int(pool.size());
  const int leads = P - c + 1;
  if (leads <= 0) return std::nullopt;

  // Block sizes and prefix sums let the parallel path recover the global
  // lexicographic rank of whatever it finds.
  std::vector<std::uint64_t> prefix(std::size_t(leads) + 1, 0);
  for (int b = 0; b < leads; ++b) {
    prefix[std::size_t(b) + 1] =
        std::min(prefix[std::size_t(b)] + binom_capped(std::uint64_t(P - 1 - b), std::uint64_t(c - 1)),
                 kBinomCap);
  }

  const bool parallel = workers > 1 && leads > 1 && prefix.back() >= 4096;
  if (!parallel) {
    for (int b = 0; b < leads; ++b) {
      if (auto hit = scan_lead_block(pool, c, b, pred)) {
        hit->rank += prefix[std::size_t(b)];
        return hit;
      }
    }
    return std::nullopt;
  }

  const int nthreads = std::min(workers, leads);
  std::atomic<int> best_lead{std::numeric_limits<int>::max()};
  std::vector<std::optional<FirstHit>> found(static_cast<std::size_t>(leads));
  std::vector<std::thread> threads;
  threads.reserve(std::size_t(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t]() {
      for (int b = t; b < leads; b += nthreads) {
        if (b > best_lead.load(std::memory_order_relaxed)) break;
        if (auto hit = scan_lead_block(pool, c, b, pred)) {
          found[std::size_t(b)] = std::move(hit);
          int cur = best_lead.load(std::memory_order_relaxed);
          while (b < cur && !best_lead.compare_exchange_weak(cur, b, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  int best = best_lead.load();
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  FirstHit hit = *found[std::size_t(best)];
  hit.rank += prefix[std::size_t(best)];
  return hit;
}

/// Enumerates subsets of pool by increasing cardinality, lexicographically
/// within each cardinality; returns the first subset satisfying pred.
///
/// `consumed` tracks candidate sets charged against the budget using
/// sequential-order semantics (rank of the winner plus all smaller
/// cardinalities), so the count is identical no matter how many workers ran.
/// Before a cardinality is scanned, its full block is checked against the
/// remaining budget and the search refuses (throws) if it would not fit.
template <class Pred>
std::optional<FirstHit> first_subset(const std::vector<int>& pool, int min_card, int max_card,
                                     std::uint64_t budget, std::uint64_t& consumed, int workers,
                                     Pred pred) {
  const int P = int(pool.size());
  for (int c = std::max(1, min_card); c <= std::min(max_card, P); ++c) {
    std::uint64_t block = binom_capped(std::uint64_t(P), std::uint64_t(c));
    if (block > budget || consumed > budget - block) {
      throw BudgetExceededError("enumeration budget exceeded: scanning cardinality " +
                                std::to_string(c) + " over a pool of " + std::to_string(P) +
                                " needs " + std::to_string(block) +
                                " more candidate sets (budget " + std::to_string(budget) + ")");
    }
    if (auto hit = scan_cardinality(pool, c, workers, pred)) {
      consumed += hit->rank + 1;
      return hit;
    }
    consumed += block;
  }
  return std::nullopt;
}

}  // namespace kforce::detail
