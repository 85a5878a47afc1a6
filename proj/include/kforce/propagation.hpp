#pragma once

#include <utility>
#include <vector>

#include "kforce/error.hpp"
#include "kforce/graph.hpp"
#include "kforce/vertexset.hpp"

namespace kforce {

// Synchronous propagation. A vertex v in the observed set with at least one
// and at most k unobserved neighbors forces its whole neighborhood in the next
// round; all eligible vertices fire simultaneously. The forcing process starts
// from the seed itself, the power process starts from the closed neighborhood
// of the seed. With k = 0 the rule can never fire.

enum class PropagationMode { forcing, power };

inline const char* mode_name(PropagationMode m) {
  return m == PropagationMode::forcing ? "forcing" : "power";
}

struct PropagationTrace {
  PropagationMode mode = PropagationMode::forcing;
  int k = 0;
  /// Strictly increasing; rounds.back() is the fixpoint.
  std::vector<VertexSet> rounds;
  /// forcers[i] holds every (v, w) pair applied between rounds[i] and
  /// rounds[i+1]: v was eligible and w was a newly observed neighbor of v.
  std::vector<std::vector<std::pair<int, int>>> forcers;
  bool success = false;

  const VertexSet& terminal() const { return rounds.back(); }
};

namespace detail {

inline void require_k(int k) {
  if (k < 0) throw PreconditionError("propagation parameter k must be non-negative");
}

/// Union of N(v) over all eligible v; optionally records (v, w) pairs for the
/// newly observed w. Returns an empty set when nothing is eligible.
inline VertexSet eligible_additions(const Graph& g, int k, const VertexSet& observed,
                                    std::vector<std::pair<int, int>>* pairs) {
  VertexSet additions(g.order());
  if (k <= 0) return additions;
  observed.for_each([&](int v) {
    const VertexSet& nb = g.adjacency(v);
    int white = nb.count_without(observed, k);
    if (white >= 1 && white <= k) {
      additions |= nb;
      if (pairs) {
        (nb - observed).for_each([&](int w) { pairs->emplace_back(v, w); });
      }
    }
  });
  return additions;
}

inline VertexSet run_to_fixpoint(const Graph& g, int k, VertexSet observed) {
  const int n = g.order();
  while (observed.size() < n) {
    VertexSet next = observed | eligible_additions(g, k, observed, nullptr);
    if (next == observed) break;
    observed = std::move(next);
  }
  return observed;
}

inline PropagationTrace traced_closure(const Graph& g, int k, VertexSet start,
                                       PropagationMode mode) {
  PropagationTrace tr;
  tr.mode = mode;
  tr.k = k;
  tr.rounds.push_back(std::move(start));
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    VertexSet next = tr.rounds.back() | eligible_additions(g, k, tr.rounds.back(), &pairs);
    if (next == tr.rounds.back()) break;
    tr.rounds.push_back(std::move(next));
    tr.forcers.push_back(std::move(pairs));
  }
  tr.success = tr.terminal().size() == g.order();
  return tr;
}

}  // namespace detail

/// Full forcing closure from seed t, with per-round bookkeeping.
inline PropagationTrace forcing_closure(const Graph& g, int k, const VertexSet& t) {
  detail::require_k(k);
  require_universe(g, t, "forcing_closure");
  return detail::traced_closure(g, k, t, PropagationMode::forcing);
}

/// Full power closure from seed s: round 0 is N[s], then the forcing rule.
inline PropagationTrace power_closure(const Graph& g, int k, const VertexSet& s) {
  detail::require_k(k);
  require_universe(g, s, "power_closure");
  return detail::traced_closure(g, k, closed_neighborhood(g, s), PropagationMode::power);
}

/// Terminal set of the forcing closure, without trace bookkeeping.
inline VertexSet forcing_terminal(const Graph& g, int k, const VertexSet& t) {
  detail::require_k(k);
  require_universe(g, t, "forcing_terminal");
  return detail::run_to_fixpoint(g, k, t);
}

inline VertexSet power_terminal(const Graph& g, int k, const VertexSet& s) {
  detail::require_k(k);
  require_universe(g, s, "power_terminal");
  return detail::run_to_fixpoint(g, k, closed_neighborhood(g, s));
}

inline bool is_k_forcing_set(const Graph& g, int k, const VertexSet& t) {
  return forcing_terminal(g, k, t).size() == g.order();
}

inline bool is_k_power_dominating_set(const Graph& g, int k, const VertexSet& s) {
  return power_terminal(g, k, s).size() == g.order();
}

/// Relative variant: does seed a force all of x (closure still runs in g)?
/// Requires a to be contained in x.
inline bool is_k_forcing_set_of(const Graph& g, int k, const VertexSet& a, const VertexSet& x) {
  detail::require_k(k);
  require_universe(g, a, "is_k_forcing_set_of");
  require_universe(g, x, "is_k_forcing_set_of");
  if (!a.is_subset_of(x)) {
    throw PreconditionError("relative forcing check requires the seed to lie inside the target set");
  }
  return x.is_subset_of(detail::run_to_fixpoint(g, k, a));
}

inline bool is_k_power_dominating_set_of(const Graph& g, int k, const VertexSet& a,
                                         const VertexSet& x) {
  detail::require_k(k);
  require_universe(g, a, "is_k_power_dominating_set_of");
  require_universe(g, x, "is_k_power_dominating_set_of");
  if (!a.is_subset_of(x)) {
    throw PreconditionError("relative power domination check requires the seed to lie inside the target set");
  }
  return x.is_subset_of(detail::run_to_fixpoint(g, k, closed_neighborhood(g, a)));
}

}  // namespace kforce
