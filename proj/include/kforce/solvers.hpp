#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kforce/enumeration.hpp"
#include "kforce/error.hpp"
#include "kforce/graph.hpp"
#include "kforce/propagation.hpp"

namespace kforce {

struct SolveOptions {
  /// Maximum number of candidate sets a single solve may charge.
  std::uint64_t budget = 1'000'000'000ULL;
  /// Worker threads for subset enumeration (results are worker-independent).
  int workers = 1;
  /// Restrict the power-domination candidate pool to vertices of degree
  /// >= k+2 on connected pieces where that is sound. Turning this off forces
  /// a full-pool enumeration (used by the soundness tests).
  bool use_degree_pruning = true;
};

struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  /// Ids the enumeration was allowed to pick from, when a restriction was
  /// applied; disengaged means the full pool was searched.
  std::optional<std::vector<int>> pruned_pool;
  std::string pruning_note = "none";
};

namespace detail {

inline VertexSet set_from_members(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

}  // namespace detail

/// Smallest set whose forcing closure observes the whole graph. Disconnected
/// graphs are solved per component (closures never cross components).
/// Witnesses are the lexicographically first minimum sets.
inline SolveResult min_k_forcing(const Graph& g, int k, const SolveOptions& opts = {}) {
  detail::require_k(k);
  SolveResult res;
  res.witness = VertexSet(g.order());
  std::uint64_t consumed = 0;
  for (const VertexSet& comp : components(g)) {
    if (k == 0) {
      // The rule never fires at k = 0, so only the component itself works.
      res.value += comp.size();
      res.witness |= comp;
      consumed += 1;
      continue;
    }
    std::vector<int> pool = comp.to_vector();
    auto pred = [&](const std::vector<int>& members) {
      VertexSet seed = detail::set_from_members(g.order(), members);
      return comp.is_subset_of(detail::run_to_fixpoint(g, k, seed));
    };
    auto hit = detail::first_subset(pool, 1, int(pool.size()), opts.budget, consumed,
                                    opts.workers, pred);
    // The full component always forces itself, so a hit is guaranteed.
    res.value += hit->cardinality;
    res.witness |= detail::set_from_members(g.order(), hit->members);
  }
  res.nodes_explored = consumed;
  return res;
}

/// Smallest set s with N[s] forcing the whole graph. On a connected piece with
/// max degree <= k+1 any single vertex works; on a connected piece with max
/// degree >= k+2 some minimum set avoids vertices of degree < k+2, so the
/// candidate pool shrinks accordingly.
inline SolveResult min_k_power_dominating(const Graph& g, int k, const SolveOptions& opts = {}) {
  detail::require_k(k);
  SolveResult res;
  res.witness = VertexSet(g.order());
  std::uint64_t consumed = 0;
  bool any_restricted = false;
  bool any_direct = false;
  std::vector<int> restricted_union;
  for (const VertexSet& comp : components(g)) {
    int comp_max_deg = 0;
    comp.for_each([&](int v) { comp_max_deg = std::max(comp_max_deg, g.degree(v)); });
    if (opts.use_degree_pruning && comp_max_deg <= k + 1) {
      // Connected piece of maximum degree <= k+1: any single vertex seeds a
      // closure that sweeps the piece; take the smallest id (which is also
      // what full enumeration would return first).
      res.value += 1;
      res.witness.insert(comp.first());
      consumed += 1;
      any_direct = true;
      continue;
    }
    std::vector<int> pool;
    if (opts.use_degree_pruning) {
      comp.for_each([&](int v) {
        if (g.degree(v) >= k + 2) pool.push_back(v);
      });
      if (int(pool.size()) < comp.size()) {
        any_restricted = true;
        restricted_union.insert(restricted_union.end(), pool.begin(), pool.end());
      }
    } else {
      pool = comp.to_vector();
    }
    auto pred = [&](const std::vector<int>& members) {
      VertexSet seed = detail::set_from_members(g.order(), members);
      return comp.is_subset_of(detail::run_to_fixpoint(g, k, closed_neighborhood(g, seed)));
    };
    auto hit = detail::first_subset(pool, 1, int(pool.size()), opts.budget, consumed,
                                    opts.workers, pred);
    res.value += hit->cardinality;
    res.witness |= detail::set_from_members(g.order(), hit->members);
  }
  res.nodes_explored = consumed;
  if (!opts.use_degree_pruning) {
    res.pruning_note = "degree pruning disabled; full pool searched";
  } else if (any_restricted) {
    std::sort(restricted_union.begin(), restricted_union.end());
    res.pruned_pool = std::move(restricted_union);
    res.pruning_note = "pool restricted to vertices of degree >= k+2";
  } else if (any_direct) {
    res.pruning_note = "components with max degree <= k+1 seeded from a single vertex";
  }
  return res;
}

/// Exact minimum dominating set via plain coverage enumeration. This is an
/// independent route: it never touches the propagation engine and must agree
/// with min_k_power_dominating at k = 0.
inline SolveResult min_dominating(const Graph& g, const SolveOptions& opts = {}) {
  SolveResult res;
  res.witness = VertexSet(g.order());
  std::uint64_t consumed = 0;
  for (const VertexSet& comp : components(g)) {
    std::vector<int> pool = comp.to_vector();
    auto pred = [&](const std::vector<int>& members) {
      VertexSet seed = detail::set_from_members(g.order(), members);
      return comp.is_subset_of(closed_neighborhood(g, seed));
    };
    auto hit = detail::first_subset(pool, 1, int(pool.size()), opts.budget, consumed,
                                    opts.workers, pred);
    res.value += hit->cardinality;
    res.witness |= detail::set_from_members(g.order(), hit->members);
  }
  res.nodes_explored = consumed;
  return res;
}

/// Neighbors of v that no other member of s reaches and that lie outside s:
/// { x in N(v) : x not in N[s \ {v}], x not in s }.
inline VertexSet external_private_neighbors(const Graph& g, const VertexSet& s, int v) {
  require_universe(g, s, "external_private_neighbors");
  if (!s.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not a member of the given set");
  }
  VertexSet others = s;
  others.erase(v);
  VertexSet out = g.adjacency(v);
  out -= closed_neighborhood(g, others);
  out -= s;
  return out;
}

/// Minimum k-power dominating set in which every member keeps at least k+1
/// external private neighbors. Two phases: compute the minimum value, then
/// scan full-pool subsets of that size for the private-neighbor condition.
inline SolveResult min_k_pds_with_external_privates(const Graph& g, int k,
                                                    const SolveOptions& opts = {}) {
  detail::require_k(k);
  if (!is_connected(g)) {
    throw PreconditionError("requires a connected graph");
  }
  if (degree_stats(g).max_degree < k + 2) {
    throw PreconditionError("requires max degree >= k+2");
  }
  SolveResult base = min_k_power_dominating(g, k, opts);
  std::uint64_t consumed = base.nodes_explored;
  std::vector<int> pool(std::size_t(g.order()));
  for (int v = 0; v < g.order(); ++v) pool[std::size_t(v)] = v;
  auto pred = [&](const std::vector<int>& members) {
    VertexSet seed = detail::set_from_members(g.order(), members);
    if (detail::run_to_fixpoint(g, k, closed_neighborhood(g, seed)).size() != g.order()) {
      return false;
    }
    for (int u : members) {
      if (external_private_neighbors(g, seed, u).size() < k + 1) return false;
    }
    return true;
  };
  auto hit = detail::first_subset(pool, base.value, base.value, opts.budget, consumed,
                                  opts.workers, pred);
  if (!hit) {
    throw std::logic_error(
        "no minimum k-power dominating set with k+1 external private neighbors per member "
        "was found; the solver or the propagation engine is buggy");
  }
  SolveResult res;
  res.value = hit->cardinality;
  res.witness = detail::set_from_members(g.order(), hit->members);
  res.nodes_explored = consumed;
  res.pruning_note = "minimum value from the standard solve, then a full-pool scan filtered by "
                     "the external private neighbor condition";
  return res;
}

/// Turns a k-power dominating set with >= k+1 external private neighbors per
/// member into a forcing set: keep every closed neighborhood minus the k
/// smallest-id external privates of each member. The result is verified
/// before it is returned.
inline VertexSet forcing_set_from_pds(const Graph& g, int k, const VertexSet& s) {
  detail::require_k(k);
  require_universe(g, s, "forcing_set_from_pds");
  if (s.empty()) throw PreconditionError("seed set is empty");
  if (power_terminal(g, k, s).size() != g.order()) {
    throw PreconditionError("set is not a k-power dominating set");
  }
  VertexSet b(g.order());
  std::string deficient;
  s.for_each([&](int u) {
    VertexSet privates = external_private_neighbors(g, s, u);
    if (privates.size() < k + 1 && deficient.empty()) {
      deficient = "vertex " + std::to_string(u) + " has only " + std::to_string(privates.size()) +
                  " external private neighbors; k+1 = " + std::to_string(k + 1) + " are required";
    }
    VertexSet keep = g.adjacency(u);
    keep.insert(u);
    int dropped = 0;
    privates.for_each([&](int x) {
      if (dropped < k) {
        keep.erase(x);
        ++dropped;
      }
    });
    b |= keep;
  });
  if (!deficient.empty()) throw PreconditionError(deficient);
  if (forcing_terminal(g, k, b).size() != g.order()) {
    throw std::logic_error("constructed neighborhood union fails to force the graph; "
                           "the construction or the propagation engine is buggy");
  }
  return b;
}

}  // namespace kforce
