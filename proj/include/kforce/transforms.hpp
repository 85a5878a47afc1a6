#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kforce/error.hpp"
#include "kforce/graph.hpp"
#include "kforce/propagation.hpp"
#include "kforce/solvers.hpp"

namespace kforce {

/// Pendant augmentation of an induced subgraph: G[X] plus, for each member x,
/// one fresh degree-1 neighbor per edge from x out of X. Core vertices keep
/// their relative order and occupy ids 0..|X|-1; pendants follow, grouped by
/// owner in ascending core order. Every core vertex keeps its G-degree.
struct XHatResult {
  Graph graph;
  /// Ids of the augmented graph occupied by members of X.
  VertexSet core_ids;
  /// core id -> id of the same vertex in the source graph.
  std::vector<int> original_ids;
  /// core id -> ids of that vertex's added pendants.
  std::vector<std::vector<int>> pendant_map;
  /// Order of the source graph (for mapping witnesses back).
  int source_order = 0;
};

inline XHatResult build_xhat(const Graph& g, const VertexSet& x) {
  require_universe(g, x, "build_xhat");
  if (x.empty()) throw EmptySetError("cannot augment an empty vertex set");
  std::vector<int> members = x.to_vector();
  const int core = int(members.size());
  std::vector<int> core_id(std::size_t(g.order()), -1);
  for (int i = 0; i < core; ++i) core_id[std::size_t(members[std::size_t(i)])] = i;

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> pendant_map(static_cast<std::size_t>(core));
  int order = core;
  for (int i = 0; i < core; ++i) {
    int v = members[std::size_t(i)];
    g.adjacency(v).for_each([&](int w) {
      if (x.contains(w)) {
        if (w > v) edges.emplace_back(i, core_id[std::size_t(w)]);
      } else {
        edges.emplace_back(i, order);
        pendant_map[std::size_t(i)].push_back(order);
        ++order;
      }
    });
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.assign(std::size_t(order), "");
    for (int i = 0; i < core; ++i) labels[std::size_t(i)] = g.label(members[std::size_t(i)]);
  }
  VertexSet core_ids(order);
  for (int i = 0; i < core; ++i) core_ids.insert(i);
  return XHatResult{Graph(order, edges, std::move(labels)), std::move(core_ids),
                    std::move(members), std::move(pendant_map), g.order()};
}

/// Maps a set of core ids of an augmented graph back to source-graph ids.
inline VertexSet map_to_original(const XHatResult& xh, const VertexSet& s) {
  VertexSet out(xh.source_order);
  s.for_each([&](int v) {
    if (!xh.core_ids.contains(v)) {
      throw PreconditionError("cannot map pendant vertex " + std::to_string(v) +
                              " back to the source graph");
    }
    out.insert(xh.original_ids[std::size_t(v)]);
  });
  return out;
}

/// Two-sided bound with the formulas that produced each side and, when the
/// upper bound is constructive, a witness passing the relevant predicate.
struct BoundInterval {
  int lower = 0;
  int upper = 0;
  std::string lower_ref;
  std::string upper_ref;
  std::optional<VertexSet> witness_upper;
};

namespace detail {

/// Lexicographically first size-m subset of the core satisfying pred, or
/// nullopt. pred receives a VertexSet over the augmented graph's universe.
template <typename Pred>
std::optional<VertexSet> lex_first_core_subset(const XHatResult& xh, int m,
                                               const SolveOptions& opts, Pred&& pred) {
  std::vector<int> pool = xh.core_ids.to_vector();
  std::uint64_t consumed = 0;
  auto member_pred = [&](const std::vector<int>& members) {
    return pred(set_from_members(xh.graph.order(), members));
  };
  auto hit = first_subset(pool, m, m, opts.budget, consumed, opts.workers, member_pred);
  if (!hit) return std::nullopt;
  return set_from_members(xh.graph.order(), hit->members);
}

/// Lifts a witness on a contracted graph back to source ids, dropping the
/// contracted vertex (which has no preimage).
inline VertexSet lift_contracted_witness(const ContractionResult& cr, const VertexSet& witness,
                                         int source_order) {
  VertexSet out(source_order);
  for (int v = 0; v < source_order; ++v) {
    int nv = cr.id_map[std::size_t(v)];
    if (nv >= 0 && witness.contains(nv)) out.insert(v);
  }
  return out;
}

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a connected graph");
  }
}

/// Components of the subgraph induced by x, as vertex sets of g.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& x) {
  SubgraphResult sub = induced_subgraph(g, x);
  std::vector<int> back(std::size_t(sub.graph.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (sub.id_map[std::size_t(v)] >= 0) back[std::size_t(sub.id_map[std::size_t(v)])] = v;
  }
  std::vector<VertexSet> out;
  for (const VertexSet& comp : components(sub.graph)) {
    VertexSet mapped(g.order());
    comp.for_each([&](int v) { mapped.insert(back[std::size_t(v)]); });
    out.push_back(std::move(mapped));
  }
  return out;
}

/// Runs fn(0..count-1) on up to `workers` threads, strided; the lowest-index
/// exception wins, so failures are deterministic.
template <typename Fn>
void parallel_for_index(int count, int workers, Fn&& fn) {
  if (count <= 0) return;
  int nthreads = std::max(1, std::min(workers, count));
  if (nthreads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::thread> threads;
  threads.reserve(std::size_t(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t] {
      for (int i = t; i < count; i += nthreads) {
        try {
          fn(i);
        } catch (...) {
          errors[std::size_t(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

/// Value of a minimum power-domination seed of the augmented graph together
/// with the lexicographically first minimum witness that avoids pendants.
/// Such a witness always exists; not finding one means the solver is broken.
inline std::pair<int, VertexSet> min_core_pds_witness(const XHatResult& xh, int k,
                                                      const SolveOptions& opts = {}) {
  SolveResult base = min_k_power_dominating(xh.graph, k, opts);
  auto witness = detail::lex_first_core_subset(xh, base.value, opts, [&](const VertexSet& seed) {
    return is_k_power_dominating_set(xh.graph, k, seed);
  });
  if (!witness) {
    throw std::logic_error("no minimum power-domination seed of the augmented graph avoids "
                           "pendants; the solver or the propagation engine is buggy");
  }
  return {base.value, *witness};
}

/// Same scan for forcing seeds. Here absence is a legitimate outcome (a star
/// center's pendants are unavoidable, for example), reported as nullopt.
inline std::pair<int, std::optional<VertexSet>> min_core_forcing_witness(
    const XHatResult& xh, int k, const SolveOptions& opts = {}) {
  SolveResult base = min_k_forcing(xh.graph, k, opts);
  auto witness = detail::lex_first_core_subset(xh, base.value, opts, [&](const VertexSet& seed) {
    return is_k_forcing_set(xh.graph, k, seed);
  });
  return {base.value, witness};
}

struct ContractionBoundResult {
  BoundInterval interval;
  int contracted_value = 0;
  int xhat_value = 0;
};

/// Sandwich for the power-domination number of g around the contraction g/X:
/// pd(g/X) - 1 <= pd(g) <= pd(g/X) + pd(xhat(X)). The upper bound's witness
/// is assembled from the two sub-solves and re-verified on g.
inline ContractionBoundResult pd_contraction_bounds(const Graph& g, int k, const VertexSet& x,
                                                    const SolveOptions& opts = {}) {
  detail::require_k(k);
  detail::require_connected(g, "pd_contraction_bounds");
  XHatResult xh = build_xhat(g, x);
  auto [xhat_value, core_witness] = min_core_pds_witness(xh, k, opts);
  ContractionResult cr = contract(g, x);
  SolveResult h = min_k_power_dominating(cr.graph, k, opts);

  VertexSet lifted = detail::lift_contracted_witness(cr, h.witness, g.order());
  lifted |= map_to_original(xh, core_witness);
  if (!is_k_power_dominating_set(g, k, lifted)) {
    throw std::logic_error("assembled contraction witness is not a power-domination seed; "
                           "the transform pipeline is buggy");
  }
  ContractionBoundResult res;
  res.contracted_value = h.value;
  res.xhat_value = xhat_value;
  res.interval.lower = std::max(1, h.value - 1);
  res.interval.upper = h.value + xhat_value;
  res.interval.lower_ref = "max(pdk(G/X) - 1, 1)";
  res.interval.upper_ref = "pdk(G/X) + pdk(xhat(X))";
  res.interval.witness_upper = std::move(lifted);
  return res;
}

struct LowDegreeBoundResult {
  BoundInterval interval;
  int contracted_value = 0;
  int component_count = 0;
};

/// When every member of X has degree <= k+1 the augmented solve collapses to
/// counting components of G[X]: pd(g) <= pd(g/X) + c(G[X]), witnessed by the
/// lifted contraction witness plus one seed per component.
inline LowDegreeBoundResult pd_low_degree_bounds(const Graph& g, int k, const VertexSet& x,
                                                 const SolveOptions& opts = {}) {
  detail::require_k(k);
  detail::require_connected(g, "pd_low_degree_bounds");
  require_universe(g, x, "pd_low_degree_bounds");
  if (x.empty()) throw EmptySetError("cannot bound with an empty vertex set");
  std::string offender;
  x.for_each([&](int v) {
    if (g.degree(v) > k + 1 && offender.empty()) {
      offender = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                 " > k+1 = " + std::to_string(k + 1);
    }
  });
  if (!offender.empty()) throw PreconditionError(offender);

  ContractionResult cr = contract(g, x);
  SolveResult h = min_k_power_dominating(cr.graph, k, opts);
  std::vector<VertexSet> comps = detail::components_within(g, x);

  VertexSet witness = detail::lift_contracted_witness(cr, h.witness, g.order());
  for (const VertexSet& comp : comps) witness.insert(comp.first());
  if (!is_k_power_dominating_set(g, k, witness)) {
    throw std::logic_error("low-degree contraction witness is not a power-domination seed; "
                           "the transform pipeline is buggy");
  }
  LowDegreeBoundResult res;
  res.contracted_value = h.value;
  res.component_count = int(comps.size());
  res.interval.lower = std::max(1, h.value - 1);
  res.interval.upper = h.value + int(comps.size());
  res.interval.lower_ref = "max(pdk(G/X) - 1, 1)";
  res.interval.upper_ref = "pdk(G/X) + components(G[X])";
  res.interval.witness_upper = std::move(witness);
  return res;
}

struct MonotoneContractionResult {
  int value_g = 0;
  int value_gx = 0;
  bool holds = false;
};

/// k = 1 only: contracting a connected X whose members all have degree <= 2
/// never increases the power-domination number. A false `holds` is a bug.
inline MonotoneContractionResult pd_contraction_monotone_k1(const Graph& g, const VertexSet& x,
                                                            const SolveOptions& opts = {}) {
  detail::require_connected(g, "pd_contraction_monotone_k1");
  require_universe(g, x, "pd_contraction_monotone_k1");
  if (x.empty()) throw EmptySetError("cannot contract an empty vertex set");
  std::string offender;
  x.for_each([&](int v) {
    if (g.degree(v) > 2 && offender.empty()) {
      offender = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                 " > 2";
    }
  });
  if (!offender.empty()) throw PreconditionError(offender);
  if (detail::components_within(g, x).size() != 1) {
    throw PreconditionError("the induced subgraph on X must be connected");
  }
  MonotoneContractionResult res;
  res.value_g = min_k_power_dominating(g, 1, opts).value;
  res.value_gx = min_k_power_dominating(contract(g, x).graph, 1, opts).value;
  res.holds = res.value_gx <= res.value_g;
  return res;
}

struct HypothesisReport {
  bool holds = false;
  std::string detail;
};

struct ZfContractionBoundResult {
  /// Present only when the hypothesis holds.
  std::optional<BoundInterval> interval;
  HypothesisReport hypothesis;
  std::optional<int> contracted_value;
  int xhat_value = 0;
  int boundary_size = 0;
};

/// Forcing-number analogue of the contraction sandwich. It only applies when
/// some minimum forcing seed of xhat(X) avoids pendants, which is checked by
/// enumeration first; the lower bound weakens with the boundary size.
inline ZfContractionBoundResult zf_contraction_bounds(const Graph& g, int k, const VertexSet& x,
                                                      const SolveOptions& opts = {}) {
  detail::require_k(k);
  detail::require_connected(g, "zf_contraction_bounds");
  XHatResult xh = build_xhat(g, x);
  auto [xhat_value, core_witness] = min_core_forcing_witness(xh, k, opts);

  ZfContractionBoundResult res;
  res.xhat_value = xhat_value;
  VertexSet boundary = closed_neighborhood(g, x);
  boundary -= x;
  res.boundary_size = boundary.size();
  if (!core_witness) {
    res.hypothesis.holds = false;
    res.hypothesis.detail = "every minimum forcing seed of the augmented set uses a pendant";
    return res;
  }
  res.hypothesis.holds = true;
  res.hypothesis.detail = "a minimum forcing seed of the augmented set avoids pendants";

  SolveResult h = min_k_forcing(contract(g, x).graph, k, opts);
  res.contracted_value = h.value;
  BoundInterval interval;
  if (res.boundary_size <= k) {
    interval.lower = std::max(1, h.value - 1);
    interval.lower_ref = "max(zk(G/X) - 1, 1)";
  } else {
    interval.lower = std::max(1, h.value - res.boundary_size + k);
    interval.lower_ref = "max(zk(G/X) - |N[X] \\ X| + k, 1)";
  }
  interval.upper = h.value + xhat_value;
  interval.upper_ref = "zk(G/X) + zk(xhat(X))";
  res.interval = std::move(interval);
  return res;
}

/// A partition of the vertex set: disjoint nonempty parts covering V.
struct PartitionSpec {
  std::vector<VertexSet> parts;
};

inline void validate_partition(const Graph& g, const PartitionSpec& spec) {
  if (spec.parts.empty()) throw PreconditionError("partition has no parts");
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const VertexSet& part = spec.parts[i];
    require_universe(g, part, "validate_partition");
    if (part.empty()) {
      throw PreconditionError("partition part " + std::to_string(i) + " is empty");
    }
    if (seen.intersects(part)) {
      throw PreconditionError("partition part " + std::to_string(i) +
                              " overlaps an earlier part");
    }
    seen |= part;
  }
  if (seen.size() != g.order()) {
    throw PreconditionError("partition does not cover every vertex");
  }
}

struct PartOutcome {
  int index = 0;
  int value = 0;
  /// Witness in the ids of the original graph; empty when the part's
  /// hypothesis failed.
  VertexSet witness;
  double seconds = 0.0;
  bool hypothesis_ok = true;
  std::string note;
};

struct PartitionBoundResult {
  /// Disengaged when some part's hypothesis failed (forcing variant only).
  std::optional<int> bound;
  std::optional<VertexSet> witness;
  std::vector<PartOutcome> parts;
  bool hypotheses_hold = true;
};

/// Upper-bounds the power-domination number by summing augmented per-part
/// solves; parts run concurrently and the union witness is re-verified on g.
/// Output is independent of worker count (timings aside).
inline PartitionBoundResult pd_partition_bound(const Graph& g, int k, const PartitionSpec& spec,
                                               int workers, const SolveOptions& opts = {}) {
  detail::require_k(k);
  detail::require_connected(g, "pd_partition_bound");
  validate_partition(g, spec);
  const int r = int(spec.parts.size());
  std::vector<PartOutcome> outcomes(static_cast<std::size_t>(r));
  detail::parallel_for_index(r, workers, [&](int i) {
    auto start = std::chrono::steady_clock::now();
    XHatResult xh = build_xhat(g, spec.parts[std::size_t(i)]);
    auto [value, core_witness] = min_core_pds_witness(xh, k, opts);
    PartOutcome& out = outcomes[std::size_t(i)];
    out.index = i;
    out.value = value;
    out.witness = map_to_original(xh, core_witness);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  PartitionBoundResult res;
  res.parts = std::move(outcomes);
  int bound = 0;
  VertexSet witness(g.order());
  for (const PartOutcome& out : res.parts) {
    bound += out.value;
    witness |= out.witness;
  }
  if (!is_k_power_dominating_set(g, k, witness)) {
    throw std::logic_error("partition witness is not a power-domination seed of the whole "
                           "graph; the transform pipeline is buggy");
  }
  res.bound = bound;
  res.witness = std::move(witness);
  return res;
}

/// Forcing-number analogue. Each part must admit a minimum forcing seed of
/// its augmented graph avoiding pendants; failing parts are reported and no
/// bound is emitted.
inline PartitionBoundResult zf_partition_bound(const Graph& g, int k, const PartitionSpec& spec,
                                               int workers, const SolveOptions& opts = {}) {
  detail::require_k(k);
  detail::require_connected(g, "zf_partition_bound");
  validate_partition(g, spec);
  const int r = int(spec.parts.size());
  std::vector<PartOutcome> outcomes(static_cast<std::size_t>(r));
  detail::parallel_for_index(r, workers, [&](int i) {
    auto start = std::chrono::steady_clock::now();
    XHatResult xh = build_xhat(g, spec.parts[std::size_t(i)]);
    auto [value, core_witness] = min_core_forcing_witness(xh, k, opts);
    PartOutcome& out = outcomes[std::size_t(i)];
    out.index = i;
    out.value = value;
    if (core_witness) {
      out.witness = map_to_original(xh, *core_witness);
      out.note = "a minimum forcing seed of the augmented part avoids pendants";
    } else {
      out.hypothesis_ok = false;
      out.note = "every minimum forcing seed of the augmented part uses a pendant";
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  PartitionBoundResult res;
  res.parts = std::move(outcomes);
  for (const PartOutcome& out : res.parts) {
    if (!out.hypothesis_ok) res.hypotheses_hold = false;
  }
  if (!res.hypotheses_hold) return res;
  int bound = 0;
  VertexSet witness(g.order());
  for (const PartOutcome& out : res.parts) {
    bound += out.value;
    witness |= out.witness;
  }
  if (!is_k_forcing_set(g, k, witness)) {
    throw std::logic_error("partition witness is not a forcing seed of the whole graph; "
                           "the transform pipeline is buggy");
  }
  res.bound = bound;
  res.witness = std::move(witness);
  return res;
}

}  // namespace kforce
