#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kforce/error.hpp"
#include "kforce/vertexset.hpp"

namespace kforce {

/// Simple undirected graph on vertices 0..order-1. Immutable after
/// construction; adjacency is kept as one bitset row per vertex. Parallel
/// edges collapse, self-loops are rejected, the empty graph is rejected.
class Graph {
 public:
  Graph(int order, const std::vector<std::pair<int, int>>& edge_list,
        std::vector<std::string> labels = {}) {
    if (order < 1) throw EmptyGraphError("graph must have at least one vertex");
    if (!labels.empty() && int(labels.size()) != order) {
      throw PreconditionError("label vector size must match graph order");
    }
    order_ = order;
    labels_ = std::move(labels);
    adj_.assign(std::size_t(order), VertexSet(order));
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= order || v < 0 || v >= order) {
        throw InvalidVertexError("edge endpoint " + std::to_string(u < 0 || u >= order ? u : v) +
                                 " out of range [0, " + std::to_string(order) + ")");
      }
      if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
      adj_[std::size_t(u)].insert(v);
      adj_[std::size_t(v)].insert(u);
    }
    degree_.resize(std::size_t(order));
    edge_count_ = 0;
    for (int v = 0; v < order; ++v) {
      degree_[std::size_t(v)] = adj_[std::size_t(v)].size();
      edge_count_ += degree_[std::size_t(v)];
    }
    edge_count_ /= 2;
  }

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  const VertexSet& adjacency(int v) const {
    check(v);
    return adj_[std::size_t(v)];
  }

  bool adjacent(int u, int v) const {
    check(u);
    return adj_[std::size_t(u)].contains(v);
  }

  int degree(int v) const {
    check(v);
    return degree_[std::size_t(v)];
  }

  bool has_labels() const { return !labels_.empty(); }

  const std::string& label(int v) const {
    check(v);
    static const std::string none;
    return has_labels() ? labels_[std::size_t(v)] : none;
  }

  const std::vector<std::string>& labels() const { return labels_; }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(edge_count_));
    for (int u = 0; u < order_; ++u) {
      adj_[std::size_t(u)].for_each([&](int v) {
        if (v > u) out.emplace_back(u, v);
      });
    }
    return out;
  }

  bool operator==(const Graph& o) const {
    return order_ == o.order_ && adj_ == o.adj_ && labels_ == o.labels_;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= order_) {
      throw InvalidVertexError("vertex id " + std::to_string(v) + " out of range [0, " +
                               std::to_string(order_) + ")");
    }
  }

  int order_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
  std::vector<std::string> labels_;
};

inline void require_universe(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.order()) {
    throw InvalidVertexError(std::string(what) + ": vertex set universe " +
                             std::to_string(s.universe()) + " does not match graph order " +
                             std::to_string(g.order()));
  }
}

/// Open neighborhood of a single vertex.
inline VertexSet neighbors(const Graph& g, int v) { return g.adjacency(v); }

/// N[S] = S together with every neighbor of a member.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  require_universe(g, s, "closed_neighborhood");
  VertexSet out = s;
  s.for_each([&](int v) { out |= g.adjacency(v); });
  return out;
}

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> degrees;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  st.degrees.resize(std::size_t(g.order()));
  st.max_degree = 0;
  st.min_degree = g.order();
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    st.degrees[std::size_t(v)] = d;
    st.max_degree = std::max(st.max_degree, d);
    st.min_degree = std::min(st.min_degree, d);
  }
  return st;
}

/// Connected components, ordered by their smallest vertex id.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(g.order());
    comp.insert(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](int u) { next |= g.adjacency(u); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Result of an operation that re-indexes surviving vertices to 0..n'-1.
/// id_map[old] is the new id of a surviving vertex, or -1 if it was removed.
struct SubgraphResult {
  Graph graph;
  std::vector<int> id_map;
};

inline SubgraphResult induced_subgraph(const Graph& g, const VertexSet& x) {
  require_universe(g, x, "induced_subgraph");
  if (x.empty()) throw EmptySetError("induced subgraph needs a nonempty vertex set");
  std::vector<int> ids = x.to_vector();
  std::vector<int> id_map(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) id_map[std::size_t(ids[i])] = int(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : ids) {
    g.adjacency(u).for_each([&](int v) {
      if (v > u && x.contains(v)) edges.emplace_back(id_map[std::size_t(u)], id_map[std::size_t(v)]);
    });
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(ids.size());
    for (int v : ids) labels.push_back(g.label(v));
  }
  return {Graph(int(ids.size()), edges, std::move(labels)), std::move(id_map)};
}

inline SubgraphResult delete_vertices(const Graph& g, const VertexSet& x) {
  require_universe(g, x, "delete_vertices");
  if (x.size() == g.order()) {
    throw PreconditionError("deleting every vertex would leave an empty graph");
  }
  return induced_subgraph(g, VertexSet::all(g.order()) - x);
}

/// Result of contracting a vertex set X into a single new vertex v_X.
/// v_X always receives the largest id in the new graph.
struct ContractionResult {
  Graph graph;
  int contracted_vertex;
  std::vector<int> id_map;
};

inline ContractionResult contract(const Graph& g, const VertexSet& x) {
  require_universe(g, x, "contract");
  if (x.empty()) throw EmptySetError("contraction needs a nonempty vertex set");
  VertexSet boundary = closed_neighborhood(g, x);
  boundary -= x;
  std::vector<int> survivors = (VertexSet::all(g.order()) - x).to_vector();
  std::vector<int> id_map(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < survivors.size(); ++i) id_map[std::size_t(survivors[i])] = int(i);
  const int vx = int(survivors.size());
  std::vector<std::pair<int, int>> edges;
  for (int u : survivors) {
    g.adjacency(u).for_each([&](int v) {
      if (v > u && !x.contains(v)) edges.emplace_back(id_map[std::size_t(u)], id_map[std::size_t(v)]);
    });
  }
  boundary.for_each([&](int w) { edges.emplace_back(id_map[std::size_t(w)], vx); });
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(survivors.size() + 1);
    for (int v : survivors) labels.push_back(g.label(v));
    labels.emplace_back();
  }
  return {Graph(vx + 1, edges, std::move(labels)), vx, std::move(id_map)};
}

/// Internal consistency check: symmetry, no loops, degree bookkeeping.
/// Throws on corruption; used liberally by the test suite.
inline void validate(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.adjacency(v).contains(v)) throw Error("validator: self-loop at " + std::to_string(v));
    if (g.adjacency(v).size() != g.degree(v)) {
      throw Error("validator: degree mismatch at " + std::to_string(v));
    }
    g.adjacency(v).for_each([&](int w) {
      if (!g.adjacency(w).contains(v)) {
        throw Error("validator: asymmetric edge " + std::to_string(v) + "-" + std::to_string(w));
      }
    });
  }
}

}  // namespace kforce
