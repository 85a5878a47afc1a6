#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kforce/error.hpp"
#include "kforce/graph.hpp"

namespace kforce {

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

/// Star with `leaves` leaves: center 0, order leaves+1.
inline Graph star(int leaves) {
  if (leaves < 1) throw PreconditionError("a star needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

/// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("both parts need at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

inline Graph standard_family(const std::string& name, const std::vector<int>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError("family '" + name + "' takes " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "path") {
    want(1);
    return path(params[0]);
  }
  if (name == "cycle") {
    want(1);
    return cycle(params[0]);
  }
  if (name == "complete") {
    want(1);
    return complete(params[0]);
  }
  if (name == "star") {
    want(1);
    return star(params[0]);
  }
  if (name == "complete_bipartite") {
    want(2);
    return complete_bipartite(params[0], params[1]);
  }
  throw PreconditionError("unknown graph family '" + name + "'");
}

namespace gen_detail {

/// Value of the m-digit constant string d…d in base p: d * (p^m - 1)/(p - 1).
inline std::int64_t constant_digits(std::int64_t d, int m, std::int64_t p) {
  std::int64_t v = 0;
  for (int i = 0; i < m; ++i) v = v * p + d;
  return v;
}

inline std::string digit_label(int p, int n, std::int64_t value) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    digits[std::size_t(i)] = int(value % p);
    value /= p;
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (p > 10 && i > 0) out += '.';
    out += std::to_string(digits[std::size_t(i)]);
  }
  return out;
}

}  // namespace gen_detail

/// Iterated clique-replacement graph on all n-digit base-p strings. Vertex
/// ids read as digit strings, most significant first; the id's label is
/// attached. Two vertices are adjacent iff their strings agree above some
/// position r, differ at r, and each is constant below r in the other's r-th
/// digit.
inline Graph sierpinski(int p, int n, int size_cap = 10000) {
  if (p < 2) throw PreconditionError("base p must be at least 2");
  if (n < 1) throw PreconditionError("depth n must be at least 1");
  std::int64_t order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > size_cap) {
      throw PreconditionError("graph would have p^n > " + std::to_string(size_cap) +
                              " vertices; raise the size cap to build it");
    }
  }
  // Level 1 is K_p; level m glues p copies of level m-1 along corner vertices.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) edges.emplace_back(u, v);
  }
  std::int64_t block = 1;
  for (int level = 2; level <= n; ++level) {
    block *= p;  // p^(level-1)
    std::vector<std::pair<int, int>> next;
    next.reserve(edges.size() * std::size_t(p) + std::size_t(p * (p - 1) / 2));
    for (int copy = 0; copy < p; ++copy) {
      std::int64_t shift = copy * block;
      for (auto [u, v] : edges) next.emplace_back(int(u + shift), int(v + shift));
    }
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        std::int64_t u = i * block + gen_detail::constant_digits(j, level - 1, p);
        std::int64_t v = j * block + gen_detail::constant_digits(i, level - 1, p);
        next.emplace_back(int(u), int(v));
      }
    }
    edges = std::move(next);
  }
  std::vector<std::string> labels(static_cast<std::size_t>(order));
  for (std::int64_t v = 0; v < order; ++v) {
    labels[std::size_t(v)] = gen_detail::digit_label(p, n, v);
  }
  return Graph(int(order), edges, std::move(labels));
}

/// Vertices of sierpinski(p, n) whose leftmost digits match the given prefix.
/// An empty prefix selects every vertex.
inline VertexSet prefix_block(int p, int n, const std::vector<int>& prefix) {
  if (p < 2 || n < 1) throw PreconditionError("need p >= 2 and n >= 1");
  if (int(prefix.size()) >= n) {
    throw PreconditionError("prefix of length " + std::to_string(prefix.size()) +
                            " does not denote a block at depth " + std::to_string(n));
  }
  std::int64_t val = 0;
  for (int d : prefix) {
    if (d < 0 || d >= p) {
      throw PreconditionError("prefix digit " + std::to_string(d) + " is outside [0, " +
                              std::to_string(p) + ")");
    }
    val = val * p + d;
  }
  std::int64_t block = 1;
  for (int i = 0; i < n - int(prefix.size()); ++i) block *= p;
  std::int64_t total = block;
  for (int i = 0; i < int(prefix.size()); ++i) total *= p;
  VertexSet out(static_cast<int>(total));
  for (std::int64_t v = val * block; v < (val + 1) * block; ++v) out.insert(int(v));
  return out;
}

/// A generated graph together with the vertex set its construction singles
/// out for contraction experiments.
struct Gadget {
  Graph graph;
  VertexSet x;
};

/// Two (q+2)-cliques joined by the bridge {0, q+2}; the designated set is the
/// far clique minus its bridge endpoint. First clique: 0..q+1, second:
/// q+2..2q+3.
inline Gadget gadget_uq(int k, int q) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (q < k) throw PreconditionError("q must be at least k");
  int order = 2 * q + 4;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < q + 2; ++u) {
    for (int v = u + 1; v < q + 2; ++v) {
      edges.emplace_back(u, v);
      edges.emplace_back(q + 2 + u, q + 2 + v);
    }
  }
  edges.emplace_back(0, q + 2);
  VertexSet x(order);
  for (int v = q + 3; v < order; ++v) x.insert(v);
  return Gadget{Graph(order, edges), std::move(x)};
}

/// Contraction-lower-bound gadget. For k >= 2: a 2q-cycle (ids 0..2q-1), one
/// pendant per cycle vertex (ids 2q..4q-1), and q+1 extra pendants on vertex
/// 2q; the designated set is the cycle. For k = 1: a 7-vertex path 0..6 with
/// q pendants on vertex 0; the designated set is {1, 3, 5}.
inline Gadget gadget_lq(int k, int q) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (q < std::max(k, 1)) throw PreconditionError("q must be at least max(k, 1)");
  std::vector<std::pair<int, int>> edges;
  if (k >= 2) {
    int order = 5 * q + 1;
    for (int i = 0; i + 1 < 2 * q; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, 2 * q - 1);
    for (int i = 0; i < 2 * q; ++i) edges.emplace_back(i, 2 * q + i);
    for (int i = 0; i <= q; ++i) edges.emplace_back(2 * q, 4 * q + i);
    VertexSet x(order);
    for (int i = 0; i < 2 * q; ++i) x.insert(i);
    return Gadget{Graph(order, edges), std::move(x)};
  }
  int order = 7 + q;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < q; ++i) edges.emplace_back(0, 7 + i);
  VertexSet x = VertexSet::of(order, {1, 3, 5});
  return Gadget{Graph(order, edges), std::move(x)};
}

/// Spider tree: center 0, branch vertices 1..c, and k+2 leaves per branch
/// vertex. The designated set is every vertex of degree > 1.
inline Gadget gadget_tkc(int k, int c) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (c < 1) throw PreconditionError("c must be at least 1");
  int order = 1 + c + c * (k + 2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= c; ++i) edges.emplace_back(0, i);
  int next = c + 1;
  for (int i = 1; i <= c; ++i) {
    for (int j = 0; j < k + 2; ++j) edges.emplace_back(i, next++);
  }
  Graph g(order, edges);
  VertexSet x(order);
  for (int v = 0; v < order; ++v) {
    if (g.degree(v) > 1) x.insert(v);
  }
  return Gadget{std::move(g), std::move(x)};
}

/// Path of order r (ids 0..r-1) with p pendants on every path vertex; the
/// pendants of path vertex i are ids r+i*p .. r+(i+1)*p-1.
inline Graph gadget_gpr(int k, int p, int r) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (r < 2) throw PreconditionError("r must be at least 2");
  if (p <= 3 * r + k - 3) {
    throw PreconditionError("p must exceed 3r + k - 3 = " + std::to_string(3 * r + k - 3));
  }
  int order = r + r * p;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < p; ++j) edges.emplace_back(i, r + i * p + j);
  }
  return Graph(order, edges);
}

/// Uniform random graph with the given edge probability, re-sampled until
/// connected (the generator state carries across attempts, so results are a
/// pure function of the seed).
inline Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  if (n < 1) throw EmptyGraphError("graph must have at least one vertex");
  std::mt19937_64 eng(seed);
  // 53-bit uniform draw; avoids distribution classes whose output is
  // implementation-defined.
  auto draw = [&]() { return double(eng() >> 11) * 0x1.0p-53; };
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (draw() < edge_prob) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error("failed to sample a connected graph in " + std::to_string(kMaxAttempts) +
              " attempts (n=" + std::to_string(n) + ", edge probability=" +
              std::to_string(edge_prob) + ")");
}

}  // namespace kforce
