#include <catch2/catch_amalgamated.hpp>

#include "kforce/generators.hpp"
#include "kforce/solvers.hpp"
#include "kforce/transforms.hpp"
#include "test_util.hpp"

using namespace kforce;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("pendant augmentation preserves member degrees") {
  Graph g = path(4);
  XHatResult xh = build_xhat(g, VertexSet::of(4, {1, 2}));
  REQUIRE(xh.graph.order() == 4);
  REQUIRE(xh.core_ids.to_vector() == std::vector<int>{0, 1});
  REQUIRE(xh.original_ids == std::vector<int>{1, 2});
  REQUIRE(xh.pendant_map == std::vector<std::vector<int>>{{2}, {3}});
  REQUIRE(xh.source_order == 4);
  REQUIRE(xh.graph.degree(0) == g.degree(1));
  REQUIRE(xh.graph.degree(1) == g.degree(2));
  REQUIRE(xh.graph.degree(2) == 1);
  REQUIRE(xh.graph.degree(3) == 1);

  REQUIRE(map_to_original(xh, VertexSet::of(4, {0, 1})).to_vector() == std::vector<int>{1, 2});
  REQUIRE_THROWS_WITH(map_to_original(xh, VertexSet::of(4, {2})),
                      ContainsSubstring("cannot map pendant vertex 2"));
  REQUIRE_THROWS_AS(build_xhat(g, VertexSet(4)), EmptySetError);
}

TEST_CASE("augmentation carries labels on the members") {
  Graph g(3, {{0, 1}, {1, 2}}, {"left", "mid", "right"});
  XHatResult xh = build_xhat(g, VertexSet::of(3, {1}));
  REQUIRE(xh.graph.order() == 3);  // the member plus two pendants
  REQUIRE(xh.graph.label(0) == "mid");
  REQUIRE(xh.graph.label(1).empty());
  REQUIRE(xh.graph.label(2).empty());
}

TEST_CASE("one clique of the two-clique gadget augments to a triangle with pendants") {
  Graph g = gadget_uq(2, 2).graph;
  VertexSet x = gadget_uq(2, 2).x;
  REQUIRE(g.order() == 8);
  REQUIRE(x.to_vector() == std::vector<int>{5, 6, 7});
  XHatResult xh = build_xhat(g, x);
  REQUIRE(xh.graph.order() == 6);
  for (int core = 0; core < 3; ++core) {
    REQUIRE(xh.graph.degree(core) == 3);
    REQUIRE(xh.pendant_map[std::size_t(core)].size() == 1);
  }
  auto [value, witness] = min_core_pds_witness(xh, 2);
  REQUIRE(value == 1);
  REQUIRE(witness.is_subset_of(xh.core_ids));
}

TEST_CASE("contraction bounds are tight from above on the two-clique gadget") {
  Gadget u = gadget_uq(2, 2);
  ContractionBoundResult r = pd_contraction_bounds(u.graph, 2, u.x);
  REQUIRE(r.contracted_value == 1);
  REQUIRE(r.xhat_value == 1);
  REQUIRE(r.interval.lower == 1);
  REQUIRE(r.interval.upper == 2);
  REQUIRE(r.interval.lower_ref == "max(pdk(G/X) - 1, 1)");
  REQUIRE(r.interval.upper_ref == "pdk(G/X) + pdk(xhat(X))");
  int actual = min_k_power_dominating(u.graph, 2).value;
  REQUIRE(actual == 2);
  REQUIRE(actual == r.interval.upper);  // upper bound met with equality
  REQUIRE(r.interval.witness_upper.has_value());
  REQUIRE(is_k_power_dominating_set(u.graph, 2, *r.interval.witness_upper));
  REQUIRE(r.interval.witness_upper->size() == r.interval.upper);
}

TEST_CASE("contraction bounds are tight from below on the cycle gadget") {
  Gadget l = gadget_lq(2, 2);
  REQUIRE(l.graph.order() == 11);
  REQUIRE(l.x.to_vector() == std::vector<int>{0, 1, 2, 3});

  LowDegreeBoundResult r = pd_low_degree_bounds(l.graph, 2, l.x);
  REQUIRE(r.contracted_value == 2);
  REQUIRE(r.component_count == 1);
  REQUIRE(r.interval.lower == 1);
  REQUIRE(r.interval.upper == 3);
  REQUIRE(r.interval.upper_ref == "pdk(G/X) + components(G[X])");
  int actual = min_k_power_dominating(l.graph, 2).value;
  REQUIRE(actual == 1);
  REQUIRE(actual == r.interval.lower);  // lower bound met with equality
  REQUIRE(is_k_power_dominating_set(l.graph, 2, *r.interval.witness_upper));
}

TEST_CASE("low-degree path version of the gadget shows the same slack") {
  Gadget l = gadget_lq(1, 2);
  REQUIRE(l.graph.order() == 9);
  REQUIRE(l.x.to_vector() == std::vector<int>{1, 3, 5});
  ContractionBoundResult r = pd_contraction_bounds(l.graph, 1, l.x);
  REQUIRE(r.contracted_value == 2);
  REQUIRE(r.interval.lower == 1);
  REQUIRE(min_k_power_dominating(l.graph, 1).value == 1);
}

TEST_CASE("star-of-branches gadget stretches the upper bound gap") {
  for (int c = 1; c <= 3; ++c) {
    Gadget t = gadget_tkc(1, c);
    REQUIRE(t.graph.order() == 1 + c * (1 + 3));
    int actual = min_k_power_dominating(t.graph, 1).value;
    REQUIRE(actual == std::max(1, c));
    ContractionBoundResult r = pd_contraction_bounds(t.graph, 1, t.x);
    REQUIRE(r.contracted_value == 1);
    REQUIRE(r.xhat_value == std::max(1, c));
    REQUIRE(r.interval.lower == 1);
    REQUIRE(actual - r.interval.lower == std::max(1, c) - 1);
  }
}

TEST_CASE("low-degree bound preconditions") {
  REQUIRE_THROWS_WITH(pd_low_degree_bounds(path(4), 0, VertexSet::of(4, {1})),
                      ContainsSubstring("vertex 1 has degree 2 > k+1 = 1"));
  REQUIRE_THROWS_AS(pd_low_degree_bounds(path(4), 1, VertexSet(4)), EmptySetError);
  REQUIRE_THROWS_WITH(pd_low_degree_bounds(Graph(4, {{0, 1}, {2, 3}}), 1, VertexSet::of(4, {0})),
                      ContainsSubstring("requires a connected graph"));
}

TEST_CASE("low-degree bound counts induced pieces") {
  Graph g = path(6);
  LowDegreeBoundResult r = pd_low_degree_bounds(g, 1, VertexSet::of(6, {0, 1, 4}));
  REQUIRE(r.component_count == 2);
  REQUIRE(r.contracted_value == 1);
  REQUIRE(r.interval.upper == 3);
  REQUIRE(is_k_power_dominating_set(g, 1, *r.interval.witness_upper));
}

TEST_CASE("contracting a low-degree connected set never hurts at k = 1") {
  MonotoneContractionResult a = pd_contraction_monotone_k1(path(6), VertexSet::of(6, {2, 3}));
  REQUIRE(a.holds);
  REQUIRE(a.value_g == 1);
  REQUIRE(a.value_gx == 1);

  MonotoneContractionResult b = pd_contraction_monotone_k1(cycle(6), VertexSet::all(6));
  REQUIRE(b.holds);

  REQUIRE_THROWS_WITH(pd_contraction_monotone_k1(star(4), VertexSet::of(5, {0})),
                      ContainsSubstring("vertex 0 has degree 4 > 2"));
  REQUIRE_THROWS_WITH(pd_contraction_monotone_k1(path(6), VertexSet::of(6, {0, 3})),
                      ContainsSubstring("the induced subgraph on X must be connected"));
  REQUIRE_THROWS_AS(pd_contraction_monotone_k1(path(6), VertexSet(6)), EmptySetError);
}

TEST_CASE("forcing contraction bound reports an unusable augmentation honestly") {
  // Augmenting a star center reproduces the star; all of its minimum forcing
  // seeds lean on leaves, so the hypothesis fails and no interval is emitted.
  ZfContractionBoundResult r = zf_contraction_bounds(star(4), 1, VertexSet::of(5, {0}));
  REQUIRE_FALSE(r.hypothesis.holds);
  REQUIRE(r.hypothesis.detail == "every minimum forcing seed of the augmented set uses a pendant");
  REQUIRE(r.xhat_value == 3);
  REQUIRE(r.boundary_size == 4);
  REQUIRE_FALSE(r.interval.has_value());
  REQUIRE_FALSE(r.contracted_value.has_value());
}

TEST_CASE("forcing contraction bound with a small boundary") {
  Graph g = path(6);
  ZfContractionBoundResult r = zf_contraction_bounds(g, 1, VertexSet::of(6, {0, 1, 2}));
  REQUIRE(r.hypothesis.holds);
  REQUIRE(r.hypothesis.detail == "a minimum forcing seed of the augmented set avoids pendants");
  REQUIRE(r.boundary_size == 1);
  REQUIRE(r.xhat_value == 1);
  REQUIRE(r.contracted_value == 1);
  REQUIRE(r.interval->lower == 1);
  REQUIRE(r.interval->upper == 2);
  REQUIRE(r.interval->lower_ref == "max(zk(G/X) - 1, 1)");
  int actual = min_k_forcing(g, 1).value;
  REQUIRE(r.interval->lower <= actual);
  REQUIRE(actual <= r.interval->upper);
}

TEST_CASE("forcing contraction bound with a boundary wider than k") {
  // Triangle with one pendant hanging off each of two corners. Augmenting the
  // triangle keeps a pendant-free minimum seed, and the boundary has size 2.
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
  ZfContractionBoundResult r = zf_contraction_bounds(g, 1, VertexSet::of(5, {0, 1, 2}));
  REQUIRE(r.hypothesis.holds);
  REQUIRE(r.boundary_size == 2);
  REQUIRE(r.xhat_value == 2);
  REQUIRE(r.contracted_value == 1);
  REQUIRE(r.interval->lower_ref == "max(zk(G/X) - |N[X] \\ X| + k, 1)");
  REQUIRE(r.interval->lower == 1);
  REQUIRE(r.interval->upper == 3);
  int actual = min_k_forcing(g, 1).value;
  REQUIRE(actual == 2);
  REQUIRE(r.interval->lower <= actual);
  REQUIRE(actual <= r.interval->upper);
}

TEST_CASE("partition validation rejects malformed partitions") {
  Graph g = path(4);
  REQUIRE_THROWS_WITH(validate_partition(g, PartitionSpec{}),
                      ContainsSubstring("partition has no parts"));
  REQUIRE_THROWS_WITH(
      validate_partition(g, PartitionSpec{{VertexSet::of(4, {0, 1}), VertexSet(4)}}),
      ContainsSubstring("partition part 1 is empty"));
  REQUIRE_THROWS_WITH(
      validate_partition(g, PartitionSpec{{VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2})}}),
      ContainsSubstring("partition part 1 overlaps an earlier part"));
  REQUIRE_THROWS_WITH(
      validate_partition(g, PartitionSpec{{VertexSet::of(4, {0, 1}), VertexSet::of(4, {2})}}),
      ContainsSubstring("partition does not cover every vertex"));
}

TEST_CASE("power-domination partition bound sums augmented part solves") {
  Graph k5 = complete(5);
  PartitionBoundResult whole = pd_partition_bound(k5, 1, PartitionSpec{{VertexSet::all(5)}}, 1);
  REQUIRE(whole.hypotheses_hold);
  REQUIRE(whole.bound == 1);
  REQUIRE(whole.witness->to_vector() == std::vector<int>{0});

  Graph k4 = complete(4);
  PartitionSpec singletons;
  for (int v = 0; v < 4; ++v) singletons.parts.push_back(VertexSet::of(4, {v}));
  PartitionBoundResult r = pd_partition_bound(k4, 1, singletons, 2);
  REQUIRE(r.bound == 4);
  REQUIRE(r.witness->size() == 4);
  REQUIRE(r.parts.size() == 4);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(r.parts[std::size_t(i)].index == i);
    REQUIRE(r.parts[std::size_t(i)].value == 1);
    REQUIRE(r.parts[std::size_t(i)].witness.to_vector() == std::vector<int>{i});
    REQUIRE(r.parts[std::size_t(i)].hypothesis_ok);
  }
  REQUIRE(*r.bound >= min_k_power_dominating(k4, 1).value);
}

TEST_CASE("partition bounds are independent of the worker count") {
  Graph g = gadget_uq(2, 2).graph;
  PartitionSpec spec;
  spec.parts.push_back(VertexSet::of(8, {0, 1, 2, 3}));
  spec.parts.push_back(VertexSet::of(8, {4, 5, 6, 7}));
  PartitionBoundResult a = pd_partition_bound(g, 2, spec, 1);
  PartitionBoundResult b = pd_partition_bound(g, 2, spec, 3);
  REQUIRE(a.bound == b.bound);
  REQUIRE(*a.witness == *b.witness);
  REQUIRE(a.parts.size() == b.parts.size());
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    REQUIRE(a.parts[i].value == b.parts[i].value);
    REQUIRE(a.parts[i].witness == b.parts[i].witness);
    REQUIRE(a.parts[i].note == b.parts[i].note);
  }
}

TEST_CASE("forcing partition bound reports failing parts and withholds the bound") {
  Graph g = star(3);
  PartitionSpec spec;
  spec.parts.push_back(VertexSet::of(4, {0}));
  spec.parts.push_back(VertexSet::of(4, {1, 2, 3}));
  PartitionBoundResult r = zf_partition_bound(g, 1, spec, 2);
  REQUIRE_FALSE(r.hypotheses_hold);
  REQUIRE_FALSE(r.bound.has_value());
  REQUIRE_FALSE(r.witness.has_value());
  REQUIRE_FALSE(r.parts[0].hypothesis_ok);
  REQUIRE(r.parts[0].note == "every minimum forcing seed of the augmented part uses a pendant");
  REQUIRE(r.parts[1].hypothesis_ok);
  REQUIRE(r.parts[1].note == "a minimum forcing seed of the augmented part avoids pendants");
  REQUIRE(r.parts[1].value == 3);
}

TEST_CASE("forcing partition bound sums part solves when every part qualifies") {
  Graph g = path(6);
  PartitionSpec spec;
  spec.parts.push_back(VertexSet::of(6, {0, 1, 2}));
  spec.parts.push_back(VertexSet::of(6, {3, 4, 5}));
  PartitionBoundResult r = zf_partition_bound(g, 1, spec, 2);
  REQUIRE(r.hypotheses_hold);
  REQUIRE(r.bound == 2);
  REQUIRE(r.witness->to_vector() == std::vector<int>{0, 5});
  REQUIRE(is_k_forcing_set(g, 1, *r.witness));
  REQUIRE(*r.bound >= min_k_forcing(g, 1).value);
}

TEST_CASE("forcing partition bound on the depth-3 recursive family") {
  // Three depth-1 blocks. Every augmented block admits a pendant-free minimum
  // seed, so the bound applies; it is valid but not tight (9 against a true
  // forcing number of 6), which is exactly what the summing argument promises.
  Graph g = sierpinski(3, 3);
  PartitionSpec spec;
  for (int b = 0; b < 3; ++b) {
    std::vector<int> ids;
    for (int v = 9 * b; v < 9 * (b + 1); ++v) ids.push_back(v);
    spec.parts.push_back(VertexSet::from(g.order(), ids));
  }
  PartitionBoundResult r = zf_partition_bound(g, 1, spec, 1);
  REQUIRE(r.hypotheses_hold);
  REQUIRE(r.bound == 9);
  for (const PartOutcome& part : r.parts) {
    REQUIRE(part.value == 3);
    REQUIRE(part.hypothesis_ok);
  }
  REQUIRE(r.parts[0].witness.to_vector() == std::vector<int>{0, 1, 4});
  REQUIRE(r.witness->to_vector() == std::vector<int>{0, 1, 4, 9, 12, 13, 18, 24, 26});
  REQUIRE(is_k_forcing_set(g, 1, *r.witness));

  int direct = min_k_forcing(g, 1).value;
  REQUIRE(direct == 6);
  REQUIRE(*r.bound >= direct);
}

TEST_CASE("contraction bound pipeline rejects disconnected inputs") {
  Graph g(4, {{0, 1}, {2, 3}});
  REQUIRE_THROWS_WITH(pd_contraction_bounds(g, 1, VertexSet::of(4, {0})),
                      ContainsSubstring("pd_contraction_bounds requires a connected graph"));
  REQUIRE_THROWS_WITH(zf_contraction_bounds(g, 1, VertexSet::of(4, {0})),
                      ContainsSubstring("zf_contraction_bounds requires a connected graph"));
  REQUIRE_THROWS_WITH(pd_partition_bound(g, 1, PartitionSpec{{VertexSet::all(4)}}, 1),
                      ContainsSubstring("pd_partition_bound requires a connected graph"));
}

TEST_CASE("contracting the whole vertex set collapses to a single vertex") {
  Graph g = cycle(5);
  ContractionBoundResult r = pd_contraction_bounds(g, 1, VertexSet::all(5));
  REQUIRE(r.contracted_value == 1);
  REQUIRE(r.xhat_value == min_k_power_dominating(g, 1).value);
  REQUIRE(is_k_power_dominating_set(g, 1, *r.interval.witness_upper));
}
