// Tour of the library: build a graph, watch a propagation, solve for the
// minimum seed sets, and bound a larger graph through a contraction.
#include <iostream>

#include "kforce/generators.hpp"
#include "kforce/propagation.hpp"
#include "kforce/serialize.hpp"
#include "kforce/solvers.hpp"
#include "kforce/transforms.hpp"

int main() {
  using namespace kforce;

  // A path on 6 vertices: one endpoint 1-forces the whole path.
  Graph p6 = path(6);
  PropagationTrace trace = forcing_closure(p6, 1, VertexSet::of(6, {0}));
  std::cout << "path endpoint closure succeeds: " << (trace.success ? "yes" : "no") << " in "
            << trace.forcers.size() << " forcing rounds\n";

  // Exact minimum seed sets on a small recursive graph.
  Graph s33 = sierpinski(3, 3);
  SolveResult pd = min_k_power_dominating(s33, 1);
  SolveResult zf = min_k_forcing(s33, 1);
  std::cout << "depth-3 base-3 graph: power domination " << pd.value << ", forcing " << zf.value
            << "\n";
  std::cout << solve_json("gammaPk", 1, pd).dump(2) << "\n";

  // Contraction bound: collapse one depth-2 block and bound the original.
  VertexSet block = prefix_block(3, 3, {0});
  ContractionBoundResult bound = pd_contraction_bounds(s33, 1, block);
  std::cout << "power domination lies in [" << bound.interval.lower << ", "
            << bound.interval.upper << "]\n";
  return 0;
}
