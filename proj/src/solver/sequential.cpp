#include "ridepool/solver.h"

namespace ridepool {

SequentialResult solve_sequential(const Instance& instance, const SequentialParams& params,
                                  Rng& rng) {
  SequentialResult result;
  Hypergraph graph = enumerate_hyperedges(instance, params.rank);
  assign_weights(graph, params.weights, instance);
  result.hyperedges = graph.edges.size();
  const Matching matching = match(graph, params.method, rng);
  const std::vector<Block> blocks = blocks_from_matching(instance, graph, matching, params.policy);
  result.blocks = blocks.size();
  std::vector<VehicleId> fleet;
  for (const Vehicle& v : instance.vehicles()) {
    fleet.push_back(v.id);
  }
  const DispatchGraph dispatch = build_graph(instance, blocks, fleet, params.limits);
  const PathSet paths = kdspp(dispatch, fleet.size());
  result.solution = assemble(instance, dispatch, blocks, paths);
  result.objective = evaluate(result.solution, instance);
  return result;
}

} // namespace ridepool
