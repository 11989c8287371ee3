#include "ridepool/ils.h"

namespace ridepool {

Solution recombine(const Instance& instance, const Solution& solution,
                   const std::vector<VehicleId>& vehicles) {
  std::vector<VehicleId> fleet = vehicles;
  if (fleet.empty()) {
    for (const Vehicle& v : instance.vehicles()) {
      fleet.push_back(v.id);
    }
  }
  const std::vector<Block> blocks = blocks_from_solution(instance, solution);
  // Connection limits are in meters and seconds, so they only apply to the
  // ride-hailing setting.
  std::optional<ConnectionLimits> limits;
  if (!instance.route_end()) {
    limits = ConnectionLimits{};
  }
  const DispatchGraph graph = build_graph(instance, blocks, fleet, limits);
  const PathSet paths = kdspp(graph, fleet.size());
  return assemble(instance, graph, blocks, paths);
}

} // namespace ridepool
