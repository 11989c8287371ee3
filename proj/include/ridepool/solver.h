#pragma once

#include "ridepool/dispatch.h"
#include "ridepool/pooling.h"

#include <iosfwd>

namespace ridepool {

struct SequentialParams {
  int rank = 4;
  WeightParams weights;
  MatchingMethod method = MatchingMethod::wsc;
  StartPolicy policy = StartPolicy::earliest;
  std::optional<ConnectionLimits> limits = ConnectionLimits{};
};

struct SequentialResult {
  Solution solution;
  Objective objective;
  std::size_t hyperedges = 0;
  std::size_t blocks = 0;
};

// Pooling then dispatching: hyperedges, weights, matching, one block per
// matched edge, and k-disjoint shortest paths over all vehicles.
SequentialResult solve_sequential(const Instance& instance, const SequentialParams& params,
                                  Rng& rng);

struct RouteStats {
  VehicleId vehicle = 0;
  std::size_t requests = 0;
  int width = 0;         // peak number of requests on board
  std::size_t blocks = 0; // zero-load segments
};

// One entry per used route. The solution must be feasible.
std::vector<RouteStats> route_stats(const Instance& instance, const Solution& solution);

// "metric,mean,max" rows for requests, width and blocks; zeros when no
// route is used.
void write_stats(std::ostream& out, std::span<const RouteStats> stats);

} // namespace ridepool
