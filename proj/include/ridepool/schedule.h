#pragma once

#include "ridepool/instance.h"

#include <span>
#include <vector>

namespace ridepool {

// Earliest-departure timing of one route.
struct Schedule {
  std::vector<Time> arrival;
  std::vector<Time> departure;
  // Arrival at the route end node; only meaningful for closed routes.
  Time end_arrival = 0;
  bool feasible = true;
  // Index into the visits of the first late arrival, or visits.size() for a
  // late return to the route end. Unset while feasible.
  std::size_t first_violation = 0;
};

// visits[0] must be a vehicle start node. Departure at each node is
// max(arrival, window open); infeasible once an arrival exceeds its close.
// Propagation continues past violations.
Schedule propagate_schedule(const Instance& instance, std::span<const NodeId> visits);

} // namespace ridepool
