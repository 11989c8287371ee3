#include "ridepool/schedule.h"

#include <algorithm>

namespace ridepool {

Schedule propagate_schedule(const Instance& instance, std::span<const NodeId> visits) {
  Schedule s;
  if (visits.empty()) {
    return s;
  }
  s.arrival.resize(visits.size());
  s.departure.resize(visits.size());

  const Node& start = instance.node(visits[0]);
  s.arrival[0] = start.open;
  s.departure[0] = start.open;
  for (std::size_t i = 1; i < visits.size(); ++i) {
    const Node& n = instance.node(visits[i]);
    s.arrival[i] = s.departure[i - 1] + instance.travel(visits[i - 1], visits[i]);
    s.departure[i] = std::max(s.arrival[i], n.open);
    if (s.feasible && s.arrival[i] > n.close) {
      s.feasible = false;
      s.first_violation = i;
    }
  }
  if (const auto& end = instance.route_end()) {
    s.end_arrival = s.departure.back() + instance.travel(visits.back(), *end);
    if (s.feasible && s.end_arrival > instance.node(*end).close) {
      s.feasible = false;
      s.first_violation = visits.size();
    }
  }
  return s;
}

} // namespace ridepool
