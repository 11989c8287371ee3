#include "ridepool/rnr.h"

#include <algorithm>

namespace ridepool {

bool Acceptance::accept(const Objective& candidate) {
  bool ok = false;
  if (better(candidate, best_, kind_)) {
    best_ = candidate;
    ok = true;
  } else if (candidate.unassigned > best_.unassigned ||
             (kind_ == ObjectiveKind::fleet_then_cost && candidate.vehicles > best_.vehicles)) {
    ok = false;
  } else if (best_.cost <= 0) {
    ok = candidate.cost <= best_.cost;
  } else {
    const double gap = static_cast<double>(candidate.cost - best_.cost) /
                       static_cast<double>(best_.cost);
    ok = gap < threshold_;
  }
  decay();
  return ok;
}

void Acceptance::decay(std::int64_t steps) {
  threshold_ = std::max(0.0, threshold_ - decrement_ * static_cast<double>(steps));
}

} // namespace ridepool
