#include "ridepool/ils.h"

namespace ridepool {

History::History(std::size_t num_requests)
  : n_(num_requests), after_(num_requests * num_requests, 0),
    same_(num_requests * num_requests, 0) {}

void History::record(const Instance& instance, const Solution& solution) {
  std::vector<RequestId> on_route;
  for (const Route& route : solution.routes) {
    on_route.clear();
    RequestId prev = -1;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      const NodeId n = route.visits[i];
      const RequestId r = instance.request_of(n);
      if (prev >= 0 && prev != r) {
        ++after_[index(prev, r)];
      }
      prev = r;
      if (instance.is_pickup(n)) {
        on_route.push_back(r);
      }
    }
    for (std::size_t a = 0; a < on_route.size(); ++a) {
      for (std::size_t b = a + 1; b < on_route.size(); ++b) {
        ++same_[index(on_route[a], on_route[b])];
        ++same_[index(on_route[b], on_route[a])];
      }
    }
  }
}

} // namespace ridepool
