#include "ridepool/ils.h"

#include <algorithm>

namespace ridepool {

namespace {

std::optional<Insertion> cheapest(const RouteState& state, RequestId r, bool used_only) {
  std::optional<Insertion> best;
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    const auto vid = static_cast<VehicleId>(v);
    if (used_only && state.route_empty(vid)) {
      continue;
    }
    auto cand = best_insertion(state, r, vid);
    if (cand && (!best || cand->delta < best->delta)) {
      best = cand;
    }
  }
  return best;
}

} // namespace

Solution construct_initial(const Instance& instance, Rng& rng, bool open_routes) {
  RouteState state(instance);
  std::vector<RequestId> pool(instance.num_requests());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    pool[i] = static_cast<RequestId>(i);
  }
  std::shuffle(pool.begin(), pool.end(), rng);

  if (open_routes) {
    std::vector<char> placed(pool.size(), 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < state.num_vehicles() && next < pool.size(); ++v) {
      const RequestId r = pool[next++];
      if (auto ins = best_insertion(state, r, static_cast<VehicleId>(v))) {
        state.insert(r, *ins);
        placed[r] = 1;
      }
    }
    for (RequestId r : pool) {
      if (placed[r]) {
        continue;
      }
      if (auto ins = cheapest(state, r, false)) {
        state.insert(r, *ins);
      }
    }
    return state.to_solution();
  }

  for (RequestId r : pool) {
    auto ins = cheapest(state, r, true);
    for (std::size_t v = 0; v < state.num_vehicles() && !ins; ++v) {
      const auto vid = static_cast<VehicleId>(v);
      if (state.route_empty(vid)) {
        ins = best_insertion(state, r, vid);
      }
    }
    if (ins) {
      state.insert(r, *ins);
    }
  }
  return state.to_solution();
}

} // namespace ridepool
