#include "ridepool/ils.h"

namespace ridepool {

namespace {

VehicleId other_route(const RouteState& state, VehicleId from, bool open_routes, Rng& rng) {
  std::vector<VehicleId> targets;
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    const auto vid = static_cast<VehicleId>(v);
    if (vid != from && (open_routes || !state.route_empty(vid))) {
      targets.push_back(vid);
    }
  }
  return targets.empty() ? -1 : targets[pick_index(rng, targets.size())];
}

bool relocate(RouteState& state, std::span<const RequestId> assigned, bool open_routes,
              Rng& rng) {
  const RequestId r = assigned[pick_index(rng, assigned.size())];
  const VehicleId from = state.vehicle_of(state.instance().request(r).pickup);
  const VehicleId to = other_route(state, from, open_routes, rng);
  if (to < 0) {
    return false;
  }
  const auto options = feasible_insertions(state, r, to);
  if (options.empty()) {
    return false;
  }
  const Insertion at = options[pick_index(rng, options.size())];
  state.remove(r);
  state.insert(r, at);
  return true;
}

bool exchange(RouteState& state, std::span<const RequestId> assigned, Rng& rng) {
  const Instance& inst = state.instance();
  const RequestId a = assigned[pick_index(rng, assigned.size())];
  const RequestId b = assigned[pick_index(rng, assigned.size())];
  const VehicleId va = state.vehicle_of(inst.request(a).pickup);
  const VehicleId vb = state.vehicle_of(inst.request(b).pickup);
  if (va == vb) {
    return false;
  }
  const std::vector<NodeId> old_a(state.visits(va).begin(), state.visits(va).end());
  const std::vector<NodeId> old_b(state.visits(vb).begin(), state.visits(vb).end());
  state.remove(a);
  state.remove(b);
  const auto into_b = feasible_insertions(state, a, vb);
  const auto into_a = feasible_insertions(state, b, va);
  if (into_b.empty() || into_a.empty()) {
    state.set_route(va, old_a);
    state.set_route(vb, old_b);
    return false;
  }
  state.insert(a, into_b[pick_index(rng, into_b.size())]);
  state.insert(b, into_a[pick_index(rng, into_a.size())]);
  return true;
}

} // namespace

std::size_t perturb(RouteState& state, std::size_t moves, double relocate_share, Rng& rng,
                    bool open_routes) {
  const std::vector<RequestId> assigned = state.assigned_requests();
  if (assigned.empty()) {
    return 0;
  }
  std::size_t applied = 0;
  for (std::size_t i = 0; i < moves; ++i) {
    const bool ok = coin(rng, relocate_share) ? relocate(state, assigned, open_routes, rng)
                                              : exchange(state, assigned, rng);
    applied += ok ? 1 : 0;
  }
  return applied;
}

bool revert_to_best(std::int64_t iteration, std::int64_t since_best, Rng& rng) {
  if (iteration <= 0) {
    return false;
  }
  return coin(rng, static_cast<double>(since_best) / static_cast<double>(iteration));
}

} // namespace ridepool
