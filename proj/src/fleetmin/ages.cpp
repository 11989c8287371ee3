#include "ridepool/fleetmin.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ridepool {

void PenaltyTable::decay(double lambda) {
  for (auto& rho : rho_) {
    rho = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                      std::floor(lambda * static_cast<double>(rho))));
  }
}

namespace {

std::optional<Insertion> cheapest(const RouteState& state, RequestId r) {
  std::optional<Insertion> best;
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    const auto vid = static_cast<VehicleId>(v);
    if (state.route_empty(vid)) {
      continue;
    }
    auto cand = best_insertion(state, r, vid);
    if (cand && (!best || cand->delta < best->delta)) {
      best = cand;
    }
  }
  return best;
}

std::vector<NodeId> without(std::span<const NodeId> visits, const Instance& inst,
                            RequestId a, RequestId b) {
  std::vector<NodeId> out;
  out.reserve(visits.size());
  for (std::size_t i = 0; i < visits.size(); ++i) {
    const NodeId n = visits[i];
    if (i > 0 && (inst.request_of(n) == a || inst.request_of(n) == b)) {
      continue;
    }
    out.push_back(n);
  }
  return out;
}

struct Ejection {
  VehicleId vehicle = -1;
  RequestId first = -1;
  RequestId second = -1;
  std::vector<NodeId> route;
};

// Minimal-penalty ejection of one request, or of two with a smaller summed
// penalty, that lets `r` in. Ties are broken uniformly by reservoir sampling.
std::optional<Ejection> find_ejection(const RouteState& state, RequestId r,
                                      const PenaltyTable& rho, Rng& rng) {
  const Instance& inst = state.instance();
  std::optional<Ejection> chosen;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t ties = 0;
  auto offer = [&](VehicleId v, RequestId a, RequestId b, std::int64_t penalty) {
    if (penalty > best) {
      return;
    }
    const auto route = without(state.visits(v), inst, a, b);
    const auto ins = best_insertion(inst, route, r);
    if (!ins) {
      return;
    }
    if (penalty < best) {
      best = penalty;
      ties = 0;
    }
    ++ties;
    if (ties == 1 || pick_index(rng, ties) == 0) {
      const Request& req = inst.request(r);
      chosen = Ejection{v, a, b,
                        apply_insertion(route, req.pickup, req.delivery, ins->pickup_after,
                                        ins->delivery_after)};
    }
  };
  std::vector<std::vector<RequestId>> on_route(state.num_vehicles());
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    on_route[v] = state.requests_on(static_cast<VehicleId>(v));
    for (RequestId a : on_route[v]) {
      offer(static_cast<VehicleId>(v), a, -1, rho[a]);
    }
  }
  const std::int64_t single = best;
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    const auto& reqs = on_route[v];
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      for (std::size_t j = i + 1; j < reqs.size(); ++j) {
        const std::int64_t penalty = rho[reqs[i]] + rho[reqs[j]];
        if (penalty < single) {
          offer(static_cast<VehicleId>(v), reqs[i], reqs[j], penalty);
        }
      }
    }
  }
  return chosen;
}

// Empties route `v`; false when the budget runs out first.
bool eliminate(RouteState& state, VehicleId v, const AgesParams& params, PenaltyTable& rho,
               Rng& rng, std::int64_t& perturbations) {
  std::vector<RequestId> stack = state.requests_on(v);
  std::shuffle(stack.begin(), stack.end(), rng);
  state.remove(stack);
  std::size_t min_stack = stack.size();
  std::int64_t spent = 0;
  while (!stack.empty()) {
    if (params.deadline && Clock::now() >= *params.deadline) {
      return false;
    }
    const RequestId r = stack.back();
    stack.pop_back();
    if (auto ins = cheapest(state, r)) {
      state.insert(r, *ins);
    } else {
      rho.increment(r);
      if (auto ej = find_ejection(state, r, rho, rng)) {
        state.set_route(ej->vehicle, std::move(ej->route));
        stack.push_back(ej->first);
        if (ej->second >= 0) {
          stack.push_back(ej->second);
        }
      } else {
        stack.insert(stack.begin(), r);
      }
      perturb(state, params.moves, params.relocate_share, rng, false);
      ++spent;
      ++perturbations;
    }
    if (stack.size() < min_stack) {
      min_stack = stack.size();
      spent = 0;
    }
    if (!stack.empty() && spent >= params.budget) {
      return false;
    }
  }
  return true;
}

} // namespace

AgesResult ages(const Instance& instance, const Solution& solution, const AgesParams& params,
                PenaltyTable& penalties, Rng& rng) {
  AgesResult result{solution, 0, 0};
  if (params.budget <= 0 || !solution.unassigned.empty()) {
    return result;
  }
  penalties.decay(params.decay);
  RouteState state(instance, solution);
  while (state.num_used_vehicles() > 1) {
    std::vector<VehicleId> smallest;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
      const auto vid = static_cast<VehicleId>(v);
      if (state.route_empty(vid)) {
        continue;
      }
      const std::size_t n = state.route_size(vid);
      if (n < fewest) {
        fewest = n;
        smallest.clear();
      }
      if (n == fewest) {
        smallest.push_back(vid);
      }
    }
    const VehicleId v = smallest[pick_index(rng, smallest.size())];
    if (!eliminate(state, v, params, penalties, rng, result.perturbations)) {
      break;
    }
    result.solution = state.to_solution();
    ++result.eliminated;
  }
  return result;
}

} // namespace ridepool
