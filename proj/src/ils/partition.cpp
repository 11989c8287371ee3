#include "ridepool/ils.h"

#include <algorithm>

namespace ridepool {

std::vector<Subproblem> partition(const Instance& instance, const Solution& solution,
                                  std::size_t nodes, const History& history, Rng& rng) {
  std::vector<VehicleId> order;
  for (const Route& route : solution.routes) {
    order.push_back(route.vehicle);
  }
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Subproblem> parts;
  std::size_t size = 0;
  for (VehicleId v : order) {
    if (parts.empty() || size >= nodes) {
      parts.emplace_back();
      size = 0;
    }
    const Route& route = solution.routes[v];
    parts.back().vehicles.push_back(v);
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      if (instance.is_pickup(route.visits[i])) {
        parts.back().requests.push_back(instance.request_of(route.visits[i]));
      }
    }
    size += route.visits.size();
  }
  // A small trailing part joins its predecessor.
  if (parts.size() > 1 && 2 * size < nodes) {
    Subproblem tail = std::move(parts.back());
    parts.pop_back();
    auto& prev = parts.back();
    prev.vehicles.insert(prev.vehicles.end(), tail.vehicles.begin(), tail.vehicles.end());
    prev.requests.insert(prev.requests.end(), tail.requests.begin(), tail.requests.end());
  }
  if (parts.empty()) {
    if (solution.unassigned.empty()) {
      return parts;
    }
    parts.emplace_back();
  }

  std::vector<double> weights(parts.size());
  for (RequestId u : solution.unassigned) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      double w = 1.0;
      for (RequestId r : parts[p].requests) {
        w += history.after(r, u) + history.same_route(r, u);
      }
      weights[p] = w;
    }
    const std::size_t p = std::min(roulette(rng, weights), parts.size() - 1);
    parts[p].unassigned.push_back(u);
  }
  for (Subproblem& part : parts) {
    part.requests.insert(part.requests.end(), part.unassigned.begin(), part.unassigned.end());
  }
  return parts;
}

Solution local_solution(const SubInstance& sub, const Solution& global) {
  const Instance& local = sub.instance;
  NodeId max_node = 0;
  for (NodeId n : sub.global_node) {
    max_node = std::max(max_node, n);
  }
  std::vector<NodeId> local_node(static_cast<std::size_t>(max_node) + 1, kNoNode);
  for (std::size_t i = 0; i < sub.global_node.size(); ++i) {
    local_node[sub.global_node[i]] = static_cast<NodeId>(i);
  }
  Solution sol = empty_solution(local);
  std::vector<char> served(local.num_requests(), 0);
  for (std::size_t v = 0; v < sub.global_vehicle.size(); ++v) {
    const Route& route = global.routes[sub.global_vehicle[v]];
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      const NodeId n = local_node[route.visits[i]];
      sol.routes[v].visits.push_back(n);
      if (local.is_pickup(n)) {
        served[local.request_of(n)] = 1;
      }
    }
  }
  sol.unassigned.clear();
  for (std::size_t r = 0; r < served.size(); ++r) {
    if (!served[r]) {
      sol.unassigned.push_back(static_cast<RequestId>(r));
    }
  }
  return sol;
}

void merge_local(const SubInstance& sub, const Solution& local, Solution& global) {
  for (std::size_t v = 0; v < sub.global_vehicle.size(); ++v) {
    Route& route = global.routes[sub.global_vehicle[v]];
    route.visits.resize(1);
    const Route& from = local.routes[v];
    for (std::size_t i = 1; i < from.visits.size(); ++i) {
      route.visits.push_back(sub.global_node[from.visits[i]]);
    }
  }
  std::vector<char> unassigned(sub.global_request.size(), 0);
  for (RequestId r : local.unassigned) {
    unassigned[r] = 1;
  }
  for (std::size_t r = 0; r < sub.global_request.size(); ++r) {
    const RequestId g = sub.global_request[r];
    auto it = std::lower_bound(global.unassigned.begin(), global.unassigned.end(), g);
    const bool listed = it != global.unassigned.end() && *it == g;
    if (unassigned[r] && !listed) {
      global.unassigned.insert(it, g);
    } else if (!unassigned[r] && listed) {
      global.unassigned.erase(it);
    }
  }
}

} // namespace ridepool
