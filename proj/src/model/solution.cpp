#include "ridepool/solution.h"

#include "ridepool/schedule.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace ridepool {

std::size_t Solution::num_used_vehicles() const {
  return static_cast<std::size_t>(
    std::count_if(routes.begin(), routes.end(), [](const Route& r) { return !r.empty(); }));
}

Solution empty_solution(const Instance& instance) {
  Solution s;
  s.routes.reserve(instance.num_vehicles());
  for (const Vehicle& v : instance.vehicles()) {
    s.routes.push_back(Route{v.id, {v.start}});
  }
  s.unassigned.reserve(instance.num_requests());
  for (const Request& r : instance.requests()) {
    s.unassigned.push_back(r.id);
  }
  return s;
}

namespace {

auto key(const Objective& o, ObjectiveKind kind) {
  if (kind == ObjectiveKind::fleet_then_cost) {
    return std::make_tuple(o.unassigned, o.vehicles, o.cost);
  }
  return std::make_tuple(o.unassigned, std::int64_t{0}, o.cost);
}

} // namespace

bool better(const Objective& a, const Objective& b, ObjectiveKind kind) {
  return key(a, kind) < key(b, kind);
}

bool no_worse(const Objective& a, const Objective& b, ObjectiveKind kind) {
  return key(a, kind) <= key(b, kind);
}

std::string to_string(const Objective& objective) {
  std::ostringstream out;
  out << "(unassigned=" << objective.unassigned << ", vehicles=" << objective.vehicles
      << ", cost=" << objective.cost << ")";
  return out.str();
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::malformed:
    return "malformed";
  case ViolationKind::duplicate:
    return "duplicate";
  case ViolationKind::pairing:
    return "pairing";
  case ViolationKind::precedence:
    return "precedence";
  case ViolationKind::time_window:
    return "time_window";
  case ViolationKind::capacity:
    return "capacity";
  case ViolationKind::partition:
    return "partition";
  }
  return "unknown";
}

InfeasibleSolution::InfeasibleSolution(std::vector<Violation> violations)
  : std::runtime_error(violations.empty()
                         ? std::string("infeasible solution")
                         : "infeasible solution: " + violations.front().message),
    violations_(std::move(violations)) {}

std::vector<Violation> validate(const Solution& solution, const Instance& instance) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, VehicleId v, NodeId n, std::string msg) {
    out.push_back(Violation{kind, v, n, std::move(msg)});
  };

  const auto num_nodes = static_cast<NodeId>(instance.num_nodes());
  const auto num_requests = static_cast<RequestId>(instance.num_requests());
  if (solution.routes.size() != instance.num_vehicles()) {
    report(ViolationKind::malformed, -1, kNoNode,
           "expected " + std::to_string(instance.num_vehicles()) + " routes, got " +
             std::to_string(solution.routes.size()));
  }

  // Route and position of every visited node.
  std::vector<int> route_of(instance.num_nodes(), -1);
  std::vector<int> position(instance.num_nodes(), -1);

  for (std::size_t k = 0; k < solution.routes.size(); ++k) {
    const Route& route = solution.routes[k];
    const auto v = static_cast<VehicleId>(k);
    if (route.vehicle != v) {
      report(ViolationKind::malformed, v, kNoNode,
             "route " + std::to_string(k) + " is labelled vehicle " +
               std::to_string(route.vehicle));
    }
    if (k >= instance.num_vehicles()) {
      continue;
    }
    if (route.visits.empty() || route.visits[0] != instance.vehicle(v).start) {
      report(ViolationKind::malformed, v, kNoNode,
             "route of vehicle " + std::to_string(v) + " must start at its start node");
      continue;
    }
    bool route_ok = true;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      const NodeId n = route.visits[i];
      if (n < 0 || n >= num_nodes) {
        report(ViolationKind::malformed, v, n, "unknown node id " + std::to_string(n));
        route_ok = false;
        continue;
      }
      const NodeKind kind = instance.node(n).kind;
      if (kind != NodeKind::pickup && kind != NodeKind::delivery) {
        report(ViolationKind::malformed, v, n,
               "node " + std::to_string(n) + " is not a request node");
        route_ok = false;
        continue;
      }
      if (route_of[n] != -1) {
        report(ViolationKind::duplicate, v, n,
               "node " + std::to_string(n) + " visited more than once");
        route_ok = false;
        continue;
      }
      route_of[n] = static_cast<int>(k);
      position[n] = static_cast<int>(i);
    }
    if (!route_ok) {
      continue;
    }

    int load = 0;
    bool capacity_reported = false;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      const NodeId n = route.visits[i];
      const NodeId other = instance.partner(n);
      if (route_of[other] != static_cast<int>(k)) {
        report(ViolationKind::pairing, v, n,
               "node " + std::to_string(n) + " and its partner " + std::to_string(other) +
                 " are not on the same route");
      } else if (instance.is_delivery(n) && position[other] > static_cast<int>(i)) {
        report(ViolationKind::precedence, v, n,
               "delivery " + std::to_string(n) + " precedes its pickup");
      }
      load += instance.node(n).demand;
      if (!capacity_reported && (load > instance.capacity() || load < 0)) {
        report(ViolationKind::capacity, v, n,
               "load " + std::to_string(load) + " at node " + std::to_string(n) +
                 " outside [0, " + std::to_string(instance.capacity()) + "]");
        capacity_reported = true;
      }
    }

    if (!route.empty()) {
      const Schedule s = propagate_schedule(instance, route.visits);
      if (!s.feasible) {
        const NodeId n = s.first_violation < route.visits.size()
                           ? route.visits[s.first_violation]
                           : *instance.route_end();
        report(ViolationKind::time_window, v, n,
               "late arrival at node " + std::to_string(n) + " on vehicle " +
                 std::to_string(v));
      }
    }
  }

  std::vector<char> listed(instance.num_requests(), 0);
  for (RequestId r : solution.unassigned) {
    if (r < 0 || r >= num_requests) {
      report(ViolationKind::malformed, -1, kNoNode,
             "unknown unassigned request " + std::to_string(r));
      continue;
    }
    if (listed[r]) {
      report(ViolationKind::partition, -1, kNoNode,
             "request " + std::to_string(r) + " listed twice as unassigned");
    }
    listed[r] = 1;
  }
  for (const Request& r : instance.requests()) {
    const bool served = route_of[r.pickup] != -1 || route_of[r.delivery] != -1;
    if (served && listed[r.id]) {
      report(ViolationKind::partition, -1, r.pickup,
             "request " + std::to_string(r.id) + " is both served and unassigned");
    } else if (!served && !listed[r.id]) {
      report(ViolationKind::partition, -1, r.pickup,
             "request " + std::to_string(r.id) + " is neither served nor unassigned");
    }
  }
  return out;
}

Cost route_cost(const Instance& instance, std::span<const NodeId> visits) {
  if (visits.size() <= 1) {
    return 0;
  }
  Cost c = 0;
  for (std::size_t i = 1; i < visits.size(); ++i) {
    c += instance.cost(visits[i - 1], visits[i]);
  }
  if (const auto& end = instance.route_end()) {
    c += instance.cost(visits.back(), *end);
  }
  return c;
}

Objective evaluate(const Solution& solution, const Instance& instance) {
  auto violations = validate(solution, instance);
  if (!violations.empty()) {
    throw InfeasibleSolution(std::move(violations));
  }
  Objective o;
  o.unassigned = static_cast<std::int64_t>(solution.unassigned.size());
  for (const Route& r : solution.routes) {
    o.cost += route_cost(instance, r.visits);
    if (!r.empty()) {
      ++o.vehicles;
    }
  }
  return o;
}

} // namespace ridepool
