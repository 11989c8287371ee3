#pragma once

#include "ridepool/instance.h"

#include <compare>
#include <string>
#include <vector>

namespace ridepool {

struct Route {
  VehicleId vehicle = 0;
  // visits[0] is the vehicle start node.
  std::vector<NodeId> visits;

  bool empty() const { return visits.size() <= 1; }
  std::size_t num_requests() const { return visits.empty() ? 0 : (visits.size() - 1) / 2; }

  friend bool operator==(const Route&, const Route&) = default;
};

struct Solution {
  // One route per vehicle, indexed by vehicle id.
  std::vector<Route> routes;
  // Sorted ascending.
  std::vector<RequestId> unassigned;

  std::size_t num_used_vehicles() const;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// All vehicles idle, every request unassigned.
Solution empty_solution(const Instance& instance);

enum class ObjectiveKind : std::uint8_t {
  // Fewest unassigned requests, then lowest travel cost.
  served_then_cost,
  // Classic benchmarks: fewest unassigned, then fewest vehicles, then cost.
  fleet_then_cost,
};

struct Objective {
  std::int64_t unassigned = 0;
  Cost cost = 0;
  std::int64_t vehicles = 0;

  friend bool operator==(const Objective&, const Objective&) = default;
};

// Strict lexicographic comparison under `kind`.
bool better(const Objective& a, const Objective& b,
            ObjectiveKind kind = ObjectiveKind::served_then_cost);
bool no_worse(const Objective& a, const Objective& b,
              ObjectiveKind kind = ObjectiveKind::served_then_cost);

std::string to_string(const Objective& objective);

enum class ViolationKind : std::uint8_t {
  malformed,     // unknown node or vehicle id, wrong route layout
  duplicate,     // node visited more than once
  pairing,       // pickup and delivery not on the same route
  precedence,    // delivery before pickup
  time_window,   // arrival after window close
  capacity,      // running load above Q
  partition,     // request neither served nor unassigned, or both
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  VehicleId vehicle = -1;
  NodeId node = kNoNode;
  std::string message;
};

// Empty result means feasible.
std::vector<Violation> validate(const Solution& solution, const Instance& instance);

class InfeasibleSolution : public std::runtime_error {
public:
  explicit InfeasibleSolution(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

// Throws InfeasibleSolution when validate() reports anything.
Objective evaluate(const Solution& solution, const Instance& instance);

// Travel cost of one route, including the closing arc to the route end.
Cost route_cost(const Instance& instance, std::span<const NodeId> visits);

} // namespace ridepool
