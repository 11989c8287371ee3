#pragma once

#include "ridepool/random.h"
#include "ridepool/seq_eval.h"
#include "ridepool/solution.h"

#include <optional>
#include <span>
#include <vector>

namespace ridepool {

// Where to put a request: the pickup goes right after position
// `pickup_after` of the current route (0 = the start node), the delivery
// right after original position `delivery_after` (>= pickup_after; equal
// means directly behind the pickup).
struct Insertion {
  VehicleId vehicle = -1;
  int pickup_after = 0;
  int delivery_after = 0;
  Cost delta = 0;
};

// Skips insertion candidates with a fixed probability.
class Blink {
public:
  Blink() = default;
  Blink(Rng& rng, double rate) : rng_(&rng), rate_(rate) {}

  bool skip() const { return rng_ != nullptr && rate_ > 0.0 && uniform01(*rng_) < rate_; }

private:
  Rng* rng_ = nullptr;
  double rate_ = 0.0;
};

// Working solution with per-node predecessor/successor links, vehicle labels
// and forward/backward SeqEval records. Editing a route rebuilds only that
// route, in time linear in its length.
class RouteState {
public:
  explicit RouteState(const Instance& instance);
  // The solution must be structurally valid for `instance`.
  RouteState(const Instance& instance, const Solution& solution);

  const Instance& instance() const { return *instance_; }
  std::size_t num_vehicles() const { return routes_.size(); }
  // Label carried by unassigned nodes: one past the last vehicle id.
  VehicleId unassigned_label() const { return static_cast<VehicleId>(routes_.size()); }

  std::span<const NodeId> visits(VehicleId v) const { return routes_[v]; }
  // Number of request visits, excluding the start node.
  std::size_t route_size(VehicleId v) const { return routes_[v].size() - 1; }
  bool route_empty(VehicleId v) const { return routes_[v].size() <= 1; }
  Cost route_cost(VehicleId v) const { return route_eval_[v].cost; }
  const SeqEval& route_eval(VehicleId v) const { return route_eval_[v]; }
  bool route_feasible(VehicleId v) const {
    return route_eval_[v].ok(instance_->capacity());
  }

  VehicleId vehicle_of(NodeId n) const { return vehicle_of_[n]; }
  int position(NodeId n) const { return position_[n]; }
  NodeId pred(NodeId n) const;
  NodeId succ(NodeId n) const;
  const SeqEval& fw(NodeId n) const { return fw_[n]; }
  const SeqEval& bw(NodeId n) const { return bw_[n]; }

  bool is_assigned(RequestId r) const { return unassigned_pos_[r] < 0; }
  const std::vector<RequestId>& unassigned() const { return unassigned_; }
  std::vector<RequestId> assigned_requests() const;
  std::vector<RequestId> requests_on(VehicleId v) const;

  // Replaces a whole route. Requests leaving the route become unassigned
  // unless placed again by a later call; requests entering it leave the
  // unassigned pool.
  void set_route(VehicleId v, std::vector<NodeId> visits);
  void insert(RequestId r, const Insertion& at);
  // Removes requests from their routes; unassigned ones are ignored.
  void remove(std::span<const RequestId> requests);
  void remove(RequestId r) { remove(std::span<const RequestId>(&r, 1)); }

  // Journaling: while active, the first edit of each route records its
  // previous visits so rollback() can restore them.
  void begin_journal();
  void rollback();
  void commit();
  // Routes edited since begin_journal().
  const std::vector<VehicleId>& journaled() const { return journal_vehicles_; }

  Cost total_cost() const { return total_cost_; }
  std::size_t num_used_vehicles() const { return used_; }
  Objective objective() const;
  Solution to_solution() const;

private:
  void rebuild(VehicleId v);
  void mark_unassigned(RequestId r);
  void mark_assigned(RequestId r);

  const Instance* instance_;
  std::vector<std::vector<NodeId>> routes_;
  std::vector<SeqEval> route_eval_;
  std::vector<VehicleId> vehicle_of_;
  std::vector<int> position_;
  std::vector<SeqEval> fw_;
  std::vector<SeqEval> bw_;
  std::vector<RequestId> unassigned_;
  std::vector<int> unassigned_pos_;
  Cost total_cost_ = 0;
  std::size_t used_ = 0;
  bool journaling_ = false;
  std::vector<VehicleId> journal_vehicles_;
  std::vector<std::vector<NodeId>> journal_routes_;
  std::vector<char> in_journal_;
};

// Cheapest feasible insertion of `r` into route `v`: pickup positions outer,
// delivery positions inner, reusing fw up to the pickup and bw behind the
// delivery. Candidates may be skipped by `blink`. Ties keep the first found.
std::optional<Insertion> best_insertion(const RouteState& state, RequestId r, VehicleId v,
                                        const Blink& blink = {});

// Same as best_insertion for a route given only by its visits.
std::optional<Insertion> best_insertion(const Instance& instance, std::span<const NodeId> visits,
                                        RequestId r, const Blink& blink = {});

// Every feasible insertion of `r` into route `v`.
std::vector<Insertion> feasible_insertions(const RouteState& state, RequestId r, VehicleId v);

// Visits of route `v` after applying `at`.
std::vector<NodeId> apply_insertion(std::span<const NodeId> visits, NodeId pickup,
                                    NodeId delivery, int pickup_after, int delivery_after);

} // namespace ridepool
