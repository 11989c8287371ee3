#pragma once

#include "ridepool/bs.h"
#include "ridepool/route_state.h"

#include <array>
#include <chrono>
#include <optional>

namespace ridepool {

struct RnrParams {
  double avg_removed = 15.0;  // c-bar
  double max_string = 10.0;   // L_max
  double split_rate = 0.75;   // alpha
  double substring_rate = 0.10; // beta
  double blink = 0.05;
  // random, far, close, tw-length, tw-start, tw-end
  std::array<double, 6> sort_weights{6, 2, 1, 4, 2, 2};
  std::size_t insert_limit = 40;
  std::int64_t iterations = 2500; // M_S
  int bs_k = 3;
  std::size_t bs_thickness = 4;
  bool intensify = true;
  // Whether recreate may put requests on idle vehicles.
  bool open_routes = true;
};

// Record-to-record threshold acceptance under the hierarchical objective.
class Acceptance {
public:
  Acceptance() = default;
  Acceptance(double threshold, double decrement, Objective best,
             ObjectiveKind kind = ObjectiveKind::served_then_cost)
    : threshold_(threshold), decrement_(decrement), best_(best), kind_(kind) {}

  // A new best is always accepted and becomes the reference. Otherwise more
  // unassigned (or, for fleet objectives, more vehicles) than the best is
  // rejected, and at equal levels the relative cost gap must stay below the
  // threshold. Every call lowers the threshold by one decrement.
  bool accept(const Objective& candidate);
  void decay(std::int64_t steps = 1);

  double threshold() const { return threshold_; }
  double decrement() const { return decrement_; }
  const Objective& best() const { return best_; }
  ObjectiveKind kind() const { return kind_; }
  void reset_best(const Objective& best) { best_ = best; }
  void set_threshold(double threshold) { threshold_ = threshold; }

private:
  double threshold_ = 0.0;
  double decrement_ = 0.0;
  Objective best_;
  ObjectiveKind kind_ = ObjectiveKind::served_then_cost;
};

struct StringRemoval {
  std::size_t route_size = 0; // visits before removal, start excluded
  std::size_t length = 0;     // removed visits of the string
  std::size_t bound = 0;      // floor of min(route_size, l_s^max)
};

struct RuinReport {
  std::vector<RequestId> removed;
  std::vector<VehicleId> routes;
  double max_string = 0.0; // l_s^max
  double max_strings = 0.0; // 4 c-bar / (1 + l_s^max) - 1
  std::size_t strings = 0;  // k_s
  std::vector<StringRemoval> removals;
};

// Adjacent string removal around a random seed request; partially removed
// requests are removed fully. No-op when nothing is assigned.
RuinReport ruin(RouteState& state, const RnrParams& params, Rng& rng);

// Greedy insertion with blinks of up to insert_limit unassigned requests,
// ordered by a criterion drawn by roulette. Returns the inserted requests.
std::vector<RequestId> recreate(RouteState& state, const RnrParams& params, Rng& rng);

using Clock = std::chrono::steady_clock;

struct RnrResult {
  Solution best;
  Objective objective;
  std::int64_t iterations = 0;
};

// Ruin, recreate and accept for params.iterations steps or until the
// deadline, intensifying modified routes with BS(k) at every new best.
// `acceptance` keeps its threshold across calls.
RnrResult run_rnr(const Instance& instance, const Solution& start, const RnrParams& params,
                  Acceptance& acceptance, Rng& rng,
                  std::optional<Clock::time_point> deadline = std::nullopt);

// Applies BS(k) to each listed route; returns the number improved.
std::size_t intensify_routes(RouteState& state, std::span<const VehicleId> routes,
                             const BsGraph& graph, std::size_t thickness);

} // namespace ridepool
