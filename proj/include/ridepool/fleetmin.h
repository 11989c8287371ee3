#pragma once

#include "ridepool/ils.h"

namespace ridepool {

struct AgesParams {
  double decay = 0.9;            // lambda
  std::int64_t budget = 10000;   // M_F, perturbations per elimination attempt
  std::size_t moves = 10;        // Z_F
  double relocate_share = 0.5;
  std::optional<Clock::time_point> deadline;
};

// Failed-insertion counters, one per request, starting at 1.
class PenaltyTable {
public:
  explicit PenaltyTable(std::size_t num_requests = 0) : rho_(num_requests, 1) {}

  std::int64_t operator[](RequestId r) const { return rho_[r]; }
  void increment(RequestId r) { ++rho_[r]; }
  // rho <- max(1, floor(lambda * rho))
  void decay(double lambda);
  std::size_t size() const { return rho_.size(); }

private:
  std::vector<std::int64_t> rho_;
};

struct AgesResult {
  Solution solution;
  std::size_t eliminated = 0;
  std::int64_t perturbations = 0;
};

// Removes routes one at a time, fewest requests first, by reinserting their
// requests with penalty-guided ejections of one or two requests. Stops at
// the first route that cannot be emptied within the budget and returns the
// last fully assigned solution.
AgesResult ages(const Instance& instance, const Solution& solution, const AgesParams& params,
                PenaltyTable& penalties, Rng& rng);

struct HierarchicalParams {
  IlsParams ils;
  AgesParams ages;
};

// ILS under the fleet-then-cost objective with an AGES call before every
// ILS iteration; penalties persist across calls.
IlsResult hierarchical_run(const Instance& instance, HierarchicalParams params,
                           std::uint64_t seed, std::optional<Solution> warm_start = std::nullopt,
                           std::ostream* progress = nullptr);

} // namespace ridepool
