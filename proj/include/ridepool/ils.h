#pragma once

#include "ridepool/dispatch.h"
#include "ridepool/rnr.h"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ridepool {

struct IlsParams {
  double time_limit = 60.0;            // seconds
  std::int64_t max_iterations = -1;    // ILS iterations; negative means no cap
  std::int64_t local_loops = 5000;     // M_A
  std::size_t subproblem_nodes = 500;  // chi, route nodes per subproblem
  double perturb_factor = 1.66;        // Z_A = ceil(factor * |R|)
  double relocate_share = 0.5;
  double t_init = 0.333;
  std::size_t workers = 1;
  RnrParams rnr;                       // rnr.iterations is M_S
  ObjectiveKind kind = ObjectiveKind::served_then_cost;
};

// Pair counters collected from accepted solutions.
class History {
public:
  explicit History(std::size_t num_requests = 0);

  void record(const Instance& instance, const Solution& solution);

  // Times u was visited directly after r.
  std::uint32_t after(RequestId r, RequestId u) const { return after_[index(r, u)]; }
  std::uint32_t same_route(RequestId r, RequestId u) const { return same_[index(r, u)]; }
  std::size_t num_requests() const { return n_; }

private:
  std::size_t index(RequestId r, RequestId u) const {
    return static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(u);
  }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> after_;
  std::vector<std::uint32_t> same_;
};

// One random request per vehicle, then every other request at its cheapest
// position. With open_routes false, requests go to used routes first and a
// new vehicle is opened only when none fits.
Solution construct_initial(const Instance& instance, Rng& rng, bool open_routes = true);

struct Subproblem {
  std::vector<VehicleId> vehicles;
  std::vector<RequestId> requests;   // on the vehicles' routes, then unassigned
  std::vector<RequestId> unassigned; // share of the global unassigned pool
};

// Shuffled routes grouped greedily into parts of about `nodes` route nodes;
// unassigned requests go to parts by roulette on history affinity plus one.
std::vector<Subproblem> partition(const Instance& instance, const Solution& solution,
                                  std::size_t nodes, const History& history, Rng& rng);

// Solution of the restricted instance holding the part's current routes.
Solution local_solution(const SubInstance& sub, const Solution& global);

// Writes the routes of a restricted solution back into `global`.
void merge_local(const SubInstance& sub, const Solution& local, Solution& global);

// Re-chains the blocks of `solution` over the given vehicles (all when
// empty) with k-disjoint shortest paths.
Solution recombine(const Instance& instance, const Solution& solution,
                   const std::vector<VehicleId>& vehicles = {});

// Random relocations (with probability relocate_share) and exchanges
// between routes. Failed attempts are skipped. Returns the moves applied.
std::size_t perturb(RouteState& state, std::size_t moves, double relocate_share, Rng& rng,
                    bool open_routes = true);

// Revert to the best with probability since_best / iteration.
bool revert_to_best(std::int64_t iteration, std::int64_t since_best, Rng& rng);

struct IlsProgress {
  std::int64_t iteration = 0;
  Objective best;
  double elapsed = 0.0;
};

class IlsEngine {
public:
  IlsEngine(const Instance& instance, IlsParams params, std::uint64_t seed,
            std::optional<Solution> warm_start = std::nullopt);

  // One local loop; ILS iteration bookkeeping happens after every
  // local_loops loops. Returns false once a limit is reached.
  bool step();
  bool done() const;
  // True before the first local loop of an ILS iteration.
  bool at_iteration_start() const { return loop_ % params_.local_loops == 0; }
  const IlsParams& params() const { return params_; }

  const Solution& best() const { return best_; }
  const Objective& best_objective() const { return best_obj_; }
  const Solution& current() const { return current_; }
  // Replaces the working solution; adopts it as best if it is better.
  void set_current(Solution solution);
  std::int64_t ils_iterations() const { return ils_iterations_; }
  std::int64_t rnr_iterations() const { return rnr_iterations_; }
  double elapsed() const;
  Rng& rng() { return rng_; }

  std::function<void(const IlsProgress&)> on_iteration;

private:
  void local_loop();
  void finish_iteration();
  void reset_threshold();

  const Instance& instance_;
  IlsParams params_;
  Rng rng_;
  Clock::time_point started_;
  Clock::time_point deadline_;
  History history_;
  Acceptance acceptance_;
  Solution current_;
  Objective current_obj_;
  Solution best_;
  Objective best_obj_;
  bool improved_ = false;
  std::int64_t loop_ = 0;
  std::int64_t ils_iterations_ = 0;
  std::int64_t since_best_ = 0;
  std::int64_t rnr_iterations_ = 0;
};

struct IlsResult {
  Solution best;
  Objective objective;
  std::int64_t ils_iterations = 0;
  std::int64_t rnr_iterations = 0;
};

// Runs until the time limit or iteration cap. `progress` receives
// "iteration,unassigned,cost,vehicles,elapsed" lines.
IlsResult run_ils(const Instance& instance, const IlsParams& params, std::uint64_t seed,
                  std::optional<Solution> warm_start = std::nullopt,
                  std::ostream* progress = nullptr);

} // namespace ridepool
