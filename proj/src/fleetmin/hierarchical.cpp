#include "ridepool/fleetmin.h"

#include <ostream>

namespace ridepool {

IlsResult hierarchical_run(const Instance& instance, HierarchicalParams params,
                           std::uint64_t seed, std::optional<Solution> warm_start,
                           std::ostream* progress) {
  params.ils.kind = ObjectiveKind::fleet_then_cost;
  params.ils.rnr.open_routes = false;
  IlsEngine engine(instance, params.ils, seed, std::move(warm_start));
  if (progress) {
    *progress << "iteration,unassigned,cost,vehicles,elapsed\n";
    engine.on_iteration = [progress](const IlsProgress& p) {
      *progress << p.iteration << ',' << p.best.unassigned << ',' << p.best.cost << ','
                << p.best.vehicles << ',' << p.elapsed << '\n';
    };
  }
  AgesParams ages_params = params.ages;
  if (params.ils.max_iterations < 0 || !ages_params.deadline) {
    ages_params.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(params.ils.time_limit));
  }
  PenaltyTable penalties(instance.num_requests());
  while (!engine.done()) {
    if (engine.at_iteration_start()) {
      AgesResult reduced = ages(instance, engine.current(), ages_params, penalties, engine.rng());
      if (reduced.eliminated > 0) {
        engine.set_current(std::move(reduced.solution));
      }
    }
    engine.step();
  }
  return {engine.best(), engine.best_objective(), engine.ils_iterations(),
          engine.rnr_iterations()};
}

} // namespace ridepool
