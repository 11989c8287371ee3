#include "ridepool/rnr.h"

namespace ridepool {

std::size_t intensify_routes(RouteState& state, std::span<const VehicleId> routes,
                             const BsGraph& graph, std::size_t thickness) {
  std::size_t improved = 0;
  const std::vector<VehicleId> list(routes.begin(), routes.end());
  for (VehicleId v : list) {
    if (state.route_size(v) < 2) {
      continue;
    }
    if (auto better_route = bs_search(state.instance(), state.visits(v), graph, thickness)) {
      state.set_route(v, std::move(*better_route));
      ++improved;
    }
  }
  return improved;
}

RnrResult run_rnr(const Instance& instance, const Solution& start, const RnrParams& params,
                  Acceptance& acceptance, Rng& rng, std::optional<Clock::time_point> deadline) {
  RouteState state(instance, start);
  RnrResult result;
  result.best = start;
  result.objective = state.objective();
  const ObjectiveKind kind = acceptance.kind();
  const BsGraph graph(params.bs_k);
  for (std::int64_t it = 0; it < params.iterations; ++it) {
    if (deadline && Clock::now() >= *deadline) {
      break;
    }
    ++result.iterations;
    state.begin_journal();
    ruin(state, params, rng);
    recreate(state, params, rng);
    Objective obj = state.objective();
    const bool new_best = better(obj, result.objective, kind);
    if (!acceptance.accept(obj)) {
      state.rollback();
      continue;
    }
    if (new_best && params.intensify) {
      intensify_routes(state, state.journaled(), graph, params.bs_thickness);
      obj = state.objective();
      if (better(obj, acceptance.best(), kind)) {
        acceptance.reset_best(obj);
      }
    }
    state.commit();
    if (better(obj, result.objective, kind)) {
      result.best = state.to_solution();
      result.objective = obj;
    }
  }
  return result;
}

} // namespace ridepool
