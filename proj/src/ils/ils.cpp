#include "ridepool/ils.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

namespace ridepool {

IlsEngine::IlsEngine(const Instance& instance, IlsParams params, std::uint64_t seed,
                     std::optional<Solution> warm_start)
  : instance_(instance), params_(std::move(params)), rng_(seed), started_(Clock::now()),
    history_(instance.num_requests()) {
  if (params_.local_loops < 1 || params_.rnr.iterations < 0 || params_.subproblem_nodes < 1) {
    throw InputError("ILS budgets must be positive");
  }
  deadline_ = started_ + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(std::max(0.0, params_.time_limit)));
  const bool classic = params_.kind == ObjectiveKind::fleet_then_cost;
  if (warm_start) {
    const auto violations = validate(*warm_start, instance_);
    if (!violations.empty()) {
      throw InputError("warm start is infeasible: " + violations.front().message);
    }
    current_ = std::move(*warm_start);
  } else {
    current_ = construct_initial(instance_, rng_, !classic);
  }
  current_obj_ = evaluate(current_, instance_);
  best_ = current_;
  best_obj_ = current_obj_;
  history_.record(instance_, current_);
  reset_threshold();
}

double IlsEngine::elapsed() const {
  return std::chrono::duration<double>(Clock::now() - started_).count();
}

bool IlsEngine::done() const {
  if (params_.max_iterations >= 0 && ils_iterations_ >= params_.max_iterations) {
    return true;
  }
  return Clock::now() >= deadline_;
}

void IlsEngine::reset_threshold() {
  const double loops = static_cast<double>(params_.local_loops) *
                       static_cast<double>(std::max<std::int64_t>(1, params_.rnr.iterations));
  acceptance_ = Acceptance(params_.t_init, params_.t_init / loops, best_obj_, params_.kind);
}

void IlsEngine::set_current(Solution solution) {
  current_obj_ = evaluate(solution, instance_);
  current_ = std::move(solution);
  if (better(current_obj_, best_obj_, params_.kind)) {
    best_ = current_;
    best_obj_ = current_obj_;
    improved_ = true;
    acceptance_.reset_best(best_obj_);
  }
}

bool IlsEngine::step() {
  if (done()) {
    return false;
  }
  local_loop();
  ++loop_;
  if (loop_ % params_.local_loops == 0) {
    finish_iteration();
  }
  return !done();
}

void IlsEngine::local_loop() {
  const bool classic = params_.kind == ObjectiveKind::fleet_then_cost;
  const auto parts = partition(instance_, current_, params_.subproblem_nodes, history_, rng_);
  const std::uint64_t master = rng_();

  std::vector<SubInstance> subs(parts.size());
  std::vector<Solution> locals(parts.size());
  std::vector<std::int64_t> iterations(parts.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    subs[p] = instance_.restrict(parts[p].vehicles, parts[p].requests);
    locals[p] = local_solution(subs[p], current_);
  }
  auto solve_part = [&](std::size_t p) {
    const Instance& sub = subs[p].instance;
    if (sub.num_requests() == 0) {
      return;
    }
    Rng rng(derive_seed(master, p));
    Acceptance acc(acceptance_.threshold(), acceptance_.decrement(), evaluate(locals[p], sub),
                   params_.kind);
    RnrResult res = run_rnr(sub, locals[p], params_.rnr, acc, rng, deadline_);
    locals[p] = std::move(res.best);
    iterations[p] = res.iterations;
  };
  const std::size_t workers = std::min(std::max<std::size_t>(1, params_.workers), parts.size());
  if (workers <= 1) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      solve_part(p);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < parts.size(); p = next++) {
          solve_part(p);
        }
      });
    }
  }

  Solution merged = current_;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    merge_local(subs[p], locals[p], merged);
    rnr_iterations_ += iterations[p];
  }
  std::vector<VehicleId> fleet;
  if (classic) {
    for (const Route& route : merged.routes) {
      if (!route.empty()) {
        fleet.push_back(route.vehicle);
      }
    }
  }
  Solution candidate = merged;
  Objective obj = evaluate(merged, instance_);
  if (!classic || !fleet.empty()) {
    Solution chained = recombine(instance_, merged, fleet);
    const Objective chained_obj = evaluate(chained, instance_);
    if (no_worse(chained_obj, obj, params_.kind)) {
      candidate = std::move(chained);
      obj = chained_obj;
    }
  }

  const bool accepted = acceptance_.accept(obj);
  acceptance_.decay(std::max<std::int64_t>(0, params_.rnr.iterations - 1));
  if (better(obj, best_obj_, params_.kind)) {
    best_ = candidate;
    best_obj_ = obj;
    improved_ = true;
  }
  if (accepted) {
    current_ = std::move(candidate);
    current_obj_ = obj;
    history_.record(instance_, current_);
  }
}

void IlsEngine::finish_iteration() {
  ++ils_iterations_;
  if (improved_) {
    since_best_ = 0;
  } else {
    ++since_best_;
    if (revert_to_best(ils_iterations_, since_best_, rng_)) {
      current_ = best_;
      current_obj_ = best_obj_;
    }
  }
  improved_ = false;
  if (on_iteration) {
    on_iteration({ils_iterations_, best_obj_, elapsed()});
  }
  if (done()) {
    return;
  }
  const bool classic = params_.kind == ObjectiveKind::fleet_then_cost;
  const auto moves = static_cast<std::size_t>(
    std::ceil(params_.perturb_factor * static_cast<double>(instance_.num_requests())));
  RouteState state(instance_, current_);
  perturb(state, moves, params_.relocate_share, rng_, !classic);
  current_ = state.to_solution();
  current_obj_ = state.objective();
  reset_threshold();
}

IlsResult run_ils(const Instance& instance, const IlsParams& params, std::uint64_t seed,
                  std::optional<Solution> warm_start, std::ostream* progress) {
  IlsEngine engine(instance, params, seed, std::move(warm_start));
  if (progress) {
    *progress << "iteration,unassigned,cost,vehicles,elapsed\n";
    engine.on_iteration = [progress](const IlsProgress& p) {
      *progress << p.iteration << ',' << p.best.unassigned << ',' << p.best.cost << ','
                << p.best.vehicles << ',' << p.elapsed << '\n';
    };
  }
  while (engine.step()) {
  }
  return {engine.best(), engine.best_objective(), engine.ils_iterations(),
          engine.rnr_iterations()};
}

} // namespace ridepool
