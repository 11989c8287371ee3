#include "fixtures.h"
#include "oracles.h"

#include "ridepool/ils.h"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace ridepool;

namespace {

std::set<RequestId> served(const Instance& inst, const Solution& sol) {
  std::set<RequestId> out;
  for (const Route& r : sol.routes) {
    for (std::size_t i = 1; i < r.visits.size(); ++i) {
      out.insert(inst.request_of(r.visits[i]));
    }
  }
  return out;
}

} // namespace

TEST_SUITE("ils") {

TEST_CASE("initial solutions are feasible") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = generate(oracle::small_config(seed, 40, 6));
    Rng rng(seed);
    const Solution open = construct_initial(inst, rng, true);
    CHECK(validate(open, inst).empty());
    const Solution closed = construct_initial(inst, rng, false);
    CHECK(validate(closed, inst).empty());
  }
}

TEST_CASE("history counts successors and route mates") {
  const Instance inst = fixture::line({0, 1, 2, 3, 0}, {{0, 1}, {2, 3}}, {{4, 0}}, 2);
  Solution sol = empty_solution(inst);
  sol.routes[0].visits = {4, 0, 2, 1, 3};
  sol.unassigned.clear();
  History h(2);
  h.record(inst, sol);
  h.record(inst, sol);
  CHECK(h.after(0, 1) == 4); // p0 -> p1 and d0 -> d1
  CHECK(h.after(1, 0) == 2); // p1 -> d0
  CHECK(h.same_route(0, 1) == 2);
  CHECK(h.same_route(1, 0) == 2);
}

TEST_CASE("partition covers every vehicle and request once") {
  const Instance inst = generate(oracle::small_config(4, 120, 20));
  Rng rng(4);
  const Solution sol = construct_initial(inst, rng);
  const History h(inst.num_requests());
  for (std::size_t nodes : {std::size_t{10}, std::size_t{40}, std::size_t{1000}}) {
    const auto parts = partition(inst, sol, nodes, h, rng);
    std::multiset<VehicleId> vehicles;
    std::multiset<RequestId> requests;
    std::multiset<RequestId> open;
    for (const Subproblem& p : parts) {
      vehicles.insert(p.vehicles.begin(), p.vehicles.end());
      requests.insert(p.requests.begin(), p.requests.end());
      open.insert(p.unassigned.begin(), p.unassigned.end());
      for (RequestId r : p.unassigned) {
        CHECK(std::count(p.requests.begin(), p.requests.end(), r) == 1);
      }
    }
    CHECK(vehicles.size() == inst.num_vehicles());
    CHECK(std::set<VehicleId>(vehicles.begin(), vehicles.end()).size() == inst.num_vehicles());
    CHECK(requests.size() == inst.num_requests());
    CHECK(std::set<RequestId>(requests.begin(), requests.end()).size() == inst.num_requests());
    CHECK(open.size() == sol.unassigned.size());
    if (nodes == 1000) {
      CHECK(parts.size() == 1);
    }
  }
}

TEST_CASE("local solutions round trip through merge") {
  const Instance inst = generate(oracle::small_config(9, 60, 8));
  Rng rng(9);
  const Solution sol = construct_initial(inst, rng);
  const History h(inst.num_requests());
  Solution merged = sol;
  for (const Subproblem& p : partition(inst, sol, 20, h, rng)) {
    const SubInstance sub = inst.restrict(p.vehicles, p.requests);
    const Solution local = local_solution(sub, sol);
    CHECK(validate(local, sub.instance).empty());
    merge_local(sub, local, merged);
  }
  CHECK(merged == sol);
}

TEST_CASE("recombination is no worse on the same vehicles") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance inst = generate(oracle::small_config(seed, 40, 6));
    Rng rng(seed);
    const Solution sol = construct_initial(inst, rng);
    const Solution rec = recombine(inst, sol);
    CHECK(validate(rec, inst).empty());
    CHECK(no_worse(evaluate(rec, inst), evaluate(sol, inst)));
  }
}

TEST_CASE("perturbation keeps the served set") {
  const Instance inst = generate(oracle::small_config(2, 60, 10));
  Rng rng(2);
  const Solution sol = construct_initial(inst, rng);
  RouteState state(inst, sol);
  const std::size_t applied = perturb(state, 50, 0.5, rng);
  CHECK(applied <= 50);
  const Solution after = state.to_solution();
  CHECK(validate(after, inst).empty());
  CHECK(served(inst, after) == served(inst, sol));
}

TEST_CASE("revert probability") {
  Rng rng(1);
  int reverted = 0;
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(revert_to_best(10, 0, rng));
    CHECK(revert_to_best(10, 10, rng));
    reverted += revert_to_best(10, 5, rng) ? 1 : 0;
  }
  CHECK(reverted > 20);
  CHECK(reverted < 80);
}

TEST_CASE("engine runs are reproducible and feasible") {
  const Instance inst = generate(oracle::small_config(21, 50, 6));
  IlsParams params;
  params.time_limit = 30.0;
  params.max_iterations = 3;
  params.local_loops = 2;
  params.rnr.iterations = 100;
  params.subproblem_nodes = 30;
  params.workers = 2;
  std::ostringstream progress;
  const IlsResult a = run_ils(inst, params, 5, std::nullopt, &progress);
  const IlsResult b = run_ils(inst, params, 5);
  CHECK(a.best == b.best);
  CHECK(a.ils_iterations == 3);
  CHECK(validate(a.best, inst).empty());
  CHECK(evaluate(a.best, inst) == a.objective);
  CHECK(progress.str().rfind("iteration,unassigned,cost,vehicles,elapsed\n", 0) == 0);
}

TEST_CASE("warm start is never made worse") {
  const Instance inst = generate(oracle::small_config(22, 40, 5));
  Rng rng(22);
  const Solution warm = construct_initial(inst, rng);
  IlsParams params;
  params.max_iterations = 2;
  params.local_loops = 2;
  params.rnr.iterations = 50;
  const IlsResult res = run_ils(inst, params, 1, warm);
  CHECK(no_worse(res.objective, evaluate(warm, inst)));
}

TEST_CASE("infeasible warm start is rejected") {
  const Instance inst = fixture::line({0, 100, 0}, {{0, 1, 0, 10, 0, 20}}, {{2, 0}});
  Solution bad = empty_solution(inst);
  bad.routes[0].visits = {2, 0, 1};
  bad.unassigned.clear();
  CHECK_THROWS_AS(run_ils(inst, IlsParams{}, 1, bad), InputError);
}

}
