#include "fixtures.h"
#include "oracles.h"

#include "ridepool/fleetmin.h"

#include <doctest.h>

using namespace ridepool;

namespace {

// n requests along a line that a single vehicle can serve one after the
// other; every vehicle starts at the depot.
Instance chain(std::size_t n) {
  std::vector<Time> xs{0};
  std::vector<fixture::Req> reqs;
  for (std::size_t r = 0; r < n; ++r) {
    const auto from = static_cast<LocationId>(xs.size());
    xs.push_back(static_cast<Time>(10 * r + 1));
    xs.push_back(static_cast<Time>(10 * r + 5));
    const Time t = static_cast<Time>(20 * r);
    reqs.push_back({from, from + 1, t, t + 40, t, t + 80});
  }
  std::vector<fixture::Veh> vehs(n, fixture::Veh{0, 0});
  return fixture::line(xs, reqs, vehs, 1, fixture::End{0, 100000});
}

Solution one_per_route(const Instance& inst) {
  Solution sol = empty_solution(inst);
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    const Request& q = inst.request(static_cast<RequestId>(r));
    sol.routes[r].visits = {inst.vehicle(static_cast<VehicleId>(r)).start, q.pickup, q.delivery};
  }
  sol.unassigned.clear();
  return sol;
}

} // namespace

TEST_SUITE("fleetmin") {

TEST_CASE("penalty decay floors at one") {
  PenaltyTable t(3);
  for (int i = 0; i < 9; ++i) {
    t.increment(0);
  }
  t.increment(1);
  CHECK(t[0] == 10);
  t.decay(0.9);
  CHECK(t[0] == 9);
  CHECK(t[1] == 1); // floor(1.8)
  CHECK(t[2] == 1);
  t.decay(0.1);
  CHECK(t[0] == 1);
}

TEST_CASE("chainable requests collapse onto one route") {
  const Instance inst = chain(6);
  const Solution start = one_per_route(inst);
  REQUIRE(validate(start, inst).empty());
  AgesParams params;
  PenaltyTable rho(inst.num_requests());
  Rng rng(3);
  const AgesResult res = ages(inst, start, params, rho, rng);
  CHECK(validate(res.solution, inst).empty());
  CHECK(res.solution.unassigned.empty());
  CHECK(res.solution.num_used_vehicles() == 1);
  CHECK(res.eliminated == 5);
}

TEST_CASE("zero budget returns the input") {
  const Instance inst = chain(4);
  const Solution start = one_per_route(inst);
  AgesParams params;
  params.budget = 0;
  PenaltyTable rho(inst.num_requests());
  Rng rng(1);
  const AgesResult res = ages(inst, start, params, rho, rng);
  CHECK(res.solution == start);
  CHECK(res.eliminated == 0);
}

TEST_CASE("incompatible requests keep their routes") {
  // Both pickups close at time 10, 1000 apart: no vehicle can serve both.
  const Instance inst = fixture::line({0, 1000, 0, 1001, 1},
                                      {{0, 1, 0, 10, 0, 2000}, {3, 4, 0, 10, 0, 2000}},
                                      {{2, 0}, {3, 0}}, 1, fixture::End{2, 100000});
  Solution start = empty_solution(inst);
  start.routes[0].visits = {4, 0, 1};
  start.routes[1].visits = {5, 2, 3};
  start.unassigned.clear();
  REQUIRE(validate(start, inst).empty());
  AgesParams params;
  params.budget = 50;
  PenaltyTable rho(2);
  Rng rng(2);
  const AgesResult res = ages(inst, start, params, rho, rng);
  CHECK(res.solution.num_used_vehicles() == 2);
  CHECK(res.solution.unassigned.empty());
  CHECK(res.eliminated == 0);
  CHECK(res.perturbations == 50);
  CHECK(rho[0] + rho[1] > 2);
}

TEST_CASE("hierarchical run reduces the fleet") {
  const Instance inst = chain(5);
  HierarchicalParams params;
  params.ils.max_iterations = 2;
  params.ils.local_loops = 1;
  params.ils.rnr.iterations = 50;
  const IlsResult res = hierarchical_run(inst, params, 7, one_per_route(inst));
  CHECK(validate(res.best, inst).empty());
  CHECK(res.objective.unassigned == 0);
  CHECK(res.objective.vehicles == 1);
}

}
