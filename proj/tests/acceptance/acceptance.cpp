// Property and oracle checks for the full solver. One PASS/FAIL line per
// criterion; the exit status is non-zero if any criterion fails.
// Usage: acceptance [criterion numbers...]

#include "fixtures.h"
#include "oracles.h"
#include "run_config.h"

#include "ridepool/bs.h"
#include "ridepool/fleetmin.h"
#include "ridepool/ils.h"
#include "ridepool/io.h"
#include "ridepool/rnr.h"
#include "ridepool/solver.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace ridepool;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<VehicleId> all_vehicles(const Instance& inst) {
  std::vector<VehicleId> out;
  for (const Vehicle& v : inst.vehicles()) {
    out.push_back(v.id);
  }
  return out;
}

// Concatenation against from-scratch propagation.
Outcome concat_oracle() {
  Rng rng(101);
  std::int64_t mismatches = 0;
  std::int64_t feasible = 0;
  const int n_seq = 10000;
  std::vector<Instance> instances;
  for (std::uint64_t s = 0; s < 20; ++s) {
    GeneratorConfig c = oracle::small_config(1000 + s, 30, 3);
    c.capacity = 1 + static_cast<int>(s % 4);
    c.buffer = 60 * static_cast<Time>(s % 5);
    instances.push_back(generate(c));
  }
  std::vector<Solution> routes;
  for (const Instance& inst : instances) {
    routes.push_back(construct_initial(inst, rng));
  }
  for (int i = 0; i < n_seq; ++i) {
    const Instance& inst = instances[static_cast<std::size_t>(i) % instances.size()];
    std::size_t len = 1 + pick_index(rng, 40);
    std::vector<NodeId> seq;
    if (i % 2 == 0) {
      seq = oracle::random_sequence(inst, len, rng);
    } else {
      // A slice of a constructed route, so most of these are feasible.
      const Solution& sol = routes[static_cast<std::size_t>(i) % instances.size()];
      const Route& route = sol.routes[pick_index(rng, sol.routes.size())];
      const std::size_t from = pick_index(rng, route.visits.size());
      len = std::min(len, route.visits.size() - from);
      seq.assign(route.visits.begin() + static_cast<std::ptrdiff_t>(from),
                 route.visits.begin() + static_cast<std::ptrdiff_t>(from + len));
    }
    const oracle::Scratch want = oracle::scratch_eval(inst, seq);
    // Left fold, and a random split joined by concat.
    const SeqEval fold = evaluate_sequence(inst, seq);
    SeqEval joined = fold;
    if (len > 1) {
      const std::size_t cut = 1 + pick_index(rng, len - 1);
      const std::span<const NodeId> all(seq);
      joined = concat(inst, evaluate_sequence(inst, all.first(cut)),
                      evaluate_sequence(inst, all.subspan(cut)));
    }
    for (const SeqEval& got : {fold, joined}) {
      const bool same = got.feasible == want.feasible && got.cost == want.cost &&
                        got.ec == want.ec && got.ls == want.ls && got.q_sum == want.q_sum &&
                        got.q_max == want.q_max;
      mismatches += same ? 0 : 1;
    }
    feasible += want.feasible ? 1 : 0;
  }
  return {mismatches == 0,
          fmt("%d sequences (%lld time-feasible), %lld mismatches", n_seq,
              static_cast<long long>(feasible), static_cast<long long>(mismatches))};
}

// Disjoint paths against enumeration.
Outcome kdspp_optimality() {
  Rng rng(202);
  int graphs = 0;
  int mismatches = 0;
  std::size_t max_blocks = 0;
  for (std::uint64_t seed = 1; graphs < 200; ++seed) {
    const std::size_t R = 2 + seed % 7;
    const std::size_t K = 1 + seed % 3;
    GeneratorConfig c = oracle::small_config(seed, R, K);
    c.buffer = 60 + 60 * static_cast<Time>(seed % 4);
    const Instance inst = generate(c);
    std::vector<Block> blocks;
    if (seed % 3 == 0) {
      // Blocks of an existing solution, so consecutive blocks are chained.
      const Solution sol = construct_initial(inst, rng);
      blocks = blocks_from_solution(inst, sol);
    } else {
      Hypergraph g = enumerate_hyperedges(inst, 3);
      assign_weights(g, {}, inst);
      const auto method = static_cast<MatchingMethod>(seed % 4);
      const auto policy = static_cast<StartPolicy>(seed % 3);
      blocks = blocks_from_matching(inst, g, match(g, method, rng), policy);
    }
    if (blocks.size() > 8) {
      continue;
    }
    std::optional<ConnectionLimits> limits;
    if (seed % 2 == 0) {
      limits = ConnectionLimits{1500, 600};
    }
    const auto vehicles = all_vehicles(inst);
    const DispatchGraph dg = build_graph(inst, blocks, vehicles, limits);
    const PathSet ps = kdspp(dg, vehicles.size());
    if (ps.weight != oracle::brute_kdspp(dg)) {
      ++mismatches;
    }
    if (!validate(assemble(inst, dg, blocks, ps), inst).empty()) {
      ++mismatches;
    }
    max_blocks = std::max(max_blocks, blocks.size());
    ++graphs;
  }
  return {mismatches == 0, fmt("%d graphs (up to %zu blocks), %d mismatches", graphs,
                               max_blocks, mismatches)};
}

IlsParams micro_ils() {
  IlsParams p;
  p.time_limit = 600.0;
  p.max_iterations = 10;
  p.local_loops = 1;
  p.rnr.iterations = 2000;
  p.workers = 1;
  return p;
}

// Tiny instances solved exactly by enumeration.
Outcome micro_optimality() {
  int n = 0;
  int integrated_unassigned = 0;
  int integrated_cost = 0;
  int hybrid_cost = 0;
  for (std::uint64_t seed = 1; n < 100; ++seed) {
    const std::size_t R = 1 + seed % 4;
    const std::size_t K = 1 + (seed / 4) % 2;
    GeneratorConfig c = oracle::small_config(seed + 5000, R, K);
    c.buffer = 120 + 60 * static_cast<Time>(seed % 3);
    c.capacity = 1 + static_cast<int>(seed % 3);
    const Instance inst = generate(c);
    const oracle::Optimum opt = oracle::micro_optimum(inst);

    const IlsResult integ = run_ils(inst, micro_ils(), seed);
    if (integ.objective.unassigned == opt.unassigned) {
      ++integrated_unassigned;
      integrated_cost += integ.objective.cost == opt.cost ? 1 : 0;
    }

    RunConfig rc;
    rc.mode = RunMode::hybrid;
    rc.seed = seed;
    rc.workers = 1;
    rc.ils = micro_ils();
    rc.time_limit = rc.ils.time_limit;
    const SolveOutcome hyb = solve(inst, rc);
    if (hyb.objective.unassigned == opt.unassigned && hyb.objective.cost == opt.cost) {
      ++hybrid_cost;
    }
    ++n;
  }
  const bool pass = integrated_unassigned == n && integrated_cost * 100 >= 95 * n &&
                    hybrid_cost == n;
  return {pass, fmt("%d instances: integrated unassigned %d/%d, cost %d/%d; hybrid %d/%d", n,
                    integrated_unassigned, n, integrated_cost, n, hybrid_cost, n)};
}

// BS(k) against enumeration of the neighborhood.
Outcome bs_exactness() {
  Rng rng(404);
  int routes = 0;
  int exact_bad = 0;
  int thick_bad = 0;
  int improved = 0;
  const BsGraph graph(3);
  for (std::uint64_t seed = 1; routes < 300; ++seed) {
    GeneratorConfig c = oracle::small_config(seed + 9000, 5, 1);
    c.buffer = 300 + 60 * static_cast<Time>(seed % 6);
    c.capacity = 1 + static_cast<int>(seed % 4);
    const Instance inst = generate(c);
    const Solution sol = construct_initial(inst, rng);
    std::vector<NodeId> visits = sol.routes[0].visits;
    if (visits.size() < 3) {
      continue;
    }
    // A random feasible permutation from a few random perturbations.
    for (int i = 0; i < 3; ++i) {
      if (auto r = oracle::route_eval(inst, visits); r) {
        std::vector<NodeId> cand = visits;
        const std::size_t a = 1 + pick_index(rng, cand.size() - 1);
        const std::size_t b = 1 + pick_index(rng, cand.size() - 1);
        std::swap(cand[a], cand[b]);
        if (oracle::route_eval(inst, cand)) {
          visits = cand;
        }
      }
    }
    const Cost input = route_cost(inst, visits);
    const auto brute = oracle::brute_bs(inst, visits, 3);
    if (!brute) {
      ++exact_bad;
      continue;
    }
    const auto exact = bs_search(inst, visits, graph, 0);
    const Cost exact_cost = exact ? route_cost(inst, *exact) : input;
    if (exact_cost != *brute || (exact && !oracle::route_eval(inst, *exact))) {
      ++exact_bad;
    }
    improved += exact ? 1 : 0;
    const auto thick = bs_search(inst, visits, graph, 4);
    const Cost thick_cost = thick ? route_cost(inst, *thick) : input;
    if (thick_cost < *brute || thick_cost > input || (thick && !oracle::route_eval(inst, *thick))) {
      ++thick_bad;
    }
    ++routes;
  }
  return {exact_bad == 0 && thick_bad == 0,
          fmt("%d routes (%d improvable), exact mismatches %d, thickness-4 violations %d",
              routes, improved, exact_bad, thick_bad)};
}

// Stored pooled sequences against enumeration of interleavings.
Outcome pooled_sequences() {
  GeneratorConfig c = oracle::small_config(505, 50, 5);
  c.horizon = 900;
  c.buffer = 300;
  c.capacity = 4;
  const Instance inst = generate(c);
  const Hypergraph g = enumerate_hyperedges(inst, 4);
  int checked = 0;
  int bad = 0;
  std::array<int, 5> by_size{};
  for (const Hyperedge& e : g.edges) {
    if (e.requests.size() < 2) {
      continue;
    }
    const auto brute = oracle::brute_pooled_sequence(inst, e.requests);
    const oracle::Scratch s = oracle::scratch_eval(inst, e.seq);
    if (!brute || *brute != e.seq_cost || s.cost != e.seq_cost || !s.feasible) {
      ++bad;
    }
    ++by_size[e.requests.size()];
    ++checked;
  }
  return {bad == 0 && by_size[4] > 0,
          fmt("%d pooled edges (sizes 2/3/4: %d/%d/%d), %d mismatches", checked, by_size[2],
              by_size[3], by_size[4], bad)};
}

// Every matching method partitions the requests; the LP bounds all
// integral matchings.
Outcome matching_bound() {
  Rng rng(606);
  int partitions_bad = 0;
  int bound_bad = 0;
  int small = 0;
  double worst_gap = 0.0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t R = seed <= 40 ? 2 + seed % 5 : 40;
    GeneratorConfig c = oracle::small_config(seed + 600, R, 2);
    c.buffer = 300;
    c.capacity = 2 + static_cast<int>(seed % 3);
    const Instance inst = generate(c);
    Hypergraph g = enumerate_hyperedges(inst, 4);
    WeightParams wp;
    wp.kind = static_cast<WeightKind>(seed % 4);
    assign_weights(g, wp, inst);
    for (auto method : {MatchingMethod::wsc, MatchingMethod::greedy, MatchingMethod::wsp,
                        MatchingMethod::randomized}) {
      if (!is_partition(g, match(g, method, rng))) {
        ++partitions_bad;
      }
    }
    if (R <= 6) {
      const LpSolution lp = solve_cover_lp(g, CoverKind::cover);
      const double best = oracle::best_integral_matching(g);
      worst_gap = std::min(worst_gap, lp.objective - best);
      if (lp.objective < best - 1e-6) {
        ++bound_bad;
      }
      ++small;
    }
  }
  return {partitions_bad == 0 && bound_bad == 0,
          fmt("60 hypergraphs x 4 methods, %d non-partitions; %d small LPs, %d bound "
              "violations (min gap %.2e)",
              partitions_bad, small, bound_bad, worst_gap)};
}

// Capacity one and zero buffer: dispatching alone is optimal.
Outcome taxi_exactness() {
  int bad = 0;
  int sub_bad = 0;
  std::int64_t total_unassigned = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorConfig c;
    c.seed = seed + 700;
    c.requests = 200;
    c.vehicles = 20;
    c.capacity = 1;
    c.buffer = 0;
    c.area = 2500.0;
    c.horizon = 1800;
    const Instance inst = generate(c);
    SequentialParams sp;
    sp.limits = std::nullopt;
    Rng rng(seed);
    const SequentialResult res = solve_sequential(inst, sp, rng);
    const std::int64_t best =
      static_cast<std::int64_t>(inst.num_requests()) - oracle::max_served_fixed_times(inst);
    bad += res.objective.unassigned == best ? 0 : 1;
    total_unassigned += res.objective.unassigned;

    // Subsample: ten requests and up to three vehicles, paths enumerated.
    std::vector<RequestId> reqs;
    for (RequestId r = 0; r < 10; ++r) {
      reqs.push_back(static_cast<RequestId>((r * 17 + seed) % inst.num_requests()));
    }
    std::sort(reqs.begin(), reqs.end());
    reqs.erase(std::unique(reqs.begin(), reqs.end()), reqs.end());
    const std::vector<VehicleId> vehs{0, 1, static_cast<VehicleId>(1 + seed % 18)};
    const SubInstance sub = inst.restrict(vehs, reqs);
    Hypergraph g = enumerate_hyperedges(sub.instance, 4);
    assign_weights(g, {}, sub.instance);
    Rng r2(seed);
    const auto blocks =
      blocks_from_matching(sub.instance, g, match(g, MatchingMethod::wsc, r2), StartPolicy::earliest);
    const auto vs = all_vehicles(sub.instance);
    const DispatchGraph dg = build_graph(sub.instance, blocks, vs, std::nullopt);
    const PathSet ps = kdspp(dg, vs.size());
    const Solution sub_sol = assemble(sub.instance, dg, blocks, ps);
    const auto sub_unassigned = static_cast<std::int64_t>(sub_sol.unassigned.size());
    const std::int64_t sub_best = static_cast<std::int64_t>(sub.instance.num_requests()) -
                                  oracle::max_served_fixed_times(sub.instance);
    if (blocks.size() != sub.instance.num_requests() || ps.weight != oracle::brute_kdspp(dg) ||
        sub_unassigned != sub_best) {
      ++sub_bad;
    }
  }
  return {bad == 0 && sub_bad == 0,
          fmt("20 instances, %d differ from the flow optimum (mean unassigned %.1f); "
              "%d subsample mismatches",
              bad, static_cast<double>(total_unassigned) / 20.0, sub_bad)};
}

// Long random operator sequence with validation after every step.
Outcome operator_fuzzing() {
  GeneratorConfig c;
  c.seed = 808;
  c.requests = 500;
  c.vehicles = 50;
  c.capacity = 3;
  c.buffer = 300;
  c.area = 6000.0;
  c.horizon = 3600;
  const Instance inst = generate(c);
  Rng rng(808);
  RnrParams params;
  RouteState state(inst, construct_initial(inst, rng));
  const BsGraph graph(params.bs_k);
  const std::int64_t steps = 100000;
  std::int64_t violations = 0;
  std::int64_t bound_errors = 0;
  std::array<std::int64_t, 4> counts{};
  for (std::int64_t step = 0; step < steps; ++step) {
    const std::size_t op = pick_index(rng, 4);
    ++counts[op];
    if (op == 0) {
      const RuinReport rep = ruin(state, params, rng);
      if (!rep.removals.empty()) {
        const double ks_max = std::max(1.0, std::floor(rep.max_strings));
        bool ok = rep.strings >= 1 && static_cast<double>(rep.strings) <= ks_max &&
                  rep.removals.size() <= rep.strings &&
                  rep.max_string <= params.max_string + 1e-12;
        for (const StringRemoval& s : rep.removals) {
          const auto lmax = static_cast<std::size_t>(
            std::floor(std::min(static_cast<double>(s.route_size), rep.max_string)));
          ok = ok && s.bound == lmax && s.length >= 1 && s.length <= s.route_size &&
               s.length <= std::max<std::size_t>(1, lmax);
        }
        bound_errors += ok ? 0 : 1;
      }
    } else if (op == 1) {
      recreate(state, params, rng);
    } else if (op == 2) {
      perturb(state, 1 + pick_index(rng, 3), 0.5, rng);
    } else {
      const auto v = static_cast<VehicleId>(pick_index(rng, state.num_vehicles()));
      if (state.route_size(v) >= 2) {
        if (auto r = bs_search(inst, state.visits(v), graph, params.bs_thickness)) {
          state.set_route(v, std::move(*r));
        }
      }
    }
    violations += validate(state.to_solution(), inst).empty() ? 0 : 1;
  }
  return {violations == 0 && bound_errors == 0,
          fmt("%lld steps (ruin %lld, recreate %lld, perturb %lld, bs %lld), %lld violations, "
              "%lld bound errors",
              static_cast<long long>(steps), static_cast<long long>(counts[0]),
              static_cast<long long>(counts[1]), static_cast<long long>(counts[2]),
              static_cast<long long>(counts[3]), static_cast<long long>(violations),
              static_cast<long long>(bound_errors))};
}

// Buffer sweep with warm starts.
Outcome warm_start_chain() {
  int bad_validate = 0;
  int bad_monotone = 0;
  int steps = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GeneratorConfig c;
    c.seed = seed + 900;
    c.requests = 300;
    c.vehicles = 30;
    c.buffer = 0;
    c.area = 8000.0;
    const Instance base = generate(c);
    std::optional<Solution> warm;
    for (Time delta : {Time{0}, Time{60}, Time{120}}) {
      const Instance inst = base.with_buffer(delta);
      RunConfig rc;
      rc.mode = RunMode::hybrid;
      rc.seed = seed;
      rc.workers = 1;
      rc.time_limit = 4.0;
      rc.ils.max_iterations = 5;
      rc.ils.local_loops = 2;
      rc.ils.rnr.iterations = 500;
      std::optional<Objective> warm_obj;
      if (warm) {
        if (!validate(*warm, inst).empty()) {
          ++bad_validate;
          warm.reset();
        } else {
          warm_obj = evaluate(*warm, inst);
        }
      }
      const SolveOutcome out = solve(inst, rc, warm);
      if (warm_obj && !no_worse(out.objective, *warm_obj)) {
        ++bad_monotone;
      }
      warm = out.solution;
      ++steps;
    }
  }
  return {bad_validate == 0 && bad_monotone == 0,
          fmt("5 instances x 3 buffers (%d solves), %d warm starts invalid, %d regressions",
              steps, bad_validate, bad_monotone)};
}

// n requests a single vehicle can chain, scattered in the plane.
Instance chainable(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::uniform_int_distribution<int> coord(0, 2000);
  std::vector<std::pair<int, int>> pts{{1000, 1000}};
  for (std::size_t i = 0; i < 2 * n; ++i) {
    pts.push_back({coord(rng), coord(rng)});
  }
  const std::size_t L = pts.size();
  std::vector<Cost> m(L * L);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const double dx = pts[i].first - pts[j].first;
      const double dy = pts[i].second - pts[j].second;
      m[i * L + j] = static_cast<Cost>(std::llround(std::sqrt(dx * dx + dy * dy)));
    }
  }
  // Windows follow one reference tour: depot, p0, d0, p1, d1, ...
  Instance::Parts p;
  p.name = "chain";
  p.matrix = std::make_shared<const TravelMatrix>(L, m, m);
  p.capacity = 1;
  p.window_mode = WindowMode::explicit_windows;
  Time t = 0;
  std::size_t prev = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const auto id = static_cast<RequestId>(r);
    const auto lp = static_cast<LocationId>(1 + 2 * r);
    const auto ld = static_cast<LocationId>(2 + 2 * r);
    t += m[prev * L + static_cast<std::size_t>(lp)] + 10;
    const Time tp = t;
    t += m[static_cast<std::size_t>(lp) * L + static_cast<std::size_t>(ld)] + 10;
    const Time td = t;
    prev = static_cast<std::size_t>(ld);
    const Time slack = 20 + static_cast<Time>(pick_index(rng, 100));
    p.nodes.push_back({NodeKind::pickup, lp, id, 1, tp - slack, tp + slack, 10});
    p.nodes.push_back({NodeKind::delivery, ld, id, -1, td - slack, td + slack, 10});
    p.requests.push_back({id, static_cast<NodeId>(2 * r), static_cast<NodeId>(2 * r + 1),
                          tp - slack, td + slack});
  }
  for (std::size_t v = 0; v < n; ++v) {
    p.vehicles.push_back({static_cast<VehicleId>(v), static_cast<NodeId>(p.nodes.size())});
    p.nodes.push_back({NodeKind::vehicle_start, 0, static_cast<std::int32_t>(v), 0, 0,
                       t + 100000, 0});
  }
  p.route_end = static_cast<NodeId>(p.nodes.size());
  p.nodes.push_back({NodeKind::route_end, 0, -1, 0, 0, t + 100000, 0});
  return Instance(std::move(p));
}

// Fleet minimization on chainable instances, and a bundled benchmark file.
Outcome fleet_minimization() {
  int reached = 0;
  std::int64_t perturbations = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 6 + seed;
    const Instance inst = chainable(seed + 1000, n);
    Solution start = empty_solution(inst);
    for (std::size_t r = 0; r < n; ++r) {
      const Request& q = inst.request(static_cast<RequestId>(r));
      start.routes[r].visits = {inst.vehicle(static_cast<VehicleId>(r)).start, q.pickup,
                                q.delivery};
    }
    start.unassigned.clear();
    if (!validate(start, inst).empty()) {
      continue;
    }
    AgesParams ap;
    ap.budget = 10000;
    PenaltyTable rho(n);
    Rng rng(seed);
    const AgesResult res = ages(inst, start, ap, rho, rng);
    perturbations += res.perturbations;
    if (validate(res.solution, inst).empty() && res.solution.unassigned.empty() &&
        res.solution.num_used_vehicles() == 1) {
      ++reached;
    }
  }
  // The classic pipeline end to end on one chainable instance.
  const Instance inst = chainable(77, 8);
  RunConfig rc;
  rc.mode = RunMode::classic_fleetmin;
  rc.workers = 1;
  rc.time_limit = 30.0;
  rc.ils.max_iterations = 2;
  rc.ils.local_loops = 1;
  rc.ils.rnr.iterations = 200;
  const SolveOutcome classic = solve(inst, rc);

  const BenchmarkInstance bench = read_benchmark(RIDEPOOL_TEST_DATA "/sb-mini-1.txt");
  const Solution published = read_benchmark_solution(RIDEPOOL_TEST_DATA "/sb-mini-1.sol", bench);
  const bool bench_ok = validate(published, bench.instance).empty() &&
                        evaluate(published, bench.instance).cost == 226;
  return {reached == 10 && classic.objective.vehicles == 1 && bench_ok,
          fmt("%d/10 chainable instances reach one route (%lld perturbations); classic mode "
              "%lld route(s); benchmark solution %s",
              reached, static_cast<long long>(perturbations),
              static_cast<long long>(classic.objective.vehicles),
              bench_ok ? "validates at cost 226" : "FAILS")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Identical output for a fixed seed; iteration throughput at scale.
Outcome determinism_throughput() {
  const auto dir = std::filesystem::temp_directory_path() / "ridepool_acceptance";
  std::filesystem::create_directories(dir);
  GeneratorConfig c;
  c.seed = 1111;
  c.requests = 150;
  c.vehicles = 15;
  const Instance small = generate(c);
  save_native(dir / "det.txt", small);
  std::vector<std::string> outputs;
  bool ran = true;
  for (int run = 0; run < 3; ++run) {
    const auto out = dir / ("det_" + std::to_string(run) + ".sol");
    const std::string cmd = std::string("\"") + RIDEPOOL_CLI + "\" solve --instance \"" +
                            (dir / "det.txt").string() +
                            "\" --mode integrated --seed 7 --workers 1 --time-limit 300"
                            " --param max_iterations=3 --param local_loops=2"
                            " --param rnr_iterations=300 --out \"" + out.string() + "\" > \"" +
                            (dir / ("det_" + std::to_string(run) + ".csv")).string() + "\"";
    ran = ran && std::system(cmd.c_str()) == 0;
    outputs.push_back(slurp(out));
  }
  const bool identical = ran && !outputs[0].empty() && outputs[0] == outputs[1] &&
                         outputs[1] == outputs[2];

  c.seed = 2222;
  c.requests = 1000;
  c.vehicles = 100;
  const Instance large = generate(c);
  IlsParams p;
  p.time_limit = 60.0;
  p.workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  p.local_loops = 1000;
  IlsEngine engine(large, p, 3);
  while (engine.rnr_iterations() < 5000 && engine.step()) {
  }
  const double seconds = engine.elapsed();
  const bool fast = engine.rnr_iterations() >= 5000 && seconds <= 60.0;
  const bool feasible = validate(engine.best(), large).empty();
  std::filesystem::remove_all(dir);
  return {identical && fast && feasible,
          fmt("3 CLI runs %s; %lld RnR iterations on 1000 requests in %.1f s with %zu worker(s)",
              identical ? "byte-identical" : "DIFFER",
              static_cast<long long>(engine.rnr_iterations()), seconds, p.workers)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
    {"concatenation matches propagation", concat_oracle},
    {"k-disjoint paths optimal", kdspp_optimality},
    {"micro-instance optimality", micro_optimality},
    {"BS(k) exactness", bs_exactness},
    {"pooled sequence optimality", pooled_sequences},
    {"matching validity and LP bound", matching_bound},
    {"taxi-mode exactness", taxi_exactness},
    {"operator feasibility fuzzing", operator_fuzzing},
    {"warm-start monotonicity", warm_start_chain},
    {"fleet minimization", fleet_minimization},
    {"determinism and throughput", determinism_throughput},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.insert(std::atoi(argv[i]));
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].name << ": "
              << o.detail << fmt(" (%.1f s)", secs) << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
