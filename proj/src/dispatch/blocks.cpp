#include "ridepool/dispatch.h"
#include "ridepool/schedule.h"

#include <algorithm>

namespace ridepool {

StartPolicy start_policy_from_string(const std::string& text) {
  if (text == "earliest") {
    return StartPolicy::earliest;
  }
  if (text == "average") {
    return StartPolicy::average;
  }
  if (text == "latest") {
    return StartPolicy::latest;
  }
  throw InputError("unknown start policy '" + text + "'");
}

namespace {

void fill_timing(const Instance& instance, Block& b) {
  const SeqEval e = evaluate_sequence(instance, b.seq);
  b.tt = e.tt;
  b.dist = e.cost;
  b.latest = e.ls;
  b.earliest = std::max(instance.node(b.first()).open, std::min(e.ec - e.tt, e.ls));
  b.n_req = 0;
  for (NodeId n : b.seq) {
    b.n_req += instance.is_pickup(n) ? 1 : 0;
  }
}

void set_start(const Instance& instance, Block& b, Time start) {
  const SeqEval e = evaluate_sequence(instance, b.seq);
  b.start = start;
  b.dur = std::max(start + e.tt, e.ec) - start;
}

} // namespace

Block make_block(const Instance& instance, std::vector<NodeId> seq, StartPolicy policy) {
  Block b;
  b.seq = std::move(seq);
  fill_timing(instance, b);
  Time start = b.earliest;
  if (policy == StartPolicy::average) {
    const Time sum = b.earliest + b.latest;
    start = sum >= 0 ? sum / 2 : -((-sum + 1) / 2);
  } else if (policy == StartPolicy::latest) {
    start = b.latest;
  }
  set_start(instance, b, start);
  return b;
}

std::vector<Block> blocks_from_matching(const Instance& instance, const Hypergraph& graph,
                                        const Matching& matching, StartPolicy policy) {
  std::vector<Block> blocks;
  blocks.reserve(matching.edges.size());
  for (std::size_t e : matching.edges) {
    blocks.push_back(make_block(instance, graph.edges[e].seq, policy));
  }
  return blocks;
}

std::vector<Block> blocks_from_solution(const Instance& instance, const Solution& solution) {
  std::vector<Block> blocks;
  for (const Route& route : solution.routes) {
    if (route.empty()) {
      continue;
    }
    const Schedule schedule = propagate_schedule(instance, route.visits);
    int load = 0;
    int rank = 0;
    std::size_t begin = 1;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      load += instance.node(route.visits[i]).demand;
      if (load != 0 && i + 1 < route.visits.size()) {
        continue;
      }
      Block b;
      b.seq.assign(route.visits.begin() + static_cast<std::ptrdiff_t>(begin),
                   route.visits.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      b.origin = route.vehicle;
      b.origin_rank = rank++;
      fill_timing(instance, b);
      set_start(instance, b, std::max(schedule.departure[begin], b.earliest));
      blocks.push_back(std::move(b));
      begin = i + 1;
    }
  }
  return blocks;
}

Solution assemble(const Instance& instance, const DispatchGraph& graph,
                  std::span<const Block> blocks, const PathSet& paths) {
  Solution sol = empty_solution(instance);
  std::vector<char> served(instance.num_requests(), 0);
  for (const auto& path : paths.paths) {
    if (path.empty()) {
      continue;
    }
    const int first = path.front();
    if (first < 2 || graph.is_block(first)) {
      throw InternalError("dispatch path does not begin at a vehicle");
    }
    const VehicleId v = graph.vehicles[first - 2];
    Route& route = sol.routes[v];
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Block& b = blocks[path[i] - graph.block_vertex(0)];
      for (NodeId n : b.seq) {
        route.visits.push_back(n);
        if (instance.is_pickup(n)) {
          served[instance.request_of(n)] = 1;
        }
      }
    }
  }
  sol.unassigned.clear();
  for (const Request& r : instance.requests()) {
    if (!served[r.id]) {
      sol.unassigned.push_back(r.id);
    }
  }
  const auto violations = validate(sol, instance);
  if (!violations.empty()) {
    throw InternalError("assembled dispatch solution is infeasible: " +
                        violations.front().message);
  }
  return sol;
}

} // namespace ridepool
