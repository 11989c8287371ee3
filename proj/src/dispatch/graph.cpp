#include "ridepool/dispatch.h"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace ridepool {

DispatchGraph build_graph(const Instance& instance, std::span<const Block> blocks,
                          std::span<const VehicleId> vehicles,
                          const std::optional<ConnectionLimits>& limits) {
  DispatchGraph g;
  g.vehicles.assign(vehicles.begin(), vehicles.end());
  g.num_blocks = blocks.size();
  const auto& end = instance.route_end();

  struct Pending {
    int from;
    int to;
    Cost cost;
    int n_req;
  };
  std::vector<Pending> pending;

  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const int vv = g.vehicle_vertex(i);
    pending.push_back({DispatchGraph::source, vv, 0, 0});
    pending.push_back({vv, DispatchGraph::sink, 0, 0});
    const Vehicle& veh = instance.vehicle(vehicles[i]);
    const Time ready = instance.node(veh.start).open;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (ready + instance.travel(veh.start, blocks[b].first()) <= blocks[b].start) {
        pending.push_back({vv, g.block_vertex(b), instance.cost(veh.start, blocks[b].first()),
                           blocks[b].n_req});
      }
    }
  }

  std::vector<std::size_t> by_start(blocks.size());
  std::iota(by_start.begin(), by_start.end(), std::size_t{0});
  std::stable_sort(by_start.begin(), by_start.end(), [&](std::size_t a, std::size_t b) {
    return blocks[a].start < blocks[b].start;
  });
  std::vector<Time> starts(blocks.size());
  for (std::size_t i = 0; i < by_start.size(); ++i) {
    starts[i] = blocks[by_start[i]].start;
  }
  // Consecutive blocks of the same partial route; exempt from the limits.
  auto successor_of = [&](std::size_t a, std::size_t b) {
    return blocks[a].origin >= 0 && blocks[a].origin == blocks[b].origin &&
           blocks[b].origin_rank == blocks[a].origin_rank + 1;
  };
  // Strict (start, index) order keeps the graph acyclic even for blocks of
  // zero duration.
  auto ordered = [&](std::size_t a, std::size_t b) {
    return blocks[a].start < blocks[b].start || (blocks[a].start == blocks[b].start && a < b);
  };
  auto feasible = [&](std::size_t a, std::size_t b) {
    return a != b && ordered(a, b) &&
           blocks[a].end() + instance.travel(blocks[a].last(), blocks[b].first()) <=
             blocks[b].start;
  };

  for (std::size_t a = 0; a < blocks.size(); ++a) {
    const Block& ba = blocks[a];
    const int va = g.block_vertex(a);
    auto it = std::lower_bound(starts.begin(), starts.end(), ba.end());
    for (auto k = static_cast<std::size_t>(it - starts.begin()); k < by_start.size(); ++k) {
      const std::size_t b = by_start[k];
      if (limits && starts[k] - ba.end() > limits->max_gap) {
        break;
      }
      if (successor_of(a, b) || !feasible(a, b)) {
        continue;
      }
      const Cost c = instance.cost(ba.last(), blocks[b].first());
      if (limits && c > limits->max_distance) {
        continue;
      }
      pending.push_back({va, g.block_vertex(b), c, blocks[b].n_req});
    }
    // blocks_from_solution emits the blocks of a route consecutively.
    if (const std::size_t b = a + 1; b < blocks.size()) {
      if (successor_of(a, b) && feasible(a, b)) {
        pending.push_back({va, g.block_vertex(b), instance.cost(ba.last(), blocks[b].first()),
                           blocks[b].n_req});
      }
    }
    if (end) {
      if (ba.end() + instance.travel(ba.last(), *end) <= instance.node(*end).close) {
        pending.push_back({va, DispatchGraph::sink, instance.cost(ba.last(), *end), 0});
      }
    } else {
      pending.push_back({va, DispatchGraph::sink, 0, 0});
    }
  }

  Cost max_cost = 0;
  std::int64_t total_requests = 0;
  for (const Pending& p : pending) {
    max_cost = std::max(max_cost, p.cost);
  }
  for (const Block& b : blocks) {
    total_requests += b.n_req;
  }
  // Any path set pays at most one costly arc into each block, plus one
  // return arc per block when routes close at a depot.
  const std::int64_t costly_arcs = total_requests + (end ? static_cast<std::int64_t>(blocks.size()) : 0);
  g.xi = (max_cost + 1) * (costly_arcs + 1);
  g.arcs.reserve(pending.size());
  for (const Pending& p : pending) {
    g.arcs.push_back({p.from, p.to, p.cost - g.xi * p.n_req});
  }
  return g;
}

void write_graph(std::ostream& out, const DispatchGraph& graph) {
  out << "vertices " << graph.num_vertices() << " vehicles " << graph.vehicles.size()
      << " blocks " << graph.num_blocks << " xi " << graph.xi << '\n';
  for (const DispatchArc& a : graph.arcs) {
    out << a.from << ' ' << a.to << ' ' << a.weight << '\n';
  }
}

} // namespace ridepool
