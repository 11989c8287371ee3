#pragma once

#include "ridepool/pooling.h"
#include "ridepool/solution.h"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ridepool {

enum class StartPolicy : std::uint8_t { earliest, average, latest };

StartPolicy start_policy_from_string(const std::string& text);

// A visit sequence that starts and ends with an empty vehicle, scheduled to
// begin service at its first node at `start`.
struct Block {
  std::vector<NodeId> seq;
  Time start = 0;
  Time dur = 0;  // start of service at the first node to start of service at the last
  Cost dist = 0; // internal travel cost
  Time tt = 0;   // internal travel time without waiting
  Time earliest = 0; // e_b: no earlier start shortens the duration
  Time latest = 0;   // l_b: latest feasible start
  int n_req = 0;
  // Route and rank the block came from in a partial solution; -1 otherwise.
  VehicleId origin = -1;
  int origin_rank = -1;

  NodeId first() const { return seq.front(); }
  NodeId last() const { return seq.back(); }
  Time end() const { return start + dur; }
};

// Timing fields for `seq` with the start chosen by `policy`.
Block make_block(const Instance& instance, std::vector<NodeId> seq, StartPolicy policy);

std::vector<Block> blocks_from_matching(const Instance& instance, const Hypergraph& graph,
                                        const Matching& matching, StartPolicy policy);

// Splits every route at its zero-load points. Each block keeps the timing of
// the route it came from, moved as late as possible without adding waiting
// time, so the original route order stays feasible.
std::vector<Block> blocks_from_solution(const Instance& instance, const Solution& solution);

struct ConnectionLimits {
  Cost max_distance = 4000;
  Time max_gap = 1800;
};

struct DispatchArc {
  int from = 0;
  int to = 0;
  Cost weight = 0;
};

// Vertex 0 is the source, 1 the sink, 2 + i the i-th vehicle and
// 2 + |vehicles| + b block b.
struct DispatchGraph {
  static constexpr int source = 0;
  static constexpr int sink = 1;

  std::vector<VehicleId> vehicles;
  std::size_t num_blocks = 0;
  Cost xi = 0;
  std::vector<DispatchArc> arcs;

  int vehicle_vertex(std::size_t i) const { return 2 + static_cast<int>(i); }
  int block_vertex(std::size_t b) const {
    return 2 + static_cast<int>(vehicles.size()) + static_cast<int>(b);
  }
  std::size_t num_vertices() const { return 2 + vehicles.size() + num_blocks; }
  bool is_block(int vertex) const { return vertex >= block_vertex(0); }
};

// Arcs: source to every vehicle and every vehicle to the sink with weight 0;
// vehicle to block if the block can begin on time, weight
// c(v, first) - xi * n_req; block to block if the first ends early enough,
// weight c(last, first') - xi * n_req'; block to sink, weight 0 or the cost
// of returning to the route end. Limits prune block-to-block arcs, except
// between consecutive blocks of the same partial route.
DispatchGraph build_graph(const Instance& instance, std::span<const Block> blocks,
                          std::span<const VehicleId> vehicles,
                          const std::optional<ConnectionLimits>& limits);

struct PathSet {
  // Vertices strictly between source and sink, one path per vehicle.
  std::vector<std::vector<int>> paths;
  Cost weight = 0;
};

// k internally vertex-disjoint source-sink paths of minimum total weight.
PathSet kdspp(const DispatchGraph& graph, std::size_t k);

// Routes from the paths; requests of blocks on no path are unassigned.
// Throws InternalError if the result fails validation.
Solution assemble(const Instance& instance, const DispatchGraph& graph,
                  std::span<const Block> blocks, const PathSet& paths);

void write_graph(std::ostream& out, const DispatchGraph& graph);

} // namespace ridepool
