#pragma once

#include "ridepool/random.h"
#include "ridepool/seq_eval.h"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ridepool {

// A candidate pooled ride and its cheapest feasible visit sequence.
struct Hyperedge {
  std::vector<RequestId> requests; // sorted ascending
  std::vector<NodeId> seq;
  Cost seq_cost = 0;
  double weight = 0.0;
};

enum class WeightKind : std::uint8_t { size, cost, overlap, mixed };

WeightKind weight_kind_from_string(const std::string& text);

struct WeightParams {
  WeightKind kind = WeightKind::mixed;
  double rho = 0.7;
};

struct Hypergraph {
  int rank = 4;
  // Requests ascending by earliest pickup time, ties by id.
  std::vector<RequestId> order;
  // edges[r] is the singleton of request r; pooled edges follow.
  std::vector<Hyperedge> edges;

  std::size_t num_requests() const { return order.size(); }
  std::size_t num_singletons() const { return order.size(); }
};

std::vector<RequestId> vertex_order(const Instance& instance);

// Requests after order[index] whose earliest pickup lies in
// [e_r, l_r + buffer].
std::vector<RequestId> neighbors(const Instance& instance, std::span<const RequestId> order,
                                 std::size_t index);

struct PooledSequence {
  std::vector<NodeId> seq;
  Cost cost = 0;
};

// Cheapest visit order of the requests that starts and ends with an empty
// vehicle, never empties in between, respects precedence, capacity and the
// windows when starting at the first window open. None if no order exists.
std::optional<PooledSequence> cheapest_sequence(const Instance& instance,
                                                std::span<const RequestId> requests);

// Singletons plus every subset of a request and its neighbors of size 2..rank
// with a feasible sequence. A subset is only extended when it is feasible.
Hypergraph enumerate_hyperedges(const Instance& instance, int rank = 4);

double edge_weight(const Hyperedge& edge, const WeightParams& params, const Instance& instance,
                   int rank);
void assign_weights(Hypergraph& graph, const WeightParams& params, const Instance& instance);

enum class CoverKind : std::uint8_t { cover, partition };

struct LpSolution {
  std::vector<double> x;     // per edge
  std::vector<double> duals; // per request, for min sum(-w x)
  double objective = 0.0;    // sum(w x)
  std::int64_t pivots = 0;
};

// max sum w x  s.t.  every request covered at least once (cover) or exactly
// once (partition), 0 <= x <= 1. Every request needs a singleton edge.
LpSolution solve_cover_lp(const Hypergraph& graph, CoverKind kind);

// Indices into Hypergraph::edges.
struct Matching {
  std::vector<std::size_t> edges;
};

enum class MatchingMethod : std::uint8_t { wsc, greedy, wsp, randomized };

MatchingMethod matching_method_from_string(const std::string& text);

Matching greedy_round(const Hypergraph& graph, std::span<const double> x);
Matching greedy_match(const Hypergraph& graph);
Matching randomized_round(const Hypergraph& graph, std::span<const double> x, Rng& rng);
Matching match(const Hypergraph& graph, MatchingMethod method, Rng& rng);

bool is_partition(const Hypergraph& graph, const Matching& matching);
double matching_weight(const Hypergraph& graph, const Matching& matching);

// One line per edge: request ids, then the weight.
void write_matching(std::ostream& out, const Hypergraph& graph, const Matching& matching);

} // namespace ridepool
