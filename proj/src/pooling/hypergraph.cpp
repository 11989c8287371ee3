#include "ridepool/pooling.h"

#include <algorithm>
#include <limits>

namespace ridepool {

WeightKind weight_kind_from_string(const std::string& text) {
  if (text == "1" || text == "size") {
    return WeightKind::size;
  }
  if (text == "2" || text == "cost") {
    return WeightKind::cost;
  }
  if (text == "3" || text == "overlap") {
    return WeightKind::overlap;
  }
  if (text == "4" || text == "mixed") {
    return WeightKind::mixed;
  }
  throw InputError("unknown weight function '" + text + "'");
}

std::vector<RequestId> vertex_order(const Instance& instance) {
  std::vector<RequestId> order(instance.num_requests());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<RequestId>(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](RequestId a, RequestId b) {
    return instance.request(a).earliest < instance.request(b).earliest;
  });
  return order;
}

std::vector<RequestId> neighbors(const Instance& instance, std::span<const RequestId> order,
                                 std::size_t index) {
  const Request& r = instance.request(order[index]);
  const Time limit = r.latest + instance.buffer();
  std::vector<RequestId> out;
  for (std::size_t j = index + 1; j < order.size(); ++j) {
    const Time e = instance.request(order[j]).earliest;
    if (e > limit) {
      break;
    }
    if (e >= r.earliest) {
      out.push_back(order[j]);
    }
  }
  return out;
}

namespace {

struct SequenceSearch {
  const Instance& inst;
  std::vector<NodeId> nodes; // pickups and deliveries of the subset
  std::vector<char> used;
  std::vector<NodeId> current;
  std::vector<NodeId> best;
  Cost best_cost = 0;
  bool found = false;
  int capacity = 1;

  void run(const SeqEval& prefix, int load) {
    if (current.size() == nodes.size()) {
      if (!found || prefix.cost < best_cost) {
        found = true;
        best_cost = prefix.cost;
        best = current;
      }
      return;
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (used[i]) {
        continue;
      }
      const NodeId n = nodes[i];
      if (inst.is_delivery(n) && !used[i - 1]) {
        continue; // pickup sits right before its delivery in `nodes`
      }
      const SeqEval next = current.empty() ? SeqEval::single(inst, n) : extend(inst, prefix, n);
      if (!next.ok(capacity) || (found && next.cost >= best_cost)) {
        continue;
      }
      const int next_load = load + inst.node(n).demand;
      // The vehicle must stay occupied until the last delivery.
      if (next_load <= 0 && current.size() + 1 < nodes.size()) {
        continue;
      }
      used[i] = 1;
      current.push_back(n);
      run(next, next_load);
      current.pop_back();
      used[i] = 0;
    }
  }
};

} // namespace

std::optional<PooledSequence> cheapest_sequence(const Instance& instance,
                                                std::span<const RequestId> requests) {
  SequenceSearch search{instance, {}, {}, {}, {}, 0, false, instance.capacity()};
  for (RequestId r : requests) {
    search.nodes.push_back(instance.request(r).pickup);
    search.nodes.push_back(instance.request(r).delivery);
  }
  search.used.assign(search.nodes.size(), 0);
  search.run(SeqEval{}, 0);
  if (!search.found) {
    return std::nullopt;
  }
  return PooledSequence{std::move(search.best), search.best_cost};
}

namespace {

void extend_subsets(const Instance& inst, int rank, std::vector<RequestId>& subset,
                    const std::vector<RequestId>& candidates, std::size_t from,
                    std::vector<Hyperedge>& out) {
  for (std::size_t i = from; i < candidates.size(); ++i) {
    subset.push_back(candidates[i]);
    std::vector<RequestId> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (auto seq = cheapest_sequence(inst, sorted)) {
      out.push_back(Hyperedge{sorted, std::move(seq->seq), seq->cost, 0.0});
      if (static_cast<int>(subset.size()) < rank) {
        extend_subsets(inst, rank, subset, candidates, i + 1, out);
      }
    }
    subset.pop_back();
  }
}

} // namespace

Hypergraph enumerate_hyperedges(const Instance& instance, int rank) {
  if (rank < 1) {
    throw InputError("hyperedge rank must be at least 1");
  }
  Hypergraph graph;
  graph.rank = rank;
  graph.order = vertex_order(instance);
  graph.edges.reserve(instance.num_requests());
  for (const Request& r : instance.requests()) {
    Hyperedge single;
    single.requests = {r.id};
    single.seq = {r.pickup, r.delivery};
    single.seq_cost = instance.cost(r.pickup, r.delivery);
    graph.edges.push_back(std::move(single));
  }
  if (rank < 2) {
    return graph;
  }
  // Each subset is generated only from its first member in vertex order, so
  // no subset appears twice.
  for (std::size_t i = 0; i < graph.order.size(); ++i) {
    const auto candidates = neighbors(instance, graph.order, i);
    std::vector<RequestId> subset{graph.order[i]};
    extend_subsets(instance, rank, subset, candidates, 0, graph.edges);
  }
  return graph;
}

double edge_weight(const Hyperedge& edge, const WeightParams& params, const Instance& instance,
                   int rank) {
  const double w1 = -static_cast<double>(rank) / static_cast<double>(edge.requests.size());
  auto w2 = [&] { return static_cast<double>(edge.seq_cost) * w1; };
  auto w3 = [&] {
    Time max_l = std::numeric_limits<Time>::min();
    Time min_l = std::numeric_limits<Time>::max();
    Time max_e = std::numeric_limits<Time>::min();
    Time min_e = std::numeric_limits<Time>::max();
    for (RequestId r : edge.requests) {
      const Request& req = instance.request(r);
      max_l = std::max(max_l, req.latest);
      min_l = std::min(min_l, req.latest);
      max_e = std::max(max_e, req.earliest);
      min_e = std::min(min_e, req.earliest);
    }
    return static_cast<double>((max_l - min_e) - (min_l - max_e)) * w1;
  };
  switch (params.kind) {
  case WeightKind::size:
    return w1;
  case WeightKind::cost:
    return w2();
  case WeightKind::overlap:
    return w3();
  case WeightKind::mixed:
    return w2() * (1.0 - params.rho) + w3() * params.rho;
  }
  return w1;
}

void assign_weights(Hypergraph& graph, const WeightParams& params, const Instance& instance) {
  for (Hyperedge& e : graph.edges) {
    e.weight = edge_weight(e, params, instance, graph.rank);
  }
}

} // namespace ridepool
