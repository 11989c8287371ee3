#include "ridepool/dispatch.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace ridepool {

namespace {

constexpr Cost kUnreached = std::numeric_limits<Cost>::max() / 4;

struct Edge {
  int to;
  int cap;
  Cost cost;
  int rev;
  bool original;
};

class FlowNetwork {
public:
  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  void add(int from, int to, Cost cost, bool original) {
    adj_[from].push_back({to, 1, cost, static_cast<int>(adj_[to].size()), original});
    adj_[to].push_back({from, 0, -cost, static_cast<int>(adj_[from].size()) - 1, false});
  }

  std::vector<std::vector<Edge>>& adj() { return adj_; }

private:
  std::vector<std::vector<Edge>> adj_;
};

} // namespace

PathSet kdspp(const DispatchGraph& graph, std::size_t k) {
  if (k > graph.vehicles.size()) {
    throw InternalError("more disjoint paths requested than vehicles in the graph");
  }
  // Node splitting: vertex u >= 2 becomes in(u) -> out(u) with capacity 1.
  const std::size_t n_vertices = graph.num_vertices();
  auto in = [](int u) { return u < 2 ? u : 2 + 2 * (u - 2); };
  auto out = [](int u) { return u < 2 ? u : 3 + 2 * (u - 2); };
  const std::size_t n = 2 + 2 * (n_vertices - 2);
  FlowNetwork net(n);
  for (std::size_t u = 2; u < n_vertices; ++u) {
    net.add(in(static_cast<int>(u)), out(static_cast<int>(u)), 0, false);
  }
  for (const DispatchArc& a : graph.arcs) {
    net.add(out(a.from), in(a.to), a.weight, true);
  }
  auto& adj = net.adj();

  // Bellman-Ford potentials over the initial (acyclic) residual graph.
  std::vector<Cost> pot(n, kUnreached);
  pot[DispatchGraph::source] = 0;
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (pot[u] == kUnreached) {
        continue;
      }
      for (const Edge& e : adj[u]) {
        if (e.cap > 0 && pot[u] + e.cost < pot[e.to]) {
          pot[e.to] = pot[u] + e.cost;
          changed = true;
        }
      }
    }
    if (!changed) {
      break;
    }
    if (pass + 1 == n) {
      throw InternalError("dispatch graph has a negative cycle");
    }
  }

  PathSet result;
  std::vector<Cost> dist(n);
  std::vector<int> prev_node(n);
  std::vector<int> prev_edge(n);
  using Item = std::pair<Cost, int>;
  for (std::size_t iter = 0; iter < k; ++iter) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(prev_node.begin(), prev_node.end(), -1);
    dist[DispatchGraph::source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, DispatchGraph::source});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) {
        continue;
      }
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        const Edge& e = adj[u][i];
        if (e.cap <= 0 || pot[e.to] == kUnreached) {
          continue;
        }
        const Cost reduced = e.cost + pot[u] - pot[e.to];
        if (reduced < 0) {
          throw InternalError("negative reduced cost in dispatch graph");
        }
        if (d + reduced < dist[e.to]) {
          dist[e.to] = d + reduced;
          prev_node[e.to] = u;
          prev_edge[e.to] = static_cast<int>(i);
          heap.push({dist[e.to], e.to});
        }
      }
    }
    if (dist[DispatchGraph::sink] == kUnreached) {
      throw InternalError("dispatch graph has fewer disjoint paths than requested");
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (dist[u] != kUnreached) {
        pot[u] += dist[u];
      }
    }
    for (int v = DispatchGraph::sink; v != DispatchGraph::source; v = prev_node[v]) {
      Edge& e = adj[prev_node[v]][prev_edge[v]];
      e.cap -= 1;
      adj[v][e.rev].cap += 1;
    }
  }

  // Decompose the flow into paths.
  auto vertex_of = [](int node) { return node < 2 ? node : 2 + (node - 2) / 2; };
  for (Edge& start : adj[DispatchGraph::source]) {
    if (!start.original || start.cap != 0) {
      continue;
    }
    std::vector<int> path;
    int node = start.to;
    while (node != DispatchGraph::sink) {
      path.push_back(vertex_of(node));
      const int o = node + 1; // out half
      bool moved = false;
      for (Edge& e : adj[o]) {
        if (e.original && e.cap == 0) {
          result.weight += e.cost;
          e.cap = 1; // consume so a later walk cannot reuse it
          node = e.to;
          moved = true;
          break;
        }
      }
      if (!moved) {
        throw InternalError("broken flow decomposition");
      }
    }
    start.cap = 1;
    result.weight += start.cost;
    result.paths.push_back(std::move(path));
  }
  return result;
}

} // namespace ridepool
