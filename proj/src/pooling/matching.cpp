#include "ridepool/pooling.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace ridepool {

MatchingMethod matching_method_from_string(const std::string& text) {
  if (text == "wsc") {
    return MatchingMethod::wsc;
  }
  if (text == "greedy") {
    return MatchingMethod::greedy;
  }
  if (text == "wsp") {
    return MatchingMethod::wsp;
  }
  if (text == "randomized") {
    return MatchingMethod::randomized;
  }
  throw InputError("unknown matching method '" + text + "'");
}

namespace {

// Greedy disjoint selection along `order`, completed with singletons.
Matching select_disjoint(const Hypergraph& graph, const std::vector<std::size_t>& order) {
  Matching m;
  std::vector<char> covered(graph.num_requests(), 0);
  std::size_t remaining = graph.num_requests();
  for (std::size_t e : order) {
    if (remaining == 0) {
      break;
    }
    const auto& reqs = graph.edges[e].requests;
    if (std::any_of(reqs.begin(), reqs.end(), [&](RequestId r) { return covered[r]; })) {
      continue;
    }
    for (RequestId r : reqs) {
      covered[r] = 1;
    }
    remaining -= reqs.size();
    m.edges.push_back(e);
  }
  for (std::size_t r = 0; r < graph.num_requests(); ++r) {
    if (!covered[r]) {
      m.edges.push_back(r);
    }
  }
  return m;
}

std::vector<std::size_t> all_edges(const Hypergraph& graph) {
  std::vector<std::size_t> order(graph.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

} // namespace

Matching greedy_round(const Hypergraph& graph, std::span<const double> x) {
  auto order = all_edges(graph);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) {
      return x[a] > x[b];
    }
    if (graph.edges[a].weight != graph.edges[b].weight) {
      return graph.edges[a].weight > graph.edges[b].weight;
    }
    return graph.edges[a].requests < graph.edges[b].requests;
  });
  return select_disjoint(graph, order);
}

Matching greedy_match(const Hypergraph& graph) {
  auto order = all_edges(graph);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (graph.edges[a].weight != graph.edges[b].weight) {
      return graph.edges[a].weight > graph.edges[b].weight;
    }
    return graph.edges[a].requests < graph.edges[b].requests;
  });
  return select_disjoint(graph, order);
}

Matching randomized_round(const Hypergraph& graph, std::span<const double> x, Rng& rng) {
  std::vector<std::size_t> chosen;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (coin(rng, x[e])) {
      chosen.push_back(e);
    }
  }
  // Each request keeps the covering edge of highest weight, ties random.
  const std::size_t none = graph.edges.size();
  std::vector<std::size_t> keeper(graph.num_requests(), none);
  std::vector<int> ties(graph.num_requests(), 0);
  for (std::size_t e : chosen) {
    for (RequestId r : graph.edges[e].requests) {
      if (keeper[r] == none || graph.edges[e].weight > graph.edges[keeper[r]].weight) {
        keeper[r] = e;
        ties[r] = 1;
      } else if (graph.edges[e].weight == graph.edges[keeper[r]].weight) {
        ++ties[r];
        if (pick_index(rng, static_cast<std::size_t>(ties[r])) == 0) {
          keeper[r] = e;
        }
      }
    }
  }
  std::map<std::vector<RequestId>, std::size_t> index;
  for (std::size_t e = graph.num_singletons(); e < graph.edges.size(); ++e) {
    index.emplace(graph.edges[e].requests, e);
  }
  Matching m;
  std::vector<char> covered(graph.num_requests(), 0);
  for (std::size_t e : chosen) {
    std::vector<RequestId> kept;
    for (RequestId r : graph.edges[e].requests) {
      if (keeper[r] == e) {
        kept.push_back(r);
      }
    }
    if (kept.empty()) {
      continue;
    }
    std::size_t edge = none;
    if (kept.size() == graph.edges[e].requests.size()) {
      edge = e;
    } else if (kept.size() >= 2) {
      if (auto it = index.find(kept); it != index.end()) {
        edge = it->second;
      }
    }
    if (edge == none) {
      continue; // dissolves; its requests get singletons below
    }
    for (RequestId r : kept) {
      covered[r] = 1;
    }
    m.edges.push_back(edge);
  }
  for (std::size_t r = 0; r < graph.num_requests(); ++r) {
    if (!covered[r]) {
      m.edges.push_back(r);
    }
  }
  return m;
}

Matching match(const Hypergraph& graph, MatchingMethod method, Rng& rng) {
  switch (method) {
  case MatchingMethod::wsc:
    return greedy_round(graph, solve_cover_lp(graph, CoverKind::cover).x);
  case MatchingMethod::greedy:
    return greedy_match(graph);
  case MatchingMethod::wsp:
    return greedy_round(graph, solve_cover_lp(graph, CoverKind::partition).x);
  case MatchingMethod::randomized:
    return randomized_round(graph, solve_cover_lp(graph, CoverKind::cover).x, rng);
  }
  return greedy_match(graph);
}

bool is_partition(const Hypergraph& graph, const Matching& matching) {
  std::vector<int> count(graph.num_requests(), 0);
  for (std::size_t e : matching.edges) {
    if (e >= graph.edges.size()) {
      return false;
    }
    for (RequestId r : graph.edges[e].requests) {
      ++count[r];
    }
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

double matching_weight(const Hypergraph& graph, const Matching& matching) {
  double total = 0.0;
  for (std::size_t e : matching.edges) {
    total += graph.edges[e].weight;
  }
  return total;
}

void write_matching(std::ostream& out, const Hypergraph& graph, const Matching& matching) {
  for (std::size_t e : matching.edges) {
    for (RequestId r : graph.edges[e].requests) {
      out << r << ' ';
    }
    out << graph.edges[e].weight << '\n';
  }
}

} // namespace ridepool
