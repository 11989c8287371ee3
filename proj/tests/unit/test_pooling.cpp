#include "fixtures.h"
#include "oracles.h"

#include "ridepool/pooling.h"

#include <doctest.h>

#include <sstream>

using namespace ridepool;
using fixture::Req;
using fixture::Veh;

namespace {

Hypergraph pair_graph(double single, double pair) {
  Hypergraph g;
  g.rank = 4;
  g.order = {0, 1};
  g.edges.push_back({{0}, {}, 0, single});
  g.edges.push_back({{1}, {}, 0, single});
  g.edges.push_back({{0, 1}, {}, 0, pair});
  return g;
}

Hypergraph weighted(const Instance& inst, int rank = 4) {
  Hypergraph g = enumerate_hyperedges(inst, rank);
  assign_weights(g, WeightParams{}, inst);
  return g;
}

// Lower bound of the minimization form from the LP duals.
double dual_bound(const Hypergraph& g, const LpSolution& lp) {
  double bound = 0.0;
  for (double y : lp.duals) {
    bound += y;
  }
  for (const Hyperedge& e : g.edges) {
    double reduced = -e.weight;
    for (RequestId r : e.requests) {
      reduced -= lp.duals[r];
    }
    bound += std::min(0.0, reduced);
  }
  return bound;
}

} // namespace

TEST_SUITE("pooling") {

TEST_CASE("neighbor window is inclusive and symmetric ties list once") {
  // Request 0: e = 0, l = 20, buffer 5; request 1 at e = 25; request 2 at 26.
  Instance::Parts p = fixture::line({0, 10}, {Req{0, 1, 0, 5, 10, 20}, Req{0, 1, 25, 30, 35, 50},
                                              Req{0, 1, 26, 31, 36, 50}, Req{0, 1, 0, 5, 10, 20}},
                                    {Veh{0, 0}})
                        .parts();
  p.buffer = 5;
  const Instance inst(p);
  const auto order = vertex_order(inst);
  REQUIRE(order == std::vector<RequestId>{0, 3, 1, 2});
  const auto n0 = neighbors(inst, order, 0);
  CHECK(n0 == std::vector<RequestId>{3, 1});
  const auto n3 = neighbors(inst, order, 1);
  CHECK(n3 == std::vector<RequestId>{1});
}

TEST_CASE("a pair can be sequenced in four ways") {
  const Instance inst = fixture::line({0, 1, 2, 3}, {Req{0, 2}, Req{1, 3}}, {Veh{0, 0}}, 2);
  int count = 0;
  std::vector<NodeId> nodes{0, 1, 2, 3};
  oracle::for_each_interleaving(inst, nodes, [&](const std::vector<NodeId>& order) {
    int load = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      load += inst.node(order[i]).demand;
      if (load <= 0) {
        return;
      }
    }
    ++count;
  });
  CHECK(count == 4);
  const std::vector<RequestId> both{0, 1};
  const auto seq = cheapest_sequence(inst, both);
  REQUIRE(seq);
  CHECK(seq->cost == 3);
}

TEST_CASE("far-apart windows give no pooled edge") {
  const Instance inst = fixture::line(
    {0, 1000, 2000, 3000}, {Req{0, 1, 0, 0, 0, 1000}, Req{2, 3, 0, 0, 0, 1000}}, {Veh{0, 0}}, 2);
  const std::vector<RequestId> both{0, 1};
  CHECK_FALSE(cheapest_sequence(inst, both).has_value());
  CHECK(enumerate_hyperedges(inst, 4).edges.size() == 2);
}

TEST_CASE("co-located simultaneous requests pool at every size") {
  const Instance inst = fixture::line({0, 10, 20}, {Req{0, 1, 0, 5, 0, 100}, Req{0, 1, 0, 5, 0, 100},
                                                    Req{0, 2, 0, 5, 0, 100}},
                                      {Veh{0, 0}}, 3);
  const Hypergraph g = enumerate_hyperedges(inst, 4);
  std::size_t pairs = 0;
  std::size_t triples = 0;
  Cost max_pair = 0;
  Cost triple_cost = 0;
  for (const Hyperedge& e : g.edges) {
    pairs += e.requests.size() == 2 ? 1 : 0;
    if (e.requests.size() == 2) {
      max_pair = std::max(max_pair, e.seq_cost);
    }
    if (e.requests.size() == 3) {
      ++triples;
      triple_cost = e.seq_cost;
    }
    CHECK(e.seq_cost == *oracle::brute_pooled_sequence(inst, e.requests));
  }
  CHECK(pairs == 3);
  CHECK(triples == 1);
  CHECK(triple_cost <= 2 * max_pair);
}

TEST_CASE("stored sequences are cheapest over all interleavings") {
  GeneratorConfig c = oracle::small_config(21, 25, 3);
  c.buffer = 300;
  c.area = 2000;
  const Instance inst = generate(c);
  const Hypergraph g = enumerate_hyperedges(inst, 3);
  CHECK(g.edges.size() > inst.num_requests());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Hyperedge& edge = g.edges[e];
    if (edge.requests.size() < 2) {
      continue;
    }
    const auto expected = oracle::brute_pooled_sequence(inst, edge.requests);
    REQUIRE(expected);
    CHECK(edge.seq_cost == *expected);
    CHECK(evaluate_sequence(inst, edge.seq).ok(inst.capacity()));
    CHECK(std::is_sorted(edge.requests.begin(), edge.requests.end()));
  }
}

TEST_CASE("weight functions") {
  const Instance inst = fixture::line(
    {0, 1}, {Req{0, 1, 0, 5, 0, 10}, Req{0, 1, 0, 5, 0, 10}, Req{0, 1, 0, 5, 0, 10},
             Req{0, 1, 2, 5, 0, 10}},
    {Veh{0, 0}}, 4);
  Hyperedge pair{{0, 1}, {}, 7, 0};
  Hyperedge four{{0, 1, 2, 3}, {}, 3, 0};
  CHECK(edge_weight(pair, {WeightKind::size, 0.7}, inst, 4) == doctest::Approx(-2.0));
  CHECK(edge_weight(four, {WeightKind::size, 0.7}, inst, 4) == doctest::Approx(-1.0));
  CHECK(edge_weight(four, {WeightKind::cost, 0.7}, inst, 4) == doctest::Approx(-3.0));
  CHECK(edge_weight(four, {WeightKind::overlap, 0.7}, inst, 4) == doctest::Approx(-2.0));
  CHECK(edge_weight(four, {WeightKind::mixed, 0.7}, inst, 4) == doctest::Approx(-2.3));
  Hyperedge single{{2}, {}, 1, 0};
  CHECK(edge_weight(single, {WeightKind::size, 0.7}, inst, 4) == doctest::Approx(-4.0));
  CHECK(weight_kind_from_string("4") == WeightKind::mixed);
  CHECK_THROWS_AS(weight_kind_from_string("5"), InputError);
}

TEST_CASE("cover LP on tiny graphs") {
  Hypergraph one;
  one.order = {0};
  one.edges.push_back({{0}, {}, 0, -4.0});
  const LpSolution a = solve_cover_lp(one, CoverKind::cover);
  CHECK(a.x[0] == doctest::Approx(1.0));

  const Hypergraph g = pair_graph(-4.0, -1.0);
  for (CoverKind kind : {CoverKind::cover, CoverKind::partition}) {
    const LpSolution lp = solve_cover_lp(g, kind);
    CHECK(lp.x[2] == doctest::Approx(1.0));
    CHECK(lp.x[0] == doctest::Approx(0.0));
    CHECK(lp.objective == doctest::Approx(-1.0));
    CHECK(dual_bound(g, lp) == doctest::Approx(-lp.objective).epsilon(1e-9));
  }
}

TEST_CASE("singletons only give x = 1 everywhere") {
  Hypergraph g;
  g.order = {0, 1, 2};
  for (RequestId r = 0; r < 3; ++r) {
    g.edges.push_back({{r}, {}, 0, -4.0});
  }
  const LpSolution lp = solve_cover_lp(g, CoverKind::partition);
  for (double x : lp.x) {
    CHECK(x == doctest::Approx(1.0));
  }
}

TEST_CASE("LP relaxation bounds every integral matching and duals certify optimality") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GeneratorConfig c = oracle::small_config(seed, 6, 2);
    c.buffer = 400;
    c.area = 1500;
    const Instance inst = generate(c);
    const Hypergraph g = weighted(inst);
    const LpSolution wsc = solve_cover_lp(g, CoverKind::cover);
    const LpSolution wsp = solve_cover_lp(g, CoverKind::partition);
    const double best = oracle::best_integral_matching(g);
    // Covering rows have non-negative duals.
    for (double y : wsc.duals) {
      CHECK(y >= -1e-9);
    }
    CHECK(wsc.objective >= best - 1e-6);
    CHECK(wsp.objective <= wsc.objective + 1e-6);
    CHECK(wsp.objective >= best - 1e-6);
    CHECK(dual_bound(g, wsc) ==
          doctest::Approx(-wsc.objective).epsilon(1e-7));
    CHECK(dual_bound(g, wsp) ==
          doctest::Approx(-wsp.objective).epsilon(1e-7));
  }
}

TEST_CASE("greedy rounding follows fractional values") {
  const Hypergraph g = pair_graph(-4.0, -1.0);
  const std::vector<double> x{0.4, 0.4, 0.6};
  const Matching m = greedy_round(g, x);
  CHECK(m.edges == std::vector<std::size_t>{2});
  const std::vector<double> integral{1.0, 1.0, 0.0};
  CHECK(greedy_round(g, integral).edges == std::vector<std::size_t>{0, 1});
}

TEST_CASE("greedy matching prefers the dominant pair and otherwise singletons") {
  CHECK(greedy_match(pair_graph(-4.0, -1.0)).edges == std::vector<std::size_t>{2});
  Hypergraph singles = pair_graph(-4.0, -1.0);
  singles.edges.pop_back();
  const Matching m = greedy_match(singles);
  CHECK(is_partition(singles, m));
  CHECK(m.edges.size() == 2);
}

TEST_CASE("randomized rounding keeps integral matchings and always partitions") {
  const Hypergraph g = pair_graph(-4.0, -1.0);
  Rng rng(1);
  const std::vector<double> x{0.0, 0.0, 1.0};
  CHECK(randomized_round(g, x, rng).edges == std::vector<std::size_t>{2});
  const std::vector<double> singles{1.0, 1.0, 0.0};
  const Matching s = randomized_round(g, singles, rng);
  CHECK(is_partition(g, s));
  CHECK(s.edges.size() == 2);

  GeneratorConfig c = oracle::small_config(3, 30, 3);
  c.buffer = 300;
  const Instance inst = generate(c);
  const Hypergraph big = weighted(inst);
  const LpSolution lp = solve_cover_lp(big, CoverKind::cover);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    CHECK(is_partition(big, randomized_round(big, lp.x, r)));
  }
}

TEST_CASE("every matching method partitions the requests") {
  GeneratorConfig c = oracle::small_config(12, 40, 4);
  c.buffer = 240;
  const Instance inst = generate(c);
  const Hypergraph g = weighted(inst);
  Rng rng(2);
  for (auto method : {MatchingMethod::wsc, MatchingMethod::greedy, MatchingMethod::wsp,
                      MatchingMethod::randomized}) {
    CHECK(is_partition(g, match(g, method, rng)));
  }
  CHECK(matching_method_from_string("greedy") == MatchingMethod::greedy);
  CHECK_THROWS_AS(matching_method_from_string("exact"), InputError);
}

TEST_CASE("matching dump lists ids and weight") {
  const Hypergraph g = pair_graph(-4.0, -1.5);
  std::ostringstream out;
  write_matching(out, g, Matching{{2}});
  CHECK(out.str() == "0 1 -1.5\n");
}

}
