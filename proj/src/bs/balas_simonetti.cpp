#include "ridepool/bs.h"

#include <algorithm>
#include <map>

namespace ridepool {

BsGraph::BsGraph(int k) : k_(k) {
  if (k < 1) {
    throw InputError("BS(k) needs k >= 1");
  }
  const int width = 2 * k - 1;
  if (width > 31) {
    throw InputError("BS(k) supports k <= 16");
  }
  auto bit = [k](int offset) { return 1u << static_cast<unsigned>(offset + k - 1); };
  std::map<std::pair<unsigned, int>, int> ids;
  auto intern = [&](unsigned mask, int last) {
    auto [it, inserted] = ids.emplace(std::make_pair(mask, last), static_cast<int>(masks_.size()));
    if (inserted) {
      masks_.push_back(mask);
      last_.push_back(last);
      moves_.emplace_back();
    }
    return it->second;
  };
  intern((1u << static_cast<unsigned>(k)) - 1u, 0);
  for (std::size_t s = 0; s < masks_.size(); ++s) {
    const unsigned mask = masks_[s];
    for (int o = -k + 1; o <= k; ++o) {
      if (o <= k - 1 && (mask & bit(o))) {
        continue;
      }
      bool ready = true;
      for (int u = -k + 1; u <= o - k; ++u) {
        if (!(mask & bit(u))) {
          ready = false;
          break;
        }
      }
      if (!ready) {
        continue;
      }
      unsigned placed = o <= k - 1 ? (mask | bit(o)) : mask;
      // The lowest window position leaves the window and must be placed.
      if (!(placed & 1u)) {
        continue;
      }
      unsigned next = placed >> 1u;
      if (o == k) {
        next |= 1u << static_cast<unsigned>(width - 1);
      }
      const int target = intern(next, o - 1);
      moves_[s].push_back({o, target});
    }
  }
}

namespace {

struct Label {
  SeqEval eval;
  int parent = -1; // index into the previous layer's arena
  int index = 0;   // route position placed last
};

bool dominates(const SeqEval& a, const SeqEval& b) { return a.cost <= b.cost && a.ec <= b.ec; }

bool cheaper(const Label& a, const Label& b) {
  if (a.eval.cost != b.eval.cost) {
    return a.eval.cost < b.eval.cost;
  }
  return a.eval.ec < b.eval.ec;
}

void add_label(std::vector<Label>& bucket, Label label) {
  for (const Label& l : bucket) {
    if (dominates(l.eval, label.eval)) {
      return;
    }
  }
  std::erase_if(bucket, [&](const Label& l) { return dominates(label.eval, l.eval); });
  bucket.push_back(std::move(label));
}

} // namespace

std::optional<std::vector<NodeId>> bs_search(const Instance& instance,
                                             std::span<const NodeId> visits,
                                             const BsGraph& graph, std::size_t thickness) {
  const int n = static_cast<int>(visits.size()) - 1;
  if (n < 2) {
    return std::nullopt;
  }
  const int k = graph.k();
  const int capacity = instance.capacity();
  const Cost input_cost = close_route(instance, evaluate_sequence(instance, visits)).cost;

  // Route position of each visit's pickup partner (deliveries only).
  std::vector<int> pickup_pos(n + 1, -1);
  {
    std::vector<int> pos_of(instance.num_nodes(), -1);
    for (int i = 0; i <= n; ++i) {
      pos_of[visits[i]] = i;
    }
    for (int i = 1; i <= n; ++i) {
      if (instance.is_delivery(visits[i])) {
        pickup_pos[i] = pos_of[instance.partner(visits[i])];
      }
    }
  }
  auto bit = [k](int offset) { return 1u << static_cast<unsigned>(offset + k - 1); };

  std::vector<std::vector<Label>> arena(n + 1);
  std::vector<std::vector<Label>> buckets(graph.num_states());
  std::vector<int> active{graph.initial()};
  arena[0].push_back(Label{SeqEval::single(instance, visits[0]), -1, 0});
  buckets[graph.initial()].push_back(arena[0][0]);
  buckets[graph.initial()][0].parent = 0;

  std::vector<std::vector<Label>> next(graph.num_states());
  for (int i = 0; i < n; ++i) {
    std::vector<int> next_active;
    for (int s : active) {
      const unsigned mask = graph.mask(s);
      for (const Label& label : buckets[s]) {
        for (const auto& move : graph.transitions(s)) {
          const int v = i + move.offset;
          if (v < 1 || v > n) {
            continue;
          }
          if (const int p = pickup_pos[v]; p >= 0) {
            const int po = p - i;
            const bool placed = po < -k + 1 || (po <= k - 1 && (mask & bit(po)));
            if (!placed) {
              continue;
            }
          }
          const SeqEval ev = extend(instance, label.eval, visits[v]);
          if (!ev.ok(capacity)) {
            continue;
          }
          auto& bucket = next[move.target];
          if (bucket.empty()) {
            next_active.push_back(move.target);
          }
          add_label(bucket, Label{ev, label.parent, v});
        }
      }
    }
    // Store this layer and trim buckets.
    for (int s : active) {
      buckets[s].clear();
    }
    active.clear();
    for (int s : next_active) {
      auto& bucket = next[s];
      if (bucket.empty()) {
        continue;
      }
      std::sort(bucket.begin(), bucket.end(), cheaper);
      if (thickness > 0 && bucket.size() > thickness) {
        bucket.resize(thickness);
      }
      for (Label& l : bucket) {
        arena[i + 1].push_back(l);
        l.parent = static_cast<int>(arena[i + 1].size()) - 1;
      }
      buckets[s] = std::move(bucket);
      bucket.clear();
      active.push_back(s);
    }
    if (active.empty()) {
      return std::nullopt;
    }
  }

  const Label* best = nullptr;
  Cost best_cost = input_cost;
  for (int s : active) {
    for (const Label& l : buckets[s]) {
      const SeqEval closed = close_route(instance, l.eval);
      if (closed.ok(capacity) && closed.cost < best_cost) {
        best_cost = closed.cost;
        best = &l;
      }
    }
  }
  if (!best) {
    return std::nullopt;
  }
  std::vector<NodeId> route(n + 1);
  route[0] = visits[0];
  int layer = n;
  int at = best->parent;
  while (layer > 0) {
    const Label& l = arena[layer][at];
    route[layer] = visits[l.index];
    at = l.parent;
    --layer;
  }
  return route;
}

} // namespace ridepool
