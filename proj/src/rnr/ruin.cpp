#include "ridepool/rnr.h"

#include <algorithm>
#include <cmath>

namespace ridepool {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  if (hi <= lo) {
    return lo;
  }
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

RuinReport ruin(RouteState& state, const RnrParams& params, Rng& rng) {
  RuinReport report;
  const Instance& inst = state.instance();
  const auto assigned = state.assigned_requests();
  if (assigned.empty()) {
    return report;
  }
  std::size_t used = 0;
  std::size_t visits = 0;
  for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
    if (!state.route_empty(static_cast<VehicleId>(v))) {
      ++used;
      visits += state.route_size(static_cast<VehicleId>(v));
    }
  }
  const double avg_card = static_cast<double>(visits) / static_cast<double>(used);
  report.max_string = std::min(params.max_string, avg_card);
  report.max_strings = 4.0 * params.avg_removed / (1.0 + report.max_string) - 1.0;
  const auto k_s = static_cast<std::size_t>(
    std::max(1.0, std::floor(uniform(rng, 1.0, report.max_strings))));

  const RequestId seed = assigned[pick_index(rng, assigned.size())];
  const NodeId seed_pickup = inst.request(seed).pickup;
  std::vector<RequestId> related = assigned;
  std::stable_sort(related.begin(), related.end(), [&](RequestId a, RequestId b) {
    return inst.direct_time(seed_pickup, inst.request(a).pickup) <
           inst.direct_time(seed_pickup, inst.request(b).pickup);
  });

  std::vector<char> touched(state.num_vehicles(), 0);
  std::vector<char> removed(inst.num_requests(), 0);
  for (RequestId r : related) {
    if (report.removals.size() >= k_s) {
      break;
    }
    if (removed[r]) {
      continue;
    }
    const NodeId pickup = inst.request(r).pickup;
    const VehicleId v = state.vehicle_of(pickup);
    if (touched[v]) {
      continue;
    }
    const auto route = state.visits(v);
    const std::size_t card = route.size() - 1;
    const double limit = std::min(static_cast<double>(card), report.max_string);
    const auto bound = static_cast<std::size_t>(std::floor(limit));
    const std::size_t len = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::floor(uniform(rng, 1.0, limit))), 1, std::max<std::size_t>(1, bound));
    const auto pos = static_cast<std::size_t>(state.position(pickup));

    std::vector<std::size_t> cut; // route positions to remove
    bool split = coin(rng, params.split_rate);
    std::size_t keep = 1;
    if (!split) {
      while (len + keep < card && coin(rng, params.substring_rate)) {
        ++keep;
      }
      if (len + keep > card) {
        split = true;
      }
    }
    const std::size_t total = split ? len : len + keep;
    const std::size_t lo = pos + 1 > total ? pos + 1 - total : 1;
    const std::size_t hi = std::min(pos, card + 1 - total);
    const std::size_t first = uniform_int(rng, std::max<std::size_t>(1, lo), hi);
    if (split) {
      for (std::size_t i = first; i < first + len; ++i) {
        cut.push_back(i);
      }
    } else {
      const std::size_t before = uniform_int(rng, 0, len);
      for (std::size_t i = 0; i < total; ++i) {
        if (i < before || i >= before + keep) {
          cut.push_back(first + i);
        }
      }
    }
    for (std::size_t i : cut) {
      removed[inst.request_of(route[i])] = 1;
    }
    touched[v] = 1;
    report.routes.push_back(v);
    report.removals.push_back({card, cut.size(), bound});
  }
  for (RequestId r : assigned) {
    if (removed[r]) {
      report.removed.push_back(r);
    }
  }
  report.strings = k_s;
  state.remove(report.removed);
  return report;
}

} // namespace ridepool
