#include "ridepool/rnr.h"

#include <algorithm>
#include <limits>

namespace ridepool {

namespace {

enum Criterion { random_order, far, close, tw_length, tw_start, tw_end };

} // namespace

std::vector<RequestId> recreate(RouteState& state, const RnrParams& params, Rng& rng) {
  const Instance& inst = state.instance();
  std::vector<RequestId> pool = state.unassigned();
  std::vector<RequestId> inserted;
  if (pool.empty()) {
    return inserted;
  }
  std::sort(pool.begin(), pool.end());
  const std::vector<double> weights(params.sort_weights.begin(), params.sort_weights.end());
  std::size_t criterion = roulette(rng, weights);
  if (criterion >= weights.size()) {
    criterion = random_order;
  }
  switch (criterion) {
  case random_order:
    std::shuffle(pool.begin(), pool.end(), rng);
    break;
  case far:
  case close: {
    std::vector<Cost> nearest(inst.num_requests(), std::numeric_limits<Cost>::max());
    for (RequestId r : pool) {
      for (const Vehicle& v : inst.vehicles()) {
        nearest[r] = std::min(nearest[r], inst.cost(v.start, inst.request(r).pickup));
      }
    }
    std::stable_sort(pool.begin(), pool.end(), [&](RequestId a, RequestId b) {
      return criterion == far ? nearest[a] > nearest[b] : nearest[a] < nearest[b];
    });
    break;
  }
  case tw_length:
    std::stable_sort(pool.begin(), pool.end(), [&](RequestId a, RequestId b) {
      const Request& x = inst.request(a);
      const Request& y = inst.request(b);
      return x.latest - x.earliest < y.latest - y.earliest;
    });
    break;
  case tw_start:
    std::stable_sort(pool.begin(), pool.end(), [&](RequestId a, RequestId b) {
      return inst.request(a).earliest < inst.request(b).earliest;
    });
    break;
  case tw_end:
    std::stable_sort(pool.begin(), pool.end(), [&](RequestId a, RequestId b) {
      return inst.request(a).latest > inst.request(b).latest;
    });
    break;
  default:
    break;
  }
  if (pool.size() > params.insert_limit) {
    pool.resize(params.insert_limit);
  }

  const Blink blink(rng, params.blink);
  for (RequestId r : pool) {
    std::optional<Insertion> best;
    for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
      const auto vid = static_cast<VehicleId>(v);
      if (state.route_empty(vid)) {
        continue;
      }
      auto cand = best_insertion(state, r, vid, blink);
      if (cand && (!best || cand->delta < best->delta)) {
        best = cand;
      }
    }
    if (!best && params.open_routes) {
      for (std::size_t v = 0; v < state.num_vehicles(); ++v) {
        const auto vid = static_cast<VehicleId>(v);
        if (!state.route_empty(vid)) {
          continue;
        }
        auto cand = best_insertion(state, r, vid);
        if (cand && (!best || cand->delta < best->delta)) {
          best = cand;
        }
      }
    }
    if (best) {
      state.insert(r, *best);
      inserted.push_back(r);
    }
  }
  return inserted;
}

} // namespace ridepool
