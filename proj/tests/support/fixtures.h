#pragma once

#include "ridepool/instance.h"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <vector>

namespace fixture {

using namespace ridepool;

struct Req {
  LocationId from = 0;
  LocationId to = 0;
  Time pickup_open = 0;
  Time pickup_close = kTimeInfinity;
  Time delivery_open = 0;
  Time delivery_close = kTimeInfinity;
  int demand = 1;
};

struct Veh {
  LocationId at = 0;
  Time ready = 0;
};

struct End {
  LocationId at = 0;
  Time close = kTimeInfinity;
};

// Locations on a line; travel time and cost are the integer distance.
inline Instance line(const std::vector<Time>& xs, const std::vector<Req>& reqs,
                     const std::vector<Veh>& vehs, int capacity = 1,
                     std::optional<End> end = std::nullopt, Time service = 0) {
  const std::size_t n = xs.size();
  std::vector<Cost> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = std::llabs(xs[i] - xs[j]);
    }
  }
  Instance::Parts p;
  p.name = "line";
  p.matrix = std::make_shared<const TravelMatrix>(n, m, m);
  p.capacity = capacity;
  p.window_mode = WindowMode::explicit_windows;
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    const Req& q = reqs[r];
    const auto id = static_cast<RequestId>(r);
    p.nodes.push_back({NodeKind::pickup, q.from, id, q.demand, q.pickup_open, q.pickup_close, service});
    p.nodes.push_back(
      {NodeKind::delivery, q.to, id, -q.demand, q.delivery_open, q.delivery_close, service});
    p.requests.push_back({id, static_cast<NodeId>(2 * r), static_cast<NodeId>(2 * r + 1),
                          q.pickup_open, q.delivery_close});
  }
  for (std::size_t v = 0; v < vehs.size(); ++v) {
    p.vehicles.push_back({static_cast<VehicleId>(v), static_cast<NodeId>(p.nodes.size())});
    p.nodes.push_back({NodeKind::vehicle_start, vehs[v].at, static_cast<std::int32_t>(v), 0,
                       vehs[v].ready, kTimeInfinity, 0});
  }
  if (end) {
    p.route_end = static_cast<NodeId>(p.nodes.size());
    p.nodes.push_back({NodeKind::route_end, end->at, -1, 0, 0, end->close, 0});
  }
  return Instance(std::move(p));
}

} // namespace fixture
