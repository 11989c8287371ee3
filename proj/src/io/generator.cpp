#include "ridepool/io.h"
#include "ridepool/random.h"

#include <algorithm>
#include <cmath>

namespace ridepool {

Instance generate(const GeneratorConfig& config) {
  if (config.requests == 0) {
    throw InputError("generator needs at least one request");
  }
  if (config.vehicles == 0) {
    throw InputError("generator needs at least one vehicle");
  }
  if (!(config.area > 0.0) || !(config.speed > 0.0) || config.horizon < 0) {
    throw InputError("generator needs a positive area and speed and a non-negative horizon");
  }
  if (config.mode == WindowMode::explicit_windows) {
    throw InputError("generator derives windows; explicit mode is not available");
  }
  Rng rng(config.seed);
  std::uniform_real_distribution<double> coord(0.0, config.area);
  const std::size_t R = config.requests;
  const std::size_t K = config.vehicles;

  Instance::Parts parts;
  parts.name = config.name;
  parts.capacity = config.capacity;
  parts.buffer = config.buffer;
  parts.window_mode = config.mode;
  parts.seed = config.seed;
  parts.metric = EuclideanMetric{config.speed, config.rounding};
  parts.locations.resize(2 * R);
  for (auto& p : parts.locations) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  parts.matrix = std::make_shared<TravelMatrix>(
    TravelMatrix::euclidean(parts.locations, *parts.metric));
  const TravelMatrix& m = *parts.matrix;

  std::uniform_int_distribution<Time> dropoff(0, config.horizon);
  parts.nodes.resize(2 * R + K);
  parts.requests.resize(R);
  Time min_earliest = kTimeInfinity;
  for (std::size_t r = 0; r < R; ++r) {
    const auto id = static_cast<RequestId>(r);
    const auto pl = static_cast<LocationId>(2 * r);
    const auto dl = static_cast<LocationId>(2 * r + 1);
    const Time direct = m.time(pl, dl);
    const Time earliest = dropoff(rng) - direct;
    Node& p = parts.nodes[2 * r];
    Node& d = parts.nodes[2 * r + 1];
    p = Node{NodeKind::pickup, pl, id, 1, 0, 0, 0};
    d = Node{NodeKind::delivery, dl, id, -1, 0, 0, 0};
    Instance::derive_windows(config.mode, earliest, direct, config.buffer, p, d);
    parts.requests[r] = Request{id, static_cast<NodeId>(2 * r), static_cast<NodeId>(2 * r + 1),
                                earliest, d.close};
    min_earliest = std::min(min_earliest, earliest);
  }

  // Every vehicle is ready early enough to reach any pickup in time.
  const double diagonal = std::sqrt(2.0) * config.area;
  const Time ready = min_earliest - static_cast<Time>(std::ceil(diagonal / config.speed));
  for (std::size_t v = 0; v < K; ++v) {
    const auto id = static_cast<VehicleId>(v);
    const auto loc = static_cast<LocationId>(2 * pick_index(rng, R) + 1);
    const auto node = static_cast<NodeId>(2 * R + v);
    parts.nodes[node] = Node{NodeKind::vehicle_start, loc, id, 0, ready, kTimeInfinity, 0};
    parts.vehicles.push_back(Vehicle{id, node});
  }
  return Instance(std::move(parts));
}

} // namespace ridepool
