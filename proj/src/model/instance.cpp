#include "ridepool/instance.h"

#include <cmath>
#include <unordered_map>

namespace ridepool {

std::string to_string(WindowMode mode) {
  switch (mode) {
  case WindowMode::fixed:
    return "A";
  case WindowMode::fixed_pickup:
    return "B";
  case WindowMode::variable:
    return "C";
  case WindowMode::explicit_windows:
    return "explicit";
  }
  return "C";
}

WindowMode window_mode_from_string(const std::string& text) {
  if (text == "A" || text == "a" || text == "fixed") {
    return WindowMode::fixed;
  }
  if (text == "B" || text == "b" || text == "fixed_pickup") {
    return WindowMode::fixed_pickup;
  }
  if (text == "C" || text == "c" || text == "variable") {
    return WindowMode::variable;
  }
  if (text == "explicit") {
    return WindowMode::explicit_windows;
  }
  throw InputError("unknown time-window mode '" + text + "'");
}

std::string to_string(Rounding rounding) {
  switch (rounding) {
  case Rounding::half_up:
    return "half_up";
  case Rounding::floor:
    return "floor";
  case Rounding::ceil:
    return "ceil";
  }
  return "half_up";
}

Rounding rounding_from_string(const std::string& text) {
  if (text == "half_up" || text == "round") {
    return Rounding::half_up;
  }
  if (text == "floor") {
    return Rounding::floor;
  }
  if (text == "ceil") {
    return Rounding::ceil;
  }
  throw InputError("unknown rounding rule '" + text + "'");
}

std::int64_t round_with(double value, Rounding rounding) {
  switch (rounding) {
  case Rounding::floor:
    return static_cast<std::int64_t>(std::floor(value));
  case Rounding::ceil:
    return static_cast<std::int64_t>(std::ceil(value));
  case Rounding::half_up:
    break;
  }
  return static_cast<std::int64_t>(std::floor(value + 0.5));
}

TravelMatrix::TravelMatrix(std::size_t size, std::vector<Cost> cost,
                           std::vector<Time> time)
  : size_(size), cost_(std::move(cost)), time_(std::move(time)) {
  if (cost_.size() != size_ * size_ || time_.size() != size_ * size_) {
    throw InputError("travel matrix is not square");
  }
}

TravelMatrix TravelMatrix::euclidean(std::span<const Point> points,
                                     const EuclideanMetric& metric) {
  const std::size_t n = points.size();
  std::vector<Cost> cost(n * n, 0);
  std::vector<Time> time(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const double dist = std::hypot(points[i].x - points[j].x,
                                     points[i].y - points[j].y);
      cost[i * n + j] = round_with(dist, metric.rounding);
      time[i * n + j] = round_with(dist / metric.speed, metric.rounding);
    }
  }
  return TravelMatrix(n, std::move(cost), std::move(time));
}

Instance::Instance(Parts parts) : p_(std::move(parts)) { check(); }

NodeId Instance::partner(NodeId id) const {
  const Node& n = p_.nodes[id];
  const Request& r = p_.requests[n.owner];
  return n.kind == NodeKind::pickup ? r.delivery : r.pickup;
}

void Instance::derive_windows(WindowMode mode, Time earliest, Time direct,
                              Time delta, Node& pickup, Node& delivery) {
  pickup.open = earliest;
  delivery.open = earliest + direct;
  switch (mode) {
  case WindowMode::fixed:
    pickup.close = earliest;
    delivery.close = earliest + direct;
    break;
  case WindowMode::fixed_pickup:
    pickup.close = earliest;
    delivery.close = earliest + direct + delta;
    break;
  case WindowMode::variable:
    pickup.close = earliest + delta;
    delivery.close = earliest + direct + delta;
    break;
  case WindowMode::explicit_windows:
    throw InputError("explicit windows cannot be derived from a buffer");
  }
}

Instance Instance::with_buffer(Time buffer) const {
  if (p_.window_mode == WindowMode::explicit_windows) {
    throw InputError("instance windows are explicit; buffer cannot change");
  }
  if (buffer < 0) {
    throw InputError("buffer must be non-negative");
  }
  Parts parts = p_;
  parts.buffer = buffer;
  for (Request& r : parts.requests) {
    Node& p = parts.nodes[r.pickup];
    Node& d = parts.nodes[r.delivery];
    derive_windows(parts.window_mode, r.earliest, travel(r.pickup, r.delivery),
                   buffer, p, d);
    r.latest = d.close;
  }
  return Instance(std::move(parts));
}

SubInstance Instance::restrict(std::span<const VehicleId> vehicles,
                               std::span<const RequestId> requests) const {
  SubInstance sub;
  Parts parts;
  parts.name = p_.name;
  parts.matrix = p_.matrix;
  parts.locations = p_.locations;
  parts.metric = p_.metric;
  parts.capacity = p_.capacity;
  parts.buffer = p_.buffer;
  parts.window_mode = p_.window_mode;
  parts.seed = p_.seed;

  parts.nodes.reserve(2 * requests.size() + vehicles.size() + 1);
  parts.requests.reserve(requests.size());
  for (RequestId global : requests) {
    const Request& r = p_.requests[global];
    Request local = r;
    local.id = static_cast<RequestId>(parts.requests.size());
    local.pickup = static_cast<NodeId>(parts.nodes.size());
    Node pickup = p_.nodes[r.pickup];
    pickup.owner = local.id;
    parts.nodes.push_back(pickup);
    sub.global_node.push_back(r.pickup);
    local.delivery = static_cast<NodeId>(parts.nodes.size());
    Node delivery = p_.nodes[r.delivery];
    delivery.owner = local.id;
    parts.nodes.push_back(delivery);
    sub.global_node.push_back(r.delivery);
    parts.requests.push_back(local);
    sub.global_request.push_back(global);
  }
  for (VehicleId global : vehicles) {
    Vehicle local{static_cast<VehicleId>(parts.vehicles.size()),
                  static_cast<NodeId>(parts.nodes.size())};
    Node start = p_.nodes[p_.vehicles[global].start];
    start.owner = local.id;
    parts.nodes.push_back(start);
    sub.global_node.push_back(p_.vehicles[global].start);
    parts.vehicles.push_back(local);
    sub.global_vehicle.push_back(global);
  }
  if (p_.route_end) {
    parts.route_end = static_cast<NodeId>(parts.nodes.size());
    parts.nodes.push_back(p_.nodes[*p_.route_end]);
    sub.global_node.push_back(*p_.route_end);
  }
  sub.instance = Instance(std::move(parts));
  return sub;
}

void Instance::check() const {
  if (!p_.matrix) {
    throw InputError("instance has no travel matrix");
  }
  if (p_.capacity < 1) {
    throw InputError("capacity must be at least 1");
  }
  if (p_.buffer < 0) {
    throw InputError("buffer must be non-negative");
  }
  const auto num_locations = static_cast<LocationId>(p_.matrix->size());
  for (std::size_t i = 0; i < p_.matrix->size(); ++i) {
    const auto l = static_cast<LocationId>(i);
    if (p_.matrix->cost(l, l) != 0 || p_.matrix->time(l, l) != 0) {
      throw InputError("travel matrix diagonal must be zero");
    }
  }
  std::size_t pickups = 0;
  std::size_t deliveries = 0;
  for (std::size_t i = 0; i < p_.nodes.size(); ++i) {
    const Node& n = p_.nodes[i];
    if (n.location < 0 || n.location >= num_locations) {
      throw InputError("node " + std::to_string(i) + " has unknown location");
    }
    if (n.kind == NodeKind::pickup) {
      ++pickups;
    } else if (n.kind == NodeKind::delivery) {
      ++deliveries;
    }
  }
  if (pickups != p_.requests.size() || deliveries != p_.requests.size()) {
    throw InputError("every request needs exactly one pickup and one delivery");
  }
  const auto num_nodes = static_cast<NodeId>(p_.nodes.size());
  auto valid_node = [&](NodeId id) { return id >= 0 && id < num_nodes; };
  for (std::size_t i = 0; i < p_.requests.size(); ++i) {
    const Request& r = p_.requests[i];
    if (r.id != static_cast<RequestId>(i)) {
      throw InputError("request ids must be dense and ordered");
    }
    if (!valid_node(r.pickup) || !valid_node(r.delivery) ||
        p_.nodes[r.pickup].kind != NodeKind::pickup ||
        p_.nodes[r.delivery].kind != NodeKind::delivery ||
        p_.nodes[r.pickup].owner != r.id ||
        p_.nodes[r.delivery].owner != r.id) {
      throw InputError("request " + std::to_string(i) +
                       " does not own its pickup and delivery nodes");
    }
  }
  for (std::size_t v = 0; v < p_.vehicles.size(); ++v) {
    const Vehicle& veh = p_.vehicles[v];
    if (veh.id != static_cast<VehicleId>(v) || !valid_node(veh.start) ||
        p_.nodes[veh.start].kind != NodeKind::vehicle_start ||
        p_.nodes[veh.start].owner != veh.id) {
      throw InputError("vehicle " + std::to_string(v) +
                       " does not own a start node");
    }
  }
  if (p_.route_end &&
      (!valid_node(*p_.route_end) ||
       p_.nodes[*p_.route_end].kind != NodeKind::route_end)) {
    throw InputError("route end does not reference a route_end node");
  }
}

} // namespace ridepool
