#pragma once

#include "ridepool/types.h"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ridepool {

enum class NodeKind : std::uint8_t { pickup, delivery, vehicle_start, route_end };

// How request windows follow from the earliest pickup time and the buffer.
//   fixed:         pickup [e, e],     dropoff [e + t, e + t]
//   fixed_pickup:  pickup [e, e],     dropoff [e + t, e + t + buffer]
//   variable:      pickup [e, e + b], dropoff [e + t, e + t + buffer]
//   explicit_windows: windows are given per node (benchmark files).
enum class WindowMode : std::uint8_t { fixed, fixed_pickup, variable, explicit_windows };

std::string to_string(WindowMode mode);
WindowMode window_mode_from_string(const std::string& text);

struct Node {
  NodeKind kind = NodeKind::pickup;
  LocationId location = 0;
  // Request id for pickups/deliveries, vehicle id for starts, -1 for the route end.
  std::int32_t owner = -1;
  int demand = 0;
  Time open = 0;
  Time close = kTimeInfinity;
  Time service = 0;
};

struct Request {
  RequestId id = 0;
  NodeId pickup = kNoNode;
  NodeId delivery = kNoNode;
  Time earliest = 0; // e_r
  Time latest = 0;   // l_r
};

struct Vehicle {
  VehicleId id = 0;
  NodeId start = kNoNode;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Rounding : std::uint8_t { half_up, floor, ceil };

std::string to_string(Rounding rounding);
Rounding rounding_from_string(const std::string& text);
std::int64_t round_with(double value, Rounding rounding);

// Euclidean distances in meters and constant-speed travel times.
struct EuclideanMetric {
  double speed = 20.0 / 3.6; // m/s
  Rounding rounding = Rounding::half_up;
};

// Square location-by-location cost and time matrices, row-major.
class TravelMatrix {
public:
  TravelMatrix() = default;
  TravelMatrix(std::size_t size, std::vector<Cost> cost, std::vector<Time> time);

  static TravelMatrix euclidean(std::span<const Point> points,
                                const EuclideanMetric& metric);

  std::size_t size() const { return size_; }
  Cost cost(LocationId from, LocationId to) const {
    return cost_[static_cast<std::size_t>(from) * size_ + to];
  }
  Time time(LocationId from, LocationId to) const {
    return time_[static_cast<std::size_t>(from) * size_ + to];
  }
  const std::vector<Cost>& costs() const { return cost_; }
  const std::vector<Time>& times() const { return time_; }

private:
  std::size_t size_ = 0;
  std::vector<Cost> cost_;
  std::vector<Time> time_;
};

class Instance;

// A restriction of an instance to a subset of vehicles and requests. Local
// ids index the sub-instance; the maps translate back.
struct SubInstance;

// Immutable after construction; safe to share across threads.
class Instance {
public:
  struct Parts {
    std::string name;
    std::vector<Node> nodes;
    std::vector<Request> requests;
    std::vector<Vehicle> vehicles;
    std::shared_ptr<const TravelMatrix> matrix;
    std::vector<Point> locations;
    std::optional<EuclideanMetric> metric;
    std::optional<NodeId> route_end;
    int capacity = 1;
    Time buffer = 0;
    WindowMode window_mode = WindowMode::variable;
    std::uint64_t seed = 0;
  };

  Instance() = default;
  // Throws InputError when an invariant is broken.
  explicit Instance(Parts parts);

  const std::string& name() const { return p_.name; }
  int capacity() const { return p_.capacity; }
  Time buffer() const { return p_.buffer; }
  WindowMode window_mode() const { return p_.window_mode; }
  std::uint64_t seed() const { return p_.seed; }

  std::size_t num_nodes() const { return p_.nodes.size(); }
  std::size_t num_requests() const { return p_.requests.size(); }
  std::size_t num_vehicles() const { return p_.vehicles.size(); }

  const Node& node(NodeId id) const { return p_.nodes[id]; }
  const Request& request(RequestId id) const { return p_.requests[id]; }
  const Vehicle& vehicle(VehicleId id) const { return p_.vehicles[id]; }
  const std::vector<Node>& nodes() const { return p_.nodes; }
  const std::vector<Request>& requests() const { return p_.requests; }
  const std::vector<Vehicle>& vehicles() const { return p_.vehicles; }

  bool is_pickup(NodeId id) const { return p_.nodes[id].kind == NodeKind::pickup; }
  bool is_delivery(NodeId id) const { return p_.nodes[id].kind == NodeKind::delivery; }
  RequestId request_of(NodeId id) const { return p_.nodes[id].owner; }
  NodeId partner(NodeId id) const;

  // Classic benchmark instances close every route at a depot node that is
  // never listed in route visits. Ride-hailing routes end anywhere.
  const std::optional<NodeId>& route_end() const { return p_.route_end; }

  Cost cost(NodeId from, NodeId to) const {
    return p_.matrix->cost(p_.nodes[from].location, p_.nodes[to].location);
  }
  // Arc time with the service duration at `from` folded in.
  Time travel(NodeId from, NodeId to) const {
    return p_.nodes[from].service +
           p_.matrix->time(p_.nodes[from].location, p_.nodes[to].location);
  }
  Time direct_time(NodeId from, NodeId to) const {
    return p_.matrix->time(p_.nodes[from].location, p_.nodes[to].location);
  }

  const std::shared_ptr<const TravelMatrix>& matrix() const { return p_.matrix; }
  const std::vector<Point>& locations() const { return p_.locations; }
  const std::optional<EuclideanMetric>& metric() const { return p_.metric; }
  const Parts& parts() const { return p_; }

  // Same requests with windows derived for another buffer. Requires a
  // derived window mode.
  Instance with_buffer(Time buffer) const;

  SubInstance restrict(std::span<const VehicleId> vehicles,
                       std::span<const RequestId> requests) const;

  // Window of request `r` under `mode` for buffer `delta`; the direct time
  // includes the pickup service duration.
  static void derive_windows(WindowMode mode, Time earliest, Time direct,
                             Time delta, Node& pickup, Node& delivery);

private:
  void check() const;

  Parts p_;
};

struct SubInstance {
  Instance instance;
  std::vector<NodeId> global_node;
  std::vector<RequestId> global_request;
  std::vector<VehicleId> global_vehicle;
};

} // namespace ridepool
