#include "ridepool/io.h"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ridepool {

namespace {

const char* kind_name(NodeKind kind) {
  switch (kind) {
  case NodeKind::pickup:
    return "pickup";
  case NodeKind::delivery:
    return "delivery";
  case NodeKind::vehicle_start:
    return "start";
  case NodeKind::route_end:
    return "end";
  }
  return "pickup";
}

std::string time_text(Time t) {
  return t >= kTimeInfinity ? std::string("inf") : std::to_string(t);
}

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        tokens.push_back(tok);
      }
      if (!tokens.empty()) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::string> expect(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) {
      throw InputError(std::string("unexpected end of file, expected ") + what, line_no_);
    }
    return tokens;
  }

  std::size_t line() const { return line_no_; }

private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <class T>
T parse_int(const std::string& text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("expected an integer, got '" + text + "'", line);
  }
  return value;
}

double parse_double(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
      throw InputError("expected a number, got '" + text + "'", line);
    }
    return value;
  } catch (const std::logic_error&) {
    throw InputError("expected a number, got '" + text + "'", line);
  }
}

Time parse_time(const std::string& text, std::size_t line) {
  return text == "inf" ? kTimeInfinity : parse_int<Time>(text, line);
}

NodeKind parse_kind(const std::string& text, std::size_t line) {
  if (text == "pickup") {
    return NodeKind::pickup;
  }
  if (text == "delivery") {
    return NodeKind::delivery;
  }
  if (text == "start") {
    return NodeKind::vehicle_start;
  }
  if (text == "end") {
    return NodeKind::route_end;
  }
  throw InputError("unknown node kind '" + text + "'", line);
}

void expect_key(const std::vector<std::string>& tokens, const char* key, std::size_t arity,
                std::size_t line) {
  if (tokens[0] != key || tokens.size() != arity + 1) {
    throw InputError(std::string("expected '") + key + "' with " + std::to_string(arity) +
                       " value(s)",
                     line);
  }
}

} // namespace

void write_native(std::ostream& out, const Instance& instance) {
  const auto& p = instance.parts();
  out << "NAME " << p.name << '\n';
  out << "REQUESTS " << p.requests.size() << '\n';
  out << "VEHICLES " << p.vehicles.size() << '\n';
  out << "CAPACITY " << p.capacity << '\n';
  out << "BUFFER " << p.buffer << '\n';
  out << "SEED " << p.seed << '\n';
  out << "WINDOW_MODE " << to_string(p.window_mode) << '\n';
  if (p.metric) {
    std::ostringstream speed;
    speed << std::setprecision(17) << p.metric->speed;
    out << "METRIC euclidean " << speed.str() << ' ' << to_string(p.metric->rounding) << '\n';
  } else {
    out << "METRIC explicit\n";
  }
  out << "ROUTE_END " << (p.route_end ? std::to_string(*p.route_end) : std::string("none"))
      << '\n';
  out << "LOCATIONS " << p.locations.size() << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < p.locations.size(); ++i) {
    out << i << ' ' << p.locations[i].x << ' ' << p.locations[i].y << '\n';
  }
  out << "NODES " << p.nodes.size() << '\n';
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const Node& n = p.nodes[i];
    out << i << ' ' << kind_name(n.kind) << ' ' << n.location << ' ' << n.owner << ' '
        << n.demand << ' ' << time_text(n.open) << ' ' << time_text(n.close) << ' '
        << n.service << '\n';
  }
  if (!p.metric) {
    const TravelMatrix& m = *p.matrix;
    out << "MATRIX " << m.size() << '\n';
    for (const auto* values : {&m.costs(), &m.times()}) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          out << (j ? " " : "") << (*values)[i * m.size() + j];
        }
        out << '\n';
      }
    }
  }
  out << "EOF\n";
}

Instance parse_native(std::istream& in) {
  LineReader reader(in);
  Instance::Parts parts;

  auto tokens = reader.expect("NAME");
  if (tokens[0] != "NAME") {
    throw InputError("expected 'NAME'", reader.line());
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    parts.name += (i > 1 ? " " : "") + tokens[i];
  }

  tokens = reader.expect("REQUESTS");
  expect_key(tokens, "REQUESTS", 1, reader.line());
  const auto num_requests = parse_int<std::size_t>(tokens[1], reader.line());
  tokens = reader.expect("VEHICLES");
  expect_key(tokens, "VEHICLES", 1, reader.line());
  const auto num_vehicles = parse_int<std::size_t>(tokens[1], reader.line());
  tokens = reader.expect("CAPACITY");
  expect_key(tokens, "CAPACITY", 1, reader.line());
  parts.capacity = parse_int<int>(tokens[1], reader.line());
  tokens = reader.expect("BUFFER");
  expect_key(tokens, "BUFFER", 1, reader.line());
  parts.buffer = parse_int<Time>(tokens[1], reader.line());
  tokens = reader.expect("SEED");
  expect_key(tokens, "SEED", 1, reader.line());
  parts.seed = parse_int<std::uint64_t>(tokens[1], reader.line());
  tokens = reader.expect("WINDOW_MODE");
  expect_key(tokens, "WINDOW_MODE", 1, reader.line());
  try {
    parts.window_mode = window_mode_from_string(tokens[1]);
  } catch (const InputError& e) {
    throw InputError(e.what(), reader.line());
  }

  tokens = reader.expect("METRIC");
  if (tokens[0] != "METRIC" || tokens.size() < 2) {
    throw InputError("expected 'METRIC'", reader.line());
  }
  if (tokens[1] == "euclidean") {
    if (tokens.size() != 4) {
      throw InputError("METRIC euclidean needs speed and rounding", reader.line());
    }
    EuclideanMetric metric;
    metric.speed = parse_double(tokens[2], reader.line());
    try {
      metric.rounding = rounding_from_string(tokens[3]);
    } catch (const InputError& e) {
      throw InputError(e.what(), reader.line());
    }
    if (!(metric.speed > 0.0)) {
      throw InputError("speed must be positive", reader.line());
    }
    parts.metric = metric;
  } else if (tokens[1] != "explicit" || tokens.size() != 2) {
    throw InputError("METRIC must be 'euclidean' or 'explicit'", reader.line());
  }

  tokens = reader.expect("ROUTE_END");
  expect_key(tokens, "ROUTE_END", 1, reader.line());
  if (tokens[1] != "none") {
    parts.route_end = parse_int<NodeId>(tokens[1], reader.line());
  }

  tokens = reader.expect("LOCATIONS");
  expect_key(tokens, "LOCATIONS", 1, reader.line());
  const auto num_locations = parse_int<std::size_t>(tokens[1], reader.line());
  parts.locations.resize(num_locations);
  for (std::size_t i = 0; i < num_locations; ++i) {
    tokens = reader.expect("a location row");
    if (tokens.size() != 3 || parse_int<std::size_t>(tokens[0], reader.line()) != i) {
      throw InputError("location rows are 'id x y' in id order", reader.line());
    }
    parts.locations[i] = {parse_double(tokens[1], reader.line()),
                          parse_double(tokens[2], reader.line())};
  }

  tokens = reader.expect("NODES");
  expect_key(tokens, "NODES", 1, reader.line());
  const auto num_nodes = parse_int<std::size_t>(tokens[1], reader.line());
  if (num_nodes != 2 * num_requests + num_vehicles + (parts.route_end ? 1 : 0)) {
    throw InputError("node count does not match requests and vehicles", reader.line());
  }
  parts.nodes.resize(num_nodes);
  parts.requests.resize(num_requests);
  parts.vehicles.resize(num_vehicles);
  std::vector<char> pickup_seen(num_requests, 0);
  std::vector<char> delivery_seen(num_requests, 0);
  std::vector<char> vehicle_seen(num_vehicles, 0);
  for (std::size_t i = 0; i < num_nodes; ++i) {
    tokens = reader.expect("a node row");
    const std::size_t line = reader.line();
    if (tokens.size() != 8 || parse_int<std::size_t>(tokens[0], line) != i) {
      throw InputError("node rows are 'id kind location owner demand open close service' "
                       "in id order",
                       line);
    }
    Node& n = parts.nodes[i];
    n.kind = parse_kind(tokens[1], line);
    n.location = parse_int<LocationId>(tokens[2], line);
    n.owner = parse_int<std::int32_t>(tokens[3], line);
    n.demand = parse_int<int>(tokens[4], line);
    n.open = parse_time(tokens[5], line);
    n.close = parse_time(tokens[6], line);
    n.service = parse_int<Time>(tokens[7], line);
    const auto id = static_cast<NodeId>(i);
    if (n.kind == NodeKind::pickup || n.kind == NodeKind::delivery) {
      if (n.owner < 0 || static_cast<std::size_t>(n.owner) >= num_requests) {
        throw InputError("node refers to an unknown request", line);
      }
      auto& seen = n.kind == NodeKind::pickup ? pickup_seen : delivery_seen;
      if (seen[n.owner]) {
        throw InputError("request has two nodes of the same kind", line);
      }
      seen[n.owner] = 1;
      Request& r = parts.requests[n.owner];
      r.id = n.owner;
      (n.kind == NodeKind::pickup ? r.pickup : r.delivery) = id;
    } else if (n.kind == NodeKind::vehicle_start) {
      if (n.owner < 0 || static_cast<std::size_t>(n.owner) >= num_vehicles ||
          vehicle_seen[n.owner]) {
        throw InputError("start node refers to an unknown or repeated vehicle", line);
      }
      vehicle_seen[n.owner] = 1;
      parts.vehicles[n.owner] = Vehicle{n.owner, id};
    }
  }
  for (Request& r : parts.requests) {
    if (r.pickup == kNoNode || r.delivery == kNoNode) {
      throw InputError("request " + std::to_string(r.id) + " lacks a pickup or delivery",
                       reader.line());
    }
    r.earliest = parts.nodes[r.pickup].open;
    r.latest = parts.nodes[r.delivery].close;
  }

  if (parts.metric) {
    parts.matrix = std::make_shared<TravelMatrix>(
      TravelMatrix::euclidean(parts.locations, *parts.metric));
  } else {
    tokens = reader.expect("MATRIX");
    expect_key(tokens, "MATRIX", 1, reader.line());
    const auto size = parse_int<std::size_t>(tokens[1], reader.line());
    std::vector<Cost> cost(size * size);
    std::vector<Time> time(size * size);
    for (auto* values : {&cost, &time}) {
      for (std::size_t i = 0; i < size; ++i) {
        tokens = reader.expect("a matrix row");
        if (tokens.size() != size) {
          throw InputError("matrix row has " + std::to_string(tokens.size()) +
                             " entries, expected " + std::to_string(size),
                           reader.line());
        }
        for (std::size_t j = 0; j < size; ++j) {
          (*values)[i * size + j] = parse_int<std::int64_t>(tokens[j], reader.line());
        }
      }
    }
    parts.matrix = std::make_shared<TravelMatrix>(size, std::move(cost), std::move(time));
  }
  tokens = reader.expect("EOF");
  if (tokens.size() != 1 || tokens[0] != "EOF") {
    throw InputError("expected 'EOF'", reader.line());
  }
  return Instance(std::move(parts));
}

Instance read_native(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return parse_native(in);
}

void save_native(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path.string());
  }
  write_native(out, instance);
}

} // namespace ridepool
