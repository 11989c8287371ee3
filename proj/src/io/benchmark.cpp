#include "ridepool/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace ridepool {

namespace {

struct FileNode {
  double lat = 0.0;
  double lon = 0.0;
  int demand = 0;
  Time open = 0;
  Time close = 0;
  Time service = 0;
  int pickup_pair = 0;
  int delivery_pair = 0;
  std::size_t line = 0;
};

std::int64_t to_int(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) {
      throw InputError("expected an integer, got '" + text + "'", line);
    }
    return v;
  } catch (const std::logic_error&) {
    throw InputError("expected an integer, got '" + text + "'", line);
  }
}

double to_double(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
      throw InputError("expected a number, got '" + text + "'", line);
    }
    return v;
  } catch (const std::logic_error&) {
    throw InputError("expected a number, got '" + text + "'", line);
  }
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

BenchmarkInstance parse_benchmark(std::istream& in, std::size_t vehicles) {
  std::map<std::string, std::string> header;
  std::vector<FileNode> nodes;
  std::vector<std::int64_t> edges;
  std::size_t size = 0;
  enum class Section { header, nodes, edges, done } section = Section::header;
  bool saw_nodes = false;
  bool saw_edges = false;

  std::string line;
  std::size_t line_no = 0;
  std::size_t edge_rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) {
      continue;
    }
    if (text == "EOF") {
      section = Section::done;
      break;
    }
    if (text == "NODES") {
      if (!header.count("SIZE")) {
        throw InputError("NODES section before SIZE", line_no);
      }
      section = Section::nodes;
      saw_nodes = true;
      continue;
    }
    if (text == "EDGES") {
      section = Section::edges;
      saw_edges = true;
      continue;
    }
    switch (section) {
    case Section::header: {
      const auto colon = text.find(':');
      if (colon == std::string::npos) {
        throw InputError("expected 'KEY: value' header line", line_no);
      }
      const std::string key = trim(text.substr(0, colon));
      header[key] = trim(text.substr(colon + 1));
      if (key == "SIZE") {
        const auto v = to_int(header[key], line_no);
        if (v < 1) {
          throw InputError("SIZE must be positive", line_no);
        }
        size = static_cast<std::size_t>(v);
      }
      break;
    }
    case Section::nodes: {
      const auto tok = split(text);
      if (tok.size() != 9) {
        throw InputError("node line needs 9 fields (id lat lon dem etw ltw dur p d)", line_no);
      }
      const auto id = to_int(tok[0], line_no);
      if (id != static_cast<std::int64_t>(nodes.size()) ||
          nodes.size() >= size) {
        throw InputError("node ids must run from 0 to SIZE-1 in order", line_no);
      }
      FileNode n;
      n.lat = to_double(tok[1], line_no);
      n.lon = to_double(tok[2], line_no);
      n.demand = static_cast<int>(to_int(tok[3], line_no));
      n.open = to_int(tok[4], line_no);
      n.close = to_int(tok[5], line_no);
      n.service = to_int(tok[6], line_no);
      n.pickup_pair = static_cast<int>(to_int(tok[7], line_no));
      n.delivery_pair = static_cast<int>(to_int(tok[8], line_no));
      n.line = line_no;
      nodes.push_back(n);
      break;
    }
    case Section::edges: {
      const auto tok = split(text);
      if (tok.size() != size) {
        throw InputError("EDGES row has " + std::to_string(tok.size()) +
                           " entries, expected " + std::to_string(size),
                         line_no);
      }
      if (edge_rows >= size) {
        throw InputError("EDGES has more than SIZE rows", line_no);
      }
      for (const auto& t : tok) {
        edges.push_back(to_int(t, line_no));
      }
      ++edge_rows;
      break;
    }
    case Section::done:
      break;
    }
  }
  if (!saw_nodes) {
    throw InputError("missing NODES section", line_no);
  }
  if (!saw_edges) {
    throw InputError("missing EDGES section", line_no);
  }
  if (nodes.size() != size) {
    throw InputError("NODES lists " + std::to_string(nodes.size()) + " nodes, SIZE is " +
                       std::to_string(size),
                     line_no);
  }
  if (edge_rows != size) {
    throw InputError("EDGES matrix is not square", line_no);
  }
  if (!header.count("CAPACITY")) {
    throw InputError("missing CAPACITY header", line_no);
  }

  // Pairing.
  const int n_file = static_cast<int>(size);
  std::vector<int> pickups;
  for (int i = 1; i < n_file; ++i) {
    const FileNode& n = nodes[i];
    const bool is_pickup = n.pickup_pair == 0 && n.delivery_pair != 0;
    const bool is_delivery = n.delivery_pair == 0 && n.pickup_pair != 0;
    if (n.pickup_pair == i || n.delivery_pair == i) {
      throw InputError("node " + std::to_string(i) + " is paired with itself", n.line);
    }
    if (!is_pickup && !is_delivery) {
      throw InputError("node " + std::to_string(i) + " is neither pickup nor delivery", n.line);
    }
    const int other = is_pickup ? n.delivery_pair : n.pickup_pair;
    if (other < 1 || other >= n_file) {
      throw InputError("node " + std::to_string(i) + " has a dangling pair", n.line);
    }
    const FileNode& o = nodes[other];
    if ((is_pickup && o.pickup_pair != i) || (is_delivery && o.delivery_pair != i)) {
      throw InputError("node " + std::to_string(i) + " has a dangling pair", n.line);
    }
    if (is_pickup) {
      pickups.push_back(i);
    }
  }

  const std::size_t num_requests = pickups.size();
  const std::size_t num_vehicles = vehicles ? vehicles : std::max<std::size_t>(1, num_requests);
  BenchmarkInstance bench;
  bench.node_of_file_id.assign(size, kNoNode);
  Instance::Parts parts;
  parts.name = header.count("NAME") ? header["NAME"] : std::string("benchmark");
  parts.capacity = static_cast<int>(to_int(header["CAPACITY"], 0));
  parts.window_mode = WindowMode::explicit_windows;
  parts.locations.reserve(size);
  for (const FileNode& n : nodes) {
    parts.locations.push_back({n.lat, n.lon});
  }

  const FileNode& depot = nodes[0];
  const Time route_time =
    header.count("ROUTE-TIME") ? to_int(header["ROUTE-TIME"], 0) : depot.close;
  auto make_node = [](const FileNode& f, NodeKind kind, int location, std::int32_t owner) {
    Node n;
    n.kind = kind;
    n.location = location;
    n.owner = owner;
    n.demand = f.demand;
    n.open = f.open;
    n.close = f.close;
    n.service = f.service;
    return n;
  };
  for (std::size_t r = 0; r < num_requests; ++r) {
    const int p = pickups[r];
    const int d = nodes[p].delivery_pair;
    const auto id = static_cast<RequestId>(r);
    parts.nodes.push_back(make_node(nodes[p], NodeKind::pickup, p, id));
    parts.nodes.push_back(make_node(nodes[d], NodeKind::delivery, d, id));
    Request req;
    req.id = id;
    req.pickup = static_cast<NodeId>(2 * r);
    req.delivery = static_cast<NodeId>(2 * r + 1);
    req.earliest = nodes[p].open;
    req.latest = nodes[d].close;
    parts.requests.push_back(req);
    bench.node_of_file_id[p] = req.pickup;
    bench.node_of_file_id[d] = req.delivery;
  }
  for (std::size_t v = 0; v < num_vehicles; ++v) {
    Node start = make_node(depot, NodeKind::vehicle_start, 0, static_cast<std::int32_t>(v));
    start.demand = 0;
    parts.vehicles.push_back(
      Vehicle{static_cast<VehicleId>(v), static_cast<NodeId>(parts.nodes.size())});
    parts.nodes.push_back(start);
  }
  Node end = make_node(depot, NodeKind::route_end, 0, -1);
  end.demand = 0;
  end.close = std::min(depot.close, route_time);
  parts.route_end = static_cast<NodeId>(parts.nodes.size());
  parts.nodes.push_back(end);
  bench.node_of_file_id[0] = *parts.route_end;

  bench.file_id_of_node.resize(parts.nodes.size(), 0);
  for (std::size_t i = 0; i < parts.nodes.size(); ++i) {
    bench.file_id_of_node[i] = parts.nodes[i].location;
  }
  std::vector<Time> time(edges.begin(), edges.end());
  parts.matrix = std::make_shared<TravelMatrix>(size, std::vector<Cost>(edges), std::move(time));
  bench.instance = Instance(std::move(parts));
  return bench;
}

BenchmarkInstance read_benchmark(const std::filesystem::path& path, std::size_t vehicles) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return parse_benchmark(in, vehicles);
}

Solution parse_benchmark_solution(std::istream& in, const BenchmarkInstance& bench) {
  const Instance& inst = bench.instance;
  Solution sol = empty_solution(inst);
  std::vector<char> served(inst.num_requests(), 0);
  std::string line;
  std::size_t line_no = 0;
  std::size_t next_vehicle = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.rfind("Route", 0) != 0) {
      continue;
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      throw InputError("route line lacks ':'", line_no);
    }
    if (next_vehicle >= inst.num_vehicles()) {
      throw InputError("more routes than vehicles", line_no);
    }
    Route& route = sol.routes[next_vehicle++];
    for (const auto& tok : split(text.substr(colon + 1))) {
      const auto file_id = to_int(tok, line_no);
      if (file_id < 1 || file_id >= static_cast<std::int64_t>(bench.node_of_file_id.size())) {
        throw InputError("unknown node " + tok, line_no);
      }
      const NodeId n = bench.node_of_file_id[file_id];
      if (inst.is_pickup(n)) {
        if (served[inst.request_of(n)]) {
          throw InputError("node " + tok + " listed twice", line_no);
        }
        served[inst.request_of(n)] = 1;
      }
      route.visits.push_back(n);
    }
  }
  sol.unassigned.clear();
  for (const Request& r : inst.requests()) {
    if (!served[r.id]) {
      sol.unassigned.push_back(r.id);
    }
  }
  return sol;
}

Solution read_benchmark_solution(const std::filesystem::path& path,
                                 const BenchmarkInstance& bench) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return parse_benchmark_solution(in, bench);
}

} // namespace ridepool
