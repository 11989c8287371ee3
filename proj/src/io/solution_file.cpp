#include "ridepool/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ridepool {

void write_solution(std::ostream& out, const Solution& solution) {
  for (const Route& route : solution.routes) {
    out << route.vehicle;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      out << ' ' << route.visits[i];
    }
    out << '\n';
  }
  out << "unassigned";
  for (RequestId r : solution.unassigned) {
    out << ' ' << r;
  }
  out << '\n';
}

Solution parse_solution(std::istream& in, const Instance& instance) {
  Solution sol;
  sol.routes.reserve(instance.num_vehicles());
  for (const Vehicle& v : instance.vehicles()) {
    sol.routes.push_back(Route{v.id, {v.start}});
  }
  std::vector<char> vehicle_seen(instance.num_vehicles(), 0);
  std::vector<char> node_seen(instance.num_nodes(), 0);
  std::vector<char> request_listed(instance.num_requests(), 0);
  bool unassigned_seen = false;

  auto parse_id = [](const std::string& tok, std::size_t line) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) {
        throw InputError("expected an id, got '" + tok + "'", line);
      }
      return v;
    } catch (const std::logic_error&) {
      throw InputError("expected an id, got '" + tok + "'", line);
    }
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) {
      continue;
    }
    std::string tok;
    if (head == "unassigned") {
      if (unassigned_seen) {
        throw InputError("second unassigned line", line_no);
      }
      unassigned_seen = true;
      while (ls >> tok) {
        const auto r = parse_id(tok, line_no);
        if (r < 0 || r >= static_cast<long long>(instance.num_requests())) {
          throw InputError("unknown request " + tok, line_no);
        }
        if (request_listed[r]) {
          throw InputError("request " + tok + " listed twice", line_no);
        }
        request_listed[r] = 1;
        sol.unassigned.push_back(static_cast<RequestId>(r));
      }
      continue;
    }
    const auto v = parse_id(head, line_no);
    if (v < 0 || v >= static_cast<long long>(instance.num_vehicles())) {
      throw InputError("unknown vehicle " + head, line_no);
    }
    if (vehicle_seen[v]) {
      throw InputError("vehicle " + head + " listed twice", line_no);
    }
    vehicle_seen[v] = 1;
    while (ls >> tok) {
      const auto n = parse_id(tok, line_no);
      if (n < 0 || n >= static_cast<long long>(instance.num_nodes())) {
        throw InputError("unknown node " + tok, line_no);
      }
      const auto node = static_cast<NodeId>(n);
      const NodeKind kind = instance.node(node).kind;
      if (kind != NodeKind::pickup && kind != NodeKind::delivery) {
        throw InputError("node " + tok + " is not a pickup or delivery", line_no);
      }
      if (node_seen[node]) {
        throw InputError("node " + tok + " visited twice", line_no);
      }
      node_seen[node] = 1;
      sol.routes[v].visits.push_back(node);
    }
  }
  std::sort(sol.unassigned.begin(), sol.unassigned.end());
  return sol;
}

void save_solution(const std::filesystem::path& path, const Solution& solution) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path.string());
  }
  write_solution(out, solution);
}

Solution read_solution(const std::filesystem::path& path, const Instance& instance) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return parse_solution(in, instance);
}

} // namespace ridepool
