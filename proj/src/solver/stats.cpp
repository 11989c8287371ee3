#include "ridepool/solver.h"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace ridepool {

std::vector<RouteStats> route_stats(const Instance& instance, const Solution& solution) {
  evaluate(solution, instance);
  std::vector<RouteStats> out;
  for (const Route& route : solution.routes) {
    if (route.empty()) {
      continue;
    }
    RouteStats s;
    s.vehicle = route.vehicle;
    int on_board = 0;
    for (std::size_t i = 1; i < route.visits.size(); ++i) {
      const NodeId n = route.visits[i];
      if (instance.is_pickup(n)) {
        ++s.requests;
        ++on_board;
      } else {
        --on_board;
      }
      s.width = std::max(s.width, on_board);
      if (on_board == 0) {
        ++s.blocks;
      }
    }
    out.push_back(s);
  }
  return out;
}

void write_stats(std::ostream& out, std::span<const RouteStats> stats) {
  auto row = [&](const char* name, auto field) {
    double sum = 0.0;
    double max = 0.0;
    for (const RouteStats& s : stats) {
      const auto v = static_cast<double>(field(s));
      sum += v;
      max = std::max(max, v);
    }
    const double mean = stats.empty() ? 0.0 : sum / static_cast<double>(stats.size());
    out << name << ',' << std::fixed << std::setprecision(3) << mean << ','
        << static_cast<std::int64_t>(max) << '\n';
  };
  out << "metric,mean,max\n";
  row("requests", [](const RouteStats& s) { return s.requests; });
  row("width", [](const RouteStats& s) { return s.width; });
  row("blocks", [](const RouteStats& s) { return s.blocks; });
}

} // namespace ridepool
