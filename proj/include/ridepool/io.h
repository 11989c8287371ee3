#pragma once

#include "ridepool/solution.h"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ridepool {

// Native text format. Lossless: parse(write(x)) reproduces x exactly.
Instance parse_native(std::istream& in);
void write_native(std::ostream& out, const Instance& instance);
Instance read_native(const std::filesystem::path& path);
void save_native(const std::filesystem::path& path, const Instance& instance);

// Classic PDPTW benchmark layout (NAME/SIZE/ROUTE-TIME/CAPACITY header,
// NODES and EDGES sections). Node i of the file maps to
// node_of_file_id[i]; the depot becomes every vehicle's start and the
// closing route end.
struct BenchmarkInstance {
  Instance instance;
  std::vector<NodeId> node_of_file_id;
  std::vector<int> file_id_of_node;
};

// `vehicles` = 0 gives one vehicle per request.
BenchmarkInstance parse_benchmark(std::istream& in, std::size_t vehicles = 0);
BenchmarkInstance read_benchmark(const std::filesystem::path& path, std::size_t vehicles = 0);

// "Route k : id id ..." lines with file node ids; other lines are ignored.
Solution parse_benchmark_solution(std::istream& in, const BenchmarkInstance& bench);
Solution read_benchmark_solution(const std::filesystem::path& path,
                                 const BenchmarkInstance& bench);

// Route lists: one "<vehicle> <visits after the start...>" line per
// vehicle, then "unassigned <request ids...>".
void write_solution(std::ostream& out, const Solution& solution);
Solution parse_solution(std::istream& in, const Instance& instance);
void save_solution(const std::filesystem::path& path, const Solution& solution);
Solution read_solution(const std::filesystem::path& path, const Instance& instance);

struct GeneratorConfig {
  std::string name = "synthetic";
  std::size_t requests = 100;
  std::size_t vehicles = 10;
  int capacity = 3;
  Time buffer = 120;
  Time horizon = 3600;
  double area = 10000.0;
  double speed = 20.0 / 3.6;
  WindowMode mode = WindowMode::variable;
  Rounding rounding = Rounding::half_up;
  std::uint64_t seed = 1;
};

// Uniform origins and destinations in a square, dropoff times uniform over
// the horizon. Node ids: pickup 2r, delivery 2r+1, vehicle starts 2|R|+v.
Instance generate(const GeneratorConfig& config);

struct RunRecord {
  std::string instance;
  std::string mode;
  std::uint64_t seed = 0;
  std::int64_t unassigned = 0;
  Cost cost = 0;
  std::int64_t vehicles = 0;
  double wall_time = 0.0;
  std::int64_t ils_iterations = 0;
  std::int64_t rnr_iterations = 0;
};

std::string csv_header();
std::string csv_row(const RunRecord& record);

} // namespace ridepool
