#include "run_config.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ridepool;

namespace {

struct SolveFlags {
  std::string mode;
  std::string instance;
  std::string out;
  std::string csv;
  std::string progress;
  std::string warm_start;
  std::string config;
  std::string format;
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  Time delta = 0;
  std::size_t fleet = 0;
  int capacity = 0;
  std::size_t workers = 0;
  std::vector<std::string> params;
};

// Options shared by solve and bench. Each option also reads a PDPTW_*
// environment variable.
void add_run_options(CLI::App* cmd, SolveFlags& f, bool with_mode) {
  if (with_mode) {
    cmd->add_option("--mode", f.mode, "sequential, integrated, hybrid or classic-fleetmin")
      ->envname("PDPTW_MODE");
  }
  cmd->add_option("--instance", f.instance, "instance file")->required()->envname("PDPTW_INSTANCE");
  cmd->add_option("--format", f.format, "auto, native or benchmark")->envname("PDPTW_FORMAT");
  cmd->add_option("--seed", f.seed, "random seed")->envname("PDPTW_SEED");
  cmd->add_option("--time-limit", f.time_limit, "wall-clock limit in seconds")
    ->envname("PDPTW_TIME_LIMIT");
  cmd->add_option("--delta", f.delta, "buffer in seconds")->envname("PDPTW_DELTA");
  cmd->add_option("--fleet", f.fleet, "number of vehicles")->envname("PDPTW_FLEET");
  cmd->add_option("--capacity", f.capacity, "vehicle capacity")->envname("PDPTW_CAPACITY");
  cmd->add_option("--workers", f.workers, "worker threads")->envname("PDPTW_WORKERS");
  cmd->add_option("--param", f.params, "key=value parameter override")->envname("PDPTW_PARAM");
  cmd->add_option("--config", f.config, "JSON parameter file")->envname("PDPTW_CONFIG");
  cmd->add_option("--csv", f.csv, "append the CSV row to this file");
  cmd->add_option("--progress", f.progress, "write ILS progress CSV to this file");
}

// Defaults, then the config file, then --param entries, then flags.
RunConfig resolve(CLI::App* cmd, const SolveFlags& f) {
  RunConfig c;
  if (!f.config.empty()) {
    apply_config_file(c, f.config);
  }
  for (const auto& p : f.params) {
    apply_param(c, p);
  }
  auto given = [&](const char* name) { return cmd->count(name) > 0 || !cmd->get_option(name)->empty(); };
  if (cmd->get_option_no_throw("--mode") && given("--mode")) {
    c.mode = run_mode_from_string(f.mode);
  }
  if (given("--format")) {
    apply_param(c, "format", f.format);
  }
  if (given("--seed")) {
    c.seed = f.seed;
  }
  if (given("--time-limit")) {
    c.time_limit = f.time_limit;
  }
  if (given("--delta")) {
    c.delta = f.delta;
  }
  if (given("--fleet")) {
    c.fleet = f.fleet;
  }
  if (given("--capacity")) {
    c.capacity = f.capacity;
  }
  if (given("--workers")) {
    c.workers = f.workers;
  }
  return c;
}

void append_csv(const std::string& path, const RunRecord& record) {
  if (path.empty()) {
    return;
  }
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) {
    throw InputError("cannot open " + path);
  }
  if (fresh) {
    out << csv_header() << '\n';
  }
  out << csv_row(record) << '\n';
}

std::unique_ptr<std::ofstream> open_progress(const std::string& path) {
  if (path.empty()) {
    return nullptr;
  }
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) {
    throw InputError("cannot open " + path);
  }
  return out;
}

int print_violations(const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    std::cout << to_string(v.kind) << " vehicle=" << v.vehicle << " node=" << v.node << ": "
              << v.message << '\n';
  }
  return violations.empty() ? 0 : 1;
}

Solution read_any_solution(const std::string& path, const LoadedInstance& loaded) {
  if (loaded.benchmark) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    if (first.rfind("Route", 0) == 0 || first.rfind("Instance", 0) == 0 ||
        first.rfind("Authors", 0) == 0) {
      return read_benchmark_solution(path, *loaded.benchmark);
    }
  }
  return read_solution(path, loaded.instance);
}

std::vector<Time> parse_deltas(const std::string& text) {
  std::vector<Time> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InputError("bad delta '" + item + "'");
    }
  }
  if (out.empty()) {
    throw InputError("no delta values given");
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ride-pooling and pickup-and-delivery solver"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  add_run_options(solve_cmd, solve_flags, true);
  solve_cmd->add_option("--out", solve_flags.out, "solution file");
  solve_cmd->add_option("--warm-start", solve_flags.warm_start, "initial solution file");

  std::string validate_instance;
  std::string validate_solution;
  std::string validate_format = "auto";
  auto* validate_cmd = app.add_subcommand("validate", "check a solution");
  validate_cmd->add_option("--instance", validate_instance)->required();
  validate_cmd->add_option("--solution", validate_solution)->required();
  validate_cmd->add_option("--format", validate_format);

  GeneratorConfig gen;
  std::string gen_out;
  std::string gen_mode = "variable";
  std::string gen_rounding = "half_up";
  double speed_kmh = 20.0;
  auto* generate_cmd = app.add_subcommand("generate", "write a synthetic instance");
  generate_cmd->add_option("--name", gen.name);
  generate_cmd->add_option("--requests", gen.requests);
  generate_cmd->add_option("--vehicles,--fleet", gen.vehicles);
  generate_cmd->add_option("--capacity", gen.capacity);
  generate_cmd->add_option("--delta,--buffer", gen.buffer, "buffer in seconds");
  generate_cmd->add_option("--horizon", gen.horizon, "seconds");
  generate_cmd->add_option("--area", gen.area, "square side in meters");
  generate_cmd->add_option("--speed", speed_kmh, "km/h");
  generate_cmd->add_option("--window-mode", gen_mode, "fixed, fixed_pickup or variable");
  generate_cmd->add_option("--rounding", gen_rounding, "half_up, floor or ceil");
  generate_cmd->add_option("--seed", gen.seed)->envname("PDPTW_SEED");
  generate_cmd->add_option("--out", gen_out, "output file (stdout when omitted)");

  std::string stats_instance;
  std::string stats_solution;
  std::string stats_format = "auto";
  auto* stats_cmd = app.add_subcommand("stats", "route structure metrics");
  stats_cmd->add_option("--instance", stats_instance)->required();
  stats_cmd->add_option("--solution", stats_solution)->required();
  stats_cmd->add_option("--format", stats_format);

  SolveFlags bench_flags;
  std::string deltas = "0,60,120";
  auto* bench_cmd = app.add_subcommand("bench", "buffer sweep with warm-start chaining");
  add_run_options(bench_cmd, bench_flags, true);
  bench_cmd->add_option("--deltas", deltas, "comma-separated buffers in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      const RunConfig config = resolve(solve_cmd, solve_flags);
      const LoadedInstance loaded = load_instance(solve_flags.instance, config);
      std::optional<Solution> warm;
      if (!solve_flags.warm_start.empty()) {
        warm = read_any_solution(solve_flags.warm_start, loaded);
      }
      auto progress = open_progress(solve_flags.progress);
      const SolveOutcome outcome = solve(loaded.instance, config, std::move(warm), progress.get());
      if (!solve_flags.out.empty()) {
        save_solution(solve_flags.out, outcome.solution);
      }
      std::cout << csv_header() << '\n' << csv_row(outcome.record) << '\n';
      append_csv(solve_flags.csv, outcome.record);
      return 0;
    }
    if (*validate_cmd) {
      RunConfig config;
      config.format = validate_format;
      const LoadedInstance loaded = load_instance(validate_instance, config);
      const Solution sol = read_any_solution(validate_solution, loaded);
      const auto violations = validate(sol, loaded.instance);
      if (violations.empty()) {
        std::cout << "feasible " << to_string(evaluate(sol, loaded.instance)) << '\n';
      }
      return print_violations(violations);
    }
    if (*generate_cmd) {
      gen.mode = window_mode_from_string(gen_mode);
      gen.rounding = rounding_from_string(gen_rounding);
      gen.speed = speed_kmh / 3.6;
      const Instance inst = generate(gen);
      if (gen_out.empty()) {
        write_native(std::cout, inst);
      } else {
        save_native(gen_out, inst);
      }
      return 0;
    }
    if (*stats_cmd) {
      RunConfig config;
      config.format = stats_format;
      const LoadedInstance loaded = load_instance(stats_instance, config);
      const Solution sol = read_any_solution(stats_solution, loaded);
      const auto stats = route_stats(loaded.instance, sol);
      write_stats(std::cout, stats);
      return 0;
    }
    if (*bench_cmd) {
      RunConfig config = resolve(bench_cmd, bench_flags);
      if (!bench_cmd->count("--mode") && bench_flags.mode.empty()) {
        bool from_config = !bench_flags.config.empty() || !bench_flags.params.empty();
        if (!from_config) {
          config.mode = RunMode::hybrid;
        }
      }
      config.delta.reset();
      const LoadedInstance loaded = load_instance(bench_flags.instance, config);
      auto progress = open_progress(bench_flags.progress);
      std::optional<Solution> previous;
      std::cout << csv_header() << ",delta,warm_started\n";
      for (Time delta : parse_deltas(deltas)) {
        const Instance inst = loaded.instance.with_buffer(delta);
        std::optional<Solution> warm;
        if (previous && config.mode != RunMode::sequential &&
            validate(*previous, inst).empty()) {
          warm = previous;
        }
        const bool warm_started = warm.has_value();
        SolveOutcome outcome = solve(inst, config, std::move(warm), progress.get());
        std::cout << csv_row(outcome.record) << ',' << delta << ',' << (warm_started ? 1 : 0)
                  << '\n';
        append_csv(bench_flags.csv, outcome.record);
        previous = std::move(outcome.solution);
      }
      return 0;
    }
  } catch (const InfeasibleSolution& e) {
    std::cerr << "error: " << e.what() << '\n';
    print_violations(e.violations());
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
