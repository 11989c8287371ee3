#include "run_config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

namespace ridepool {

RunMode run_mode_from_string(const std::string& text) {
  if (text == "sequential") {
    return RunMode::sequential;
  }
  if (text == "integrated") {
    return RunMode::integrated;
  }
  if (text == "hybrid") {
    return RunMode::hybrid;
  }
  if (text == "classic-fleetmin") {
    return RunMode::classic_fleetmin;
  }
  throw InputError("unknown mode '" + text + "'");
}

std::string to_string(RunMode mode) {
  switch (mode) {
  case RunMode::sequential:
    return "sequential";
  case RunMode::integrated:
    return "integrated";
  case RunMode::hybrid:
    return "hybrid";
  case RunMode::classic_fleetmin:
    return "classic-fleetmin";
  }
  return "integrated";
}

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw InputError("bad value '" + value + "' for " + key);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used == value.size()) {
      return out;
    }
  } catch (const std::exception&) {
  }
  throw InputError("bad value '" + value + "' for " + key);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") {
    return true;
  }
  if (value == "0" || value == "false" || value == "off" || value == "no") {
    return false;
  }
  throw InputError("bad value '" + value + "' for " + key);
}

} // namespace

void apply_param(RunConfig& c, const std::string& key, const std::string& value) {
  auto num = [&]<typename T>(T& field) { field = parse_number<T>(key, value); };
  auto real = [&](double& field) { field = parse_double(key, value); };
  RnrParams& rnr = c.ils.rnr;

  if (key == "mode") {
    c.mode = run_mode_from_string(value);
  } else if (key == "seed") {
    num(c.seed);
  } else if (key == "time_limit") {
    real(c.time_limit);
  } else if (key == "workers") {
    num(c.workers);
  } else if (key == "format") {
    if (value != "auto" && value != "native" && value != "benchmark") {
      throw InputError("unknown format '" + value + "'");
    }
    c.format = value;
  } else if (key == "delta") {
    c.delta = parse_number<Time>(key, value);
  } else if (key == "fleet") {
    c.fleet = parse_number<std::size_t>(key, value);
  } else if (key == "capacity") {
    c.capacity = parse_number<int>(key, value);
  } else if (key == "rank") {
    num(c.sequential.rank);
  } else if (key == "weight") {
    c.sequential.weights.kind = weight_kind_from_string(value);
  } else if (key == "rho") {
    real(c.sequential.weights.rho);
  } else if (key == "matching") {
    c.sequential.method = matching_method_from_string(value);
  } else if (key == "start_policy") {
    c.sequential.policy = start_policy_from_string(value);
  } else if (key == "limits") {
    if (parse_bool(key, value)) {
      if (!c.sequential.limits) {
        c.sequential.limits = ConnectionLimits{};
      }
    } else {
      c.sequential.limits.reset();
    }
  } else if (key == "max_distance") {
    if (!c.sequential.limits) {
      c.sequential.limits = ConnectionLimits{};
    }
    num(c.sequential.limits->max_distance);
  } else if (key == "max_gap") {
    if (!c.sequential.limits) {
      c.sequential.limits = ConnectionLimits{};
    }
    num(c.sequential.limits->max_gap);
  } else if (key == "avg_removed") {
    real(rnr.avg_removed);
  } else if (key == "max_string") {
    real(rnr.max_string);
  } else if (key == "split_rate") {
    real(rnr.split_rate);
  } else if (key == "substring_rate") {
    real(rnr.substring_rate);
  } else if (key == "blink") {
    real(rnr.blink);
  } else if (key == "insert_limit") {
    num(rnr.insert_limit);
  } else if (key == "rnr_iterations") {
    num(rnr.iterations);
  } else if (key == "bs_k") {
    num(rnr.bs_k);
  } else if (key == "bs_thickness") {
    num(rnr.bs_thickness);
  } else if (key == "intensify") {
    rnr.intensify = parse_bool(key, value);
  } else if (key == "local_loops") {
    num(c.ils.local_loops);
  } else if (key == "subproblem_nodes") {
    num(c.ils.subproblem_nodes);
  } else if (key == "perturb_factor") {
    real(c.ils.perturb_factor);
  } else if (key == "relocate_share") {
    real(c.ils.relocate_share);
  } else if (key == "t_init") {
    real(c.ils.t_init);
  } else if (key == "max_iterations") {
    num(c.ils.max_iterations);
  } else if (key == "ages_decay") {
    real(c.ages.decay);
  } else if (key == "ages_budget") {
    num(c.ages.budget);
  } else if (key == "ages_moves") {
    num(c.ages.moves);
  } else if (key == "ages_relocate_share") {
    real(c.ages.relocate_share);
  } else {
    throw InputError("unknown parameter '" + key + "'");
  }
}

void apply_param(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw InputError("parameter must look like key=value: '" + assignment + "'");
  }
  apply_param(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void apply_config(RunConfig& config, const nlohmann::json& json) {
  if (!json.is_object()) {
    throw InputError("config must be a JSON object");
  }
  for (const auto& [key, value] : json.items()) {
    if (value.is_string()) {
      apply_param(config, key, value.get<std::string>());
    } else if (value.is_boolean()) {
      apply_param(config, key, value.get<bool>() ? "true" : "false");
    } else if (value.is_number_integer()) {
      apply_param(config, key, std::to_string(value.get<std::int64_t>()));
    } else if (value.is_number()) {
      std::ostringstream text;
      text.precision(17);
      text << value.get<double>();
      apply_param(config, key, text.str());
    } else {
      throw InputError("config value for '" + key + "' must be a scalar");
    }
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open config " + path.string());
  }
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config " + path.string() + ": " + e.what());
  }
  apply_config(config, json);
}

IlsParams ils_params(const RunConfig& config) {
  IlsParams p = config.ils;
  p.time_limit = config.time_limit;
  p.workers = config.workers > 0 ? config.workers
                                 : std::max(1u, std::thread::hardware_concurrency());
  return p;
}

HierarchicalParams hierarchical_params(const RunConfig& config) {
  return {ils_params(config), config.ages};
}

namespace {

bool looks_like_benchmark(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  for (int i = 0; i < 12 && std::getline(in, line); ++i) {
    if (line.rfind("SIZE", 0) == 0 || line.rfind("ROUTE-TIME", 0) == 0 ||
        line.rfind("TYPE", 0) == 0) {
      return true;
    }
  }
  return false;
}

} // namespace

LoadedInstance load_instance(const std::filesystem::path& path, const RunConfig& config) {
  if (!std::filesystem::exists(path)) {
    throw InputError("instance file not found: " + path.string());
  }
  const bool benchmark = config.format == "benchmark" ||
                         (config.format == "auto" && looks_like_benchmark(path));
  LoadedInstance out;
  if (benchmark) {
    out.benchmark = read_benchmark(path, config.fleet.value_or(0));
    out.instance = out.benchmark->instance;
  } else {
    out.instance = read_native(path);
    if (config.fleet && *config.fleet != out.instance.num_vehicles()) {
      if (*config.fleet > out.instance.num_vehicles()) {
        throw InputError("fleet override exceeds the vehicles in the instance");
      }
      std::vector<VehicleId> vehicles(*config.fleet);
      std::vector<RequestId> requests(out.instance.num_requests());
      for (std::size_t v = 0; v < vehicles.size(); ++v) {
        vehicles[v] = static_cast<VehicleId>(v);
      }
      for (std::size_t r = 0; r < requests.size(); ++r) {
        requests[r] = static_cast<RequestId>(r);
      }
      out.instance = out.instance.restrict(vehicles, requests).instance;
    }
  }
  if (config.capacity) {
    Instance::Parts parts = out.instance.parts();
    parts.capacity = *config.capacity;
    out.instance = Instance(std::move(parts));
  }
  if (config.delta) {
    out.instance = out.instance.with_buffer(*config.delta);
  }
  return out;
}

SolveOutcome solve(const Instance& instance, const RunConfig& config,
                   std::optional<Solution> warm_start, std::ostream* progress) {
  const auto started = Clock::now();
  SolveOutcome out;
  out.record.instance = instance.name();
  out.record.mode = to_string(config.mode);
  out.record.seed = config.seed;
  Rng rng(config.seed);
  auto run_sequential = [&] {
    return solve_sequential(instance, config.sequential, rng).solution;
  };
  switch (config.mode) {
  case RunMode::sequential:
    out.solution = run_sequential();
    break;
  case RunMode::integrated:
  case RunMode::hybrid: {
    if (config.mode == RunMode::hybrid && !warm_start) {
      warm_start = run_sequential();
    }
    IlsResult res = run_ils(instance, ils_params(config), rng(), std::move(warm_start), progress);
    out.solution = std::move(res.best);
    out.record.ils_iterations = res.ils_iterations;
    out.record.rnr_iterations = res.rnr_iterations;
    break;
  }
  case RunMode::classic_fleetmin: {
    IlsResult res = hierarchical_run(instance, hierarchical_params(config), rng(),
                                     std::move(warm_start), progress);
    out.solution = std::move(res.best);
    out.record.ils_iterations = res.ils_iterations;
    out.record.rnr_iterations = res.rnr_iterations;
    break;
  }
  }
  out.objective = evaluate(out.solution, instance);
  out.record.unassigned = out.objective.unassigned;
  out.record.cost = out.objective.cost;
  out.record.vehicles = out.objective.vehicles;
  out.record.wall_time = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

} // namespace ridepool
