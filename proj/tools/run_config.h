#pragma once

#include "ridepool/fleetmin.h"
#include "ridepool/io.h"
#include "ridepool/solver.h"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace ridepool {

enum class RunMode : std::uint8_t { sequential, integrated, hybrid, classic_fleetmin };

RunMode run_mode_from_string(const std::string& text);
std::string to_string(RunMode mode);

struct RunConfig {
  RunMode mode = RunMode::integrated;
  std::uint64_t seed = 1;
  double time_limit = 60.0;
  std::size_t workers = 0; // 0: available parallelism
  std::string format = "auto";
  std::optional<Time> delta;
  std::optional<std::size_t> fleet;
  std::optional<int> capacity;
  SequentialParams sequential;
  IlsParams ils;
  AgesParams ages;
};

// Sets one parameter by name; throws InputError for unknown keys or bad
// values. Keys: mode, seed, time_limit, workers, format, delta, fleet,
// capacity, rank, weight, rho, matching, start_policy, limits,
// max_distance, max_gap, avg_removed, max_string, split_rate,
// substring_rate, blink, insert_limit, rnr_iterations, bs_k, bs_thickness,
// intensify, local_loops, subproblem_nodes, perturb_factor,
// relocate_share, t_init, max_iterations, ages_decay, ages_budget,
// ages_moves, ages_relocate_share.
void apply_param(RunConfig& config, const std::string& key, const std::string& value);

// "key=value".
void apply_param(RunConfig& config, const std::string& assignment);

// Flat JSON object of parameter names to values.
void apply_config(RunConfig& config, const nlohmann::json& json);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

// Resolves the worker count and copies shared settings into the module
// parameter sets.
IlsParams ils_params(const RunConfig& config);
HierarchicalParams hierarchical_params(const RunConfig& config);

struct LoadedInstance {
  Instance instance;
  std::optional<BenchmarkInstance> benchmark;
};

// Reads a native or benchmark file ("auto" sniffs the header) and applies
// the fleet, capacity and buffer overrides.
LoadedInstance load_instance(const std::filesystem::path& path, const RunConfig& config);

struct SolveOutcome {
  Solution solution;
  Objective objective;
  RunRecord record;
};

// Runs the configured mode. The returned solution has been validated.
SolveOutcome solve(const Instance& instance, const RunConfig& config,
                   std::optional<Solution> warm_start = std::nullopt,
                   std::ostream* progress = nullptr);

} // namespace ridepool
