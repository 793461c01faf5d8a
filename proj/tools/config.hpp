#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace hardsq::cli {

struct RunConfig {
  int threads = 0;  // 0: one worker per hardware thread
  std::uint64_t cell_cap = 2'000'000;
  std::uint64_t vertex_cap = 2'000'000;
  std::uint64_t step_budget = 10'000'000;
};

using EnvLookup = std::function<const char*(const char*)>;

/// Reads {"threads", "cell_cap", "vertex_cap", "step_budget"} from a JSON
/// file; absent keys keep their current value. Throws std::invalid_argument
/// on unreadable files, unknown keys or bad values.
void load_config_file(RunConfig& cfg, const std::string& path);

/// Applies HARDSQ_THREADS and HARDSQ_CELL_CAP when set.
void apply_environment(RunConfig& cfg, const EnvLookup& env);

}  // namespace hardsq::cli
