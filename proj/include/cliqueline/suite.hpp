#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliqueline/serialize.hpp"
#include "cliqueline/verify.hpp"

namespace cliqueline {

// Suite configuration (JSON):
//
//   {
//     "seed": 42,
//     "checks": [
//       {"name": "bipartite", "enabled": true, "max": 5},
//       {"name": "chordal", "fuzz": 50, "max_vertices": 9},
//       ...
//     ]
//   }
//
// Checks run in the listed order. Keys other than name/enabled override that
// check's defaults; unknown names or keys are configuration errors.

/// Registered check names in default order.
const std::vector<std::string>& check_catalog();
/// Default parameters for one check; throws ConfigError for unknown names.
Json default_params(const std::string& name);
/// Every catalog entry, enabled, with default parameters.
Json default_config();

Json load_config(const std::filesystem::path& path);

struct SuiteOverrides {
  std::optional<std::string> check;
  std::optional<std::uint64_t> seed;
  /// Run only this many random instances of one check.
  std::optional<std::pair<std::string, std::size_t>> fuzz;
  /// Run the multipartite check on these part sizes only.
  std::optional<std::vector<std::size_t>> parts;
  /// Run graph-based checks on this named graph only.
  std::optional<std::string> graph;
};

/// Command-line style selections applied on top of a config.
Json apply_overrides(Json config, const SuiteOverrides& o);

/// A configured check instance, ready to run.
struct CheckTask {
  std::string name;
  std::function<Report()> run;
};

/// Validates the config and generates all instances (deterministically from
/// the seed). Throws ConfigError.
std::vector<CheckTask> expand_config(const Json& config);

/// Runs the tasks on up to `threads` workers; results keep task order.
std::vector<Report> run_tasks(const std::vector<CheckTask>& tasks, std::size_t threads);

/// hardware_concurrency capped by CLIQUELINE_THREADS when set.
std::size_t default_thread_count();

struct SuiteResult {
  std::vector<Report> reports;
  /// 0 when every report passes, 1 otherwise.
  int exit_code = 0;
};

SuiteResult run_suite(const Json& config, std::size_t threads = default_thread_count());

Json reports_to_json(const std::vector<Report>& reports);

}  // namespace cliqueline
