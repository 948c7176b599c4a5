#ifndef RCERT_EXPERIMENT_HPP
#define RCERT_EXPERIMENT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rcert {

/// One experiment invocation: a subcommand plus its parameters. Everything a
/// run needs is in here, so (config, seed) fully determines the outcome.
struct ExperimentConfig {
  std::string command;  // certify | attack | learn | game | verify-constructions | report
  std::string task_path;
  std::string mode;  // certify mode / learn algo / game kind / constructions selector / adversary
  double eps = 0.1;
  double delta = 0.1;
  double gamma = 0.1;
  long m = 0;  // 0 = derive from (eps, delta)
  long m_unlabeled = 0;
  uint64_t seed = 1;
  long trials = 1;
  uint64_t max_queries = 50;
  std::string strategy = "random";  // game strategy: "random" or a script path
  std::string in_path;              // report input
  std::string out_path;
  std::string format = "json";  // json | csv

  nlohmann::json to_json() const;
  std::string hash() const;
};

struct TrialReport {
  ExperimentConfig config;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json aggregates = nlohmann::json::object();
  bool ok = true;  // false on verification failure (CLI exit 4)
  long runtime_ms = 0;
  std::string timestamp;

  /// Full report. Volatile fields are exactly "timestamp" and "runtime_ms";
  /// everything else is byte-reproducible for a fixed (config, seed).
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Dispatches the config to the matching module, runs the trials (each on
/// its own derived seed), and assembles the report. Writes out_path when set.
TrialReport run(const ExperimentConfig& config);

}  // namespace rcert

#endif  // RCERT_EXPERIMENT_HPP
