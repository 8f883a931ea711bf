#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gldpc/channel.hpp"
#include "gldpc/decoder.hpp"
#include "gldpc/gldpc_code.hpp"
#include "gldpc/scheduler.hpp"

namespace gldpc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat sectioned key-value experiment description.  Sections and keys:
//   [code]    exponent_matrix | exponent_matrix_inline, lifting_size,
//             subcode.<row> (1-based), assignment
//   [channel] type, params, param_unit
//   [decoder] mode, schedule (repeatable), max_iterations, gc_rule
//   [run]     trials, seed, min_block_errors, output, transmit
// Unknown sections or keys are rejected.
struct ExperimentConfig {
  std::string exponent_matrix;         // file path (exclusive with inline form)
  std::string exponent_matrix_inline;  // rows separated by ';'
  int lifting_size = 0;
  std::map<int, std::string> row_subcodes;  // 0-based row -> family name
  AssignmentPolicy assignment;

  ChannelModel::Kind channel = ChannelModel::bec;
  std::vector<double> params;      // channel parameters, or Eb/N0 in dB
  bool params_are_ebn0_db = false;  // biawgn only: convert via the code rate

  bool layered = true;
  std::vector<std::string> schedules;  // raw specs; default {"natural"}
  int max_iterations = 3;
  GcMode gc_rule = GcMode::exact;

  long long trials = 0;
  std::uint64_t seed = 0;
  long long min_block_errors = 0;  // 0 disables early stopping
  std::string output;              // empty: stdout
  bool random_codewords = false;   // default: all-zero transmission
};

ExperimentConfig parse_config(std::istream& in);
// Reads a config file; a relative code.exponent_matrix is resolved against the
// directory containing the config file.
ExperimentConfig load_config(const std::string& path);

// Everything the subcommands need, built once from a parsed config.
struct Experiment {
  ExponentMatrix matrix;
  GldpcCode code;
  std::vector<NodeProfile> profiles;  // one per exponent row
  OverlapTable overlaps;              // row-level shared-column counts
};

Experiment build_experiment(const ExperimentConfig& cfg);

// One decoder-section schedule entry resolved against the experiment.
// Accepted specs: "natural", "hds", "low_degree", "random:<seed>",
// "per_trial_random", or an explicit 1-based row list like "1,3,2,4".
struct ResolvedSchedule {
  std::string label;       // config text, verbatim
  bool per_trial = false;  // fresh uniform row order every trial
  std::vector<int> rows;   // 0-based row sequence (empty when per_trial)
};

ResolvedSchedule resolve_schedule(const std::string& spec, const Experiment& ex);

}  // namespace gldpc
