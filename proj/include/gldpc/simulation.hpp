#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gldpc/config.hpp"

namespace gldpc {

struct BlerRecord {
  double channel_param = 0.0;  // as listed in the config (eps, sigma, or dB)
  std::string schedule;        // label, verbatim from the config
  int iterations = 0;
  long long trials = 0;  // actually run; early stopping shrinks this
  long long block_errors = 0;
  double bler = 0.0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;  // measured, deliberately not part of the CSV
};

// Seeded Monte Carlo block-error sweep over every (channel param, schedule)
// pair.  Trial t of pair (c, s) draws all randomness from a generator seeded
// by (seed, c, s, t) alone, so records are identical for any worker count.
// workers <= 0 uses the hardware concurrency.
std::vector<BlerRecord> run_simulation(const ExperimentConfig& cfg, int workers = 0);

// CSV with the exact header
//   channel_param,schedule,iterations,trials,block_errors,bler,seed
// rows ordered by channel param then schedule label, numbers printed with up
// to 10 significant digits, schedule always quoted (labels contain commas).
void emit_csv(const std::vector<BlerRecord>& records, std::ostream& out);
void emit_csv(const std::vector<BlerRecord>& records, const std::string& path);

// 95% Wilson score interval for an observed error fraction.
struct Interval {
  double lo = 0.0, hi = 1.0;
};
Interval wilson_interval(long long errors, long long trials);

}  // namespace gldpc
