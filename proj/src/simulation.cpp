#include "gldpc/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "gldpc/decoder.hpp"
#include "gldpc/rng.hpp"

namespace gldpc {

namespace {

// Early stopping is decided on whole batches so the stop point depends only
// on trial indices, never on worker scheduling.
constexpr long long kBatch = 512;

struct TrialContext {
  const GldpcCode* code = nullptr;
  ChannelModel channel;
  const ResolvedSchedule* spec = nullptr;
  const Schedule* fixed_schedule = nullptr;  // null only when spec->per_trial
  bool layered = true;
  DecodeOptions opts;                 // transmitted is filled per trial
  const BitMatrix* generator = nullptr;  // null: all-zero transmission
  std::uint64_t seed = 0;
  std::uint64_t channel_idx = 0, schedule_idx = 0;
};

struct WorkerState {
  Decoder decoder;
  std::vector<std::uint8_t> word;
  std::vector<std::uint64_t> packed;
  ReceivedWord rx;
  explicit WorkerState(const GldpcCode& code) : decoder(code), word(code.n()) {}
};

bool run_trial(const TrialContext& ctx, long long t, WorkerState& ws) {
  Rng rng(derive_seed(ctx.seed, ctx.channel_idx, ctx.schedule_idx, (std::uint64_t)t));

  Schedule per_trial_schedule;
  const Schedule* schedule = ctx.fixed_schedule;
  if (ctx.spec->per_trial) {
    std::vector<int> rows(ctx.code->exponent_rows());
    std::iota(rows.begin(), rows.end(), 0);
    rng.shuffle(rows);
    per_trial_schedule = ctx.layered ? expand_row_schedule(*ctx.code, rows)
                                     : Schedule::make_flooding();
    schedule = &per_trial_schedule;
  }

  std::fill(ws.word.begin(), ws.word.end(), 0);
  if (ctx.generator && ctx.generator->rows() > 0) {
    ws.packed.assign(ctx.generator->words_per_row(), 0);
    for (int r = 0; r < ctx.generator->rows(); ++r)
      if (rng.uniform() < 0.5) {
        const std::uint64_t* rw = ctx.generator->row_words(r);
        for (int w = 0; w < ctx.generator->words_per_row(); ++w) ws.packed[w] ^= rw[w];
      }
    for (int c = 0; c < ctx.code->n(); ++c)
      ws.word[c] = std::uint8_t(ws.packed[c >> 6] >> (c & 63) & 1);
  }

  transmit(ctx.channel, ws.word, rng, ws.rx);
  DecodeOptions opts = ctx.opts;
  opts.transmitted = &ws.word;
  return !ws.decoder.decode(ws.rx, *schedule, opts).success;
}

// Runs trials in batch order; with a min-error target the counted prefix is
// the shortest batch prefix reaching it.  Returns (errors, trials counted).
std::pair<long long, long long> run_batches(const TrialContext& ctx, long long trials,
                                            long long min_errors, int workers) {
  const long long nbatches = (trials + kBatch - 1) / kBatch;
  std::vector<long long> batch_errors((std::size_t)nbatches, 0);
  std::vector<char> batch_done((std::size_t)nbatches, 0);
  std::atomic<long long> next{0};
  std::atomic<long long> stop_after{nbatches};  // count batches below this
  std::mutex m;
  long long frontier = 0, frontier_errors = 0;

  auto work = [&] {
    WorkerState ws(*ctx.code);
    for (;;) {
      const long long b = next.fetch_add(1);
      if (b >= nbatches || b >= stop_after.load()) break;
      const long long lo = b * kBatch, hi = std::min(trials, lo + kBatch);
      long long errs = 0;
      for (long long t = lo; t < hi; ++t) errs += run_trial(ctx, t, ws) ? 1 : 0;

      std::lock_guard<std::mutex> guard(m);
      batch_errors[(std::size_t)b] = errs;
      batch_done[(std::size_t)b] = 1;
      while (frontier < nbatches && batch_done[(std::size_t)frontier]) {
        frontier_errors += batch_errors[(std::size_t)frontier];
        ++frontier;
        if (min_errors > 0 && frontier_errors >= min_errors) {
          stop_after.store(std::min(stop_after.load(), frontier));
          break;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();

  const long long counted = stop_after.load();
  long long errors = 0;
  for (long long b = 0; b < counted; ++b) errors += batch_errors[(std::size_t)b];
  return {errors, std::min(trials, counted * kBatch)};
}

}  // namespace

std::vector<BlerRecord> run_simulation(const ExperimentConfig& cfg, int workers) {
  const Experiment ex = build_experiment(cfg);
  if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());

  std::vector<double> params = cfg.params;
  std::sort(params.begin(), params.end());  // stream indices follow sorted order

  std::vector<ResolvedSchedule> schedules;
  std::vector<Schedule> fixed;
  schedules.reserve(cfg.schedules.size());
  for (const std::string& s : cfg.schedules) schedules.push_back(resolve_schedule(s, ex));
  fixed.resize(schedules.size());
  for (std::size_t i = 0; i < schedules.size(); ++i)
    if (!schedules[i].per_trial)
      fixed[i] = cfg.layered ? expand_row_schedule(ex.code, schedules[i].rows)
                             : Schedule::make_flooding();

  BitMatrix generator;
  if (cfg.random_codewords) generator = gf2_nullspace(ex.code.full_parity_check_matrix());

  std::vector<BlerRecord> records;
  for (std::size_t ci = 0; ci < params.size(); ++ci) {
    ChannelModel channel =
        cfg.channel == ChannelModel::bec
            ? ChannelModel::make_bec(params[ci])
            : ChannelModel::make_biawgn_sigma(cfg.params_are_ebn0_db
                                                  ? ebn0_to_sigma(params[ci], ex.code.rate())
                                                  : params[ci]);
    for (std::size_t si = 0; si < schedules.size(); ++si) {
      TrialContext ctx;
      ctx.code = &ex.code;
      ctx.channel = channel;
      ctx.spec = &schedules[si];
      ctx.fixed_schedule = schedules[si].per_trial ? nullptr : &fixed[si];
      ctx.layered = cfg.layered;
      ctx.opts.max_iterations = cfg.max_iterations;
      ctx.opts.gc_mode = cfg.gc_rule;
      // on the erasure channel resolution is monotone, so stopping a solved
      // block early cannot change its outcome; AWGN runs every iteration
      ctx.opts.early_stop = cfg.channel == ChannelModel::bec;
      ctx.generator = cfg.random_codewords ? &generator : nullptr;
      ctx.seed = cfg.seed;
      ctx.channel_idx = ci;
      ctx.schedule_idx = si;

      const auto t0 = std::chrono::steady_clock::now();
      const auto [errors, run] = run_batches(ctx, cfg.trials, cfg.min_block_errors, workers);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

      BlerRecord rec;
      rec.channel_param = params[ci];
      rec.schedule = schedules[si].label;
      rec.iterations = cfg.max_iterations;
      rec.trials = run;
      rec.block_errors = errors;
      rec.bler = double(errors) / double(run);
      rec.seed = cfg.seed;
      rec.wall_seconds = dt.count();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void emit_csv(const std::vector<BlerRecord>& records, std::ostream& out) {
  std::vector<const BlerRecord*> rows;
  rows.reserve(records.size());
  for (const BlerRecord& r : records) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const BlerRecord* a, const BlerRecord* b) {
    if (a->channel_param != b->channel_param) return a->channel_param < b->channel_param;
    return a->schedule < b->schedule;
  });

  out << "channel_param,schedule,iterations,trials,block_errors,bler,seed\n";
  char buf[64];
  for (const BlerRecord* r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g", r->channel_param);
    out << buf << ",\"" << r->schedule << "\"," << r->iterations << ',' << r->trials
        << ',' << r->block_errors << ',';
    std::snprintf(buf, sizeof buf, "%.10g", r->bler);
    out << buf << ',' << r->seed << '\n';
  }
}

void emit_csv(const std::vector<BlerRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  emit_csv(records, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

Interval wilson_interval(long long errors, long long trials) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: no trials");
  if (errors < 0 || errors > trials) throw std::invalid_argument("wilson_interval: bad count");
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = double(trials), p = double(errors) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace gldpc
