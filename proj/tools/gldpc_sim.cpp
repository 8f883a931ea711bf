// Experiment driver: build a lifted code from a config, inspect its rows,
// compute update schedules, compare update orders analytically, run seeded
// block-error sweeps, or run the oracle cross-check suites.
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gldpc/analysis.hpp"
#include "gldpc/config.hpp"
#include "gldpc/oracles.hpp"
#include "gldpc/simulation.hpp"

namespace {

using namespace gldpc;

std::string rows_1based(const std::vector<int>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows[i] + 1);
  }
  return s;
}

std::string preference_name(Preference p) {
  switch (p) {
    case Preference::a_first: return "a_first";
    case Preference::b_first: return "b_first";
    default: return "indifferent";
  }
}

void print_analyze(const Experiment& ex, std::ostream& out) {
  out << "rows: " << ex.matrix.rows() << "  lifting_size: " << ex.code.zc()
      << "  n: " << ex.code.n() << "  k: " << ex.code.k()
      << "  rate: " << ex.code.rate() << '\n';
  for (const NodeProfile& p : ex.profiles) {
    out << "row " << p.id + 1 << ": subcode=" << p.code->name() << " n=" << p.n
        << " d_min=" << p.d_min << " a_min=" << p.a_min << " degree=" << p.degree
        << '\n';
  }
  out << "overlaps:\n";
  for (int i = 0; i < ex.matrix.rows(); ++i)
    for (int j = i + 1; j < ex.matrix.rows(); ++j)
      out << "rows " << i + 1 << ',' << j + 1 << ": " << ex.overlaps.get(i, j) << '\n';
}

void print_schedule(const Experiment& ex, std::ostream& out) {
  out << rows_1based(hds_schedule(ex.profiles, ex.overlaps)) << '\n';
  out << "hierarchical: " << rows_1based(hds_schedule(ex.profiles, ex.overlaps)) << '\n';
  out << "natural: "
      << rows_1based(baseline_schedule(BaselineKind::natural, ex.profiles)) << '\n';
  out << "low_degree: "
      << rows_1based(baseline_schedule(BaselineKind::low_degree, ex.profiles)) << '\n';
}

// LLR mean of the first sorted channel parameter; the analysis works on the
// incoming-message statistics, mean 2/sigma^2 and variance twice that.
AnalysisPoint point_from_config(const ExperimentConfig& cfg, const Experiment& ex) {
  double param = cfg.params.front();
  for (double p : cfg.params) param = std::min(param, p);
  if (cfg.channel == ChannelModel::bec) return bec_point(param);
  const double sigma = cfg.params_are_ebn0_db ? ebn0_to_sigma(param, ex.code.rate()) : param;
  return biawgn_point(2.0 / (sigma * sigma));
}

void print_coeffs(std::ostream& out, const char* key, const std::vector<long long>& v) {
  out << key << ": ";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '\n';
}

void print_predict(const ExperimentConfig& cfg, const Experiment& ex, std::ostream& out) {
  const AnalysisPoint point = point_from_config(cfg, ex);
  bool first = true;
  for (int i = 0; i < ex.matrix.rows(); ++i)
    for (int j = i + 1; j < ex.matrix.rows(); ++j) {
      const int n_ab = ex.overlaps.get(i, j);
      const PredictionReport r = compare_update_orders(
          *ex.code.row_subcode(i), *ex.code.row_subcode(j), n_ab, point);
      if (!first) out << '\n';
      first = false;
      out << "pair: rows " << i + 1 << ',' << j + 1 << '\n';
      out << "channel: " << (point.channel.kind == PairwiseChannel::bec ? "bec" : "biawgn")
          << '\n';
      out << "param: " << r.param << '\n';
      out << "n_ab: " << r.n_ab << '\n';
      out << "exponent_a: " << r.exponent_a << '\n';
      out << "exponent_b: " << r.exponent_b << '\n';
      print_coeffs(out, "first_coeff_a", r.first_coeff_a);
      print_coeffs(out, "second_coeff_a", r.second_coeff_a);
      print_coeffs(out, "first_coeff_b", r.first_coeff_b);
      print_coeffs(out, "second_coeff_b", r.second_coeff_b);
      out << "p_ab: " << r.p_ab << '\n';
      out << "p_ba: " << r.p_ba << '\n';
      out << "preferred: " << preference_name(r.preference) << '\n';
      out << "exact_tie: " << (r.exact_tie ? 1 : 0) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized LDPC code construction, scheduling, and simulation"};
  app.require_subcommand(1);

  std::string config_path, output;
  int workers = 0;
  std::uint64_t seed = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "print per-row constraint profiles");
  CLI::App* schedule = app.add_subcommand("schedule", "print the computed update orders");
  CLI::App* simulate = app.add_subcommand("simulate", "run the block-error sweep, emit CSV");
  CLI::App* predict = app.add_subcommand("predict", "compare pairwise update orders analytically");
  CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suites");

  for (CLI::App* sub : {analyze, schedule, simulate, predict})
    sub->add_option("config,--config", config_path, "experiment config file");
  simulate->add_option("--output", output, "CSV path (overrides the config; default stdout)");
  simulate->add_option("--workers", workers, "worker threads (default: hardware concurrency)");
  CLI::Option* seed_opt = simulate->add_option("--seed", seed, "override the run seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) {
      return verify_all(std::cout) ? 0 : 2;
    }
    if (config_path.empty())
      throw ConfigError("missing config path (positional or --config)");
    ExperimentConfig cfg = load_config(config_path);
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (!output.empty()) cfg.output = output;
    const Experiment ex = build_experiment(cfg);

    if (analyze->parsed()) {
      print_analyze(ex, std::cout);
    } else if (schedule->parsed()) {
      print_schedule(ex, std::cout);
    } else if (predict->parsed()) {
      print_predict(cfg, ex, std::cout);
    } else if (simulate->parsed()) {
      for (const std::string& s : cfg.schedules) resolve_schedule(s, ex);  // fail fast
      const std::vector<BlerRecord> records = run_simulation(cfg, workers);
      if (cfg.output.empty())
        emit_csv(records, std::cout);
      else
        emit_csv(records, cfg.output);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
