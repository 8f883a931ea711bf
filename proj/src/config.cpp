#include "gldpc/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace gldpc {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

long long to_int(const std::string& where, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  bad(where, "expected an integer, got '" + v + "'");
}

std::uint64_t to_u64(const std::string& where, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used == v.size() && v[0] != '-') return x;
  } catch (const std::exception&) {
  }
  bad(where, "expected an unsigned integer, got '" + v + "'");
}

double to_double(const std::string& where, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  bad(where, "expected a number, got '" + v + "'");
}

std::vector<double> to_doubles(const std::string& where, std::string v) {
  std::replace(v.begin(), v.end(), ',', ' ');
  std::istringstream iss(v);
  std::vector<double> out;
  std::string tok;
  while (iss >> tok) out.push_back(to_double(where, tok));
  if (out.empty()) bad(where, "expected at least one number");
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool have_lifting = false, have_type = false, have_trials = false;
  std::vector<std::string> seen;
  std::string line, section;
  int lineno = 0;
  auto here = [&] { return "line " + std::to_string(lineno); };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') bad(here(), "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "code" && section != "channel" && section != "decoder" &&
          section != "run")
        bad(here(), "unknown section '" + section + "'");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) bad(here(), "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) bad(here(), "key before any [section]");
    if (key.empty()) bad(here(), "missing key");
    if (value.empty()) bad(section + "." + key, "empty value");

    const std::string id = section + "." + key;
    if (id != "decoder.schedule") {
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) bad(id, "duplicate key");
      seen.push_back(id);
    }

    if (id == "code.exponent_matrix") {
      cfg.exponent_matrix = value;
    } else if (id == "code.exponent_matrix_inline") {
      cfg.exponent_matrix_inline = value;
    } else if (id == "code.lifting_size") {
      cfg.lifting_size = (int)to_int(id, value);
      if (cfg.lifting_size < 1) bad(id, "must be >= 1");
      have_lifting = true;
    } else if (id == "code.assignment") {
      if (value == "sequential")
        cfg.assignment = AssignmentPolicy::make_sequential();
      else if (value.rfind("random:", 0) == 0)
        cfg.assignment = AssignmentPolicy::make_random(to_u64(id, value.substr(7)));
      else
        bad(id, "expected sequential or random:<seed>");
    } else if (section == "code" && key.rfind("subcode.", 0) == 0) {
      const long long row = to_int(id, key.substr(8));
      if (row < 1) bad(id, "row indices are 1-based");
      cfg.row_subcodes[(int)row - 1] = value;
    } else if (id == "channel.type") {
      if (value == "bec")
        cfg.channel = ChannelModel::bec;
      else if (value == "biawgn")
        cfg.channel = ChannelModel::biawgn;
      else
        bad(id, "expected bec or biawgn");
      have_type = true;
    } else if (id == "channel.params") {
      cfg.params = to_doubles(id, value);
    } else if (id == "channel.param_unit") {
      if (value == "raw")
        cfg.params_are_ebn0_db = false;
      else if (value == "ebn0_db")
        cfg.params_are_ebn0_db = true;
      else
        bad(id, "expected raw or ebn0_db");
    } else if (id == "decoder.mode") {
      if (value == "layered")
        cfg.layered = true;
      else if (value == "flooding")
        cfg.layered = false;
      else
        bad(id, "expected flooding or layered");
    } else if (id == "decoder.schedule") {
      cfg.schedules.push_back(value);
    } else if (id == "decoder.max_iterations") {
      cfg.max_iterations = (int)to_int(id, value);
      if (cfg.max_iterations < 1) bad(id, "must be >= 1");
    } else if (id == "decoder.gc_rule") {
      if (value == "exact")
        cfg.gc_rule = GcMode::exact;
      else if (value == "min")
        cfg.gc_rule = GcMode::min;
      else
        bad(id, "expected exact or min");
    } else if (id == "run.trials") {
      cfg.trials = to_int(id, value);
      if (cfg.trials < 1) bad(id, "must be >= 1");
      have_trials = true;
    } else if (id == "run.seed") {
      cfg.seed = to_u64(id, value);
    } else if (id == "run.min_block_errors") {
      cfg.min_block_errors = to_int(id, value);
      if (cfg.min_block_errors < 0) bad(id, "must be >= 0");
    } else if (id == "run.output") {
      cfg.output = value;
    } else if (id == "run.transmit") {
      if (value == "zero")
        cfg.random_codewords = false;
      else if (value == "random")
        cfg.random_codewords = true;
      else
        bad(id, "expected zero or random");
    } else {
      bad(id, "unknown key");
    }
  }

  if (cfg.exponent_matrix.empty() == cfg.exponent_matrix_inline.empty())
    bad("code.exponent_matrix",
        cfg.exponent_matrix.empty() ? "required (or code.exponent_matrix_inline)"
                                    : "give either the path or the inline form, not both");
  if (!have_lifting) bad("code.lifting_size", "required");
  if (!have_type) bad("channel.type", "required");
  if (cfg.params.empty()) bad("channel.params", "required");
  if (!have_trials) bad("run.trials", "required");
  if (cfg.params_are_ebn0_db && cfg.channel == ChannelModel::bec)
    bad("channel.param_unit", "ebn0_db applies to biawgn only");
  for (double p : cfg.params) {
    if (cfg.channel == ChannelModel::bec && !(p >= 0.0 && p <= 1.0))
      bad("channel.params", "erasure probability outside [0, 1]");
    if (cfg.channel == ChannelModel::biawgn && !cfg.params_are_ebn0_db && !(p > 0.0))
      bad("channel.params", "noise sigma must be positive");
  }
  if (cfg.schedules.empty()) cfg.schedules.push_back("natural");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  auto cfg = parse_config(in);
  // a relative matrix path means "next to the config file", not "under the cwd"
  if (!cfg.exponent_matrix.empty()) {
    std::filesystem::path mat(cfg.exponent_matrix);
    if (mat.is_relative())
      cfg.exponent_matrix = (std::filesystem::path(path).parent_path() / mat).string();
  }
  return cfg;
}

Experiment build_experiment(const ExperimentConfig& cfg) {
  Experiment ex;
  try {
    if (!cfg.exponent_matrix.empty()) {
      ex.matrix = load_exponent_matrix(cfg.exponent_matrix);
    } else {
      std::string text = cfg.exponent_matrix_inline;
      std::replace(text.begin(), text.end(), ';', '\n');
      ex.matrix = parse_exponent_matrix(text);
    }
    ex.matrix.validate(cfg.lifting_size, /*strict=*/true);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("code.exponent_matrix: ") + e.what());
  }

  for (const auto& [row, name] : cfg.row_subcodes)
    if (row < 0 || row >= ex.matrix.rows())
      bad("code.subcode." + std::to_string(row + 1), "row out of range");

  try {
    std::vector<CodePtr> row_codes(ex.matrix.rows());
    for (const auto& [row, name] : cfg.row_subcodes)
      row_codes[row] = make_code_by_name(name, ex.matrix.row_degree(row));
    ex.code = generalize(lift(ex.matrix, cfg.lifting_size), row_codes, cfg.assignment);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("code: ") + e.what());
  }

  for (int r = 0; r < ex.matrix.rows(); ++r)
    ex.profiles.push_back(profile_of_row(ex.matrix, r, ex.code.row_subcode(r)));
  ex.overlaps = overlaps_of(ex.matrix);
  return ex;
}

ResolvedSchedule resolve_schedule(const std::string& spec, const Experiment& ex) {
  ResolvedSchedule rs;
  rs.label = trim(spec);
  const std::string& s = rs.label;
  if (s.empty()) throw ConfigError("decoder.schedule: empty spec");
  if (s == "per_trial_random") {
    rs.per_trial = true;
    return rs;
  }
  if (s == "natural") {
    rs.rows = baseline_schedule(BaselineKind::natural, ex.profiles);
    return rs;
  }
  if (s == "low_degree") {
    rs.rows = baseline_schedule(BaselineKind::low_degree, ex.profiles);
    return rs;
  }
  if (s == "hds") {
    rs.rows = hds_schedule(ex.profiles, ex.overlaps);
    return rs;
  }
  if (s.rfind("random:", 0) == 0) {
    rs.rows = baseline_schedule(BaselineKind::random, ex.profiles,
                                to_u64("decoder.schedule", s.substr(7)));
    return rs;
  }
  if (s == "random")
    throw ConfigError("decoder.schedule: 'random' needs a seed, use random:<seed>");

  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream iss(t);
  long long v = 0;
  while (iss >> v) rs.rows.push_back((int)v - 1);
  if (!iss.eof()) throw ConfigError("decoder.schedule: unrecognized spec '" + s + "'");

  const int rows = ex.matrix.rows();
  std::vector<char> used(rows, 0);
  if ((int)rs.rows.size() != rows)
    throw ConfigError("decoder.schedule: '" + s + "' must list every row exactly once");
  for (int x : rs.rows) {
    if (x < 0 || x >= rows || used[x])
      throw ConfigError("decoder.schedule: '" + s + "' is not a permutation of 1.." +
                        std::to_string(rows));
    used[x] = 1;
  }
  return rs;
}

}  // namespace gldpc
