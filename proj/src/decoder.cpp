#include "gldpc/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace gldpc {

namespace {

inline double clamp_mag(double v, double bound) {
  return v > bound ? bound : (v < -bound ? -bound : v);
}

// Stack-allocated GF(2) echelon basis over <=32-bit column masks.  Vectors are
// kept in descending leading-bit order, so reduce() clears every pivot bit and
// returns the canonical coset representative.
struct SmallBasis {
  std::uint32_t vec[32];
  int count = 0;

  std::uint32_t reduce(std::uint32_t x) const {
    for (int i = 0; i < count && x; ++i) {
      std::uint32_t lead = std::uint32_t(1) << (31 - std::countl_zero(vec[i]));
      if (x & lead) x ^= vec[i];
    }
    return x;
  }

  void add(std::uint32_t x) {
    x = reduce(x);
    if (!x) return;
    int pos = count;
    while (pos > 0 && vec[pos - 1] < x) {  // descending leads; leads distinct
      vec[pos] = vec[pos - 1];
      --pos;
    }
    vec[pos] = x;
    ++count;
  }
};

// Erasure-channel extrinsic at coordinate i given column masks, the erased
// set and the syndrome of known-one coordinates (both excluding i).
inline Sym bec_extrinsic(const LinearCode& sc, std::uint32_t erased_wo_i,
                         std::uint32_t syndrome_wo_i, int i) {
  SmallBasis basis;
  std::uint32_t e = erased_wo_i;
  while (e) {
    int j = std::countr_zero(e);
    basis.add(sc.h_col(j));
    e &= e - 1;
  }
  std::uint32_t hred = basis.reduce(sc.h_col(i));
  std::uint32_t sred = basis.reduce(syndrome_wo_i);
  if (hred == 0) {
    if (sred != 0)
      throw DecodingAnomaly("erasure constraint inconsistent with known symbols");
    return Sym::erased;
  }
  if (sred == 0) return Sym::zero;
  if (sred == hred) return Sym::one;
  throw DecodingAnomaly("known symbols match no codeword of the constraint");
}

}  // namespace

double spc_c2v_awgn(std::span<const double> other_llrs) {
  double p = 1.0;
  for (double l : other_llrs) p *= std::tanh(0.5 * l);
  p = clamp_mag(p, kTanhClamp);
  return 2.0 * std::atanh(p);
}

double gc_c2v_awgn(const LinearCode& code, std::span<const double> incoming, int i,
                   GcMode mode) {
  const int n = code.n();
  if (int(incoming.size()) != n)
    throw std::invalid_argument("gc_c2v_awgn: message count differs from subcode length");
  const auto& cws = code.codewords();
  const std::uint64_t bit_i = std::uint64_t(1) << i;

  if (mode == GcMode::min) {
    double best0 = std::numeric_limits<double>::infinity();
    double best1 = best0;
    for (std::uint64_t cw : cws) {
      double s = 0.0;
      std::uint64_t m = cw & ~bit_i;  // incoming[i] is ignored
      while (m) {
        int j = std::countr_zero(m);
        s += incoming[j];
        m &= m - 1;
      }
      (cw & bit_i ? best1 : best0) = std::min(cw & bit_i ? best1 : best0, s);
    }
    if (std::isinf(best1)) return kLlrBound;   // coordinate forced to 0
    if (std::isinf(best0)) return -kLlrBound;  // coordinate forced to 1
    return clamp_mag(best1 - best0, kLlrBound);
  }

  // exact APP: ln sum_{c_i=0} exp(-S) - ln sum_{c_i=1} exp(-S),
  // S(c) = sum_{j != i} c_j * incoming[j]
  double m0 = -std::numeric_limits<double>::infinity(), m1 = m0;
  for (std::uint64_t cw : cws) {
    double s = 0.0;
    std::uint64_t m = cw & ~bit_i;
    while (m) {
      int j = std::countr_zero(m);
      s += incoming[j];
      m &= m - 1;
    }
    double v = -s;
    if (cw & bit_i) m1 = std::max(m1, v);
    else            m0 = std::max(m0, v);
  }
  if (std::isinf(m1) && m1 < 0) return kLlrBound;
  if (std::isinf(m0) && m0 < 0) return -kLlrBound;
  double sum0 = 0.0, sum1 = 0.0;
  for (std::uint64_t cw : cws) {
    double s = 0.0;
    std::uint64_t m = cw & ~bit_i;
    while (m) {
      int j = std::countr_zero(m);
      s += incoming[j];
      m &= m - 1;
    }
    if (cw & bit_i) sum1 += std::exp(-s - m1);
    else            sum0 += std::exp(-s - m0);
  }
  return clamp_mag((m0 + std::log(sum0)) - (m1 + std::log(sum1)), kLlrBound);
}

Sym gc_c2v_bec(const LinearCode& code, std::span<const Sym> incoming, int i) {
  if (int(incoming.size()) != code.n())
    throw std::invalid_argument("gc_c2v_bec: message count differs from subcode length");
  std::uint32_t erased = 0, syndrome = 0;
  for (int j = 0; j < code.n(); ++j) {
    if (j == i) continue;
    if (incoming[j] == Sym::erased) erased |= std::uint32_t(1) << j;
    else if (incoming[j] == Sym::one) syndrome ^= code.h_col(j);
  }
  return bec_extrinsic(code, erased, syndrome, i);
}

double v2c_awgn(double channel_llr, std::span<const double> other_c2v) {
  double s = channel_llr;
  for (double v : other_c2v) s += v;
  return s;
}

Sym v2c_bec(Sym channel, std::span<const Sym> other_c2v) {
  Sym value = channel;
  for (Sym s : other_c2v) {
    if (s == Sym::erased) continue;
    if (value == Sym::erased) value = s;
    else if (value != s)
      throw DecodingAnomaly("conflicting known symbols at a variable");
  }
  return value;
}

Schedule expand_row_schedule(const GldpcCode& code, const std::vector<int>& row_seq) {
  Schedule s;
  s.kind = Schedule::layered;
  s.node_order.reserve(code.node_count());
  std::vector<char> seen(code.exponent_rows(), 0);
  if (int(row_seq.size()) != code.exponent_rows())
    throw std::invalid_argument("row schedule must list every exponent row once");
  for (int r : row_seq) {
    if (r < 0 || r >= code.exponent_rows() || seen[r])
      throw std::invalid_argument("row schedule is not a permutation of the rows");
    seen[r] = 1;
    for (int id : code.row_nodes(r)) s.node_order.push_back(id);
  }
  return s;
}

Decoder::Decoder(const GldpcCode& code) : code_(&code) {
  first_edge_.assign(code.node_count() + 1, 0);
  for (int id = 0; id < code.node_count(); ++id)
    first_edge_[id + 1] = first_edge_[id] + int(code.node(id).neighbors.size());
  edge_var_.resize(first_edge_.back());
  edge_coord_.resize(first_edge_.back());
  std::size_t max_cws = 2;
  for (int id = 0; id < code.node_count(); ++id) {
    const auto& node = code.node(id);
    max_degree_ = std::max(max_degree_, int(node.neighbors.size()));
    for (std::size_t e = 0; e < node.neighbors.size(); ++e) {
      edge_var_[first_edge_[id] + e] = node.neighbors[e];
      edge_coord_[first_edge_[id] + e] = node.assignment[e];
    }
  }
  for (const auto& sc : code.subcodes())
    max_cws = std::max(max_cws, sc->codewords().size());
  msg_.resize(max_degree_);
  out_.resize(max_degree_);
  tanh_.resize(max_degree_ + 1);
  neg_sum_.resize(max_cws);
  msg_sym_.resize(max_degree_);
  out_sym_.resize(max_degree_);
}

void Decoder::check_schedule(const Schedule& schedule) const {
  if (schedule.kind == Schedule::flooding) return;
  if (int(schedule.node_order.size()) != code_->node_count())
    throw std::invalid_argument("layered schedule must list every constraint node once");
  std::vector<char> seen(code_->node_count(), 0);
  for (int id : schedule.node_order) {
    if (id < 0 || id >= code_->node_count() || seen[id])
      throw std::invalid_argument("layered schedule is not a permutation of node ids");
    seen[id] = 1;
  }
}

void Decoder::update_node_awgn(int id, GcMode mode) {
  const LinearCode& sc = code_->node_code(id);
  const int first = first_edge_[id];
  const int deg = first_edge_[id + 1] - first;

  for (int e = 0; e < deg; ++e)
    msg_[edge_coord_[first + e]] = posterior_[edge_var_[first + e]] - c2v_[first + e];

  if (sc.r() == 1) {
    // SPC: prefix/suffix products of tanh(L/2), one atanh per edge
    double pref = 1.0;
    for (int j = 0; j < deg; ++j) {
      out_[j] = pref;
      pref *= (tanh_[j] = std::tanh(0.5 * msg_[j]));
    }
    double suff = 1.0;
    for (int j = deg - 1; j >= 0; --j) {
      out_[j] = 2.0 * std::atanh(clamp_mag(out_[j] * suff, kTanhClamp));
      suff *= tanh_[j];
    }
  } else {
    const auto& cws = sc.codewords();
    const int ncw = int(cws.size());
    for (int ci = 0; ci < ncw; ++ci) {
      double s = 0.0;
      std::uint64_t m = cws[ci];
      while (m) {
        int j = std::countr_zero(m);
        s += msg_[j];
        m &= m - 1;
      }
      neg_sum_[ci] = -s;
    }
    const int n = sc.n();
    if (mode == GcMode::min) {
      // out_i = min_{c_i=1} S - L_i - min_{c_i=0} S; track both mins per coord
      double* min0 = out_.data();
      double* min1 = tanh_.data();
      const double inf = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) { min0[j] = inf; min1[j] = inf; }
      for (int ci = 0; ci < ncw; ++ci) {
        double s = -neg_sum_[ci];
        std::uint64_t cw = cws[ci];
        for (int j = 0; j < n; ++j) {
          if ((cw >> j) & 1) min1[j] = std::min(min1[j], s);
          else               min0[j] = std::min(min0[j], s);
        }
      }
      for (int j = 0; j < n; ++j) {
        double v;
        if (std::isinf(min1[j]))      v = kLlrBound;
        else if (std::isinf(min0[j])) v = -kLlrBound;
        else v = clamp_mag((min1[j] - msg_[j]) - min0[j], kLlrBound);
        out_[j] = v;  // overwrites min0[j]; index j already consumed
      }
    } else {
      double mx = neg_sum_[0];
      for (int ci = 1; ci < ncw; ++ci) mx = std::max(mx, neg_sum_[ci]);
      double* sum0 = out_.data();
      double* sum1 = tanh_.data();
      for (int j = 0; j < n; ++j) { sum0[j] = 0.0; sum1[j] = 0.0; }
      for (int ci = 0; ci < ncw; ++ci) {
        double w = std::exp(neg_sum_[ci] - mx);
        std::uint64_t cw = cws[ci];
        for (int j = 0; j < n; ++j) {
          if ((cw >> j) & 1) sum1[j] += w;
          else               sum0[j] += w;
        }
      }
      for (int j = 0; j < n; ++j) {
        double v;
        if (sum1[j] == 0.0)      v = kLlrBound;
        else if (sum0[j] == 0.0) v = -kLlrBound;
        else v = clamp_mag(std::log(sum0[j]) - std::log(sum1[j]) - msg_[j], kLlrBound);
        out_[j] = v;
      }
    }
  }

  if (flooding_pass_) {
    for (int e = 0; e < deg; ++e) c2v_[first + e] = out_[edge_coord_[first + e]];
  } else {
    for (int e = 0; e < deg; ++e) {
      double nv = out_[edge_coord_[first + e]];
      posterior_[edge_var_[first + e]] += nv - c2v_[first + e];
      c2v_[first + e] = nv;
    }
  }
}

void Decoder::update_node_bec(int id) {
  const LinearCode& sc = code_->node_code(id);
  const int first = first_edge_[id];
  const int deg = first_edge_[id + 1] - first;
  const Sym* cv = flooding_pass_ ? c2v_sym_old_.data() : c2v_sym_.data();
  const Sym* vv = flooding_pass_ ? var_value_old_.data() : var_value_.data();
  const int* kc = flooding_pass_ ? var_known_c2v_old_.data() : var_known_c2v_.data();

  std::uint32_t erased_all = 0, syndrome_all = 0;
  for (int e = 0; e < deg; ++e) {
    const int g = first + e;
    const int v = edge_var_[g];
    const int coord = edge_coord_[g];
    Sym m;
    if (channel_sym_[v] != Sym::erased) {
      m = channel_sym_[v];
    } else {
      int others = kc[v] - (cv[g] != Sym::erased ? 1 : 0);
      m = others > 0 ? vv[v] : Sym::erased;
    }
    msg_sym_[coord] = m;
    if (m == Sym::erased) erased_all |= std::uint32_t(1) << coord;
    else if (m == Sym::one) syndrome_all ^= sc.h_col(coord);
  }

  // span test per coordinate; reuse the all-erased basis when i is known
  SmallBasis basis_all;
  {
    std::uint32_t e = erased_all;
    while (e) {
      int j = std::countr_zero(e);
      basis_all.add(sc.h_col(j));
      e &= e - 1;
    }
  }
  for (int i = 0; i < sc.n(); ++i) {
    const std::uint32_t bit = std::uint32_t(1) << i;
    std::uint32_t syn = syndrome_all;
    if (msg_sym_[i] == Sym::one) syn ^= sc.h_col(i);
    if (erased_all & bit) {
      out_sym_[i] = bec_extrinsic(sc, erased_all & ~bit, syn, i);
    } else {
      std::uint32_t hred = basis_all.reduce(sc.h_col(i));
      std::uint32_t sred = basis_all.reduce(syn);
      if (hred == 0) {
        if (sred != 0)
          throw DecodingAnomaly("erasure constraint inconsistent with known symbols");
        out_sym_[i] = Sym::erased;
      } else if (sred == 0) {
        out_sym_[i] = Sym::zero;
      } else if (sred == hred) {
        out_sym_[i] = Sym::one;
      } else {
        throw DecodingAnomaly("known symbols match no codeword of the constraint");
      }
    }
  }

  for (int e = 0; e < deg; ++e) {
    const int g = first + e;
    const Sym nv = out_sym_[edge_coord_[g]];
    const Sym old = c2v_sym_[g];
    if (old != Sym::erased) {
      if (nv != old)
        throw DecodingAnomaly("resolved C2V message changed value or degraded");
      continue;
    }
    if (nv == Sym::erased) continue;
    c2v_sym_[g] = nv;
    const int v = edge_var_[g];
    ++var_known_c2v_[v];
    if (var_value_[v] == Sym::erased) var_value_[v] = nv;
    else if (var_value_[v] != nv)
      throw DecodingAnomaly("conflicting known symbols at a variable");
  }
}

void Decoder::iterate_awgn(const Schedule& schedule, GcMode mode) {
  if (schedule.kind == Schedule::flooding) {
    flooding_pass_ = true;
    for (int id = 0; id < code_->node_count(); ++id) update_node_awgn(id, mode);
    flooding_pass_ = false;
    posterior_ = llr0_;
    for (std::size_t g = 0; g < c2v_.size(); ++g) posterior_[edge_var_[g]] += c2v_[g];
  } else {
    for (int id : schedule.node_order) update_node_awgn(id, mode);
  }
}

void Decoder::iterate_bec(const Schedule& schedule) {
  if (schedule.kind == Schedule::flooding) {
    c2v_sym_old_ = c2v_sym_;
    var_value_old_ = var_value_;
    var_known_c2v_old_ = var_known_c2v_;
    flooding_pass_ = true;
    for (int id = 0; id < code_->node_count(); ++id) update_node_bec(id);
    flooding_pass_ = false;
  } else {
    for (int id : schedule.node_order) update_node_bec(id);
  }
}

bool Decoder::constraints_satisfied() const {
  for (int id = 0; id < code_->node_count(); ++id) {
    const auto& node = code_->node(id);
    const LinearCode& sc = code_->node_code(id);
    std::uint64_t word = 0;
    for (std::size_t e = 0; e < node.neighbors.size(); ++e) {
      const int v = node.neighbors[e];
      bool bit;
      if (awgn_mode_) {
        bit = posterior_[v] <= 0.0;
      } else {
        if (var_value_[v] == Sym::erased) return false;
        bit = var_value_[v] == Sym::one;
      }
      if (bit) word |= std::uint64_t(1) << node.assignment[e];
    }
    if (!sc.is_codeword(word)) return false;
  }
  return true;
}

DecodeResult Decoder::decode(const ReceivedWord& rx, const Schedule& schedule,
                             const DecodeOptions& opts) {
  check_schedule(schedule);
  const int n = code_->n();
  const bool awgn = rx.kind == ChannelModel::biawgn;
  if (awgn ? int(rx.llr.size()) != n : int(rx.symbols.size()) != n)
    throw std::invalid_argument("received word length differs from code length");
  if (opts.transmitted && int(opts.transmitted->size()) != n)
    throw std::invalid_argument("reference word length differs from code length");
  if (opts.max_iterations < 0)
    throw std::invalid_argument("max_iterations must be >= 0");

  auto tx_bit = [&](int v) -> std::uint8_t {
    return opts.transmitted ? (*opts.transmitted)[v] : 0;
  };

  awgn_mode_ = awgn;
  if (awgn) {
    llr0_ = rx.llr;
    posterior_ = llr0_;
    c2v_.assign(edge_var_.size(), 0.0);
    channel_sym_.clear();
  } else {
    channel_sym_ = rx.symbols;
    var_value_ = channel_sym_;
    var_known_c2v_.assign(n, 0);
    c2v_sym_.assign(edge_var_.size(), Sym::erased);
    llr0_.clear();
  }

  DecodeResult res;
  res.per_iteration_unresolved.reserve(opts.max_iterations);
  int prev_resolved = -1;

  for (int it = 0; it < opts.max_iterations; ++it) {
    if (awgn) iterate_awgn(schedule, opts.gc_mode);
    else      iterate_bec(schedule);
    ++res.iterations_used;

    int bad = 0, resolved = 0;
    if (awgn) {
      for (int v = 0; v < n; ++v) {
        const double p = posterior_[v];
        const bool wrong = p == 0.0 || (p < 0.0) != (tx_bit(v) != 0);
        bad += wrong;
      }
    } else {
      for (int v = 0; v < n; ++v) {
        if (var_value_[v] == Sym::erased) { ++bad; continue; }
        ++resolved;
        if (var_value_[v] != sym_from_bit(tx_bit(v)))
          throw DecodingAnomaly("erasure decoding resolved a variable incorrectly");
      }
      if (resolved < prev_resolved)
        throw DecodingAnomaly("resolved variable set shrank between iterations");
      prev_resolved = resolved;
    }
    res.per_iteration_unresolved.push_back(bad);
    if (opts.early_stop && bad == 0 && constraints_satisfied()) break;
  }

  res.decisions.resize(n);
  bool ok = true;
  for (int v = 0; v < n; ++v) {
    Sym d;
    if (awgn) {
      const double p = posterior_[v];
      d = p > 0.0 ? Sym::zero : (p < 0.0 ? Sym::one : Sym::erased);
    } else {
      d = var_value_[v];
    }
    res.decisions[v] = d;
    if (d == Sym::erased || d != sym_from_bit(tx_bit(v))) ok = false;
  }
  res.success = ok;
  return res;
}

DecodeResult decode(const GldpcCode& code, const ReceivedWord& rx,
                    const Schedule& schedule, const DecodeOptions& opts) {
  Decoder dec(code);
  return dec.decode(rx, schedule, opts);
}

}  // namespace gldpc
