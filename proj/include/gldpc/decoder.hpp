#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "gldpc/channel.hpp"
#include "gldpc/gldpc_code.hpp"

namespace gldpc {

// Internal decoder state violated an invariant (conflicting known symbols,
// inconsistent erasure-channel constraint, ...).  Never silently patched.
struct DecodingAnomaly : std::logic_error {
  using std::logic_error::logic_error;
};

// Check-to-variable rule at generalized nodes on the AWGN channel.
enum class GcMode { exact, min };

// |tanh| clamp for the SPC rule; bounds its output near 2*atanh(1 - delta).
inline constexpr double kTanhClamp = 1.0 - 1e-12;
// Magnitude bound on generalized-node outputs (empty-class / overflow guard).
inline constexpr double kLlrBound = 500.0;

struct Schedule {
  enum Kind { flooding, layered } kind = flooding;
  std::vector<int> node_order;  // layered only: permutation of node ids

  static Schedule make_flooding() { return {}; }
  static Schedule make_layered(std::vector<int> order) {
    return {layered, std::move(order)};
  }
};

// Node-level schedule from a row-level sequence: each exponent row expands to
// its lifted checks in ascending node id.  Rows are 0-based here.
Schedule expand_row_schedule(const GldpcCode& code, const std::vector<int>& row_seq);

struct DecodeOptions {
  int max_iterations = 3;
  GcMode gc_mode = GcMode::exact;
  bool early_stop = false;  // stop once every constraint is satisfied
  // Reference word for success/error accounting; null means all-zero.
  const std::vector<std::uint8_t>* transmitted = nullptr;
};

struct DecodeResult {
  std::vector<Sym> decisions;  // erased: unresolved (BEC) or zero posterior (AWGN)
  bool success = false;
  int iterations_used = 0;
  // BEC: unresolved variables after each iteration; AWGN: decisions differing
  // from the reference word after each iteration.
  std::vector<int> per_iteration_unresolved;
};

// --- single-message kernels ---------------------------------------------

// SPC check: 2 atanh(prod tanh(L/2)) over the other coordinates' messages.
double spc_c2v_awgn(std::span<const double> other_llrs);

// Generalized check, AWGN: exact log-domain APP extrinsic or its min-form
// approximation.  incoming is indexed by subcode coordinate; incoming[i] is
// ignored (the output is extrinsic).
double gc_c2v_awgn(const LinearCode& code, std::span<const double> incoming, int i,
                   GcMode mode);

// Generalized check, BEC: the output at i is erased iff H's column i lies in
// the GF(2) span of the columns at erased incoming coordinates; otherwise the
// value is pinned by the known coordinates.  incoming[i] is ignored.
Sym gc_c2v_bec(const LinearCode& code, std::span<const Sym> incoming, int i);

// Variable-to-check combine.
double v2c_awgn(double channel_llr, std::span<const double> other_c2v);
Sym v2c_bec(Sym channel, std::span<const Sym> other_c2v);

// --- full decoder ---------------------------------------------------------

// Message-passing decoder with reusable buffers; bind once per code and call
// decode() per received word.  Layered scheduling stores one C2V per edge and
// keeps variable posteriors incrementally (V2C = posterior minus stored C2V).
class Decoder {
 public:
  explicit Decoder(const GldpcCode& code);

  DecodeResult decode(const ReceivedWord& rx, const Schedule& schedule,
                      const DecodeOptions& opts);

  const GldpcCode& code() const { return *code_; }

 private:
  void check_schedule(const Schedule& schedule) const;
  void update_node_awgn(int node, GcMode mode);
  void update_node_bec(int node);
  void iterate_awgn(const Schedule& schedule, GcMode mode);
  void iterate_bec(const Schedule& schedule);
  bool constraints_satisfied() const;

  const GldpcCode* code_;
  // CSR edge layout
  std::vector<int> first_edge_;   // node id -> first global edge (size nodes+1)
  std::vector<int> edge_var_;
  std::vector<int> edge_coord_;
  int max_degree_ = 0;

  // AWGN state
  std::vector<double> llr0_, posterior_, c2v_;
  // BEC state
  std::vector<Sym> channel_sym_, var_value_, c2v_sym_;
  std::vector<int> var_known_c2v_;
  // flooding snapshots
  std::vector<Sym> var_value_old_, c2v_sym_old_;
  std::vector<int> var_known_c2v_old_;
  bool flooding_pass_ = false;
  bool awgn_mode_ = false;

  // per-node scratch, sized to max degree / largest codeword list
  std::vector<double> msg_, out_, tanh_, neg_sum_;
  std::vector<Sym> msg_sym_;
  std::vector<Sym> out_sym_;
};

// One-shot convenience wrapper.
DecodeResult decode(const GldpcCode& code, const ReceivedWord& rx,
                    const Schedule& schedule, const DecodeOptions& opts = {});

}  // namespace gldpc
