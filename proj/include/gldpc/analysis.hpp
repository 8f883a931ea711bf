#pragma once

#include <vector>

#include "gldpc/combinatorics.hpp"
#include "gldpc/linear_code.hpp"
#include "gldpc/scheduler.hpp"

namespace gldpc {

// Gaussian upper-tail probability.
double q_func(double x);

// Minimum-weight codeword counts through one coordinate.  The overlap with a
// previously updated neighbour occupies the first n_ab coordinates; the rest
// is the tail.
struct MinWeightCounts {
  long long through = 0;        // weight-d_min codewords with coordinate i set
  long long tail_confined = 0;  // those whose support avoids the overlap (except i itself)
};

MinWeightCounts min_weight_counts(const LinearCode& code, int i, int n_ab);

// sum over tail coordinates i >= n_ab of (through - tail_confined); feeds the
// equal-d_min update-order comparison.
long long tail_count_difference(const LinearCode& code, int n_ab);

enum class CoeffForm { exact, ensemble };

// Leading coefficient of the first-iteration message error toward coordinate
// i, as a multiple of eps^(d_min - 1).  exact = per-position codeword count;
// ensemble = (A_min / C(n,d)) * C(n-1, d-1), position-independent.
Rational first_update_coeff(const LinearCode& code, int i, CoeffForm form);

// Same quantity for a constraint updated after a neighbour sharing the first
// n_ab coordinates: only codewords confined to tail-union-{j} keep leading
// order.  ensemble = (A_min / C(n,d)) * C(n - n_ab, d-1) inside the overlap,
// * C(n - n_ab - 1, d-1) outside.
Rational second_update_coeff(const LinearCode& code, int j, int n_ab, CoeffForm form);

struct LeadingTerm {
  long long coefficient = 0;  // minimum-weight codewords through the coordinate
  double argument = 0.0;      // sqrt(d_min * u / 2)
  double value() const;       // coefficient * q_func(argument)
};

// Leading term of P(message toward coordinate i is wrong) when the incoming
// messages are iid gaussian with mean u and variance 2u.
LeadingTerm awgn_message_error(const LinearCode& code, int i, double u);

// Exact first-iteration erasure probability of the message toward coordinate
// i under independent per-coordinate erasures eps (eps[i] itself is unused):
// sums over all 2^(n-1) patterns, testing each for a covering codeword.
double exact_first_iter_erasure(const LinearCode& code, int i,
                                const std::vector<double>& eps);

struct AnalysisPoint {
  PairwiseChannel channel;
  double param = 0.0;  // erasure probability, or incoming-LLR mean u
};

inline AnalysisPoint bec_point(double eps) {
  return {PairwiseChannel{PairwiseChannel::bec}, eps};
}
inline AnalysisPoint biawgn_point(double u) {
  return {PairwiseChannel{PairwiseChannel::biawgn}, u};
}

// Leading-order total error over the variables of two overlapping constraints
// for both update orders.  Tail coefficient vectors are indexed from the
// first tail coordinate (n_ab).
struct PredictionReport {
  PairwiseChannel channel;
  double param = 0.0;
  int n_ab = 0;
  int exponent_a = 0;  // d_min of the first code
  int exponent_b = 0;
  std::vector<long long> first_coeff_a;   // per tail coordinate of a, a updated first
  std::vector<long long> second_coeff_a;  // per tail coordinate of a, a updated second
  std::vector<long long> first_coeff_b;
  std::vector<long long> second_coeff_b;
  double p_ab = 0.0;  // total leading error, updating a then b
  double p_ba = 0.0;
  Preference preference = Preference::indifferent;
  bool exact_tie = false;  // leading terms identical at the integer level
};

PredictionReport compare_update_orders(const LinearCode& a, const LinearCode& b,
                                       int n_ab, const AnalysisPoint& point);

}  // namespace gldpc
