#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gldpc/combinatorics.hpp"
#include "gldpc/exponent_matrix.hpp"
#include "gldpc/gldpc_code.hpp"
#include "gldpc/linear_code.hpp"

namespace gldpc {

// Scheduling-relevant profile of one constraint row/node class.
struct NodeProfile {
  int id = 0;          // row index (0-based internally, printed 1-based)
  int n = 0;           // subcode length
  int d_min = 0;
  long long a_min = 0;
  int degree = 0;      // row degree (= n for full rows)
  CodePtr code;        // optional: needed by exact pairwise comparisons
};

// Symmetric pairwise overlap counts keyed by (min id, max id).
class OverlapTable {
 public:
  void set(int a, int b, int n_ab);
  int get(int a, int b) const;  // missing pair -> 0

 private:
  std::map<std::pair<int, int>, int> table_;
};

NodeProfile profile_of_row(const ExponentMatrix& m, int row, const CodePtr& code);
OverlapTable overlaps_of(const ExponentMatrix& m);

// Expected number of tail coordinates of a constraint that stay unresolved
// because every minimum-weight codeword hitting them also hits the overlap:
//   f = (n - n_ab) * (A_min / C(n, d)) * (C(n-1, d-1) - C(n-n_ab-1, d-1)).
// Exact rational; zero overlap gives zero.
Rational f_metric(long long a_min, int d_min, int n, int n_ab);
Rational f_metric(const NodeProfile& p, int n_ab);

// Update-order construction: insert rows one by one and bubble each toward
// the front while it has strictly larger d_min than its left neighbour, or
// equal d_min and strictly smaller f on their shared overlap; stop at the
// first position where neither swap applies.  Larger d_min ends up earlier;
// ties are broken toward smaller f.  Returns profile ids.
std::vector<int> hds_schedule(const std::vector<NodeProfile>& profiles,
                              const OverlapTable& overlaps);

enum class Preference { a_first, b_first, indifferent };

struct PairwiseChannel {
  enum Kind { bec, biawgn } kind = bec;
};

// Leading-order preference between two overlapping constraints: the one with
// larger d_min updates first; on equal d_min the erasure channel compares
// f-metrics (larger f later) and the AWGN channel compares
// sum_{i > n_ab} (A_i - B_i) over tail coordinates (larger sum later).
Preference pairwise_preference(const NodeProfile& a, const NodeProfile& b, int n_ab,
                               PairwiseChannel channel);

enum class BaselineKind { natural, low_degree, random };

// Row-level baseline sequences: natural = ascending id; low_degree = ascending
// degree with id tie-break; random = seeded uniform permutation.
std::vector<int> baseline_schedule(BaselineKind kind,
                                   const std::vector<NodeProfile>& profiles,
                                   std::uint64_t seed = 0);

}  // namespace gldpc
