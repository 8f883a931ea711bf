#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gldpc/bit_matrix.hpp"
#include "gldpc/exponent_matrix.hpp"
#include "gldpc/linear_code.hpp"

namespace gldpc {

// One lifted constraint node.  Edge e (0 <= e < degree) connects variable
// neighbors[e]; assignment[e] is the subcode coordinate carried by that edge.
struct ConstraintNode {
  int id = 0;
  int exponent_row = 0;
  int subcode = 0;                // index into GldpcCode::subcodes
  std::vector<int> neighbors;     // ascending variable index
  std::vector<int> assignment;    // edge position -> subcode coordinate
};

// Edge-position assignment policy when attaching subcodes.
struct AssignmentPolicy {
  enum Kind { sequential, random } kind = sequential;
  std::uint64_t seed = 0;
  static AssignmentPolicy make_sequential() { return {}; }
  static AssignmentPolicy make_random(std::uint64_t seed) { return {random, seed}; }
};

class GldpcCode {
 public:
  int n() const { return n_; }                   // variable nodes
  int k() const { return k_; }                   // from the GF(2) rank
  double rate() const { return double(k_) / n_; }
  int zc() const { return zc_; }
  int exponent_rows() const { return exponent_.rows(); }
  const ExponentMatrix& exponent() const { return exponent_; }

  const std::vector<ConstraintNode>& nodes() const { return nodes_; }
  const ConstraintNode& node(int id) const { return nodes_[id]; }
  int node_count() const { return int(nodes_.size()); }
  const std::vector<CodePtr>& subcodes() const { return subcodes_; }
  const LinearCode& node_code(int id) const { return *subcodes_[nodes_[id].subcode]; }
  CodePtr row_subcode(int row) const { return subcodes_[row_subcode_idx_[row]]; }

  // Sum over nodes of subcode check counts; K uses the actual rank instead.
  int nominal_checks() const { return nominal_checks_; }
  bool rank_deficient() const { return rank_deficient_; }

  // Lifted node ids of one exponent row, ascending.
  std::vector<int> row_nodes(int row) const;

  int overlap(int node_a, int node_b) const;  // shared variables of two nodes

  BitMatrix full_parity_check_matrix() const;

  friend GldpcCode lift(const ExponentMatrix&, int zc);
  friend GldpcCode generalize(const GldpcCode&, const std::vector<CodePtr>&,
                              const AssignmentPolicy&);

 private:
  int n_ = 0, k_ = 0, zc_ = 1, nominal_checks_ = 0;
  bool rank_deficient_ = false;
  ExponentMatrix exponent_;
  std::vector<ConstraintNode> nodes_;
  std::vector<CodePtr> subcodes_;          // unique subcode instances
  std::vector<int> row_subcode_idx_;       // exponent row -> subcode index
  void finalize();                         // compute rank, K
};

// Lift the exponent matrix with the given size; every node starts as a
// single-parity-check constraint over its neighbors.
GldpcCode lift(const ExponentMatrix& m, int zc);

// Attach subcodes per exponent row (one entry per row; null keeps the SPC of
// the row degree).  A row's subcode length must equal the row degree.
GldpcCode generalize(const GldpcCode& base, const std::vector<CodePtr>& row_codes,
                     const AssignmentPolicy& policy = {});

}  // namespace gldpc
