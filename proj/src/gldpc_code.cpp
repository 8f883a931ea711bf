#include "gldpc/gldpc_code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gldpc/rng.hpp"

namespace gldpc {

std::vector<int> GldpcCode::row_nodes(int row) const {
  std::vector<int> ids;
  for (const auto& node : nodes_)
    if (node.exponent_row == row) ids.push_back(node.id);
  return ids;
}

int GldpcCode::overlap(int node_a, int node_b) const {
  const auto& a = nodes_[node_a].neighbors;
  const auto& b = nodes_[node_b].neighbors;
  int count = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

BitMatrix GldpcCode::full_parity_check_matrix() const {
  BitMatrix H(nominal_checks_, n_);
  int row = 0;
  for (const auto& node : nodes_) {
    const LinearCode& sc = *subcodes_[node.subcode];
    for (int rho = 0; rho < sc.r(); ++rho) {
      for (std::size_t e = 0; e < node.neighbors.size(); ++e)
        if (sc.H().get(rho, node.assignment[e]))
          H.set(row, node.neighbors[e], true);
      ++row;
    }
  }
  return H;
}

void GldpcCode::finalize() {
  nominal_checks_ = 0;
  for (const auto& node : nodes_) nominal_checks_ += subcodes_[node.subcode]->r();
  int rank = gf2_rank(full_parity_check_matrix());
  k_ = n_ - rank;
  rank_deficient_ = rank != nominal_checks_;
}

GldpcCode lift(const ExponentMatrix& m, int zc) {
  m.validate(zc);
  GldpcCode code;
  code.exponent_ = m;
  code.zc_ = zc;
  code.n_ = m.cols() * zc;
  code.row_subcode_idx_.assign(m.rows(), -1);
  for (int r = 0; r < m.rows(); ++r) {
    int degree = m.row_degree(r);
    if (degree < 1)
      throw std::invalid_argument("exponent matrix row " + std::to_string(r + 1) +
                                  " is empty");
    // one SPC instance per distinct degree
    int sc_idx = -1;
    for (int s = 0; s < int(code.subcodes_.size()); ++s)
      if (code.subcodes_[s]->name() == "spc(" + std::to_string(degree) + ")") sc_idx = s;
    if (sc_idx < 0) {
      code.subcodes_.push_back(make_spc(degree));
      sc_idx = int(code.subcodes_.size()) - 1;
    }
    code.row_subcode_idx_[r] = sc_idx;
    for (int t = 0; t < zc; ++t) {
      ConstraintNode node;
      node.id = int(code.nodes_.size());
      node.exponent_row = r;
      node.subcode = sc_idx;
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(r, c) >= 0)
          node.neighbors.push_back(c * zc + (m.at(r, c) + t) % zc);
      node.assignment.resize(node.neighbors.size());
      std::iota(node.assignment.begin(), node.assignment.end(), 0);
      code.nodes_.push_back(std::move(node));
    }
  }
  code.finalize();
  return code;
}

GldpcCode generalize(const GldpcCode& base, const std::vector<CodePtr>& row_codes,
                     const AssignmentPolicy& policy) {
  if (int(row_codes.size()) != base.exponent_rows())
    throw std::invalid_argument("generalize: need one subcode entry per exponent row");
  GldpcCode code = base;
  for (int r = 0; r < base.exponent_rows(); ++r) {
    if (!row_codes[r]) continue;  // keep the SPC from lifting
    int degree = base.exponent().row_degree(r);
    if (row_codes[r]->n() != degree)
      throw std::invalid_argument(
          "generalize: row " + std::to_string(r + 1) + " has degree " +
          std::to_string(degree) + " but subcode " + row_codes[r]->name() +
          " has length " + std::to_string(row_codes[r]->n()));
    code.subcodes_.push_back(row_codes[r]);
    int sc_idx = int(code.subcodes_.size()) - 1;
    code.row_subcode_idx_[r] = sc_idx;
    for (auto& node : code.nodes_) {
      if (node.exponent_row != r) continue;
      node.subcode = sc_idx;
      if (policy.kind == AssignmentPolicy::random) {
        // per-node permutation drawn from the policy seed and the node id
        Rng rng(derive_seed(policy.seed, 0x67656e65ULL, node.id, 0));
        rng.shuffle(node.assignment);
      }
    }
  }
  code.finalize();
  return code;
}

}  // namespace gldpc
