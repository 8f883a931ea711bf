#pragma once

#include <string>
#include <vector>

namespace gldpc {

// Quasi-cyclic exponent matrix: entry -1 marks a ZC x ZC zero block, an entry
// s in [0, ZC) a circulant shift by s.  The lifting size is supplied at lift
// time, so the same matrix can be lifted with several ZC values.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  explicit ExponentMatrix(std::vector<std::vector<int>> entries);

  int rows() const { return int(entries_.size()); }
  int cols() const { return entries_.empty() ? 0 : int(entries_[0].size()); }
  int at(int r, int c) const { return entries_[r][c]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  // Nonnegative entries of a row, i.e. the block-column support.
  std::vector<int> row_support(int r) const;
  int row_degree(int r) const { return int(row_support(r).size()); }

  // Entries must lie in [-1, zc).  strict additionally requires every row to
  // carry at least two nonnegative entries (experiment configurations).
  void validate(int zc, bool strict = false) const;

 private:
  std::vector<std::vector<int>> entries_;
};

// Shared block-column count of two rows (block columns where both rows have a
// nonnegative entry).  With aligned circulants this is also the per-check
// variable overlap of the lifted nodes.
int row_overlap(const ExponentMatrix& m, int i, int j);

// Text format: one row per line, whitespace-separated integers, -1 for a zero
// block; '#' starts a comment.
ExponentMatrix parse_exponent_matrix(const std::string& text);
ExponentMatrix load_exponent_matrix(const std::string& path);

}  // namespace gldpc
