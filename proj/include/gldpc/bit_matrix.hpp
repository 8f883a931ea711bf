#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gldpc {

// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void xor_rows(int dst, int src);  // row[dst] ^= row[src]
  void swap_rows(int a, int b);

  // Column c as a bitmask over rows (bit r = entry (r, c)).  rows() <= 64.
  std::uint64_t column_mask(int c) const;
  // Row r as a bitmask over columns (bit c = entry (r, c)).  cols() <= 64.
  std::uint64_t row_mask(int r) const;

  bool operator==(const BitMatrix&) const = default;

  // Word storage for row r; words_per_row() entries of 64 columns each.
  const std::uint64_t* row_words(int r) const { return data_.data() + std::size_t(r) * wpr_; }
  std::uint64_t* row_words(int r) { return data_.data() + std::size_t(r) * wpr_; }
  int words_per_row() const { return wpr_; }

 private:
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

// GF(2) column/row vector as a bitmask with an explicit length.
struct GfVec {
  std::uint64_t bits = 0;
  int len = 0;
  bool operator==(const GfVec&) const = default;
};

// Incrementally built basis of a subspace of GF(2)^len, len <= 64.
// Kept fully reduced so reduce() returns a canonical coset representative.
class Gf2Basis {
 public:
  // Reduce v by the current basis; result is canonical given the basis.
  std::uint64_t reduce(std::uint64_t v) const;
  // Insert v's residual into the basis; returns false if v was already in span.
  bool add(std::uint64_t v);
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  int dim() const { return int(vecs_.size()); }
  void clear() { vecs_.clear(); }

 private:
  std::vector<std::uint64_t> vecs_;  // descending leading bit, mutually reduced
};

int gf2_rank(const BitMatrix& m);

// Whether target lies in the GF(2) span of the given columns.
// All vectors must share the same length; mismatch throws std::invalid_argument.
bool in_span(const std::vector<GfVec>& columns, const GfVec& target);

// Row-reduce in place to reduced row echelon form; returns the rank.
int gf2_rref(BitMatrix& m);

// Basis of the right nullspace {x : m x = 0}; each row of the result is one
// basis vector of length cols().  Deterministic: derived from the RREF with
// free columns taken in ascending order.
BitMatrix gf2_nullspace(const BitMatrix& m);

// Text format: one row per line of space-separated 0/1; lines starting with
// '#' are comments (an optional "# n=<n> k=<k>" header is tolerated).
BitMatrix parse_bit_matrix(std::istream& in);
BitMatrix load_bit_matrix(const std::string& path);
std::string format_bit_matrix(const BitMatrix& m);

}  // namespace gldpc
