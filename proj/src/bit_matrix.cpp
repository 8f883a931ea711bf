#include "gldpc/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gldpc {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      data_(std::size_t(rows) * std::size_t((cols + 63) / 64), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
}

bool BitMatrix::get(int r, int c) const {
  return (data_[std::size_t(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(int r, int c, bool v) {
  auto& w = data_[std::size_t(r) * wpr_ + c / 64];
  if (v) w |= std::uint64_t(1) << (c % 64);
  else   w &= ~(std::uint64_t(1) << (c % 64));
}

void BitMatrix::xor_rows(int dst, int src) {
  auto* d = row_words(dst);
  const auto* s = row_words(src);
  for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  auto* pa = row_words(a);
  auto* pb = row_words(b);
  for (int w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

std::uint64_t BitMatrix::column_mask(int c) const {
  if (rows_ > 64) throw std::invalid_argument("column_mask: more than 64 rows");
  std::uint64_t m = 0;
  for (int r = 0; r < rows_; ++r)
    if (get(r, c)) m |= std::uint64_t(1) << r;
  return m;
}

std::uint64_t BitMatrix::row_mask(int r) const {
  if (cols_ > 64) throw std::invalid_argument("row_mask: more than 64 cols");
  return cols_ ? row_words(r)[0] & (cols_ == 64 ? ~std::uint64_t(0)
                                                : (std::uint64_t(1) << cols_) - 1)
               : 0;
}

std::uint64_t Gf2Basis::reduce(std::uint64_t v) const {
  for (std::uint64_t b : vecs_) {
    std::uint64_t lead = std::uint64_t(1) << (63 - std::countl_zero(b));
    if (v & lead) v ^= b;
  }
  return v;
}

bool Gf2Basis::add(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  std::uint64_t lead = std::uint64_t(1) << (63 - std::countl_zero(v));
  // keep existing vectors reduced against the newcomer too
  for (auto& b : vecs_)
    if (b & lead) b ^= v;
  auto pos = std::upper_bound(vecs_.begin(), vecs_.end(), v, std::greater<>());
  vecs_.insert(pos, v);
  return true;
}

int gf2_rank(const BitMatrix& m) {
  BitMatrix a = m;
  return gf2_rref(a);
}

int gf2_rref(BitMatrix& m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.get(r, c)) { pivot = r; break; }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<GfVec>& columns, const GfVec& target) {
  Gf2Basis basis;
  for (const auto& c : columns) {
    if (c.len != target.len) throw std::invalid_argument("in_span: length mismatch");
    basis.add(c.bits);
  }
  return basis.contains(target.bits);
}

BitMatrix gf2_nullspace(const BitMatrix& m) {
  BitMatrix r = m;
  gf2_rref(r);
  // locate pivot column of each nonzero row
  std::vector<int> pivot_of_col(m.cols(), -1);
  std::vector<int> pivot_cols;
  for (int row = 0; row < r.rows(); ++row) {
    int p = -1;
    for (int c = 0; c < r.cols(); ++c)
      if (r.get(row, c)) { p = c; break; }
    if (p < 0) break;  // zero rows sit at the bottom after rref
    pivot_of_col[p] = row;
    pivot_cols.push_back(p);
  }
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  BitMatrix basis(int(free_cols.size()), m.cols());
  for (int i = 0; i < int(free_cols.size()); ++i) {
    int c = free_cols[i];
    basis.set(i, c, true);
    for (int p : pivot_cols)
      if (r.get(pivot_of_col[p], c)) basis.set(i, p, true);
  }
  return basis;
}

BitMatrix parse_bit_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) {
      if (v != 0 && v != 1) throw std::invalid_argument("bit matrix: entries must be 0/1");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("bit matrix: no rows");
  for (const auto& row : rows)
    if (row.size() != rows[0].size())
      throw std::invalid_argument("bit matrix: ragged rows");
  BitMatrix m(int(rows.size()), int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      m.set(r, c, rows[r][c]);
  return m;
}

BitMatrix load_bit_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open bit matrix file: " + path);
  return parse_bit_matrix(f);
}

std::string format_bit_matrix(const BitMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m.get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace gldpc
