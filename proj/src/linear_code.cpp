#include "gldpc/linear_code.hpp"

#include <algorithm>
#include <bit>

namespace gldpc {

LinearCode::LinearCode(BitMatrix H, std::string name, bool allow_zero_columns)
    : n_(H.cols()), name_(std::move(name)) {
  if (H.rows() == 0 || H.cols() == 0)
    throw std::invalid_argument("LinearCode: empty parity-check matrix");
  if (H.cols() > 63)
    throw CapacityError("LinearCode: block length above 63 not supported");
  if (H.rows() > 64)
    throw CapacityError("LinearCode: more than 64 parity-check rows not supported");
  if (!allow_zero_columns)
    for (int c = 0; c < H.cols(); ++c)
      if (H.column_mask(c) == 0)
        throw std::invalid_argument("LinearCode: zero column " + std::to_string(c) +
                                    " in parity-check matrix");

  int rank = gf2_rank(H);
  if (rank == H.rows()) {
    H_ = std::move(H);
  } else {
    // normalize: keep an independent row set via RREF, drop zero rows
    BitMatrix r = H;
    gf2_rref(r);
    H_ = BitMatrix(rank, H.cols());
    for (int row = 0; row < rank; ++row)
      for (int c = 0; c < H.cols(); ++c)
        H_.set(row, c, r.get(row, c));
  }
  k_ = n_ - rank;
  if (k_ > kEnumerationCapK)
    throw CapacityError("LinearCode: dimension " + std::to_string(k_) +
                        " exceeds enumeration cap " + std::to_string(kEnumerationCapK));
  if (H_.rows() > 32)
    throw CapacityError("LinearCode: more than 32 parity checks not supported");

  h_cols_.resize(n_);
  for (int c = 0; c < n_; ++c) h_cols_[c] = std::uint32_t(H_.column_mask(c));

  BitMatrix basis = gf2_nullspace(H_);
  codewords_.reserve(std::size_t(1) << k_);
  for (std::uint64_t msg = 0; msg < (std::uint64_t(1) << k_); ++msg) {
    std::uint64_t cw = 0;
    for (int b = 0; b < k_; ++b)
      if ((msg >> b) & 1) cw ^= basis.row_mask(b);
    codewords_.push_back(cw);
  }
  std::sort(codewords_.begin(), codewords_.end());

  spectrum_.assign(n_ + 1, 0);
  for (std::uint64_t cw : codewords_) ++spectrum_[std::popcount(cw)];
  for (int w = 1; w <= n_; ++w)
    if (spectrum_[w]) { d_min_ = w; a_min_ = spectrum_[w]; break; }
}

bool LinearCode::is_codeword(std::uint64_t word) const {
  std::uint32_t syndrome = 0;
  std::uint64_t w = word;
  while (w) {
    int j = std::countr_zero(w);
    syndrome ^= h_cols_[j];
    w &= w - 1;
  }
  return syndrome == 0 && (word >> n_) == 0;
}

CodePtr make_spc(int n) {
  if (n < 1) throw std::invalid_argument("SPC length must be >= 1");
  BitMatrix H(1, n);
  for (int c = 0; c < n; ++c) H.set(0, c, true);
  return std::make_shared<LinearCode>(std::move(H), "spc(" + std::to_string(n) + ")");
}

namespace {

// Hamming parity checks of redundancy r: columns are 1..2^r-1 in ascending
// integer order, row 0 holding the most significant bit.
BitMatrix hamming_checks(int r) {
  int n = (1 << r) - 1;
  BitMatrix H(r, n);
  for (int c = 0; c < n; ++c)
    for (int row = 0; row < r; ++row)
      H.set(row, c, ((c + 1) >> (r - 1 - row)) & 1);
  return H;
}

BitMatrix drop_column(const BitMatrix& m, int col) {
  BitMatrix out(m.rows(), m.cols() - 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0, dst = 0; c < m.cols(); ++c)
      if (c != col) out.set(r, dst++, m.get(r, c));
  return out;
}

}  // namespace

CodePtr make_hamming_7_4() {
  return std::make_shared<LinearCode>(hamming_checks(3), "hamming_7_4");
}

CodePtr make_simplex_7_3() {
  return dual_of(*make_hamming_7_4(), "simplex_7_3");
}

CodePtr make_shortened_hamming_6_3() {
  // shorten at the all-one column (the last one under ascending column order)
  return std::make_shared<LinearCode>(drop_column(hamming_checks(3), 6),
                                      "shortened_hamming_6_3");
}

CodePtr make_hamming_15_11() {
  return std::make_shared<LinearCode>(hamming_checks(4), "hamming_15_11");
}

CodePtr make_shortened_hamming_14_10() {
  return std::make_shared<LinearCode>(drop_column(hamming_checks(4), 14),
                                      "shortened_hamming_14_10");
}

CodePtr make_explicit(BitMatrix H, std::string name, bool allow_zero_columns) {
  return std::make_shared<LinearCode>(std::move(H), std::move(name), allow_zero_columns);
}

CodePtr dual_of(const LinearCode& code, std::string name) {
  BitMatrix G = gf2_nullspace(code.H());
  if (name.empty()) name = "dual(" + code.name() + ")";
  return std::make_shared<LinearCode>(std::move(G), std::move(name));
}

CodePtr make_code_by_name(const std::string& name, int degree_hint) {
  if (name == "spc") {
    if (degree_hint < 1)
      throw std::invalid_argument("spc subcode needs the node degree (got " +
                                  std::to_string(degree_hint) + ")");
    return make_spc(degree_hint);
  }
  if (name.rfind("spc(", 0) == 0 && name.back() == ')')
    return make_spc(std::stoi(name.substr(4, name.size() - 5)));
  if (name == "hamming_7_4") return make_hamming_7_4();
  if (name == "simplex_7_3") return make_simplex_7_3();
  if (name == "shortened_hamming_6_3") return make_shortened_hamming_6_3();
  // The (15,11) fixture: the source construction names it "shortened" but a
  // (15,11,3) code is the plain Hamming code of redundancy 4; the 14-column
  // variant obtained by actually deleting the all-one column is available
  // separately as shortened_hamming_14_10.
  if (name == "shortened_hamming_15_11" || name == "hamming_15_11")
    return make_hamming_15_11();
  if (name == "shortened_hamming_14_10") return make_shortened_hamming_14_10();
  if (name.rfind("explicit:", 0) == 0) {
    std::string path = name.substr(9);
    return make_explicit(load_bit_matrix(path), path);
  }
  throw std::invalid_argument("unknown subcode family: " + name);
}

}  // namespace gldpc
