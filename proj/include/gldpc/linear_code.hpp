#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gldpc/bit_matrix.hpp"

namespace gldpc {

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximum dimension for which codeword enumeration is permitted (2^k lists).
inline constexpr int kEnumerationCapK = 16;

// Binary linear block code given by a parity-check matrix.  Codewords are
// bitmasks with bit j = coordinate j; the full 2^k list is cached on
// construction in ascending numeric order, together with the weight spectrum.
class LinearCode {
 public:
  // H is normalized to full row rank (redundant rows dropped); a full-rank
  // input is kept verbatim.  Requires k <= kEnumerationCapK.
  explicit LinearCode(BitMatrix H, std::string name = "explicit",
                      bool allow_zero_columns = false);

  int n() const { return n_; }
  int k() const { return k_; }
  int r() const { return n_ - k_; }  // parity checks
  const BitMatrix& H() const { return H_; }
  const std::string& name() const { return name_; }

  const std::vector<std::uint64_t>& codewords() const { return codewords_; }
  const std::vector<std::uint64_t>& weight_spectrum() const { return spectrum_; }
  int d_min() const { return d_min_; }
  std::uint64_t a_min() const { return a_min_; }

  // Column j of H as a bitmask over the r() check rows.
  std::uint32_t h_col(int j) const { return h_cols_[j]; }
  const std::vector<std::uint32_t>& h_cols() const { return h_cols_; }

  bool is_codeword(std::uint64_t word) const;

 private:
  int n_ = 0, k_ = 0;
  BitMatrix H_;
  std::string name_;
  std::vector<std::uint64_t> codewords_;
  std::vector<std::uint64_t> spectrum_;  // size n+1
  int d_min_ = 0;
  std::uint64_t a_min_ = 0;
  std::vector<std::uint32_t> h_cols_;
};

using CodePtr = std::shared_ptr<const LinearCode>;

// Code families used by the experiments.
CodePtr make_spc(int n);                       // single parity check, d=2
CodePtr make_hamming_7_4();                    // H columns = 1..7 (3-bit, MSB-first rows)
CodePtr make_simplex_7_3();                    // dual of the (7,4) Hamming code
CodePtr make_shortened_hamming_6_3();          // (7,4) shortened at the all-one column
CodePtr make_hamming_15_11();                  // H columns = 1..15
CodePtr make_shortened_hamming_14_10();        // (15,11) shortened at the all-one column
CodePtr make_explicit(BitMatrix H, std::string name = "explicit",
                      bool allow_zero_columns = false);

// Dual code: parity checks of the dual are a nullspace basis of code.H.
CodePtr dual_of(const LinearCode& code, std::string name = "");

// Config-facing dispatcher.  Accepted names: "spc" (length from degree_hint),
// "spc(<n>)", "hamming_7_4", "simplex_7_3", "shortened_hamming_6_3",
// "shortened_hamming_15_11" (the (15,11) Hamming fixture), "hamming_15_11",
// "shortened_hamming_14_10", "explicit:<path>".
CodePtr make_code_by_name(const std::string& name, int degree_hint = 0);

}  // namespace gldpc
