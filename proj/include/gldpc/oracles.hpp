#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gldpc/bit_matrix.hpp"
#include "gldpc/channel.hpp"
#include "gldpc/linear_code.hpp"

namespace gldpc {

// Reference weight spectrum straight from a parity-check matrix: test every
// length-n word against every check row.  n <= 16.
std::vector<std::uint64_t> spectrum_by_exhaustion(const BitMatrix& h);

// Dual-code spectrum predicted from a primal spectrum (n <= 16, exact).
std::vector<std::uint64_t> macwilliams_dual_spectrum(
    const std::vector<std::uint64_t>& spectrum, int n, int k);

// Erasure-channel constraint output toward coordinate i, found by scanning
// the codeword list for consistency with the non-erased incoming values
// (incoming[i] itself is ignored).
Sym bec_message_by_enumeration(const LinearCode& code,
                               const std::vector<Sym>& incoming, int i);

// GF(2) span membership decided by enumerating subset sums (<= 20 vectors).
bool in_span_by_subsets(const std::vector<GfVec>& vecs, const GfVec& target);

// Run every cross-check suite, printing one summary line each; true iff all
// pass.
bool verify_all(std::ostream& out);

}  // namespace gldpc
