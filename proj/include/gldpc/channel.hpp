#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gldpc/rng.hpp"

namespace gldpc {

// Ternary channel/message symbol for the erasure channel.
enum class Sym : std::uint8_t { zero = 0, one = 1, erased = 2 };

inline Sym sym_from_bit(int b) { return b ? Sym::one : Sym::zero; }

struct ChannelModel {
  enum Kind { bec, biawgn } kind = bec;
  double param = 0.0;  // bec: erasure probability; biawgn: noise sigma

  static ChannelModel make_bec(double eps) { return {bec, eps}; }
  static ChannelModel make_biawgn_sigma(double sigma) { return {biawgn, sigma}; }
};

// Observation of one transmitted word: exactly one of the two payloads is
// filled depending on the channel kind.
struct ReceivedWord {
  ChannelModel::Kind kind = ChannelModel::bec;
  std::vector<Sym> symbols;  // bec
  std::vector<double> llr;   // biawgn, L = 2y / sigma^2
};

// BPSK maps bit 0 -> +1, bit 1 -> -1.  For the BEC each bit is erased
// independently with probability param; values are never flipped.
void transmit(const ChannelModel& ch, const std::vector<std::uint8_t>& word,
              Rng& rng, ReceivedWord& out);

// Noise level for a target Eb/N0 in dB at the given code rate:
// sigma = sqrt(1 / (2 * rate * 10^(ebn0/10))).
inline double ebn0_to_sigma(double ebn0_db, double rate) {
  return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

}  // namespace gldpc
