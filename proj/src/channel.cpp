#include "gldpc/channel.hpp"

#include <stdexcept>

namespace gldpc {

void transmit(const ChannelModel& ch, const std::vector<std::uint8_t>& word,
              Rng& rng, ReceivedWord& out) {
  out.kind = ch.kind;
  if (ch.kind == ChannelModel::bec) {
    if (ch.param < 0.0 || ch.param > 1.0)
      throw std::invalid_argument("erasure probability must be in [0, 1]");
    out.llr.clear();
    out.symbols.resize(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
      out.symbols[i] = rng.uniform() < ch.param ? Sym::erased : sym_from_bit(word[i]);
  } else {
    if (!(ch.param > 0.0))
      throw std::invalid_argument("awgn sigma must be positive");
    out.symbols.clear();
    out.llr.resize(word.size());
    const double sigma = ch.param;
    const double scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < word.size(); ++i) {
      double y = (word[i] ? -1.0 : 1.0) + sigma * rng.gaussian();
      out.llr[i] = scale * y;
    }
  }
}

}  // namespace gldpc
