#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "gldpc/channel.hpp"
#include "gldpc/rng.hpp"

using namespace gldpc;

TEST_CASE("seed derivation is stable and collision-averse") {
  CHECK(derive_seed(42, 0, 0, 0) == derive_seed(42, 0, 0, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t c = 0; c < 4; ++c)
    for (std::uint64_t s = 0; s < 4; ++s)
      for (std::uint64_t t = 0; t < 64; ++t) seen.insert(derive_seed(42, c, s, t));
  CHECK(seen.size() == 4 * 4 * 64);
  CHECK(derive_seed(42, 0, 0, 1) != derive_seed(43, 0, 0, 1));
}

TEST_CASE("rng primitives") {
  Rng rng(123);
  Rng twin(123);
  for (int i = 0; i < 5; ++i) CHECK(rng.next_u64() == twin.next_u64());

  double sum = 0.0, sum2 = 0.0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sum2 / draws == doctest::Approx(1.0 / 3.0).epsilon(0.01));

  double gsum = 0.0, gsum2 = 0.0;
  for (int i = 0; i < draws; ++i) {
    double g = rng.gaussian();
    gsum += g;
    gsum2 += g * g;
  }
  CHECK(gsum / draws == doctest::Approx(0.0).epsilon(0.02));
  CHECK(gsum2 / draws == doctest::Approx(1.0).epsilon(0.02));

  for (int i = 0; i < 1000; ++i) CHECK(rng.uniform_below(7) < 7);

  std::vector<int> v(20);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  rng.shuffle(w);
  CHECK(w != v);  // 1/20! chance of a false alarm
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("erasure channel never flips") {
  Rng rng(derive_seed(7, 0, 0, 0));
  std::vector<std::uint8_t> word(4000);
  for (auto& b : word) b = rng.uniform() < 0.5;

  ReceivedWord rx;
  transmit(ChannelModel::make_bec(0.0), word, rng, rx);
  REQUIRE(rx.kind == ChannelModel::bec);
  REQUIRE(rx.symbols.size() == word.size());
  for (size_t i = 0; i < word.size(); ++i)
    CHECK(rx.symbols[i] == sym_from_bit(word[i]));

  transmit(ChannelModel::make_bec(1.0), word, rng, rx);
  for (auto s : rx.symbols) CHECK(s == Sym::erased);

  int erased = 0;
  transmit(ChannelModel::make_bec(0.3), word, rng, rx);
  for (size_t i = 0; i < word.size(); ++i) {
    if (rx.symbols[i] == Sym::erased)
      ++erased;
    else
      CHECK(rx.symbols[i] == sym_from_bit(word[i]));
  }
  CHECK(erased / double(word.size()) == doctest::Approx(0.3).epsilon(0.1));
}

TEST_CASE("gaussian channel llr statistics") {
  // all-zero word, sigma = 0.5: L = 2y/sigma^2 with y ~ N(+1, sigma^2),
  // so L ~ N(u, 2u) with u = 2/sigma^2 = 8
  Rng rng(derive_seed(7, 1, 0, 0));
  std::vector<std::uint8_t> word(200000, 0);
  ReceivedWord rx;
  transmit(ChannelModel::make_biawgn_sigma(0.5), word, rng, rx);
  REQUIRE(rx.kind == ChannelModel::biawgn);
  REQUIRE(rx.llr.size() == word.size());

  double mean = 0.0;
  for (double l : rx.llr) mean += l;
  mean /= double(rx.llr.size());
  double var = 0.0;
  for (double l : rx.llr) var += (l - mean) * (l - mean);
  var /= double(rx.llr.size());
  CHECK(mean == doctest::Approx(8.0).epsilon(0.01));
  CHECK(var == doctest::Approx(16.0).epsilon(0.02));

  // bit 1 maps to -1: sign flips
  std::vector<std::uint8_t> ones(200000, 1);
  transmit(ChannelModel::make_biawgn_sigma(0.5), ones, rng, rx);
  double mean1 = 0.0;
  for (double l : rx.llr) mean1 += l;
  CHECK(mean1 / double(rx.llr.size()) == doctest::Approx(-8.0).epsilon(0.01));
}

TEST_CASE("ebn0 conversion") {
  CHECK(ebn0_to_sigma(0.0, 0.5) == doctest::Approx(1.0));
  // doubling Eb/N0 (+3.0103 dB) scales sigma by 1/sqrt(2)
  CHECK(ebn0_to_sigma(10.0 * std::log10(2.0), 0.5) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  double r = 2.0 / 7.0;
  CHECK(ebn0_to_sigma(4.0, r) ==
        doctest::Approx(std::sqrt(1.0 / (2.0 * r * std::pow(10.0, 0.4)))));
}

TEST_CASE("identical seeds reproduce a transmission") {
  std::vector<std::uint8_t> word(64, 0);
  ReceivedWord a, b;
  Rng r1(999), r2(999);
  transmit(ChannelModel::make_biawgn_sigma(1.0), word, r1, a);
  transmit(ChannelModel::make_biawgn_sigma(1.0), word, r2, b);
  CHECK(a.llr == b.llr);
}
