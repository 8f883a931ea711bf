#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "gldpc/bit_matrix.hpp"
#include "gldpc/decoder.hpp"
#include "gldpc/oracles.hpp"
#include "gldpc/rng.hpp"

using namespace gldpc;

namespace {

GldpcCode single_node(const CodePtr& sub) {
  std::vector<std::vector<int>> row(1);
  for (int j = 0; j < sub->n(); ++j) row[0].push_back(0);
  auto base = lift(ExponentMatrix(row), 1);
  return generalize(base, {sub});
}

GldpcCode small_gldpc() {
  // 4 rows x 6 block columns, zc=7: 42 variables, mixed spc / length-6 subcode
  auto m = parse_exponent_matrix(
      "0 2 4 1 6 3\n"
      "1 -1 3 -1 5 0\n"
      "-1 0 -1 2 -1 4\n"
      "5 3 1 6 0 2\n");
  std::vector<CodePtr> rc(4);
  rc[0] = make_shortened_hamming_6_3();
  return generalize(lift(m, 7), rc);
}

std::vector<std::uint8_t> random_codeword(const GldpcCode& code, Rng& rng) {
  auto gen = gf2_nullspace(code.full_parity_check_matrix());
  std::vector<std::uint8_t> word(code.n(), 0);
  for (int r = 0; r < gen.rows(); ++r) {
    if (rng.uniform() >= 0.5) continue;
    for (int c = 0; c < code.n(); ++c) word[c] ^= gen.get(r, c);
  }
  return word;
}

}  // namespace

TEST_CASE("spc kernel") {
  const double one_two = 2.0 * std::atanh(std::tanh(0.5) * std::tanh(1.0));
  CHECK(spc_c2v_awgn(std::vector<double>{3.0}) == doctest::Approx(3.0));
  CHECK(spc_c2v_awgn(std::vector<double>{1.0, 2.0}) == doctest::Approx(one_two));
  CHECK(spc_c2v_awgn(std::vector<double>{1.0, 0.0, 2.0}) == doctest::Approx(0.0));
  // sign rule: odd count of negatives flips
  CHECK(spc_c2v_awgn(std::vector<double>{-1.0, 2.0}) == doctest::Approx(-one_two));
  // huge inputs saturate instead of overflowing
  CHECK(std::isfinite(spc_c2v_awgn(std::vector<double>{1000.0, 1000.0})));
}

TEST_CASE("generalized awgn kernel on a single parity check") {
  auto spc3 = make_spc(3);
  std::vector<double> in{0.0, 1.0, 2.0};  // in[0] ignored
  CHECK(gc_c2v_awgn(*spc3, in, 0, GcMode::min) == doctest::Approx(1.0));
  CHECK(gc_c2v_awgn(*spc3, in, 0, GcMode::exact) ==
        doctest::Approx(2.0 * std::atanh(std::tanh(0.5) * std::tanh(1.0))));

  // exact APP == tanh rule on parity checks, random inputs
  auto spc5 = make_spc(5);
  Rng rng(derive_seed(0x646563, 0, 0, 0));
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> l(5);
    for (auto& x : l) x = 20.0 * rng.uniform() - 10.0;
    int i = int(rng.uniform_below(5));
    std::vector<double> others;
    for (int j = 0; j < 5; ++j)
      if (j != i) others.push_back(l[j]);
    CHECK(gc_c2v_awgn(*spc5, l, i, GcMode::exact) ==
          doctest::Approx(spc_c2v_awgn(others)).epsilon(1e-9));
  }
}

TEST_CASE("generalized awgn kernel properties") {
  auto ham = make_hamming_7_4();
  std::vector<double> zeros(7, 0.0);
  CHECK(gc_c2v_awgn(*ham, zeros, 3, GcMode::exact) == doctest::Approx(0.0));

  // codeword-sign symmetry: negate inputs on supp(x); output at i flips iff x_i=1
  Rng rng(derive_seed(0x646563, 1, 0, 0));
  for (auto mode : {GcMode::exact, GcMode::min}) {
    for (int t = 0; t < 500; ++t) {
      std::vector<double> l(7);
      for (auto& x : l) x = 8.0 * rng.uniform() - 4.0;
      auto cw = ham->codewords()[rng.uniform_below(ham->codewords().size())];
      int i = int(rng.uniform_below(7));
      auto flipped = l;
      for (int j = 0; j < 7; ++j)
        if ((cw >> j) & 1) flipped[j] = -flipped[j];
      double base = gc_c2v_awgn(*ham, l, i, mode);
      double after = gc_c2v_awgn(*ham, flipped, i, mode);
      double want = ((cw >> i) & 1) ? -base : base;
      CHECK(after == doctest::Approx(want).epsilon(1e-9));
    }
  }

  // min mode is the large-scale limit of exact mode
  for (int t = 0; t < 200; ++t) {
    std::vector<double> l(7);
    double maxabs = 0.0;
    for (auto& x : l) {
      x = 4.0 * rng.uniform() - 2.0;
      maxabs = std::max(maxabs, std::fabs(x));
    }
    auto scaled = l;
    for (auto& x : scaled) x *= 100.0;
    double ex = gc_c2v_awgn(*ham, scaled, 2, GcMode::exact) / 100.0;
    double mn = gc_c2v_awgn(*ham, l, 2, GcMode::min);
    CHECK(std::fabs(ex - mn) <= 0.05 * maxabs + 1e-9);
  }
}

TEST_CASE("generalized erasure kernel") {
  std::istringstream rep_h("1 1 0\n0 1 1\n");
  auto rep3 = make_explicit(parse_bit_matrix(rep_h), "rep3");
  std::vector<Sym> in{Sym::erased, Sym::zero, Sym::zero};
  CHECK(gc_c2v_bec(*rep3, in, 0) == Sym::zero);
  in = {Sym::erased, Sym::one, Sym::one};
  CHECK(gc_c2v_bec(*rep3, in, 0) == Sym::one);
  in = {Sym::erased, Sym::erased, Sym::erased};
  CHECK(gc_c2v_bec(*rep3, in, 0) == Sym::erased);

  auto spc3 = make_spc(3);
  in = {Sym::erased, Sym::zero, Sym::erased};
  CHECK(gc_c2v_bec(*spc3, in, 0) == Sym::erased);
  in = {Sym::erased, Sym::one, Sym::zero};
  CHECK(gc_c2v_bec(*spc3, in, 0) == Sym::one);

  // inconsistent knowns must raise, not guess: the second repetition check
  // involves only coordinates 1 and 2, and they disagree
  in = {Sym::erased, Sym::one, Sym::zero};
  CHECK_THROWS_AS(gc_c2v_bec(*rep3, in, 0), DecodingAnomaly);

  // spot check vs enumeration on the hamming code
  auto ham = make_hamming_7_4();
  Rng rng(derive_seed(0x646563, 2, 0, 0));
  for (int t = 0; t < 500; ++t) {
    auto cw = ham->codewords()[rng.uniform_below(16)];
    std::vector<Sym> msg(7);
    for (int j = 0; j < 7; ++j)
      msg[j] = rng.uniform() < 0.45 ? Sym::erased : sym_from_bit(int((cw >> j) & 1));
    int i = int(rng.uniform_below(7));
    CHECK(gc_c2v_bec(*ham, msg, i) == bec_message_by_enumeration(*ham, msg, i));
  }
}

TEST_CASE("variable-side combine") {
  CHECK(v2c_awgn(1.0, std::vector<double>{0.5, -0.25}) == doctest::Approx(1.25));
  CHECK(v2c_awgn(-2.0, std::vector<double>{}) == doctest::Approx(-2.0));

  CHECK(v2c_bec(Sym::erased, std::vector<Sym>{Sym::erased, Sym::one}) == Sym::one);
  CHECK(v2c_bec(Sym::zero, std::vector<Sym>{Sym::erased}) == Sym::zero);
  CHECK(v2c_bec(Sym::erased, std::vector<Sym>{Sym::erased}) == Sym::erased);
  CHECK_THROWS_AS(v2c_bec(Sym::zero, std::vector<Sym>{Sym::one}), DecodingAnomaly);
}

TEST_CASE("single constraint resolves an erasure") {
  auto code = single_node(make_spc(3));
  ReceivedWord rx;
  rx.kind = ChannelModel::bec;
  rx.symbols = {Sym::zero, Sym::erased, Sym::zero};
  auto res = decode(code, rx, Schedule::make_flooding(), {.max_iterations = 1});
  CHECK(res.success);
  CHECK(res.decisions == std::vector<Sym>{Sym::zero, Sym::zero, Sym::zero});
  CHECK(res.per_iteration_unresolved.back() == 0);
}

TEST_CASE("strong gaussian evidence decodes immediately") {
  auto code = single_node(make_hamming_7_4());
  ReceivedWord rx;
  rx.kind = ChannelModel::biawgn;
  rx.llr.assign(7, 10.0);
  auto res = decode(code, rx, Schedule::make_flooding(), {.max_iterations = 1});
  CHECK(res.success);
  for (auto d : res.decisions) CHECK(d == Sym::zero);
}

TEST_CASE("schedule validation") {
  auto code = small_gldpc();
  ReceivedWord rx;
  rx.kind = ChannelModel::bec;
  rx.symbols.assign(code.n(), Sym::zero);

  CHECK_THROWS_AS(decode(code, rx, Schedule::make_layered({0, 1, 2}), {}),
                  std::invalid_argument);
  auto twice = Schedule::make_layered(std::vector<int>(code.node_count(), 0));
  CHECK_THROWS_AS(decode(code, rx, twice, {}), std::invalid_argument);

  CHECK_THROWS_AS(expand_row_schedule(code, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(expand_row_schedule(code, {0, 1, 2, 2}), std::invalid_argument);
  auto sched = expand_row_schedule(code, {3, 0, 1, 2});
  CHECK(sched.kind == Schedule::layered);
  REQUIRE(sched.node_order.size() == size_t(code.node_count()));
  CHECK(code.node(sched.node_order.front()).exponent_row == 3);
  CHECK(code.node(sched.node_order.back()).exponent_row == 2);
}

TEST_CASE("erasure invariants over random trials") {
  auto code = small_gldpc();
  auto flooding = Schedule::make_flooding();
  std::vector<int> nat(code.node_count());
  std::iota(nat.begin(), nat.end(), 0);
  auto layered = Schedule::make_layered(nat);

  Decoder dec(code);
  for (int t = 0; t < 1500; ++t) {
    Rng rng(derive_seed(0xbec, 0, 0, t));
    auto word = random_codeword(code, rng);
    ReceivedWord rx;
    transmit(ChannelModel::make_bec(0.35), word, rng, rx);
    DecodeOptions opts;
    opts.max_iterations = 8;
    opts.transmitted = &word;
    auto res = dec.decode(rx, t % 2 ? layered : flooding, opts);

    // no miscorrection: every resolved bit equals the transmitted bit
    for (int v = 0; v < code.n(); ++v)
      if (res.decisions[v] != Sym::erased)
        CHECK(res.decisions[v] == sym_from_bit(word[v]));
    // monotone resolution across iterations
    for (size_t it = 1; it < res.per_iteration_unresolved.size(); ++it)
      CHECK(res.per_iteration_unresolved[it] <= res.per_iteration_unresolved[it - 1]);
    if (res.success)
      for (auto d : res.decisions) CHECK(d != Sym::erased);
  }
}

TEST_CASE("flooding and layered reach the same erasure fixed point") {
  auto code = small_gldpc();
  std::vector<int> order(code.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> reversed(order.rbegin(), order.rend());

  Decoder dec(code);
  for (int t = 0; t < 300; ++t) {
    Rng rng(derive_seed(0xbec, 1, 0, t));
    auto word = random_codeword(code, rng);
    ReceivedWord rx;
    transmit(ChannelModel::make_bec(0.4), word, rng, rx);
    DecodeOptions opts;
    opts.max_iterations = 30;  // enough for the peeling closure
    opts.transmitted = &word;
    auto a = dec.decode(rx, Schedule::make_flooding(), opts);
    auto b = dec.decode(rx, Schedule::make_layered(order), opts);
    auto c = dec.decode(rx, Schedule::make_layered(reversed), opts);
    CHECK(a.decisions == b.decisions);
    CHECK(a.decisions == c.decisions);
  }
}

TEST_CASE("layered resolves no later than flooding on the erasure channel") {
  auto code = small_gldpc();
  std::vector<int> order(code.node_count());
  std::iota(order.begin(), order.end(), 0);
  Decoder dec(code);
  for (int t = 0; t < 200; ++t) {
    Rng rng(derive_seed(0xbec, 2, 0, t));
    ReceivedWord rx;
    std::vector<std::uint8_t> zero(code.n(), 0);
    transmit(ChannelModel::make_bec(0.4), zero, rng, rx);
    DecodeOptions opts;
    opts.max_iterations = 2;
    auto fl = dec.decode(rx, Schedule::make_flooding(), opts);
    auto la = dec.decode(rx, Schedule::make_layered(order), opts);
    CHECK(la.per_iteration_unresolved.back() <= fl.per_iteration_unresolved.back());
  }
}

TEST_CASE("early stop halts once constraints hold") {
  auto code = single_node(make_spc(3));
  ReceivedWord rx;
  rx.kind = ChannelModel::bec;
  rx.symbols = {Sym::zero, Sym::erased, Sym::zero};
  DecodeOptions opts;
  opts.max_iterations = 50;
  opts.early_stop = true;
  auto res = decode(code, rx, Schedule::make_flooding(), opts);
  CHECK(res.success);
  CHECK(res.iterations_used < 50);
}

TEST_CASE("nonzero reference word is honored") {
  auto code = small_gldpc();
  Rng rng(derive_seed(0xbec, 3, 0, 0));
  auto word = random_codeword(code, rng);
  ReceivedWord rx;
  transmit(ChannelModel::make_biawgn_sigma(0.2), word, rng, rx);
  DecodeOptions opts;
  opts.transmitted = &word;
  auto res = decode(code, rx, Schedule::make_flooding(), opts);
  CHECK(res.success);
  for (int v = 0; v < code.n(); ++v) CHECK(res.decisions[v] == sym_from_bit(word[v]));
}

TEST_CASE("awgn min rule also decodes clean input") {
  auto code = small_gldpc();
  ReceivedWord rx;
  rx.kind = ChannelModel::biawgn;
  rx.llr.assign(code.n(), 12.0);
  DecodeOptions opts;
  opts.gc_mode = GcMode::min;
  std::vector<int> order(code.node_count());
  std::iota(order.begin(), order.end(), 0);
  auto res = decode(code, rx, Schedule::make_layered(order), opts);
  CHECK(res.success);
}
