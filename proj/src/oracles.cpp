#include "gldpc/oracles.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gldpc/analysis.hpp"
#include "gldpc/decoder.hpp"
#include "gldpc/rng.hpp"
#include "gldpc/scheduler.hpp"

namespace gldpc {

std::vector<std::uint64_t> spectrum_by_exhaustion(const BitMatrix& h) {
  const int n = h.cols();
  if (n > 16) throw CapacityError("exhaustive spectrum limited to 16 columns");
  std::vector<std::uint64_t> spectrum(n + 1, 0);
  for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
    bool codeword = true;
    for (int r = 0; r < h.rows() && codeword; ++r)
      codeword = std::popcount(w & h.row_mask(r)) % 2 == 0;
    if (codeword) ++spectrum[std::popcount(w)];
  }
  return spectrum;
}

std::vector<std::uint64_t> macwilliams_dual_spectrum(
    const std::vector<std::uint64_t>& spectrum, int n, int k) {
  if (n < 0 || n > 16 || k < 0 || k > n)
    throw std::invalid_argument("macwilliams_dual_spectrum: bad dimensions");
  if ((int)spectrum.size() != n + 1)
    throw std::invalid_argument("macwilliams_dual_spectrum: spectrum size");
  std::uint64_t total = 0;
  for (std::uint64_t a : spectrum) total += a;
  if (total != std::uint64_t(1) << k)
    throw std::invalid_argument("macwilliams_dual_spectrum: spectrum does not sum to 2^k");

  // B_j = 2^-k * sum_w A_w K_j(w),  K_j(w) = sum_s (-1)^s C(w,s) C(n-w,j-s)
  std::vector<std::uint64_t> dual(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    long long acc = 0;
    for (int w = 0; w <= n; ++w) {
      if (!spectrum[w]) continue;
      long long kraw = 0;
      for (int s = 0; s <= j; ++s) {
        const long long term = binom(w, s) * binom(n - w, j - s);
        kraw += (s % 2 == 0) ? term : -term;
      }
      acc += (long long)spectrum[w] * kraw;
    }
    const long long size = (long long)1 << k;
    if (acc < 0 || acc % size != 0)
      throw std::logic_error("macwilliams_dual_spectrum: transform is not a spectrum");
    dual[j] = (std::uint64_t)(acc / size);
  }
  return dual;
}

Sym bec_message_by_enumeration(const LinearCode& code,
                               const std::vector<Sym>& incoming, int i) {
  if ((int)incoming.size() != code.n())
    throw std::invalid_argument("bec_message_by_enumeration: incoming length");
  if (i < 0 || i >= code.n())
    throw std::invalid_argument("bec_message_by_enumeration: coordinate out of range");
  bool seen[2] = {false, false};
  for (std::uint64_t cw : code.codewords()) {
    bool consistent = true;
    for (int j = 0; j < code.n() && consistent; ++j) {
      if (j == i || incoming[j] == Sym::erased) continue;
      consistent = (cw >> j & 1) == (std::uint64_t)incoming[j];
    }
    if (consistent) seen[cw >> i & 1] = true;
  }
  if (!seen[0] && !seen[1])
    throw std::logic_error("bec_message_by_enumeration: no consistent codeword");
  if (seen[0] && seen[1]) return Sym::erased;
  return seen[1] ? Sym::one : Sym::zero;
}

bool in_span_by_subsets(const std::vector<GfVec>& vecs, const GfVec& target) {
  if (vecs.size() > 20) throw CapacityError("subset enumeration limited to 20 vectors");
  for (const GfVec& v : vecs)
    if (v.len != target.len)
      throw std::invalid_argument("in_span_by_subsets: mixed vector lengths");
  for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << vecs.size()); ++subset) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < vecs.size(); ++j)
      if (subset >> j & 1) acc ^= vecs[j].bits;
    if (acc == target.bits) return true;
  }
  return false;
}

namespace {

std::vector<CodePtr> fixture_codes() {
  return {make_spc(3),       make_spc(6),
          make_spc(7),       make_hamming_7_4(),
          make_simplex_7_3(), make_shortened_hamming_6_3(),
          make_hamming_15_11(), make_shortened_hamming_14_10()};
}

bool fail(std::string& detail, const std::string& msg) {
  if (detail.empty()) detail = msg;
  return false;
}

bool suite_spectra(std::string& detail) {
  for (const CodePtr& code : fixture_codes())
    if (spectrum_by_exhaustion(code->H()) != code->weight_spectrum())
      return fail(detail, code->name() + ": enumerated spectrum differs from exhaustion");
  const std::vector<std::uint64_t> hamming{1, 0, 0, 7, 7, 0, 0, 1};
  if (make_hamming_7_4()->weight_spectrum() != hamming)
    return fail(detail, "hamming_7_4 spectrum");
  const std::vector<std::uint64_t> simplex{1, 0, 0, 0, 7, 0, 0, 0};
  if (make_simplex_7_3()->weight_spectrum() != simplex)
    return fail(detail, "simplex_7_3 spectrum");
  const std::vector<std::uint64_t> shortened{1, 0, 0, 4, 3, 0, 0};
  if (make_shortened_hamming_6_3()->weight_spectrum() != shortened)
    return fail(detail, "shortened_hamming_6_3 spectrum");
  for (int n : {3, 6, 7})
    if (make_spc(n)->weight_spectrum()[2] != (std::uint64_t)binom(n, 2))
      return fail(detail, "spc weight-2 count");
  return true;
}

bool suite_macwilliams(std::string& detail) {
  for (const CodePtr& code : fixture_codes()) {
    const CodePtr dual = dual_of(*code);
    const auto predicted =
        macwilliams_dual_spectrum(code->weight_spectrum(), code->n(), code->k());
    if (predicted != dual->weight_spectrum())
      return fail(detail, code->name() + ": dual spectrum mismatch");
  }
  return true;
}

// One erasure-kernel comparison; returns false on mismatch or miscorrection.
bool check_erasure_case(const LinearCode& code, std::uint64_t transmitted,
                        std::uint64_t pattern, int i) {
  std::vector<Sym> incoming(code.n());
  for (int j = 0; j < code.n(); ++j)
    incoming[j] = (pattern >> j & 1) ? Sym::erased : sym_from_bit(int(transmitted >> j & 1));
  incoming[i] = Sym::erased;
  const Sym kernel = gc_c2v_bec(code, incoming, i);
  const Sym reference = bec_message_by_enumeration(code, incoming, i);
  if (kernel != reference) return false;
  return reference == Sym::erased ||
         (std::uint64_t)reference == (transmitted >> i & 1);
}

bool suite_erasure_kernel(std::string& detail) {
  for (const CodePtr& code : fixture_codes()) {
    if (code->n() > 7) continue;  // exhaustive only for the short fixtures
    for (int i = 0; i < code->n(); ++i)
      for (std::uint64_t cw : code->codewords())
        for (std::uint64_t pat = 0; pat < (std::uint64_t(1) << code->n()); ++pat)
          if (!check_erasure_case(*code, cw, pat, i))
            return fail(detail, code->name() + ": kernel/enumeration mismatch");
  }
  for (const CodePtr& code : {make_hamming_15_11(), make_shortened_hamming_14_10()}) {
    Rng rng(derive_seed(0x6f7261636c65, 0, 0, 0));
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint64_t cw =
          code->codewords()[rng.uniform_below(code->codewords().size())];
      std::uint64_t pat = 0;
      for (int j = 0; j < code->n(); ++j)
        if (rng.uniform() < 0.4) pat |= std::uint64_t(1) << j;
      const int i = (int)rng.uniform_below(code->n());
      if (!check_erasure_case(*code, cw, pat, i))
        return fail(detail, code->name() + ": kernel/enumeration mismatch");
    }
  }
  return true;
}

bool suite_span(std::string& detail) {
  Rng rng(derive_seed(0x6f7261636c65, 1, 0, 0));
  for (int trial = 0; trial < 300; ++trial) {
    const int len = 1 + (int)rng.uniform_below(16);
    const std::uint64_t mask = len == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << len) - 1;
    std::vector<GfVec> vecs(rng.uniform_below(7));
    for (GfVec& v : vecs) v = {rng.next_u64() & mask, len};
    GfVec target{0, len};
    if (trial % 2 == 0) {
      for (const GfVec& v : vecs)
        if (rng.uniform() < 0.5) target.bits ^= v.bits;  // guaranteed member
    } else {
      target.bits = rng.next_u64() & mask;
    }
    if (in_span(vecs, target) != in_span_by_subsets(vecs, target))
      return fail(detail, "span test disagrees with subset enumeration");
  }
  return true;
}

bool suite_erasure_coefficient(std::string& detail) {
  for (const CodePtr& code : fixture_codes()) {
    if (code->n() > 7) continue;
    for (int i = 0; i < code->n(); ++i) {
      const double g = boost::rational_cast<double>(
          first_update_coeff(*code, i, CoeffForm::exact));
      double previous_dev = 1e300;
      for (double eps : {1e-2, 1e-3, 1e-4}) {
        const double oracle =
            exact_first_iter_erasure(*code, i, std::vector<double>(code->n(), eps));
        const double ratio = oracle / std::pow(eps, code->d_min() - 1);
        const double dev = std::abs(ratio - g) / g;
        if (dev >= previous_dev)
          return fail(detail, code->name() + ": deviation not shrinking");
        previous_dev = dev;
        if (eps == 1e-4 && dev >= 0.01)
          return fail(detail, code->name() + ": leading coefficient off by >= 1%");
      }
    }
  }
  return true;
}

bool suite_order_agreement(std::string& detail) {
  const std::vector<CodePtr> codes = {make_spc(6), make_spc(7), make_hamming_7_4(),
                                      make_simplex_7_3(), make_shortened_hamming_6_3()};
  auto profile = [](int id, const CodePtr& c) {
    return NodeProfile{id, c->n(), c->d_min(), (long long)c->a_min(), c->n(), c};
  };
  const AnalysisPoint points[] = {bec_point(1e-4), biawgn_point(16.0)};
  for (const CodePtr& a : codes)
    for (const CodePtr& b : codes)
      for (int n_ab = 0; n_ab <= 3; ++n_ab)
        for (const AnalysisPoint& point : points) {
          const Preference predicted =
              pairwise_preference(profile(0, a), profile(1, b), n_ab, point.channel);
          const Preference numeric =
              compare_update_orders(*a, *b, n_ab, point).preference;
          const bool both_strict = predicted != Preference::indifferent &&
                                   numeric != Preference::indifferent;
          if (both_strict && predicted != numeric)
            return fail(detail, a->name() + " vs " + b->name() + ": order flip");
        }
  return true;
}

bool suite_q_func(std::string& detail) {
  if (std::abs(q_func(0.0) - 0.5) > 1e-15) return fail(detail, "q(0) != 1/2");
  for (double x = -8.0; x < 8.0; x += 0.25) {
    if (std::abs(q_func(x) + q_func(-x) - 1.0) > 1e-12)
      return fail(detail, "q(x) + q(-x) != 1");
    if (q_func(x) <= q_func(x + 0.25)) return fail(detail, "q not decreasing");
  }
  return true;
}

}  // namespace

bool verify_all(std::ostream& out) {
  struct Suite {
    const char* name;
    bool (*run)(std::string&);
  };
  const Suite suites[] = {
      {"weight spectra vs exhaustion", suite_spectra},
      {"dual spectra vs transform", suite_macwilliams},
      {"erasure kernel vs enumeration", suite_erasure_kernel},
      {"span test vs subset sums", suite_span},
      {"first-iteration erasure coefficient", suite_erasure_coefficient},
      {"update-order agreement", suite_order_agreement},
      {"gaussian tail function", suite_q_func},
  };
  bool all_ok = true;
  for (const Suite& suite : suites) {
    std::string detail;
    bool ok = false;
    try {
      ok = suite.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    out << suite.name << ": " << (ok ? "ok" : "FAIL") << '\n';
    if (!ok) {
      if (!detail.empty()) out << "  " << detail << '\n';
      all_ok = false;
    }
  }
  return all_ok;
}

}  // namespace gldpc
