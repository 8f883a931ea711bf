#include "gldpc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gldpc {

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

void check_coordinate(const LinearCode& code, int i, int n_ab) {
  if (i < 0 || i >= code.n()) throw std::invalid_argument("coordinate out of range");
  if (n_ab < 0 || n_ab > code.n()) throw std::invalid_argument("overlap size out of range");
}

void check_nontrivial(const LinearCode& code) {
  if (code.a_min() == 0)
    throw std::invalid_argument(code.name() + " has no nonzero codewords");
}

Rational ensemble_scale(const LinearCode& code) {
  return Rational((long long)code.a_min(), binom(code.n(), code.d_min()));
}

}  // namespace

MinWeightCounts min_weight_counts(const LinearCode& code, int i, int n_ab) {
  check_coordinate(code, i, n_ab);
  const std::uint64_t own = std::uint64_t(1) << i;
  const std::uint64_t overlap = (std::uint64_t(1) << n_ab) - 1;
  MinWeightCounts c;
  for (std::uint64_t cw : code.codewords()) {
    if (!(cw & own) || std::popcount(cw) != code.d_min()) continue;
    ++c.through;
    if ((cw & overlap & ~own) == 0) ++c.tail_confined;
  }
  return c;
}

long long tail_count_difference(const LinearCode& code, int n_ab) {
  if (n_ab < 0 || n_ab > code.n()) throw std::invalid_argument("overlap size out of range");
  long long sum = 0;
  for (int i = n_ab; i < code.n(); ++i) {
    const MinWeightCounts c = min_weight_counts(code, i, n_ab);
    sum += c.through - c.tail_confined;
  }
  return sum;
}

Rational first_update_coeff(const LinearCode& code, int i, CoeffForm form) {
  check_coordinate(code, i, 0);
  check_nontrivial(code);
  if (form == CoeffForm::exact) return Rational(min_weight_counts(code, i, 0).through);
  return ensemble_scale(code) * binom(code.n() - 1, code.d_min() - 1);
}

Rational second_update_coeff(const LinearCode& code, int j, int n_ab, CoeffForm form) {
  check_coordinate(code, j, n_ab);
  check_nontrivial(code);
  if (form == CoeffForm::exact)
    return Rational(min_weight_counts(code, j, n_ab).tail_confined);
  const int free_coords = code.n() - n_ab - (j < n_ab ? 0 : 1);
  return ensemble_scale(code) * binom(free_coords, code.d_min() - 1);
}

double LeadingTerm::value() const { return double(coefficient) * q_func(argument); }

LeadingTerm awgn_message_error(const LinearCode& code, int i, double u) {
  check_coordinate(code, i, 0);
  check_nontrivial(code);
  if (u <= 0.0) throw std::invalid_argument("llr mean must be positive");
  LeadingTerm t;
  t.coefficient = min_weight_counts(code, i, 0).through;
  t.argument = std::sqrt(code.d_min() * u / 2.0);
  return t;
}

double exact_first_iter_erasure(const LinearCode& code, int i,
                                const std::vector<double>& eps) {
  check_coordinate(code, i, 0);
  const int n = code.n();
  if (n > 20) throw CapacityError("erasure pattern enumeration limited to 20 coordinates");
  if ((int)eps.size() != n)
    throw std::invalid_argument("need one erasure probability per coordinate");
  for (double e : eps)
    if (!(e >= 0.0 && e <= 1.0))
      throw std::invalid_argument("erasure probability outside [0, 1]");

  // message toward i is erased iff some codeword through i is erased everywhere else
  std::vector<std::uint64_t> covers;
  for (std::uint64_t cw : code.codewords())
    if (cw >> i & 1) covers.push_back(cw & ~(std::uint64_t(1) << i));
  if (covers.empty()) return 0.0;

  double total = 0.0;
  const int free_coords = n - 1;
  for (std::uint64_t pat = 0; pat < (std::uint64_t(1) << free_coords); ++pat) {
    double p = 1.0;
    std::uint64_t erased = 0;
    for (int idx = 0; idx < free_coords; ++idx) {
      const int k = idx < i ? idx : idx + 1;
      if (pat >> idx & 1) {
        p *= eps[k];
        erased |= std::uint64_t(1) << k;
      } else {
        p *= 1.0 - eps[k];
      }
    }
    if (p == 0.0) continue;
    for (std::uint64_t c : covers) {
      if ((c & ~erased) == 0) {
        total += p;
        break;
      }
    }
  }
  return total;
}

PredictionReport compare_update_orders(const LinearCode& a, const LinearCode& b,
                                       int n_ab, const AnalysisPoint& point) {
  check_nontrivial(a);
  check_nontrivial(b);
  if (n_ab < 0 || n_ab > std::min(a.n(), b.n()))
    throw std::invalid_argument("overlap exceeds a subcode length");
  const bool bec = point.channel.kind == PairwiseChannel::bec;
  if (bec && !(point.param > 0.0 && point.param < 1.0))
    throw std::invalid_argument("erasure probability outside (0, 1)");
  if (!bec && !(point.param > 0.0))
    throw std::invalid_argument("llr mean must be positive");

  PredictionReport r;
  r.channel = point.channel;
  r.param = point.param;
  r.n_ab = n_ab;
  r.exponent_a = a.d_min();
  r.exponent_b = b.d_min();

  long long sum_first_a = 0, sum_second_a = 0, sum_first_b = 0, sum_second_b = 0;
  for (int i = n_ab; i < a.n(); ++i) {
    const MinWeightCounts c = min_weight_counts(a, i, n_ab);
    r.first_coeff_a.push_back(c.through);
    r.second_coeff_a.push_back(c.tail_confined);
    sum_first_a += c.through;
    sum_second_a += c.tail_confined;
  }
  for (int k = n_ab; k < b.n(); ++k) {
    const MinWeightCounts c = min_weight_counts(b, k, n_ab);
    r.first_coeff_b.push_back(c.through);
    r.second_coeff_b.push_back(c.tail_confined);
    sum_first_b += c.through;
    sum_second_b += c.tail_confined;
  }

  // whichever constraint updates first contributes its full counts; the
  // second one only the codewords confined to its tail
  const int da = r.exponent_a, db = r.exponent_b;
  if (bec) {
    const double wa = std::pow(point.param, da), wb = std::pow(point.param, db);
    r.p_ab = double(sum_first_a) * wa + double(sum_second_b) * wb;
    r.p_ba = double(sum_second_a) * wa + double(sum_first_b) * wb;
  } else {
    const double q0 = q_func(std::sqrt(point.param / 2.0));
    const double qa = q_func(std::sqrt(da * point.param / 2.0));
    const double qb = q_func(std::sqrt(db * point.param / 2.0));
    r.p_ab = q0 * (qa * double(sum_first_a) + qb * double(sum_second_b));
    r.p_ba = q0 * (qa * double(sum_second_a) + qb * double(sum_first_b));
  }

  // p_ab - p_ba has the sign of wa*ca - wb*cb; decide ties on the integers
  const long long ca = sum_first_a - sum_second_a;
  const long long cb = sum_first_b - sum_second_b;
  if ((ca == 0 && cb == 0) || (da == db && ca == cb)) {
    r.preference = Preference::indifferent;
    r.exact_tie = true;
    return r;
  }
  double diff;
  if (bec) {
    const int m = std::min(da, db);  // factor out eps^m before comparing
    diff = double(ca) * std::pow(point.param, da - m) -
           double(cb) * std::pow(point.param, db - m);
  } else {
    diff = q_func(std::sqrt(da * point.param / 2.0)) * double(ca) -
           q_func(std::sqrt(db * point.param / 2.0)) * double(cb);
  }
  if (diff < 0.0)
    r.preference = Preference::a_first;
  else if (diff > 0.0)
    r.preference = Preference::b_first;
  else
    r.preference = Preference::indifferent;
  return r;
}

}  // namespace gldpc
