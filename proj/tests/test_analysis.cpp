#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gldpc/analysis.hpp"
#include "gldpc/bit_matrix.hpp"

using namespace gldpc;

TEST_CASE("gaussian tail") {
  CHECK(q_func(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q_func(3.0) + q_func(-3.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_func(1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
  CHECK(q_func(5.0) < q_func(4.0));
}

TEST_CASE("minimum-weight codeword counts") {
  auto ham = make_hamming_7_4();
  for (int i = 0; i < 7; ++i) {
    auto c = min_weight_counts(*ham, i, 0);
    CHECK(c.through == 3);
    CHECK(c.tail_confined == 3);  // empty overlap constrains nothing
  }
  // weight 3 cannot hide in a single tail coordinate
  CHECK(min_weight_counts(*ham, 6, 6).tail_confined == 0);

  auto spc6 = make_spc(6);
  for (int i = 0; i < 6; ++i) CHECK(min_weight_counts(*spc6, i, 0).through == 5);
  // pairs {i, j} with j in the tail
  CHECK(min_weight_counts(*spc6, 4, 3).tail_confined == 2);

  CHECK_THROWS_AS(min_weight_counts(*ham, 7, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_weight_counts(*ham, 0, 8), std::invalid_argument);
}

TEST_CASE("tail count differences match hand-computed values") {
  auto ham = make_hamming_7_4();
  auto short63 = make_shortened_hamming_6_3();
  const long long ham_want[] = {0, 6, 9, 12};
  const long long short_want[] = {0, 4, 5, 6};
  for (int nab = 0; nab <= 3; ++nab) {
    CHECK(tail_count_difference(*ham, nab) == ham_want[nab]);
    CHECK(tail_count_difference(*short63, nab) == short_want[nab]);
  }
  for (int n : {4, 6, 7})
    for (int nab = 0; nab <= 3; ++nab)
      CHECK(tail_count_difference(*make_spc(n), nab) == (n - nab) * nab);
}

TEST_CASE("first-update coefficient") {
  auto ham = make_hamming_7_4();
  for (int i = 0; i < 7; ++i) {
    CHECK(first_update_coeff(*ham, i, CoeffForm::exact) == Rational(3));
    CHECK(first_update_coeff(*ham, i, CoeffForm::ensemble) == Rational(3));
  }
  for (int n : {3, 5, 8})
    CHECK(first_update_coeff(*make_spc(n), 0, CoeffForm::exact) == Rational(n - 1));
  // transitive codes: ensemble equals exact everywhere
  for (const auto& code : {make_simplex_7_3(), make_spc(6)})
    for (int i = 0; i < code->n(); ++i)
      CHECK(first_update_coeff(*code, i, CoeffForm::exact) ==
            first_update_coeff(*code, i, CoeffForm::ensemble));
  CHECK(first_update_coeff(*make_simplex_7_3(), 2, CoeffForm::exact) == Rational(4));
}

TEST_CASE("second-update coefficient") {
  auto ham = make_hamming_7_4();
  // no overlap: second update is as good as the first
  for (const auto& code :
       {ham, make_shortened_hamming_6_3(), make_spc(6), make_simplex_7_3()})
    for (int j = 0; j < code->n(); ++j)
      for (auto form : {CoeffForm::exact, CoeffForm::ensemble})
        CHECK(second_update_coeff(*code, j, 0, form) ==
              first_update_coeff(*code, j, form));

  CHECK(second_update_coeff(*ham, 5, 3, CoeffForm::ensemble) == Rational(3, 5));
  CHECK(second_update_coeff(*ham, 1, 3, CoeffForm::ensemble) == Rational(6, 5));
  CHECK(second_update_coeff(*ham, 6, 6, CoeffForm::ensemble) == Rational(0));
  CHECK(second_update_coeff(*ham, 6, 6, CoeffForm::exact) == Rational(0));

  // overlap can only reduce the count
  for (const auto& code : {ham, make_shortened_hamming_6_3(), make_spc(7)})
    for (int j = 0; j < code->n(); ++j)
      for (int nab = 0; nab <= 3; ++nab)
        CHECK(second_update_coeff(*code, j, nab, CoeffForm::exact) <=
              first_update_coeff(*code, j, CoeffForm::exact));
}

TEST_CASE("gaussian-channel leading term") {
  auto spc3 = make_spc(3);
  auto lt = awgn_message_error(*spc3, 0, 2.0);
  CHECK(lt.coefficient == 2);
  CHECK(lt.argument == doctest::Approx(std::sqrt(2.0)));
  CHECK(lt.value() == doctest::Approx(2.0 * q_func(std::sqrt(2.0))));

  auto ham = make_hamming_7_4();
  auto lh = awgn_message_error(*ham, 4, 4.0);
  CHECK(lh.coefficient == 3);
  CHECK(lh.argument == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("exact first-iteration erasure law") {
  auto spc3 = make_spc(3);
  for (double e : {0.1, 0.01, 0.37}) {
    std::vector<double> eps(3, e);
    CHECK(exact_first_iter_erasure(*spc3, 0, eps) ==
          doctest::Approx(2 * e - e * e).epsilon(1e-12));
  }
  std::vector<double> zero(3, 0.0);
  CHECK(exact_first_iter_erasure(*spc3, 0, zero) == 0.0);

  // per-coordinate rates: message toward 0 is erased iff any other is erased
  std::vector<double> mixed{0.9, 0.2, 0.5};
  CHECK(exact_first_iter_erasure(*spc3, 0, mixed) ==
        doctest::Approx(1 - 0.8 * 0.5).epsilon(1e-12));

  // leading term of the hamming node: 3 eps^2
  auto ham = make_hamming_7_4();
  std::vector<double> tiny(7, 1e-3);
  CHECK(exact_first_iter_erasure(*ham, 0, tiny) ==
        doctest::Approx(3e-6).epsilon(0.05));

  // ratio to eps^(d-1) converges onto the exact coefficient from above
  double prev_dev = 1e9;
  for (double e : {1e-2, 1e-3, 1e-4}) {
    std::vector<double> eps(7, e);
    double ratio = exact_first_iter_erasure(*ham, 2, eps) / (e * e);
    double dev = std::fabs(ratio - 3.0);
    CHECK(dev < prev_dev);
    prev_dev = dev;
  }
  CHECK(prev_dev < 0.03);

  std::vector<double> wrong(6, 0.1);
  CHECK_THROWS_AS(exact_first_iter_erasure(*ham, 0, wrong), std::invalid_argument);
}

TEST_CASE("enumeration capacity for the erasure law") {
  // 21 coordinates stay enumerable as a code (k <= 16) but exceed the
  // 2^(n-1) pattern budget
  BitMatrix h(5, 21);
  for (int r = 0; r < 5; ++r)
    for (int c = 4 * r; c < 4 * r + 4; ++c) h.set(r, c, true);
  h.set(0, 20, true);
  auto big = make_explicit(h, "wide");
  std::vector<double> eps(21, 0.1);
  CHECK_THROWS_AS(exact_first_iter_erasure(*big, 0, eps), CapacityError);
}

TEST_CASE("update-order comparison on the erasure channel") {
  auto ham = make_hamming_7_4();
  auto short63 = make_shortened_hamming_6_3();
  auto spc6 = make_spc(6);

  auto rep = compare_update_orders(*ham, *short63, 3, bec_point(1e-4));
  CHECK(rep.exponent_a == 3);
  CHECK(rep.exponent_b == 3);
  CHECK(rep.first_coeff_a == std::vector<long long>{3, 3, 3, 3});
  CHECK(rep.second_coeff_a == std::vector<long long>{0, 0, 0, 0});
  CHECK(rep.first_coeff_b == std::vector<long long>{2, 2, 2});
  CHECK(rep.second_coeff_b == std::vector<long long>{0, 0, 0});
  // updating the shorter code first loses less: P(a first) > P(b first)
  CHECK(rep.p_ab > rep.p_ba);
  CHECK(rep.preference == Preference::b_first);
  CHECK_FALSE(rep.exact_tie);

  // unequal distances: the parity check must wait
  auto mixed = compare_update_orders(*spc6, *ham, 3, bec_point(1e-4));
  CHECK(mixed.preference == Preference::b_first);

  // identical codes with no overlap: a genuine tie
  auto tie = compare_update_orders(*ham, *ham, 0, bec_point(1e-4));
  CHECK(tie.preference == Preference::indifferent);
  CHECK(tie.exact_tie);
  CHECK(tie.p_ab == tie.p_ba);

  CHECK_THROWS_AS(compare_update_orders(*ham, *short63, 7, bec_point(1e-4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(compare_update_orders(*ham, *short63, 3, bec_point(0.0)),
                  std::invalid_argument);
}

TEST_CASE("update-order comparison on the gaussian channel") {
  auto ham = make_hamming_7_4();
  auto short63 = make_shortened_hamming_6_3();

  auto rep = compare_update_orders(*ham, *short63, 3, biawgn_point(16.0));
  CHECK(rep.preference == Preference::b_first);
  CHECK(rep.p_ab > rep.p_ba);

  // q-weighted tail sums: the node updated first contributes its raw counts,
  // the second one only the overlap-avoiding counts (zero here for both)
  double q0 = q_func(std::sqrt(8.0));
  double qd = q_func(std::sqrt(24.0));  // both codes have d = 3
  CHECK(rep.p_ab == doctest::Approx(q0 * qd * 12).epsilon(1e-12));
  CHECK(rep.p_ba == doctest::Approx(q0 * qd * 6).epsilon(1e-12));

  CHECK_THROWS_AS(compare_update_orders(*ham, *short63, 3, biawgn_point(-1.0)),
                  std::invalid_argument);
}

TEST_CASE("preference agrees with the leading-order totals") {
  std::vector<CodePtr> codes{make_spc(6), make_spc(7), make_hamming_7_4(),
                             make_simplex_7_3(), make_shortened_hamming_6_3()};
  int checked = 0;
  for (const auto& ca : codes)
    for (const auto& cb : codes)
      for (int nab = 0; nab <= 3; ++nab)
        for (const auto& pt : {bec_point(1e-4), biawgn_point(16.0)}) {
          NodeProfile pa{0, ca->n(), ca->d_min(), (long long)ca->a_min(), ca->n(), ca};
          NodeProfile pb{1, cb->n(), cb->d_min(), (long long)cb->a_min(), cb->n(), cb};
          PairwiseChannel ch{pt.channel};
          auto want = pairwise_preference(pa, pb, nab, ch);
          if (want == Preference::indifferent) continue;
          auto got = compare_update_orders(*ca, *cb, nab, pt).preference;
          if (got != Preference::indifferent) {
            CHECK(got == want);
            ++checked;
          }
        }
  CHECK(checked > 50);  // the agreement set is not vacuous
}
