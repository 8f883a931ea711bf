#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace gldpc {

// Exact rational arithmetic for scheduling metrics and leading-order
// coefficients.  All quantities involved are tiny (binomials of n <= 20),
// so a 64-bit rational never overflows in the supported range.
using Rational = boost::rational<long long>;

// Binomial coefficient with the convention C(m, r) = 0 whenever m < r,
// m < 0 or r < 0.  Exact for the sizes used here (m <= 62).
constexpr long long binom(long long m, long long r) {
  if (r < 0 || m < 0 || m < r) return 0;
  if (r > m - r) r = m - r;
  long long acc = 1;
  for (long long i = 1; i <= r; ++i) acc = acc * (m - r + i) / i;
  return acc;
}

static_assert(binom(7, 3) == 35);
static_assert(binom(6, 2) == 15);
static_assert(binom(2, 3) == 0);
static_assert(binom(-1, 0) == 0);
static_assert(binom(0, 0) == 1);

}  // namespace gldpc
