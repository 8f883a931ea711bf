#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gldpc {

// splitmix64 finalizer; used to whiten seed material.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d9665147915f8dULL;
  return x ^ (x >> 31);
}

// Stream seed for (channel point, schedule, trial) under a run seed.  Every
// trial owns an independent generator derived from indices alone, so results
// do not depend on how trials are distributed over worker threads.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t channel_idx,
                                    std::uint64_t schedule_idx, std::uint64_t trial_idx) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ channel_idx);
  h = splitmix64(h ^ schedule_idx);
  h = splitmix64(h ^ trial_idx);
  return h;
}

// mt19937_64 with explicitly coded uniform/gaussian transforms; the standard
// pins the engine's output sequence, and avoiding std distributions keeps
// draws identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, bound) by rejection; bound >= 1
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t v;
    do { v = engine_(); } while (v >= limit);
    return v % bound;
  }

  // standard normal via Box-Muller (pairs cached)
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do { u1 = uniform(); } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // in-place Fisher-Yates; explicit so shuffles are reproducible everywhere
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[uniform_below(i)]);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gldpc
