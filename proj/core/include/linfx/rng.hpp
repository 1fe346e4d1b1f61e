#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace linfx {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw).
// The 64-bit seed is the key; the 128-bit counter is (stream << 64) | block.
// A given (seed, stream) pair always produces the same sequence, so every
// randomized stage in the library can be replayed from the numbers stored
// in its run report.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_(stream) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) fill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform on [0,1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1]; safe to pass to log().
  double next_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  // Standard normal via Box-Muller; the paired value is cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = next_open();
    const double v = next_double();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 6.28318530717958647692528676655900577 * v;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Unbiased integer in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x < limit) return x % bound;
    }
  }

  // Raw block access, used by the known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::uint32_t k0, std::uint32_t k1) {
    for (int round = 0; round < 10; ++round) {
      ctr = single_round(ctr, k0, k1);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return ctr;
  }

 private:
  static std::array<std::uint32_t, 4> single_round(const std::array<std::uint32_t, 4>& c,
                                                   std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c[0];
    const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }

  void fill() {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32)};
    buf_ = block(ctr, key0_, key1_);
    ++block_;
    pos_ = 0;
  }

  std::uint32_t key0_, key1_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Fixed stream tags, so the stages of one run never share a selector stream.
namespace rng_stream {
inline constexpr std::uint64_t tagged(std::uint64_t tag, std::uint64_t sub) {
  return (tag << 56) | (sub & 0x00FFFFFFFFFFFFFFull);
}
inline constexpr std::uint64_t gen_column = tagged(1, 0);
inline constexpr std::uint64_t gen_attempt(std::uint64_t k) { return tagged(1, k); }
inline constexpr std::uint64_t sparsify_attempt(std::uint64_t k) { return tagged(2, k); }
inline constexpr std::uint64_t select_attempt(std::uint64_t k) { return tagged(3, k); }
inline constexpr std::uint64_t tail_trials = tagged(4, 0);
inline constexpr std::uint64_t subspace = tagged(5, 0);
inline constexpr std::uint64_t net(std::uint64_t k) { return tagged(6, k); }
}  // namespace rng_stream

}  // namespace linfx
