#pragma once

#include <complex>
#include <cstdint>
#include <cmath>

namespace sbrsma {

// Counter-based Philox4x32-10 generator. Streams are addressed by
// (seed, trial, lane); trials drawn on distinct streams are independent and
// order-free, which is what makes multi-worker runs bit-reproducible.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t trial, std::uint32_t lane = 0)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        ctr1_(lane),
        ctr2_(static_cast<std::uint32_t>(trial)),
        ctr3_(static_cast<std::uint32_t>(trial >> 32)) {}

  std::uint32_t next_u32() {
    if (buf_pos_ == 4) {
      block();
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  // Uniform on (0,1]; never returns 0 so it is safe under log().
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double next_exponential(double rate) { return -std::log(next_unit()) / rate; }

  // Standard normal via Box-Muller; fixed draw count keeps streams aligned.
  double next_gauss() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // Circularly-symmetric complex Gaussian with E|z|^2 = mean_sq.
  std::complex<double> next_cgauss(double mean_sq) {
    const double s = std::sqrt(0.5 * mean_sq);
    return {s * next_gauss(), s * next_gauss()};
  }

  // Uniform integer in [0, n).
  std::uint32_t next_below(std::uint32_t n) {
    // Lemire-style rejection keeps the draw unbiased.
    std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      const std::uint32_t floor = (0u - n) % n;
      while (lo < floor) {
        m = static_cast<std::uint64_t>(next_u32()) * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static void round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                    std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    c0 = n0;
    c1 = lo1;
    c2 = n2;
    c3 = lo0;
  }

  void block() {
    std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = ctr2_, c3 = ctr3_;
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int r = 0; r < 10; ++r) {
      round(c0, c1, c2, c3, k0, k1);
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    buf_[0] = c0;
    buf_[1] = c1;
    buf_[2] = c2;
    buf_[3] = c3;
    ++ctr0_;  // 2^32 blocks per stream, far beyond any draw budget here
  }

  std::uint32_t key0_, key1_;
  std::uint32_t ctr0_ = 0, ctr1_, ctr2_, ctr3_;
  std::uint32_t buf_[4] = {};
  int buf_pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace sbrsma
