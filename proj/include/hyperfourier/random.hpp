#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace hf {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// SplitMix64: small, fast, and fully specified, so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for trial `index` of a run seeded with `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ 0x9E3779B97F4A7C15ULL);
    const std::uint64_t a = mix.next();
    Rng mix2(index + a);
    return Rng(mix2.next() ^ seed);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1).
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Box-Muller; both outputs are consumed so the stream position is predictable.
  std::complex<double> complex_gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  double gaussian() { return complex_gaussian().real(); }

 private:
  std::uint64_t state_;
};

}  // namespace hf
