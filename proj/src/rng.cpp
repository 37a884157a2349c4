#include "rsbench/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsbench {

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  // 53-bit mantissa plus half an ulp keeps the value strictly inside (0,1),
  // which protects the log() calls downstream.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
  std::uint64_t v = static_cast<std::uint64_t>(next_double() * static_cast<double>(bound));
  return v >= bound ? bound - 1 : v;
}

double SplitMix64::next_normal() {
  double u1 = next_double();
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int SplitMix64::next_binomial(int n, double p) {
  int successes = 0;
  for (int i = 0; i < n; ++i) {
    if (next_double() < p) ++successes;
  }
  return successes;
}

std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  SplitMix64 mixer(seed ^ hash_label(label));
  return mixer.next_u64();
}

SplitMix64 substream(std::uint64_t seed, std::string_view label) {
  return SplitMix64(derive_seed(seed, label));
}

double gamma_draw(SplitMix64& rng, double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument("gamma_draw: shape and scale must be positive");
  }
  if (shape < 1.0) {
    double boosted = gamma_draw(rng, shape + 1.0, scale);
    return boosted * std::pow(rng.next_double(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
  }
}

}  // namespace rsbench
