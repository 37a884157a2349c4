#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsbench {

// Identifier written into run manifests. All randomness in a run flows from
// one 64-bit seed through SplitMix64 substreams derived by label hashing, so
// a manifest (seed + this id) is enough to reproduce a run in any port.
inline constexpr const char* kPrngId = "splitmix64/v1";

// SplitMix64: 64-bit counter-based generator (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform double in the open interval (0, 1).
  double next_double();

  // Uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // Standard normal via Box-Muller (two uniforms per draw, cosine branch).
  double next_normal();

  // Bernoulli(p) successes out of n trials, one uniform per trial.
  int next_binomial(int n, double p);

 private:
  std::uint64_t state_;
};

// FNV-1a over the label bytes; used only for substream derivation.
std::uint64_t hash_label(std::string_view label);

// Derives an independent substream seed from (seed, label). Purpose labels
// keep streams for shuffling, arrivals, lengths etc. decoupled.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

SplitMix64 substream(std::uint64_t seed, std::string_view label);

// Gamma(shape k, scale theta) sampler: Marsaglia-Tsang squeeze for k >= 1,
// boost transform Gamma(k) = Gamma(k+1) * U^(1/k) for k < 1.
// Throws std::invalid_argument for non-positive parameters.
double gamma_draw(SplitMix64& rng, double shape, double scale);

// Seeded Fisher-Yates; index chosen as floor(u * (i + 1)) from the double
// stream so ports reproduce the permutation.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_double() * static_cast<double>(i));
    if (j >= i) j = i - 1;
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace rsbench
