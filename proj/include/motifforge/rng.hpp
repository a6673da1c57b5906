#pragma once

#include <cstdint>
#include <random>

namespace motifforge {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent engine seeds from a
// base seed and a stream id so that parallel workers stay reproducible.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix_seed(mix_seed(seed) ^ stream));
}

// Uniform integer in [lo, hi], inclusive.
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t count) {
  return static_cast<std::size_t>(uniform_u64(rng, 0, count - 1));
}

inline double uniform_real(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double sample_exponential(Rng& rng, double rate) {
  return std::exponential_distribution<double>(rate)(rng);
}

inline double sample_gamma(Rng& rng, double shape) {
  return std::gamma_distribution<double>(shape, 1.0)(rng);
}

inline double sample_beta(Rng& rng, double alpha, double beta) {
  double x = sample_gamma(rng, alpha);
  double y = sample_gamma(rng, beta);
  return x / (x + y);
}

inline bool bernoulli(Rng& rng, double p) {
  return uniform_real(rng) < p;
}

}  // namespace motifforge
