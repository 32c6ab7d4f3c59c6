#pragma once

#include <cstdint>
#include <random>

#include "holonet/types.hpp"

namespace holonet {

// splitmix64: cheap, well-mixed 64-bit hash used to derive independent
// sub-stream seeds from a single root seed.  Counter-based derivation keeps
// parallel workers reproducible: worker i always receives
// derive_seed(root, i) no matter how work is scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return splitmix64(splitmix64(root) ^ splitmix64(stream * 0xd1342543de82ef95ull + 1));
}

// Thin wrapper over mt19937_64 seeded through derive_seed.  Every sampled
// experiment takes (seed, stream) so results are independent of thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_seed(seed, stream)) {}

  std::uint64_t bits() { return engine_(); }

  double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  double exponential() { return std::exponential_distribution<double>(1.0)(engine_); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  Vector gaussian_vector(Index dim) {
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) v[i] = normal();
    return v;
  }

  // Uniform direction on the unit sphere.
  Vector unit_vector(Index dim) {
    Vector v = gaussian_vector(dim);
    double n = v.norm();
    while (n < 1e-12) {
      v = gaussian_vector(dim);
      n = v.norm();
    }
    return v / n;
  }

  // Uniform sample from the Euclidean unit ball.
  Vector ball_point(Index dim) {
    return unit_vector(dim) * std::pow(uniform01(), 1.0 / static_cast<double>(dim));
  }

  // Uniform sample from the standard simplex {w >= 0, sum w = 1}.
  Vector simplex_point(Index count) {
    Vector w(count);
    double total = 0.0;
    for (Index i = 0; i < count; ++i) {
      w[i] = exponential();
      total += w[i];
    }
    return w / total;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace holonet
