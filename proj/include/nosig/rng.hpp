#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "nosig/types.hpp"

namespace nosig {

/// Deterministic random stream. The engine is mt19937_64 (bit-exact by the
/// standard) and all distribution transforms are explicit here, so a seed
/// reproduces the same draws on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

  double exponential(double rate) {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return -std::log(u) / rate;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) %
           n;
  }

  /// Index drawn proportionally to nonnegative weights (need not sum to 1).
  std::size_t pick_weighted(std::span<const double> w) {
    double total = 0.0;
    for (double x : w) total += x;
    if (total <= 0.0) throw ContractError("pick_weighted: all weights zero");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < w.size(); ++i) {
      u -= w[i];
      if (u < 0.0) return i;
    }
    return w.size() - 1;
  }

  /// Independent stream derived from this seed and a stream id; used to keep
  /// parallel workers and sub-experiments decoupled.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nosig
