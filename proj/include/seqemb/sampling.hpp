#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "seqemb/sequence.hpp"
#include "seqemb/space.hpp"

namespace seqemb {

// Deterministic uniform/normal draws on top of mt19937_64. The standard
// distributions are implementation-defined, which would break byte-identical
// replay of manifests across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t integer(std::uint64_t bound) {  // [0, bound)
    return engine_() % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[integer(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Random element of the unit sphere of s at truncation L: decreasing profile
// from sorted absolute normal draws, random signs, random permutation,
// normalized by the norm of the signed, permuted vector.
inline FiniteSequence sample_unit_sphere(const SpaceDescriptor& s, std::size_t L, Rng& rng) {
  std::vector<double> v(L);
  for (;;) {
    for (double& x : v) x = std::fabs(rng.normal());
    std::sort(v.begin(), v.end(), std::greater<>());
    for (double& x : v) {
      if (rng.uniform() < 0.5) x = -x;
    }
    rng.shuffle(v);
    const double n = norm(FiniteSequence(std::vector<double>(v)), s);
    if (n > 0.0 && std::isfinite(n)) {
      for (double& x : v) x /= n;
      return FiniteSequence(std::move(v));
    }
  }
}

// Random nonincreasing nonnegative vector of unit source norm; the feasible
// set for the extremal search.
inline std::vector<double> sample_unit_profile(const SpaceDescriptor& s, std::size_t L,
                                               Rng& rng) {
  std::vector<double> v(L);
  for (;;) {
    for (double& x : v) x = std::fabs(rng.normal());
    std::sort(v.begin(), v.end(), std::greater<>());
    const double n = norm_nonincreasing(v, s);
    if (n > 0.0 && std::isfinite(n)) {
      for (double& x : v) x /= n;
      return v;
    }
  }
}

}  // namespace seqemb
