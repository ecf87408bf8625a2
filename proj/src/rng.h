// src/rng.h

// Copyright 2026  fsaug authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FSAUG_RNG_H_
#define FSAUG_RNG_H_

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fsaug {

constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 output mix (Vigna's fixed-increment SplittableRandom variant).
inline uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// SplitMix64 generator.  The whole pipeline keys off this one generator so
// identical seeds give identical archives in any conforming implementation.
struct Rng {
  uint64_t state = 0;

  uint64_t Next() {
    state += kGoldenGamma;
    return Mix64(state);
  }
};

// Derives an independent per-batch stream from (master_seed, batch_index).
inline uint64_t BatchRngState(uint64_t master_seed, uint64_t batch_index) {
  return Mix64(master_seed ^ (batch_index * kGoldenGamma));
}

// Inclusive integer uniform on [lo, hi], modulo reduction of the next output.
inline int64_t UniformInt(Rng &rng, int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("UniformInt: lo > hi");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  uint64_t u = rng.Next();
  return lo + static_cast<int64_t>(span == 0 ? u : u % span);
}

// Uniform double in (0, 1]; never 0 so log() is safe.
inline double UniformUnit(Rng &rng) {
  return static_cast<double>((rng.Next() >> 11) + 1) * 0x1.0p-53;
}

// Standard normal draws via Box-Muller over SplitMix64 uniforms.
struct GaussianSampler {
  Rng rng;
  bool has_spare = false;
  double spare = 0.0;

  explicit GaussianSampler(uint64_t seed) : rng{seed} {}

  double Next() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double u1 = UniformUnit(rng);
    double u2 = UniformUnit(rng);
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare = radius * std::sin(angle);
    has_spare = true;
    return radius * std::cos(angle);
  }
};

}  // namespace fsaug

#endif  // FSAUG_RNG_H_
