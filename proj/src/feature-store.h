// src/feature-store.h

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

#ifndef FSAUG_FEATURE_STORE_H_
#define FSAUG_FEATURE_STORE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fsaug {

/// One utterance's T x D grid of log Mel filterbank values, frame-major.
struct FeatureMatrix {
  std::string utterance_id;
  uint32_t num_frames = 0;  // T
  uint32_t num_dims = 0;    // D
  std::vector<float> values;
  float frame_shift_ms = 10.0f;
  float window_ms = 25.0f;

  float &At(uint32_t t, uint32_t d) {
    return values[static_cast<size_t>(t) * num_dims + d];
  }
  float At(uint32_t t, uint32_t d) const {
    return values[static_cast<size_t>(t) * num_dims + d];
  }
  const float *Frame(uint32_t t) const {
    return values.data() + static_cast<size_t>(t) * num_dims;
  }
  float *Frame(uint32_t t) {
    return values.data() + static_cast<size_t>(t) * num_dims;
  }
};

/// Corpus-global per-dimension statistics (population variance, divide by N).
struct GlobalStats {
  std::vector<double> per_dim_mean;
  std::vector<double> per_dim_var;
  uint64_t frame_count = 0;
};

// FSA1 archive, little-endian.  Returns bytes written.
// Rejects non-finite values, naming the offending utterance/frame/dim.
uint64_t WriteCorpus(const std::vector<FeatureMatrix> &utterances,
                     std::ostream &os);

// Inverse of WriteCorpus.  Throws FormatError on bad magic, zero T or D,
// or a truncated stream (naming the utterance being read).
std::vector<FeatureMatrix> ReadCorpus(std::istream &is);

// Pools mean/variance per dimension over every frame of every utterance.
// Accumulation is 64-bit and runs in a fixed utterance order so results do
// not depend on scheduling.
GlobalStats ComputeGlobalStats(const std::vector<FeatureMatrix> &corpus);

// out[t][d] = (in[t][d] - mean[d]) / sqrt(max(var[d], kVarianceFloor)).
constexpr double kVarianceFloor = 1e-10;
FeatureMatrix Normalize(const FeatureMatrix &matrix, const GlobalStats &stats);

// Deterministic standard-normal synthetic corpus; same seed, same bytes.
std::vector<FeatureMatrix> GenSynthetic(uint32_t num_utterances,
                                        uint32_t frames_min,
                                        uint32_t frames_max, uint32_t dims,
                                        uint64_t seed);

// Stats sidecar: header "D=<n> frames=<n>" then "dim,mean,var" lines with
// 9 significant digits.
void WriteStats(const GlobalStats &stats, std::ostream &os);
GlobalStats ReadStats(std::istream &is);

}  // namespace fsaug

#endif  // FSAUG_FEATURE_STORE_H_
