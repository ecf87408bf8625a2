// src/windowing.h

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

#ifndef FSAUG_WINDOWING_H_
#define FSAUG_WINDOWING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "feature-store.h"

namespace fsaug {

/// A tau x D slice around one center frame.  Owns its data so transforms
/// can mutate freely.
struct ContextWindow {
  std::string source_utterance;
  uint32_t source_frame = 0;
  uint32_t num_frames = 0;   // tau = left + 1 + right
  uint32_t num_dims = 0;     // D
  uint32_t center_index = 0; // = left
  std::vector<float> values; // frame-major

  float &At(uint32_t t, uint32_t d) {
    return values[static_cast<size_t>(t) * num_dims + d];
  }
  float At(uint32_t t, uint32_t d) const {
    return values[static_cast<size_t>(t) * num_dims + d];
  }
  float *Row(uint32_t t) {
    return values.data() + static_cast<size_t>(t) * num_dims;
  }
  const float *Row(uint32_t t) const {
    return values.data() + static_cast<size_t>(t) * num_dims;
  }
};

struct WindowBatch {
  std::vector<ContextWindow> windows;  // homogeneous tau and D
  uint32_t batch_index = 0;
};

// One window per frame t; row r holds frame clamp(t - left + r, 0, T-1),
// so edges are replicated and the center row is frame t verbatim.
std::vector<ContextWindow> ExtractWindows(const FeatureMatrix &matrix,
                                          uint32_t left, uint32_t right);

// Groups consecutive windows; the final batch may be short.
std::vector<WindowBatch> BatchWindows(std::vector<ContextWindow> windows,
                                      uint32_t batch_size);

// Packs a window as a FeatureMatrix (id "<utt>#<frame>") for serialization.
FeatureMatrix WindowToMatrix(const ContextWindow &window);

}  // namespace fsaug

#endif  // FSAUG_WINDOWING_H_
