// src/windowing.cc

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

#include "windowing.h"

#include <algorithm>
#include <cstring>

#include "common.h"

namespace fsaug {

std::vector<ContextWindow> ExtractWindows(const FeatureMatrix &matrix,
                                          uint32_t left, uint32_t right) {
  if (matrix.num_frames == 0)
    throw FormatError("cannot window an empty utterance");
  const uint32_t tau = left + 1 + right;
  const uint32_t dims = matrix.num_dims;
  const int64_t last = static_cast<int64_t>(matrix.num_frames) - 1;
  std::vector<ContextWindow> windows(matrix.num_frames);
  for (uint32_t t = 0; t < matrix.num_frames; ++t) {
    ContextWindow &w = windows[t];
    w.source_utterance = matrix.utterance_id;
    w.source_frame = t;
    w.num_frames = tau;
    w.num_dims = dims;
    w.center_index = left;
    w.values.resize(static_cast<size_t>(tau) * dims);
    for (uint32_t r = 0; r < tau; ++r) {
      int64_t src = static_cast<int64_t>(t) - left + r;
      src = std::clamp<int64_t>(src, 0, last);
      std::memcpy(w.Row(r), matrix.Frame(static_cast<uint32_t>(src)),
                  sizeof(float) * dims);
    }
  }
  return windows;
}

std::vector<WindowBatch> BatchWindows(std::vector<ContextWindow> windows,
                                      uint32_t batch_size) {
  if (batch_size == 0) throw FormatError("batch_size must be >= 1");
  std::vector<WindowBatch> batches;
  batches.reserve((windows.size() + batch_size - 1) / batch_size);
  for (size_t start = 0; start < windows.size(); start += batch_size) {
    WindowBatch batch;
    batch.batch_index = static_cast<uint32_t>(batches.size());
    size_t end = std::min(windows.size(), start + batch_size);
    batch.windows.assign(std::make_move_iterator(windows.begin() + start),
                         std::make_move_iterator(windows.begin() + end));
    batches.push_back(std::move(batch));
  }
  return batches;
}

FeatureMatrix WindowToMatrix(const ContextWindow &window) {
  FeatureMatrix m;
  m.utterance_id =
      window.source_utterance + "#" + std::to_string(window.source_frame);
  m.num_frames = window.num_frames;
  m.num_dims = window.num_dims;
  m.values = window.values;
  return m;
}

}  // namespace fsaug
