// src/render.cc

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

#include "render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fsaug {

void WritePgm(const FeatureMatrix &matrix, std::ostream &os) {
  auto [lo_it, hi_it] =
      std::minmax_element(matrix.values.begin(), matrix.values.end());
  double lo = *lo_it, hi = *hi_it;
  double scale = (hi > lo) ? 255.0 / (hi - lo) : 0.0;
  os << "P5\n" << matrix.num_dims << " " << matrix.num_frames << "\n255\n";
  std::vector<unsigned char> row(matrix.num_dims);
  for (uint32_t t = 0; t < matrix.num_frames; ++t) {
    const float *frame = matrix.Frame(t);
    for (uint32_t d = 0; d < matrix.num_dims; ++d) {
      double v = (scale == 0.0) ? 128.0 : (frame[d] - lo) * scale;
      row[d] = static_cast<unsigned char>(std::lround(v));
    }
    os.write(reinterpret_cast<const char *>(row.data()), row.size());
  }
}

void WriteCsv(const FeatureMatrix &matrix, std::ostream &os) {
  char buf[32];
  for (uint32_t t = 0; t < matrix.num_frames; ++t) {
    const float *frame = matrix.Frame(t);
    for (uint32_t d = 0; d < matrix.num_dims; ++d) {
      std::snprintf(buf, sizeof(buf), "%.6g", frame[d]);
      os << buf << (d + 1 < matrix.num_dims ? "," : "\n");
    }
  }
}

}  // namespace fsaug
