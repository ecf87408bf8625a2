// src/render.h

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

#ifndef FSAUG_RENDER_H_
#define FSAUG_RENDER_H_

#include <iosfwd>

#include "feature-store.h"

namespace fsaug {

// Binary P5 PGM, maxval 255, min-max scaled over the matrix (constant
// matrices render mid-gray).  Rows are frames, columns are dimensions.
void WritePgm(const FeatureMatrix &matrix, std::ostream &os);

// One frame per line, values with 6 significant digits.
void WriteCsv(const FeatureMatrix &matrix, std::ostream &os);

}  // namespace fsaug

#endif  // FSAUG_RENDER_H_
