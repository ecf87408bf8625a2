// src/reference-net.cc

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

#include "reference-net.h"

#include <cmath>
#include <stdexcept>

#include "rng.h"

namespace fsaug {

double Selu(double x, const SeluParams &params) {
  if (x > 0.0) return params.lambda * x;
  return params.lambda * (params.alpha * std::exp(x) - params.alpha);
}

std::pair<double, double> SelfNormCheck(uint64_t n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("SelfNormCheck: n must be >= 1");
  GaussianSampler gauss(seed);
  double sum = 0.0, sumsq = 0.0;
  for (uint64_t i = 0; i < n; ++i) {
    double y = Selu(gauss.Next());
    sum += y;
    sumsq += y * y;
  }
  double mean = sum / static_cast<double>(n);
  double var = sumsq / static_cast<double>(n) - mean * mean;
  return {mean, var < 0.0 ? 0.0 : var};
}

}  // namespace fsaug
