// src/reference-net.h

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

#ifndef FSAUG_REFERENCE_NET_H_
#define FSAUG_REFERENCE_NET_H_

#include <cstdint>
#include <utility>

namespace fsaug {

struct SeluParams {
  double alpha = 1.6733;
  double lambda = 1.0507;
};

// selu(x) = lambda * x for x > 0, lambda * (alpha * e^x - alpha) otherwise.
double Selu(double x, const SeluParams &params = {});

// Applies Selu to n standard-normal draws and returns (sample mean,
// population variance).  Near (0, 1) by the self-normalization fixed point.
std::pair<double, double> SelfNormCheck(uint64_t n, uint64_t seed);

}  // namespace fsaug

#endif  // FSAUG_REFERENCE_NET_H_
