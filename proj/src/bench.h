// src/bench.h

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

#ifndef FSAUG_BENCH_H_
#define FSAUG_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "augment-core.h"
#include "windowing.h"

namespace fsaug {

struct PipelineTiming {
  std::string name;             // "copy", "mask", "mask_warp"
  uint64_t window_count = 0;
  double median_seconds = 0.0;
  double windows_per_sec = 0.0;
};

struct BenchReport {
  std::vector<PipelineTiming> pipelines;
  double mask_over_copy = 0.0;       // time(mask) / time(copy)
  double mask_warp_over_copy = 0.0;  // time(mask+warp) / time(copy)
};

// Times three pipelines over the given batches: (a) copy-only baseline,
// (b) masking-only augmentation, (c) masking plus warping.  One warm-up
// pass per pipeline, then `reps` timed repetitions; the median is reported.
BenchReport RunBench(const std::vector<WindowBatch> &batches,
                     const AugmentPolicy &policy, uint64_t master_seed,
                     uint32_t reps);

// Human-readable table plus machine lines
// "bench,<pipeline>,<windows>,<seconds>,<windows_per_sec>".
void PrintBenchReport(const BenchReport &report, std::ostream &os);

}  // namespace fsaug

#endif  // FSAUG_BENCH_H_
