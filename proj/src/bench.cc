// src/bench.cc

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

#include "bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>

#include "common.h"

namespace fsaug {

namespace {

// Keeps the optimizer from discarding a pipeline's output.
volatile double g_bench_sink = 0.0;

double MedianSeconds(const std::function<void()> &work, uint32_t reps) {
  work();  // warm-up
  std::vector<double> times;
  times.reserve(reps);
  for (uint32_t i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    work();
    auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

BenchReport RunBench(const std::vector<WindowBatch> &batches,
                     const AugmentPolicy &policy, uint64_t master_seed,
                     uint32_t reps) {
  if (batches.empty()) throw FormatError("bench: no windows to process");
  if (reps < 1) throw FormatError("bench: reps must be >= 1");
  uint64_t window_count = 0;
  for (const WindowBatch &b : batches) window_count += b.windows.size();

  AugmentPolicy mask_only = policy;
  mask_only.enable_warp = false;
  AugmentPolicy mask_warp = policy;
  mask_warp.enable_warp = true;

  // Mirrors AugmentBatch's data movement (batch in, batch out) with no
  // transforms, so the ratios isolate transform cost.
  auto copy_pipeline = [&batches]() {
    double sink = 0.0;
    for (const WindowBatch &batch : batches) {
      WindowBatch out;
      out.batch_index = batch.batch_index;
      out.windows.reserve(batch.windows.size());
      for (const ContextWindow &w : batch.windows) out.windows.push_back(w);
      sink += out.windows[0].values[0];
    }
    g_bench_sink = sink;
  };
  auto augment_pipeline = [&batches, master_seed](const AugmentPolicy &p) {
    double sink = 0.0;
    for (const WindowBatch &batch : batches) {
      WindowBatch out = AugmentBatch(batch, p, master_seed);
      sink += out.windows[0].values[0];
    }
    g_bench_sink = sink;
  };

  BenchReport report;
  auto record = [&](const std::string &name, const std::function<void()> &work) {
    PipelineTiming timing;
    timing.name = name;
    timing.window_count = window_count;
    timing.median_seconds = MedianSeconds(work, reps);
    timing.windows_per_sec =
        static_cast<double>(window_count) / timing.median_seconds;
    report.pipelines.push_back(timing);
  };
  record("copy", copy_pipeline);
  record("mask", [&]() { augment_pipeline(mask_only); });
  record("mask_warp", [&]() { augment_pipeline(mask_warp); });

  double copy_time = report.pipelines[0].median_seconds;
  report.mask_over_copy = report.pipelines[1].median_seconds / copy_time;
  report.mask_warp_over_copy = report.pipelines[2].median_seconds / copy_time;
  return report;
}

void PrintBenchReport(const BenchReport &report, std::ostream &os) {
  char line[160];
  os << "pipeline      windows   median_s    windows/s\n";
  for (const PipelineTiming &p : report.pipelines) {
    std::snprintf(line, sizeof(line), "%-12s %8llu %10.6f %12.0f\n",
                  p.name.c_str(),
                  static_cast<unsigned long long>(p.window_count),
                  p.median_seconds, p.windows_per_sec);
    os << line;
  }
  std::snprintf(line, sizeof(line),
                "ratio mask/copy = %.3f\nratio mask_warp/copy = %.3f\n",
                report.mask_over_copy, report.mask_warp_over_copy);
  os << line;
  for (const PipelineTiming &p : report.pipelines) {
    std::snprintf(line, sizeof(line), "bench,%s,%llu,%.6f,%.0f\n",
                  p.name.c_str(),
                  static_cast<unsigned long long>(p.window_count),
                  p.median_seconds, p.windows_per_sec);
    os << line;
  }
}

}  // namespace fsaug
