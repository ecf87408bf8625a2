// src/augment-core.h

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

#ifndef FSAUG_AUGMENT_CORE_H_
#define FSAUG_AUGMENT_CORE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "feature-store.h"
#include "rng.h"
#include "windowing.h"

namespace fsaug {

enum class AugmentLevel { kFrame, kUtterance };

/// Static augmentation configuration.  Defaults: W=5, one frequency mask
/// with F=15, one time mask with T=10, mask value 0, frame level.
struct AugmentPolicy {
  uint32_t warp_w = 5;
  uint32_t freq_f = 15;
  uint32_t time_t = 10;
  uint32_t n_freq_masks = 1;
  uint32_t n_time_masks = 1;
  float mask_value = 0.0f;
  bool fix_corners = false;
  bool enable_warp = true;
  bool enable_freq = true;
  bool enable_time = true;
  AugmentLevel level = AugmentLevel::kFrame;
};

struct MaskSpec {
  uint32_t start = 0;  // f0 or t0
  uint32_t size = 0;   // f or t

  bool operator==(const MaskSpec &) const = default;
};

struct WarpSpec {
  uint32_t start = 0;  // w0
  int32_t shift = 0;   // w

  bool operator==(const WarpSpec &) const = default;
};

/// One mini-batch's concrete sampled parameters, shared by every window.
struct SampledTransform {
  std::optional<WarpSpec> warp;
  std::vector<MaskSpec> freq_masks;
  std::vector<MaskSpec> time_masks;

  bool operator==(const SampledTransform &) const = default;
};

// Checks policy bounds against a concrete (tau, D); every violated bound is
// named individually in the error message.
void ValidatePolicy(const AugmentPolicy &policy, uint32_t tau, uint32_t dims);

// Admissible warp anchors: {W..floor(tau/2)-W} union {floor(tau/2)+W+1..tau-W},
// intersected with the valid row range [0, tau-1].  May be empty.
std::vector<uint32_t> WarpStartCandidates(uint32_t tau, uint32_t warp_w);

// Draws, in fixed order: w0, w; then (f, f0) per frequency mask; then
// (t, t0) per time mask.  The warp entry is omitted when warping is
// disabled, no candidate w0 exists, or w == 0.
SampledTransform SampleTransform(const AugmentPolicy &policy, Rng &rng,
                                 uint32_t tau, uint32_t dims);

// Masks are in-place and bit-exact: masked cells get `value`, others are
// untouched.
void ApplyFreqMask(ContextWindow *window, uint32_t f0, uint32_t f, float value);
void ApplyTimeMask(ContextWindow *window, uint32_t t0, uint32_t t, float value);

// Moves rows [w0] -> [w0 + w] via the [tau, 2, D/2] reshape and sparse image
// warping, with the center row pinned (and the four corners too when
// fix_corners is set).  w0 + w is clamped to [0, tau-1]; a warp whose
// destination row collides with a pinned row degenerates to identity so the
// center-frame guarantee always holds.
ContextWindow ApplyTimeWarp(const ContextWindow &window, uint32_t w0,
                            int32_t shift, bool fix_corners);

// Warp (if present), then frequency masks, then time masks.
ContextWindow ApplyTransform(const ContextWindow &window,
                             const SampledTransform &sampled,
                             const AugmentPolicy &policy);

// Samples ONE transform from the batch-derived rng state and applies it to
// every window; order preserved.
WindowBatch AugmentBatch(const WindowBatch &batch, const AugmentPolicy &policy,
                         uint64_t master_seed);

// Utterance-level comparator: masks sampled with tau replaced by the
// utterance length, applied once to the whole matrix.  Warping is rejected
// here (it would invalidate frame alignments).
FeatureMatrix UtteranceSpecAugment(const FeatureMatrix &matrix,
                                   const AugmentPolicy &policy, Rng &rng);

// key = value policy config (keys: warp_w, freq_f, time_t, n_freq_masks,
// n_time_masks, mask_value, fix_corners, level, enable_warp, enable_freq,
// enable_time).  Blank lines and '#' comments allowed.
AugmentPolicy ParsePolicyConfig(std::istream &is, AugmentPolicy base = {});
void ApplyPolicyKey(AugmentPolicy *policy, const std::string &key,
                    const std::string &value);
void WritePolicyConfig(const AugmentPolicy &policy, std::ostream &os);

}  // namespace fsaug

#endif  // FSAUG_AUGMENT_CORE_H_
