// src/augment-core.cc

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

#include "augment-core.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "common.h"
#include "warp-math.h"

namespace fsaug {

namespace {

std::string Trim(const std::string &s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool ParseBool(const std::string &value, const std::string &key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw FormatError("policy key '" + key + "': expected true/false, got '" +
                    value + "'");
}

uint32_t ParseCount(const std::string &value, const std::string &key) {
  try {
    long long v = std::stoll(value);
    if (v < 0) throw std::out_of_range("negative");
    return static_cast<uint32_t>(v);
  } catch (const std::exception &) {
    throw FormatError("policy key '" + key + "': expected a count, got '" +
                      value + "'");
  }
}

}  // namespace

void ValidatePolicy(const AugmentPolicy &policy, uint32_t tau, uint32_t dims) {
  std::vector<std::string> problems;
  if (policy.freq_f > dims)
    problems.push_back("freq_F exceeds D (" + std::to_string(policy.freq_f) +
                       " > " + std::to_string(dims) + ")");
  if (policy.time_t > tau)
    problems.push_back("time_T exceeds tau (" + std::to_string(policy.time_t) +
                       " > " + std::to_string(tau) + ")");
  if (policy.level == AugmentLevel::kFrame && policy.enable_warp) {
    if (dims % 2 != 0) problems.push_back("D must be even for time warping");
    if (tau < 3) problems.push_back("tau must be >= 3 for time warping");
  }
  if (!problems.empty()) {
    std::string msg = "invalid augmentation policy:";
    for (const std::string &p : problems) msg += " " + p + ";";
    throw FormatError(msg);
  }
}

std::vector<uint32_t> WarpStartCandidates(uint32_t tau, uint32_t warp_w) {
  const int64_t half = tau / 2;
  const int64_t w = warp_w;
  const int64_t last = static_cast<int64_t>(tau) - 1;
  std::vector<uint32_t> out;
  // Left segment [W, floor(tau/2)-W], closed on both ends.
  for (int64_t v = w; v <= half - w; ++v)
    if (v >= 0 && v <= last) out.push_back(static_cast<uint32_t>(v));
  // Right segment (floor(tau/2)+W, tau-W], open on the left.
  for (int64_t v = half + w + 1; v <= static_cast<int64_t>(tau) - w; ++v)
    if (v >= 0 && v <= last && (out.empty() || v > out.back()))
      out.push_back(static_cast<uint32_t>(v));
  return out;
}

SampledTransform SampleTransform(const AugmentPolicy &policy, Rng &rng,
                                 uint32_t tau, uint32_t dims) {
  SampledTransform sampled;
  if (policy.enable_warp) {
    std::vector<uint32_t> candidates = WarpStartCandidates(tau, policy.warp_w);
    if (!candidates.empty()) {
      uint32_t w0 = candidates[static_cast<size_t>(
          UniformInt(rng, 0, static_cast<int64_t>(candidates.size()) - 1))];
      int32_t shift = static_cast<int32_t>(
          UniformInt(rng, -static_cast<int64_t>(policy.warp_w),
                     static_cast<int64_t>(policy.warp_w)));
      if (shift != 0) sampled.warp = WarpSpec{w0, shift};
    }
  }
  if (policy.enable_freq) {
    for (uint32_t i = 0; i < policy.n_freq_masks; ++i) {
      uint32_t f = static_cast<uint32_t>(UniformInt(rng, 0, policy.freq_f));
      uint32_t f0 = static_cast<uint32_t>(
          UniformInt(rng, 0, static_cast<int64_t>(dims) - f));
      sampled.freq_masks.push_back(MaskSpec{f0, f});
    }
  }
  if (policy.enable_time) {
    for (uint32_t i = 0; i < policy.n_time_masks; ++i) {
      uint32_t t = static_cast<uint32_t>(UniformInt(rng, 0, policy.time_t));
      uint32_t t0 = static_cast<uint32_t>(
          UniformInt(rng, 0, static_cast<int64_t>(tau) - t));
      sampled.time_masks.push_back(MaskSpec{t0, t});
    }
  }
  return sampled;
}

void ApplyFreqMask(ContextWindow *window, uint32_t f0, uint32_t f,
                   float value) {
  if (f0 + f > window->num_dims)
    throw FormatError("frequency mask [" + std::to_string(f0) + ", " +
                      std::to_string(f0 + f) + ") exceeds D=" +
                      std::to_string(window->num_dims));
  for (uint32_t t = 0; t < window->num_frames; ++t) {
    float *row = window->Row(t);
    std::fill(row + f0, row + f0 + f, value);
  }
}

void ApplyTimeMask(ContextWindow *window, uint32_t t0, uint32_t t,
                   float value) {
  if (t0 + t > window->num_frames)
    throw FormatError("time mask [" + std::to_string(t0) + ", " +
                      std::to_string(t0 + t) + ") exceeds tau=" +
                      std::to_string(window->num_frames));
  std::fill(window->Row(t0), window->Row(t0) + static_cast<size_t>(t) * window->num_dims,
            value);
}

ContextWindow ApplyTimeWarp(const ContextWindow &window, uint32_t w0,
                            int32_t shift, bool fix_corners) {
  const uint32_t tau = window.num_frames;
  const uint32_t dims = window.num_dims;
  if (dims % 2 != 0)
    throw FormatError("time warp requires an even feature dimension");
  if (w0 >= tau) throw FormatError("warp anchor w0 out of range");
  const uint32_t half_dims = dims / 2;
  const int64_t dest = std::clamp<int64_t>(
      static_cast<int64_t>(w0) + shift, 0, static_cast<int64_t>(tau) - 1);

  std::vector<uint32_t> pinned = {tau / 2};
  if (fix_corners) {
    pinned.push_back(0);
    pinned.push_back(tau - 1);
  }
  bool collides = dest == static_cast<int64_t>(w0);
  for (uint32_t p : pinned) collides = collides || dest == p;
  if (collides) return window;

  Image image(static_cast<int>(tau), 2, static_cast<int>(half_dims));
  for (uint32_t t = 0; t < tau; ++t) {
    const float *row = window.Row(t);
    for (uint32_t ch = 0; ch < half_dims; ++ch) {
      image.At(static_cast<int>(t), 0, static_cast<int>(ch)) = row[ch];
      image.At(static_cast<int>(t), 1, static_cast<int>(ch)) =
          row[half_dims + ch];
    }
  }

  std::vector<Point2> source, target;
  for (double col : {0.0, 1.0}) {
    source.push_back(Point2{static_cast<double>(w0), col});
    target.push_back(Point2{static_cast<double>(dest), col});
  }
  for (uint32_t p : pinned) {
    for (double col : {0.0, 1.0}) {
      source.push_back(Point2{static_cast<double>(p), col});
      target.push_back(Point2{static_cast<double>(p), col});
    }
  }

  Image warped = SparseImageWarp(image, source, target, 0.0);

  ContextWindow out = window;
  for (uint32_t t = 0; t < tau; ++t) {
    float *row = out.Row(t);
    for (uint32_t ch = 0; ch < half_dims; ++ch) {
      row[ch] = static_cast<float>(
          warped.At(static_cast<int>(t), 0, static_cast<int>(ch)));
      row[half_dims + ch] = static_cast<float>(
          warped.At(static_cast<int>(t), 1, static_cast<int>(ch)));
    }
  }
  return out;
}

ContextWindow ApplyTransform(const ContextWindow &window,
                             const SampledTransform &sampled,
                             const AugmentPolicy &policy) {
  ContextWindow out =
      sampled.warp ? ApplyTimeWarp(window, sampled.warp->start,
                                   sampled.warp->shift, policy.fix_corners)
                   : window;
  for (const MaskSpec &m : sampled.freq_masks)
    ApplyFreqMask(&out, m.start, m.size, policy.mask_value);
  for (const MaskSpec &m : sampled.time_masks)
    ApplyTimeMask(&out, m.start, m.size, policy.mask_value);
  return out;
}

WindowBatch AugmentBatch(const WindowBatch &batch, const AugmentPolicy &policy,
                         uint64_t master_seed) {
  if (batch.windows.empty()) throw FormatError("cannot augment an empty batch");
  const uint32_t tau = batch.windows[0].num_frames;
  const uint32_t dims = batch.windows[0].num_dims;
  Rng rng{BatchRngState(master_seed, batch.batch_index)};
  SampledTransform sampled = SampleTransform(policy, rng, tau, dims);
  WindowBatch out;
  out.batch_index = batch.batch_index;
  out.windows.reserve(batch.windows.size());
  for (const ContextWindow &w : batch.windows)
    out.windows.push_back(ApplyTransform(w, sampled, policy));
  return out;
}

FeatureMatrix UtteranceSpecAugment(const FeatureMatrix &matrix,
                                   const AugmentPolicy &policy, Rng &rng) {
  if (policy.enable_warp)
    throw FormatError("time warping is not supported at utterance level");
  ValidatePolicy(policy, matrix.num_frames, matrix.num_dims);
  SampledTransform sampled =
      SampleTransform(policy, rng, matrix.num_frames, matrix.num_dims);
  FeatureMatrix out = matrix;
  for (const MaskSpec &m : sampled.freq_masks) {
    for (uint32_t t = 0; t < out.num_frames; ++t) {
      float *frame = out.Frame(t);
      std::fill(frame + m.start, frame + m.start + m.size, policy.mask_value);
    }
  }
  for (const MaskSpec &m : sampled.time_masks) {
    std::fill(out.Frame(m.start),
              out.Frame(m.start) + static_cast<size_t>(m.size) * out.num_dims,
              policy.mask_value);
  }
  return out;
}

void ApplyPolicyKey(AugmentPolicy *policy, const std::string &key,
                    const std::string &value) {
  if (key == "warp_w") policy->warp_w = ParseCount(value, key);
  else if (key == "freq_f") policy->freq_f = ParseCount(value, key);
  else if (key == "time_t") policy->time_t = ParseCount(value, key);
  else if (key == "n_freq_masks") policy->n_freq_masks = ParseCount(value, key);
  else if (key == "n_time_masks") policy->n_time_masks = ParseCount(value, key);
  else if (key == "mask_value") policy->mask_value = std::stof(value);
  else if (key == "fix_corners") policy->fix_corners = ParseBool(value, key);
  else if (key == "enable_warp") policy->enable_warp = ParseBool(value, key);
  else if (key == "enable_freq") policy->enable_freq = ParseBool(value, key);
  else if (key == "enable_time") policy->enable_time = ParseBool(value, key);
  else if (key == "level") {
    if (value == "frame") policy->level = AugmentLevel::kFrame;
    else if (value == "utterance") policy->level = AugmentLevel::kUtterance;
    else throw FormatError("policy key 'level': expected frame or utterance");
  } else {
    throw FormatError("unknown policy key '" + key + "'");
  }
}

AugmentPolicy ParsePolicyConfig(std::istream &is, AugmentPolicy base) {
  std::string line;
  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("bad policy line (expected key = value): " + line);
    ApplyPolicyKey(&base, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)));
  }
  return base;
}

void WritePolicyConfig(const AugmentPolicy &policy, std::ostream &os) {
  os << "warp_w = " << policy.warp_w << "\n"
     << "freq_f = " << policy.freq_f << "\n"
     << "time_t = " << policy.time_t << "\n"
     << "n_freq_masks = " << policy.n_freq_masks << "\n"
     << "n_time_masks = " << policy.n_time_masks << "\n"
     << "mask_value = " << policy.mask_value << "\n"
     << "fix_corners = " << (policy.fix_corners ? "true" : "false") << "\n"
     << "enable_warp = " << (policy.enable_warp ? "true" : "false") << "\n"
     << "enable_freq = " << (policy.enable_freq ? "true" : "false") << "\n"
     << "enable_time = " << (policy.enable_time ? "true" : "false") << "\n"
     << "level = "
     << (policy.level == AugmentLevel::kFrame ? "frame" : "utterance") << "\n";
}

}  // namespace fsaug
