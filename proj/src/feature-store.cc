// src/feature-store.cc

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

#include "feature-store.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "common.h"
#include "rng.h"

namespace fsaug {

namespace {

constexpr char kMagic[8] = {'F', 'S', 'A', 'F', 'E', 'A', 'T', '1'};

void PutU16(std::ostream &os, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF)};
  os.write(reinterpret_cast<const char *>(b), 2);
}

void PutU32(std::ostream &os, uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  os.write(reinterpret_cast<const char *>(b), 4);
}

void PutF32(std::ostream &os, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  PutU32(os, bits);
}

bool GetBytes(std::istream &is, void *dst, size_t n) {
  is.read(static_cast<char *>(dst), static_cast<std::streamsize>(n));
  return static_cast<size_t>(is.gcount()) == n;
}

uint16_t DecodeU16(const unsigned char *b) {
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

uint32_t DecodeU32(const unsigned char *b) {
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t GetU16(std::istream &is, const std::string &ctx) {
  unsigned char b[2];
  if (!GetBytes(is, b, 2)) throw FormatError("truncated stream: " + ctx);
  return DecodeU16(b);
}

uint32_t GetU32(std::istream &is, const std::string &ctx) {
  unsigned char b[4];
  if (!GetBytes(is, b, 4)) throw FormatError("truncated stream: " + ctx);
  return DecodeU32(b);
}

}  // namespace

uint64_t WriteCorpus(const std::vector<FeatureMatrix> &utterances,
                     std::ostream &os) {
  os.write(kMagic, 8);
  PutU32(os, static_cast<uint32_t>(utterances.size()));
  uint64_t bytes = 12;
  for (const FeatureMatrix &m : utterances) {
    if (m.num_frames == 0 || m.num_dims == 0)
      throw FormatError("utterance '" + m.utterance_id + "' has zero T or D");
    if (m.values.size() !=
        static_cast<size_t>(m.num_frames) * m.num_dims)
      throw FormatError("utterance '" + m.utterance_id +
                        "' value count does not match T*D");
    for (size_t i = 0; i < m.values.size(); ++i) {
      if (!std::isfinite(m.values[i])) {
        std::ostringstream msg;
        msg << "non-finite value in utterance '" << m.utterance_id
            << "' at frame " << (i / m.num_dims) << " dim " << (i % m.num_dims);
        throw FormatError(msg.str());
      }
    }
    if (m.utterance_id.size() > std::numeric_limits<uint16_t>::max())
      throw FormatError("utterance id too long: " + m.utterance_id);
    PutU16(os, static_cast<uint16_t>(m.utterance_id.size()));
    os.write(m.utterance_id.data(),
             static_cast<std::streamsize>(m.utterance_id.size()));
    PutU32(os, m.num_frames);
    PutU32(os, m.num_dims);
    for (float v : m.values) PutF32(os, v);
    bytes += 2 + m.utterance_id.size() + 8 + 4 * m.values.size();
  }
  if (!os) throw FormatError("write failure on output sink");
  return bytes;
}

std::vector<FeatureMatrix> ReadCorpus(std::istream &is) {
  char magic[8];
  if (!GetBytes(is, magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
    throw FormatError("bad magic: not an FSA1 archive");
  uint32_t count = GetU32(is, "utterance count");
  std::vector<FeatureMatrix> corpus;
  corpus.reserve(count);
  for (uint32_t u = 0; u < count; ++u) {
    std::string ctx = "utterance #" + std::to_string(u);
    uint16_t id_len = GetU16(is, ctx + " id length");
    FeatureMatrix m;
    m.utterance_id.resize(id_len);
    if (id_len > 0 && !GetBytes(is, m.utterance_id.data(), id_len))
      throw FormatError("truncated stream: " + ctx + " id");
    ctx = "utterance '" + m.utterance_id + "'";
    m.num_frames = GetU32(is, ctx + " frame count");
    m.num_dims = GetU32(is, ctx + " dim count");
    if (m.num_frames == 0 || m.num_dims == 0)
      throw FormatError(ctx + " declares zero T or D");
    size_t n = static_cast<size_t>(m.num_frames) * m.num_dims;
    std::vector<unsigned char> raw(n * 4);
    if (!GetBytes(is, raw.data(), raw.size()))
      throw FormatError("truncated stream: values of " + ctx);
    m.values.resize(n);
    for (size_t i = 0; i < n; ++i) {
      uint32_t bits = DecodeU32(raw.data() + 4 * i);
      std::memcpy(&m.values[i], &bits, 4);
    }
    corpus.push_back(std::move(m));
  }
  return corpus;
}

GlobalStats ComputeGlobalStats(const std::vector<FeatureMatrix> &corpus) {
  if (corpus.empty()) throw FormatError("cannot compute stats of empty corpus");
  uint32_t dims = corpus[0].num_dims;
  std::vector<double> sum(dims, 0.0), sumsq(dims, 0.0);
  uint64_t frames = 0;
  for (const FeatureMatrix &m : corpus) {
    if (m.num_dims != dims)
      throw FormatError("mixed feature dimension: utterance '" +
                        m.utterance_id + "' has D=" +
                        std::to_string(m.num_dims) + ", expected " +
                        std::to_string(dims));
    for (uint32_t t = 0; t < m.num_frames; ++t) {
      const float *frame = m.Frame(t);
      for (uint32_t d = 0; d < dims; ++d) {
        double v = frame[d];
        sum[d] += v;
        sumsq[d] += v * v;
      }
    }
    frames += m.num_frames;
  }
  if (frames == 0) throw FormatError("corpus contains no frames");
  GlobalStats stats;
  stats.frame_count = frames;
  stats.per_dim_mean.resize(dims);
  stats.per_dim_var.resize(dims);
  double n = static_cast<double>(frames);
  for (uint32_t d = 0; d < dims; ++d) {
    double mean = sum[d] / n;
    stats.per_dim_mean[d] = mean;
    stats.per_dim_var[d] = std::max(0.0, sumsq[d] / n - mean * mean);
  }
  return stats;
}

FeatureMatrix Normalize(const FeatureMatrix &matrix, const GlobalStats &stats) {
  if (stats.per_dim_mean.size() != matrix.num_dims)
    throw FormatError("stats dimension " +
                      std::to_string(stats.per_dim_mean.size()) +
                      " does not match corpus D=" +
                      std::to_string(matrix.num_dims));
  FeatureMatrix out = matrix;
  std::vector<double> inv_std(matrix.num_dims);
  for (uint32_t d = 0; d < matrix.num_dims; ++d)
    inv_std[d] = 1.0 / std::sqrt(std::max(stats.per_dim_var[d], kVarianceFloor));
  for (uint32_t t = 0; t < matrix.num_frames; ++t) {
    float *frame = out.Frame(t);
    for (uint32_t d = 0; d < matrix.num_dims; ++d) {
      frame[d] = static_cast<float>(
          (static_cast<double>(frame[d]) - stats.per_dim_mean[d]) * inv_std[d]);
    }
  }
  return out;
}

std::vector<FeatureMatrix> GenSynthetic(uint32_t num_utterances,
                                        uint32_t frames_min,
                                        uint32_t frames_max, uint32_t dims,
                                        uint64_t seed) {
  if (dims < 2) throw FormatError("GenSynthetic requires D >= 2");
  if (frames_min == 0 || frames_min > frames_max)
    throw FormatError("GenSynthetic requires a nonempty frame range");
  GaussianSampler gauss(seed);
  std::vector<FeatureMatrix> corpus;
  corpus.reserve(num_utterances);
  for (uint32_t u = 0; u < num_utterances; ++u) {
    FeatureMatrix m;
    char id[32];
    std::snprintf(id, sizeof(id), "utt%05u", u);
    m.utterance_id = id;
    m.num_frames = static_cast<uint32_t>(
        UniformInt(gauss.rng, frames_min, frames_max));
    m.num_dims = dims;
    m.values.resize(static_cast<size_t>(m.num_frames) * dims);
    for (float &v : m.values) v = static_cast<float>(gauss.Next());
    corpus.push_back(std::move(m));
  }
  return corpus;
}

void WriteStats(const GlobalStats &stats, std::ostream &os) {
  os << "D=" << stats.per_dim_mean.size() << " frames=" << stats.frame_count
     << "\n";
  char line[128];
  for (size_t d = 0; d < stats.per_dim_mean.size(); ++d) {
    std::snprintf(line, sizeof(line), "%zu,%.9g,%.9g\n", d,
                  stats.per_dim_mean[d], stats.per_dim_var[d]);
    os << line;
  }
}

GlobalStats ReadStats(std::istream &is) {
  std::string header;
  if (!std::getline(is, header))
    throw FormatError("empty stats file");
  size_t dims = 0;
  unsigned long long frames = 0;
  if (std::sscanf(header.c_str(), "D=%zu frames=%llu", &dims, &frames) != 2)
    throw FormatError("bad stats header: " + header);
  GlobalStats stats;
  stats.frame_count = frames;
  stats.per_dim_mean.resize(dims);
  stats.per_dim_var.resize(dims);
  std::string line;
  size_t seen = 0;
  while (seen < dims && std::getline(is, line)) {
    size_t d;
    double mean, var;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &d, &mean, &var) != 3 ||
        d >= dims)
      throw FormatError("bad stats line: " + line);
    stats.per_dim_mean[d] = mean;
    stats.per_dim_var[d] = var;
    ++seen;
  }
  if (seen != dims)
    throw FormatError("stats file ends before all dimensions listed");
  return stats;
}

}  // namespace fsaug
