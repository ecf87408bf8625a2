// tools/fsaug-main.cc

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

// Corpus-processing CLI: gen, stats, normalize, augment, render, bench.
// Exit codes: 0 success, 2 usage error, 3 data/format error, 4 numeric
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "augment-core.h"
#include "bench.h"
#include "common.h"
#include "feature-store.h"
#include "reference-net.h"
#include "render.h"
#include "rng.h"
#include "warp-math.h"
#include "windowing.h"

namespace {

constexpr const char *kToolVersion = "1.0.0";

using fsaug::AugmentLevel;
using fsaug::AugmentPolicy;
using fsaug::FeatureMatrix;
using fsaug::FormatError;
using fsaug::GlobalStats;

std::vector<FeatureMatrix> ReadCorpusFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open input archive: " + path);
  return fsaug::ReadCorpus(is);
}

uint64_t WriteCorpusFile(const std::vector<FeatureMatrix> &corpus,
                         const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot open output archive: " + path);
  return fsaug::WriteCorpus(corpus, os);
}

// FNV-1a 64 over a file's bytes, as hex.
std::string FileChecksum(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot checksum file: " + path);
  uint64_t hash = 0xcbf29ce484222325ull;
  char buf[65536];
  while (is.read(buf, sizeof(buf)) || is.gcount() > 0) {
    for (std::streamsize i = 0; i < is.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ull;
    }
  }
  char hex[24];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

nlohmann::json PolicyJson(const AugmentPolicy &policy) {
  std::ostringstream os;
  fsaug::WritePolicyConfig(policy, os);
  nlohmann::json j;
  std::istringstream is(os.str());
  std::string line;
  while (std::getline(is, line)) {
    size_t eq = line.find(" = ");
    j[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return j;
}

void WriteManifest(const std::string &command, const std::string &in_path,
                   const std::string &out_path, uint64_t seed,
                   const AugmentPolicy *policy) {
  nlohmann::json manifest;
  manifest["command"] = command;
  manifest["tool_version"] = kToolVersion;
  manifest["master_seed"] = seed;
  manifest["input"] = in_path;
  manifest["output"] = out_path;
  manifest["output_checksum"] = FileChecksum(out_path);
  if (!in_path.empty()) manifest["input_checksum"] = FileChecksum(in_path);
  if (policy != nullptr) manifest["policy"] = PolicyJson(*policy);
  std::ofstream os(out_path + ".manifest.json");
  os << manifest.dump(2) << "\n";
}

struct PolicyFlags {
  std::string config_path;
  // Raw string values; only applied when the user passed the flag.
  std::string warp_w, freq_f, time_t_, n_freq_masks, n_time_masks;
  std::string mask_value, fix_corners, level;
  std::string enable_warp, enable_freq, enable_time;

  void Register(CLI::App *app) {
    app->add_option("--config", config_path, "policy config file (key = value)");
    app->add_option("--warp_w,--warp-w", warp_w, "time warp parameter W");
    app->add_option("--freq_f,--freq-f", freq_f, "frequency mask parameter F");
    app->add_option("--time_t,--time-t", time_t_, "time mask parameter T");
    app->add_option("--n_freq_masks,--n-freq-masks", n_freq_masks,
                    "number of frequency masks");
    app->add_option("--n_time_masks,--n-time-masks", n_time_masks,
                    "number of time masks");
    app->add_option("--mask_value,--mask-value", mask_value, "mask fill value");
    app->add_option("--fix_corners,--fix-corners", fix_corners,
                    "pin the four corner points (true/false)");
    app->add_option("--level", level, "frame | utterance");
    app->add_option("--enable_warp,--enable-warp", enable_warp,
                    "enable time warping (true/false)");
    app->add_option("--enable_freq,--enable-freq", enable_freq,
                    "enable frequency masking (true/false)");
    app->add_option("--enable_time,--enable-time", enable_time,
                    "enable time masking (true/false)");
  }

  AugmentPolicy Resolve() const {
    AugmentPolicy policy;
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw FormatError("cannot open policy config: " + config_path);
      policy = fsaug::ParsePolicyConfig(is, policy);
    }
    auto apply = [&policy](const char *key, const std::string &value) {
      if (!value.empty()) fsaug::ApplyPolicyKey(&policy, key, value);
    };
    apply("warp_w", warp_w);
    apply("freq_f", freq_f);
    apply("time_t", time_t_);
    apply("n_freq_masks", n_freq_masks);
    apply("n_time_masks", n_time_masks);
    apply("mask_value", mask_value);
    apply("fix_corners", fix_corners);
    apply("level", level);
    apply("enable_warp", enable_warp);
    apply("enable_freq", enable_freq);
    apply("enable_time", enable_time);
    return policy;
  }
};

int CmdGen(const std::string &out, uint32_t utts, uint32_t dims,
           const std::string &frames, uint64_t seed) {
  uint32_t lo = 0, hi = 0;
  if (std::sscanf(frames.c_str(), "%u..%u", &lo, &hi) != 2 || lo == 0 ||
      lo > hi) {
    std::cerr << "gen: --frames must be lo..hi with 1 <= lo <= hi\n";
    return 2;
  }
  if (dims < 2) {
    std::cerr << "gen: --dims must be >= 2\n";
    return 2;
  }
  auto corpus = fsaug::GenSynthetic(utts, lo, hi, dims, seed);
  uint64_t bytes = WriteCorpusFile(corpus, out);
  WriteManifest("gen", "", out, seed, nullptr);
  std::cout << "wrote " << corpus.size() << " utterances, " << bytes
            << " bytes to " << out << "\n";
  return 0;
}

int CmdStats(const std::string &in, const std::string &out) {
  auto corpus = ReadCorpusFile(in);
  GlobalStats stats = fsaug::ComputeGlobalStats(corpus);
  std::ofstream os(out);
  if (!os) throw FormatError("cannot open stats output: " + out);
  fsaug::WriteStats(stats, os);
  os.close();
  WriteManifest("stats", in, out, 0, nullptr);
  std::cout << "stats over " << stats.frame_count << " frames, D="
            << stats.per_dim_mean.size() << " -> " << out << "\n";
  return 0;
}

int CmdNormalize(const std::string &in, const std::string &stats_path,
                 const std::string &out) {
  auto corpus = ReadCorpusFile(in);
  std::ifstream ss(stats_path);
  if (!ss) throw FormatError("cannot open stats file: " + stats_path);
  GlobalStats stats = fsaug::ReadStats(ss);
  std::vector<FeatureMatrix> normalized;
  normalized.reserve(corpus.size());
  for (const FeatureMatrix &m : corpus)
    normalized.push_back(fsaug::Normalize(m, stats));
  WriteCorpusFile(normalized, out);
  WriteManifest("normalize", in, out, 0, nullptr);
  std::cout << "normalized " << normalized.size() << " utterances -> " << out
            << "\n";
  return 0;
}

int CmdAugment(const std::string &in, const std::string &out,
               const PolicyFlags &flags, uint32_t left, uint32_t right,
               uint32_t batch_size, uint64_t seed) {
  AugmentPolicy policy = flags.Resolve();
  const uint32_t tau = left + 1 + right;
  auto corpus = ReadCorpusFile(in);
  if (corpus.empty()) throw FormatError("augment: empty input corpus");

  std::vector<FeatureMatrix> records;
  if (policy.level == AugmentLevel::kUtterance) {
    AugmentPolicy mask_policy = policy;
    if (policy.enable_warp)
      throw FormatError("time warping is not supported at utterance level");
    fsaug::Rng rng{seed};
    for (const FeatureMatrix &m : corpus) {
      FeatureMatrix masked = fsaug::UtteranceSpecAugment(m, mask_policy, rng);
      for (const auto &w : fsaug::ExtractWindows(masked, left, right))
        records.push_back(fsaug::WindowToMatrix(w));
    }
  } else {
    fsaug::ValidatePolicy(policy, tau, corpus[0].num_dims);
    std::vector<fsaug::ContextWindow> windows;
    for (const FeatureMatrix &m : corpus) {
      auto extracted = fsaug::ExtractWindows(m, left, right);
      windows.insert(windows.end(),
                     std::make_move_iterator(extracted.begin()),
                     std::make_move_iterator(extracted.end()));
    }
    for (const auto &batch :
         fsaug::BatchWindows(std::move(windows), batch_size)) {
      fsaug::WindowBatch augmented = fsaug::AugmentBatch(batch, policy, seed);
      for (const auto &w : augmented.windows)
        records.push_back(fsaug::WindowToMatrix(w));
    }
  }
  uint64_t bytes = WriteCorpusFile(records, out);
  WriteManifest("augment", in, out, seed, &policy);
  std::cout << "wrote " << records.size() << " window records, " << bytes
            << " bytes to " << out << "\n";
  return 0;
}

int CmdRender(const std::string &in, const std::string &prefix,
              const std::string &format, uint32_t limit) {
  if (format != "pgm" && format != "csv" && format != "both") {
    std::cerr << "render: --format must be pgm, csv, or both\n";
    return 2;
  }
  auto corpus = ReadCorpusFile(in);
  uint32_t rendered = 0;
  for (const FeatureMatrix &m : corpus) {
    if (rendered >= limit) break;
    std::string stem = m.utterance_id;
    for (char &c : stem)
      if (c == '/' || c == '#') c = '_';
    if (format != "csv") {
      std::ofstream os(prefix + stem + ".pgm", std::ios::binary);
      if (!os) throw FormatError("cannot open render output for " + stem);
      fsaug::WritePgm(m, os);
    }
    if (format != "pgm") {
      std::ofstream os(prefix + stem + ".csv");
      if (!os) throw FormatError("cannot open render output for " + stem);
      fsaug::WriteCsv(m, os);
    }
    ++rendered;
  }
  std::cout << "rendered " << rendered << " records with prefix " << prefix
            << "\n";
  return 0;
}

int CmdBench(const std::string &in, const PolicyFlags &flags, uint64_t seed,
             uint64_t windows, uint32_t reps, uint32_t batch_size) {
  AugmentPolicy policy = flags.Resolve();
  std::vector<FeatureMatrix> corpus;
  if (in.empty()) {
    // Enough ~100-frame utterances to cover the requested window count.
    uint32_t utts = static_cast<uint32_t>(windows / 100 + 1);
    corpus = fsaug::GenSynthetic(utts, 100, 100, 80, seed);
  } else {
    corpus = ReadCorpusFile(in);
  }
  std::vector<fsaug::ContextWindow> all;
  for (const FeatureMatrix &m : corpus) {
    if (all.size() >= windows) break;
    auto extracted = fsaug::ExtractWindows(m, 20, 20);
    for (auto &w : extracted) {
      if (all.size() >= windows) break;
      all.push_back(std::move(w));
    }
  }
  if (all.size() < windows)
    throw FormatError("bench: corpus too small for requested window count");
  fsaug::ValidatePolicy(policy, all[0].num_frames, all[0].num_dims);
  auto batches = fsaug::BatchWindows(std::move(all), batch_size);
  fsaug::BenchReport report = fsaug::RunBench(batches, policy, seed, reps);
  fsaug::PrintBenchReport(report, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"fsaug: deterministic frame-level SpecAugment pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string in_path, out_path, stats_path;
  uint64_t seed = 0;
  uint32_t utts = 10, dims = 80;
  std::string frames = "50..200";
  uint32_t left = 20, right = 20, batch_size = 256;
  uint64_t bench_windows = 10000;
  uint32_t bench_reps = 5;
  std::string render_format = "pgm";
  uint32_t render_limit = 1;
  PolicyFlags policy_flags;

  CLI::App *gen = app.add_subcommand("gen", "generate a synthetic corpus");
  gen->add_option("--out", out_path, "output archive")->required();
  gen->add_option("--utts", utts, "number of utterances");
  gen->add_option("--dims", dims, "feature dimension");
  gen->add_option("--frames", frames, "frame count range lo..hi");
  gen->add_option("--seed", seed, "PRNG seed");

  CLI::App *stats = app.add_subcommand("stats", "compute global statistics");
  stats->add_option("--in", in_path, "input archive")->required();
  stats->add_option("--out", out_path, "stats sidecar output")->required();

  CLI::App *normalize =
      app.add_subcommand("normalize", "apply global normalization");
  normalize->add_option("--in", in_path, "input archive")->required();
  normalize->add_option("--stats", stats_path, "stats sidecar")->required();
  normalize->add_option("--out", out_path, "output archive")->required();

  CLI::App *augment =
      app.add_subcommand("augment", "window and augment a corpus");
  augment->add_option("--in", in_path, "input archive")->required();
  augment->add_option("--out", out_path, "output window archive")->required();
  augment->add_option("--seed", seed, "master seed");
  augment->add_option("--left", left, "left context frames");
  augment->add_option("--right", right, "right context frames");
  augment->add_option("--batch", batch_size, "mini-batch size");
  policy_flags.Register(augment);

  CLI::App *render = app.add_subcommand("render", "render records for inspection");
  render->add_option("--in", in_path, "input archive")->required();
  render->add_option("--out", out_path, "output filename prefix")->required();
  render->add_option("--format", render_format, "pgm | csv | both");
  render->add_option("--limit", render_limit, "max records to render");

  CLI::App *bench = app.add_subcommand("bench", "measure augmentation throughput");
  bench->add_option("--in", in_path, "input archive (default: synthetic)");
  bench->add_option("--windows", bench_windows, "windows per repetition");
  bench->add_option("--reps", bench_reps, "timed repetitions");
  bench->add_option("--batch", batch_size, "mini-batch size");
  bench->add_option("--seed", seed, "master seed");
  policy_flags.Register(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return CmdGen(out_path, utts, dims, frames, seed);
    if (stats->parsed()) return CmdStats(in_path, out_path);
    if (normalize->parsed())
      return CmdNormalize(in_path, stats_path, out_path);
    if (augment->parsed())
      return CmdAugment(in_path, out_path, policy_flags, left, right,
                        batch_size, seed);
    if (render->parsed())
      return CmdRender(in_path, out_path, render_format, render_limit);
    if (bench->parsed())
      return CmdBench(in_path, policy_flags, seed, bench_windows, bench_reps,
                      batch_size);
  } catch (const fsaug::NumericError &e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 4;
  } catch (const fsaug::FormatError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
