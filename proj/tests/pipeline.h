// tests/pipeline.h

// Copyright 2026 The Swara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the subcommands end to end over the bundled mini-corpus, the way a
// user would chain them, writing every artifact under one directory.

#ifndef SWARA_TESTS_PIPELINE_H_
#define SWARA_TESTS_PIPELINE_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "oracles.h"
#include "swara/audio_io.h"
#include "swara/manifest.h"

namespace swara::testing {

inline std::filesystem::path MiniCorpusDir() {
  return std::filesystem::path(SWARA_DATA_DIR) / "minicorpus";
}
inline std::filesystem::path BinEdgesPath() {
  return std::filesystem::path(SWARA_DATA_DIR) / "bin_edges_v1.json";
}

struct StepResult {
  std::string name;
  int exit_code = -1;
  std::string out;
  std::string err;
};

template <typename Options, typename Fn>
StepResult RunStep(const std::string &name, Fn fn, const cli::GlobalOptions &g,
                   const Options &o) {
  std::ostringstream out, err;
  StepResult r;
  r.name = name;
  r.exit_code = fn(g, o, cli::Streams{out, err});
  r.out = out.str();
  r.err = err.str();
  return r;
}

// ingest -> tag -> describe -> codec train/encode/decode -> self-eval. Stops
// at the first failing step; every step's result is returned.
inline std::vector<StepResult> RunPipeline(const std::filesystem::path &dir,
                                           std::uint64_t seed, int jobs) {
  namespace fs = std::filesystem;
  cli::GlobalOptions g;
  g.seed = seed;
  g.jobs = jobs;
  const fs::path manifest = dir / "corpus" / "manifest.jsonl";
  fs::create_directories(manifest.parent_path());
  std::vector<StepResult> steps;
  auto ok = [&] { return steps.back().exit_code == cli::kExitOk; };

  cli::IngestOptions ingest;
  ingest.in_dir = MiniCorpusDir();
  ingest.out_manifest = manifest;
  steps.push_back(RunStep("ingest", cli::CmdIngest, g, ingest));
  if (!ok()) return steps;

  cli::TagOptions tag;
  tag.manifest = manifest;
  tag.bin_edges = BinEdgesPath();
  steps.push_back(RunStep("tag", cli::CmdTag, g, tag));
  if (!ok()) return steps;

  cli::DescribeOptions describe;
  describe.manifest = manifest;
  describe.speaker = "Akshansh";
  steps.push_back(RunStep("describe", cli::CmdDescribe, g, describe));
  if (!ok()) return steps;

  cli::CodecTrainOptions train;
  train.manifest = manifest;
  train.out = dir / "codebook.rvq";
  steps.push_back(RunStep("codec train", cli::CmdCodecTrain, g, train));
  if (!ok()) return steps;

  cli::CodecEncodeOptions encode;
  encode.manifest = manifest;
  encode.codebook = train.out;
  encode.out = dir / "codes.jsonl";
  steps.push_back(RunStep("codec encode", cli::CmdCodecEncode, g, encode));
  if (!ok()) return steps;

  cli::CodecDecodeOptions decode;
  decode.codes = encode.out;
  decode.codebook = train.out;
  decode.out = dir / "decoded.jsonl";
  decode.reference = manifest;
  steps.push_back(RunStep("codec decode", cli::CmdCodecDecode, g, decode));
  if (!ok()) return steps;

  cli::EvalOptions eval;
  eval.ref_manifest = manifest;
  eval.hyp_manifest = manifest;
  eval.out_dir = dir / "eval_self";
  steps.push_back(RunStep("eval", cli::CmdEval, g, eval));
  return steps;
}

// Writes <out_dir>/<id>.wav: each manifest record plus seeded white noise at
// `snr_db`, for evaluation with --hyp-audio-dir.
inline void WriteNoisyCopies(const std::filesystem::path &manifest,
                             const std::filesystem::path &out_dir, double snr_db,
                             std::uint64_t seed) {
  std::filesystem::create_directories(out_dir);
  const auto records = LoadManifest(manifest);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const AudioBuffer clean = ReadWav(ResolveAudio(manifest, records[i]));
    WriteWav(out_dir / (records[i].id + ".wav"), synth::AddNoise(clean, snr_db, seed + i));
  }
}

// id -> value of `column` in a CSV with a header row.
inline std::map<std::string, double> CsvColumn(const std::string &csv,
                                               const std::string &column) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    std::string cell;
    while (std::getline(h, cell, ',')) header.push_back(cell);
  }
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == column) col = i;
  std::map<std::string, double> out;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<std::string> cells;
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (col < cells.size()) out[cells[0]] = std::stod(cells[col]);
  }
  return out;
}

// Relative path -> bytes for every regular file under `root`.
inline std::map<std::string, std::string> Snapshot(const std::filesystem::path &root) {
  std::map<std::string, std::string> files;
  for (const auto &e : std::filesystem::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    files[std::filesystem::relative(e.path(), root).generic_string()] =
        std::string(std::istreambuf_iterator<char>(in), {});
  }
  return files;
}

}  // namespace swara::testing

#endif  // SWARA_TESTS_PIPELINE_H_
