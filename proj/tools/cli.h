// tools/cli.h

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

// Subcommands of the `swara` tool as plain functions, so tests can drive
// them without a process boundary. Each returns the process exit code:
// 0 success, 1 data error, 2 usage error.

#ifndef SWARA_TOOLS_CLI_H_
#define SWARA_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace swara::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  int jobs = 1;
  std::uint64_t seed = 0;
  bool strict = false;  // pairing diagnostics become failures
};

struct Streams {
  std::ostream &out;
  std::ostream &err;
};

struct IngestOptions {
  std::filesystem::path in_dir;
  std::filesystem::path out_manifest;  // audio goes to <dir of manifest>/audio
  int target_rate = 44100;
  double target_peak = 0.95;
};
int CmdIngest(const GlobalOptions &g, const IngestOptions &o, Streams io);

struct TagOptions {
  std::filesystem::path manifest;
  std::filesystem::path bin_edges;
  std::filesystem::path out;  // empty: rewrite `manifest`
};
int CmdTag(const GlobalOptions &g, const TagOptions &o, Streams io);

struct DescribeOptions {
  std::filesystem::path manifest;
  std::filesystem::path template_path;  // empty: built-in template
  std::optional<std::string> speaker;   // single-speaker mode
  std::filesystem::path out;            // empty: rewrite `manifest`
};
int CmdDescribe(const GlobalOptions &g, const DescribeOptions &o, Streams io);

enum class TranslitMode { kToLatin, kToDevanagari, kSegment, kRoundTrip };
struct TranslitOptions {
  TranslitMode mode = TranslitMode::kToLatin;
  std::optional<std::string> text;
  std::filesystem::path file;    // used when text is unset
  std::filesystem::path scheme;  // empty: built-in scheme
  std::filesystem::path out;     // empty: standard output
};
int CmdTranslit(const GlobalOptions &g, const TranslitOptions &o, Streams io);

struct CodecTrainOptions {
  std::filesystem::path manifest;
  std::filesystem::path out;
  int levels = 4;
  int codebook_size = 64;
  int max_iters = 100;
};
int CmdCodecTrain(const GlobalOptions &g, const CodecTrainOptions &o, Streams io);

struct CodecEncodeOptions {
  std::filesystem::path manifest;
  std::filesystem::path codebook;
  std::filesystem::path out;  // JSON lines: id, dim, levels, codes
};
int CmdCodecEncode(const GlobalOptions &g, const CodecEncodeOptions &o,
                   Streams io);

struct CodecDecodeOptions {
  std::filesystem::path codes;
  std::filesystem::path codebook;
  std::filesystem::path out;        // optional JSON lines of decoded frames
  std::filesystem::path reference;  // optional manifest for MCD
  int levels = -1;                  // levels used for decoding; -1 = all
};
int CmdCodecDecode(const GlobalOptions &g, const CodecDecodeOptions &o,
                   Streams io);

struct EvalOptions {
  std::filesystem::path ref_manifest;
  std::filesystem::path hyp_manifest;   // either this
  std::filesystem::path hyp_audio_dir;  // or <dir>/<id>.wav with ref text
  std::filesystem::path out_dir;
  std::filesystem::path baseline;       // optional report.json to compare
};
int CmdEval(const GlobalOptions &g, const EvalOptions &o, Streams io);

/// Training recipe as pretty JSON for stage accent, hindi or emotion.
/// Throws kUnknownStage.
std::string RecipeJson(const std::string &stage);
struct RecipeOptions {
  std::string stage;
  std::filesystem::path out;  // empty: standard output
};
int CmdRecipe(const GlobalOptions &g, const RecipeOptions &o, Streams io);

}  // namespace swara::cli

#endif  // SWARA_TOOLS_CLI_H_
