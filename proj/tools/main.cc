// tools/main.cc

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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.h"

int main(int argc, char **argv) {
  using namespace swara::cli;
  CLI::App app{"swara: speech corpus curation and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--jobs", global.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for every randomized step");
  app.add_flag("--strict", global.strict, "Treat pairing diagnostics as failures");

  IngestOptions ingest;
  auto *ingest_cmd = app.add_subcommand("ingest", "Resample, normalize and index WAVs");
  ingest_cmd->add_option("--in", ingest.in_dir, "Directory of WAV + sidecar files")
      ->required();
  ingest_cmd->add_option("--out", ingest.out_manifest, "Manifest to write")->required();
  ingest_cmd->add_option("--rate", ingest.target_rate, "Target sample rate");
  ingest_cmd->add_option("--peak", ingest.target_peak, "Target peak amplitude");

  TagOptions tag;
  auto *tag_cmd = app.add_subcommand("tag", "Compute feature tags and bin labels");
  tag_cmd->add_option("--manifest", tag.manifest)->required();
  tag_cmd->add_option("--bin-edges", tag.bin_edges)->required();
  tag_cmd->add_option("--out", tag.out, "Output manifest (default: in place)");

  DescribeOptions describe;
  std::string speaker;
  auto *describe_cmd = app.add_subcommand("describe", "Render text descriptions");
  describe_cmd->add_option("--manifest", describe.manifest)->required();
  describe_cmd->add_option("--template", describe.template_path);
  auto *speaker_opt = describe_cmd->add_option(
      "--speaker-name,--speaker_name", speaker, "Single-speaker mode: name used for every record");
  describe_cmd->add_option("--out", describe.out);

  TranslitOptions translit;
  std::string text;
  auto *translit_cmd = app.add_subcommand("translit", "Transliterate or segment text");
  auto *text_opt = translit_cmd->add_option("text", text, "Input text");
  translit_cmd->add_option("--file", translit.file, "Read input from a file");
  translit_cmd->add_option("--scheme", translit.scheme, "Scheme JSON file");
  translit_cmd->add_option("--out", translit.out);
  auto *to_latin = translit_cmd->add_flag("--to-latin");
  auto *to_deva = translit_cmd->add_flag("--to-devanagari");
  auto *segment = translit_cmd->add_flag("--segment");
  auto *round_trip = translit_cmd->add_flag("--round-trip");
  to_latin->excludes(to_deva)->excludes(segment)->excludes(round_trip);
  to_deva->excludes(segment)->excludes(round_trip);
  segment->excludes(round_trip);

  auto *codec_cmd = app.add_subcommand("codec", "Residual vector quantizer");
  codec_cmd->require_subcommand(1);
  CodecTrainOptions train;
  auto *train_cmd = codec_cmd->add_subcommand("train", "Train on manifest log-mel frames");
  train_cmd->add_option("--manifest", train.manifest)->required();
  train_cmd->add_option("--out", train.out)->required();
  train_cmd->add_option("--levels", train.levels);
  train_cmd->add_option("--k", train.codebook_size);
  train_cmd->add_option("--max-iters", train.max_iters);
  CodecEncodeOptions encode;
  auto *encode_cmd = codec_cmd->add_subcommand("encode", "Encode manifest audio to codes");
  encode_cmd->add_option("--manifest", encode.manifest)->required();
  encode_cmd->add_option("--codebook", encode.codebook)->required();
  encode_cmd->add_option("--out", encode.out)->required();
  CodecDecodeOptions decode;
  auto *decode_cmd = codec_cmd->add_subcommand("decode", "Decode codes to log-mel frames");
  decode_cmd->add_option("--codes", decode.codes)->required();
  decode_cmd->add_option("--codebook", decode.codebook)->required();
  decode_cmd->add_option("--out", decode.out);
  decode_cmd->add_option("--reference", decode.reference,
                         "Manifest of the encoded audio; prints MCD");
  decode_cmd->add_option("--levels", decode.levels, "Levels used (default all)");

  EvalOptions eval;
  auto *eval_cmd = app.add_subcommand("eval", "Score hypotheses against references");
  eval_cmd->add_option("--ref", eval.ref_manifest)->required();
  eval_cmd->add_option("--hyp", eval.hyp_manifest);
  eval_cmd->add_option("--hyp-audio-dir", eval.hyp_audio_dir);
  eval_cmd->add_option("--out-dir", eval.out_dir)->required();
  eval_cmd->add_option("--baseline", eval.baseline, "Baseline report.json for WER comparison");

  RecipeOptions recipe;
  auto *recipe_cmd = app.add_subcommand("recipe", "Emit a fine-tuning recipe");
  recipe_cmd->add_option("--stage", recipe.stage, "accent, hindi or emotion")->required();
  recipe_cmd->add_option("--out", recipe.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Streams io{std::cout, std::cerr};
  if (*ingest_cmd) return CmdIngest(global, ingest, io);
  if (*tag_cmd) return CmdTag(global, tag, io);
  if (*describe_cmd) {
    if (*speaker_opt) describe.speaker = speaker;
    return CmdDescribe(global, describe, io);
  }
  if (*translit_cmd) {
    if (*text_opt) translit.text = text;
    if (*to_deva) translit.mode = TranslitMode::kToDevanagari;
    if (*segment) translit.mode = TranslitMode::kSegment;
    if (*round_trip) translit.mode = TranslitMode::kRoundTrip;
    return CmdTranslit(global, translit, io);
  }
  if (*train_cmd) return CmdCodecTrain(global, train, io);
  if (*encode_cmd) return CmdCodecEncode(global, encode, io);
  if (*decode_cmd) return CmdCodecDecode(global, decode, io);
  if (*eval_cmd) return CmdEval(global, eval, io);
  if (*recipe_cmd) return CmdRecipe(global, recipe, io);
  return kExitUsage;
}
