// tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "swara/audio_io.h"
#include "swara/codec.h"
#include "swara/describe.h"
#include "swara/dsp.h"
#include "swara/error.h"
#include "swara/manifest.h"
#include "swara/metrics.h"
#include "swara/parallel.h"
#include "swara/report.h"
#include "swara/tagging.h"
#include "swara/translit.h"

namespace swara::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string ReadText(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteText(const fs::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

// Runs `body`, mapping library and filesystem failures to exit code 1.
template <typename F>
int Guard(Streams io, F &&body) {
  try {
    return body();
  } catch (const Error &e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error &e) {
    io.err << "error: " << e.what() << "\n";
  }
  return kExitData;
}

std::string Fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// Language from the scripts present in the text.
Language InferLanguage(std::string_view text) {
  bool latin = false, deva = false;
  for (const ScriptSpan &s : SegmentScripts(text)) {
    latin |= s.script == Script::kLatin;
    deva |= s.script == Script::kDevanagari;
  }
  if (deva && latin) return Language::kMixed;
  return deva ? Language::kHindi : Language::kEnglish;
}

// Reads <stem>.json (transcription, language, emotion, speaker) or
// <stem>.txt (transcription only) next to a WAV file.
UtteranceRecord ReadSidecar(const fs::path &wav) {
  UtteranceRecord r;
  r.id = wav.stem().string();
  fs::path json_path = wav, txt_path = wav;
  json_path.replace_extension(".json");
  txt_path.replace_extension(".txt");
  if (fs::exists(json_path)) {
    try {
      auto j = nlohmann::json::parse(ReadText(json_path));
      r.transcription = j.at("transcription").get<std::string>();
      r.language = j.contains("language")
                       ? ParseLanguage(j.at("language").get<std::string>())
                       : InferLanguage(r.transcription);
      r.emotion = ParseEmotion(j.value("emotion", std::string("default")));
      r.speaker = j.value("speaker", std::string());
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kParseError, json_path.string() + ": " + e.what());
    }
  } else if (fs::exists(txt_path)) {
    r.transcription = ReadText(txt_path);
    while (!r.transcription.empty() &&
           (r.transcription.back() == '\n' || r.transcription.back() == '\r'))
      r.transcription.pop_back();
    r.language = InferLanguage(r.transcription);
  } else {
    throw Error(ErrorCode::kIoError, "no .json or .txt transcript for " +
                                         wav.filename().string());
  }
  return r;
}

std::string JoinFlags(const std::vector<std::string> &flags) {
  if (flags.empty()) return "none";
  std::string out;
  for (const auto &f : flags) out += (out.empty() ? "" : ",") + f;
  return out;
}

// Cepstra of a log-mel matrix, comparable across original and decoded frames.
dsp::MelCepstra CepstraFromLogMel(const Matrix &log_mel) {
  Matrix mel = log_mel;
  for (double &v : mel.data()) v = std::exp(v);
  return dsp::Mfcc(mel, dsp::kDefaultCepstra);
}

}  // namespace

// ---------------------------------------------------------------------------
// ingest

int CmdIngest(const GlobalOptions &g, const IngestOptions &o, Streams io) {
  if (!fs::is_directory(o.in_dir)) {
    io.err << "usage error: input directory " << o.in_dir << " does not exist\n";
    return kExitUsage;
  }
  if (o.target_rate <= 0 || !(o.target_peak > 0.0 && o.target_peak <= 1.0)) {
    io.err << "usage error: rate must be positive and peak in (0, 1]\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    std::vector<fs::path> wavs;
    for (const auto &entry : fs::directory_iterator(o.in_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".wav")
        wavs.push_back(entry.path());
    std::sort(wavs.begin(), wavs.end());

    const fs::path root = o.out_manifest.parent_path();
    const fs::path audio_dir = root / "audio";
    fs::create_directories(audio_dir);

    struct Result {
      std::optional<UtteranceRecord> record;
      PairingDiagnostics diagnostics;
      std::string error;
    };
    std::vector<Result> results(wavs.size());
    ParallelFor(wavs.size(), g.jobs, [&](std::size_t i) {
      Result &res = results[i];
      try {
        UtteranceRecord r = ReadSidecar(wavs[i]);
        ValidateScript(r);
        AudioBuffer buf = ReadWav(wavs[i]);
        buf = PeakNormalize(Resample(buf, o.target_rate),
                            static_cast<float>(o.target_peak));
        r.audio_path = "audio/" + r.id + ".wav";
        WriteWav(root / r.audio_path, buf);
        res.diagnostics = ValidatePairing(r, buf);
        res.record = std::move(r);
      } catch (const Error &e) {
        res.error = e.what();
      }
    });

    std::vector<UtteranceRecord> records;
    int failures = 0;
    for (std::size_t i = 0; i < wavs.size(); ++i) {
      const Result &res = results[i];
      const std::string name = wavs[i].filename().string();
      if (!res.record) {
        ++failures;
        io.err << "failed " << name << ": " << res.error << "\n";
        continue;
      }
      const auto flags = res.diagnostics.flags();
      io.out << "ok " << res.record->id << " duration="
             << Fixed(res.diagnostics.duration_s, 3) << "s rate="
             << Fixed(res.diagnostics.speaking_rate, 2)
             << " flags=" << JoinFlags(flags) << "\n";
      if (g.strict && !flags.empty()) {
        ++failures;
        io.err << "failed " << name << ": pairing diagnostics "
               << JoinFlags(flags) << " (--strict)\n";
        continue;
      }
      records.push_back(*res.record);
    }
    WriteManifest(records, o.out_manifest);
    io.out << records.size() << " records written to " << o.out_manifest.string()
           << ", " << failures << " failed\n";
    return failures ? kExitData : kExitOk;
  });
}

// ---------------------------------------------------------------------------
// tag

int CmdTag(const GlobalOptions &g, const TagOptions &o, Streams io) {
  if (!fs::is_regular_file(o.bin_edges)) {
    io.err << "usage error: bin-edges file " << o.bin_edges << " not found\n";
    return kExitUsage;
  }
  BinEdges edges;
  try {
    edges = BinEdges::Load(o.bin_edges);
  } catch (const Error &e) {
    io.err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    std::vector<UtteranceRecord> records = LoadManifest(o.manifest);
    std::vector<std::string> errors(records.size());
    ParallelFor(records.size(), g.jobs, [&](std::size_t i) {
      try {
        const AudioBuffer buf = ReadWav(ResolveAudio(o.manifest, records[i]));
        records[i].tags = TagUtterance(records[i], buf, edges);
      } catch (const Error &e) {
        records[i].tags.reset();
        errors[i] = e.what();
      }
    });

    io.out << "id\trate\tsnr_db\treverb_ms\tmonotony_st\tenergy\tduration_s\tlabels\n";
    int failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto &r = records[i];
      if (!r.tags) {
        ++failures;
        io.err << "failed " << r.id << ": " << errors[i] << "\n";
        continue;
      }
      const FeatureTags &t = *r.tags;
      io.out << r.id << '\t' << Fixed(t.speaking_rate, 2) << '\t'
             << Fixed(t.snr_db, 1) << '\t' << Fixed(t.reverb_rt_ms, 0) << '\t'
             << Fixed(t.monotony_semitones, 2) << '\t' << Fixed(t.mean_energy, 4)
             << '\t' << Fixed(t.duration_s, 3) << '\t';
      bool first = true;
      for (const auto &[k, v] : t.labels) {
        io.out << (first ? "" : "; ") << k << '=' << v;
        first = false;
      }
      io.out << '\n';
    }
    WriteManifest(records, o.out.empty() ? o.manifest : o.out);
    return failures ? kExitData : kExitOk;
  });
}

// ---------------------------------------------------------------------------
// describe

int CmdDescribe(const GlobalOptions &g, const DescribeOptions &o, Streams io) {
  if (!o.template_path.empty() && !fs::is_regular_file(o.template_path)) {
    io.err << "usage error: template " << o.template_path << " not found\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    const DescriptionTemplate tmpl = o.template_path.empty()
                                         ? DescriptionTemplate::Default()
                                         : DescriptionTemplate::Load(o.template_path);
    const auto records = DescribeCorpus(LoadManifest(o.manifest), tmpl, g.seed, o.speaker);
    for (const auto &r : records) io.out << r.id << '\t' << *r.description << '\n';
    WriteManifest(records, o.out.empty() ? o.manifest : o.out);
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// translit

int CmdTranslit(const GlobalOptions &, const TranslitOptions &o, Streams io) {
  if (!o.text && o.file.empty()) {
    io.err << "usage error: give TEXT or --file\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    const TranslitScheme scheme =
        o.scheme.empty() ? TranslitScheme::Builtin() : TranslitScheme::Load(o.scheme);
    const std::string input = o.text ? *o.text : ReadText(o.file);
    std::string output;
    int status = kExitOk;
    switch (o.mode) {
      case TranslitMode::kToLatin:
        output = DevanagariToLatin(input, scheme);
        break;
      case TranslitMode::kToDevanagari:
        output = LatinToDevanagari(input, scheme);
        break;
      case TranslitMode::kSegment:
        for (const ScriptSpan &s : SegmentScripts(input))
          output += std::string(ScriptName(s.script)) + "\t[" +
                    std::to_string(s.start) + "," + std::to_string(s.end) +
                    ")\t" + s.text + "\n";
        break;
      case TranslitMode::kRoundTrip: {
        std::size_t total = 0, same = 0;
        std::istringstream lines(input);
        std::string line;
        while (std::getline(lines, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          ++total;
          const std::string back =
              LatinToDevanagari(DevanagariToLatin(line, scheme), scheme);
          if (back == line) {
            ++same;
          } else {
            io.err << "mismatch: " << line << " -> " << back << "\n";
          }
        }
        const double pct = total ? 100.0 * same / total : 100.0;
        output = "round-trip identity: " + std::to_string(same) + "/" +
                 std::to_string(total) + " (" + Fixed(pct, 2) + "%)\n";
        status = same == total ? kExitOk : kExitData;
        break;
      }
    }
    if (o.out.empty()) {
      io.out << output;
      if (!output.empty() && output.back() != '\n') io.out << '\n';
    } else {
      WriteText(o.out, output);
    }
    return status;
  });
}

// ---------------------------------------------------------------------------
// codec

int CmdCodecTrain(const GlobalOptions &g, const CodecTrainOptions &o, Streams io) {
  if (o.levels < 1 || o.codebook_size < 1 || o.max_iters < 1) {
    io.err << "usage error: levels, k and max-iters must be positive\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    const auto records = LoadManifest(o.manifest);
    std::vector<Matrix> per_record(records.size());
    ParallelFor(records.size(), g.jobs, [&](std::size_t i) {
      per_record[i] = LogMelFrames(ReadWav(ResolveAudio(o.manifest, records[i])));
    });
    std::size_t rows = 0;
    for (const auto &m : per_record) rows += m.rows();
    Matrix frames(rows, dsp::kDefaultMels);
    std::size_t at = 0;
    for (const auto &m : per_record) {
      std::copy(m.data().begin(), m.data().end(),
                frames.data().begin() + static_cast<std::ptrdiff_t>(at * m.cols()));
      at += m.rows();
    }

    RvqTrainOptions opt;
    opt.n_levels = o.levels;
    opt.codebook_size = o.codebook_size;
    opt.max_iters = o.max_iters;
    opt.seed = g.seed;
    opt.jobs = g.jobs;
    RvqTrainReport report;
    const RvqCodebook cb = TrainRvq(frames, opt, &report);
    const auto stats = CodebookStats(Encode(frames, cb, g.jobs), cb);

    io.out << "frames=" << rows << " dim=" << cb.dim << " k=" << cb.codebook_size
           << " levels=" << cb.n_levels() << "\n";
    io.out << "level 0: mse=" << FormatDouble(report.initial_mse) << "\n";
    for (int l = 0; l < cb.n_levels(); ++l)
      io.out << "level " << l + 1 << ": mse=" << FormatDouble(report.level_mse[l])
             << " perplexity=" << Fixed(stats[l].perplexity, 3)
             << " dead=" << stats[l].dead_codes
             << " iters=" << report.iterations[l] << "\n";
    SaveCodebook(cb, o.out);
    return kExitOk;
  });
}

int CmdCodecEncode(const GlobalOptions &g, const CodecEncodeOptions &o,
                   Streams io) {
  return Guard(io, [&] {
    const RvqCodebook cb = LoadCodebook(o.codebook);
    const auto records = LoadManifest(o.manifest);
    std::vector<CodeSequence> codes(records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
      codes[i] = Encode(LogMelFrames(ReadWav(ResolveAudio(o.manifest, records[i]))),
                        cb, g.jobs);
    std::string text;
    for (std::size_t i = 0; i < records.size(); ++i) {
      ordered_json j;
      j["id"] = records[i].id;
      j["dim"] = cb.dim;
      j["levels"] = codes[i].n_levels;
      ordered_json rows = ordered_json::array();
      for (std::size_t f = 0; f < codes[i].n_frames; ++f) {
        ordered_json row = ordered_json::array();
        for (int l = 0; l < codes[i].n_levels; ++l) row.push_back(codes[i].at(f, l));
        rows.push_back(std::move(row));
      }
      j["codes"] = std::move(rows);
      text += j.dump() + "\n";
      io.out << records[i].id << ": " << codes[i].n_frames << " frames\n";
    }
    WriteText(o.out, text);
    return kExitOk;
  });
}

int CmdCodecDecode(const GlobalOptions &, const CodecDecodeOptions &o,
                   Streams io) {
  return Guard(io, [&] {
    const RvqCodebook cb = LoadCodebook(o.codebook);
    std::map<std::string, Matrix> reference;
    if (!o.reference.empty()) {
      const auto refs = LoadManifest(o.reference);
      for (const auto &r : refs)
        reference[r.id] = LogMelFrames(ReadWav(ResolveAudio(o.reference, r)));
    }

    std::istringstream lines(ReadText(o.codes));
    std::string line, decoded_text;
    double mcd_total = 0.0;
    std::size_t mcd_count = 0;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      CodeSequence seq;
      std::string id;
      try {
        const auto j = nlohmann::json::parse(line);
        id = j.at("id").get<std::string>();
        const int dim = j.at("dim").get<int>();
        if (dim != cb.dim)
          throw Error(ErrorCode::kDimensionMismatch,
                      "codes for '" + id + "' were made with dimension " +
                          std::to_string(dim) + ", codebook has " +
                          std::to_string(cb.dim),
                      line_no);
        seq.n_levels = j.at("levels").get<int>();
        for (const auto &row : j.at("codes")) {
          if (row.size() != static_cast<std::size_t>(seq.n_levels))
            throw Error(ErrorCode::kParseError, "ragged code row", line_no);
          for (const auto &c : row) seq.codes.push_back(c.get<std::int32_t>());
          ++seq.n_frames;
        }
      } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParseError, e.what(), line_no);
      }
      const Matrix frames = Decode(seq, cb, o.levels);
      if (!o.out.empty()) {
        ordered_json j;
        j["id"] = id;
        ordered_json rows = ordered_json::array();
        for (std::size_t f = 0; f < frames.rows(); ++f)
          rows.push_back(std::vector<double>(frames.row(f).begin(), frames.row(f).end()));
        j["frames"] = std::move(rows);
        decoded_text += j.dump() + "\n";
      }
      if (!o.reference.empty()) {
        auto it = reference.find(id);
        if (it == reference.end())
          throw Error(ErrorCode::kIdMismatch, "no reference audio for '" + id + "'");
        const double mcd = Mcd(CepstraFromLogMel(it->second),
                               CepstraFromLogMel(frames), false);
        io.out << id << ": mcd_db=" << Fixed(mcd, 4) << "\n";
        mcd_total += mcd;
        ++mcd_count;
      }
    }
    if (!o.out.empty()) WriteText(o.out, decoded_text);
    if (mcd_count) {
      const int used = o.levels < 0 ? cb.n_levels() : std::min(o.levels, cb.n_levels());
      io.out << "mean mcd_db=" << Fixed(mcd_total / mcd_count, 4)
             << " levels=" << used << "\n";
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// eval

int CmdEval(const GlobalOptions &g, const EvalOptions &o, Streams io) {
  if (o.hyp_manifest.empty() == o.hyp_audio_dir.empty()) {
    io.err << "usage error: give exactly one of --hyp and --hyp-audio-dir\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    const auto refs = LoadManifest(o.ref_manifest);
    struct Pair {
      const UtteranceRecord *ref;
      fs::path hyp_audio;
      std::string hyp_text;
    };
    std::vector<Pair> pairs;
    std::vector<std::string> missing;
    if (!o.hyp_manifest.empty()) {
      const auto hyps = LoadManifest(o.hyp_manifest);
      std::map<std::string, const UtteranceRecord *> by_id;
      for (const auto &h : hyps) by_id[h.id] = &h;
      std::set<std::string> ref_ids;
      for (const auto &r : refs) {
        ref_ids.insert(r.id);
        auto it = by_id.find(r.id);
        if (it == by_id.end()) {
          missing.push_back(r.id + " (missing from hypothesis)");
          continue;
        }
        pairs.push_back({&r, ResolveAudio(o.hyp_manifest, *it->second),
                         it->second->transcription});
      }
      for (const auto &h : hyps)
        if (!ref_ids.count(h.id)) missing.push_back(h.id + " (missing from reference)");
    } else {
      for (const auto &r : refs) {
        const fs::path p = o.hyp_audio_dir / (r.id + ".wav");
        if (!fs::is_regular_file(p)) {
          missing.push_back(r.id + " (no " + p.filename().string() + ")");
          continue;
        }
        pairs.push_back({&r, p, r.transcription});
      }
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto &m : missing) list += (list.empty() ? "" : ", ") + m;
      throw Error(ErrorCode::kIdMismatch, "unpaired ids: " + list);
    }

    std::vector<UtteranceMetrics> metrics(pairs.size());
    std::vector<std::string> errors(pairs.size());
    ParallelFor(pairs.size(), g.jobs, [&](std::size_t i) {
      try {
        const AudioBuffer ref = ReadWav(ResolveAudio(o.ref_manifest, *pairs[i].ref));
        AudioBuffer hyp = ReadWav(pairs[i].hyp_audio);
        if (hyp.sample_rate != ref.sample_rate) hyp = Resample(hyp, ref.sample_rate);
        metrics[i] = EvaluateUtterance(pairs[i].ref->transcription, ref,
                                       pairs[i].hyp_text, hyp);
        metrics[i].id = pairs[i].ref->id;
      } catch (const Error &e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!errors[i].empty())
        throw Error(ErrorCode::kMissingMetric,
                    "utterance '" + pairs[i].ref->id + "': " + errors[i]);

    const EvalReport report = BuildReport(refs, metrics);
    fs::create_directories(o.out_dir);
    std::string per_utt =
        "id,wer,mcd_db,stoi,spectral_centroid_hz,mfcc_std,zcr,energy,duration_s\n";
    for (const auto &m : metrics)
      per_utt += m.id + ',' + FormatDouble(*m.wer) + ',' + FormatDouble(*m.mcd_db) +
                 ',' + FormatDouble(*m.stoi) + ',' +
                 FormatDouble(*m.spectral_centroid_hz) + ',' +
                 FormatDouble(*m.mfcc_std) + ',' + FormatDouble(*m.zcr) + ',' +
                 FormatDouble(*m.energy) + ',' + FormatDouble(*m.duration_s) + '\n';
    WriteText(o.out_dir / "utterances.csv", per_utt);
    WriteText(o.out_dir / "report.csv", report.ToCsv());
    WriteText(o.out_dir / "report.json", report.ToJson());
    WriteText(o.out_dir / "report_long.csv", report.ToLongCsv());
    if (!o.baseline.empty()) {
      const auto cmp = CompareWer(EvalReport::FromJson(ReadText(o.baseline)), report);
      WriteText(o.out_dir / "comparison.csv", ComparisonCsv(cmp));
    }
    io.out << report.ToCsv();
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// recipe

std::string RecipeJson(const std::string &stage) {
  ordered_json j;
  j["stage"] = stage;
  if (stage == "accent") {
    j["optimizer"] = "AdamW";
    j["learning_rate"] = 1e-4;
    j["batch_size"] = 32;
    j["grad_accum"] = 1;
    j["steps"] = 100000;
    j["warmup_steps"] = 0;
    j["clip_norm"] = 1.0;
    j["scheduler"] = "linear-decay-to-zero";
    j["loss_terms"] = {"mel_reconstruction", "duration", "pitch"};
  } else if (stage == "hindi") {
    j["optimizer"] = "Adam";
    j["learning_rate"] = 5e-5;
    j["batch_size"] = 32;
    j["grad_accum"] = 1;
    j["epochs"] = 2;
    j["warmup_steps"] = 0;
    j["clip_norm"] = nullptr;
    j["scheduler"] = "unspecified";
    j["loss_terms"] = {"cross_entropy"};
  } else if (stage == "emotion") {
    j["optimizer"] = "Adam";
    j["learning_rate"] = 8e-5;
    j["batch_size"] = 1;
    j["grad_accum"] = 18;
    j["epochs"] = 10;
    j["warmup_steps"] = 50;
    j["clip_norm"] = nullptr;
    j["scheduler"] = "constant-with-warmup";
    j["loss_terms"] = {"cross_entropy"};
    j["reference_final_loss"] = 3.27;
  } else {
    throw Error(ErrorCode::kUnknownStage,
                "unknown stage '" + stage + "' (expected accent, hindi or emotion)");
  }
  return j.dump(2) + "\n";
}

int CmdRecipe(const GlobalOptions &, const RecipeOptions &o, Streams io) {
  std::string text;
  try {
    text = RecipeJson(o.stage);
  } catch (const Error &e) {
    io.err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return Guard(io, [&] {
    if (o.out.empty()) {
      io.out << text;
    } else {
      WriteText(o.out, text);
    }
    return kExitOk;
  });
}

}  // namespace swara::cli
