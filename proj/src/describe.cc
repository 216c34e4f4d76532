// src/describe.cc

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

#include "swara/describe.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>

#include "json.hpp"
#include "swara/error.h"

namespace swara {

namespace {

// Splits a phrasing into literal text and slot names. Even indices are
// literals, odd indices are slot names.
std::vector<std::string> SplitSlots(std::string_view variant) {
  std::vector<std::string> parts(1);
  bool in_slot = false;
  for (char c : variant) {
    if (c == '{') {
      if (in_slot)
        throw Error(ErrorCode::kInvalidArgument,
                    "nested '{' in '" + std::string(variant) + "'");
      in_slot = true;
      parts.emplace_back();
    } else if (c == '}') {
      if (!in_slot || parts.back().empty())
        throw Error(ErrorCode::kInvalidArgument,
                    "unbalanced '}' in '" + std::string(variant) + "'");
      in_slot = false;
      parts.emplace_back();
    } else {
      parts.back() += c;
    }
  }
  if (in_slot)
    throw Error(ErrorCode::kInvalidArgument,
                "unterminated slot in '" + std::string(variant) + "'");
  return parts;
}

void Validate(const DescriptionTemplate &t) {
  if (t.clauses.empty())
    throw Error(ErrorCode::kInvalidArgument, "template has no clauses");
  for (const auto &clause : t.clauses) {
    if (clause.empty())
      throw Error(ErrorCode::kInvalidArgument, "template clause has no variants");
    for (const auto &v : clause) SplitSlots(v);
  }
}

}  // namespace

DescriptionTemplate DescriptionTemplate::Default() {
  DescriptionTemplate t;
  t.name = "swara-describe-v1";
  t.clauses = {
      {"In a {monotony} voice,", "With a {monotony} delivery,",
       "Using a {monotony} tone,"},
      {"{speaker}"},
      {"speaks {speaking_rate}", "talks {speaking_rate}",
       "delivers the words {speaking_rate}"},
      {"in a {snr_db} recording", "on a {snr_db} track",
       "in {snr_db} conditions"},
      {"with {reverberation}", "with {reverberation} in the room",
       "with {reverberation} audible"},
  };
  t.connectors = {"and", "and also", "and noticeably"};
  t.terminator = ".";
  return t;
}

DescriptionTemplate DescriptionTemplate::FromJson(std::string_view text) {
  DescriptionTemplate t;
  try {
    auto doc = nlohmann::json::parse(text.begin(), text.end());
    if (doc.value("version", 0) != 1)
      throw Error(ErrorCode::kInvalidArgument, "unsupported template version");
    t.name = doc.value("name", std::string());
    t.clauses = doc.at("clauses").get<std::vector<std::vector<std::string>>>();
    t.connectors = doc.value("connectors", std::vector<std::string>());
    t.terminator = doc.value("terminator", std::string("."));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError, std::string("template: ") + e.what());
  }
  Validate(t);
  return t;
}

DescriptionTemplate DescriptionTemplate::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return FromJson(text);
}

std::string DescriptionTemplate::ToJson() const {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["name"] = name;
  doc["clauses"] = clauses;
  doc["connectors"] = connectors;
  doc["terminator"] = terminator;
  return doc.dump(2) + "\n";
}

std::vector<std::string> DescriptionTemplate::Slots() const {
  std::vector<std::string> out;
  for (const auto &clause : clauses)
    for (const auto &v : clause) {
      auto parts = SplitSlots(v);
      for (std::size_t i = 1; i < parts.size(); i += 2)
        if (std::find(out.begin(), out.end(), parts[i]) == out.end())
          out.push_back(parts[i]);
    }
  return out;
}

std::string RenderDescription(const FeatureTags &tags, std::string_view speaker,
                              const DescriptionTemplate &tmpl,
                              std::uint64_t seed) {
  // Every slot is checked up front so the error does not depend on which
  // variants the seed happens to pick.
  for (const std::string &slot : tmpl.Slots())
    if (slot != kSpeakerSlot && !tags.labels.count(slot))
      throw Error(ErrorCode::kMissingSlot, "template slot {" + slot + "} has no label");
  std::mt19937_64 rng(seed);
  std::vector<std::string> rendered;
  rendered.reserve(tmpl.clauses.size());
  for (const auto &clause : tmpl.clauses) {
    if (clause.empty())
      throw Error(ErrorCode::kInvalidArgument, "template clause has no variants");
    const std::string &variant = clause[rng() % clause.size()];
    auto parts = SplitSlots(variant);
    std::string text;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i % 2 == 0) {
        text += parts[i];
      } else if (parts[i] == kSpeakerSlot) {
        text += speaker;
      } else {
        text += tags.labels.at(parts[i]);
      }
    }
    rendered.push_back(std::move(text));
  }
  std::string out;
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i > 0) out += ' ';
    if (i + 1 == rendered.size() && i > 0 && !tmpl.connectors.empty())
      out += tmpl.connectors[rng() % tmpl.connectors.size()] + ' ';
    out += rendered[i];
  }
  return out + tmpl.terminator;
}

std::uint64_t StableHash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<UtteranceRecord> DescribeCorpus(
    const std::vector<UtteranceRecord> &records,
    const DescriptionTemplate &tmpl, std::uint64_t base_seed,
    const std::optional<std::string> &speaker) {
  std::vector<UtteranceRecord> out = records;
  for (auto &r : out) {
    if (!r.tags)
      throw Error(ErrorCode::kMissingTags,
                  "record '" + r.id + "' has no tags; run `swara tag` first");
    if (speaker) r.speaker = *speaker;
    try {
      r.description =
          RenderDescription(*r.tags, r.speaker, tmpl, base_seed ^ StableHash(r.id));
    } catch (const Error &e) {
      throw Error(e.code(), "record '" + r.id + "': " + e.message());
    }
  }
  return out;
}

}  // namespace swara
