// swara/describe.h

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

#ifndef SWARA_DESCRIBE_H_
#define SWARA_DESCRIBE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swara/manifest.h"
#include "swara/tagging.h"

namespace swara {

inline constexpr std::string_view kSpeakerSlot = "speaker";

// A sentence grammar. Each clause is a list of alternative phrasings; a
// phrasing may contain slots written {name}, where name is "speaker" or a
// feature name whose bin label is substituted verbatim. Rendering picks one
// variant per clause, joins clauses with single spaces, puts one connector
// word before the final clause, and appends the terminator.
//
// File format (JSON):
//   {"version": 1, "name": "...",
//    "clauses": [["In a {monotony} voice,", ...], ["{speaker}"], ...],
//    "connectors": ["and", ...],
//    "terminator": "."}
struct DescriptionTemplate {
  std::string name;
  std::vector<std::vector<std::string>> clauses;
  std::vector<std::string> connectors;
  std::string terminator = ".";

  /// Voice quality, speaker, rate, noise, then room; three or more variants
  /// for each labelled clause.
  static DescriptionTemplate Default();
  /// Throws kParseError on malformed JSON, kInvalidArgument on an empty
  /// clause or an unbalanced brace.
  static DescriptionTemplate FromJson(std::string_view json);
  static DescriptionTemplate Load(const std::filesystem::path &path);
  std::string ToJson() const;

  /// Distinct slot names across all variants, in first-seen order.
  std::vector<std::string> Slots() const;

  friend bool operator==(const DescriptionTemplate &,
                         const DescriptionTemplate &) = default;
};

/// Variant choice depends only on `seed` (mt19937_64, one draw per clause in
/// order, then one for the connector). Throws kMissingSlot naming the first
/// slot, in any variant, whose label is absent from tags.labels.
std::string RenderDescription(const FeatureTags &tags, std::string_view speaker,
                              const DescriptionTemplate &tmpl,
                              std::uint64_t seed);

/// 64-bit FNV-1a.
std::uint64_t StableHash(std::string_view text);

/// Returns a copy of `records` with descriptions filled in. Each record uses
/// seed base_seed ^ StableHash(id), so results do not depend on order. When
/// `speaker` is set it replaces every record's own speaker name. Throws
/// kMissingTags or kMissingSlot naming the record id.
std::vector<UtteranceRecord> DescribeCorpus(
    const std::vector<UtteranceRecord> &records,
    const DescriptionTemplate &tmpl, std::uint64_t base_seed,
    const std::optional<std::string> &speaker = std::nullopt);

}  // namespace swara

#endif  // SWARA_DESCRIBE_H_
