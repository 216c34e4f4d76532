// src/translit.cc

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

#include "swara/translit.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>

#include "json.hpp"
#include "swara/error.h"
#include "swara/utf8.h"

namespace swara {

std::string_view ScriptName(Script s) {
  switch (s) {
    case Script::kLatin: return "latin";
    case Script::kDevanagari: return "devanagari";
    case Script::kNeutral: return "neutral";
  }
  return "neutral";
}

std::string_view LanguageName(Language l) {
  switch (l) {
    case Language::kHindi: return "hindi";
    case Language::kEnglish: return "english";
    case Language::kMixed: return "mixed";
  }
  return "mixed";
}

Language ParseLanguage(std::string_view name) {
  if (name == "hindi") return Language::kHindi;
  if (name == "english") return Language::kEnglish;
  if (name == "mixed") return Language::kMixed;
  throw Error(ErrorCode::kUnknownLanguage,
              "unknown language '" + std::string(name) + "'");
}

namespace {

bool IsDevanagariBlock(char32_t cp) { return cp >= 0x0900 && cp <= 0x097F; }
bool IsAsciiLetter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}
bool IsDevanagariDigit(char32_t cp) { return cp >= 0x0966 && cp <= 0x096F; }

Script Classify(char32_t cp) {
  if (IsDevanagariBlock(cp)) return Script::kDevanagari;
  if (IsAsciiLetter(cp)) return Script::kLatin;
  return Script::kNeutral;
}

}  // namespace

std::vector<ScriptSpan> SegmentScripts(std::string_view text) {
  const std::u32string cps = utf8::Decode(text);
  struct Run {
    Script script;
    std::size_t start, end;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    Script s = Classify(cps[i]);
    if (!runs.empty() && runs.back().script == s) {
      runs.back().end = i + 1;
    } else {
      runs.push_back({s, i, i + 1});
    }
  }
  // Neutral runs join whatever precedes them; a leading one stays neutral.
  std::vector<Run> merged;
  for (const Run &r : runs) {
    if (r.script == Script::kNeutral && !merged.empty()) {
      merged.back().end = r.end;
    } else if (!merged.empty() && merged.back().script == r.script) {
      merged.back().end = r.end;
    } else {
      merged.push_back(r);
    }
  }
  std::vector<ScriptSpan> spans;
  spans.reserve(merged.size());
  for (const Run &r : merged) {
    spans.push_back({utf8::Encode(std::u32string_view(cps).substr(
                         r.start, r.end - r.start)),
                     r.script, r.start, r.end});
  }
  return spans;
}

// ---------------------------------------------------------------------------
// TranslitScheme

const TranslitScheme &TranslitScheme::Builtin() {
  static const TranslitScheme scheme = [] {
    TranslitScheme s;
    s.name_ = "swara-itrans-v1";
    s.consonants_ = {
        {U'क', "k"},   {U'ख', "kh"},  {U'ग', "g"},   {U'घ', "gh"},
        {U'ङ', "N^"},  {U'च', "ch"},  {U'छ', "Ch"},  {U'ज', "j"},
        {U'झ', "jh"},  {U'ञ', "JN"},  {U'ट', "T"},   {U'ठ', "Th"},
        {U'ड', "D"},   {U'ढ', "Dh"},  {U'ण', "N"},   {U'त', "t"},
        {U'थ', "th"},  {U'द', "d"},   {U'ध', "dh"},  {U'न', "n"},
        {U'ऩ', "^n"},  {U'प', "p"},   {U'फ', "ph"},  {U'ब', "b"},
        {U'भ', "bh"},  {U'म', "m"},   {U'य', "y"},   {U'र', "r"},
        {U'ऱ', "^r"},  {U'ल', "l"},   {U'ळ', "L"},   {U'ऴ', "^L"},
        {U'व', "v"},   {U'श', "sh"},  {U'ष', "Sh"},  {U'स', "s"},
        {U'ह', "h"},
        // Precomposed nukta letters.
        {U'\u0958', "q"},   {U'\u0959', "K"},   {U'\u095A', "G"},
        {U'\u095B', "z"},   {U'\u095C', ".D"},  {U'\u095D', ".Dh"},
        {U'\u095E', "f"},   {U'\u095F', "Y"},
    };
    s.vowels_ = {
        {U'अ', 0, "a"},        {U'आ', U'ा', "aa"},   {U'इ', U'ि', "i"},
        {U'ई', U'ी', "ii"},    {U'उ', U'ु', "u"},    {U'ऊ', U'ू', "uu"},
        {U'ऋ', U'ृ', "RRi"},   {U'ॠ', U'ॄ', "RRI"},  {U'ऌ', U'ॢ', "LLi"},
        {U'ॡ', U'ॣ', "LLI"},   {U'ए', U'े', "e"},    {U'ऐ', U'ै', "ai"},
        {U'ओ', U'ो', "o"},     {U'औ', U'ौ', "au"},   {U'ऍ', U'ॅ', "E"},
        {U'ऑ', U'ॉ', "O"},
    };
    s.signs_ = {
        {U'ं', "M"}, {U'ँ', ".N"}, {U'ः', "H"}, {U'ऽ', ".a"},
        {U'ॐ', "OM"}, {U'।', "|"}, {U'॥', "||"},
    };
    s.nukta_latin_ = "~";
    s.Index();
    return s;
  }();
  return scheme;
}

void TranslitScheme::Index() {
  tokens_.clear();
  by_independent_.clear();
  by_matra_.clear();
  max_token_len_ = 0;
  std::set<char32_t> seen_cps;

  auto claim_cp = [&](char32_t cp) {
    if (cp == 0) return;
    if (cp == kVirama || cp == kNukta)
      throw Error(ErrorCode::kInvalidScheme, "virama and nukta are reserved");
    if (!seen_cps.insert(cp).second)
      throw Error(ErrorCode::kInvalidScheme,
                  "code point " + utf8::Encode(cp) + " mapped twice");
  };
  auto add_token = [&](const std::string &latin, Token tok) {
    if (latin.empty())
      throw Error(ErrorCode::kInvalidScheme, "empty romanization");
    for (unsigned char c : latin) {
      if (c >= 0x80 || c <= 0x20 || c == '_' || c == '\\')
        throw Error(ErrorCode::kInvalidScheme,
                    "romanization '" + latin +
                        "' must be printable ASCII without '_' or '\\'");
    }
    if (!tokens_.emplace(latin, tok).second)
      throw Error(ErrorCode::kInvalidScheme,
                  "romanization '" + latin + "' is not unique");
    max_token_len_ = std::max(max_token_len_, latin.size());
  };

  for (const auto &[cp, latin] : consonants_) {
    claim_cp(cp);
    add_token(latin, {TokenKind::kConsonant, cp, 0, false});
  }
  int inherent = 0;
  for (std::size_t i = 0; i < vowels_.size(); ++i) {
    const Vowel &v = vowels_[i];
    if (v.independent == 0)
      throw Error(ErrorCode::kInvalidScheme, "vowel without independent form");
    claim_cp(v.independent);
    claim_cp(v.matra);
    if (v.matra == 0) ++inherent;
    by_independent_[v.independent] = i;
    if (v.matra != 0) by_matra_[v.matra] = i;
    add_token(v.latin, {TokenKind::kVowel, v.independent, v.matra, v.matra == 0});
  }
  if (inherent != 1)
    throw Error(ErrorCode::kInvalidScheme,
                "exactly one vowel must be the inherent vowel (no matra)");
  for (const auto &[cp, latin] : signs_) {
    claim_cp(cp);
    add_token(latin, {TokenKind::kSign, cp, 0, false});
  }
  if (!nukta_latin_.empty())
    add_token(nukta_latin_, {TokenKind::kNukta, kNukta, 0, false});
}

std::size_t TranslitScheme::LongestMatch(std::string_view s, std::size_t pos,
                                         const Token **tok) const {
  std::size_t limit = std::min(max_token_len_, s.size() - pos);
  for (std::size_t len = limit; len > 0; --len) {
    auto it = tokens_.find(s.substr(pos, len));
    if (it != tokens_.end()) {
      if (tok) *tok = &it->second;
      return len;
    }
  }
  return 0;
}

namespace {

char32_t SingleCodePoint(const std::string &s, const char *what) {
  std::u32string cps = utf8::Decode(s);
  if (cps.size() != 1)
    throw Error(ErrorCode::kInvalidScheme,
                std::string(what) + " '" + s + "' is not a single code point");
  return cps[0];
}

}  // namespace

TranslitScheme TranslitScheme::FromJson(std::string_view text) {
  using nlohmann::json;
  TranslitScheme s;
  try {
    json doc = json::parse(text.begin(), text.end());
    if (doc.value("version", 0) != 1)
      throw Error(ErrorCode::kInvalidScheme, "unsupported scheme version");
    s.name_ = doc.at("name").get<std::string>();
    for (const auto &[deva, latin] : doc.at("consonants").items())
      s.consonants_[SingleCodePoint(deva, "consonant")] = latin.get<std::string>();
    for (const auto &v : doc.at("vowels")) {
      Vowel vowel;
      vowel.independent =
          SingleCodePoint(v.at("independent").get<std::string>(), "vowel");
      auto matra = v.value("matra", std::string());
      vowel.matra = matra.empty() ? 0 : SingleCodePoint(matra, "matra");
      vowel.latin = v.at("latin").get<std::string>();
      s.vowels_.push_back(std::move(vowel));
    }
    for (const auto &[deva, latin] : doc.at("signs").items())
      s.signs_[SingleCodePoint(deva, "sign")] = latin.get<std::string>();
    s.nukta_latin_ = doc.value("nukta", std::string());
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidScheme, e.what());
  }
  s.Index();
  return s;
}

TranslitScheme TranslitScheme::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return FromJson(text);
}

std::string TranslitScheme::ToJson() const {
  nlohmann::ordered_json doc;
  doc["name"] = name_;
  doc["version"] = 1;
  nlohmann::ordered_json consonants = nlohmann::ordered_json::object();
  for (const auto &[cp, latin] : consonants_) consonants[utf8::Encode(cp)] = latin;
  doc["consonants"] = consonants;
  nlohmann::ordered_json vowels = nlohmann::ordered_json::array();
  for (const Vowel &v : vowels_) {
    vowels.push_back({{"independent", utf8::Encode(v.independent)},
                      {"matra", v.matra ? utf8::Encode(v.matra) : ""},
                      {"latin", v.latin}});
  }
  doc["vowels"] = vowels;
  nlohmann::ordered_json signs = nlohmann::ordered_json::object();
  for (const auto &[cp, latin] : signs_) signs[utf8::Encode(cp)] = latin;
  doc["signs"] = signs;
  doc["nukta"] = nukta_latin_;
  return doc.dump(2) + "\n";
}

std::string TranslitScheme::ToLatin(std::string_view devanagari) const {
  const std::u32string cps = utf8::Decode(devanagari);

  // Every item written so far that the reader will start a token match at.
  // Raw items must not start any token; scheme items must match exactly.
  struct Item {
    std::size_t start;
    std::size_t len;  // 0 for raw characters
  };
  std::string out;
  std::vector<Item> items;
  bool dead_consonant = false;

  auto append = [&](const std::string &text, bool is_token, bool is_vowel) {
    bool separate = dead_consonant && is_vowel;
    if (!separate) {
      const std::string candidate = out + text;
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        if (it->start + max_token_len_ <= out.size()) break;
        if (LongestMatch(candidate, it->start, nullptr) != it->len) {
          separate = true;
          break;
        }
      }
    }
    if (separate) out.push_back('_');
    items.push_back({out.size(), is_token ? text.size() : 0});
    out += text;
    dead_consonant = false;
  };

  auto unmappable = [&](std::size_t i) {
    throw Error(ErrorCode::kUnmappableCharacter,
                "no romanization for U+" +
                    [&] {
                      char hex[8];
                      std::snprintf(hex, sizeof hex, "%04X",
                                    static_cast<unsigned>(cps[i]));
                      return std::string(hex);
                    }() +
                    " at offset " + std::to_string(i));
  };

  const std::string &inherent = vowels_[std::find_if(vowels_.begin(), vowels_.end(),
                                                     [](const Vowel &v) {
                                                       return v.matra == 0;
                                                     }) - vowels_.begin()]
                                    .latin;

  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i];
    if (auto c = consonants_.find(cp); c != consonants_.end()) {
      append(c->second, true, false);
      ++i;
      if (i < cps.size() && cps[i] == kNukta && !nukta_latin_.empty()) {
        append(nukta_latin_, true, false);
        ++i;
      }
      if (i < cps.size() && by_matra_.count(cps[i])) {
        append(vowels_[by_matra_.at(cps[i])].latin, true, false);
        ++i;
      } else if (i < cps.size() && cps[i] == kVirama) {
        ++i;
        dead_consonant = true;
      } else {
        append(inherent, true, false);
      }
      continue;
    }
    if (auto v = by_independent_.find(cp); v != by_independent_.end()) {
      append(vowels_[v->second].latin, true, true);
    } else if (auto s = signs_.find(cp); s != signs_.end()) {
      append(s->second, true, false);
    } else if (IsDevanagariDigit(cp) || !IsDevanagariBlock(cp)) {
      if (cp >= 0x80) {
        // Non-ASCII bytes never take part in a token.
        out += utf8::Encode(cp);
        dead_consonant = false;
      } else {
        const std::string ch(1, static_cast<char>(cp));
        if (IsAsciiLetter(cp) || cp == U'_' || cp == U'\\' || tokens_.count(ch)) {
          out.push_back('\\');
          out += ch;
          dead_consonant = false;
        } else {
          append(ch, false, false);
        }
      }
    } else {
      unmappable(i);
    }
    ++i;
  }
  return out;
}

std::string TranslitScheme::ToDevanagari(std::string_view latin) const {
  std::u32string out;
  bool pending = false;  // consonant still waiting for its vowel
  auto flush = [&] {
    if (pending) out.push_back(kVirama);
    pending = false;
  };
  auto unparseable = [&](std::size_t pos, const std::string &why) {
    throw Error(ErrorCode::kUnparseableSequence,
                why + " at byte offset " + std::to_string(pos));
  };
  auto take_code_point = [&](std::size_t pos) -> std::size_t {
    auto lead = static_cast<unsigned char>(latin[pos]);
    std::size_t n = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
    std::u32string cp = utf8::Decode(latin.substr(pos, n));
    out += cp;
    return n;
  };

  std::size_t pos = 0;
  while (pos < latin.size()) {
    const auto c = static_cast<unsigned char>(latin[pos]);
    if (c == '\\') {
      flush();
      if (pos + 1 >= latin.size()) unparseable(pos, "dangling escape");
      pos += 1 + take_code_point(pos + 1);
      continue;
    }
    if (c == '_') {
      flush();
      ++pos;
      continue;
    }
    if (c >= 0x80) {
      flush();
      pos += take_code_point(pos);
      continue;
    }
    const Token *tok = nullptr;
    std::size_t len = LongestMatch(latin, pos, &tok);
    if (len == 0) {
      if (std::isalpha(c))
        unparseable(pos, "no token for '" + std::string(1, static_cast<char>(c)) + "'");
      flush();
      out.push_back(c);
      ++pos;
      continue;
    }
    switch (tok->kind) {
      case TokenKind::kConsonant:
        flush();
        out.push_back(tok->primary);
        pending = true;
        break;
      case TokenKind::kNukta:
        if (!pending) unparseable(pos, "nukta without a consonant");
        out.push_back(kNukta);
        break;
      case TokenKind::kVowel:
        if (pending) {
          if (!tok->inherent) out.push_back(tok->matra);
          pending = false;
        } else {
          out.push_back(tok->primary);
        }
        break;
      case TokenKind::kSign:
        flush();
        out.push_back(tok->primary);
        break;
    }
    pos += len;
  }
  flush();
  return utf8::Encode(out);
}

std::string DevanagariToLatin(std::string_view text, const TranslitScheme &scheme) {
  return scheme.ToLatin(text);
}

std::string LatinToDevanagari(std::string_view text, const TranslitScheme &scheme) {
  return scheme.ToDevanagari(text);
}

// ---------------------------------------------------------------------------
// Phoneme counting

namespace {

bool IsConsonantCp(char32_t cp) {
  return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
         (cp >= 0x0978 && cp <= 0x097F);
}
bool IsMatraCp(char32_t cp) {
  return (cp >= 0x093A && cp <= 0x093B) || (cp >= 0x093E && cp <= 0x094C) ||
         (cp >= 0x094E && cp <= 0x094F) || (cp >= 0x0955 && cp <= 0x0957) ||
         (cp >= 0x0962 && cp <= 0x0963);
}
bool IsIndependentVowelCp(char32_t cp) {
  return (cp >= 0x0904 && cp <= 0x0914) || (cp >= 0x0960 && cp <= 0x0961) ||
         (cp >= 0x0972 && cp <= 0x0977);
}
// Letters and signs that belong inside a word (danda and digits do not).
bool IsDevanagariWordCp(char32_t cp) {
  return IsDevanagariBlock(cp) && cp != 0x0964 && cp != 0x0965 &&
         !IsDevanagariDigit(cp) && cp != 0x0970;
}

int CountDevanagariWord(std::u32string_view w) {
  int phones = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    const char32_t cp = w[i];
    if (IsConsonantCp(cp)) {
      ++phones;
      ++i;
      while (i < w.size() && w[i] == kNukta) ++i;
      if (i < w.size() && IsMatraCp(w[i])) {
        ++phones;
        ++i;
      } else if (i < w.size() && w[i] == kVirama) {
        ++i;
      } else if (i < w.size()) {
        ++phones;  // inherent vowel, not word-final
      }
      continue;
    }
    if (IsIndependentVowelCp(cp) || cp == 0x0902 || cp == 0x0903) {
      ++phones;  // vowel, anusvara, visarga
    } else if (cp == 0x0950) {
      phones += 2;  // om
    }
    ++i;
  }
  return phones;
}

int CountDevanagari(std::u32string_view text) {
  int phones = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsDevanagariWordCp(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && IsDevanagariWordCp(text[j])) ++j;
    phones += CountDevanagariWord(text.substr(i, j - i));
    i = j;
  }
  return phones;
}

bool IsVowelLetter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

int CountLatinWord(std::string_view raw) {
  std::string w;
  for (char c : raw)
    if (c != '\'') w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (w.size() >= 3 && w.back() == 'e' && !IsVowelLetter(w[w.size() - 2]) &&
      std::any_of(w.begin(), w.end() - 2, IsVowelLetter)) {
    w.pop_back();
  }
  int phones = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    if (i + 1 < w.size() && w[i + 1] == 'h' &&
        (w[i] == 't' || w[i] == 's' || w[i] == 'c' || w[i] == 'p')) {
      ++phones;
      i += 2;
    } else if (IsVowelLetter(w[i])) {
      ++phones;
      while (i < w.size() && IsVowelLetter(w[i])) ++i;
    } else {
      ++phones;
      ++i;
    }
  }
  return phones;
}

// Words are runs of ASCII letters, with apostrophes allowed between letters.
template <typename Fn>
void ForEachLatinWord(std::string_view text, bool keep_apostrophes, Fn fn) {
  std::size_t i = 0;
  auto is_letter = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    if (!is_letter(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           (is_letter(text[j]) ||
            (keep_apostrophes && text[j] == '\'' && j + 1 < text.size() &&
             is_letter(text[j + 1]))))
      ++j;
    fn(text.substr(i, j - i));
    i = j;
  }
}

int CountLatinEnglish(std::string_view text) {
  int phones = 0;
  ForEachLatinWord(text, true, [&](std::string_view w) { phones += CountLatinWord(w); });
  return phones;
}

int CountLatinRomanizedHindi(std::string_view text) {
  int phones = 0;
  ForEachLatinWord(text, false, [&](std::string_view w) {
    try {
      phones += CountDevanagari(utf8::Decode(LatinToDevanagari(w)));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUnparseableSequence) throw;
      phones += CountLatinWord(w);
    }
  });
  return phones;
}

}  // namespace

int CountPhonemes(std::string_view text, Language language) {
  if (std::all_of(text.begin(), text.end(),
                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::kEmptyTranscript, "transcript is empty");
  int phones = 0;
  for (const ScriptSpan &span : SegmentScripts(text)) {
    switch (span.script) {
      case Script::kDevanagari:
        phones += CountDevanagari(utf8::Decode(span.text));
        break;
      case Script::kLatin:
        phones += language == Language::kHindi ? CountLatinRomanizedHindi(span.text)
                                               : CountLatinEnglish(span.text);
        break;
      case Script::kNeutral:
        break;
    }
  }
  return phones;
}

}  // namespace swara
