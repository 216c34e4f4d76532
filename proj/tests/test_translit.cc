// tests/test_translit.cc

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

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "swara/error.h"
#include "swara/translit.h"
#include "swara/utf8.h"
#include "test_util.h"

namespace swara {
namespace {

using testing::ThrownCode;

std::vector<std::string> CanonicalWords() {
  std::ifstream in(std::string(SWARA_TEST_DATA_DIR) + "/devanagari_words.txt");
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// ITRANS romanizations of the plain letters, typed in from the published
// ITRANS table. Letters whose ITRANS spelling has several accepted forms
// (nasals other than n/N/m, nukta forms, candra vowels) are left out, and
// any word using them is skipped.
const std::map<char32_t, std::string> &ItransConsonants() {
  static const std::map<char32_t, std::string> t = {
      {U'क', "k"},  {U'ख', "kh"}, {U'ग', "g"},  {U'घ', "gh"}, {U'च', "ch"},
      {U'छ', "Ch"}, {U'ज', "j"},  {U'झ', "jh"}, {U'ट', "T"},  {U'ठ', "Th"},
      {U'ड', "D"},  {U'ढ', "Dh"}, {U'ण', "N"},  {U'त', "t"},  {U'थ', "th"},
      {U'द', "d"},  {U'ध', "dh"}, {U'न', "n"},  {U'प', "p"},  {U'फ', "ph"},
      {U'ब', "b"},  {U'भ', "bh"}, {U'म', "m"},  {U'य', "y"},  {U'र', "r"},
      {U'ल', "l"},  {U'व', "v"},  {U'श', "sh"}, {U'ष', "Sh"}, {U'स', "s"},
      {U'ह', "h"}};
  return t;
}
const std::map<char32_t, std::string> &ItransVowels() {  // independent forms
  static const std::map<char32_t, std::string> t = {
      {U'अ', "a"}, {U'आ', "aa"}, {U'इ', "i"},   {U'ई', "ii"}, {U'उ', "u"},
      {U'ऊ', "uu"}, {U'ऋ', "RRi"}, {U'ए', "e"}, {U'ऐ', "ai"}, {U'ओ', "o"},
      {U'औ', "au"}};
  return t;
}
const std::map<char32_t, std::string> &ItransMatras() {
  static const std::map<char32_t, std::string> t = {
      {U'ा', "aa"}, {U'ि', "i"}, {U'ी', "ii"}, {U'ु', "u"}, {U'ू', "uu"},
      {U'ृ', "RRi"}, {U'े', "e"}, {U'ै', "ai"}, {U'ो', "o"}, {U'ौ', "au"}};
  return t;
}
const std::map<char32_t, std::string> &ItransSigns() {
  static const std::map<char32_t, std::string> t = {
      {U'ं', "M"}, {U'ः', "H"}, {U'ँ', ".N"}};
  return t;
}

// Letter-by-letter ITRANS; nullopt when the word uses a letter outside the
// table above or a combination the table does not cover.
std::optional<std::string> OracleItrans(const std::string &word) {
  const std::u32string cps = utf8::Decode(word);
  std::string out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    const char32_t next = i + 1 < cps.size() ? cps[i + 1] : 0;
    if (auto it = ItransConsonants().find(c); it != ItransConsonants().end()) {
      out += it->second;
      if (next == kVirama) {
        ++i;
      } else if (auto m = ItransMatras().find(next); m != ItransMatras().end()) {
        out += m->second;
        ++i;
      } else {
        out += "a";
      }
      // ITRANS separates a vowel letter that follows a consonant; the table
      // covers only words where that does not happen.
      if (i + 1 < cps.size() && ItransVowels().count(cps[i + 1])) return std::nullopt;
    } else if (auto v = ItransVowels().find(c); v != ItransVowels().end()) {
      if (!out.empty() && ItransVowels().count(cps[i - 1])) return std::nullopt;
      out += v->second;
    } else if (auto s = ItransSigns().find(c); s != ItransSigns().end()) {
      out += s->second;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

TEST_SUITE("translit") {

TEST_CASE("script segmentation") {
  const auto one = SegmentScripts("hello");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == ScriptSpan{"hello", Script::kLatin, 0, 5});
  CHECK(SegmentScripts("").empty());

  const auto mix = SegmentScripts("Namaste, let's talk about मौसम");
  REQUIRE(mix.size() == 2);
  CHECK(mix[0] == ScriptSpan{"Namaste, let's talk about ", Script::kLatin, 0, 26});
  CHECK(mix[1] == ScriptSpan{"मौसम", Script::kDevanagari, 26, 30});

  const auto lead = SegmentScripts("  42 नमस्ते!");
  REQUIRE(lead.size() == 2);
  CHECK(lead[0].script == Script::kNeutral);
  CHECK(lead[1].text == "नमस्ते!");

  const auto digits = SegmentScripts("123 ...");
  REQUIRE(digits.size() == 1);
  CHECK(digits[0].script == Script::kNeutral);
}

TEST_CASE("segmentation partitions the text exactly") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> pieces = {"ab", "क", "ि", " ", ",", "7", "Z", "ा", "\xc3\xa9"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int n = static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
    const auto spans = SegmentScripts(text);
    std::string joined;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < spans.size(); ++s) {
      CHECK(spans[s].start == pos);
      CHECK(spans[s].end > spans[s].start);
      pos = spans[s].end;
      joined += spans[s].text;
      if (s > 0) CHECK(spans[s].script != spans[s - 1].script);
    }
    CHECK(joined == text);
    CHECK(pos == utf8::Decode(text).size());
  }
}

TEST_CASE("namaste and the virama rule against the ITRANS table") {
  CHECK(DevanagariToLatin("") == "");
  CHECK(LatinToDevanagari("") == "");
  CHECK(DevanagariToLatin("नमस्ते") == "namaste");
  CHECK(*OracleItrans("नमस्ते") == "namaste");
  CHECK(LatinToDevanagari("namaste") == "नमस्ते");
  CHECK(DevanagariToLatin("क्") == "k");
  CHECK(*OracleItrans("क्") == "k");
}

TEST_CASE("canonical words agree with the ITRANS table where it applies") {
  const auto words = CanonicalWords();
  int compared = 0;
  for (const std::string &w : words) {
    const auto expected = OracleItrans(w);
    if (!expected) continue;
    ++compared;
    CHECK_MESSAGE(DevanagariToLatin(w) == *expected, w);
  }
  CHECK(compared >= 150);
}

TEST_CASE("canonical word list round-trips exactly") {
  const auto words = CanonicalWords();
  REQUIRE(words.size() == 200);
  int same = 0;
  for (const std::string &w : words) same += LatinToDevanagari(DevanagariToLatin(w)) == w;
  CHECK(same == 200);
}

TEST_CASE("random syllable strings round-trip") {
  const TranslitScheme &scheme = TranslitScheme::Builtin();
  const auto doc = nlohmann::json::parse(scheme.ToJson());
  std::vector<std::string> consonants, matras, independents;
  for (const auto &[deva, latin] : doc.at("consonants").items()) consonants.push_back(deva);
  for (const auto &v : doc.at("vowels")) {
    independents.push_back(v.at("independent").get<std::string>());
    if (!v.at("matra").get<std::string>().empty())
      matras.push_back(v.at("matra").get<std::string>());
  }
  const std::vector<std::string> signs = {"ं", "ँ", "ः"};
  const std::string virama = utf8::Encode(kVirama), nukta = utf8::Encode(kNukta);
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const int syllables = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < syllables; ++s) {
      switch (rng() % 6) {
        case 0:
          text += independents[rng() % independents.size()];
          break;
        case 1:
          text += consonants[rng() % consonants.size()] + virama;
          break;
        case 2:
          text += consonants[rng() % 10] + nukta;
          break;
        default:
          text += consonants[rng() % consonants.size()];
          if (rng() % 2) text += matras[rng() % matras.size()];
      }
      if (rng() % 5 == 0 && text.substr(text.size() - virama.size()) != virama)
        text += signs[rng() % signs.size()];
      if (rng() % 7 == 0) text += " ";
    }
    const std::string latin = DevanagariToLatin(text);
    CHECK_MESSAGE(LatinToDevanagari(latin) == text, text << " -> " << latin);
  }
}

TEST_CASE("latin text survives the round trip through escapes") {
  for (const std::string text : {"hello नमस्ते", "Namaste, let's talk about मौसम",
                                 "a_b\\c", "कइ", "क्ह"}) {
    CHECK(LatinToDevanagari(DevanagariToLatin(text)) == text);
  }
  CHECK(DevanagariToLatin("कइ") == "ka_i");
  CHECK(DevanagariToLatin("क्ह") == "k_ha");
}

TEST_CASE("output is non-empty exactly when a mapped character is present") {
  CHECK(DevanagariToLatin("क").size() > 0);
  CHECK(DevanagariToLatin("  ") == "  ");
  CHECK(DevanagariToLatin("").empty());
}

TEST_CASE("unmapped input is reported") {
  CHECK(ThrownCode([] { DevanagariToLatin("ॸ"); }) ==
        ErrorCode::kUnmappableCharacter);
  CHECK(ThrownCode([] { DevanagariToLatin("\u094D"); }) ==
        ErrorCode::kUnmappableCharacter);
  CHECK(ThrownCode([] { DevanagariToLatin("अ\u093C"); }) ==
        ErrorCode::kUnmappableCharacter);
  CHECK(LatinToDevanagari(DevanagariToLatin("ं")) == "ं");

  auto doc = nlohmann::json::parse(TranslitScheme::Builtin().ToJson());
  doc["consonants"].erase(utf8::Encode(U'\u0958'));
  const TranslitScheme no_q = TranslitScheme::FromJson(doc.dump());
  CHECK(ThrownCode([&] { LatinToDevanagari("q", no_q); }) ==
        ErrorCode::kUnparseableSequence);
  CHECK(LatinToDevanagari("namaste", no_q) == "नमस्ते");
}

TEST_CASE("scheme files must be injective") {
  auto doc = nlohmann::json::parse(TranslitScheme::Builtin().ToJson());
  doc["consonants"]["ख"] = "k";
  CHECK(ThrownCode([&] { TranslitScheme::FromJson(doc.dump()); }) ==
        ErrorCode::kInvalidScheme);
  CHECK(ThrownCode([] { TranslitScheme::FromJson("{"); }) == ErrorCode::kInvalidScheme);
  const TranslitScheme again = TranslitScheme::FromJson(TranslitScheme::Builtin().ToJson());
  CHECK(again.ToJson() == TranslitScheme::Builtin().ToJson());
}

TEST_CASE("phoneme counts") {
  CHECK(CountPhonemes("a", Language::kEnglish) == 1);
  CHECK(CountPhonemes("नमस्ते", Language::kHindi) == 7);
  CHECK(CountPhonemes("namaste", Language::kHindi) == 7);
  // th is one phone, the final e is silent: th-i-s, i-s, a, k-l-ea-r.
  CHECK(CountPhonemes("this is a clear", Language::kEnglish) == 3 + 2 + 1 + 4);
  const std::string mix = "Namaste, let's talk about मौसम";
  int sum = 0;
  for (const ScriptSpan &s : SegmentScripts(mix))
    sum += CountPhonemes(s.text, s.script == Script::kDevanagari ? Language::kHindi
                                                                   : Language::kEnglish);
  CHECK(CountPhonemes(mix, Language::kMixed) == sum);
  CHECK(ThrownCode([] { CountPhonemes("", Language::kEnglish); }) ==
        ErrorCode::kEmptyTranscript);
  CHECK(ThrownCode([] { CountPhonemes("   ", Language::kHindi); }) ==
        ErrorCode::kEmptyTranscript);
}

TEST_CASE("language names") {
  CHECK(ParseLanguage("hindi") == Language::kHindi);
  CHECK(LanguageName(Language::kMixed) == "mixed");
  CHECK(ThrownCode([] { ParseLanguage("Hindi"); }) == ErrorCode::kUnknownLanguage);
}

}  // TEST_SUITE

}  // namespace
}  // namespace swara
