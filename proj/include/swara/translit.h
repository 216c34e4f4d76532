// swara/translit.h

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

#ifndef SWARA_TRANSLIT_H_
#define SWARA_TRANSLIT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace swara {

enum class Script { kLatin, kDevanagari, kNeutral };
enum class Language { kHindi, kEnglish, kMixed };

std::string_view ScriptName(Script s);
std::string_view LanguageName(Language l);
/// Accepts "hindi", "english", "mixed"; throws kUnknownLanguage otherwise.
Language ParseLanguage(std::string_view name);

/// A maximal run of one script. Offsets count code points, end exclusive.
struct ScriptSpan {
  std::string text;
  Script script = Script::kNeutral;
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const ScriptSpan &, const ScriptSpan &) = default;
};

/// Partitions `text` into script spans. U+0900..U+097F is Devanagari, ASCII
/// letters are Latin, everything else is neutral. A neutral run joins the
/// span before it; only a leading neutral run stands alone (or the whole
/// string, when it has no letters at all). Adjacent spans always differ in
/// script.
std::vector<ScriptSpan> SegmentScripts(std::string_view text);

/// Reversible Devanagari <-> ASCII romanization table.
///
/// Romanization is ITRANS-like: each consonant is written with its inherent
/// "a" unless followed by a vowel sign or virama, a dead consonant is written
/// bare, and signs (anusvara "M", candrabindu ".N", visarga "H", ...) have
/// their own tokens. Because the Latin side is read back by greedy
/// longest-match, ToLatin inserts the separator "_" wherever two adjacent
/// tokens would otherwise fuse ("ka_i" for क इ, "k_ha" for क्ह), and escapes
/// literal Latin letters and reserved characters with a backslash. Together
/// these make ToDevanagari(ToLatin(x)) == x for every text the scheme covers.
class TranslitScheme {
 public:
  struct Vowel {
    char32_t independent = 0;
    char32_t matra = 0;  // 0 for the inherent vowel
    std::string latin;
  };

  /// The shipped scheme, "swara-itrans-v1".
  static const TranslitScheme &Builtin();

  /// Scheme file (JSON):
  ///   {"name": str, "version": 1,
  ///    "consonants": {"क": "k", ...},
  ///    "vowels": [{"independent": "अ", "matra": "", "latin": "a"}, ...],
  ///    "signs": {"ं": "M", ...},
  ///    "nukta": "~"}
  /// Throws kInvalidScheme if the table is not injective or is malformed.
  static TranslitScheme FromJson(std::string_view json);
  static TranslitScheme Load(const std::filesystem::path &path);
  std::string ToJson() const;

  const std::string &name() const { return name_; }

  /// Throws kUnmappableCharacter (with the code point offset) for a
  /// Devanagari code point outside the table, including a virama or nukta
  /// with no consonant to attach to. Signs are tokens of their own and need
  /// no base. Non-Devanagari characters pass through; Devanagari digits pass
  /// through unchanged.
  std::string ToLatin(std::string_view devanagari) const;

  /// Greedy longest-match inverse. Throws kUnparseableSequence (with the byte
  /// offset) when a Latin letter starts no token.
  std::string ToDevanagari(std::string_view latin) const;

  bool IsConsonant(char32_t cp) const { return consonants_.count(cp) != 0; }

 private:
  enum class TokenKind { kConsonant, kVowel, kSign, kNukta };
  struct Token {
    TokenKind kind;
    char32_t primary = 0;  // consonant / independent vowel / sign
    char32_t matra = 0;    // vowels only
    bool inherent = false;
  };

  TranslitScheme() = default;
  void Index();  // builds the Latin-side lookup and validates injectivity
  std::size_t LongestMatch(std::string_view s, std::size_t pos,
                           const Token **tok) const;

  std::string name_;
  std::map<char32_t, std::string> consonants_;
  std::vector<Vowel> vowels_;
  std::map<char32_t, std::string> signs_;
  std::string nukta_latin_;

  std::map<char32_t, std::size_t> by_independent_;  // -> vowels_ index
  std::map<char32_t, std::size_t> by_matra_;
  std::map<std::string, Token, std::less<>> tokens_;
  std::size_t max_token_len_ = 0;
};

inline constexpr char32_t kVirama = 0x094D;
inline constexpr char32_t kNukta = 0x093C;

std::string DevanagariToLatin(std::string_view text,
                              const TranslitScheme &scheme = TranslitScheme::Builtin());
std::string LatinToDevanagari(std::string_view text,
                              const TranslitScheme &scheme = TranslitScheme::Builtin());

/// Rule-based phone count.
///
/// Devanagari, per word: a consonant (with or without nukta) is one phone, a
/// following vowel sign one more; the inherent vowel counts unless the
/// consonant carries a virama or ends the word; independent vowels,
/// anusvara and visarga count one; candrabindu, avagraha and digits count
/// zero; ॐ counts two.
///
/// Latin, per word (letters and inner apostrophes), case-insensitive:
/// apostrophes are dropped; a final "e" after a consonant is silent when an
/// earlier vowel exists; th/sh/ch/ph are one phone; each run of vowels
/// (a e i o u) is one phone; every other letter is one phone.
///
/// kHindi reads Devanagari with the Devanagari rules and romanized words by
/// first converting them with the built-in scheme (falling back to the Latin
/// rules when they do not parse). kEnglish applies the Latin rules to Latin
/// spans and the Devanagari rules to Devanagari spans. kMixed segments the
/// text and uses each span's own script rules, so it equals the sum of the
/// per-span counts.
///
/// Throws kEmptyTranscript for empty or whitespace-only text.
int CountPhonemes(std::string_view text, Language language);

}  // namespace swara

#endif  // SWARA_TRANSLIT_H_
