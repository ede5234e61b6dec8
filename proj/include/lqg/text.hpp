// Copyright 2026 The lectureqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lqg/transcript.hpp"

namespace lqg {

/// Closed Penn-style tag subset. AUX covers finite forms of be/do and
/// have when it governs a participle.
enum class Tag { NN, NNS, NNP, VB, VBD, VBZ, VBP, VBG, VBN, MD, DT, IN, JJ, RB, PRP, CD, AUX, OTHER };

std::string_view tag_name(Tag tag);
std::optional<Tag> tag_from_name(std::string_view name);

inline bool is_noun(Tag t) { return t == Tag::NN || t == Tag::NNS || t == Tag::NNP; }
inline bool is_finite_verb(Tag t) {
  return t == Tag::VBD || t == Tag::VBZ || t == Tag::VBP || t == Tag::MD || t == Tag::AUX;
}
inline bool is_verb(Tag t) {
  return is_finite_verb(t) || t == Tag::VB || t == Tag::VBG || t == Tag::VBN;
}

/// Half-open byte range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  std::string stem;  // lowercase
  Tag pos = Tag::OTHER;
  bool is_stopword = false;
  Span span;

  bool is_punct() const;
};

struct Sentence {
  std::string text;
  Span span;  // into the TimedText (or the string it was split from)
  std::vector<Token> tokens;
};

enum class EntityKind { PERSON, DATE, NUMBER, LOCATION, NP_OTHER };

std::string_view entity_kind_name(EntityKind kind);

struct EntitySpan {
  std::size_t first = 0;  // token indices, inclusive
  std::size_t last = 0;
  EntityKind kind = EntityKind::NP_OTHER;
  bool operator==(const EntitySpan&) const = default;
};

/// The shipped word tables (see data/README.md). Immutable after load.
class TextResources {
 public:
  /// Loads every table from `dir`. Throws ResourceError.
  static TextResources load(const std::string& dir);
  /// Process-wide instance loaded from $LQG_DATA_DIR or the build-time data path.
  static const TextResources& standard();

  bool is_stopword(std::string_view lower) const { return stopwords_.count(std::string(lower)) > 0; }
  bool is_abbreviation(std::string_view surface) const;
  bool is_given_name(std::string_view surface) const { return given_names_.count(std::string(surface)) > 0; }
  bool is_honorific(std::string_view surface) const { return honorifics_.count(std::string(surface)) > 0; }
  bool is_location(std::string_view surface) const { return locations_.count(std::string(surface)) > 0; }
  bool is_month(std::string_view surface) const;
  /// Lexicon tags for a lowercase word, default first; empty when unknown.
  const std::vector<Tag>* lexicon(std::string_view lower) const;
  bool is_known_verb_base(std::string_view lower) const;

  /// Irregular past/participle -> base ("sat" -> "sit"); nullopt otherwise.
  std::optional<std::string> irregular_base(std::string_view lower) const;

  std::size_t stopword_count() const { return stopwords_.size(); }
  std::size_t lexicon_size() const { return lexicon_.size(); }

 private:
  std::set<std::string> stopwords_;
  std::set<std::string> abbreviations_;
  std::set<std::string> given_names_;
  std::set<std::string> honorifics_;
  std::set<std::string> locations_;
  std::set<std::string> months_;
  std::map<std::string, std::vector<Tag>, std::less<>> lexicon_;
  std::map<std::string, std::string, std::less<>> irregular_base_;
  std::set<std::string, std::less<>> verb_bases_;
};

/// Whitespace split; leading/trailing punctuation become their own tokens;
/// internal hyphens, apostrophes and number separators stay ("1,000",
/// "3.5", "state-of-the-art"); shipped abbreviations keep their period.
/// Spans are offset by `base`. Only surface and span are filled.
std::vector<Token> tokenize(std::string_view text, std::size_t base = 0,
                            const TextResources& res = TextResources::standard());

/// Splits on . ? ! followed by whitespace and a capital letter (or digit),
/// or by the end of text; abbreviation-guarded. Returns untokenized sentences.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const TextResources& res = TextResources::standard());

/// Flags stopwords (list members and all punctuation). Never deletes tokens.
void remove_stopwords(std::vector<Token>& tokens, const TextResources& res = TextResources::standard());

/// Fills `stem` for every token (lowercased Porter stem; punctuation kept as is).
void stem_tokens(std::vector<Token>& tokens);

/// Lexicon-first tagging with suffix fallback and a few context rules.
/// `sentence_initial` says whether tokens[0] starts a sentence.
void pos_tag(std::vector<Token>& tokens, const TextResources& res = TextResources::standard(),
             bool sentence_initial = true);

/// Tokenize, flag stopwords, stem and tag.
std::vector<Token> analyze(std::string_view text, std::size_t base = 0,
                           const TextResources& res = TextResources::standard(),
                           bool sentence_initial = true);

/// Sentence split + analyze over a flattened transcript.
std::vector<Sentence> analyze_sentences(const TimedText& tt,
                                        const TextResources& res = TextResources::standard());

/// PERSON / DATE / NUMBER / LOCATION / NP_OTHER spans over tagged tokens.
/// Pairwise disjoint, ordered by position.
std::vector<EntitySpan> detect_entities(const std::vector<Token>& tokens,
                                        const TextResources& res = TextResources::standard());

/// Base form of a verb: irregular table, then -ies/-es/-s/-ed/-ing stripping
/// checked against the lexicon's verb bases ("minimizes" -> "minimize").
std::string verb_base_form(std::string_view verb, const TextResources& res = TextResources::standard());

}  // namespace lqg
