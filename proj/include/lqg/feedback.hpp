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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lqg/text.hpp"

namespace lqg {

enum class WnPos { Noun, Verb };

struct Synset {
  long offset = 0;
  WnPos pos = WnPos::Noun;
  std::vector<std::string> lemmas;  // lower case, '_' for spaces
  std::vector<long> hypernyms;      // @ and @i pointers
};

class WordNetGraph {
 public:
  /// Reads index.{noun,verb} and data.{noun,verb}. Throws MissingFiles, ParseError.
  static WordNetGraph load(const std::string& dir);

  std::size_t synset_count() const { return noun_.size() + verb_.size(); }
  const Synset* synset(WnPos pos, long offset) const;
  /// Synsets for a lemma, after a small morphological fallback.
  std::vector<const Synset*> lookup(std::string_view lemma, WnPos pos) const;
  /// Longest hypernym path to a root, counting both ends; a root has depth 1.
  int depth(const Synset& s) const;
  /// The synset and all of its hypernyms.
  std::vector<const Synset*> ancestors(const Synset& s) const;

 private:
  std::map<long, Synset> noun_, verb_;
  std::map<std::string, std::vector<long>> noun_index_, verb_index_;
  std::map<std::pair<int, long>, int> depth_;

  const std::map<long, Synset>& table(WnPos pos) const { return pos == WnPos::Noun ? noun_ : verb_; }
  const std::map<std::string, std::vector<long>>& index(WnPos pos) const {
    return pos == WnPos::Noun ? noun_index_ : verb_index_;
  }
};

/// WORDNET_DIR when set, else the shipped miniature graph.
std::string default_wordnet_dir();

/// 1.0 for equal surfaces or stems, else the best Wu-Palmer score over noun
/// then verb synset pairs; 0.0 with no common hypernym or unknown lemmas.
double word_similarity(std::string_view a, std::string_view b, const WordNetGraph& g);

using IdfTable = std::unordered_map<std::string, double>;
/// `lemma TAB weight` lines.
IdfTable load_idf(const std::string& path);

/// Lower-cased content words (no stopwords, no punctuation).
std::vector<std::string> content_words(std::string_view text, const TextResources& res = TextResources::standard());

/// Mean of the two idf-weighted directional averages of best word matches.
double text_similarity(std::string_view answer, std::string_view model, const WordNetGraph& g,
                       const IdfTable* idf = nullptr);

enum class Grade { HIGH, MEDIUM, LOW };
std::string_view grade_name(Grade g);

struct Thresholds {
  double high = 0.75;
  double medium = 0.45;
};

struct WordMatch {
  std::string answer_word;
  std::string model_word;  // empty when the model answer has no content words
  double similarity = 0.0;
};

struct FeedbackGrade {
  double similarity = 0.0;
  Grade grade = Grade::LOW;
  std::vector<WordMatch> per_word;
};

/// Throws BadThresholds unless 0 < medium < high <= 1.
Grade grade_for(double similarity, const Thresholds& t = {});
FeedbackGrade grade(std::string_view answer, std::string_view model, const WordNetGraph& g,
                    const Thresholds& t = {}, const IdfTable* idf = nullptr);

}  // namespace lqg
