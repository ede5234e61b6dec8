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

#include <string>
#include <string_view>
#include <vector>

#include "lqg/question.hpp"
#include "lqg/text.hpp"
#include "lqg/tiling.hpp"

namespace lqg {

/// Declarative, has a finite verb, 5 to 40 tokens (punctuation included).
bool is_eligible(const Sentence& s);
std::vector<Sentence> eligible_sentences(const std::vector<Sentence>& sentences);

/// True when the clause subject is a personal pronoun.
bool has_vague_subject(const Sentence& s);

/// Wh word for an entity in context: NUMBER directly before NN/NNS gives How many.
WhWord wh_word_for(const std::vector<Token>& tokens, const EntitySpan& entity);

/// The answer phrase an entity would yield, with the tokens the transform removes.
struct AnswerPhrase {
  EntitySpan entity;
  Role role = Role::SUBJECT;
  WhWord wh = WhWord::What;
  std::string surface;          // removed text as it appears in the sentence
  std::string question_phrase;  // "Who", "How many layers", ...
  std::size_t remove_first = 0;
  std::size_t remove_last = 0;  // inclusive
};

/// Throws UnsupportedStructure when the entity cannot be questioned by the rule table.
AnswerPhrase classify_phrase(const Sentence& s, const EntitySpan& entity);

/// Builds the question for one entity. `s.tokens` must be tagged and their
/// spans relative to the same text as `s.span`. Throws UnsupportedStructure.
QuestionCandidate transform(const Sentence& s, const EntitySpan& entity,
                            const TextResources& res = TextResources::standard());

/// Spacing, stranded commas, capitalization and exactly one trailing '?'.
std::string postprocess(std::string_view raw);

struct SegmentReport {
  int segment_id = 0;
  int sentences = 0;
  int eligible = 0;
  int emitted = 0;
  int skipped = 0;  // answer phrases the rule table could not transform
  int discarded = 0;  // filled by image linking
  bool operator==(const SegmentReport&) const = default;
};

/// Candidates for the sentences that start inside `segment`, in sentence then
/// phrase order. Cue ranges are resolved against `tt`.
std::vector<QuestionCandidate> generate(const Segment& segment, const std::vector<Sentence>& sentences,
                                        const TimedText& tt, SegmentReport* report = nullptr,
                                        const TextResources& res = TextResources::standard());

}  // namespace lqg
