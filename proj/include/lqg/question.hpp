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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqg/text.hpp"
#include "lqg/transcript.hpp"

namespace lqg {

enum class WhWord { Who, What, When, Where, HowMany };
enum class Role { SUBJECT, OBJECT, ADJUNCT };
enum class LinkStatus { PENDING, LINKED, DISCARDED, UNLINKED };

std::string_view wh_name(WhWord wh);  // "Who" ... "How many"
std::string_view role_name(Role role);
std::string_view link_status_name(LinkStatus status);
std::optional<WhWord> wh_from_name(std::string_view name);
std::optional<Role> role_from_name(std::string_view name);
std::optional<LinkStatus> link_status_from_name(std::string_view name);
std::optional<EntityKind> entity_kind_from_name(std::string_view name);

struct FrameLink {
  Millis timestamp_ms = 0;
  std::string label;
  double confidence = 0.0;
  std::string frame_ref;  // empty when no extractor ran
};

struct QuestionCandidate {
  std::string id;  // assigned when the bank is built
  std::string question_text;
  WhWord wh = WhWord::What;
  Role role = Role::SUBJECT;
  EntityKind answer_kind = EntityKind::NP_OTHER;
  std::string model_answer;
  Span source_sentence;  // byte span into the flattened transcript
  int first_cue = 0;
  int last_cue = 0;
  int segment_id = 0;
  bool vague_pronoun = false;
  int token_count = 0;        // word tokens of the question text
  int proper_noun_count = 0;  // NNP tokens carried into the question

  LinkStatus link = LinkStatus::PENDING;
  std::optional<FrameLink> image_link;
  std::vector<double> features;
  double score = 0.0;
};

}  // namespace lqg
