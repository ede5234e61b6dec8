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

#include "lqg/rank.hpp"

namespace lqg {

struct LinkJudgment {
  std::string question_id;
  bool has_image = false;
  bool correct_timestamp = false;  // false unless has_image
  bool relevant = false;           // false unless has_image
};

/// CSV with the header `question_id,has_image,correct_timestamp,relevant` and
/// true/false values. Throws ValidationError (with the line number).
std::vector<LinkJudgment> parse_judgments(std::string_view csv);
std::vector<LinkJudgment> load_judgments(const std::string& path);

/// Ratios over judgments with has_image; nullopt when there are none.
std::optional<double> correct_timestamp_accuracy(const std::vector<LinkJudgment>& judgments);
std::optional<double> relevant_accuracy(const std::vector<LinkJudgment>& judgments);

struct EvaluationReport {
  std::optional<double> correct_timestamp_accuracy;
  std::optional<double> relevant_accuracy;
  int generated = 0;  // bank questions plus those discarded during linking
  int linked = 0;
  int discarded = 0;
  int unlinked = 0;
  int judged = 0;
  int with_image = 0;
  std::vector<std::string> unjudged_linked;  // bank order
};

/// Throws UnknownQuestionId for judgments naming no bank question.
EvaluationReport evaluate(const QuestionBank& bank, const std::vector<LinkJudgment>& judgments);

/// Human-readable report; undefined accuracies print as "n/a".
std::string format_report(const EvaluationReport& r);

}  // namespace lqg
