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

#include "lqg/evalmetrics.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lqg/error.hpp"
#include "strutil.hpp"

namespace lqg {

namespace {

bool parse_bool(std::string_view field, const std::string& where) {
  const auto v = detail::to_lower(detail::trim(field));
  if (v == "true") return true;
  if (v == "false") return false;
  throw ValidationError(where + ": expected true or false, got \"" + std::string(field) + "\"");
}

std::optional<double> ratio(int num, int den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / den;
}

std::string fmt(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

}  // namespace

std::vector<LinkJudgment> parse_judgments(std::string_view csv) {
  auto lines = detail::split_lines(csv);
  std::vector<LinkJudgment> out;
  std::set<std::string> seen;
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "judgments line " + std::to_string(i + 1);
    auto line = detail::trim(lines[i]);
    if (line.empty()) continue;
    auto fields = detail::split(line, ',');
    if (!header) {
      if (fields.size() != 4 || detail::trim(fields[0]) != "question_id" || detail::trim(fields[1]) != "has_image" ||
          detail::trim(fields[2]) != "correct_timestamp" || detail::trim(fields[3]) != "relevant")
        throw ValidationError(where + ": expected header question_id,has_image,correct_timestamp,relevant");
      header = true;
      continue;
    }
    if (fields.size() != 4) throw ValidationError(where + ": expected 4 fields");
    LinkJudgment j;
    j.question_id = std::string(detail::trim(fields[0]));
    if (j.question_id.empty()) throw ValidationError(where + ": empty question_id");
    j.has_image = parse_bool(fields[1], where);
    j.correct_timestamp = parse_bool(fields[2], where);
    j.relevant = parse_bool(fields[3], where);
    if (!j.has_image && (j.correct_timestamp || j.relevant))
      throw ValidationError(where + ": correct_timestamp and relevant must be false without an image");
    if (!seen.insert(j.question_id).second) throw ValidationError(where + ": duplicate question_id " + j.question_id);
    out.push_back(std::move(j));
  }
  if (!header) throw ValidationError("judgments: missing header");
  return out;
}

std::vector<LinkJudgment> load_judgments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read judgments file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_judgments(ss.str());
}

std::optional<double> correct_timestamp_accuracy(const std::vector<LinkJudgment>& judgments) {
  int num = 0, den = 0;
  for (const auto& j : judgments)
    if (j.has_image) {
      ++den;
      num += j.correct_timestamp;
    }
  return ratio(num, den);
}

std::optional<double> relevant_accuracy(const std::vector<LinkJudgment>& judgments) {
  int num = 0, den = 0;
  for (const auto& j : judgments)
    if (j.has_image) {
      ++den;
      num += j.relevant;
    }
  return ratio(num, den);
}

EvaluationReport evaluate(const QuestionBank& bank, const std::vector<LinkJudgment>& judgments) {
  EvaluationReport r;
  std::set<std::string> judged;
  for (const auto& j : judgments) {
    if (!bank.find(j.question_id)) throw UnknownQuestionId(j.question_id + " is not in the bank");
    judged.insert(j.question_id);
    r.with_image += j.has_image;
  }
  r.judged = static_cast<int>(judged.size());
  for (const auto& s : bank.report) r.discarded += s.discarded;
  for (const auto& q : bank.questions) {
    if (q.link == LinkStatus::LINKED) {
      ++r.linked;
      if (!judged.count(q.id)) r.unjudged_linked.push_back(q.id);
    } else if (q.link == LinkStatus::UNLINKED) {
      ++r.unlinked;
    }
  }
  r.generated = static_cast<int>(bank.questions.size()) + r.discarded;
  r.correct_timestamp_accuracy = correct_timestamp_accuracy(judgments);
  r.relevant_accuracy = relevant_accuracy(judgments);
  return r;
}

std::string format_report(const EvaluationReport& r) {
  std::ostringstream out;
  out << "correct_timestamp_accuracy: " << fmt(r.correct_timestamp_accuracy) << "\n"
      << "relevant_accuracy: " << fmt(r.relevant_accuracy) << "\n"
      << "generated: " << r.generated << "\n"
      << "linked: " << r.linked << "\n"
      << "discarded: " << r.discarded << "\n"
      << "unlinked: " << r.unlinked << "\n"
      << "judged: " << r.judged << " (" << r.with_image << " with image)\n"
      << "unjudged_linked: " << r.unjudged_linked.size();
  if (!r.unjudged_linked.empty()) out << " [" << detail::join(r.unjudged_linked, ", ") << "]";
  out << "\n";
  return out.str();
}

}  // namespace lqg
