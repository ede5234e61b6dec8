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

#include "lqg/bank.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqg/error.hpp"

namespace lqg {

using nlohmann::json;

namespace {

constexpr int kBankVersion = 1;

json span_json(const Span& s) { return json::array({s.begin, s.end}); }

json question_json(const QuestionCandidate& q) {
  json j;
  j["id"] = q.id;
  j["question_text"] = q.question_text;
  j["wh_word"] = wh_name(q.wh);
  j["role"] = role_name(q.role);
  j["answer_kind"] = entity_kind_name(q.answer_kind);
  j["model_answer"] = q.model_answer;
  j["source_sentence"] = span_json(q.source_sentence);
  j["source_cue_range"] = json::array({q.first_cue, q.last_cue});
  j["segment_id"] = q.segment_id;
  j["flags"] = q.vague_pronoun ? json::array({"VAGUE_PRONOUN"}) : json::array();
  j["token_count"] = q.token_count;
  j["proper_noun_count"] = q.proper_noun_count;
  j["link"] = link_status_name(q.link);
  if (q.image_link) {
    j["image_link"] = {{"timestamp_ms", q.image_link->timestamp_ms},
                       {"label", q.image_link->label},
                       {"confidence", q.image_link->confidence},
                       {"frame_ref", q.image_link->frame_ref}};
  } else {
    j["image_link"] = nullptr;
  }
  j["features"] = q.features;
  j["score"] = q.score;
  return j;
}

json segment_json(const Segment& s) {
  return {{"segment_id", s.segment_id}, {"first_cue", s.first_cue},   {"last_cue", s.last_cue},
          {"char_span", span_json(s.char_span)}, {"start_ms", s.start_ms}, {"end_ms", s.end_ms},
          {"duration_ms", s.duration_ms}};
}

json report_json(const SegmentReport& r) {
  return {{"segment_id", r.segment_id}, {"sentences", r.sentences}, {"eligible", r.eligible},
          {"emitted", r.emitted},       {"skipped", r.skipped},     {"discarded", r.discarded}};
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError(where + "." + key + ": wrong type");
  }
}

Span span_from(const json& j, const char* key, const std::string& where) {
  auto v = get<std::vector<std::size_t>>(j, key, where);
  if (v.size() != 2 || v[0] > v[1]) throw SchemaError(where + "." + key + ": expected [begin, end]");
  return {v[0], v[1]};
}

template <typename E>
E enum_from(std::optional<E> v, const std::string& where) {
  if (!v) throw SchemaError(where + ": unknown value");
  return *v;
}

QuestionCandidate question_from(const json& j, const std::string& where) {
  QuestionCandidate q;
  q.id = get<std::string>(j, "id", where);
  q.question_text = get<std::string>(j, "question_text", where);
  q.wh = enum_from(wh_from_name(get<std::string>(j, "wh_word", where)), where + ".wh_word");
  q.role = enum_from(role_from_name(get<std::string>(j, "role", where)), where + ".role");
  q.answer_kind = enum_from(entity_kind_from_name(get<std::string>(j, "answer_kind", where)), where + ".answer_kind");
  q.model_answer = get<std::string>(j, "model_answer", where);
  q.source_sentence = span_from(j, "source_sentence", where);
  auto cues = get<std::vector<int>>(j, "source_cue_range", where);
  if (cues.size() != 2) throw SchemaError(where + ".source_cue_range: expected [first, last]");
  q.first_cue = cues[0];
  q.last_cue = cues[1];
  q.segment_id = get<int>(j, "segment_id", where);
  for (const auto& flag : get<std::vector<std::string>>(j, "flags", where)) {
    if (flag != "VAGUE_PRONOUN") throw SchemaError(where + ".flags: unknown flag " + flag);
    q.vague_pronoun = true;
  }
  q.token_count = get<int>(j, "token_count", where);
  q.proper_noun_count = get<int>(j, "proper_noun_count", where);
  q.link = enum_from(link_status_from_name(get<std::string>(j, "link", where)), where + ".link");
  if (auto it = j.find("image_link"); it != j.end() && !it->is_null()) {
    const std::string w = where + ".image_link";
    q.image_link = FrameLink{get<Millis>(*it, "timestamp_ms", w), get<std::string>(*it, "label", w),
                             get<double>(*it, "confidence", w), get<std::string>(*it, "frame_ref", w)};
  }
  q.features = get<std::vector<double>>(j, "features", where);
  q.score = get<double>(j, "score", where);
  return q;
}

}  // namespace

std::string bank_to_json(const QuestionBank& bank) {
  json j;
  j["version"] = kBankVersion;
  j["source_id"] = bank.source_id;
  j["quiz_id"] = bank.quiz_id;
  j["total"] = bank.total;
  j["counts"] = bank.counts;
  j["score_threshold"] = bank.score_threshold;
  j["config"] = bank.config;
  j["segments"] = json::array();
  for (const auto& s : bank.segments) j["segments"].push_back(segment_json(s));
  j["questions"] = json::array();
  for (const auto& q : bank.questions) j["questions"].push_back(question_json(q));
  j["report"] = json::array();
  for (const auto& r : bank.report) j["report"].push_back(report_json(r));
  return j.dump(2) + "\n";
}

QuestionBank bank_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("bank: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("bank: top level must be an object");
  if (get<int>(j, "version", "bank") != kBankVersion) throw SchemaError("bank: unsupported version");

  QuestionBank bank;
  bank.source_id = get<std::string>(j, "source_id", "bank");
  bank.quiz_id = get<std::string>(j, "quiz_id", "bank");
  bank.total = get<int>(j, "total", "bank");
  bank.counts = get<std::vector<int>>(j, "counts", "bank");
  bank.score_threshold = get<double>(j, "score_threshold", "bank");
  bank.config = get<std::map<std::string, std::string>>(j, "config", "bank");

  const auto segments = get<json>(j, "segments", "bank");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::string w = "segments[" + std::to_string(i) + "]";
    Segment s;
    s.segment_id = get<int>(segments[i], "segment_id", w);
    s.first_cue = get<int>(segments[i], "first_cue", w);
    s.last_cue = get<int>(segments[i], "last_cue", w);
    s.char_span = span_from(segments[i], "char_span", w);
    s.start_ms = get<Millis>(segments[i], "start_ms", w);
    s.end_ms = get<Millis>(segments[i], "end_ms", w);
    s.duration_ms = get<Millis>(segments[i], "duration_ms", w);
    bank.segments.push_back(s);
  }
  if (bank.counts.size() != bank.segments.size()) throw SchemaError("bank.counts: one entry per segment expected");

  const auto questions = get<json>(j, "questions", "bank");
  for (std::size_t i = 0; i < questions.size(); ++i) {
    auto q = question_from(questions[i], "questions[" + std::to_string(i) + "]");
    bool known = false;
    for (const auto& s : bank.segments) known = known || s.segment_id == q.segment_id;
    if (!known) throw SchemaError(q.id + ": segment_id " + std::to_string(q.segment_id) + " does not exist");
    if (q.link == LinkStatus::DISCARDED) throw SchemaError(q.id + ": DISCARDED questions do not belong in a bank");
    bank.questions.push_back(std::move(q));
  }

  const auto report = get<json>(j, "report", "bank");
  for (std::size_t i = 0; i < report.size(); ++i) {
    const std::string w = "report[" + std::to_string(i) + "]";
    SegmentReport r;
    r.segment_id = get<int>(report[i], "segment_id", w);
    r.sentences = get<int>(report[i], "sentences", w);
    r.eligible = get<int>(report[i], "eligible", w);
    r.emitted = get<int>(report[i], "emitted", w);
    r.skipped = get<int>(report[i], "skipped", w);
    r.discarded = get<int>(report[i], "discarded", w);
    bank.report.push_back(r);
  }
  return bank;
}

QuestionBank load_bank(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read bank file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return bank_from_json(ss.str());
}

void save_bank(const QuestionBank& bank, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write bank file " + path);
  out << bank_to_json(bank);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace lqg
