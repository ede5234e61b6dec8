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

#include "lqg/imagelink.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqg/error.hpp"
#include "lqg/process.hpp"
#include "lqg/stemmer.hpp"
#include "strutil.hpp"

namespace lqg {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  return *it;
}

double unit_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw SchemaError(where + ": expected a number");
  double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) throw SchemaError(where + ": " + v.dump() + " is outside [0,1]");
  return x;
}

std::vector<std::string> word_stems(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text))
    if (!t.is_punct()) out.push_back(porter_stem(detail::to_lower(t.surface)));
  return out;
}

bool contains_phrase(const std::vector<std::string>& words, const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), phrase.begin(), phrase.end()) != words.end();
}

}  // namespace

DetectionSet parse_detections(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("detections: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("detections: top level must be an object");

  DetectionSet set;
  const auto& sid = field(j, "source_id", "detections");
  if (!sid.is_string()) throw SchemaError("source_id: expected a string");
  set.source_id = sid.get<std::string>();

  const auto& labels = field(j, "class_labels", "detections");
  if (!labels.is_array()) throw SchemaError("class_labels: expected an array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string() || labels[i].get<std::string>().empty())
      throw SchemaError("class_labels[" + std::to_string(i) + "]: expected a non-empty string");
    set.class_labels.push_back(labels[i].get<std::string>());
  }

  const auto& records = field(j, "records", "detections");
  if (!records.is_array()) throw SchemaError("records: expected an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string where = "records[" + std::to_string(i) + "]";
    const auto& r = records[i];
    if (!r.is_object()) throw SchemaError(where + ": expected an object");
    DetectionRecord rec;
    const auto& ts = field(r, "timestamp_ms", where);
    if (!ts.is_number_integer() || ts.get<long long>() < 0)
      throw SchemaError(where + ".timestamp_ms: expected a non-negative integer");
    rec.timestamp_ms = ts.get<Millis>();
    const auto& label = field(r, "label", where);
    if (!label.is_string() || label.get<std::string>().empty())
      throw SchemaError(where + ".label: expected a non-empty string");
    rec.label = label.get<std::string>();
    if (std::find(set.class_labels.begin(), set.class_labels.end(), rec.label) == set.class_labels.end())
      throw UnknownLabel(where + ": label \"" + rec.label + "\" is not in class_labels");
    rec.confidence = unit_number(field(r, "confidence", where), where + ".confidence");
    const auto& bbox = field(r, "bbox", where);
    if (!bbox.is_array() || bbox.size() != 4) throw SchemaError(where + ".bbox: expected [x, y, w, h]");
    for (std::size_t k = 0; k < 4; ++k) rec.bbox[k] = unit_number(bbox[k], where + ".bbox");
    constexpr double eps = 1e-9;
    if (rec.bbox[0] + rec.bbox[2] > 1.0 + eps || rec.bbox[1] + rec.bbox[3] > 1.0 + eps)
      throw SchemaError(where + ".bbox: box leaves the unit square");
    set.records.push_back(std::move(rec));
  }

  auto by_time = [](const DetectionRecord& a, const DetectionRecord& b) { return a.timestamp_ms < b.timestamp_ms; };
  if (!std::is_sorted(set.records.begin(), set.records.end(), by_time)) {
    std::stable_sort(set.records.begin(), set.records.end(), by_time);
    set.warnings.push_back("records were not sorted by timestamp_ms; sorted on load");
  }
  return set;
}

DetectionSet load_detections(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read detections file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_detections(ss.str());
}

std::optional<std::string> label_in_question(const QuestionCandidate& q,
                                             const std::vector<std::string>& class_labels) {
  const auto question = word_stems(q.question_text);
  const auto answer = word_stems(q.model_answer);
  for (const auto& label : class_labels) {
    auto phrase = word_stems(label);
    if (contains_phrase(question, phrase) || contains_phrase(answer, phrase)) return label;
  }
  return std::nullopt;
}

std::pair<Millis, Millis> source_time_range(const QuestionCandidate& q, const TranscriptDocument& doc,
                                            Millis pad_ms) {
  const Millis start = doc.cue(q.first_cue).start_ms - pad_ms;
  return {std::max<Millis>(0, start), doc.cue(q.last_cue).end_ms + pad_ms};
}

LinkOutcome link(const QuestionCandidate& q, const DetectionSet& detections, const TranscriptDocument& doc,
                 const LinkParams& params) {
  if (detections.source_id != doc.source_id)
    throw SourceMismatch("detections are for \"" + detections.source_id + "\" but the transcript is \"" +
                         doc.source_id + "\"");
  LinkOutcome out;
  auto label = label_in_question(q, detections.class_labels);
  if (!label) {
    out.status = LinkStatus::UNLINKED;
    return out;
  }
  const auto [from, to] = source_time_range(q, doc, params.pad_ms);
  const DetectionRecord* best = nullptr;
  for (const auto& r : detections.records) {
    if (r.timestamp_ms < from) continue;
    if (r.timestamp_ms > to) break;
    if (r.label != *label || r.confidence < params.min_confidence) continue;
    if (!best || r.confidence > best->confidence) best = &r;  // records are time-sorted: ties keep the earliest
  }
  if (!best) {
    out.status = LinkStatus::DISCARDED;
    return out;
  }
  out.status = LinkStatus::LINKED;
  out.frame = FrameLink{best->timestamp_ms, best->label, best->confidence, ""};
  return out;
}

std::string CommandFrameExtractor::extract(const std::string& video_ref, Millis timestamp_ms,
                                           const std::string& out_path) {
  auto argv = split_command(command_);
  argv.push_back(video_ref);
  argv.push_back(std::to_string(timestamp_ms));
  argv.push_back(out_path);
  ProcessResult result;
  try {
    result = run_process(argv);
  } catch (const std::exception& e) {
    throw ExtractorFailure(e.what());
  }
  if (result.exit_code != 0)
    throw ExtractorFailure("frame extractor exited with status " + std::to_string(result.exit_code));
  auto lines = detail::split_lines(result.stdout_text);
  auto first = lines.empty() ? std::string_view{} : detail::trim(lines.front());
  return first.empty() ? out_path : std::string(first);
}

std::string extract_frame(const std::string& video_ref, Millis timestamp_ms, FrameExtractor* extractor,
                          const std::string& out_dir, const std::string& source_id) {
  if (!extractor) return "";
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  const std::string name = (source_id.empty() ? "frame" : source_id) + "_" + std::to_string(timestamp_ms) + ".png";
  const std::string written = extractor->extract(video_ref, timestamp_ms, (fs::path(out_dir) / name).string());
  if (!fs::exists(written)) throw ExtractorFailure("frame extractor did not write " + written);
  const fs::path target = fs::path(out_dir) / fs::path(written).filename();
  if (!fs::equivalent(written, target, ec)) {
    fs::copy_file(written, target, fs::copy_options::overwrite_existing, ec);
    if (ec) throw ExtractorFailure("cannot copy " + written + " into " + out_dir + ": " + ec.message());
  }
  return target.filename().string();
}

}  // namespace lqg
