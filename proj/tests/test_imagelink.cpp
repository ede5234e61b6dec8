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

#include <doctest.h>

#include <filesystem>
#include <random>

#include "lqg/error.hpp"
#include "lqg/imagelink.hpp"
#include "test_support.hpp"

using namespace lqg;
namespace fs = std::filesystem;

namespace {

// Cue 70 covers 276 000 - 280 000 ms.
TranscriptDocument lecture_doc() {
  TranscriptDocument doc{"lecture", {}};
  for (int i = 1; i <= 100; ++i) {
    Millis start = static_cast<Millis>(i - 1) * 4000;
    doc.cues.push_back({i, start, start + 4000, "cue " + std::to_string(i)});
  }
  return doc;
}

QuestionCandidate question(const std::string& text, int first_cue, int last_cue, const std::string& answer = "x") {
  QuestionCandidate q;
  q.question_text = text;
  q.model_answer = answer;
  q.first_cue = first_cue;
  q.last_cue = last_cue;
  return q;
}

std::string detections_json(const std::string& records) {
  return R"({"source_id": "lecture", "class_labels": ["equation", "graph", "neural network"], "records": [)" +
         records + "]}";
}

DetectionSet equation_at(Millis t, double conf = 0.91) {
  return parse_detections(detections_json(R"({"timestamp_ms": )" + std::to_string(t) +
                                          R"(, "label": "equation", "confidence": )" + std::to_string(conf) +
                                          R"(, "bbox": [0.1, 0.1, 0.5, 0.3]})"));
}

const std::vector<std::string> kLabels = {"equation", "graph", "neural network"};

}  // namespace

TEST_CASE("parse_detections") {
  auto one = equation_at(278000);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].timestamp_ms == 278000);
  CHECK(one.records[0].confidence == doctest::Approx(0.91));
  CHECK(one.source_id == "lecture");

  CHECK(parse_detections(detections_json("")).records.empty());
  CHECK_THROWS_AS(equation_at(1000, 1.2), SchemaError);
  CHECK_THROWS_AS(parse_detections(detections_json(
                      R"({"timestamp_ms": 5, "label": "cat", "confidence": 0.5, "bbox": [0, 0, 1, 1]})")),
                  UnknownLabel);
  CHECK_THROWS_AS(parse_detections(detections_json(
                      R"({"timestamp_ms": 5, "label": "graph", "confidence": 0.5, "bbox": [0.6, 0, 0.5, 1]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_detections(detections_json(
                      R"({"timestamp_ms": -5, "label": "graph", "confidence": 0.5, "bbox": [0, 0, 1, 1]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_detections(detections_json(R"({"label": "graph", "confidence": 0.5, "bbox": [0, 0, 1, 1]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_detections("[1, 2"), SchemaError);
  CHECK_THROWS_AS(parse_detections(R"({"source_id": "x", "records": []})"), SchemaError);

  auto unsorted = parse_detections(detections_json(
      R"({"timestamp_ms": 9000, "label": "graph", "confidence": 0.5, "bbox": [0, 0, 1, 1]},
         {"timestamp_ms": 1000, "label": "graph", "confidence": 0.6, "bbox": [0, 0, 1, 1]})"));
  CHECK(unsorted.records[0].timestamp_ms == 1000);
  CHECK(unsorted.warnings.size() == 1);
}

TEST_CASE("label_in_question") {
  CHECK(label_in_question(question("What does this equation signify?", 1, 1), kLabels) == "equation");
  CHECK_FALSE(label_in_question(question("Who discovered radium?", 1, 1), kLabels).has_value());
  CHECK(label_in_question(question("What do these graphs show?", 1, 1), kLabels) == "graph");
  CHECK(label_in_question(question("What does the Neural Network learn?", 1, 1), kLabels) == "neural network");
  CHECK_FALSE(label_in_question(question("What does the neural model learn?", 1, 1), kLabels).has_value());
  CHECK_FALSE(label_in_question(question("What does the inequality bound?", 1, 1), kLabels).has_value());
  CHECK(label_in_question(question("What does it show?", 1, 1, "the loss graph"), kLabels) == "graph");
  // List order decides between two labels.
  CHECK(label_in_question(question("Which graph shows the equation?", 1, 1), kLabels) == "equation");
}

TEST_CASE("source_time_range") {
  auto doc = lecture_doc();
  // Cues 3-4 span 8 000 - 16 000.
  CHECK(source_time_range(question("q", 3, 4), doc, 2000) == std::pair<Millis, Millis>{6000, 18000});
  CHECK(source_time_range(question("q", 1, 1), doc, 2000) == std::pair<Millis, Millis>{0, 6000});
  CHECK(source_time_range(question("q", 3, 4), doc, 0) == std::pair<Millis, Millis>{8000, 16000});
}

TEST_CASE("link outcomes for the equation question") {
  auto doc = lecture_doc();
  auto q = question("What does this equation signify?", 70, 70, "the loss");

  auto linked = link(q, equation_at(278000), doc);
  CHECK(linked.status == LinkStatus::LINKED);
  REQUIRE(linked.frame.has_value());
  CHECK(linked.frame->timestamp_ms == 278000);
  CHECK(linked.frame->label == "equation");
  CHECK(linked.frame->frame_ref.empty());

  CHECK(link(q, equation_at(10000), doc).status == LinkStatus::DISCARDED);
  CHECK(link(q, parse_detections(detections_json("")), doc).status == LinkStatus::DISCARDED);
  CHECK(link(q, equation_at(278000, 0.4), doc).status == LinkStatus::DISCARDED);  // below min_confidence

  auto radium = question("Who discovered radium?", 70, 70, "Marie Curie");
  CHECK(link(radium, equation_at(278000), doc).status == LinkStatus::UNLINKED);
  CHECK(link(radium, parse_detections(detections_json("")), doc).status == LinkStatus::UNLINKED);

  auto other = equation_at(278000);
  other.source_id = "other";
  CHECK_THROWS_AS(link(q, other, doc), SourceMismatch);
}

TEST_CASE("highest confidence wins, earliest on ties") {
  auto doc = lecture_doc();
  auto q = question("What does this equation signify?", 70, 70);
  auto set = parse_detections(detections_json(
      R"({"timestamp_ms": 275000, "label": "equation", "confidence": 0.7, "bbox": [0, 0, 1, 1]},
         {"timestamp_ms": 277000, "label": "equation", "confidence": 0.9, "bbox": [0, 0, 1, 1]},
         {"timestamp_ms": 279000, "label": "equation", "confidence": 0.9, "bbox": [0, 0, 1, 1]},
         {"timestamp_ms": 279500, "label": "graph", "confidence": 0.99, "bbox": [0, 0, 1, 1]})"));
  auto out = link(q, set, doc);
  REQUIRE(out.status == LinkStatus::LINKED);
  CHECK(out.frame->timestamp_ms == 277000);
}

TEST_CASE("link properties on random detections") {
  auto doc = lecture_doc();
  std::mt19937_64 rng(41);
  const std::vector<std::string> texts = {"What does this equation signify?", "What do these graphs show?",
                                          "Who discovered radium?", "How many layers does the neural network have?",
                                          "What does the model minimize?"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string records;
    int n = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < n; ++i) {
      if (i) records += ",";
      records += R"({"timestamp_ms": )" + std::to_string(std::uniform_int_distribution<int>(0, 400000)(rng)) +
                 R"(, "label": ")" + kLabels[rng() % 3] + R"(", "confidence": )" +
                 std::to_string(std::uniform_real_distribution<double>(0, 1)(rng)) + R"(, "bbox": [0, 0, 1, 1]})";
    }
    auto set = parse_detections(detections_json(records));
    int first = std::uniform_int_distribution<int>(1, 100)(rng);
    int last = std::min(100, first + std::uniform_int_distribution<int>(0, 3)(rng));
    auto q = question(texts[rng() % texts.size()], first, last);
    const bool labelled = label_in_question(q, set.class_labels).has_value();

    Millis previous_pad = -1;
    LinkStatus previous = LinkStatus::PENDING;
    for (Millis pad : {0, 1000, 2000, 5000, 20000}) {
      LinkParams params;
      params.pad_ms = pad;
      auto out = link(q, set, doc, params);
      CHECK(out.status != LinkStatus::PENDING);
      CHECK(out.frame.has_value() == (out.status == LinkStatus::LINKED));
      CHECK((out.status == LinkStatus::UNLINKED) == !labelled);
      if (out.status == LinkStatus::LINKED) {
        auto [from, to] = source_time_range(q, doc, pad);
        CHECK(out.frame->timestamp_ms >= from);
        CHECK(out.frame->timestamp_ms <= to);
      }
      if (previous_pad >= 0 && previous == LinkStatus::LINKED) CHECK(out.status == LinkStatus::LINKED);
      previous_pad = pad;
      previous = out.status;
    }
    auto empty = parse_detections(detections_json(""));
    CHECK(link(q, empty, doc).status == (labelled ? LinkStatus::DISCARDED : LinkStatus::UNLINKED));
  }
}

TEST_CASE("frame extraction") {
  auto out_dir = testing::temp_dir("frames").string();
  CHECK(extract_frame("lecture.mp4", 278000, nullptr, out_dir, "lecture").empty());

  CommandFrameExtractor stub("sh " + testing::fixture_path("frames/fake_extractor.sh"));
  auto ref = extract_frame("lecture.mp4", 278000, &stub, out_dir, "lecture");
  CHECK(ref == "lecture_278000.png");
  CHECK(fs::exists(fs::path(out_dir) / ref));

  auto silent = extract_frame("silent.mp4", 1000, &stub, out_dir, "lecture");
  CHECK(silent == "lecture_1000.png");

  CHECK_THROWS_AS(extract_frame("broken.mp4", 1000, &stub, out_dir, "lecture"), ExtractorFailure);
  CommandFrameExtractor missing("/nonexistent/extractor");
  CHECK_THROWS_AS(extract_frame("lecture.mp4", 1000, &missing, out_dir, "lecture"), ExtractorFailure);
}
