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

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lqg/question.hpp"
#include "lqg/transcript.hpp"

namespace lqg {

struct DetectionRecord {
  Millis timestamp_ms = 0;
  std::string label;
  double confidence = 0.0;
  std::array<double, 4> bbox{};  // x, y, width, height in [0,1]
};

struct DetectionSet {
  std::string source_id;
  std::vector<std::string> class_labels;
  std::vector<DetectionRecord> records;  // sorted by timestamp_ms
  std::vector<std::string> warnings;
};

/// Validates and sorts. Throws SchemaError or UnknownLabel; unsorted input is
/// sorted and noted in `warnings`.
DetectionSet parse_detections(std::string_view json_text);
DetectionSet load_detections(const std::string& path);

/// First class label (in list order) found in the question text or model
/// answer, matching whole words by stem; multi-word labels match as phrases.
std::optional<std::string> label_in_question(const QuestionCandidate& q,
                                             const std::vector<std::string>& class_labels);

/// [first cue start - pad (floored at 0), last cue end + pad].
std::pair<Millis, Millis> source_time_range(const QuestionCandidate& q, const TranscriptDocument& doc,
                                            Millis pad_ms = 2000);

struct LinkParams {
  Millis pad_ms = 2000;
  double min_confidence = 0.5;
};

struct LinkOutcome {
  LinkStatus status = LinkStatus::UNLINKED;
  std::optional<FrameLink> frame;
};

/// UNLINKED when no class label appears; otherwise LINKED to the most
/// confident in-range record (earliest on ties) or DISCARDED. Throws SourceMismatch.
LinkOutcome link(const QuestionCandidate& q, const DetectionSet& detections, const TranscriptDocument& doc,
                 const LinkParams& params = {});

class FrameExtractor {
 public:
  virtual ~FrameExtractor() = default;
  /// Writes the frame at `timestamp_ms` to `out_path`; returns the image path.
  virtual std::string extract(const std::string& video_ref, Millis timestamp_ms, const std::string& out_path) = 0;
};

/// Runs `<command> <video_ref> <timestamp_ms> <out_path>`. The first stdout
/// line, when present, names the written image; otherwise `out_path` does.
class CommandFrameExtractor : public FrameExtractor {
 public:
  explicit CommandFrameExtractor(std::string command) : command_(std::move(command)) {}
  std::string extract(const std::string& video_ref, Millis timestamp_ms, const std::string& out_path) override;

 private:
  std::string command_;
};

/// File name of the extracted frame, or "" without an extractor.
/// Throws ExtractorFailure.
std::string extract_frame(const std::string& video_ref, Millis timestamp_ms, FrameExtractor* extractor,
                          const std::string& out_dir, const std::string& source_id);

}  // namespace lqg
