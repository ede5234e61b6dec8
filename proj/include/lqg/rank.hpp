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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lqg/qgen.hpp"
#include "lqg/question.hpp"
#include "lqg/tiling.hpp"

namespace lqg {

inline constexpr std::size_t kFeatureDim = 9;

/// [has_image, length_penalty, Who, What, When, Where, How many, vague_pronoun, proper_nouns]
std::vector<double> extract_features(const QuestionCandidate& q);

std::vector<double> default_weights();

/// Dot product of the question's features with `weights`, stored on `q`.
/// Throws DimensionMismatch.
double score(QuestionCandidate& q, const std::vector<double>& weights);

/// One question per two minutes of video, at least one.
int default_total(Millis video_duration_ms);

/// Largest-remainder apportionment of `total` over the durations; remainder
/// ties go to the earlier entry.
std::vector<int> allocate(const std::vector<Millis>& durations, int total);
std::vector<int> allocate(const std::vector<Segment>& segments, int total);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a 64 over student_id, a NUL byte, quiz_id.
std::uint64_t quiz_seed(std::string_view student_id, std::string_view quiz_id);

struct QuestionBank {
  std::string source_id;
  std::string quiz_id;
  std::vector<Segment> segments;
  std::vector<QuestionCandidate> questions;  // scored; DISCARDED removed
  std::vector<int> counts;                   // per segment, from allocate
  int total = 0;
  double score_threshold = 0.0;
  std::map<std::string, std::string> config;
  std::vector<SegmentReport> report;

  const QuestionCandidate* find(std::string_view id) const;
};

struct Quiz {
  std::string quiz_id;
  std::string student_id;
  std::vector<std::string> question_ids;
  std::uint64_t seed = 0;
  bool operator==(const Quiz&) const = default;
};

/// Per segment, samples counts[i] questions without replacement from those
/// scoring above the threshold. Ordered by segment, then bank position.
Quiz select_for_student(const QuestionBank& bank, const std::vector<int>& counts, const std::string& student_id,
                        const std::string& quiz_id);

}  // namespace lqg
