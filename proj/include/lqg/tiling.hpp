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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lqg/text.hpp"
#include "lqg/transcript.hpp"

namespace lqg {

struct TilingParams {
  int w = 20;  // stems per pseudo-sentence
  int k = 10;  // pseudo-sentences per block
  int smoothing_width = 1;
  int smoothing_rounds = 1;
  int min_separation = 2;  // chosen gaps must be more than this many positions apart
  bool valley_only = true;
  double min_relative_depth = 0.5;  // fraction of the deepest gap
};

struct PseudoSentence {
  std::vector<std::string> stems;
  std::size_t first_token_offset = 0;
};

struct GapScore {
  int gap_index = 0;  // between pseudo-sentences gap_index and gap_index + 1
  double cohesion = 0.0;
  double smoothed = 0.0;
  double depth = 0.0;
  bool selected = false;
};

struct Segment {
  int segment_id = 0;  // 1-based
  int first_cue = 0;
  int last_cue = 0;  // inclusive
  Span char_span;
  Millis duration_ms = 0;
  Millis start_ms = 0;
  Millis end_ms = 0;
};

using StemCounts = std::map<std::string, int>;

/// Groups the content tokens (stopwords and punctuation skipped) into runs of w
/// stems. A final remainder shorter than w/2 is dropped, otherwise kept.
/// Throws TooShort when fewer than two groups result.
std::vector<PseudoSentence> build_pseudo_sentences(const std::vector<Token>& tokens, int w = 20);

/// Cosine of two count vectors, 0 when either is empty.
double cosine(const StemCounts& a, const StemCounts& b);

/// One score per gap, computed from blocks of up to k pseudo-sentences on either side.
std::vector<GapScore> cohesion_scores(const std::vector<PseudoSentence>& ps, int k = 10);

std::vector<double> smooth(const std::vector<double>& scores, int width = 1, int rounds = 1);

std::vector<double> depth_scores(const std::vector<double>& scores);

/// Gap indices in ascending order. `scores` are the (smoothed) values the
/// depths were computed from; used for the valley test.
std::vector<int> select_boundaries(const std::vector<double>& depths, const std::vector<double>& scores,
                                   const TilingParams& params = {});

struct Segmentation {
  std::vector<Segment> segments;
  std::vector<GapScore> gaps;  // empty when the transcript was too short
  std::vector<int> boundaries;  // selected gap indices
  std::vector<PseudoSentence> pseudo_sentences;
};

Segmentation segment_transcript(const TranscriptDocument& doc, const TilingParams& params = {},
                                const TextResources& res = TextResources::standard());

/// `gap_index,cohesion,smoothed,depth,selected` with a header line.
std::string gap_scores_csv(const std::vector<GapScore>& gaps);

}  // namespace lqg
