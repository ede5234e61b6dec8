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

#include "lqg/config.hpp"
#include "lqg/imagelink.hpp"
#include "lqg/rank.hpp"

namespace lqg {

struct FrameOptions {
  FrameExtractor* extractor = nullptr;
  std::string video_ref;
  std::string out_dir;
};

/// Segments, generates, links (when detections are given), scores and
/// allocates. Without detections every question is UNLINKED.
QuestionBank build_bank(const TranscriptDocument& doc, const DetectionSet* detections, const PipelineConfig& cfg,
                        const FrameOptions& frames = {});

struct BankSummary {
  int segments = 0;
  int generated = 0;  // including discarded
  int linked = 0;
  int discarded = 0;
  int unlinked = 0;
};

BankSummary summarize(const QuestionBank& bank);

}  // namespace lqg
