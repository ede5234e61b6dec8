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

#include "lqg/pipeline.hpp"

#include <cstdio>

#include "lqg/qgen.hpp"

namespace lqg {

namespace {

std::string question_id(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "q%03zu", n);
  return buf;
}

}  // namespace

QuestionBank build_bank(const TranscriptDocument& doc, const DetectionSet* detections, const PipelineConfig& cfg,
                        const FrameOptions& frames) {
  QuestionBank bank;
  bank.source_id = doc.source_id;
  bank.quiz_id = cfg.quiz_id.empty() ? doc.source_id : cfg.quiz_id;
  bank.score_threshold = cfg.score_threshold;
  PipelineConfig effective = cfg;
  effective.quiz_id = bank.quiz_id;
  bank.config = config_snapshot(effective);

  const auto seg = segment_transcript(doc, cfg.tiling);
  bank.segments = seg.segments;
  const auto tt = flatten(doc);
  const auto sentences = analyze_sentences(tt);

  for (const auto& segment : bank.segments) {
    SegmentReport report;
    for (auto& q : generate(segment, sentences, tt, &report)) {
      if (cfg.drop_vague_pronoun && q.vague_pronoun) {
        --report.emitted;
        continue;
      }
      if (detections) {
        auto outcome = link(q, *detections, doc, cfg.link);
        q.link = outcome.status;
        if (q.link == LinkStatus::DISCARDED) {
          ++report.discarded;
          continue;
        }
        q.image_link = outcome.frame;
        if (q.image_link && frames.extractor)
          q.image_link->frame_ref = extract_frame(frames.video_ref, q.image_link->timestamp_ms, frames.extractor,
                                                  frames.out_dir, doc.source_id);
      } else {
        q.link = LinkStatus::UNLINKED;
      }
      q.features = extract_features(q);
      score(q, cfg.weights);
      q.id = question_id(bank.questions.size() + 1);
      bank.questions.push_back(std::move(q));
    }
    bank.report.push_back(report);
  }

  bank.total = cfg.total ? *cfg.total : default_total(doc.end_ms());
  bank.counts = allocate(bank.segments, bank.total);
  return bank;
}

BankSummary summarize(const QuestionBank& bank) {
  BankSummary s;
  s.segments = static_cast<int>(bank.segments.size());
  for (const auto& r : bank.report) s.discarded += r.discarded;
  for (const auto& q : bank.questions) {
    s.linked += q.link == LinkStatus::LINKED;
    s.unlinked += q.link == LinkStatus::UNLINKED;
  }
  s.generated = static_cast<int>(bank.questions.size()) + s.discarded;
  return s;
}

}  // namespace lqg
