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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lqg {

/// Milliseconds from the start of the lecture video.
using Millis = std::int64_t;

/// One subtitle block. Invariants: start_ms < end_ms, text non-empty after
/// trimming. Text may hold internal newlines (one per subtitle line).
struct Cue {
  int index = 0;  // 1-based
  Millis start_ms = 0;
  Millis end_ms = 0;
  std::string text;

  Millis duration_ms() const { return end_ms - start_ms; }
  bool operator==(const Cue&) const = default;
};

/// Ordered cues of one lecture. After normalization starts strictly increase
/// and indices run 1..N.
struct TranscriptDocument {
  std::string source_id;
  std::vector<Cue> cues;

  const Cue& cue(int index) const;  // by 1-based index
  Millis total_cue_duration_ms() const;
  Millis end_ms() const { return cues.empty() ? 0 : cues.back().end_ms; }
  bool operator==(const TranscriptDocument&) const = default;
};

struct OffsetRange {
  std::size_t begin = 0;  // byte offset into TimedText::text
  std::size_t end = 0;    // exclusive
  int cue_index = 0;
  bool operator==(const OffsetRange&) const = default;
};

/// Cue texts joined by single spaces, with the byte ranges each cue owns.
struct TimedText {
  std::string text;
  std::vector<OffsetRange> offsets;
};

/// Parses an SRT byte stream (UTF-8, optional BOM, LF or CRLF).
/// Styling spans `<...>` and `{...}` are stripped; equal-start cues are merged.
/// Throws MalformedTimestamp, EmptyDocument, OverlapRejected.
TranscriptDocument parse_srt(std::string_view raw, std::string source_id = {});

/// Canonical SRT: 1-based indices, HH:MM:SS,mmm, LF, one blank line between
/// blocks, trailing newline. Throws std::invalid_argument on an invalid doc.
std::string serialize_srt(const TranscriptDocument& doc);

TimedText flatten(const TranscriptDocument& doc);

/// Owning cue of a byte offset; a separator resolves to the preceding cue.
/// Throws OutOfRange.
int cue_for_offset(const TimedText& tt, std::size_t offset);

/// "HH:MM:SS,mmm"
std::string format_timestamp(Millis ms);
/// Accepts "HH:MM:SS,mmm" (also '.' before the milliseconds). Throws MalformedTimestamp.
Millis parse_timestamp(std::string_view text);

/// Validates invariants (non-empty trimmed text, start < end, strictly
/// increasing starts, consecutive indices). Throws std::invalid_argument.
void validate(const TranscriptDocument& doc);

}  // namespace lqg
