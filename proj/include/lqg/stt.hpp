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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lqg/transcript.hpp"

namespace lqg {

/// Synchronous recognition handles at most one minute of audio per call.
inline constexpr Millis kMaxChunkMs = 60'000;

/// A <= 60 s slice of the lecture's audio track, produced out-of-band.
struct SttChunk {
  std::string audio_ref;
  Millis chunk_start_ms = 0;
  Millis duration_ms = 0;
};

/// Times are relative to the start of the chunk.
struct SttPhrase {
  Millis start_ms = 0;
  Millis end_ms = 0;
  std::string text;
};

class SttAdapter {
 public:
  virtual ~SttAdapter() = default;
  virtual std::vector<SttPhrase> recognize(const std::string& audio_ref) = 0;
};

/// Replays phrases from a JSON fixture:
/// [{"audio_ref": str, "phrases": [{"start_ms", "end_ms", "text"}]}]
class FixtureSttAdapter : public SttAdapter {
 public:
  static FixtureSttAdapter from_json(const std::string& json_text);
  static FixtureSttAdapter from_file(const std::string& path);

  std::vector<SttPhrase> recognize(const std::string& audio_ref) override;

 private:
  std::map<std::string, std::vector<SttPhrase>> phrases_;
};

/// Spawns `<command...> <audio_ref>` and reads the phrase array
/// (or {"phrases": [...]}) from its standard output.
class CommandSttAdapter : public SttAdapter {
 public:
  explicit CommandSttAdapter(std::string command) : command_(std::move(command)) {}
  std::vector<SttPhrase> recognize(const std::string& audio_ref) override;

 private:
  std::string command_;
};

/// Parses the phrase schema shared by both adapters.
std::vector<SttPhrase> parse_phrases_json(const std::string& json_text);

/// Recognizes each chunk, shifts phrases by chunk_start_ms and merges them
/// into one document, one cue per phrase. Throws ChunkTooLong, AdapterFailure
/// (message names the chunk), EmptyDocument.
TranscriptDocument transcribe_chunks(std::span<const SttChunk> chunks, SttAdapter& adapter,
                                     std::string source_id = {});

}  // namespace lqg
