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

#include "lqg/stt.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqg/error.hpp"
#include "lqg/process.hpp"
#include "strutil.hpp"

namespace lqg {

using nlohmann::json;

namespace {

std::vector<SttPhrase> phrases_from(const json& arr) {
  if (!arr.is_array()) throw std::runtime_error("phrases must be an array");
  std::vector<SttPhrase> out;
  for (const auto& p : arr) {
    SttPhrase phrase;
    phrase.start_ms = p.at("start_ms").get<Millis>();
    phrase.end_ms = p.at("end_ms").get<Millis>();
    phrase.text = p.at("text").get<std::string>();
    out.push_back(std::move(phrase));
  }
  return out;
}

}  // namespace

std::vector<SttPhrase> parse_phrases_json(const std::string& json_text) {
  auto j = json::parse(json_text);
  if (j.is_object()) return phrases_from(j.at("phrases"));
  return phrases_from(j);
}

FixtureSttAdapter FixtureSttAdapter::from_json(const std::string& json_text) {
  FixtureSttAdapter adapter;
  for (const auto& entry : json::parse(json_text)) {
    adapter.phrases_[entry.at("audio_ref").get<std::string>()] = phrases_from(entry.at("phrases"));
  }
  return adapter;
}

FixtureSttAdapter FixtureSttAdapter::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open STT fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<SttPhrase> FixtureSttAdapter::recognize(const std::string& audio_ref) {
  auto it = phrases_.find(audio_ref);
  if (it == phrases_.end()) throw std::runtime_error("no fixture phrases for " + audio_ref);
  return it->second;
}

std::vector<SttPhrase> CommandSttAdapter::recognize(const std::string& audio_ref) {
  auto argv = split_command(command_);
  argv.push_back(audio_ref);
  auto result = run_process(argv);
  if (result.exit_code != 0) {
    throw std::runtime_error("command exited with status " + std::to_string(result.exit_code));
  }
  return parse_phrases_json(result.stdout_text);
}

TranscriptDocument transcribe_chunks(std::span<const SttChunk> chunks, SttAdapter& adapter,
                                     std::string source_id) {
  if (chunks.empty()) throw EmptyDocument("no audio chunks");
  for (const auto& chunk : chunks) {
    if (chunk.duration_ms > kMaxChunkMs) {
      throw ChunkTooLong(chunk.audio_ref + " is " + std::to_string(chunk.duration_ms) +
                         " ms; synchronous recognition takes at most " +
                         std::to_string(kMaxChunkMs) + " ms");
    }
  }

  std::vector<Cue> cues;
  for (const auto& chunk : chunks) {
    std::vector<SttPhrase> phrases;
    try {
      phrases = adapter.recognize(chunk.audio_ref);
    } catch (const std::exception& e) {
      throw AdapterFailure("chunk " + chunk.audio_ref + " at " + format_timestamp(chunk.chunk_start_ms) +
                           ": " + e.what());
    }
    for (const auto& p : phrases) {
      auto text = std::string(detail::trim(p.text));
      if (p.start_ms < 0 || p.end_ms <= p.start_ms || text.empty()) {
        throw AdapterFailure("chunk " + chunk.audio_ref + " returned an invalid phrase");
      }
      // Phrases that run past the chunk end keep their full extent.
      cues.push_back({0, chunk.chunk_start_ms + p.start_ms, chunk.chunk_start_ms + p.end_ms, text});
    }
  }
  std::stable_sort(cues.begin(), cues.end(),
                   [](const Cue& a, const Cue& b) { return a.start_ms < b.start_ms; });

  TranscriptDocument doc;
  doc.source_id = std::move(source_id);
  for (auto& cue : cues) {
    if (!doc.cues.empty() && doc.cues.back().start_ms == cue.start_ms) {
      doc.cues.back().text += " " + cue.text;
      doc.cues.back().end_ms = std::max(doc.cues.back().end_ms, cue.end_ms);
      continue;
    }
    doc.cues.push_back(std::move(cue));
  }
  if (doc.cues.empty()) throw EmptyDocument("recognizer returned no phrases");
  for (std::size_t i = 0; i < doc.cues.size(); ++i) doc.cues[i].index = static_cast<int>(i) + 1;
  return doc;
}

}  // namespace lqg
