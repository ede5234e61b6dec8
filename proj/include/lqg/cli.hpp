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

#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lqg {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConfig = 2;

struct GenerateOptions {
  std::string srt;
  std::string detections;  // optional
  std::string config;      // optional
  std::optional<int> total;
  std::string out;
  std::string extractor;   // optional frame extractor command
  std::string video;       // video reference handed to the extractor
  std::string frames_dir;  // default: "frames" next to the bank file
};

struct SegmentOptions {
  std::string srt;
  std::string config;
  std::string dump_scores;
};

struct GradeOptions {
  std::string bank;
  std::string question;
  std::string answer;
  std::string wordnet;  // default: WORDNET_DIR or the shipped graph
  std::string idf;
};

struct EvaluateOptions {
  std::string bank;
  std::string judgments;
};

struct ServeOptions {
  std::string bank;
  std::string state;
  std::string wordnet;
  std::string frames_dir;  // default: "frames" next to the bank file
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::function<void(int port)> on_listening;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err);
int cmd_segment(const SegmentOptions& o, std::ostream& out, std::ostream& err);
int cmd_grade(const GradeOptions& o, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateOptions& o, std::ostream& out, std::ostream& err);
/// Blocks until SIGINT or SIGTERM arrives, or until `*stop` becomes true.
int cmd_serve(const ServeOptions& o, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop = nullptr);

/// Parses `lqg <command> [flags]` and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lqg
