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
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "lqg/feedback.hpp"
#include "lqg/rank.hpp"

namespace httplib {
class Server;
}

namespace lqg {

struct ServiceOptions {
  std::string state_dir;   // one <session_id>.jsonl log per session
  std::string frames_dir;  // served under /frames/ when it exists
  Thresholds thresholds;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

struct AnswerRecord {
  std::string question_id;
  std::string answer_text;
  double similarity = 0.0;
  Grade grade = Grade::LOW;
  std::string answered_at;  // UTC, ISO 8601
};

/// Quiz sessions over one immutable bank. Session logs are appended and
/// flushed to disk before a mutating request is answered, and replayed on
/// construction.
class QuizService {
 public:
  /// `bank` may be null: every session request then answers 503.
  QuizService(std::shared_ptr<const QuestionBank> bank, std::shared_ptr<const WordNetGraph> wordnet,
              ServiceOptions options);

  ServiceResponse create_session(const std::string& body);
  ServiceResponse next_question(const std::string& session_id);
  ServiceResponse submit_answer(const std::string& session_id, const std::string& body);
  ServiceResponse report(const std::string& session_id);

  /// Registers the four /v1 endpoints and the /frames/ route.
  void mount(httplib::Server& server);

  std::size_t session_count() const;
  /// Problems met while replaying logs (unreadable lines, unknown questions).
  const std::vector<std::string>& replay_warnings() const { return warnings_; }

 private:
  struct Session {
    std::string id;
    std::string student_id;
    Quiz quiz;
    std::vector<AnswerRecord> answers;
    std::mutex mutex;
  };

  std::shared_ptr<const QuestionBank> bank_;
  std::shared_ptr<const WordNetGraph> wordnet_;
  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::vector<std::string> warnings_;

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string log_path(const std::string& id) const;
  void replay();
};

}  // namespace lqg
