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

#include "lqg/quiz_service.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>

#include "strutil.hpp"

namespace lqg {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

ServiceResponse error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::string new_session_id() {
  static std::mutex m;
  static std::random_device rd;
  std::lock_guard lock(m);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%08x%08x%08x%08x", rd(), rd(), rd(), rd());
  return buf;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

// One record per line; the write is synced before returning.
void append_record(const std::string& path, const json& record) {
  const std::string line = record.dump() + "\n";
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cannot open session log " + path);
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n < 0) {
      ::close(fd);
      throw std::runtime_error("cannot write session log " + path);
    }
    done += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
}

std::optional<json> parse_object(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

}  // namespace

QuizService::QuizService(std::shared_ptr<const QuestionBank> bank, std::shared_ptr<const WordNetGraph> wordnet,
                         ServiceOptions options)
    : bank_(std::move(bank)), wordnet_(std::move(wordnet)), options_(std::move(options)) {
  if (!options_.state_dir.empty()) {
    fs::create_directories(options_.state_dir);
    replay();
  }
}

std::string QuizService::log_path(const std::string& id) const {
  return (fs::path(options_.state_dir) / (id + ".jsonl")).string();
}

std::size_t QuizService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<QuizService::Session> QuizService::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void QuizService::replay() {
  std::vector<fs::path> logs;
  for (const auto& e : fs::directory_iterator(options_.state_dir))
    if (e.is_regular_file() && e.path().extension() == ".jsonl") logs.push_back(e.path());
  std::sort(logs.begin(), logs.end());

  for (const auto& path : logs) {
    std::string content;
    {
      std::ifstream in(path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      content = ss.str();
    }
    const std::string name = path.filename().string();
    // A crash can leave a partial last line; cut it so later appends start clean.
    if (!content.empty() && content.back() != '\n') {
      const auto keep = content.rfind('\n') == std::string::npos ? 0 : content.rfind('\n') + 1;
      warnings_.push_back(name + ": torn final record removed");
      content.resize(keep);
      fs::resize_file(path, keep);
    }
    std::vector<std::string> lines;
    for (auto line : detail::split_lines(content))
      if (!detail::trim(line).empty()) lines.emplace_back(line);
    auto session = std::make_shared<Session>();
    bool created = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      json r = json::parse(lines[i], nullptr, false);
      if (r.is_discarded() || !r.is_object() || !r.contains("type")) {
        warnings_.push_back(name + " line " + std::to_string(i + 1) + ": unreadable record, rest ignored");
        break;
      }
      try {
        if (r["type"] == "CREATED" && !created) {
          session->id = r.at("session_id").get<std::string>();
          session->student_id = r.at("student_id").get<std::string>();
          session->quiz.student_id = session->student_id;
          session->quiz.quiz_id = r.at("quiz_id").get<std::string>();
          session->quiz.question_ids = r.at("question_ids").get<std::vector<std::string>>();
          session->quiz.seed = r.at("seed").get<std::uint64_t>();
          created = true;
          if (bank_)
            for (const auto& id : session->quiz.question_ids)
              if (!bank_->find(id)) throw std::runtime_error("question " + id + " is not in the served bank");
        } else if (r["type"] == "ANSWERED" && created) {
          AnswerRecord a;
          a.question_id = r.at("question_id").get<std::string>();
          a.answer_text = r.at("answer_text").get<std::string>();
          a.similarity = r.at("similarity").get<double>();
          const auto g = r.at("grade").get<std::string>();
          a.grade = g == "HIGH" ? Grade::HIGH : g == "MEDIUM" ? Grade::MEDIUM : Grade::LOW;
          a.answered_at = r.at("answered_at").get<std::string>();
          const auto cursor = session->answers.size();
          if (cursor >= session->quiz.question_ids.size() || session->quiz.question_ids[cursor] != a.question_id)
            throw std::runtime_error("answer out of quiz order");
          session->answers.push_back(std::move(a));
        } else {
          throw std::runtime_error("unexpected record type");
        }
      } catch (const std::exception& e) {
        warnings_.push_back(name + " line " + std::to_string(i + 1) + ": " + e.what());
        if (r.value("type", "") == "CREATED") created = false;
        break;
      }
    }
    if (created) sessions_[session->id] = session;
  }
}

ServiceResponse QuizService::create_session(const std::string& body) {
  if (!bank_) return error(503, "no question bank is loaded");
  auto j = parse_object(body);
  if (!j) return error(400, "body must be a JSON object");
  auto it = j->find("student_id");
  if (it == j->end() || !it->is_string() || it->get<std::string>().empty())
    return error(400, "student_id is required");

  auto session = std::make_shared<Session>();
  session->id = new_session_id();
  session->student_id = it->get<std::string>();
  session->quiz = select_for_student(*bank_, bank_->counts, session->student_id, bank_->quiz_id);
  if (!options_.state_dir.empty())
    append_record(log_path(session->id), {{"type", "CREATED"},
                                          {"session_id", session->id},
                                          {"student_id", session->student_id},
                                          {"quiz_id", session->quiz.quiz_id},
                                          {"question_ids", session->quiz.question_ids},
                                          {"seed", session->quiz.seed},
                                          {"created_at", utc_now()}});
  {
    std::unique_lock lock(sessions_mutex_);
    sessions_[session->id] = session;
  }
  return {201, json{{"session_id", session->id},
                    {"question_count", session->quiz.question_ids.size()},
                    {"quiz_id", session->quiz.quiz_id}}};
}

ServiceResponse QuizService::next_question(const std::string& session_id) {
  if (!bank_) return error(503, "no question bank is loaded");
  auto s = find(session_id);
  if (!s) return error(404, "unknown session");
  std::lock_guard lock(s->mutex);
  const auto total = s->quiz.question_ids.size();
  const auto cursor = s->answers.size();
  if (cursor >= total) return {200, json{{"done", true}, {"total", total}}};
  const auto* q = bank_->find(s->quiz.question_ids[cursor]);
  json out{{"question_id", q->id}, {"text", q->question_text}, {"position", cursor + 1}, {"total", total}};
  if (q->link == LinkStatus::LINKED && q->image_link) {
    out["timestamp_ms"] = q->image_link->timestamp_ms;
    out["label"] = q->image_link->label;
    if (!q->image_link->frame_ref.empty()) out["image_ref"] = "/frames/" + q->image_link->frame_ref;
  }
  return {200, out};
}

ServiceResponse QuizService::submit_answer(const std::string& session_id, const std::string& body) {
  if (!bank_) return error(503, "no question bank is loaded");
  auto s = find(session_id);
  if (!s) return error(404, "unknown session");
  auto j = parse_object(body);
  if (!j) return error(400, "body must be a JSON object");
  auto qid = j->find("question_id");
  auto text = j->find("answer_text");
  if (qid == j->end() || !qid->is_string() || text == j->end() || !text->is_string())
    return error(400, "question_id and answer_text are required");

  std::lock_guard lock(s->mutex);
  const auto cursor = s->answers.size();
  if (cursor >= s->quiz.question_ids.size()) return error(409, "the quiz is already complete");
  if (s->quiz.question_ids[cursor] != qid->get<std::string>())
    return error(409, "expected an answer to " + s->quiz.question_ids[cursor]);

  const auto* q = bank_->find(s->quiz.question_ids[cursor]);
  const auto g = grade(text->get<std::string>(), q->model_answer, *wordnet_, options_.thresholds);
  AnswerRecord a{q->id, text->get<std::string>(), g.similarity, g.grade, utc_now()};
  if (!options_.state_dir.empty())
    append_record(log_path(s->id), {{"type", "ANSWERED"},
                                    {"question_id", a.question_id},
                                    {"answer_text", a.answer_text},
                                    {"similarity", a.similarity},
                                    {"grade", grade_name(a.grade)},
                                    {"answered_at", a.answered_at}});
  s->answers.push_back(a);
  json per_word = json::array();
  for (const auto& m : g.per_word)
    per_word.push_back({{"answer_word", m.answer_word}, {"model_word", m.model_word}, {"similarity", m.similarity}});
  return {200, json{{"similarity", g.similarity},
                    {"grade", grade_name(g.grade)},
                    {"model_answer", q->model_answer},
                    {"per_word", per_word},
                    {"position", cursor + 1},
                    {"total", s->quiz.question_ids.size()}}};
}

ServiceResponse QuizService::report(const std::string& session_id) {
  if (!bank_) return error(503, "no question bank is loaded");
  auto s = find(session_id);
  if (!s) return error(404, "unknown session");
  std::lock_guard lock(s->mutex);
  json answers = json::array();
  json counts{{"HIGH", 0}, {"MEDIUM", 0}, {"LOW", 0}};
  for (const auto& a : s->answers) {
    answers.push_back({{"question_id", a.question_id}, {"grade", grade_name(a.grade)}, {"similarity", a.similarity}});
    counts[std::string(grade_name(a.grade))] = counts[std::string(grade_name(a.grade))].get<int>() + 1;
  }
  return {200, json{{"session_id", s->id},
                    {"student_id", s->student_id},
                    {"answers", answers},
                    {"counts", counts},
                    {"answered", s->answers.size()},
                    {"total", s->quiz.question_ids.size()}}};
}

void QuizService::mount(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/v1/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, create_session(req.body));
  });
  server.Get(R"(/v1/sessions/([^/]+)/next)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, next_question(req.matches[1]));
  });
  server.Post(R"(/v1/sessions/([^/]+)/answers)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, submit_answer(req.matches[1], req.body));
  });
  server.Get(R"(/v1/sessions/([^/]+)/report)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, report(req.matches[1]));
  });
  if (!options_.frames_dir.empty() && fs::is_directory(options_.frames_dir))
    server.set_mount_point("/frames", options_.frames_dir);
}

}  // namespace lqg
