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

#include "lqg/cli.hpp"

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "lqg/bank.hpp"
#include "lqg/config.hpp"
#include "lqg/error.hpp"
#include "lqg/evalmetrics.hpp"
#include "lqg/feedback.hpp"
#include "lqg/imagelink.hpp"
#include "lqg/pipeline.hpp"
#include "lqg/quiz_service.hpp"
#include "lqg/tiling.hpp"

namespace lqg {

namespace fs = std::filesystem;

namespace {

std::string read_text(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(std::string("cannot read ") + what + " " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TranscriptDocument read_srt(const std::string& path) {
  return parse_srt(read_text(path, "SRT file"), fs::path(path).stem().string());
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Maps failures to exit codes: configuration problems give 2, everything else 1.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BadThresholds& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

std::string frames_next_to(const std::string& file) {
  auto parent = fs::path(file).parent_path();
  return (parent.empty() ? fs::path("frames") : parent / "frames").string();
}

}  // namespace

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PipelineConfig cfg = o.config.empty() ? PipelineConfig{} : load_config(o.config);
    if (o.total) {
      if (*o.total < 0) throw ConfigError("--total must be >= 0");
      cfg.total = *o.total;
    }
    if (!o.extractor.empty() && o.video.empty()) throw ConfigError("--extractor needs --video");

    const auto doc = read_srt(o.srt);
    std::optional<DetectionSet> detections;
    if (!o.detections.empty()) {
      detections = load_detections(o.detections);
      for (const auto& w : detections->warnings) err << "warning: " << o.detections << ": " << w << "\n";
    }
    std::unique_ptr<CommandFrameExtractor> extractor;
    FrameOptions frames;
    if (!o.extractor.empty()) {
      extractor = std::make_unique<CommandFrameExtractor>(o.extractor);
      frames = {extractor.get(), o.video, o.frames_dir.empty() ? frames_next_to(o.out) : o.frames_dir};
    }

    const auto bank = build_bank(doc, detections ? &*detections : nullptr, cfg, frames);
    save_bank(bank, o.out);

    const auto s = summarize(bank);
    out << "segments: " << s.segments << "\n"
        << "generated: " << s.generated << "\n"
        << "linked: " << s.linked << "\n"
        << "discarded: " << s.discarded << "\n"
        << "unlinked: " << s.unlinked << "\n"
        << "total: " << bank.total << " (per segment:";
    for (int c : bank.counts) out << " " << c;
    out << ")\n"
        << "wrote " << o.out << "\n";
    return kExitOk;
  });
}

int cmd_segment(const SegmentOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PipelineConfig cfg = o.config.empty() ? PipelineConfig{} : load_config(o.config);
    const auto doc = read_srt(o.srt);
    const auto seg = segment_transcript(doc, cfg.tiling);
    out << "segment\tstart\tend\tduration_s\tcues\n";
    for (const auto& s : seg.segments)
      out << s.segment_id << "\t" << format_timestamp(s.start_ms) << "\t" << format_timestamp(s.end_ms) << "\t"
          << fixed(s.duration_ms / 1000.0, 3) << "\t" << s.first_cue << "-" << s.last_cue << "\n";
    if (!o.dump_scores.empty()) {
      std::ofstream csv(o.dump_scores, std::ios::binary | std::ios::trunc);
      if (!csv) throw std::runtime_error("cannot write " + o.dump_scores);
      csv << gap_scores_csv(seg.gaps);
    }
    return kExitOk;
  });
}

int cmd_grade(const GradeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bank = load_bank(o.bank);
    const auto cfg = config_from_snapshot(bank.config);
    const auto* q = bank.find(o.question);
    if (!q) throw UnknownQuestionId(o.question + " is not in " + o.bank);
    const auto graph = WordNetGraph::load(o.wordnet.empty() ? default_wordnet_dir() : o.wordnet);
    std::optional<IdfTable> idf;
    if (!o.idf.empty()) idf = load_idf(o.idf);

    const auto g = grade(o.answer, q->model_answer, graph, cfg.thresholds, idf ? &*idf : nullptr);
    out << "question: " << q->question_text << "\n"
        << "model_answer: " << q->model_answer << "\n"
        << "similarity: " << fixed(g.similarity) << "\n"
        << "grade: " << grade_name(g.grade) << "\n"
        << "answer_word\tmodel_word\tsimilarity\n";
    for (const auto& m : g.per_word)
      out << m.answer_word << "\t" << (m.model_word.empty() ? "-" : m.model_word) << "\t" << fixed(m.similarity)
          << "\n";
    return kExitOk;
  });
}

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bank = load_bank(o.bank);
    const auto judgments = load_judgments(o.judgments);
    out << format_report(evaluate(bank, judgments));
    return kExitOk;
  });
}

int cmd_serve(const ServeOptions& o, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
  return guarded(err, [&] {
    auto bank = std::make_shared<const QuestionBank>(load_bank(o.bank));
    const auto cfg = config_from_snapshot(bank->config);
    auto graph = std::make_shared<const WordNetGraph>(
        WordNetGraph::load(o.wordnet.empty() ? default_wordnet_dir() : o.wordnet));
    if (o.state.empty()) throw ConfigError("--state is required");
    QuizService service(bank, graph,
                        {o.state, o.frames_dir.empty() ? frames_next_to(o.bank) : o.frames_dir, cfg.thresholds});
    for (const auto& w : service.replay_warnings()) err << "warning: " << w << "\n";

    // Signals are taken synchronously below; server threads inherit the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    sigset_t previous;
    pthread_sigmask(SIG_BLOCK, &signals, &previous);

    httplib::Server server;
    // SO_REUSEADDR only: the library default also sets SO_REUSEPORT, which lets
    // a second server share a port that is already taken.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    });
    service.mount(server);
    int port = o.port;
    if (port == 0) {
      port = server.bind_to_any_port(o.host);
    } else if (!server.bind_to_port(o.host, port)) {
      port = -1;
    }
    if (port < 0) {
      pthread_sigmask(SIG_SETMASK, &previous, nullptr);
      throw std::runtime_error("cannot listen on " + o.host + ":" + std::to_string(o.port));
    }
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    out << "serving " << bank->questions.size() << " questions on http://" << o.host << ":" << port << "\n"
        << std::flush;
    if (o.on_listening) o.on_listening(port);

    const timespec tick{0, 100'000'000};
    while (!(stop && stop->load())) {
      if (sigtimedwait(&signals, nullptr, &tick) > 0) break;
    }
    server.stop();
    worker.join();
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    out << "stopped\n";
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lecture transcript question generation and quizzes", "lqg"};
  app.require_subcommand(1);

  GenerateOptions gen;
  int total = -1;
  auto* g = app.add_subcommand("generate", "Build a question bank from an SRT transcript");
  g->add_option("--srt", gen.srt, "Transcript in SRT format")->required();
  g->add_option("--detections", gen.detections, "Object detections JSON for image linking");
  g->add_option("--config", gen.config, "Pipeline config (key = value lines)");
  g->add_option("--total", total, "Questions per quiz (default: one per two minutes)");
  g->add_option("--out", gen.out, "Question bank file to write")->required();
  g->add_option("--extractor", gen.extractor, "Frame extractor command: <cmd> <video> <ms> <out.png>");
  g->add_option("--video", gen.video, "Video reference passed to the extractor");
  g->add_option("--frames-dir", gen.frames_dir, "Where extracted frames go");

  SegmentOptions seg;
  auto* s = app.add_subcommand("segment", "Print the topic segments of a transcript");
  s->add_option("--srt", seg.srt, "Transcript in SRT format")->required();
  s->add_option("--config", seg.config, "Pipeline config");
  s->add_option("--dump-scores", seg.dump_scores, "Write per-gap scores as CSV");

  GradeOptions grd;
  auto* gr = app.add_subcommand("grade", "Grade an answer against a bank question");
  gr->add_option("--bank", grd.bank, "Question bank file")->required();
  gr->add_option("--question", grd.question, "Question id")->required();
  gr->add_option("--answer", grd.answer, "Learner answer")->required();
  gr->add_option("--wordnet", grd.wordnet, "WordNet database directory");
  gr->add_option("--idf", grd.idf, "idf table (lemma TAB weight)");

  EvaluateOptions ev;
  auto* e = app.add_subcommand("evaluate", "Image-link accuracies from a judgments CSV");
  e->add_option("--bank", ev.bank, "Question bank file")->required();
  e->add_option("--judgments", ev.judgments, "Judgments CSV")->required();

  ServeOptions srv;
  auto* sv = app.add_subcommand("serve", "Serve quizzes over HTTP");
  sv->add_option("--bank", srv.bank, "Question bank file")->required();
  sv->add_option("--port", srv.port, "TCP port (0 picks one)");
  sv->add_option("--state", srv.state, "Directory for session logs")->required();
  sv->add_option("--wordnet", srv.wordnet, "WordNet database directory");
  sv->add_option("--frames-dir", srv.frames_dir, "Directory served under /frames/");
  sv->add_option("--host", srv.host, "Address to bind");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n" << app.help();
    return kExitConfig;
  }

  if (g->parsed()) {
    if (total >= 0 || g->count("--total")) gen.total = total;
    return cmd_generate(gen, out, err);
  }
  if (s->parsed()) return cmd_segment(seg, out, err);
  if (gr->parsed()) return cmd_grade(grd, out, err);
  if (e->parsed()) return cmd_evaluate(ev, out, err);
  return cmd_serve(srv, out, err);
}

}  // namespace lqg
