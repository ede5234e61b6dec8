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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "lqg/error.hpp"
#include "lqg/qgen.hpp"
#include "test_support.hpp"

using namespace lqg;

namespace {

// One cue per line, 4 s apart.
TranscriptDocument doc_from_lines(const std::vector<std::string>& lines) {
  TranscriptDocument doc{"qgen", {}};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Millis start = static_cast<Millis>(i) * 4000;
    doc.cues.push_back({static_cast<int>(i) + 1, start, start + 3500, lines[i]});
  }
  return doc;
}

std::vector<std::string> fixture_lines() {
  std::istringstream in(testing::read_fixture("qgen/sentences.txt"));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

struct Generated {
  TimedText tt;
  std::vector<Sentence> sentences;
  std::vector<QuestionCandidate> questions;
  SegmentReport report;
};

Generated generate_all(const TranscriptDocument& doc) {
  Generated g;
  g.tt = flatten(doc);
  g.sentences = analyze_sentences(g.tt);
  Segment whole;
  whole.segment_id = 1;
  whole.first_cue = 1;
  whole.last_cue = static_cast<int>(doc.cues.size());
  g.questions = generate(whole, g.sentences, g.tt, &g.report);
  return g;
}

Sentence sentence(const std::string& text) {
  Sentence s;
  s.text = text;
  s.span = {0, text.size()};
  s.tokens = analyze(text, 0, TextResources::standard(), true);
  return s;
}

std::vector<std::string> questions_for(const std::string& text) {
  auto s = sentence(text);
  std::vector<std::string> out;
  for (const auto& e : detect_entities(s.tokens)) {
    try {
      out.push_back(transform(s, e).question_text);
    } catch (const UnsupportedStructure&) {
    }
  }
  return out;
}

std::vector<std::string> content_words(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& t : analyze(text)) {
    std::string w = t.surface;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    if (!t.is_stopword && !t.is_punct()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Template sentences for the property tests.
std::vector<std::string> template_corpus(std::uint64_t seed, int n) {
  const std::vector<std::string> subjects = {"Marie Curie", "The model", "Gradient descent", "It", "The network",
                                             "Three layers", "Dr. Ng", "The optimizer", "Radium",
                                             "The learning rate", "They"};
  const std::vector<std::string> verbs = {"discovered", "minimizes", "was trained", "has", "can model", "updates",
                                          "controls", "is", "computes", "will study", "taught"};
  const std::vector<std::string> objects = {"radium", "the cost function", "three layers", "the data",
                                            "the loss of the network", "ten minutes", "a metal", "the weights",
                                            "the step size", ""};
  const std::vector<std::string> adjuncts = {"", " in 2015", " in Paris", " at Stanford", " after each batch",
                                             " in March 1898", " in London"};
  const std::vector<std::string> fronts = {"", "", "", "In 1898, ", "However, ", "Today, "};
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    std::string front = pick(fronts), subj = pick(subjects);
    if (!front.empty() && subj != "Marie Curie" && subj != "Dr. Ng") subj[0] = static_cast<char>(std::tolower(subj[0]));
    std::string obj = pick(objects);
    out.push_back(front + subj + " " + pick(verbs) + (obj.empty() ? "" : " " + obj) + pick(adjuncts) + ".");
  }
  return out;
}

}  // namespace

TEST_CASE("eligibility") {
  CHECK_FALSE(is_eligible(sentence("What is a tensor?")));
  CHECK_FALSE(is_eligible(sentence("The loss fell.")));  // 4 tokens
  CHECK_FALSE(is_eligible(sentence("Very good and very small indeed.")));  // no finite verb
  CHECK(is_eligible(sentence("It minimizes the loss.")));
  CHECK(has_vague_subject(sentence("It minimizes the loss.")));
  CHECK_FALSE(has_vague_subject(sentence("Gradient descent minimizes the loss.")));
  std::string long_sentence = "The model";
  for (int i = 0; i < 20; ++i) long_sentence += " and the loss";
  CHECK_FALSE(is_eligible(sentence(long_sentence + " fell.")));
  CHECK(eligible_sentences({sentence("What is a tensor?"), sentence("It minimizes the loss.")}).size() == 1);
}

TEST_CASE("wh_word_for") {
  auto s = sentence("Marie Curie found three layers in 1898 in Paris with twenty.");
  auto e = detect_entities(s.tokens);
  REQUIRE(e.size() == 6);
  CHECK(wh_word_for(s.tokens, e[0]) == WhWord::Who);
  CHECK(wh_word_for(s.tokens, e[1]) == WhWord::HowMany);
  CHECK(wh_word_for(s.tokens, e[3]) == WhWord::When);
  CHECK(wh_word_for(s.tokens, e[4]) == WhWord::Where);
  CHECK(wh_word_for(s.tokens, e[5]) == WhWord::What);  // a number with no noun after it
}

TEST_CASE("worked examples") {
  CHECK(questions_for("Marie Curie discovered radium.") ==
        std::vector<std::string>{"Who discovered radium?", "What did Marie Curie discover?"});
  auto trained = questions_for("The model was trained in 2015.");
  CHECK(std::count(trained.begin(), trained.end(), "When was the model trained?") == 1);
  auto gd = questions_for("Gradient descent minimizes the cost function.");
  CHECK(std::count(gd.begin(), gd.end(), "What does gradient descent minimize?") == 1);

  auto s = sentence("The model was trained in 2015.");
  auto date = detect_entities(s.tokens).back();
  auto q = transform(s, date);
  CHECK(q.model_answer == "in 2015");
  CHECK(q.role == Role::ADJUNCT);
  CHECK(q.wh == WhWord::When);
  CHECK(q.token_count == 5);

  auto how = sentence("The network has three layers.");
  auto number = detect_entities(how.tokens)[1];
  auto a = classify_phrase(how, number);
  CHECK(a.question_phrase == "How many layers");
  CHECK(a.surface == "three");
  CHECK(transform(how, number).question_text == "How many layers does the network have?");
}

TEST_CASE("unsupported structures") {
  auto s = sentence("The weights of the network are updated after each batch.");
  for (const auto& e : detect_entities(s.tokens)) CHECK_THROWS_AS(transform(s, e), UnsupportedStructure);
  auto appositive = sentence("The encoder, a small network, compresses the input.");
  for (const auto& e : detect_entities(appositive.tokens)) CHECK_THROWS_AS(transform(appositive, e), UnsupportedStructure);
}

TEST_CASE("postprocess") {
  CHECK(postprocess("when was  the model trained .") == "When was the model trained?");
  CHECK(postprocess("who discovered radium?") == "Who discovered radium?");
  CHECK(postprocess("What does , gradient descent minimize?") == "What does gradient descent minimize?");
  CHECK(postprocess(", what did it do , ?") == "What did it do?");
  CHECK(postprocess("what is it ??") == "What is it?");
  CHECK(postprocess("what does it , , compute") == "What does it, compute?");
  CHECK(postprocess("How many layers , does it have") == "How many layers does it have?");
  CHECK(postprocess("what does ( the model ) do") == "What does (the model) do?");
}

TEST_CASE("fixture sentences match the hand enumeration") {
  auto lines = fixture_lines();
  REQUIRE(lines.size() == 25);
  auto g = generate_all(doc_from_lines(lines));

  std::istringstream in(testing::read_fixture("qgen/expected.tsv"));
  std::vector<std::string> expected, actual;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') expected.push_back(line);
  for (const auto& q : g.questions) {
    // Cue n holds sentence n.
    actual.push_back(std::to_string(q.first_cue) + "\t" + q.question_text + "\t" + q.model_answer + "\t" +
                     std::string(role_name(q.role)) + "\t" + (q.vague_pronoun ? "1" : "0"));
  }
  REQUIRE(actual.size() == expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) CHECK(actual[i] == expected[i]);

  CHECK(g.report.sentences == 25);
  CHECK(g.report.eligible == 22);  // not the question, the 4-token line or the 40+ token line
  CHECK(g.report.emitted == static_cast<int>(expected.size()));
  for (const auto& q : g.questions) {
    CHECK(q.segment_id == 1);
    CHECK(q.first_cue == q.last_cue);
  }
}

TEST_CASE("generate respects segment bounds") {
  auto lines = fixture_lines();
  auto doc = doc_from_lines(lines);
  auto tt = flatten(doc);
  auto sentences = analyze_sentences(tt);
  Segment first_part;
  first_part.segment_id = 7;
  first_part.first_cue = 1;
  first_part.last_cue = 3;
  SegmentReport report;
  auto qs = generate(first_part, sentences, tt, &report);
  CHECK(qs.size() == 6);
  CHECK(report == SegmentReport{7, 3, 3, 6, 0, 0});
  for (const auto& q : qs) CHECK(q.segment_id == 7);

  Segment empty_part;
  empty_part.segment_id = 2;
  empty_part.first_cue = 4;
  empty_part.last_cue = 5;  // an interrogative and a 4-token sentence
  CHECK(generate(empty_part, sentences, tt, &report).empty());
  CHECK(report.eligible == 0);
}

TEST_CASE("question grammar and answer properties over template sentences") {
  auto lines = template_corpus(99, 400);
  auto fixture = fixture_lines();
  lines.insert(lines.end(), fixture.begin(), fixture.end());
  auto g = generate_all(doc_from_lines(lines));
  REQUIRE(g.questions.size() > 500);
  int subject_checked = 0;
  for (const auto& q : g.questions) {
    CAPTURE(q.question_text);
    REQUIRE(!q.question_text.empty());
    CHECK(q.question_text.back() == '?');
    CHECK(q.question_text.find("??") == std::string::npos);
    CHECK(std::isupper(static_cast<unsigned char>(q.question_text[0])));
    CHECK(q.question_text.find("  ") == std::string::npos);

    const std::string source = g.tt.text.substr(q.source_sentence.begin, q.source_sentence.size());
    CHECK(source.find(q.model_answer) != std::string::npos);

    if (q.role == Role::SUBJECT) {
      // Drop the wh word, put the answer back: the content words of the source return.
      std::string rest = q.question_text;
      std::string wh(wh_name(q.wh));
      auto at = rest.find(wh);
      if (at == std::string::npos) {
        std::string lower = wh;
        lower[0] = static_cast<char>(std::tolower(lower[0]));
        at = rest.find(lower);
      }
      REQUIRE(at != std::string::npos);
      rest.replace(at, wh.size(), q.model_answer);
      CHECK(content_words(rest) == content_words(source));
      ++subject_checked;
    }
  }
  CHECK(subject_checked > 100);

  auto again = generate_all(doc_from_lines(lines));
  REQUIRE(again.questions.size() == g.questions.size());
  for (std::size_t i = 0; i < g.questions.size(); ++i) {
    CHECK(again.questions[i].question_text == g.questions[i].question_text);
    CHECK(again.questions[i].model_answer == g.questions[i].model_answer);
  }
}
