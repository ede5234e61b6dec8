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
#include <set>

#include "lqg/bank.hpp"
#include "lqg/error.hpp"
#include "lqg/rank.hpp"

using namespace lqg;

namespace {

QuestionCandidate make_q(WhWord wh, int tokens, bool vague, int nnp, LinkStatus link) {
  QuestionCandidate q;
  q.wh = wh;
  q.token_count = tokens;
  q.vague_pronoun = vague;
  q.proper_noun_count = nnp;
  q.link = link;
  return q;
}

Segment seg(int id, Millis duration) {
  Segment s;
  s.segment_id = id;
  s.duration_ms = duration;
  return s;
}

// One segment holding `pool` positive-score questions.
QuestionBank pool_bank(int pool, int extra_nonpositive = 0) {
  QuestionBank bank;
  bank.quiz_id = "lecture";
  bank.segments = {seg(1, 60000)};
  for (int i = 0; i < pool + extra_nonpositive; ++i) {
    QuestionCandidate q;
    q.id = "q" + std::to_string(i + 1);
    q.segment_id = 1;
    q.score = i < pool ? 1.0 + (i % 3) : -0.5 * (i % 2);
    bank.questions.push_back(q);
  }
  return bank;
}

double naive_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("extract_features") {
  auto f = extract_features(make_q(WhWord::Who, 12, false, 2, LinkStatus::LINKED));
  CHECK(f == std::vector<double>{1, 0, 1, 0, 0, 0, 0, 0, 0.4});

  auto g = extract_features(make_q(WhWord::What, 24, true, 0, LinkStatus::UNLINKED));
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 1.0);
  CHECK(g[3] == 1.0);
  CHECK(g[7] == 1.0);

  CHECK(extract_features(make_q(WhWord::HowMany, 3, false, 9, LinkStatus::UNLINKED))[8] == 1.0);
  CHECK(extract_features(make_q(WhWord::When, 6, false, 0, LinkStatus::UNLINKED))[1] == 0.5);

  std::mt19937 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto q = make_q(static_cast<WhWord>(rng() % 5), static_cast<int>(rng() % 60), rng() % 2,
                    static_cast<int>(rng() % 12), rng() % 2 ? LinkStatus::LINKED : LinkStatus::UNLINKED);
    auto v = extract_features(q);
    REQUIRE(v.size() == kFeatureDim);
    for (double x : v) CHECK((x >= 0.0 && x <= 1.0));
    CHECK(std::count(v.begin() + 2, v.begin() + 7, 1.0) == 1);
  }
}

TEST_CASE("score") {
  auto q = make_q(WhWord::Who, 12, false, 2, LinkStatus::LINKED);
  q.features = extract_features(q);
  CHECK(score(q, std::vector<double>(9, 0.0)) == 0.0);
  std::vector<double> e1(9, 0.0);
  e1[0] = 1.0;
  CHECK(score(q, e1) == 1.0);
  CHECK(q.score == 1.0);
  q.link = LinkStatus::UNLINKED;
  q.features = extract_features(q);
  CHECK(score(q, e1) == 0.0);

  QuestionCandidate p;
  p.features = {1, 1, 0, 0, 0, 0, 0, 0, 0};
  CHECK(score(p, {2, 3, 0, 0, 0, 0, 0, 0, 0}) == 5.0);
  CHECK_THROWS_AS(score(p, {1, 2, 3}), DimensionMismatch);
  CHECK(default_weights().size() == kFeatureDim);
}

TEST_CASE("score equals a naive dot product on random vectors") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0, 1), weight(-5, 5);
  for (int t = 0; t < 10000; ++t) {
    QuestionCandidate q;
    std::vector<double> w(9);
    q.features.resize(9);
    for (int i = 0; i < 9; ++i) {
      q.features[i] = unit(rng);
      w[i] = weight(rng);
    }
    CHECK(score(q, w) == naive_dot(q.features, w));
  }
}

TEST_CASE("positive scaling of the weights keeps the ranking") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<QuestionCandidate> qs;
    for (int i = 0; i < 30; ++i) {
      auto q = make_q(static_cast<WhWord>(rng() % 5), static_cast<int>(rng() % 30), rng() % 2,
                      static_cast<int>(rng() % 6), rng() % 2 ? LinkStatus::LINKED : LinkStatus::UNLINKED);
      q.features = extract_features(q);
      qs.push_back(q);
    }
    std::vector<double> w(9);
    for (auto& x : w) x = std::uniform_real_distribution<double>(-3, 3)(rng);
    const double c = std::uniform_real_distribution<double>(0.01, 100)(rng);
    std::vector<double> cw = w;
    for (auto& x : cw) x *= c;
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = 0; j < qs.size(); ++j) {
        auto a = qs[i], b = qs[j];
        const double d = score(a, w) - score(b, w);
        const double dc = score(a, cw) - score(b, cw);
        if (std::abs(d) > 1e-9) CHECK((d > 0) == (dc > 0));
      }
  }
}

TEST_CASE("default_total") {
  CHECK(default_total(40 * 60000) == 20);
  CHECK(default_total(10 * 60000) == 5);
  CHECK(default_total(60000) == 1);
  CHECK(default_total(1) == 1);
  CHECK(default_total(3 * 60000) == 2);  // 1.5 rounds up
}

TEST_CASE("allocate") {
  CHECK(allocate(std::vector<Millis>{20 * 60000, 10 * 60000, 10 * 60000}, 20) == std::vector<int>{10, 5, 5});
  CHECK(allocate(std::vector<Millis>{1, 1, 1}, 2) == std::vector<int>{1, 1, 0});
  CHECK(allocate(std::vector<Millis>{5, 3}, 0) == std::vector<int>{0, 0});
  CHECK(allocate(std::vector<Millis>{}, 4).empty());
  CHECK(allocate(std::vector<Segment>{seg(1, 300), seg(2, 100)}, 3) == std::vector<int>{2, 1});
}

TEST_CASE("allocate sums to the total and is monotone in each duration") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Millis> d(n);
    for (auto& x : d) x = 1 + static_cast<Millis>(rng() % 600000);
    const int total = static_cast<int>(rng() % 60);
    auto c = allocate(d, total);
    int sum = 0;
    for (int x : c) sum += x;
    CHECK(sum == total);

    // Within one seat of the exact quota.
    long long all = 0;
    for (auto x : d) all += x;
    for (int i = 0; i < n; ++i) {
      const double quota = static_cast<double>(total) * d[i] / all;
      CHECK(c[i] >= std::floor(quota) - 1e-9);
      CHECK(c[i] <= std::floor(quota) + 1);
    }

    const int j = static_cast<int>(rng() % n);
    auto grown = d;
    grown[j] += 1 + static_cast<Millis>(rng() % 300000);
    CHECK(allocate(grown, total)[j] >= c[j]);
  }
}

TEST_CASE("splitmix64 and seeding") {
  // Reference outputs of SplitMix64 for seed 0 and 1234567.
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xe220a8397b1dcdafULL);
  CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);

  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(quiz_seed("ab", "c") != quiz_seed("a", "bc"));

  SplitMix64 b(99);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) ++hist[b.below(7)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("select_for_student") {
  auto bank = pool_bank(10, 4);
  auto a = select_for_student(bank, {5}, "s1", "quiz");
  CHECK(a.question_ids.size() == 5);
  CHECK(a.seed == quiz_seed("s1", "quiz"));
  std::set<std::string> distinct(a.question_ids.begin(), a.question_ids.end());
  CHECK(distinct.size() == 5);
  for (const auto& id : a.question_ids) {
    auto* q = bank.find(id);
    REQUIRE(q != nullptr);
    CHECK(q->score > 0);
  }
  CHECK(std::is_sorted(a.question_ids.begin(), a.question_ids.end(), [&](const auto& x, const auto& y) {
    return bank.find(x) < bank.find(y);
  }));

  for (int i = 0; i < 100; ++i) CHECK(select_for_student(bank, {5}, "s1", "quiz") == a);

  // Pool no bigger than the count: the whole pool regardless of seed.
  for (const auto& student : {"s1", "s2", "s3"}) {
    CHECK(select_for_student(bank, {10}, student, "quiz").question_ids.size() == 10);
    CHECK(select_for_student(bank, {25}, student, "quiz").question_ids ==
          select_for_student(bank, {10}, "other", "quiz").question_ids);
  }
  CHECK(select_for_student(bank, {0}, "s1", "quiz").question_ids.empty());
}

TEST_CASE("distinct students get distinct quizzes from 10 choose 5") {
  auto bank = pool_bank(10);
  int differ = 0;
  for (int t = 0; t < 100; ++t) {
    auto a = select_for_student(bank, {5}, "student-" + std::to_string(2 * t), "quiz");
    auto b = select_for_student(bank, {5}, "student-" + std::to_string(2 * t + 1), "quiz");
    if (a.question_ids != b.question_ids) ++differ;
  }
  CHECK(differ >= 95);
}

TEST_CASE("selection is uniform over the pool") {
  auto bank = pool_bank(10);
  std::vector<int> hits(10, 0);
  for (int s = 0; s < 5000; ++s)
    for (const auto& id : select_for_student(bank, {5}, "s" + std::to_string(s), "quiz").question_ids)
      ++hits[std::stoi(id.substr(1)) - 1];
  for (int h : hits) CHECK(std::abs(h - 2500) < 200);
}

TEST_CASE("multi-segment selection follows the counts") {
  QuestionBank bank;
  bank.quiz_id = "lec";
  bank.segments = {seg(1, 1000), seg(2, 1000)};
  for (int i = 0; i < 12; ++i) {
    QuestionCandidate q;
    q.id = "q" + std::to_string(i + 1);
    q.segment_id = i < 6 ? 1 : 2;
    q.score = 1.0;
    bank.questions.push_back(q);
  }
  auto quiz = select_for_student(bank, {2, 3}, "s", "lec");
  REQUIRE(quiz.question_ids.size() == 5);
  int first = 0;
  for (const auto& id : quiz.question_ids) first += bank.find(id)->segment_id == 1;
  CHECK(first == 2);
  CHECK(bank.find(quiz.question_ids[0])->segment_id == 1);
  CHECK(bank.find(quiz.question_ids[4])->segment_id == 2);
}

TEST_CASE("bank JSON round trip") {
  QuestionBank bank = pool_bank(3);
  bank.source_id = "lecture";
  bank.segments[0].char_span = {0, 120};
  bank.segments[0].start_ms = 0;
  bank.segments[0].end_ms = 60000;
  bank.counts = {2};
  bank.total = 2;
  bank.config = {{"tiling.w", "20"}, {"link.pad_ms", "2000"}};
  bank.report = {SegmentReport{1, 4, 3, 3, 1, 0}};
  bank.questions[0].question_text = "What does this equation signify?";
  bank.questions[0].link = LinkStatus::LINKED;
  bank.questions[0].image_link = FrameLink{278000, "equation", 0.91, "lecture_278000.png"};
  bank.questions[1].vague_pronoun = true;
  bank.questions[1].wh = WhWord::HowMany;
  bank.questions[2].link = LinkStatus::UNLINKED;
  for (auto& q : bank.questions) q.features = extract_features(q);
  bank.questions[2].score = 0.1 + 0.2;

  const auto text = bank_to_json(bank);
  auto back = bank_from_json(text);
  CHECK(bank_to_json(back) == text);
  CHECK(back.questions[0].image_link->frame_ref == "lecture_278000.png");
  CHECK(back.questions[1].vague_pronoun);
  CHECK(back.questions[1].wh == WhWord::HowMany);
  CHECK(back.questions[2].score == 0.1 + 0.2);
  CHECK(back.config.at("tiling.w") == "20");
  CHECK(back.report[0] == bank.report[0]);

  auto bad = bank;
  bad.questions[0].segment_id = 9;
  CHECK_THROWS_AS(bank_from_json(bank_to_json(bad)), SchemaError);
  bad = bank;
  bad.questions[0].link = LinkStatus::DISCARDED;
  CHECK_THROWS_AS(bank_from_json(bank_to_json(bad)), SchemaError);
  CHECK_THROWS_AS(bank_from_json("{"), SchemaError);
  CHECK_THROWS_AS(bank_from_json(R"({"version": 1})"), SchemaError);
}
