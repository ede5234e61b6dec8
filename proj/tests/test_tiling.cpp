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
#include <cmath>
#include <random>
#include <set>

#include "lqg/error.hpp"
#include "lqg/stemmer.hpp"
#include "lqg/tiling.hpp"
#include "two_topic.hpp"

using namespace lqg;

namespace {

std::vector<Token> stem_stream(int n, int vocab = 30, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::vector<Token> out;
  for (int i = 0; i < n; ++i) {
    Token t;
    t.surface = t.stem = "w" + std::to_string(std::uniform_int_distribution<int>(0, vocab - 1)(rng));
    t.span = {static_cast<std::size_t>(i) * 4, static_cast<std::size_t>(i) * 4 + 3};
    out.push_back(t);
  }
  return out;
}

// Brute force: the left peak is the highest s[i] over all i <= g such that
// s[i..g] never rises toward g; likewise on the right.
std::vector<double> brute_force_depths(const std::vector<double>& s) {
  std::vector<double> out;
  const int n = static_cast<int>(s.size());
  for (int g = 0; g < n; ++g) {
    double left = s[g], right = s[g];
    for (int i = 0; i <= g; ++i) {
      bool ok = true;
      for (int j = i; j < g; ++j) ok = ok && s[j] >= s[j + 1];
      if (ok) left = std::max(left, s[i]);
    }
    for (int i = g; i < n; ++i) {
      bool ok = true;
      for (int j = g; j < i; ++j) ok = ok && s[j + 1] >= s[j];
      if (ok) right = std::max(right, s[i]);
    }
    out.push_back((left - s[g]) + (right - s[g]));
  }
  return out;
}

TilingParams literal_rule() {
  TilingParams p;
  p.valley_only = false;
  p.min_relative_depth = 0.0;
  return p;
}

}  // namespace

TEST_CASE("build_pseudo_sentences group sizes") {
  auto sizes = [](int n) {
    std::vector<std::size_t> out;
    for (const auto& p : build_pseudo_sentences(stem_stream(n), 20)) out.push_back(p.stems.size());
    return out;
  };
  CHECK(sizes(60) == std::vector<std::size_t>{20, 20, 20});
  CHECK(sizes(45) == std::vector<std::size_t>{20, 20});
  CHECK(sizes(55) == std::vector<std::size_t>{20, 20, 15});
  CHECK(sizes(50) == std::vector<std::size_t>{20, 20, 10});
  CHECK(sizes(30) == std::vector<std::size_t>{20, 10});
  CHECK_THROWS_AS(build_pseudo_sentences(stem_stream(29), 20), TooShort);
  CHECK_THROWS_AS(build_pseudo_sentences(stem_stream(5), 20), TooShort);

  auto tokens = stem_stream(40);
  tokens[0].is_stopword = true;  // skipped
  auto ps = build_pseudo_sentences(tokens, 10);
  CHECK(ps.size() == 4);  // 39 content stems: 10, 10, 10, 9
  CHECK(ps[0].first_token_offset == 4);
  CHECK(ps[1].first_token_offset == 44);
}

TEST_CASE("cosine and cohesion") {
  CHECK(cosine({{"a", 2}, {"b", 1}}, {{"a", 2}, {"b", 1}}) == doctest::Approx(1.0));
  CHECK(cosine({{"a", 1}}, {{"b", 1}}) == 0.0);
  CHECK(cosine({{"a", 1}, {"b", 1}}, {{"a", 1}}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cosine({}, {{"a", 1}}) == 0.0);

  std::vector<PseudoSentence> same = {{{"x", "y"}, 0}, {{"y", "x"}, 0}};
  auto g = cohesion_scores(same, 10);
  REQUIRE(g.size() == 1);
  CHECK(g[0].cohesion == doctest::Approx(1.0));
  std::vector<PseudoSentence> disjoint = {{{"x", "y"}, 0}, {{"p", "q"}, 0}};
  CHECK(cohesion_scores(disjoint, 10)[0].cohesion == 0.0);
}

TEST_CASE("cohesion is symmetric and scale invariant") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    StemCounts a, b;
    for (int i = 0; i < 12; ++i) {
      a["s" + std::to_string(rng() % 10)] += 1 + rng() % 3;
      b["s" + std::to_string(rng() % 10)] += 1 + rng() % 3;
    }
    CHECK(cosine(a, b) == cosine(b, a));
    int c = 1 + static_cast<int>(rng() % 7);
    StemCounts ac = a, bc = b;
    for (auto& [k, v] : ac) v *= c;
    for (auto& [k, v] : bc) v *= c;
    CHECK(cosine(ac, bc) == doctest::Approx(cosine(a, b)).epsilon(1e-12));
    CHECK(cosine(a, b) >= 0.0);
    CHECK(cosine(a, b) <= 1.0);
  }
}

TEST_CASE("smooth") {
  std::vector<double> v = {0.3, 0.9, 0.1};
  CHECK(smooth(v, 0, 1) == v);
  auto s = smooth({0, 1, 0}, 1, 1);
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(1.0 / 3.0));
  CHECK(s[2] == doctest::Approx(0.5));
  for (double x : smooth({0.4, 0.4, 0.4, 0.4}, 2, 3)) CHECK(x == doctest::Approx(0.4));
}

TEST_CASE("depth_scores") {
  auto d = depth_scores({0.8, 0.2, 0.9});
  CHECK(d[1] == doctest::Approx(1.3));
  CHECK(d[0] == 0.0);
  CHECK(d[2] == 0.0);

  std::vector<double> rising = {0.1, 0.2, 0.4, 0.7};
  auto dr = depth_scores(rising);
  for (std::size_t i = 0; i < rising.size(); ++i) CHECK(dr[i] == doctest::Approx(0.7 - rising[i]));

  for (double x : depth_scores({0.5, 0.5, 0.5})) CHECK(x == 0.0);
  // Climb through a plateau.
  CHECK(depth_scores({0.9, 0.5, 0.5, 0.2, 0.6})[3] == doctest::Approx(0.7 + 0.4));
}

TEST_CASE("depth matches the brute-force oracle on short streams") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);  // gaps for <= 8 pseudo-sentences
    std::vector<double> s;
    for (int i = 0; i < n; ++i) s.push_back(std::uniform_int_distribution<int>(0, 4)(rng) / 4.0);  // plateaus likely
    auto d = depth_scores(s);
    auto o = brute_force_depths(s);
    CAPTURE(trial);
    REQUIRE(d == o);
    for (std::size_t g = 0; g < s.size(); ++g) {
      CHECK(d[g] >= 0.0);
      bool strict_peak = (g == 0 || s[g - 1] < s[g]) && (g + 1 == s.size() || s[g + 1] < s[g]);
      if (strict_peak) CHECK(d[g] == 0.0);
    }
  }
}

TEST_CASE("select_boundaries threshold and separation") {
  CHECK(select_boundaries({0.3, 0.3, 0.3}, {0.5, 0.5, 0.5}, literal_rule()).empty());
  CHECK(select_boundaries({0, 0, 1, 0}, {0.5, 0.5, 0.1, 0.5}, literal_rule()) == std::vector<int>{2});
  CHECK(select_boundaries({0, 0.9, 1.0, 0, 0, 0}, {0.6, 0.2, 0.1, 0.6, 0.6, 0.6}, literal_rule()) ==
        std::vector<int>{2});
  // Equal depths within the separation window: the earlier gap wins.
  CHECK(select_boundaries({0, 1.0, 0, 1.0, 0, 0}, {0.6, 0.1, 0.6, 0.1, 0.6, 0.6}, literal_rule()) ==
        std::vector<int>{1});

  // Default filters: slope gaps and shallow valleys are not boundaries.
  std::vector<double> scores = {0.8, 0.7, 0.72, 0.5, 0.2, 0.5, 0.8, 0.8, 0.8, 0.8};
  auto depths = depth_scores(scores);
  CHECK(select_boundaries(depths, scores) == std::vector<int>{4});
  CHECK(select_boundaries(depths, scores, literal_rule()).size() > 1);
}

TEST_CASE("boundaries reverse with the stream") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 40)(rng);
    std::vector<PseudoSentence> ps;
    int vocab = std::uniform_int_distribution<int>(5, 40)(rng);
    for (int i = 0; i < n; ++i) {
      PseudoSentence p;
      int shift = i < n / 2 ? 0 : vocab / 2;
      for (int j = 0; j < 20; ++j)
        p.stems.push_back("s" + std::to_string(shift + std::uniform_int_distribution<int>(0, vocab - 1)(rng)));
      ps.push_back(p);
    }
    auto run = [](const std::vector<PseudoSentence>& p, std::vector<double>* depths_out) {
      std::vector<double> raw;
      for (const auto& g : cohesion_scores(p, 10)) raw.push_back(g.cohesion);
      auto s = smooth(raw, 1, 1);
      auto d = depth_scores(s);
      *depths_out = d;
      return select_boundaries(d, s);
    };
    std::vector<double> d1, d2;
    auto fwd = run(ps, &d1);
    auto rev_ps = ps;
    std::reverse(rev_ps.begin(), rev_ps.end());
    auto bwd = run(rev_ps, &d2);
    // Equal depths inside one separation window break ties by position, which is not mirror-symmetric.
    std::vector<double> positive;
    for (double d : d1)
      if (d > 0) positive.push_back(d);
    std::set<double> distinct(positive.begin(), positive.end());
    if (distinct.size() != positive.size()) continue;
    const int gaps = n - 1;
    std::vector<int> mirrored;
    for (int g : bwd) mirrored.push_back(gaps - 1 - g);
    std::sort(mirrored.begin(), mirrored.end());
    CAPTURE(trial);
    CHECK(fwd == mirrored);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("synthetic vocabularies are content words with disjoint stems") {
  const auto& res = TextResources::standard();
  std::set<std::string> a_stems;
  for (const auto& w : testing::cooking_words()) {
    CHECK_FALSE(res.is_stopword(w));
    a_stems.insert(porter_stem(w));
  }
  for (const auto& w : testing::networking_words()) {
    CHECK_FALSE(res.is_stopword(w));
    CHECK(a_stems.count(porter_stem(w)) == 0);
  }
}

TEST_CASE("segment_transcript finds the junction of a two-topic lecture") {
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed * 7919);
    int na = std::uniform_int_distribution<int>(500, 700)(rng);
    int nb = std::uniform_int_distribution<int>(500, 700)(rng);
    auto t = testing::make_two_topic(seed, na, nb);
    auto seg = segment_transcript(t.doc);
    double junction_gap = t.words_a / 20.0 - 1.0;
    if (seg.boundaries.size() == 1 && std::abs(seg.boundaries[0] - junction_gap) <= 2.0) ++hits;

    REQUIRE(seg.segments.size() == seg.boundaries.size() + 1);
    Millis total = 0;
    for (std::size_t i = 0; i < seg.segments.size(); ++i) {
      total += seg.segments[i].duration_ms;
      if (i > 0) CHECK(seg.segments[i].first_cue == seg.segments[i - 1].last_cue + 1);
    }
    CHECK(total == t.doc.total_cue_duration_ms());
    CHECK(seg.segments.front().first_cue == 1);
    CHECK(seg.segments.back().last_cue == static_cast<int>(t.doc.cues.size()));
  }
  CHECK(hits >= 18);
}

TEST_CASE("short transcript is one segment") {
  // About 30 words; too few content stems for a second pseudo-sentence.
  auto doc = parse_srt(
      "1\n00:00:01,000 --> 00:00:04,000\nToday we look at the onion and the garlic in a hot pan.\n\n"
      "2\n00:00:04,500 --> 00:00:08,000\nThen the router sends each packet to the gateway of the subnet.\n\n"
      "3\n00:00:08,500 --> 00:00:10,000\nThe butter melts and the latency grows.\n");
  auto seg = segment_transcript(doc);
  REQUIRE(seg.segments.size() == 1);
  CHECK(seg.gaps.empty());
  CHECK(seg.segments[0].first_cue == 1);
  CHECK(seg.segments[0].last_cue == 3);
  CHECK(seg.segments[0].duration_ms == 3000 + 3500 + 1500);
}

TEST_CASE("gap csv format") {
  std::vector<GapScore> gaps = {{0, 0.5, 0.25, 0.0, false}, {1, 0.125, 0.2, 0.3, true}};
  CHECK(gap_scores_csv(gaps) ==
        "gap_index,cohesion,smoothed,depth,selected\n0,0.500000,0.250000,0.000000,0\n"
        "1,0.125000,0.200000,0.300000,1\n");
}
