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

#include "lqg/rank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "lqg/error.hpp"

namespace lqg {

std::vector<double> extract_features(const QuestionCandidate& q) {
  std::vector<double> f(kFeatureDim, 0.0);
  f[0] = q.link == LinkStatus::LINKED ? 1.0 : 0.0;
  f[1] = std::min(std::abs(q.token_count - 12), 12) / 12.0;
  f[2 + static_cast<int>(q.wh)] = 1.0;
  f[7] = q.vague_pronoun ? 1.0 : 0.0;
  f[8] = std::clamp(q.proper_noun_count, 0, 5) / 5.0;
  return f;
}

std::vector<double> default_weights() { return {2.0, -1.0, 0.5, 0.5, 0.5, 0.5, 0.5, -2.0, 0.5}; }

double score(QuestionCandidate& q, const std::vector<double>& weights) {
  if (q.features.size() != weights.size())
    throw DimensionMismatch("features have " + std::to_string(q.features.size()) + " entries, weights " +
                            std::to_string(weights.size()));
  double y = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) y += weights[i] * q.features[i];
  q.score = y;
  return y;
}

int default_total(Millis video_duration_ms) {
  // round(minutes / 2) == round(ms / 120000), halves away from zero.
  const Millis n = (video_duration_ms + 60000) / 120000;
  return static_cast<int>(std::max<Millis>(1, n));
}

std::vector<int> allocate(const std::vector<Millis>& durations, int total) {
  const std::size_t n = durations.size();
  std::vector<int> counts(n, 0);
  if (n == 0 || total <= 0) return counts;
  const long long sum = std::accumulate(durations.begin(), durations.end(), 0LL);
  if (sum <= 0) return counts;

  // quota_i = total * d_i / sum; remainders compared over the common denominator.
  std::vector<long long> rem(n);
  int given = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 num = static_cast<__int128>(total) * durations[i];
    counts[i] = static_cast<int>(num / sum);
    rem[i] = static_cast<long long>(num % sum);
    given += counts[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  for (int k = 0; k < total - given; ++k) ++counts[order[static_cast<std::size_t>(k)]];
  return counts;
}

std::vector<int> allocate(const std::vector<Segment>& segments, int total) {
  std::vector<Millis> d;
  d.reserve(segments.size());
  for (const auto& s : segments) d.push_back(s.duration_ms);
  return allocate(d, total);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t reject_under = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next();
    if (x >= reject_under) return x % bound;
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t quiz_seed(std::string_view student_id, std::string_view quiz_id) {
  std::string key(student_id);
  key.push_back('\0');
  key.append(quiz_id);
  return fnv1a64(key);
}

const QuestionCandidate* QuestionBank::find(std::string_view id) const {
  for (const auto& q : questions)
    if (q.id == id) return &q;
  return nullptr;
}

Quiz select_for_student(const QuestionBank& bank, const std::vector<int>& counts, const std::string& student_id,
                        const std::string& quiz_id) {
  Quiz quiz;
  quiz.quiz_id = quiz_id;
  quiz.student_id = student_id;
  quiz.seed = quiz_seed(student_id, quiz_id);
  SplitMix64 rng(quiz.seed);

  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; s < bank.segments.size() && s < counts.size(); ++s) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < bank.questions.size(); ++i)
      if (bank.questions[i].segment_id == bank.segments[s].segment_id &&
          bank.questions[i].score > bank.score_threshold)
        pool.push_back(i);
    std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
      return bank.questions[a].score > bank.questions[b].score;
    });
    const std::size_t take = std::min(pool.size(), static_cast<std::size_t>(std::max(0, counts[s])));
    for (std::size_t i = 0; i < take; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
  }
  // Bank order is segment order, then source position.
  std::sort(chosen.begin(), chosen.end());
  for (auto i : chosen) quiz.question_ids.push_back(bank.questions[i].id);
  return quiz;
}

}  // namespace lqg
