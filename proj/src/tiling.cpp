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

#include "lqg/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lqg/error.hpp"

namespace lqg {

std::vector<PseudoSentence> build_pseudo_sentences(const std::vector<Token>& tokens, int w) {
  if (w < 2) throw std::invalid_argument("pseudo-sentence size must be at least 2");
  std::vector<PseudoSentence> out;
  for (const auto& t : tokens) {
    if (t.is_stopword || t.is_punct() || t.stem.empty()) continue;
    if (out.empty() || out.back().stems.size() == static_cast<std::size_t>(w)) {
      out.emplace_back();
      out.back().first_token_offset = t.span.begin;
    }
    out.back().stems.push_back(t.stem);
  }
  if (out.size() > 1 && out.back().stems.size() * 2 < static_cast<std::size_t>(w)) out.pop_back();
  if (out.size() < 2) throw TooShort("transcript yields fewer than two pseudo-sentences");
  return out;
}

double cosine(const StemCounts& a, const StemCounts& b) {
  // Integer accumulation keeps the result independent of argument order.
  long long dot = 0, na = 0, nb = 0;
  for (const auto& [stem, n] : a) {
    na += 1LL * n * n;
    auto it = b.find(stem);
    if (it != b.end()) dot += 1LL * n * it->second;
  }
  for (const auto& [stem, n] : b) nb += 1LL * n * n;
  if (na == 0 || nb == 0) return 0.0;
  double c = static_cast<double>(dot) / (std::sqrt(static_cast<double>(na)) * std::sqrt(static_cast<double>(nb)));
  return std::clamp(c, 0.0, 1.0);
}

std::vector<GapScore> cohesion_scores(const std::vector<PseudoSentence>& ps, int k) {
  if (k < 1) throw std::invalid_argument("block size must be at least 1");
  std::vector<GapScore> out;
  const int n = static_cast<int>(ps.size());
  for (int g = 0; g + 1 < n; ++g) {
    StemCounts left, right;
    for (int i = std::max(0, g - k + 1); i <= g; ++i)
      for (const auto& s : ps[i].stems) ++left[s];
    for (int i = g + 1; i <= std::min(n - 1, g + k); ++i)
      for (const auto& s : ps[i].stems) ++right[s];
    GapScore gs;
    gs.gap_index = g;
    gs.cohesion = cosine(left, right);
    out.push_back(gs);
  }
  return out;
}

std::vector<double> smooth(const std::vector<double>& scores, int width, int rounds) {
  if (width < 0 || rounds < 0) throw std::invalid_argument("smoothing width and rounds must be non-negative");
  std::vector<double> cur = scores;
  const int n = static_cast<int>(cur.size());
  for (int r = 0; r < rounds && width > 0; ++r) {
    std::vector<double> next(cur.size());
    for (int i = 0; i < n; ++i) {
      // Pairwise sums of mirrored neighbours so a reversed input gives a reversed output exactly.
      double sum = cur[i];
      int count = 1;
      for (int d = 1; d <= width; ++d) {
        bool l = i - d >= 0, rr = i + d < n;
        if (l && rr) {
          sum += cur[i - d] + cur[i + d];
          count += 2;
        } else if (l) {
          sum += cur[i - d];
          ++count;
        } else if (rr) {
          sum += cur[i + d];
          ++count;
        }
      }
      next[i] = sum / count;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> depth_scores(const std::vector<double>& s) {
  std::vector<double> out(s.size());
  const std::size_t n = s.size();
  for (std::size_t g = 0; g < n; ++g) {
    double left = s[g];
    for (std::size_t i = g; i > 0 && s[i - 1] >= left; --i) left = s[i - 1];
    double right = s[g];
    for (std::size_t i = g; i + 1 < n && s[i + 1] >= right; ++i) right = s[i + 1];
    out[g] = (left - s[g]) + (right - s[g]);
  }
  return out;
}

namespace {

bool is_valley(const std::vector<double>& s, std::size_t g) {
  const double inf = std::numeric_limits<double>::infinity();
  double l = g > 0 ? s[g - 1] : inf;
  double r = g + 1 < s.size() ? s[g + 1] : inf;
  return s[g] <= l && s[g] <= r && (s[g] < l || s[g] < r);
}

}  // namespace

std::vector<int> select_boundaries(const std::vector<double>& depths, const std::vector<double>& scores,
                                   const TilingParams& params) {
  if (depths.empty()) return {};
  // Sum in sorted order so the threshold does not depend on gap order.
  std::vector<double> sorted = depths;
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double d : sorted) sum += d;
  const double mean = sum / sorted.size();
  double var = 0.0;
  for (double d : sorted) var += (d - mean) * (d - mean);
  const double tau = mean - std::sqrt(var / sorted.size()) / 2.0;
  const double deepest = sorted.back();

  std::vector<int> candidates;
  for (std::size_t g = 0; g < depths.size(); ++g) {
    if (!(depths[g] > tau)) continue;
    if (params.valley_only && !is_valley(scores, g)) continue;
    if (depths[g] < params.min_relative_depth * deepest) continue;
    candidates.push_back(static_cast<int>(g));
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return depths[a] > depths[b]; });
  std::vector<int> chosen;
  for (int g : candidates) {
    bool far = std::all_of(chosen.begin(), chosen.end(),
                           [&](int c) { return std::abs(c - g) > params.min_separation; });
    if (far) chosen.push_back(g);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Segmentation segment_transcript(const TranscriptDocument& doc, const TilingParams& params,
                                const TextResources& res) {
  if (doc.cues.empty()) throw EmptyDocument("transcript has no cues");
  const TimedText tt = flatten(doc);
  auto tokens = tokenize(tt.text, 0, res);
  remove_stopwords(tokens, res);
  stem_tokens(tokens);

  Segmentation out;
  std::vector<int> cut_cues;  // first cue of each new segment
  try {
    out.pseudo_sentences = build_pseudo_sentences(tokens, params.w);
  } catch (const TooShort&) {
    out.pseudo_sentences.clear();
  }
  if (!out.pseudo_sentences.empty()) {
    out.gaps = cohesion_scores(out.pseudo_sentences, params.k);
    std::vector<double> raw;
    for (const auto& g : out.gaps) raw.push_back(g.cohesion);
    auto smoothed = smooth(raw, params.smoothing_width, params.smoothing_rounds);
    auto depths = depth_scores(smoothed);
    for (std::size_t i = 0; i < out.gaps.size(); ++i) {
      out.gaps[i].smoothed = smoothed[i];
      out.gaps[i].depth = depths[i];
    }
    out.boundaries = select_boundaries(depths, smoothed, params);
    for (int g : out.boundaries) {
      out.gaps[g].selected = true;
      int cue = cue_for_offset(tt, out.pseudo_sentences[g + 1].first_token_offset);
      if (cue > doc.cues.front().index && (cut_cues.empty() || cue > cut_cues.back())) cut_cues.push_back(cue);
    }
  }

  int first = doc.cues.front().index;
  auto close = [&](int last) {
    Segment seg;
    seg.segment_id = static_cast<int>(out.segments.size()) + 1;
    seg.first_cue = first;
    seg.last_cue = last;
    seg.char_span = {tt.offsets[first - 1].begin, tt.offsets[last - 1].end};
    for (int c = first; c <= last; ++c) seg.duration_ms += doc.cue(c).duration_ms();
    seg.start_ms = doc.cue(first).start_ms;
    seg.end_ms = doc.cue(last).end_ms;
    out.segments.push_back(seg);
  };
  for (int cut : cut_cues) {
    close(cut - 1);
    first = cut;
  }
  close(doc.cues.back().index);
  return out;
}

std::string gap_scores_csv(const std::vector<GapScore>& gaps) {
  std::string out = "gap_index,cohesion,smoothed,depth,selected\n";
  char buf[160];
  for (const auto& g : gaps) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%d\n", g.gap_index, g.cohesion, g.smoothed, g.depth,
                  g.selected ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace lqg
