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

#include <algorithm>
#include <charconv>

#include "lqg/text.hpp"
#include "strutil.hpp"

namespace lqg {

namespace {

std::optional<int> integer_value(std::string_view s) {
  int v = 0;
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return detail::is_digit(c); }))
    return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{}) return std::nullopt;
  return v;
}

bool is_year(const Token& t) {
  auto v = integer_value(t.surface);
  return t.surface.size() == 4 && v && *v >= 1500 && *v <= 2099;
}

bool is_day(const Token& t) {
  auto v = integer_value(t.surface);
  return v && *v >= 1 && *v <= 31 && t.surface.size() <= 2;
}

bool month_at(const std::vector<Token>& tokens, std::size_t i, const TextResources& res) {
  const auto& t = tokens[i];
  if (!res.is_month(t.surface)) return false;
  if (t.surface != "May") return true;
  // "May" is a modal unless a number sits next to it.
  bool left = i > 0 && tokens[i - 1].pos == Tag::CD;
  bool right = i + 1 < tokens.size() && tokens[i + 1].pos == Tag::CD;
  return left || right;
}

std::vector<EntitySpan> date_spans(const std::vector<Token>& tokens, const TextResources& res) {
  std::vector<EntitySpan> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (month_at(tokens, i, res)) {
      std::size_t first = i, last = i;
      if (i > 0 && is_day(tokens[i - 1])) first = i - 1;  // 12 March 1898
      std::size_t k = i + 1;
      if (k < tokens.size() && is_day(tokens[k])) last = k++;  // March 12
      if (k < tokens.size() && tokens[k].surface == "," && k + 1 < tokens.size() &&
          is_year(tokens[k + 1]) && last > i) {
        last = k + 1;  // March 12, 1898
      } else if (k < tokens.size() && is_year(tokens[k])) {
        last = k;  // March 1898
      }
      out.push_back({first, last, EntityKind::DATE});
      i = last;
    } else if (is_year(tokens[i])) {
      out.push_back({i, i, EntityKind::DATE});
    }
  }
  return out;
}

template <typename Pred>
std::vector<std::pair<std::size_t, std::size_t>> runs(const std::vector<Token>& tokens, Pred pred) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < tokens.size();) {
    if (!pred(tokens[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && pred(tokens[j + 1])) ++j;
    out.emplace_back(i, j);
    i = j + 1;
  }
  return out;
}

}  // namespace

std::vector<EntitySpan> detect_entities(const std::vector<Token>& tokens, const TextResources& res) {
  std::vector<EntitySpan> candidates = date_spans(tokens, res);

  auto in_date = [&](std::size_t i) {
    return std::any_of(candidates.begin(), candidates.end(), [&](const EntitySpan& e) {
      return e.kind == EntityKind::DATE && e.first <= i && i <= e.last;
    });
  };
  for (auto [a, b] : runs(tokens, [](const Token& t) { return t.pos == Tag::CD; })) {
    for (std::size_t i = a; i <= b;) {
      if (in_date(i)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 <= b && !in_date(j + 1)) ++j;
      candidates.push_back({i, j, EntityKind::NUMBER});
      i = j + 1;
    }
  }
  for (auto [a, b] : runs(tokens, [](const Token& t) { return t.pos == Tag::NNP; })) {
    const auto& head = tokens[a].surface;
    if (res.is_given_name(head) || res.is_honorific(head)) {
      candidates.push_back({a, b, EntityKind::PERSON});
    } else if (res.is_location(head)) {
      candidates.push_back({a, b, EntityKind::LOCATION});
    }
  }

  // Longer spans first, then earlier; keep the non-overlapping ones.
  std::stable_sort(candidates.begin(), candidates.end(), [](const EntitySpan& x, const EntitySpan& y) {
    auto lx = x.last - x.first, ly = y.last - y.first;
    return lx != ly ? lx > ly : x.first < y.first;
  });
  std::vector<bool> covered(tokens.size(), false);
  std::vector<EntitySpan> out;
  for (const auto& c : candidates) {
    bool free = true;
    for (std::size_t i = c.first; i <= c.last; ++i) free = free && !covered[i];
    if (!free) continue;
    for (std::size_t i = c.first; i <= c.last; ++i) covered[i] = true;
    out.push_back(c);
  }

  // NP_OTHER: maximal DT? JJ* (NN|NNS|NNP)+ over what is left.
  for (std::size_t i = 0; i < tokens.size();) {
    if (covered[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (tokens[j].pos == Tag::DT) ++j;
    while (j < tokens.size() && !covered[j] && tokens[j].pos == Tag::JJ) ++j;
    std::size_t k = j;
    while (k < tokens.size() && !covered[k] && is_noun(tokens[k].pos)) ++k;
    if (k > j) {
      out.push_back({i, k - 1, EntityKind::NP_OTHER});
      for (std::size_t m = i; m < k; ++m) covered[m] = true;
      i = k;
    } else {
      ++i;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const EntitySpan& x, const EntitySpan& y) { return x.first < y.first; });
  return out;
}

}  // namespace lqg
