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

#include "lqg/transcript.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "lqg/error.hpp"
#include "strutil.hpp"

namespace lqg {

using detail::trim;

const Cue& TranscriptDocument::cue(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > cues.size()) {
    throw OutOfRange("cue index " + std::to_string(index) + " not in 1.." +
                     std::to_string(cues.size()));
  }
  return cues[static_cast<std::size_t>(index) - 1];
}

Millis TranscriptDocument::total_cue_duration_ms() const {
  Millis total = 0;
  for (const auto& c : cues) total += c.duration_ms();
  return total;
}

namespace {

bool parse_fixed_digits(std::string_view s, int& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!detail::is_digit(c)) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

// Removes `<...>` and `{...}` spans until none remain.
std::string strip_styling(std::string_view line) {
  std::string s(line);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [open, close] : {std::pair{'<', '>'}, std::pair{'{', '}'}}) {
      std::string out;
      out.reserve(s.size());
      std::size_t i = 0;
      while (i < s.size()) {
        if (s[i] == open) {
          auto j = s.find_first_of(std::string{open, close}, i + 1);
          if (j != std::string::npos && s[j] == close) {
            i = j + 1;
            changed = true;
            continue;
          }
        }
        out += s[i++];
      }
      s = std::move(out);
    }
  }
  return s;
}

std::string normalize_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out += '\n';
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out += raw[i];
    }
  }
  return out;
}

}  // namespace

Millis parse_timestamp(std::string_view text) {
  auto t = trim(text);
  auto bad = [&] { return MalformedTimestamp("bad timestamp '" + std::string(text) + "'"); };
  auto c1 = t.find(':');
  if (c1 == std::string_view::npos) throw bad();
  auto c2 = t.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw bad();
  auto sep = t.find_first_of(",.", c2 + 1);
  if (sep == std::string_view::npos) throw bad();
  int h = 0, m = 0, s = 0, ms = 0;
  auto hh = t.substr(0, c1), mm = t.substr(c1 + 1, c2 - c1 - 1), ss = t.substr(c2 + 1, sep - c2 - 1),
       mmm = t.substr(sep + 1);
  if (!parse_fixed_digits(hh, h) || mm.size() != 2 || !parse_fixed_digits(mm, m) || ss.size() != 2 ||
      !parse_fixed_digits(ss, s) || mmm.size() != 3 || !parse_fixed_digits(mmm, ms) || m >= 60 ||
      s >= 60) {
    throw bad();
  }
  return ((static_cast<Millis>(h) * 60 + m) * 60 + s) * 1000 + ms;
}

std::string format_timestamp(Millis ms) {
  if (ms < 0) throw std::invalid_argument("negative timestamp");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld", static_cast<long long>(ms / 3600000),
                static_cast<long long>(ms / 60000 % 60), static_cast<long long>(ms / 1000 % 60),
                static_cast<long long>(ms % 1000));
  return buf;
}

TranscriptDocument parse_srt(std::string_view raw, std::string source_id) {
  if (raw.substr(0, 3) == "\xEF\xBB\xBF") raw.remove_prefix(3);
  const std::string text = normalize_newlines(raw);

  std::vector<std::vector<std::string_view>> blocks(1);
  for (auto line : detail::split_lines(text)) {
    if (trim(line).empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }

  TranscriptDocument doc;
  doc.source_id = std::move(source_id);
  for (const auto& block : blocks) {
    std::size_t timing = 0;
    if (block.empty()) continue;
    if (block[0].find("-->") != std::string_view::npos) {
      timing = 0;
    } else if (block.size() > 1 && block[1].find("-->") != std::string_view::npos) {
      timing = 1;
    } else {
      continue;  // no timing line: not a cue
    }
    auto arrow = block[timing].find("-->");
    auto right = trim(block[timing].substr(arrow + 3));
    right = right.substr(0, std::min(right.size(), right.find_first_of(" \t")));
    Cue cue;
    cue.start_ms = parse_timestamp(block[timing].substr(0, arrow));
    cue.end_ms = parse_timestamp(right);
    if (cue.start_ms >= cue.end_ms) {
      throw MalformedTimestamp("cue starts at " + format_timestamp(cue.start_ms) +
                               " but ends at " + format_timestamp(cue.end_ms));
    }
    std::vector<std::string> lines;
    for (std::size_t i = timing + 1; i < block.size(); ++i) {
      auto cleaned = strip_styling(block[i]);
      auto t = trim(cleaned);
      if (!t.empty()) lines.emplace_back(t);
    }
    if (lines.empty()) continue;
    cue.text = detail::join(lines, "\n");

    if (!doc.cues.empty()) {
      auto& prev = doc.cues.back();
      if (cue.start_ms < prev.start_ms) {
        throw OverlapRejected("cue at " + format_timestamp(cue.start_ms) +
                              " starts before the previous cue at " +
                              format_timestamp(prev.start_ms));
      }
      if (cue.start_ms == prev.start_ms) {
        prev.text += " " + cue.text;
        prev.end_ms = std::max(prev.end_ms, cue.end_ms);
        continue;
      }
    }
    doc.cues.push_back(std::move(cue));
  }
  if (doc.cues.empty()) throw EmptyDocument("no parsable cues");
  for (std::size_t i = 0; i < doc.cues.size(); ++i) doc.cues[i].index = static_cast<int>(i) + 1;
  return doc;
}

void validate(const TranscriptDocument& doc) {
  for (std::size_t i = 0; i < doc.cues.size(); ++i) {
    const auto& c = doc.cues[i];
    auto where = "cue " + std::to_string(i + 1);
    if (c.index != static_cast<int>(i) + 1) throw std::invalid_argument(where + ": index not consecutive");
    if (c.start_ms < 0 || c.start_ms >= c.end_ms) throw std::invalid_argument(where + ": start >= end");
    if (i > 0 && c.start_ms <= doc.cues[i - 1].start_ms)
      throw std::invalid_argument(where + ": start not increasing");
    if (trim(c.text).empty()) throw std::invalid_argument(where + ": empty text");
    for (auto line : detail::split_lines(c.text)) {
      if (line.empty() || trim(line) != line)
        throw std::invalid_argument(where + ": text lines must be trimmed and non-empty");
    }
  }
}

std::string serialize_srt(const TranscriptDocument& doc) {
  validate(doc);
  std::string out;
  for (std::size_t i = 0; i < doc.cues.size(); ++i) {
    const auto& c = doc.cues[i];
    if (i) out += '\n';
    out += std::to_string(c.index);
    out += '\n';
    out += format_timestamp(c.start_ms) + " --> " + format_timestamp(c.end_ms);
    out += '\n';
    out += c.text;
    out += '\n';
  }
  return out;
}

TimedText flatten(const TranscriptDocument& doc) {
  TimedText tt;
  for (const auto& c : doc.cues) {
    if (!tt.text.empty()) tt.text += ' ';
    std::size_t begin = tt.text.size();
    for (char ch : c.text) tt.text += (ch == '\n' ? ' ' : ch);
    tt.offsets.push_back({begin, tt.text.size(), c.index});
  }
  return tt;
}

int cue_for_offset(const TimedText& tt, std::size_t offset) {
  if (offset >= tt.text.size()) {
    throw OutOfRange("offset " + std::to_string(offset) + " outside text of length " +
                     std::to_string(tt.text.size()));
  }
  // Last range whose begin <= offset; separators fall after a range's end
  // and so resolve to it.
  auto it = std::upper_bound(tt.offsets.begin(), tt.offsets.end(), offset,
                             [](std::size_t off, const OffsetRange& r) { return off < r.begin; });
  return std::prev(it)->cue_index;
}

}  // namespace lqg
