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

#include "lqg/text.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>

#include "lqg/error.hpp"
#include "lqg/stemmer.hpp"
#include "strutil.hpp"

#ifndef LQG_DATA_DIR
#define LQG_DATA_DIR "data"
#endif

namespace lqg {

using detail::to_lower;

namespace {

constexpr std::array<std::string_view, 18> kTagNames = {"NN", "NNS", "NNP", "VB",  "VBD", "VBZ",
                                                        "VBP", "VBG", "VBN", "MD",  "DT",  "IN",
                                                        "JJ", "RB",  "PRP", "CD",  "AUX", "OTHER"};

std::vector<std::string> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(t);
  }
  return lines;
}

bool word_byte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

}  // namespace

std::string_view tag_name(Tag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<Tag> tag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  return std::nullopt;
}

std::string_view entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::PERSON: return "PERSON";
    case EntityKind::DATE: return "DATE";
    case EntityKind::NUMBER: return "NUMBER";
    case EntityKind::LOCATION: return "LOCATION";
    case EntityKind::NP_OTHER: return "NP_OTHER";
  }
  return "NP_OTHER";
}

bool Token::is_punct() const {
  for (char c : surface)
    if (word_byte(c)) return false;
  return true;
}

TextResources TextResources::load(const std::string& dir) {
  TextResources res;
  for (auto& w : read_table(dir + "/stopwords.txt")) res.stopwords_.insert(to_lower(w));
  for (auto& w : read_table(dir + "/abbreviations.txt")) res.abbreviations_.insert(to_lower(w));
  for (auto& w : read_table(dir + "/given_names.txt")) res.given_names_.insert(w);
  for (auto& w : read_table(dir + "/honorifics.txt")) res.honorifics_.insert(w);
  for (auto& w : read_table(dir + "/locations.txt")) res.locations_.insert(w);
  for (auto& w : read_table(dir + "/months.txt")) res.months_.insert(w);

  for (auto& line : read_table(dir + "/lexicon.tsv")) {
    auto cols = detail::split(line, '\t');
    if (cols.size() != 2) throw ResourceError("lexicon.tsv: bad line '" + line + "'");
    std::vector<Tag> tags;
    for (auto& name : detail::split(cols[1], '|')) {
      auto tag = tag_from_name(name);
      if (!tag) throw ResourceError("lexicon.tsv: unknown tag '" + name + "'");
      tags.push_back(*tag);
      if (*tag == Tag::VB) res.verb_bases_.insert(cols[0]);
    }
    res.lexicon_[cols[0]] = std::move(tags);
  }

  std::set<std::string> bases;
  std::vector<std::array<std::string, 3>> rows;
  for (auto& line : read_table(dir + "/irregular_verbs.tsv")) {
    auto cols = detail::split(line, '\t');
    if (cols.size() != 3) throw ResourceError("irregular_verbs.tsv: bad line '" + line + "'");
    bases.insert(cols[0]);
    rows.push_back({cols[0], cols[1], cols[2]});
    res.verb_bases_.insert(cols[0]);
  }
  for (const auto& [base, past, part] : rows) {
    for (const auto& form : {past, part})
      if (!bases.count(form)) res.irregular_base_.emplace(form, base);
  }
  for (auto [form, base] : {std::pair{"has", "have"}, {"does", "do"}, {"goes", "go"}, {"is", "be"},
                            {"am", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"}}) {
    res.irregular_base_[form] = base;
  }
  return res;
}

const TextResources& TextResources::standard() {
  static const TextResources instance = [] {
    const char* env = std::getenv("LQG_DATA_DIR");
    return load(env && *env ? env : LQG_DATA_DIR);
  }();
  return instance;
}

bool TextResources::is_abbreviation(std::string_view surface) const {
  return abbreviations_.count(to_lower(surface)) > 0;
}

bool TextResources::is_month(std::string_view surface) const {
  return months_.count(std::string(surface)) > 0;
}

const std::vector<Tag>* TextResources::lexicon(std::string_view lower) const {
  auto it = lexicon_.find(lower);
  return it == lexicon_.end() ? nullptr : &it->second;
}

bool TextResources::is_known_verb_base(std::string_view lower) const {
  return verb_bases_.find(lower) != verb_bases_.end();
}

std::optional<std::string> TextResources::irregular_base(std::string_view lower) const {
  auto it = irregular_base_.find(lower);
  if (it == irregular_base_.end()) return std::nullopt;
  return it->second;
}

std::vector<Token> tokenize(std::string_view text, std::size_t base, const TextResources& res) {
  std::vector<Token> out;
  auto push = [&](std::size_t b, std::size_t e) {
    Token t;
    t.surface = std::string(text.substr(b, e - b));
    t.span = {base + b, base + e};
    out.push_back(std::move(t));
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && detail::is_space(text[i])) ++i;
    if (i >= n) break;
    std::size_t b = i;
    while (i < n && !detail::is_space(text[i])) ++i;
    std::size_t e = i;

    while (b < e && !word_byte(text[b])) {
      push(b, b + 1);
      ++b;
    }
    std::vector<std::size_t> trailing;
    while (e > b && !res.is_abbreviation(text.substr(b, e - b)) && !word_byte(text[e - 1])) {
      --e;
      trailing.push_back(e);
    }
    if (b < e) push(b, e);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) push(*it, *it + 1);
  }
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text, const TextResources& res) {
  std::vector<Sentence> out;
  const std::size_t n = text.size();
  auto skip_space = [&](std::size_t p) {
    while (p < n && detail::is_space(text[p])) ++p;
    return p;
  };
  auto emit = [&](std::size_t b, std::size_t e) {
    while (e > b && detail::is_space(text[e - 1])) --e;
    if (e <= b) return;
    Sentence s;
    s.span = {b, e};
    s.text = std::string(text.substr(b, e - b));
    out.push_back(std::move(s));
  };

  std::size_t start = skip_space(0);
  for (std::size_t i = start; i < n; ++i) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    std::size_t j = i;
    while (j + 1 < n && std::string_view(".?!\"')").find(text[j + 1]) != std::string_view::npos) ++j;
    std::size_t next = skip_space(j + 1);
    bool boundary = next >= n || (next > j + 1 && detail::is_upper(text[next]));
    if (boundary && c == '.') {
      std::size_t wb = i;
      while (wb > start && !detail::is_space(text[wb - 1])) --wb;
      while (wb < i && !word_byte(text[wb])) ++wb;
      if (res.is_abbreviation(text.substr(wb, i + 1 - wb))) boundary = false;
    }
    if (!boundary) {
      i = j;
      continue;
    }
    emit(start, j + 1);
    start = next;
    i = next > 0 ? next - 1 : 0;
  }
  if (start < n) emit(start, n);
  return out;
}

void remove_stopwords(std::vector<Token>& tokens, const TextResources& res) {
  for (auto& t : tokens) t.is_stopword = t.is_punct() || res.is_stopword(to_lower(t.surface));
}

void stem_tokens(std::vector<Token>& tokens) {
  for (auto& t : tokens) t.stem = t.is_punct() ? t.surface : porter_stem(to_lower(t.surface));
}

std::vector<Token> analyze(std::string_view text, std::size_t base, const TextResources& res,
                           bool sentence_initial) {
  auto tokens = tokenize(text, base, res);
  remove_stopwords(tokens, res);
  stem_tokens(tokens);
  pos_tag(tokens, res, sentence_initial);
  return tokens;
}

std::vector<Sentence> analyze_sentences(const TimedText& tt, const TextResources& res) {
  auto sentences = split_sentences(tt.text, res);
  for (auto& s : sentences) s.tokens = analyze(s.text, s.span.begin, res, true);
  return sentences;
}

}  // namespace lqg
