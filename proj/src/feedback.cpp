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

#include "lqg/feedback.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lqg/error.hpp"
#include "lqg/stemmer.hpp"
#include "strutil.hpp"

#ifndef LQG_DATA_DIR
#define LQG_DATA_DIR "data"
#endif

namespace lqg {

using detail::to_lower;

namespace {

const char* pos_file(WnPos pos) { return pos == WnPos::Noun ? "noun" : "verb"; }

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw MissingFiles("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long parse_long(const std::string& s, int base, const std::string& where) {
  if (s.empty()) throw ParseError(where + ": missing field");
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, base);
  if (*end != '\0' || v < 0) throw ParseError(where + ": bad number \"" + s + "\"");
  return v;
}

// Lines of a WordNet file with their byte offsets; license lines (leading
// spaces) are skipped.
template <typename F>
void for_each_entry(const std::string& text, F&& f) {
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    ++line_no;
    std::string_view line(text.data() + pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != ' ') f(line, pos, line_no);
    pos = nl + 1;
  }
}

void parse_data(const std::string& text, WnPos pos, const std::string& name, std::map<long, Synset>& out) {
  const char expected_type = pos == WnPos::Noun ? 'n' : 'v';
  for_each_entry(text, [&](std::string_view line, std::size_t offset, int line_no) {
    const std::string where = name + " line " + std::to_string(line_no);
    auto bar = line.find(" | ");
    auto fields = detail::split_ws(line.substr(0, bar));
    std::size_t i = 0;
    auto next = [&]() -> const std::string& {
      if (i >= fields.size()) throw ParseError(where + ": truncated entry");
      return fields[i++];
    };
    Synset s;
    s.pos = pos;
    s.offset = parse_long(next(), 10, where);
    if (static_cast<std::size_t>(s.offset) != offset)
      throw ParseError(where + ": offset " + std::to_string(s.offset) + " does not match byte position " +
                       std::to_string(offset));
    next();  // lex_filenum
    const auto& type = next();
    if (type.size() != 1 || type[0] != expected_type)
      throw ParseError(where + ": unexpected synset type \"" + type + "\"");
    const long words = parse_long(next(), 16, where);
    for (long w = 0; w < words; ++w) {
      s.lemmas.push_back(to_lower(next()));
      next();  // lex_id
    }
    const long pointers = parse_long(next(), 10, where);
    for (long p = 0; p < pointers; ++p) {
      const auto symbol = next();
      const long target = parse_long(next(), 10, where);
      const auto target_pos = next();
      next();  // source/target
      if ((symbol == "@" || symbol == "@i") && target_pos.size() == 1 && target_pos[0] == expected_type)
        s.hypernyms.push_back(target);
    }
    if (!out.emplace(s.offset, std::move(s)).second) throw ParseError(where + ": duplicate offset");
  });
}

void parse_index(const std::string& text, const std::string& name, const std::map<long, Synset>& data,
                 std::map<std::string, std::vector<long>>& out) {
  for_each_entry(text, [&](std::string_view line, std::size_t, int line_no) {
    const std::string where = name + " line " + std::to_string(line_no);
    auto fields = detail::split_ws(line);
    if (fields.size() < 6) throw ParseError(where + ": truncated entry");
    const long synsets = parse_long(fields[2], 10, where);
    const long pointers = parse_long(fields[3], 10, where);
    const std::size_t first = 4 + static_cast<std::size_t>(pointers) + 2;
    if (fields.size() != first + static_cast<std::size_t>(synsets))
      throw ParseError(where + ": expected " + std::to_string(synsets) + " synset offsets");
    auto& offsets = out[to_lower(fields[0])];
    for (std::size_t k = first; k < fields.size(); ++k) {
      const long off = parse_long(fields[k], 10, where);
      if (!data.count(off)) throw ParseError(where + ": offset " + fields[k] + " is not in the data file");
      offsets.push_back(off);
    }
    if (offsets.empty()) throw ParseError(where + ": lemma without synsets");
  });
}

// Longest path to a root; throws on cycles.
int compute_depth(const std::map<long, Synset>& table, long offset, std::map<long, int>& done, std::set<long>& open,
                  const std::string& name) {
  if (auto it = done.find(offset); it != done.end()) return it->second;
  if (!open.insert(offset).second) throw ParseError(name + ": hypernym cycle through offset " + std::to_string(offset));
  const auto it = table.find(offset);
  if (it == table.end()) throw ParseError(name + ": hypernym pointer to missing offset " + std::to_string(offset));
  int d = 1;
  for (long h : it->second.hypernyms) {
    if (!table.count(h)) throw ParseError(name + ": hypernym pointer to missing offset " + std::to_string(h));
    d = std::max(d, 1 + compute_depth(table, h, done, open, name));
  }
  open.erase(offset);
  done[offset] = d;
  return d;
}

struct Detachment {
  const char* suffix;
  const char* ending;
};

constexpr Detachment kNounRules[] = {{"s", ""},    {"ses", "s"},  {"xes", "x"},  {"zes", "z"},
                                     {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
constexpr Detachment kVerbRules[] = {{"s", ""},  {"ies", "y"}, {"es", "e"},  {"es", ""},
                                     {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};

}  // namespace

WordNetGraph WordNetGraph::load(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> missing;
  for (const char* f : {"index.noun", "data.noun", "index.verb", "data.verb"})
    if (!fs::is_regular_file(fs::path(dir) / f)) missing.push_back(f);
  if (!missing.empty()) throw MissingFiles(dir + ": missing " + detail::join(missing, ", "));

  WordNetGraph g;
  for (WnPos pos : {WnPos::Noun, WnPos::Verb}) {
    const std::string data_name = std::string("data.") + pos_file(pos);
    const std::string index_name = std::string("index.") + pos_file(pos);
    auto& table = pos == WnPos::Noun ? g.noun_ : g.verb_;
    parse_data(read_all(fs::path(dir) / data_name), pos, data_name, table);
    parse_index(read_all(fs::path(dir) / index_name), index_name, table,
                pos == WnPos::Noun ? g.noun_index_ : g.verb_index_);
    std::map<long, int> depths;
    std::set<long> open;
    for (const auto& [off, s] : table) compute_depth(table, off, depths, open, data_name);
    for (const auto& [off, d] : depths) g.depth_[{static_cast<int>(pos), off}] = d;
  }
  return g;
}

const Synset* WordNetGraph::synset(WnPos pos, long offset) const {
  const auto& t = table(pos);
  auto it = t.find(offset);
  return it == t.end() ? nullptr : &it->second;
}

std::vector<const Synset*> WordNetGraph::lookup(std::string_view lemma, WnPos pos) const {
  std::string key = to_lower(lemma);
  std::replace(key.begin(), key.end(), ' ', '_');
  const auto& idx = index(pos);
  std::vector<long> offsets;
  if (auto it = idx.find(key); it != idx.end()) {
    offsets = it->second;
  } else {
    auto try_rules = [&](const auto& rules) {
      for (const auto& r : rules) {
        std::string_view suffix(r.suffix);
        if (key.size() <= suffix.size() || key.compare(key.size() - suffix.size(), suffix.size(), suffix) != 0)
          continue;
        auto base = key.substr(0, key.size() - suffix.size()) + r.ending;
        if (auto jt = idx.find(base); jt != idx.end())
          for (long o : jt->second)
            if (std::find(offsets.begin(), offsets.end(), o) == offsets.end()) offsets.push_back(o);
      }
    };
    if (pos == WnPos::Noun)
      try_rules(kNounRules);
    else
      try_rules(kVerbRules);
  }
  std::vector<const Synset*> out;
  for (long o : offsets) out.push_back(synset(pos, o));
  return out;
}

int WordNetGraph::depth(const Synset& s) const { return depth_.at({static_cast<int>(s.pos), s.offset}); }

std::vector<const Synset*> WordNetGraph::ancestors(const Synset& s) const {
  std::vector<const Synset*> out{&s};
  std::set<long> seen{s.offset};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (long h : out[i]->hypernyms)
      if (seen.insert(h).second) out.push_back(synset(s.pos, h));
  return out;
}

std::string default_wordnet_dir() {
  const char* env = std::getenv("WORDNET_DIR");
  if (env && *env) return env;
  return std::string(LQG_DATA_DIR) + "/wordnet";
}

double word_similarity(std::string_view a, std::string_view b, const WordNetGraph& g) {
  const std::string la = to_lower(a), lb = to_lower(b);
  if (la.empty() || lb.empty()) return 0.0;
  if (la == lb || porter_stem(la) == porter_stem(lb)) return 1.0;
  double best = 0.0;
  for (WnPos pos : {WnPos::Noun, WnPos::Verb}) {
    for (const Synset* sa : g.lookup(la, pos)) {
      const auto up_a = g.ancestors(*sa);
      for (const Synset* sb : g.lookup(lb, pos)) {
        int lcs = 0;
        for (const Synset* x : g.ancestors(*sb))
          if (std::find(up_a.begin(), up_a.end(), x) != up_a.end()) lcs = std::max(lcs, g.depth(*x));
        if (lcs == 0) continue;
        best = std::max(best, 2.0 * lcs / (g.depth(*sa) + g.depth(*sb)));
      }
    }
  }
  return std::min(best, 1.0);
}

IdfTable load_idf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFiles("cannot read idf table " + path);
  IdfTable t;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto tab = trimmed.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(path + " line " + std::to_string(line_no) + ": expected lemma<TAB>weight");
    char* end = nullptr;
    const std::string num(trimmed.substr(tab + 1));
    double w = std::strtod(num.c_str(), &end);
    if (*end != '\0' || !(w >= 0.0)) throw ParseError(path + " line " + std::to_string(line_no) + ": bad weight");
    t[to_lower(trimmed.substr(0, tab))] = w;
  }
  return t;
}

std::vector<std::string> content_words(std::string_view text, const TextResources& res) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text, 0, res)) {
    if (t.is_punct()) continue;
    auto w = to_lower(t.surface);
    if (!res.is_stopword(w)) out.push_back(std::move(w));
  }
  return out;
}

namespace {

struct Best {
  std::string word;
  double similarity = 0.0;
};

Best best_match(const std::string& w, const std::vector<std::string>& other, const WordNetGraph& g) {
  Best b;
  for (const auto& o : other) {
    const double s = word_similarity(w, o, g);
    if (b.word.empty() || s > b.similarity) b = {o, s};
  }
  return b;
}

double directional(const std::vector<std::string>& from, const std::vector<std::string>& to, const WordNetGraph& g,
                   const IdfTable* idf) {
  double num = 0.0, den = 0.0;
  for (const auto& w : from) {
    double weight = 1.0;
    if (idf)
      if (auto it = idf->find(w); it != idf->end()) weight = it->second;
    num += best_match(w, to, g).similarity * weight;
    den += weight;
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

double text_similarity(std::string_view answer, std::string_view model, const WordNetGraph& g, const IdfTable* idf) {
  const auto a = content_words(answer), b = content_words(model);
  if (a.empty() || b.empty()) return 0.0;
  const double s = (directional(a, b, g, idf) + directional(b, a, g, idf)) / 2.0;
  return std::clamp(s, 0.0, 1.0);
}

std::string_view grade_name(Grade g) {
  switch (g) {
    case Grade::HIGH: return "HIGH";
    case Grade::MEDIUM: return "MEDIUM";
    case Grade::LOW: return "LOW";
  }
  return "LOW";
}

Grade grade_for(double similarity, const Thresholds& t) {
  if (!(t.medium > 0.0 && t.medium < t.high && t.high <= 1.0))
    throw BadThresholds("need 0 < medium < high <= 1, got medium " + std::to_string(t.medium) + ", high " +
                        std::to_string(t.high));
  if (similarity >= t.high) return Grade::HIGH;
  if (similarity >= t.medium) return Grade::MEDIUM;
  return Grade::LOW;
}

FeedbackGrade grade(std::string_view answer, std::string_view model, const WordNetGraph& g, const Thresholds& t,
                    const IdfTable* idf) {
  FeedbackGrade out;
  out.similarity = text_similarity(answer, model, g, idf);
  out.grade = grade_for(out.similarity, t);
  const auto model_words = content_words(model);
  for (const auto& w : content_words(answer)) {
    auto b = best_match(w, model_words, g);
    out.per_word.push_back({w, b.word, b.similarity});
  }
  return out;
}

}  // namespace lqg
