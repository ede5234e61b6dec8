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

#include "lqg/qgen.hpp"

#include <algorithm>
#include <set>

#include "lqg/error.hpp"
#include "strutil.hpp"

namespace lqg {

using detail::to_lower;

namespace {

std::size_t content_end(const std::vector<Token>& tokens) {
  std::size_t end = tokens.size();
  while (end > 0 && tokens[end - 1].is_punct() && tokens[end - 1].surface != ")" && tokens[end - 1].surface != "\"")
    --end;
  return end;
}

// The main clause as the rule table sees it.
struct Clause {
  std::size_t verb = 0;             // first finite verb
  std::size_t group_end = 0;        // one past the verb group
  std::size_t subject_begin = 0;
  std::size_t prefix_end = 0;       // tokens [0, prefix_end) are a fronted phrase plus its comma
  bool prefix_is_pp = false;
  std::size_t end = 0;              // one past the last non-terminal token
};

Clause find_clause(const std::vector<Token>& tokens) {
  Clause c;
  auto v = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) { return is_finite_verb(t.pos); });
  if (v == tokens.end()) throw UnsupportedStructure("no finite verb");
  c.verb = static_cast<std::size_t>(v - tokens.begin());
  c.end = content_end(tokens);

  std::size_t comma = c.verb;
  for (std::size_t i = 0; i < c.verb; ++i)
    if (tokens[i].surface == ",") comma = i;
  if (comma < c.verb) {
    // A fronted phrase: a preposition phrase, an adverb, or a single word.
    bool pp = tokens[0].pos == Tag::IN;
    if (!(pp || tokens[0].pos == Tag::RB || comma == 1)) throw UnsupportedStructure("comma inside the subject");
    c.prefix_end = comma + 1;
    c.prefix_is_pp = pp;
    c.subject_begin = comma + 1;
  }
  if (c.subject_begin >= c.verb) throw UnsupportedStructure("no subject before the verb");
  for (std::size_t i = c.subject_begin; i < c.verb; ++i)
    if (tokens[i].is_punct()) throw UnsupportedStructure("punctuation inside the subject");

  std::size_t j = c.verb + 1;
  if (tokens[c.verb].pos == Tag::AUX || tokens[c.verb].pos == Tag::MD) {
    while (j < c.end && (tokens[j].pos == Tag::RB || tokens[j].pos == Tag::VB || tokens[j].pos == Tag::VBN ||
                         tokens[j].pos == Tag::VBG || tokens[j].pos == Tag::AUX))
      ++j;
  }
  c.group_end = j;
  return c;
}

bool auxiliary_head(const Token& t) { return t.pos == Tag::AUX || t.pos == Tag::MD; }

std::string do_form(Tag verb) {
  switch (verb) {
    case Tag::VBD: return "did";
    case Tag::VBZ: return "does";
    default: return "do";
  }
}

bool keeps_case(const Token& t) {
  if (t.pos == Tag::NNP || t.surface == "I") return true;
  int upper = 0;
  for (char ch : t.surface) upper += detail::is_upper(ch);
  return upper > 1;  // acronyms
}

std::string lowered_initial(const Token& t) {
  if (keeps_case(t) || t.surface.empty()) return t.surface;
  std::string s = t.surface;
  s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

std::string text_between(const Sentence& s, const Token& first, const Token& last) {
  return s.text.substr(first.span.begin - s.span.begin, last.span.end - first.span.begin);
}

// Extends an NP with a following "of" phrase: "the shape of the curve".
std::size_t absorb_of_phrase(const std::vector<Token>& tokens, std::size_t last, std::size_t end) {
  std::size_t i = last + 1;
  if (i >= end || to_lower(tokens[i].surface) != "of") return last;
  std::size_t j = i + 1;
  if (j < end && tokens[j].pos == Tag::DT) ++j;
  while (j < end && tokens[j].pos == Tag::JJ) ++j;
  std::size_t k = j;
  while (k < end && (is_noun(tokens[k].pos) || tokens[k].pos == Tag::CD)) ++k;
  return k > j ? k - 1 : last;
}

}  // namespace

bool is_eligible(const Sentence& s) {
  const auto& t = s.tokens;
  if (t.size() < 5 || t.size() > 40) return false;
  if (t.back().surface == "?" || (!s.text.empty() && s.text.back() == '?')) return false;
  return std::any_of(t.begin(), t.end(), [](const Token& x) { return is_finite_verb(x.pos); });
}

std::vector<Sentence> eligible_sentences(const std::vector<Sentence>& sentences) {
  std::vector<Sentence> out;
  for (const auto& s : sentences)
    if (is_eligible(s)) out.push_back(s);
  return out;
}

bool has_vague_subject(const Sentence& s) {
  try {
    Clause c = find_clause(s.tokens);
    return s.tokens[c.subject_begin].pos == Tag::PRP;
  } catch (const UnsupportedStructure&) {
    return false;
  }
}

WhWord wh_word_for(const std::vector<Token>& tokens, const EntitySpan& e) {
  switch (e.kind) {
    case EntityKind::PERSON: return WhWord::Who;
    case EntityKind::DATE: return WhWord::When;
    case EntityKind::LOCATION: return WhWord::Where;
    case EntityKind::NUMBER:
      if (e.last + 1 < tokens.size() &&
          (tokens[e.last + 1].pos == Tag::NN || tokens[e.last + 1].pos == Tag::NNS))
        return WhWord::HowMany;
      return WhWord::What;
    case EntityKind::NP_OTHER: return WhWord::What;
  }
  return WhWord::What;
}

AnswerPhrase classify_phrase(const Sentence& s, const EntitySpan& e) {
  const auto& t = s.tokens;
  if (e.last >= t.size() || e.first > e.last) throw std::out_of_range("entity outside sentence");
  const Clause c = find_clause(t);

  AnswerPhrase a;
  a.entity = e;
  a.wh = wh_word_for(t, e);
  a.question_phrase = std::string(wh_name(a.wh));
  std::size_t first = e.first, last = e.last;
  if (a.wh == WhWord::HowMany) {
    // "three layers": the counted nouns stay in the question.
    std::size_t k = e.last + 1;
    while (k < c.end && (t[k].pos == Tag::NN || t[k].pos == Tag::NNS)) {
      a.question_phrase += " " + to_lower(t[k].surface);
      last = k++;
    }
  }
  const bool locative = a.wh == WhWord::When || a.wh == WhWord::Where;

  if (first < c.prefix_end) {
    // Inside the fronted phrase: only "In 1898," style adjuncts.
    if (!(c.prefix_is_pp && first == 1 && last + 2 == c.prefix_end && locative))
      throw UnsupportedStructure("phrase inside a fronted phrase");
    a.role = Role::ADJUNCT;
    a.remove_first = 0;
    a.remove_last = c.prefix_end - 1;  // with the comma
    a.surface = text_between(s, t[0], t[last]);
    return a;
  }
  if (first < c.verb) {
    if (first != c.subject_begin || last + 1 != c.verb) throw UnsupportedStructure("phrase is part of the subject");
    a.role = Role::SUBJECT;
  } else if (first < c.group_end) {
    throw UnsupportedStructure("phrase overlaps the verb");
  } else if (first == c.group_end) {
    a.role = Role::OBJECT;
    if (a.wh == WhWord::What) last = absorb_of_phrase(t, last, c.end);
  } else if (t[first - 1].pos == Tag::IN) {
    if (!locative) throw UnsupportedStructure("non-temporal, non-locative adjunct");
    a.role = Role::ADJUNCT;
    first -= 1;  // the preposition goes with the phrase
  } else {
    throw UnsupportedStructure("phrase is not an argument of the main verb");
  }
  a.remove_first = first;
  a.remove_last = last;
  const std::size_t answer_last = a.wh == WhWord::HowMany ? e.last : last;
  a.surface = text_between(s, t[first], t[answer_last]);
  return a;
}

QuestionCandidate transform(const Sentence& s, const EntitySpan& e, const TextResources& res) {
  const auto& t = s.tokens;
  const AnswerPhrase a = classify_phrase(s, e);
  const Clause c = find_clause(t);

  std::vector<std::string> words;
  int nnp = 0;
  auto removed = [&](std::size_t i) { return i >= a.remove_first && i <= a.remove_last; };
  auto emit = [&](std::size_t i) {
    if (removed(i)) return;
    words.push_back(i == 0 ? lowered_initial(t[i]) : t[i].surface);
    if (t[i].pos == Tag::NNP) ++nnp;
  };

  // A fronted phrase that is not the answer stays in front of the question.
  const bool keep_prefix = c.prefix_end > 0 && !removed(0);
  if (keep_prefix) {
    for (std::size_t i = 0; i < c.prefix_end; ++i) {
      words.push_back(t[i].surface);
      if (t[i].pos == Tag::NNP) ++nnp;
    }
  }
  std::string phrase = a.question_phrase;
  if (keep_prefix) phrase[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(phrase[0])));
  words.push_back(phrase);

  if (a.role == Role::SUBJECT) {
    for (std::size_t i = c.verb; i < c.end; ++i) emit(i);
  } else if (auxiliary_head(t[c.verb])) {
    words.push_back(to_lower(t[c.verb].surface));
    for (std::size_t i = c.subject_begin; i < c.verb; ++i) emit(i);
    for (std::size_t i = c.verb + 1; i < c.end; ++i) emit(i);
  } else {
    words.push_back(do_form(t[c.verb].pos));
    for (std::size_t i = c.subject_begin; i < c.verb; ++i) emit(i);
    words.push_back(verb_base_form(t[c.verb].surface, res));
    for (std::size_t i = c.verb + 1; i < c.end; ++i) emit(i);
  }

  std::string raw;
  for (const auto& w : words) raw += (raw.empty() ? "" : " ") + w;

  QuestionCandidate q;
  q.question_text = postprocess(raw);
  q.wh = a.wh;
  q.role = a.role;
  q.answer_kind = e.kind;
  q.model_answer = a.surface;
  q.source_sentence = s.span;
  q.vague_pronoun = t[c.subject_begin].pos == Tag::PRP;
  q.proper_noun_count = nnp;
  for (const auto& tok : tokenize(q.question_text, 0, res)) q.token_count += tok.is_punct() ? 0 : 1;
  return q;
}

std::string postprocess(std::string_view raw) {
  static const std::set<std::string, std::less<>> head = {
      "what", "who", "when", "where", "how", "do", "does", "did", "is", "are", "was", "were", "am",
      "can", "could", "will", "would", "shall", "should", "may", "might", "must", "has", "have", "had"};

  std::vector<std::string> words;
  for (auto& w : detail::split_ws(raw)) words.push_back(w);

  // Stranded commas: leading, doubled, trailing, or right after the question head.
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] == ",") {
      bool dangling = kept.empty() || kept.back() == "," || i + 1 == words.size() ||
                      (i + 1 < words.size() && detail::is_terminal_punct(words[i + 1]));
      if (dangling) continue;
    }
    kept.push_back(words[i]);
  }
  std::size_t i = 0;
  while (i < kept.size() && head.count(to_lower(kept[i]))) i += to_lower(kept[i]) == "how" ? 3 : 1;
  if (i > 0 && i < kept.size() && kept[i] == ",") kept.erase(kept.begin() + static_cast<long>(i));

  std::string out;
  for (const auto& w : kept) {
    bool attach = !out.empty() && (w == "," || w == "." || w == ";" || w == ":" || w == "?" || w == "!" ||
                                   w == ")" || out.back() == '(');
    if (!out.empty() && !attach) out += ' ';
    out += w;
  }
  while (!out.empty() && (std::string_view(".?!;:, ").find(out.back()) != std::string_view::npos)) out.pop_back();
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out + "?";
}

std::vector<QuestionCandidate> generate(const Segment& segment, const std::vector<Sentence>& sentences,
                                        const TimedText& tt, SegmentReport* report, const TextResources& res) {
  SegmentReport local;
  local.segment_id = segment.segment_id;
  std::vector<QuestionCandidate> out;
  for (const auto& s : sentences) {
    if (s.tokens.empty()) continue;
    int first_cue = cue_for_offset(tt, s.span.begin);
    if (first_cue < segment.first_cue || first_cue > segment.last_cue) continue;
    ++local.sentences;
    if (!is_eligible(s)) continue;
    ++local.eligible;
    int last_cue = cue_for_offset(tt, s.span.end - 1);

    const auto entities = detect_entities(s.tokens, res);
    for (std::size_t k = 0; k < entities.size(); ++k) {
      const auto& e = entities[k];
      // The noun after a counted number belongs to its How many phrase.
      if (k > 0 && e.kind == EntityKind::NP_OTHER && entities[k - 1].kind == EntityKind::NUMBER &&
          entities[k - 1].last + 1 == e.first && wh_word_for(s.tokens, entities[k - 1]) == WhWord::HowMany)
        continue;
      try {
        QuestionCandidate q = transform(s, e, res);
        q.first_cue = first_cue;
        q.last_cue = last_cue;
        q.segment_id = segment.segment_id;
        out.push_back(std::move(q));
        ++local.emitted;
      } catch (const UnsupportedStructure&) {
        ++local.skipped;
      }
    }
  }
  if (report) *report = local;
  return out;
}

}  // namespace lqg
