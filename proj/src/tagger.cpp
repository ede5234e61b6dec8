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

#include "lqg/text.hpp"
#include "strutil.hpp"

namespace lqg {

using detail::to_lower;

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_be_form(std::string_view lower) {
  return lower == "am" || lower == "is" || lower == "are" || lower == "was" || lower == "were" ||
         lower == "be" || lower == "been" || lower == "being";
}

bool is_have_form(std::string_view lower) {
  return lower == "have" || lower == "has" || lower == "had";
}

bool is_do_form(std::string_view lower) { return lower == "do" || lower == "does" || lower == "did"; }

bool has_tag(const std::vector<Tag>& tags, Tag t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

Tag first_matching(const std::vector<Tag>& tags, bool (*pred)(Tag)) {
  for (Tag t : tags)
    if (pred(t)) return t;
  return Tag::OTHER;
}

bool noun_pred(Tag t) { return is_noun(t); }
bool verb_pred(Tag t) { return is_verb(t) && t != Tag::AUX; }

// Could the word be a past participle? Used to decide whether have is auxiliary.
bool participle_like(std::string_view lower, const TextResources& res) {
  if (const auto* tags = res.lexicon(lower))
    return has_tag(*tags, Tag::VBN) || has_tag(*tags, Tag::VBD);
  return ends_with(lower, "ed") || ends_with(lower, "en");
}

struct Context {
  Tag prev = Tag::OTHER;
  std::string prev_lower;
  bool has_prev = false;
  bool seen_finite = false;
};

Tag choose_among(const std::vector<Tag>& tags, const Context& ctx) {
  Tag dflt = tags.front();
  Tag noun = first_matching(tags, noun_pred);
  Tag verb = first_matching(tags, verb_pred);
  if (noun == Tag::OTHER || verb == Tag::OTHER || !ctx.has_prev) return dflt;
  Tag p = ctx.prev;
  if (p == Tag::DT || p == Tag::JJ || p == Tag::CD || (p == Tag::IN && ctx.prev_lower != "to"))
    return noun;
  if (p == Tag::PRP || p == Tag::MD || ctx.prev_lower == "to") return verb;
  if (is_noun(p) && !ctx.seen_finite) {
    // Only a verb form that agrees with the preceding noun reads as the predicate.
    if (verb == Tag::VBZ && (p == Tag::NN || p == Tag::NNP)) return Tag::VBZ;
    if (verb == Tag::VB && p == Tag::NNS) return Tag::VBP;
    if (verb == Tag::VBD) return Tag::VBD;
    return noun;
  }
  return dflt;
}

Tag unknown_word_tag(const Token& tok, std::string_view lower, bool initial, const Context& ctx) {
  if (detail::starts_with_upper(tok.surface) && !initial) return Tag::NNP;
  if (detail::has_digit(tok.surface)) return Tag::CD;
  if (lower.size() > 4 && ends_with(lower, "ing")) return Tag::VBG;
  if (lower.size() > 3 && ends_with(lower, "ed")) return Tag::VBD;
  if (lower.size() > 3 && ends_with(lower, "ly")) return Tag::RB;
  if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "ive")) return Tag::JJ;
  if (lower.size() > 3 && ends_with(lower, "s") && !ends_with(lower, "ss")) {
    bool subject_before = ctx.has_prev && (ctx.prev == Tag::NN || ctx.prev == Tag::NNP ||
                                           ctx.prev == Tag::PRP);
    return subject_before && !ctx.seen_finite ? Tag::VBZ : Tag::NNS;
  }
  return Tag::NN;
}

}  // namespace

void pos_tag(std::vector<Token>& tokens, const TextResources& res, bool sentence_initial) {
  Context ctx;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto& tok = tokens[i];
    const std::string lower = to_lower(tok.surface);
    const bool initial = i == 0 && sentence_initial;
    const bool capitalized = detail::starts_with_upper(tok.surface);

    Tag tag;
    if (tok.is_punct()) {
      tag = Tag::OTHER;
    } else if (capitalized && (res.is_given_name(tok.surface) || res.is_location(tok.surface) ||
                               res.is_honorific(tok.surface))) {
      tag = Tag::NNP;
    } else if (const auto* tags = res.lexicon(lower)) {
      if (is_have_form(lower)) {
        std::size_t k = i + 1;
        while (k < tokens.size()) {
          const auto* next = res.lexicon(to_lower(tokens[k].surface));
          if (!next || next->front() != Tag::RB) break;
          ++k;
        }
        bool aux = k < tokens.size() && participle_like(to_lower(tokens[k].surface), res);
        tag = aux ? Tag::AUX : tags->front();
      } else if (tags->size() > 1) {
        tag = choose_among(*tags, ctx);
      } else {
        tag = tags->front();
      }
    } else {
      tag = unknown_word_tag(tok, lower, initial, ctx);
    }

    // Participles and adjectival -ed forms.
    if (tag == Tag::VBD) {
      std::size_t k = i;
      while (k > 0 && tokens[k - 1].pos == Tag::RB) --k;
      if (k > 0) {
        auto before = to_lower(tokens[k - 1].surface);
        if ((tokens[k - 1].pos == Tag::AUX || tokens[k - 1].pos == Tag::VB ||
             tokens[k - 1].pos == Tag::VBN || tokens[k - 1].pos == Tag::VBG) &&
            (is_be_form(before) || is_have_form(before))) {
          tag = Tag::VBN;
        } else if (tokens[k - 1].pos == Tag::DT) {
          tag = Tag::JJ;
        }
      }
    }
    // Base forms: VB after a modal, "to" or do-support; VBP as a plural/pronoun predicate.
    if (tag == Tag::VB && ctx.has_prev) {
      bool infinitival = ctx.prev == Tag::MD || ctx.prev_lower == "to" || is_do_form(ctx.prev_lower);
      if (!infinitival && !ctx.seen_finite && (ctx.prev == Tag::PRP || ctx.prev == Tag::NNS)) {
        tag = Tag::VBP;
      }
    }

    tok.pos = tag;
    if (!tok.is_punct()) {
      ctx.prev = tag;
      ctx.prev_lower = lower;
      ctx.has_prev = true;
    }
    if (is_finite_verb(tag)) ctx.seen_finite = true;
  }
}

std::string verb_base_form(std::string_view verb, const TextResources& res) {
  const std::string lower = to_lower(verb);
  if (auto base = res.irregular_base(lower)) return *base;
  if (res.is_known_verb_base(lower)) return lower;
  auto known = [&](const std::string& s) { return res.is_known_verb_base(s); };
  auto stem_of = [&](std::string_view suffix) { return lower.substr(0, lower.size() - suffix.size()); };

  if (ends_with(lower, "ies") || ends_with(lower, "ied")) return stem_of("ies") + "y";
  if (ends_with(lower, "es")) {
    auto drop_s = stem_of("s");
    if (known(drop_s)) return drop_s;
    auto drop_es = stem_of("es");
    if (known(drop_es)) return drop_es;
    for (std::string_view sib : {"ss", "sh", "ch", "x", "zz", "o"})
      if (ends_with(drop_es, sib)) return drop_es;
    return drop_s;
  }
  if (ends_with(lower, "s") && !ends_with(lower, "ss")) return stem_of("s");
  for (std::string_view suffix : {"ed", "ing"}) {
    if (!ends_with(lower, suffix) || lower.size() <= suffix.size() + 1) continue;
    auto stem = stem_of(suffix);
    if (known(stem + "e")) return stem + "e";
    if (known(stem)) return stem;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      auto single = stem.substr(0, stem.size() - 1);
      if (known(single)) return single;
    }
    // Unknown verb: restore a silent e after typical endings.
    for (std::string_view tail : {"at", "iz", "ut", "ur", "v", "c", "g", "dg", "ag"})
      if (ends_with(stem, tail)) return stem + "e";
    return stem;
  }
  return lower;
}

}  // namespace lqg
