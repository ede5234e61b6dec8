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

#pragma once

// Synthetic two-topic lectures: a cooking passage followed by a networking
// passage with disjoint vocabularies.

#include <random>
#include <string>
#include <vector>

#include "lqg/transcript.hpp"

namespace lqg::testing {

inline const std::vector<std::string>& cooking_words() {
  static const std::vector<std::string> w = {
      "onion",   "garlic",  "butter",   "flour",    "oven",    "saucepan", "simmer",   "whisk",
      "pepper",  "salt",    "tomato",   "basil",    "dough",   "knead",    "bake",     "roast",
      "skillet", "broth",   "carrot",   "celery",   "vinegar", "lemon",    "sugar",    "cream",
      "cheese",  "parsley", "thyme",    "oregano",  "chop",    "dice",     "saute",    "marinade",
      "grill",   "potato",  "rice",     "noodle",   "spinach", "mushroom", "ginger",   "cinnamon",
      "honey",   "yeast",   "crust",    "pastry",   "batter",  "spatula",  "ladle",    "casserole",
      "stew",    "soup",    "salad",    "dessert",  "chicken", "beef",     "pork",     "shrimp",
      "zest",    "nutmeg",  "paprika",  "cumin"};
  return w;
}

inline const std::vector<std::string>& networking_words() {
  static const std::vector<std::string> w = {
      "router",   "packet",    "switch",  "protocol", "ethernet", "bandwidth", "latency",  "socket",
      "firewall", "gateway",   "subnet",  "address",  "header",   "payload",   "checksum", "frame",
      "cable",    "wireless",  "antenna", "modem",    "server",   "client",    "port",     "handshake",
      "timeout",  "congestion", "queue",  "buffer",   "throughput", "hop",     "topology", "mesh",
      "link",     "broadcast", "multicast", "unicast", "tunnel",  "encryption", "certificate", "domain",
      "resolver", "cache",     "proxy",   "session",  "transport", "datagram", "segment",  "window",
      "acknowledgment", "retransmit", "jitter", "fiber", "optical", "hub",      "bridge",   "vlan",
      "dns",      "tcp",       "udp",     "ipv6"};
  return w;
}

struct TwoTopicDoc {
  TranscriptDocument doc;
  int words_a = 0;  // every generated word is a content word
};

/// Cues of `per_cue` words, 3 s each with 500 ms gaps; topic A has na words, topic B nb.
inline TwoTopicDoc make_two_topic(std::uint64_t seed, int na, int nb, int per_cue = 8) {
  std::mt19937_64 rng(seed);
  const auto& a = cooking_words();
  const auto& b = networking_words();
  std::vector<std::string> words;
  for (int i = 0; i < na; ++i) words.push_back(a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)]);
  for (int i = 0; i < nb; ++i) words.push_back(b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)]);
  TwoTopicDoc out;
  out.doc.source_id = "two-topic";
  out.words_a = na;
  Millis t = 0;
  for (std::size_t i = 0; i < words.size(); i += per_cue) {
    Cue c;
    c.index = static_cast<int>(out.doc.cues.size()) + 1;
    c.start_ms = t;
    c.end_ms = t + 3000;
    for (std::size_t j = i; j < std::min(words.size(), i + per_cue); ++j) c.text += (j > i ? " " : "") + words[j];
    out.doc.cues.push_back(c);
    t += 3500;
  }
  return out;
}

}  // namespace lqg::testing
