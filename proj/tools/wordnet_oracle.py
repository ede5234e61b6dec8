#!/usr/bin/env python3
# Copyright 2026 The lectureqg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Freezes expected word and text similarities for the miniature WordNet into
tests/fixtures/wordnet/oracle.tsv.

Independent of the C++ loader: the hypernym graph comes from the generator's
tables and networkx does the path work; NLTK's Porter stemmer supplies the
equal-stem shortcut. Run from the repo root:

    python3 tools/wordnet_oracle.py > tests/fixtures/wordnet/oracle.tsv
"""
import random
import sys
from pathlib import Path

import networkx as nx
from nltk.stem.porter import PorterStemmer

sys.path.insert(0, str(Path(__file__).resolve().parent))
from make_wordnet import NOUNS, VERBS  # noqa: E402

STEM = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM).stem
STOPWORDS = set(Path("data/stopwords.txt").read_text().split())


def build(table):
    g = nx.DiGraph()  # child -> hypernym
    for key, (_, hypers, _) in table.items():
        g.add_node(key)
        for h in hypers:
            g.add_edge(key, h)
    depth = {}
    for node in reversed(list(nx.topological_sort(g))):
        depth[node] = 1 + max((depth[h] for h in g.successors(node)), default=0)
    senses = {}
    for key, (lemmas, _, _) in table.items():
        for w in lemmas:
            senses.setdefault(w.lower(), []).append(key)
    return g, depth, senses


GRAPHS = [build(NOUNS), build(VERBS)]
# WordNet's morphy detachment rules, noun table then verb table.
RULES = [
    [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"), ("shes", "sh"), ("men", "man"),
     ("ies", "y")],
    [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"), ("ed", ""), ("ing", "e"), ("ing", "")],
]


def synsets(word, senses, rules):
    if word in senses:
        return senses[word]
    out = []
    for suffix, ending in rules:
        if word.endswith(suffix) and len(word) > len(suffix):
            for s in senses.get(word[: -len(suffix)] + ending, []):
                if s not in out:
                    out.append(s)
    return out


def wup(a, b):
    if a == b or STEM(a) == STEM(b):
        return 1.0
    best = 0.0
    for (g, depth, senses), rules in zip(GRAPHS, RULES):
        for sa in synsets(a, senses, rules):
            up_a = nx.descendants(g, sa) | {sa}
            for sb in synsets(b, senses, rules):
                common = up_a & (nx.descendants(g, sb) | {sb})
                if common:
                    lcs = max(depth[c] for c in common)
                    best = max(best, 2.0 * lcs / (depth[sa] + depth[sb]))
    return best


def text_sim(x, y):
    a = [w for w in x.lower().split() if w not in STOPWORDS]
    b = [w for w in y.lower().split() if w not in STOPWORDS]
    if not a or not b:
        return 0.0

    def direction(p, q):
        return sum(max(wup(w, v) for v in q) for w in p) / len(p)

    return (direction(a, b) + direction(b, a)) / 2.0


def main():
    lemmas = sorted({w.lower() for t in (NOUNS, VERBS) for ls, _, _ in t.values() for w in ls})
    rng = random.Random(7)
    pairs = [("loss", "loss"), ("car", "automobile"), ("car", "banana"), ("value", "cost"),
             ("value", "function"), ("car", "truck"), ("car", "bicycle"), ("minimize", "reduce"),
             ("compute", "calculate"), ("train", "teach"), ("radium", "iron"), ("chemist", "physicist"),
             ("equation", "graph"), ("study", "discover"), ("minimize", "maximize"), ("network", "layer")]
    pairs += [(rng.choice(lemmas), rng.choice(lemmas)) for _ in range(400)]
    print("# kind\ta\tb\tsimilarity")
    for a, b in pairs:
        print(f"word\t{a}\t{b}\t{wup(a, b)!r}")
    texts = [("the cost function", "cost function value"), ("radium", "a metal"),
             ("the car", "an automobile"), ("Marie Curie discovered radium", "a chemist found a metal"),
             ("banana", "the network"), ("minimize the loss", "reduce the cost"),
             ("the weights are updated", "updating weights"), ("trained models", "teaching a model")]
    for _ in range(60):
        texts.append((" ".join(rng.sample(lemmas, rng.randint(1, 4))),
                      " ".join(rng.sample(lemmas, rng.randint(1, 4)))))
    for a, b in texts:
        print(f"text\t{a}\t{b}\t{text_sim(a, b)!r}")


if __name__ == "__main__":
    main()
