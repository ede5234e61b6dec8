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

"""Writes the miniature WordNet in data/wordnet/ (data.noun, index.noun,
data.verb, index.verb) in the WordNet 3.x flat-file layout.

Offsets are the byte position of each data line, as in the real database.
Run from the repo root:

    python3 tools/make_wordnet.py data/wordnet
"""
import sys
from pathlib import Path

# key: (lemmas, hypernym keys, gloss). The first lemma names the synset.
NOUNS = {
    "entity": (["entity"], [], "that which exists"),
    "physical_entity": (["physical_entity"], ["entity"], "an entity that has physical existence"),
    "abstraction": (["abstraction"], ["entity"], "a general concept"),
    "object": (["object", "physical_object"], ["physical_entity"], "a tangible thing"),
    "matter": (["matter", "substance"], ["physical_entity"], "that which has mass"),
    "whole": (["whole", "unit"], ["object"], "an assemblage of parts regarded as one"),
    "artifact": (["artifact", "artefact"], ["whole"], "a man-made object"),
    "instrumentality": (["instrumentality", "instrumentation"], ["artifact"], "an artifact used to an end"),
    "conveyance": (["conveyance", "transport"], ["instrumentality"], "something that carries"),
    "vehicle": (["vehicle"], ["conveyance"], "a conveyance that transports"),
    "wheeled_vehicle": (["wheeled_vehicle"], ["vehicle"], "a vehicle that moves on wheels"),
    "motor_vehicle": (["motor_vehicle", "automotive_vehicle"], ["wheeled_vehicle"], "a self-propelled vehicle"),
    "car": (["car", "auto", "automobile", "motorcar"], ["motor_vehicle"], "a motor vehicle with four wheels"),
    "truck": (["truck", "motortruck"], ["motor_vehicle"], "a vehicle for carrying loads"),
    "bicycle": (["bicycle", "bike", "cycle"], ["wheeled_vehicle"], "a pedal-driven wheeled vehicle"),
    "system": (["system"], ["instrumentality"], "instrumentality combining parts"),
    "network": (["network", "net", "web"], ["system"], "an interconnected system"),
    "layer": (["layer"], ["artifact"], "a single thickness lying over another"),
    "model": (["model", "representation"], ["artifact"], "a representation of something"),
    "living_thing": (["living_thing", "animate_thing"], ["whole"], "a living entity"),
    "organism": (["organism", "being"], ["living_thing"], "a living thing that can act"),
    "person": (["person", "individual", "someone"], ["organism"], "a human being"),
    "scientist": (["scientist"], ["person"], "a person with advanced knowledge of a science"),
    "chemist": (["chemist"], ["scientist"], "a scientist specializing in chemistry"),
    "physicist": (["physicist"], ["scientist"], "a scientist trained in physics"),
    "element": (["element", "chemical_element"], ["matter"], "a substance of one kind of atom"),
    "metal": (["metal", "metallic_element"], ["element"], "an element that conducts"),
    "radium": (["radium", "ra"], ["metal"], "an intensely radioactive metallic element"),
    "iron": (["iron", "fe"], ["metal"], "a heavy ductile metallic element"),
    "measure": (["measure", "quantity", "amount"], ["abstraction"], "how much there is of something"),
    "value": (["value"], ["measure"], "a numerical quantity measured or assigned"),
    "cost": (["cost", "price", "terms"], ["value"], "value measured by what must be given"),
    "loss": (["loss"], ["measure"], "the amount by which something is diminished"),
    "number": (["number"], ["measure"], "the property of a countable quantity"),
    "relation": (["relation"], ["abstraction"], "an abstraction belonging to two or more things"),
    "function": (["function", "mathematical_function"], ["relation"], "a mathematical relation"),
    "communication": (["communication"], ["abstraction"], "something that is communicated"),
    "statement": (["statement"], ["communication"], "a message stating something"),
    "equation": (["equation"], ["statement"], "a statement that two expressions are equal"),
    "graph": (["graph", "graphical_record"], ["communication"], "a visual representation of relations"),
    # A separate tree: shares no hypernym with anything above.
    "food": (["food", "solid_food"], [], "any solid substance used as food"),
    "produce": (["produce", "green_goods"], ["food"], "fresh fruits and vegetables"),
    "edible_fruit": (["edible_fruit"], ["produce"], "edible reproductive body of a plant"),
    "banana": (["banana"], ["edible_fruit"], "elongated crescent-shaped yellow fruit"),
    "apple": (["apple"], ["edible_fruit"], "fruit with red or yellow or green skin"),
}

VERBS = {
    "change": (["change", "alter", "modify"], [], "cause to change"),
    "decrease": (["decrease", "diminish", "lessen", "reduce"], ["change"], "make smaller"),
    "minimize": (["minimize", "minimise"], ["decrease"], "make small or insignificant"),
    "increase": (["increase"], ["change"], "make bigger or more"),
    "maximize": (["maximize", "maximise"], ["increase"], "make as big as possible"),
    "update": (["update"], ["change"], "bring up to date"),
    "think": (["think", "cogitate"], [], "use mental powers"),
    "calculate": (["calculate", "compute", "figure", "reckon"], ["think"], "make a mathematical calculation"),
    "estimate": (["estimate", "approximate"], ["calculate"], "judge tentatively"),
    "learn": (["learn", "acquire"], [], "gain knowledge or skills"),
    "study": (["study", "read"], ["learn"], "be a student of a subject"),
    "discover": (["discover", "find"], ["learn"], "make a discovery"),
    "teach": (["teach", "instruct"], [], "impart skills or knowledge"),
    "train": (["train", "educate", "prepare"], ["teach"], "create by training and teaching"),
}

HEADER = [
    "  1 Miniature WordNet-format database for tests and offline grading.",
    "  2 Layout follows the WordNet 3.x wndb(5WN) file format.",
]

LEX_FILE = {"n": 3, "v": 29}


def data_lines(table, pos):
    keys = list(table)
    base = sum(len(h) + 1 for h in HEADER)

    def render(key, offsets):
        lemmas, hypers, gloss = table[key]
        words = " ".join(f"{w} 0" for w in lemmas)
        ptrs = " ".join(f"@ {offsets[h]:08d} {pos} 0000" for h in hypers)
        body = f"{LEX_FILE[pos]:02d} {pos} {len(lemmas):02x} {words} {len(hypers):03d}"
        if ptrs:
            body += " " + ptrs
        if pos == "v":
            body += " 01 + 02 00"
        return f"{offsets[key]:08d} {body} | {gloss}  "

    # Offsets are fixed-width, so line lengths do not depend on their values.
    zero = {k: 0 for k in keys}
    offsets, pos_now = {}, base
    for k in keys:
        offsets[k] = pos_now
        pos_now += len(render(k, zero).encode()) + 1
    return [render(k, offsets) for k in keys], offsets


def index_lines(table, pos, offsets):
    senses = {}
    for key, (lemmas, hypers, _) in table.items():
        for w in lemmas:
            senses.setdefault(w.lower(), []).append((key, bool(hypers)))
    out = []
    for lemma in sorted(senses):
        keys = [k for k, _ in senses[lemma]]
        ptr = ["@"] if any(h for _, h in senses[lemma]) else []
        fields = [lemma, pos, str(len(keys)), str(len(ptr)), *ptr, str(len(keys)), "0"]
        fields += [f"{offsets[k]:08d}" for k in keys]
        out.append(" ".join(fields) + " ")
    return out


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/wordnet")
    out.mkdir(parents=True, exist_ok=True)
    for table, pos, name in ((NOUNS, "n", "noun"), (VERBS, "v", "verb")):
        lines, offsets = data_lines(table, pos)
        (out / f"data.{name}").write_text("\n".join(HEADER + lines) + "\n")
        (out / f"index.{name}").write_text("\n".join(HEADER + index_lines(table, pos, offsets)) + "\n")


if __name__ == "__main__":
    main()
