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

"""Renders tests/fixtures/lecture/lecture.txt as a timed SRT file.

One cue per sentence (split in two above 12 words), 2.2 words per second,
at least 1.5 s per cue, 250 ms between cues and 1.5 s between paragraphs.

usage: make_lecture.py lecture.txt lecture.srt
"""
import re
import sys


def fmt(ms):
    return "%02d:%02d:%02d,%03d" % (ms // 3600000, ms // 60000 % 60, ms // 1000 % 60, ms % 1000)


def main(src, dst):
    text = open(src).read().strip()
    topics = [p.replace("\n", " ") for p in text.split("\n\n")]
    cues = []
    t = 0
    for p in topics:
        for s in re.split(r"(?<=[.!?])\s+", p):
            words = s.split()
            chunks = [words] if len(words) <= 12 else [words[: len(words) // 2], words[len(words) // 2 :]]
            for c in chunks:
                d = max(1500, int(len(c) / 2.2 * 1000))
                cues.append((t, t + d, " ".join(c)))
                t += d + 250
        t += 1500
    with open(dst, "w") as f:
        for i, (a, b, s) in enumerate(cues, 1):
            f.write(f"{i}\n{fmt(a)} --> {fmt(b)}\n{s}\n\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
