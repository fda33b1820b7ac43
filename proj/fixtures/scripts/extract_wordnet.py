#!/usr/bin/env python3
# Copyright 2026 The contragen Authors. All Rights Reserved.
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
"""Extracts the mini WNDB lexicon in fixtures/wn from a WordNet 3.0 install.

Every selected (lemma, pos) keeps its full index line. The data files hold
all synsets those index lines reference plus the direct antonym targets of
those synsets. Pointers whose target falls outside that closure are dropped
and p_cnt is rewritten; everything else is byte-for-byte the original line.

usage: extract_wordnet.py <wordnet-3.0 dict dir> <output dir>
"""

import os
import sys

FILES = {'n': 'noun', 'v': 'verb', 'a': 'adj', 'r': 'adv'}

LEMMAS = {
    'n': ['woman', 'man', 'girl', 'boy', 'mother', 'father', 'brother',
          'sister', 'husband', 'wife', 'bank', 'mat', 'outfit', 'table'],
    'a': ['blond', 'brunet', 'young', 'old', 'black', 'white', 'green',
          'tall', 'happy', 'wet', 'dry', 'hot', 'cold', 'clean', 'dirty',
          'fast', 'slow', 'full', 'empty'],
    'v': ['hug', 'smile'],
    'r': ['quickly', 'slowly'],
}


def file_pos(p):
    return 'a' if p == 's' else p


def read_lines(path):
    with open(path, 'rb') as f:
        raw = f.read().decode('utf-8')
    return [l.rstrip('\r') for l in raw.split('\n') if l]


def license_header(src):
    return [l for l in read_lines(os.path.join(src, 'data.noun'))
            if l.startswith('  ')]


def parse_data(line):
    body, sep, gloss = line.partition(' | ')
    t = body.split()
    wc = int(t[3], 16)
    i = 4 + 2 * wc
    pc = int(t[i])
    ptrs = [tuple(t[i + 1 + 4 * k:i + 5 + 4 * k]) for k in range(pc)]
    rest = t[i + 1 + 4 * pc:]
    return t[:i], ptrs, rest, gloss


def main(src, dst):
    index = {}
    data = {}
    for p, name in FILES.items():
        index[p] = {}
        for l in read_lines(os.path.join(src, 'index.' + name)):
            if not l.startswith('  '):
                index[p][l.split()[0]] = l
        data[p] = {}
        for l in read_lines(os.path.join(src, 'data.' + name)):
            if not l.startswith('  '):
                data[p][l.split()[0]] = l

    keep = {p: set() for p in FILES}
    for p, lemmas in LEMMAS.items():
        for lemma in lemmas:
            t = index[p][lemma].split()
            n = int(t[2])
            keep[p].update(t[-n:])
    for p in FILES:
        for off in list(keep[p]):
            _, ptrs, _, _ = parse_data(data[p][off])
            for sym, toff, tpos, _ in ptrs:
                if sym == '!':
                    keep[file_pos(tpos)].add(toff)

    header = license_header(src)
    os.makedirs(dst, exist_ok=True)
    for p, name in FILES.items():
        out = []
        for off in sorted(keep[p]):
            head, ptrs, rest, gloss = parse_data(data[p][off])
            kept = [q for q in ptrs if q[1] in keep[file_pos(q[2])]]
            fields = head + ['%03d' % len(kept)]
            for q in kept:
                fields.extend(q)
            fields.extend(rest)
            out.append(' '.join(fields) + ' | ' + gloss.rstrip() + '  ')
        with open(os.path.join(dst, 'data.' + name), 'w') as f:
            f.write('\n'.join(header + out) + '\n')
        lines = [index[p][l] for l in sorted(LEMMAS[p])]
        with open(os.path.join(dst, 'index.' + name), 'w') as f:
            f.write('\n'.join(header + lines) + '\n')


if __name__ == '__main__':
    main(sys.argv[1], sys.argv[2])
