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
"""Writes fixtures/replies.jsonl, the labelled stub-reply corpus.

Each record is {kind, well_formed, text} with kind one of method2,
instance, new_type. 80 records are well formed and 20 are not.

usage: make_reply_corpus.py <output file>
"""

import json
import sys

PAIRS = [
    ('A man is riding a red bicycle down the hill.', 'A man is walking his bicycle up the hill.'),
    ('Two kids are building a sandcastle on the beach.', 'Two kids are sleeping in their beds at home.'),
    ('A woman in a blue dress is singing on stage.', 'A woman in a blue dress is sitting silently in the audience.'),
    ('The chef is slicing onions in a busy kitchen.', 'The chef has never been inside a kitchen.'),
    ('An old man feeds pigeons in the park.', 'A young boy chases pigeons away in the park.'),
    ('A dog catches a frisbee in mid-air.', 'A dog is asleep on the couch.'),
    ('Three musicians play violins on the street corner.', 'Three musicians play drums in a closed studio.'),
    ('A girl reads a book under a large oak tree.', 'A girl refused to read anything under the tree.'),
]
TYPES = ['Structure', 'Lexical', 'World Knowledge', 'Factive (embedding context)']


def method2():
    good, bad = [], []
    for i, (p, h) in enumerate(PAIRS):
        t = TYPES[i % 4]
        good += [
            f"{t} 'P: {p}, H: {h}'",
            f"{t} 'P: [{p}], H: [{h}]'",
            f"{t} ‘P: {p}, H: {h}’",
            f"Sure! Here is one.\n{t} \"P: {p}, H: {h}\"\nThe hypothesis conflicts with the premise.",
        ]
    bad = [
        "I am sorry, but I cannot help with that request.",
        f"P: {PAIRS[0][0]}",
        f"H: {PAIRS[1][1]}, P: {PAIRS[1][0]}",
        f"Structure 'P: {PAIRS[2][0]}, H: '",
        f"Lexical 'P: {PAIRS[3][0]}, H: {PAIRS[3][0]}'",
        f"World Knowledge 'P: , H: {PAIRS[4][1]}'",
        f"Premise: {PAIRS[5][0]} Hypothesis: {PAIRS[5][1]}",
        "",
    ]
    return good, bad


LONG = [
    ('The museum on the hill opened its new wing to visitors on Monday morning',
     'The museum on the hill kept its new wing closed to all visitors on Monday morning'),
    ('Every student in the class passed the final mathematics exam last spring',
     'Several students in the class failed the final mathematics exam last spring'),
    ('The train from the capital arrived exactly on time at the coastal station',
     'The train from the capital arrived three hours late at the coastal station'),
    ('My grandmother has lived in the same small village for her entire life',
     'My grandmother moved away from the small village when she was a child'),
    ('The company reported record profits after launching its new product line',
     'The company reported heavy losses after launching its new product line'),
    ('The bakery on the corner sells fresh bread every single day of the week',
     'The bakery on the corner has not sold any bread for the past month'),
]


def block(rows, fmt):
    return '\n'.join(fmt.format(p=p, h=h, n=k + 1) for k, (p, h) in enumerate(rows))


def instance():
    good = []
    fmts = [
        "Premise: {p}, Hypothesis: {h}.",
        "Premise: [{p}], Hypothesis: [{h}]",
        "'Premise: {p}, Hypothesis: {h}.'",
        "{n}. Premise: {p}, Hypothesis: {h}.",
        "Premise: {p}, Hypothesis: {h}.\n",
        "premise: {p}; hypothesis: {h}.",
    ]
    for i in range(24):
        rows = [LONG[(i + k) % len(LONG)] for k in range(1 + i % 5)]
        good.append(block(rows, fmts[i % len(fmts)]))
    bad = [
        "Here are five contradictions for you:\n" + block(LONG[:2], fmts[0]),
        block(LONG[:2], fmts[0]) + "\nPremise: The lake froze completely during the cold winter night.",
        block(LONG[:1], fmts[0]) + "\nThese examples show lexical contradictions.",
        "Premise: The old lighthouse still guides ships along the rocky coast, Hypothesis: No.",
        f"Premise: {LONG[2][0]}, Hypothesis: {LONG[2][0]}.",
        "I cannot generate contradictions of this kind.",
    ]
    return good, bad


NEW = [
    ('Temporal', 'Two statements describe the same event as happening at incompatible times.'),
    ('Spatial', 'The statements locate one object in two places that exclude each other.'),
    ('Causal', 'One statement gives a cause for an outcome that the other denies.'),
    ('Modal', 'Something necessary in one statement is impossible in the other.'),
    ('Comparative', 'Two entities are ordered in opposite directions on the same scale.'),
    ('Quantifier', 'A claim about all members clashes with a claim about some member.'),
]


def new_type():
    fmts = [
        "Contradiction type name: {n}, Contradiction type description: {d}",
        "Contradiction type name: [{n}], Contradiction type description: [{d}]",
        "Contradiction type name: {n}\nContradiction type description: {d}",
        "Type name: {n}. Type description: {d}",
    ]
    good = [fmts[j].format(n=n, d=d) for j in range(len(fmts)) for n, d in NEW]
    bad = [
        "I think all categories have already been covered.",
        "Contradiction type name: Temporal",
        "Contradiction type description: Events placed at incompatible times.",
        "Contradiction type name: , Contradiction type description: Events at incompatible times.",
        "Contradiction type name: Spatial, Contradiction type description: ",
        "Name - Causal; Description - One statement denies a stated cause.",
    ]
    return good, bad


def main(path):
    rows = []
    for kind, (good, bad) in (('method2', method2()), ('instance', instance()),
                              ('new_type', new_type())):
        rows += [{'kind': kind, 'well_formed': True, 'text': t} for t in good]
        rows += [{'kind': kind, 'well_formed': False, 'text': t} for t in bad]
    assert len(rows) == 100 and sum(r['well_formed'] for r in rows) == 80
    with open(path, 'w') as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + '\n')


if __name__ == '__main__':
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    main(sys.argv[1])
