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
"""Writes the synthetic full-size corpus in fixtures/profile.

premises.conllu       180 annotated premises for the rule engine
premises.txt          the first 130 of them, one per line
noncontradictions.jsonl  1500 SNLI-style entailment/neutral rows

usage: make_profile_corpus.py <output dir>
"""

import itertools
import json
import os
import random
import sys

NUMS = ['Two', 'Three', 'Four', 'Five', 'Six', 'Seven', 'Eight', 'Nine',
        'Ten', '2', '3', '4', '5', '6', '12', '20']
ADJS = ['tall', 'young', 'old', 'happy', 'wet', 'dry', 'clean', 'dirty',
        'black', 'white', 'blond', 'fast', 'slow']
NOUNS = [('women', 'woman'), ('men', 'man'), ('girls', 'girl'),
         ('boys', 'boy'), ('mothers', 'mother'), ('fathers', 'father'),
         ('sisters', 'sister'), ('brothers', 'brother')]
VERBS = [('wait', 'wait', 'Pres'), ('play', 'play', 'Pres'),
         ('sit', 'sit', 'Pres'), ('stand', 'stand', 'Pres'),
         ('talked', 'talk', 'Past'), ('danced', 'dance', 'Past'),
         ('waited', 'wait', 'Past'), ('sang', 'sing', 'Past')]
PLACES = [('near', 'table'), ('beside', 'car'), ('behind', 'house'),
          ('under', 'tree'), ('by', 'window'), ('at', 'door')]
PLACE_ADJS = ['full', 'empty', 'hot', 'cold', 'small', 'large', 'red', 'quiet']

PRES = 'Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin'
PAST = 'Mood=Ind|Tense=Past|VerbForm=Fin'
DEF = 'Definite=Def|PronType=Art'


def sentence(num, adj, noun, verb, place, padj):
    form, lemma, tense = verb
    prep, obj = place
    digits = num.isdigit()
    rows = [
        (num, num if digits else num.lower(), 'NUM', 'CD', 'NumType=Card', 3, 'nummod'),
        (adj, adj, 'ADJ', 'JJ', 'Degree=Pos', 3, 'amod'),
        (noun[0], noun[1], 'NOUN', 'NNS', 'Number=Plur', 4, 'nsubj'),
        (form, lemma, 'VERB', 'VBP' if tense == 'Pres' else 'VBD',
         PRES if tense == 'Pres' else PAST, 0, 'root'),
        (prep, prep, 'ADP', 'IN', '_', 8, 'case'),
        ('the', 'the', 'DET', 'DT', DEF, 8, 'det'),
        (padj, padj, 'ADJ', 'JJ', 'Degree=Pos', 8, 'amod'),
        (obj, obj, 'NOUN', 'NN', 'Number=Sing', 4, 'obl'),
        ('.', '.', 'PUNCT', '.', '_', 4, 'punct'),
    ]
    text = ' '.join(r[0] for r in rows[:-1]) + '.'
    return text, rows


def main(dst):
    rng = random.Random(20240611)
    combos = list(itertools.product(NUMS, ADJS, NOUNS, VERBS, PLACES, PLACE_ADJS))
    rng.shuffle(combos)
    sents = []
    seen = set()
    for c in combos:
        text, rows = sentence(*c)
        if text in seen:
            continue
        seen.add(text)
        sents.append((text, rows))
        if len(sents) == 180:
            break

    os.makedirs(dst, exist_ok=True)
    with open(os.path.join(dst, 'premises.conllu'), 'w') as f:
        for i, (text, rows) in enumerate(sents, 1):
            f.write(f'# sent_id = p{i:03d}\n# text = {text}\n')
            for k, r in enumerate(rows, 1):
                misc = 'SpaceAfter=No' if k == len(rows) - 1 else '_'
                f.write('\t'.join(map(str, (k,) + r[:7] + ('_', misc))) + '\n')
            f.write('\n')
    with open(os.path.join(dst, 'premises.txt'), 'w') as f:
        for text, _ in sents[:130]:
            f.write(text + '\n')

    actions = ['are outside', 'are together', 'are near something',
               'are people', 'are waiting for a friend', 'are on vacation',
               'are in a town', 'are enjoying the day', 'are there']
    labels = ['entailment', 'neutral']
    with open(os.path.join(dst, 'noncontradictions.jsonl'), 'w') as f:
        n = 0
        for i, (text, rows) in enumerate(itertools.cycle(sents)):
            if n == 1500:
                break
            k = i // len(sents)
            subj = ' '.join(r[0] for r in rows[:3])
            hyp = f'{subj} {actions[k]}.'
            f.write(json.dumps({'sentence1': text, 'sentence2': hyp,
                                'gold_label': labels[(i + k) % 2]}) + '\n')
            n += 1


if __name__ == '__main__':
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    main(sys.argv[1])
