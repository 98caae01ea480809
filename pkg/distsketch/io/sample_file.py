# Copyright 2021 The DistSketch Authors. All Rights Reserved.
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

# coding: utf-8

from distsketch.common.errors import ParseError
from distsketch.sampling.poisson import WeightedSample


def serialize_sample(sample):
    """`sample k seed n` header, then one `v p_v` line per entry."""
    seed = 'none' if sample.seed is None else str(sample.seed)
    lines = ['sample {!r} {} {}'.format(sample.k, seed, sample.n)]
    lines.extend('{} {!r}'.format(v, p) for v, p in sample.entries)
    return '\n'.join(lines) + '\n'


def parse_sample(text):
    lines = [(no, line.split()) for no, line in
             enumerate(text.splitlines(), 1) if line.strip()]
    if not lines or lines[0][1][0] != 'sample' or len(lines[0][1]) != 4:
        raise ParseError(1, 'sample file must start with `sample k seed n`')
    _, k, seed, n = lines[0][1]
    try:
        k = float(k)
        seed = None if seed == 'none' else int(seed)
        n = int(n)
    except ValueError:
        raise ParseError(lines[0][0], 'bad sample header')
    ids, probs = [], []
    for line_no, tokens in lines[1:]:
        if len(tokens) != 2:
            raise ParseError(line_no, 'expected `v p`')
        try:
            ids.append(int(tokens[0]))
            probs.append(float(tokens[1]))
        except ValueError:
            raise ParseError(line_no, 'bad sample entry')
    return WeightedSample(ids, probs, k, seed, n)
