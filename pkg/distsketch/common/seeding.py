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

import numpy as np


def make_rng(seed):
    return np.random.default_rng(seed)


def derive_seed(seed, *counters):
    """Mixes a master seed with counters into an independent child seed.

    The result depends only on (seed, counters), never on the order in
    which children are requested.
    """
    seq = np.random.SeedSequence(seed, spawn_key=tuple(counters))
    return int(seq.generate_state(2, dtype=np.uint32).view(np.uint64)[0]
               >> np.uint64(1))


def fresh_seed():
    """Draws a 63-bit seed from system entropy."""
    return int(np.random.SeedSequence().generate_state(
        2, dtype=np.uint32).view(np.uint64)[0] >> np.uint64(1))
