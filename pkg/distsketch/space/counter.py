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

import threading
from collections import namedtuple

CounterSnapshot = namedtuple('CounterSnapshot', ['distance_evals', 'sssp_calls'])


class DistanceCounter(object):
    """Monotone tally of pairwise distance evaluations and SSSP calls."""

    def __init__(self):
        self._lock = threading.Lock()
        self._distance_evals = 0
        self._sssp_calls = 0

    @property
    def distance_evals(self):
        with self._lock:
            return self._distance_evals

    @property
    def sssp_calls(self):
        with self._lock:
            return self._sssp_calls

    def add(self, distance_evals=0, sssp_calls=0):
        assert distance_evals >= 0 and sssp_calls >= 0, \
            "counters are monotone"
        with self._lock:
            self._distance_evals += int(distance_evals)
            self._sssp_calls += int(sssp_calls)

    def snapshot(self):
        with self._lock:
            return CounterSnapshot(self._distance_evals, self._sssp_calls)

    def delta(self, since):
        now = self.snapshot()
        return CounterSnapshot(now.distance_evals - since.distance_evals,
                               now.sssp_calls - since.sssp_calls)

    def __getstate__(self):
        return self.snapshot()

    def __setstate__(self, state):
        self._lock = threading.Lock()
        self._distance_evals, self._sssp_calls = state
