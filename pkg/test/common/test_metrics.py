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

import csv
import os
import shutil
import tempfile
import unittest

from distsketch.common import metrics


class _BrokenHandler(metrics.Handler):
    def __init__(self):
        super(_BrokenHandler, self).__init__('broken')

    def emit(self, name, value, tags=None, metrics_type=None):
        raise IOError('disk full')


class TestMetrics(unittest.TestCase):
    def setUp(self):
        self._dir = tempfile.mkdtemp()
        self._fpath = os.path.join(self._dir, 'metrics.csv')

    def tearDown(self):
        shutil.rmtree(self._dir)

    def test_csv_handler(self):
        client = metrics.Metrics()
        client.addHandler(_BrokenHandler())
        client.addHandler(metrics.csvFileHandler(self._fpath))
        client.emit('sssp_calls', 12, {'command': 'exact'}, 'counter')
        client.emit('distance_evals', 0, None, 'counter')
        with open(self._fpath) as fin:
            rows = list(csv.reader(fin))
        self.assertEqual(len(rows), 2)
        self.assertEqual(rows[0][:3], ['counter', 'sssp_calls', '12'])
        self.assertEqual(rows[1][3], '{}')

    def test_handlers_deduplicated(self):
        client = metrics.Metrics()
        handler = metrics.loggingHandler()
        client.addHandler(handler)
        client.addHandler(handler)
        self.assertEqual(len(client.handlers), 1)
        client.removeHandler(handler)
        self.assertEqual(client.handlers, [])
        client.emit('dropped', 1)

    def test_timer_keeps_result(self):
        @metrics.timer('add')
        def add(a, b):
            return a + b
        self.assertEqual(add(2, b=3), 5)
        self.assertEqual(add.__name__, 'add')


if __name__ == '__main__':
    unittest.main()
