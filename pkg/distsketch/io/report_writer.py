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

import numpy as np

REPORT_FIELDS = ['v', 'w_hat', 'cc_hat', 'method']
EXACT_FIELDS = ['w', 'cc']


def format_real(x):
    """Shortest round-trip text; infinity prints as `inf`."""
    return repr(float(x))


class CsvDictWriter(object):
    """Writes dict rows to a text stream, header taken from the first row."""

    def __init__(self, fout, fieldnames=None):
        self._write_raw_num = 0
        self._fout = fout
        self._fieldnames = fieldnames
        self._csv_writer = None

    def write(self, raw):
        assert isinstance(raw, dict)
        if len(raw) == 0:
            return
        if self._csv_writer is None:
            self._csv_writer = csv.DictWriter(
                self._fout, fieldnames=self._fieldnames or list(raw.keys()),
                lineterminator='\n')
            self._csv_writer.writeheader()
        self._csv_writer.writerow(
            {key: format_real(value) if isinstance(value, float) else value
             for key, value in raw.items()})
        self._write_raw_num += 1

    def write_raw_num(self):
        return self._write_raw_num


def write_estimate_report(fout, w_hat, cc_hat, method, exact_w=None):
    """One `v,w_hat,cc_hat,method` row per node, plus `w,cc` when known."""
    fields = REPORT_FIELDS + (EXACT_FIELDS if exact_w is not None else [])
    writer = CsvDictWriter(fout, fields)
    n = len(w_hat)
    if exact_w is not None:
        exact_cc = np.full(n, np.inf)
        np.divide(n - 1, exact_w, out=exact_cc, where=exact_w != 0)
    for v in range(n):
        row = {'v': v, 'w_hat': float(w_hat[v]), 'cc_hat': float(cc_hat[v]),
               'method': method}
        if exact_w is not None:
            row['w'] = float(exact_w[v])
            row['cc'] = float(exact_cc[v])
        writer.write(row)
    return writer.write_raw_num()
