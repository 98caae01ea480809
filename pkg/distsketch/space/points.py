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

from distsketch.common.errors import DataError, NotAMetric

MATRIX_TOLERANCE = 1e-9


class PointSet(object):
    """Points of a metric space, as Euclidean coordinates or a matrix.

    Exactly one of `coords` (n x d) and `matrix` (n x n) is set.
    """

    def __init__(self, coords=None, matrix=None, validate=True):
        if (coords is None) == (matrix is None):
            raise DataError('need exactly one of coords and matrix')
        self.coords = None
        self.matrix = None
        if coords is not None:
            coords = np.asarray(coords, dtype=np.float64)
            if coords.ndim == 1:
                coords = coords[:, None]
            if coords.ndim != 2 or coords.shape[0] < 1:
                raise DataError('coordinates must be a non-empty n x d array')
            if not np.all(np.isfinite(coords)):
                raise DataError('coordinates must be finite')
            self.coords = coords
            self.n = coords.shape[0]
        else:
            matrix = np.asarray(matrix, dtype=np.float64)
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or \
                    matrix.shape[0] < 1:
                raise DataError('distance matrix must be square')
            if validate:
                validate_metric(matrix)
            self.matrix = matrix
            self.n = matrix.shape[0]

    @property
    def is_euclidean(self):
        return self.coords is not None

    @property
    def dim(self):
        return self.coords.shape[1] if self.is_euclidean else None

    def row(self, s):
        if self.is_euclidean:
            return np.linalg.norm(self.coords - self.coords[s], axis=1)
        return self.matrix[s].copy()

    def rows(self, sources):
        sources = np.asarray(sources, dtype=np.int64)
        if self.is_euclidean:
            diff = self.coords[sources][:, None, :] - self.coords[None, :, :]
            return np.linalg.norm(diff, axis=2)
        return self.matrix[sources]

    def pairwise(self, us, vs):
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if self.is_euclidean:
            return np.linalg.norm(self.coords[us] - self.coords[vs], axis=1)
        return self.matrix[us, vs]

    def to_point(self, z, ids):
        """Distances from an arbitrary location z to the points `ids`."""
        assert self.is_euclidean, \
            "query locations outside V need Euclidean coordinates"
        z = np.asarray(z, dtype=np.float64).reshape(-1)
        if z.shape[0] != self.dim:
            raise DataError('query has dimension {}, points have {}'.format(
                z.shape[0], self.dim))
        return np.linalg.norm(self.coords[np.asarray(ids, dtype=np.int64)] - z,
                              axis=1)

    def fingerprint_bytes(self):
        if self.is_euclidean:
            return b'coords' + np.int64(self.n).tobytes() + \
                np.int64(self.dim).tobytes() + self.coords.tobytes()
        return b'matrix' + np.int64(self.n).tobytes() + self.matrix.tobytes()

    def __eq__(self, other):
        if not isinstance(other, PointSet) or self.n != other.n or \
                self.is_euclidean != other.is_euclidean:
            return False
        if self.is_euclidean:
            return np.array_equal(self.coords, other.coords)
        return np.array_equal(self.matrix, other.matrix)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        kind = 'euclidean' if self.is_euclidean else 'matrix'
        return '<PointSet n={} {}>'.format(self.n, kind)


def validate_metric(matrix, tolerance=MATRIX_TOLERANCE):
    if not np.all(np.isfinite(matrix)):
        raise NotAMetric('distance matrix has non-finite entries')
    if np.any(matrix < 0):
        raise NotAMetric('distance matrix has negative entries')
    if np.any(np.diag(matrix) != 0):
        raise NotAMetric('distance matrix diagonal must be zero')
    if not np.allclose(matrix, matrix.T, rtol=0, atol=tolerance):
        raise NotAMetric('distance matrix is not symmetric')
    for k in range(matrix.shape[0]):
        via_k = matrix[:, k, None] + matrix[None, k, :]
        bad = np.argwhere(matrix > via_k + tolerance)
        if len(bad):
            i, j = bad[0]
            raise NotAMetric(
                'triangle inequality violated: d({0},{1})={2} > '
                'd({0},{3}) + d({3},{1})={4}'.format(
                    i, j, matrix[i, j], k, via_k[i, j]))
