#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Grassmannian G(2,6) in its Pluecker embedding: alternating 6x6 matrices with coordinates e_ij, i < j,
in lexicographic order. The cubic is the Pfaffian, normalized so that Pf(e_01 + e_23 + e_45) = 1;
X is the set of decomposable bivectors v ^ w.
"""
import itertools

from vsc.severi.cubic.space import CubicSpace
from vsc.severi.sampling import random_vector

SIZE = 6
PAIRS = list(itertools.combinations(range(SIZE), 2))
PAIR_INDEX = {pair: idx for idx, pair in enumerate(PAIRS)}


def pfaffian(mat, rows=None):
    """Pfaffian by expansion along the first row, ring operations only"""
    if rows is None:
        rows = list(range(len(mat)))
    if not rows:
        return 1
    first = rows[0]
    total = 0
    for pos in range(1, len(rows)):
        entry = mat[first][rows[pos]]
        if entry == 0:
            continue
        rest = rows[1:pos] + rows[pos + 1:]
        term = entry * pfaffian(mat, rest)
        total = total + term if pos % 2 else total - term
    return total


class Pfaffian(CubicSpace):
    """Alternating 6x6 matrices, n = 8, m = 14"""
    HIDDEN = False

    NAME = 'pfaffian'
    DIMENSION = 15
    VARIETY_DIM = 8
    COORDINATE_NAMES = tuple(f'e{i}{j}' for i, j in PAIRS)

    def cubic(self, coords):
        return pfaffian(self.to_alternating(coords))

    def basepoint_coords(self):
        coords = [0] * self.DIMENSION
        for pair in [(0, 1), (2, 3), (4, 5)]:
            coords[PAIR_INDEX[pair]] = 1
        return coords

    def decomposable(self, rng, bound):
        v = random_vector(rng, SIZE, bound)
        w = random_vector(rng, SIZE, bound)
        return self.point([v[i] * w[j] - v[j] * w[i] for i, j in PAIRS])

    def to_alternating(self, w):
        coords = list(getattr(w, 'coords', w))
        mat = [[0] * SIZE for _ in range(SIZE)]
        for (i, j), value in zip(PAIRS, coords):
            mat[i][j] = value
            mat[j][i] = -value
        return mat
