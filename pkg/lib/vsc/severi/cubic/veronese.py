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
Veronese surface: symmetric 3x3 matrices

    [[a,  x3, x2],
     [x3, b,  x1],
     [x2, x1, c ]]

with coordinates (a, b, c, x1, x2, x3); X is the set of rank one matrices v v^T.
"""
from vsc.severi.cubic.space import CubicSpace
from vsc.severi.sampling import random_vector


class Veronese(CubicSpace):
    """Symmetric matrices, n = 2, m = 5"""
    HIDDEN = False

    NAME = 'veronese'
    DIMENSION = 6
    VARIETY_DIM = 2
    COORDINATE_NAMES = ('a', 'b', 'c', 'x1', 'x2', 'x3')

    def cubic(self, coords):
        a, b, c, x1, x2, x3 = coords
        return a * b * c + 2 * x1 * x2 * x3 - a * x1 * x1 - b * x2 * x2 - c * x3 * x3

    def basepoint_coords(self):
        return [1, 1, 1, 0, 0, 0]

    def decomposable(self, rng, bound):
        v = random_vector(rng, 3, bound)
        return self.from_matrix([[vi * vj for vj in v] for vi in v])

    def to_matrix(self, w):
        a, b, c, x1, x2, x3 = w.coords
        return [[a, x3, x2], [x3, b, x1], [x2, x1, c]]

    def from_matrix(self, mat):
        return self.point([mat[0][0], mat[1][1], mat[2][2], mat[1][2], mat[0][2], mat[0][1]])
