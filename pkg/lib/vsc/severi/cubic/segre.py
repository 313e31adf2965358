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
Segre variety P2 x P2: all 3x3 matrices (row major), X is the set of rank one matrices v w^T.

This is the model where everything has a classical meaning (sharp is the adjugate, the trace form
is tr(xy), U_p(w) = p w p), which makes it the oracle for the generic constructions.
"""
from vsc.severi.cubic.space import CubicSpace
from vsc.severi.sampling import random_vector


def det3(mat):
    """Determinant of a 3x3 array, ring operations only"""
    return (mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
            - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
            + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]))


class Segre(CubicSpace):
    """3x3 matrices, n = 4, m = 8"""
    HIDDEN = False

    NAME = 'segre'
    DIMENSION = 9
    VARIETY_DIM = 4
    COORDINATE_NAMES = tuple(f'm{i}{j}' for i in range(1, 4) for j in range(1, 4))

    def cubic(self, coords):
        return det3(self.to_matrix(coords))

    def basepoint_coords(self):
        return [1, 0, 0, 0, 1, 0, 0, 0, 1]

    def decomposable(self, rng, bound):
        v = random_vector(rng, 3, bound)
        w = random_vector(rng, 3, bound)
        return self.from_matrix([[vi * wj for wj in w] for vi in v])

    def to_matrix(self, w):
        coords = list(getattr(w, 'coords', w))
        return [coords[0:3], coords[3:6], coords[6:9]]

    def from_matrix(self, mat):
        return self.point([x for row in mat for x in row])
