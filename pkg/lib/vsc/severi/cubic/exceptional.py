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
The E6 variety: 3x3 Hermitian octonion matrices

    [[a,        x3,       conj(x2)],
     [conj(x3), b,        x1      ],
     [x2,       conj(x1), c       ]]

with coordinates (a, b, c, x1[0:8], x2[0:8], x3[0:8]) and the Freudenthal determinant

    abc - a N(x1) - b N(x2) - c N(x3) + 2 Re((x2 x3) x1)

Rank one seeds are not generic here, so sample_X transports them with U-operators of random
invertible points before use.
"""
from fractions import Fraction

from vsc.severi.algebra.composition import CompositionElement, conjugate, norm_form, trace_triple
from vsc.severi.cubic.space import CubicSpace
from vsc.severi.sampling import choice, random_nonzero_int, random_vector

OCT = 8


def _split(coords):
    coords = list(coords)
    a, b, c = coords[:3]
    x1, x2, x3 = [CompositionElement('O', coords[3 + OCT * k:3 + OCT * (k + 1)]) for k in range(3)]
    return a, b, c, x1, x2, x3


def _join(a, b, c, x1, x2, x3):
    return [a, b, c] + list(x1.coords) + list(x2.coords) + list(x3.coords)


class Exceptional(CubicSpace):
    """Hermitian octonion matrices, n = 16, m = 26"""
    HIDDEN = False

    NAME = 'exceptional'
    DIMENSION = 27
    VARIETY_DIM = 16
    COORDINATE_NAMES = ('a', 'b', 'c') + tuple(f'x{k}_{i}' for k in range(1, 4) for i in range(OCT))

    PRIMARY_STRATEGY = 'transport'

    def cubic(self, coords):
        a, b, c, x1, x2, x3 = _split(coords)
        return (a * b * c - a * norm_form(x1) - b * norm_form(x2) - c * norm_form(x3)
                + 2 * trace_triple(x1, x2, x3))

    def basepoint_coords(self):
        return [1, 1, 1] + [0] * (3 * OCT)

    def rotate(self, w, times=1):
        """The cyclic symmetry (a, b, c, x1, x2, x3) -> (b, c, a, x2, x3, x1)"""
        coords = list(w.coords)
        for _ in range(times % 3):
            a, b, c, x1, x2, x3 = _split(coords)
            coords = _join(b, c, a, x2, x3, x1)
        return self.point(coords)

    def decomposable(self, rng, bound):
        """Diagonal idempotent, or the rank one family a = 1, b = N(u), x3 = u; rotated at random"""
        zero = CompositionElement.zero('O')
        if choice(rng, ('idempotent', 'family', 'family')) == 'idempotent':
            seed = _join(Fraction(random_nonzero_int(rng, bound)), 0, 0, zero, zero, zero)
        else:
            u = CompositionElement('O', random_vector(rng, OCT, bound))
            seed = _join(Fraction(1), norm_form(u), 0, zero, zero, u)
        return self.rotate(self.point(seed), int(rng.integers(3)))

    def to_hermitian(self, w):
        """The 3x3 array of octonions; diagonal entries as real octonions"""
        a, b, c, x1, x2, x3 = _split(w.coords)
        real = [CompositionElement('O', [d] + [Fraction(0)] * (OCT - 1)) for d in (a, b, c)]
        return [[real[0], x3, conjugate(x2)],
                [conjugate(x3), real[1], x1],
                [x2, conjugate(x1), real[2]]]

    def octonions(self, w):
        """(a, b, c, x1, x2, x3) with the x_i as composition elements"""
        return _split(w.coords)
