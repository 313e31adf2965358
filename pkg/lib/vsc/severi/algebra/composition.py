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
The composition algebras R, C, H and O by Cayley-Dickson doubling.

An element of the doubled algebra is a pair (x1, x2) of elements of the half algebra, stored as the
concatenation of their coordinates, with product

    (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2, y2 x1 + x2 conj(y1))

Coordinates are any exact ring elements: Fractions for computations, sympy symbols when the cubic
forms are compiled. Nothing in here coerces.
"""
from fractions import Fraction

from vsc.severi.common import SeveriError, TagMismatchError, rational


class AlgebraTag:
    """One of R, C, H, O"""

    def __init__(self, name, dim):
        self.name = name
        self.dim = dim

    @property
    def half(self):
        """Tag of the algebra this one is the double of"""
        if self.dim == 1:
            raise SeveriError("R is not a Cayley-Dickson double")
        return TAGS_BY_DIM[self.dim // 2]

    def __eq__(self, other):
        return isinstance(other, AlgebraTag) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


TAGS = {name: AlgebraTag(name, dim) for name, dim in [('R', 1), ('C', 2), ('H', 4), ('O', 8)]}
TAGS_BY_DIM = {tag.dim: tag for tag in TAGS.values()}


def get_tag(tag):
    """Return the AlgebraTag for a tag or its name"""
    if isinstance(tag, AlgebraTag):
        return tag
    try:
        return TAGS[str(tag).upper()]
    except KeyError:
        raise SeveriError("Unknown composition algebra %s (known: %s)", tag, ', '.join(TAGS))


def _conj(x):
    return (x[0],) + tuple(-c for c in x[1:])


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _mul(x, y):
    if len(x) == 1:
        return (x[0] * y[0],)
    half = len(x) // 2
    x1, x2 = x[:half], x[half:]
    y1, y2 = y[:half], y[half:]
    first = _sub(_mul(x1, y1), _mul(_conj(y2), x2))
    second = _add(_mul(y2, x1), _mul(x2, _conj(y1)))
    return first + second


class CompositionElement:
    """Immutable element of R, C, H or O"""

    def __init__(self, tag, coords):
        self.tag = get_tag(tag)
        self.coords = tuple(coords)
        if len(self.coords) != self.tag.dim:
            raise SeveriError("%s element needs %s coordinates, got %s", self.tag, self.tag.dim, len(self.coords))

    @classmethod
    def from_rationals(cls, tag, coords):
        return cls(tag, [rational(c) for c in coords])

    @classmethod
    def zero(cls, tag):
        tag = get_tag(tag)
        return cls(tag, [Fraction(0)] * tag.dim)

    @classmethod
    def unit(cls, tag, idx):
        """Basis element e_idx; e_0 is the identity"""
        tag = get_tag(tag)
        return cls(tag, [Fraction(int(i == idx)) for i in range(tag.dim)])

    @classmethod
    def one(cls, tag):
        return cls.unit(tag, 0)

    def _check(self, other):
        if not isinstance(other, CompositionElement):
            raise TagMismatchError("Expected a composition element, got %r", other)
        if other.tag != self.tag:
            raise TagMismatchError("Tag mismatch: %s and %s", self.tag, other.tag)

    def __add__(self, other):
        self._check(other)
        return CompositionElement(self.tag, _add(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return CompositionElement(self.tag, _sub(self.coords, other.coords))

    def __neg__(self):
        return CompositionElement(self.tag, [-c for c in self.coords])

    def __mul__(self, other):
        if isinstance(other, CompositionElement):
            return cd_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        return CompositionElement(self.tag, [scalar * c for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, CompositionElement) and self.tag == other.tag and self.coords == other.coords

    def __hash__(self):
        return hash((self.tag, self.coords))

    def __repr__(self):
        return f"{self.tag}{tuple(str(c) for c in self.coords)}"

    def is_zero(self):
        return all(c == 0 for c in self.coords)


def cd_multiply(a, b):
    """Cayley-Dickson product ab"""
    a._check(b)
    return CompositionElement(a.tag, _mul(a.coords, b.coords))


def conjugate(a):
    """Negate the imaginary coordinates"""
    return CompositionElement(a.tag, _conj(a.coords))


def real_part(a):
    return a.coords[0]


def norm_form(a):
    """N(a) = Re(a conj(a)), the sum of squares of the coordinates"""
    total = a.coords[0] * a.coords[0]
    for c in a.coords[1:]:
        total += c * c
    return total


def associator(a, b, c):
    """(ab)c - a(bc); zero for all triples iff the algebra is associative"""
    return cd_multiply(cd_multiply(a, b), c) - cd_multiply(a, cd_multiply(b, c))


def trace_triple(x1, x2, x3):
    """Re((x2 x3) x1); invariant under cyclic permutation of its arguments"""
    return real_part(cd_multiply(cd_multiply(x2, x3), x1))
