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
Root systems in Bourbaki's realization: simple roots, positive roots and fundamental weights as exact
rational vectors in the ambient euclidean space, and the action of the longest Weyl element.

Concrete types live in classical.py and exceptional.py; build() finds them by type label.
"""
import functools
import logging
from fractions import Fraction

from vsc.severi import linalg
from vsc.severi.common import RootSystemError, SeveriError, load_plugins, what_class


def vec(coords):
    return tuple(Fraction(x) for x in coords)


def unit(size, idx, value=1):
    """value * epsilon_(idx+1)"""
    return vec([value if i == idx else 0 for i in range(size)])


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(t, u):
    return tuple(t * a for a in u)


class RootSystem:
    """Base class; subclasses provide the Bourbaki data for one type"""
    HIDDEN = True

    TYPE = None
    MIN_RANK = 1
    MAX_RANK = None
    COXETER = None  # function of the rank

    def __init__(self, rank):
        if rank < self.MIN_RANK or (self.MAX_RANK is not None and rank > self.MAX_RANK):
            raise RootSystemError("Invalid rank %s for type %s", rank, self.TYPE)
        self.rank = rank
        self.label = f"{self.TYPE}{rank}"
        self.log = logging.getLogger(self.label)

        self.simple_roots = [vec(r) for r in self._simple_roots()]
        self.positive_roots = sorted({vec(r) for r in self._positive_roots()}, key=self.height_key)
        self.positive_set = set(self.positive_roots)
        self.ambient_dim = len(self.simple_roots[0])

        self.cartan_matrix = [[2 * linalg.dot(ai, aj) / linalg.dot(aj, aj) for aj in self.simple_roots]
                              for ai in self.simple_roots]
        inv = linalg.inverse(self.cartan_matrix)
        self.fundamental_weights = [
            functools.reduce(add, [scale(inv[i][k], self.simple_roots[k]) for k in range(rank)])
            for i in range(rank)
        ]
        self.rho = functools.reduce(add, self.fundamental_weights)
        self.rho_vee = scale(Fraction(1, 2), functools.reduce(add, [self.coroot(a) for a in self.positive_roots]))
        self.highest_root = self.positive_roots[-1]
        self.theta = self._theta()

        self._sanity()
        self.log.debug("built %s: %s positive roots, coxeter number %s",
                       self.label, len(self.positive_roots), self.coxeter_number)

    @classmethod
    def _is_type_for(cls, label):
        return label is not None and label.upper() == cls.TYPE

    def __repr__(self):
        return self.label

    # type specific
    def _simple_roots(self):
        raise NotImplementedError

    def _positive_roots(self):
        raise NotImplementedError

    def expected_positive_count(self):
        raise NotImplementedError

    def _theta(self):
        """Diagram involution -w0 on fundamental weight indices (0-based); identity unless overridden"""
        return list(range(self.rank))

    # helpers
    @staticmethod
    def coroot(alpha):
        return scale(2 / linalg.dot(alpha, alpha), alpha)

    def simple_coefficients(self, v):
        """Coefficients of v in the basis of simple roots"""
        return [linalg.dot(v, w) * 2 / linalg.dot(a, a) for a, w in zip(self.simple_roots, self.fundamental_weights)]

    def height(self, v):
        """<v, rho_vee>: the sum of the simple root coefficients of v"""
        return linalg.dot(v, self.rho_vee)

    def _solve_simple(self, v):
        """Simple root coefficients through the Gram matrix of the simple roots"""
        simple = self.simple_roots
        gram = [[linalg.dot(a, b) for b in simple] for a in simple]
        return linalg.solve(gram, [linalg.dot(a, v) for a in simple])

    def height_key(self, alpha):
        return (sum(self._solve_simple(alpha)), alpha)

    @property
    def coxeter_number(self):
        return self.height(self.highest_root) + 1

    def reflect(self, v, alpha):
        return sub(v, scale(linalg.dot(v, self.coroot(alpha)), alpha))

    def weight(self, coeffs):
        """Ambient coordinates of sum c_i omega_i"""
        total = vec([0] * self.ambient_dim)
        for c, w in zip(coeffs, self.fundamental_weights):
            if c:
                total = add(total, scale(c, w))
        return total

    def weight_coefficients(self, v):
        """Coefficients of v over the fundamental weights: <v, alpha_i^vee>"""
        return [linalg.dot(v, self.coroot(a)) for a in self.simple_roots]

    def w0(self, v):
        """Longest Weyl element: w0(sum c_i omega_i) = -sum c_i omega_theta(i)"""
        coeffs = self.weight_coefficients(v)
        image = [0] * self.rank
        for i, c in enumerate(coeffs):
            image[self.theta[i]] = c
        return scale(-1, self.weight(image))

    def antidominant(self, v):
        """Reflection descent to the antidominant element of the Weyl orbit of v"""
        v = vec(v)
        changed = True
        while changed:
            changed = False
            for alpha in self.simple_roots:
                if linalg.dot(v, alpha) > 0:
                    v = self.reflect(v, alpha)
                    changed = True
        return v

    def _sanity(self):
        if len(self.positive_roots) != self.expected_positive_count():
            raise SeveriError("%s has %s positive roots, expected %s",
                              self.label, len(self.positive_roots), self.expected_positive_count())
        for alpha in self.positive_roots:
            coeffs = self.simple_coefficients(alpha)
            if any(c < 0 or c.denominator != 1 for c in coeffs):
                raise SeveriError("%s: %s is not a positive root combination (%s)", self.label, alpha, coeffs)
        if (sorted(self.theta) != list(range(self.rank))
                or any(self.theta[self.theta[i]] != i for i in range(self.rank))):
            raise SeveriError("%s: diagram involution %s is not an involution", self.label, self.theta)
        for i in range(self.rank):
            for j in range(self.rank):
                if self.cartan_matrix[self.theta[i]][self.theta[j]] != self.cartan_matrix[i][j]:
                    raise SeveriError("%s: diagram involution does not preserve the Cartan matrix", self.label)
        if self.COXETER is not None and self.coxeter_number != self.COXETER(self.rank):
            raise SeveriError("%s: coxeter number %s, expected %s", self.label, self.coxeter_number,
                              self.COXETER(self.rank))


def what_rootsystem(label):
    """Return the RootSystem subclass for a type letter, and all known types"""
    import vsc.severi.roots as rootsm
    load_plugins(rootsm)
    return what_class(label, RootSystem, '_is_type_for')


@functools.lru_cache(maxsize=None)
def build(type_label, rank):
    """The root system of the given type and rank"""
    klass, found = what_rootsystem(type_label)
    if klass is None:
        raise RootSystemError("Unknown root system type %s (known: %s)", type_label,
                              ', '.join(sorted(k.TYPE for k in found)))
    return klass(int(rank))


def parse_label(label):
    """'E6' -> ('E', 6)"""
    label = label.strip().upper()
    try:
        return label[0], int(label[1:])
    except (IndexError, ValueError):
        raise RootSystemError("Invalid root system label %s", label)
