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
Secant structure: decompositions P = x + y, the entry locus Q_P inside its span Sigma_P,
the tangent hyperplane characterization of Sigma_P and the companion point of the space M.

Sigma_P is computed as the image of the U-operator U_P; the quadric q_P on it is read off from
sharp(w) = q_P(w) e for a fixed axis e proportional to sharp(P).
"""
import logging
from fractions import Fraction

from vsc.severi import linalg
from vsc.severi.common import GenericityError, SamplerError, SeveriError
from vsc.severi.geometry.duality import l_matrix
from vsc.severi.sampling import random_vector

CONE_PARAMETERS = (Fraction(1), Fraction(-2), Fraction(1, 3))


class SecantDecomp:
    """P = x + y with x, y on X"""

    def __init__(self, model, x, y):
        self.x = x
        self.y = y
        self.P = x + y
        if model.det(self.P) != 0 or not model.is_on_X(x) or not model.is_on_X(y):
            raise SeveriError("Not a secant decomposition: %r + %r", x, y)

    def __repr__(self):
        return f"SecantDecomp(P={self.P}, x={self.x}, y={self.y})"


def sample_decomposition(model, rng, bound=10, retries=64):
    """A SecantDecomp with P off X"""
    for attempt in range(retries):
        x = model.sample_X(rng, bound, retries)
        y = model.sample_X(rng, bound, retries)
        if not model.is_on_X(x + y):
            return SecantDecomp(model, x, y)
        logging.debug("%s: decomposition attempt %s has x + y on X", model.NAME, attempt)
    raise SamplerError("%s: no secant point off X after %s attempts", model.NAME, retries)


def _require_sec_minus_x(model, P):
    if model.det(P) != 0:
        raise GenericityError("%r is not on the secant variety", P)
    if model.sharp(P).is_zero():
        raise GenericityError("%r lies on X", P)


class EntryLocus:
    """Sigma_P with its quadric q_P; Q_P = {q_P = 0} = Sigma_P cap X"""

    def __init__(self, model, P, sigma_basis, axis, quadric_gram, feet=None):
        self.model = model
        self.P = P
        self.sigma_basis = sigma_basis
        self.axis = axis
        self.quadric_gram = quadric_gram
        self.feet = feet or []

    @property
    def dimension(self):
        return len(self.sigma_basis)

    def q(self, w):
        """q_P(w) for w in Sigma_P"""
        value = linalg.ratio(self.axis.coords, self.model.sharp(w).coords)
        if value is None:
            raise SeveriError("sharp(%r) is not proportional to the axis of the entry locus", w)
        return value

    def bilinear(self, u, v):
        return (self.q(u + v) - self.q(u) - self.q(v)) / 2

    def contains(self, w):
        """w lies in Sigma_P"""
        vectors = [b.coords for b in self.sigma_basis]
        return linalg.rank(vectors + [w.coords]) == len(vectors)

    def combine(self, coeffs):
        total = self.model.zero()
        for coeff, vec in zip(coeffs, self.sigma_basis):
            total = total + coeff * vec
        return total

    def sample(self, rng, bound=10):
        """Random point of Sigma_P"""
        return self.combine(random_vector(rng, self.dimension, bound))

    def isotropic(self):
        """A nonzero point with q_P = 0: a secant foot, or a basis vector"""
        for candidate in self.feet + self.sigma_basis:
            if not candidate.is_zero() and self.q(candidate) == 0:
                return candidate
        raise GenericityError("no isotropic vector known for the entry locus of %r", self.P)

    def quadric_point(self, rng, bound=10, retries=64):
        """
        Random rational point of Q_P: for isotropic x0 and any v,
        q(q(v) x0 - 2 b(x0, v) v) = 0.
        """
        x0 = self.isotropic()
        for _ in range(retries):
            v = self.sample(rng, bound)
            point = self.q(v) * x0 - 2 * self.bilinear(x0, v) * v
            if not point.is_zero():
                return point
        raise SamplerError("no point on the entry locus quadric of %r", self.P)


def entry_locus(model, P, feet=None):
    """
    Sigma_P as the image of U_P, with the quadric q_P.

    @param feet: known points of X on a secant through P (used as isotropic vectors)
    """
    _require_sec_minus_x(model, P)
    expected = model.n // 2 + 2
    images = model.u_matrix(P)
    reduced, pivots = linalg.rref([img.coords for img in images], ncols=model.DIMENSION)
    if len(pivots) != expected:
        raise GenericityError("U_P has rank %s, expected %s for %r", len(pivots), expected, P)
    sigma = [model.point(vec) for vec in reduced[:len(pivots)]]

    sharp_p = model.sharp(P)
    pivot = next(x for x in sharp_p.coords if x != 0)
    axis = sharp_p / pivot

    locus = EntryLocus(model, P, sigma, axis, None, feet=feet)
    gram = [[locus.bilinear(u, v) if i != j else locus.q(u) for j, v in enumerate(sigma)]
            for i, u in enumerate(sigma)]
    if linalg.rank(gram) != expected:
        raise SeveriError("quadric of the entry locus of %r is singular (rank %s)", P, linalg.rank(gram))
    locus.quadric_gram = gram
    return locus


def tangent_char_check(model, P, P2):
    """T_P2 Sec = T_P Sec, i.e. grad(P2) proportional to grad(P)"""
    _require_sec_minus_x(model, P)
    _require_sec_minus_x(model, P2)
    return model.grad(P2).proportional(model.grad(P))


def same_entry_locus(model, P, P2, locus=None):
    """
    Sigma_P2 = Sigma_P

    @param locus: Sigma_P when the caller already has it
    """
    first = entry_locus(model, P) if locus is None else locus
    second = entry_locus(model, P2)
    vectors = [b.coords for b in first.sigma_basis + second.sigma_basis]
    return linalg.rank(vectors) == first.dimension == second.dimension


def companion_point(model, P, w0, locus=None):
    """
    The point x of X with M cap X = Q_P + {x}, where M = span(Sigma_P, w0): x = L_w0^-1(grad P).
    """
    _require_sec_minus_x(model, P)
    star = model.grad(P)
    if star(w0) == 0:
        raise GenericityError("%r lies in the tangent hyperplane at %r", w0, P)
    x = l_matrix(model, w0).solve(star)
    if locus is None:
        locus = entry_locus(model, P)
    if not model.is_on_X(x):
        raise SeveriError("companion point %r of %r is not on X", x, P)
    span = [b.coords for b in locus.sigma_basis]
    if linalg.rank(span + [w0.coords, x.coords]) != len(span) + 1:
        raise SeveriError("companion point %r is not in span(Sigma_P, w0)", x)
    if locus.contains(x):
        raise SeveriError("companion point %r lies in Sigma_P", x)
    return x


def cone_check(model, x, q, parameters=CONE_PARAMETERS):
    """The line through x and a point q of Q_P lies on the secant variety"""
    return all(model.det(x + t * q) == 0 for t in parameters)


def sigma_outside_sample(model, locus, rng, bound=10, retries=64):
    """A point of Sec - X outside Sigma_P"""
    for _ in range(retries):
        candidate = model.sample_sec(rng, bound, retries)
        if not model.is_on_X(candidate) and not locus.contains(candidate):
            return candidate
    raise SamplerError("no secant point outside Sigma_P of %r", locus.P)


def sigma_inside_sample(model, locus, rng, bound=10, retries=64):  # pylint: disable=unused-argument
    """A point of Sigma_P - X (q_P != 0)"""
    for _ in range(retries):
        candidate = locus.sample(rng, bound)
        if not candidate.is_zero() and locus.q(candidate) != 0:
            return candidate
        logging.debug("sigma sample %s on Q_P, retrying", candidate)
    raise SamplerError("no point of Sigma_P - X for %r", locus.P)
