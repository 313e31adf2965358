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
Homogeneity of X and of Sec(X) - X.
"""
import logging

from vsc.severi import linalg
from vsc.severi.common import GenericityError, SamplerError, SeveriError
from vsc.severi.geometry.duality import l_matrix
from vsc.severi.geometry.secant import entry_locus


def _require_x(model, *points):
    for point in points:
        if point.is_zero() or not model.is_on_X(point):
            raise SeveriError("%r is not a nonzero point of X", point)


def apply_matrix(model, matrix, point):
    return model.point(linalg.matvec(matrix, point.coords))


def homogeneity_map(model, x, x2, rng, bound=10, retries=64, checks=20):
    """
    An automorphism A of V with A(X) = X and A(x) proportional to x2: A = L_w2^-1 o L_w with
    w = s + x, w2 = s2 + x2 for s, s2 in Sigma_P of a secant point P seen by both x and x2.

    @param checks: number of fresh X-samples that must be mapped into X
    """
    _require_x(model, x, x2)

    locus = None
    for attempt in range(retries):
        P = model.sample_sec(rng, bound, retries)
        if model.is_on_X(P):
            continue
        star = model.grad(P)
        if star(x) != 0 and star(x2) != 0:
            locus = entry_locus(model, P)
            break
        logging.debug("%s: secant point attempt %s does not see both points", model.NAME, attempt)
    if locus is None:
        raise SamplerError("%s: no secant point seen by %r and %r", model.NAME, x, x2)

    pair = None
    for attempt in range(retries):
        sigma = locus.sample(rng, bound)
        sigma2 = sigma if x == x2 else locus.sample(rng, bound)
        w, w2 = sigma + x, sigma2 + x2
        if model.det(w) != 0 and model.det(w2) != 0:
            pair = (w, w2)
            break
        logging.debug("%s: base point attempt %s on the secant variety", model.NAME, attempt)
    if pair is None:
        raise SamplerError("%s: no base points off the secant variety", model.NAME)
    w, w2 = pair

    source = linalg.transpose(l_matrix(model, w).rows)
    target = linalg.transpose(l_matrix(model, w2).rows)
    try:
        matrix = linalg.matmul(linalg.inverse(target), source)
    except GenericityError:
        raise SeveriError("L_w2 is singular for w2 = %r off the secant variety", w2)

    if not apply_matrix(model, matrix, x).proportional(x2):
        raise SeveriError("homogeneity map does not send %r to %r", x, x2)
    for _ in range(checks):
        xi = model.sample_X(rng, bound, retries)
        if not model.is_on_X(apply_matrix(model, matrix, xi)):
            raise SeveriError("homogeneity map sends %r off X", xi)
    return matrix


def _require_sec_minus_x(model, p):
    if model.det(p) != 0 or model.sharp(p).is_zero():
        raise SeveriError("%r is not a point of Sec - X", p)


def transition_point(model, p, w0):
    """P(w0) = 2 det(w0) p - 6 w0*(p) w0"""
    return 2 * model.det(w0) * p - 6 * model.grad(w0)(p) * w0


def good_w0_for(model, p, rng, bound=10, retries=64):
    """A point w0 off the secant variety with det(P(w0)) != 0"""
    _require_sec_minus_x(model, p)
    for attempt in range(retries):
        w0 = model.sample_off_sec(rng, bound, retries)
        if model.det(transition_point(model, p, w0)) != 0:
            return w0
        logging.debug("%s: w0 attempt %s has det(P(w0)) = 0", model.NAME, attempt)
    raise SamplerError("%s: no w0 with det(P(w0)) != 0 for %r", model.NAME, p)


def sec_transition_map(model, p, w0):
    """
    Rows of the linear map w -> L(w) =
        6 F(w0,w0,w) F(w0,p,.) + 2 det(w0) F(w,p,.) - 6 F(w0,w,p) w0* - 6 F(w0,w0,p) F(w0,w,.)
    """
    d = model.det(w0)
    if d == 0:
        raise GenericityError("%r lies on the secant variety", w0)
    w0star = model.grad(w0)
    w0p = model.bilinear_covector(w0, p)
    w0w0p = w0star(p)
    rows = []
    for i in range(model.DIMENSION):
        e = model.basis(i)
        image = (6 * w0star(e) * w0p + 2 * d * model.bilinear_covector(e, p)
                 - 6 * w0p(e) * w0star - 6 * w0w0p * model.bilinear_covector(w0, e))
        rows.append(list(image.coords))
    return rows


def sec_transitivity_rank(model, p, w0):
    """Exact rank of the map L"""
    _require_sec_minus_x(model, p)
    return linalg.rank(sec_transition_map(model, p, w0))


def sec_kernel_intersection(model, p, w0):
    """dim(Ker L cap Ker w0*); zero means L is injective on the hyperplane w0* = 0"""
    rows = sec_transition_map(model, p, w0)
    stacked = linalg.transpose(rows) + [list(model.grad(w0).coords)]
    return len(linalg.nullspace(stacked, ncols=model.DIMENSION))
