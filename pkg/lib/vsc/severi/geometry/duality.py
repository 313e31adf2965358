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
The Cremona transformation G(w) = F(w,w,.) / F(w,w,w), its differentials L_w0 and the duality with
the dual cubic det*(l) := det(iota^-1 l).
"""
import logging

from vsc.severi import linalg
from vsc.severi.common import GenericityError, SeveriError


class LinearMapToDual:
    """A linear map V -> V*; row i is the image of the i-th basis vector"""

    def __init__(self, model, rows):
        self.model = model
        self.rows = [list(row) for row in rows]

    def rank(self):
        return linalg.rank(self.rows)

    def is_invertible(self):
        return self.rank() == len(self.rows)

    def apply(self, point):
        """Image covector of a point"""
        model = self.model
        return model.covector(linalg.matvec(linalg.transpose(self.rows), point.coords))

    def solve(self, covector):
        """The point mapped to covector; raises GenericityError when the map is singular"""
        model = self.model
        return model.point(linalg.solve(linalg.transpose(self.rows), list(covector.coords)))


def _off_sec(model, w0):
    d = model.det(w0)
    if d == 0:
        raise GenericityError("%r lies on the secant variety", w0)
    return d


def l_map(model, w0, w):
    """L_w0(w) = 2 det(w0) F(w0, w, .) - 3 F(w0, w0, w) w0*"""
    d = _off_sec(model, w0)
    w0star = model.grad(w0)
    return 2 * d * model.bilinear_covector(w0, w) - 3 * w0star(w) * w0star


def l_matrix(model, w0):
    """The full map L_w0 as a LinearMapToDual"""
    _off_sec(model, w0)
    return LinearMapToDual(model, [l_map(model, w0, model.basis(i)).coords for i in range(model.DIMENSION)])


def second_point(model, x, w0):
    """
    The other intersection of the line (x w0) with the secant variety.

    det(x + t w0) = t^2 (3 w0*(x) + t det(w0)) for x on X, so the second root is t = -3 w0*(x) / det(w0).
    """
    if not model.is_on_X(x):
        raise SeveriError("second_point needs a point of X, got %r", x)
    d = _off_sec(model, w0)
    w0x = model.grad(w0)(x)
    if w0x == 0:
        raise GenericityError("line through %r and %r meets the secant variety only at x", x, w0)
    return x + (-3 * w0x / d) * w0


def cremona(model, w):
    """
    G(w) as the projective covector grad(w), with its scale det(w).

    On Sec - X this is the extension G(p) = p*; on X the gradient vanishes.
    """
    star = model.grad(w)
    if star.is_zero():
        raise GenericityError("%r lies on X: total-transform regime", w)
    return star, model.det(w)


def cremona_differential(model, w0, w):
    """Derivative of G at w0 in direction w: L_w0(w) / det(w0)^2"""
    d = _off_sec(model, w0)
    return l_map(model, w0, w) / (d * d)


def involution_check(model, w0):
    """G* o G = id, transported: sharp(sharp(w0)) = det(w0) w0"""
    d = _off_sec(model, w0)
    return model.sharp(model.sharp(w0)) == d * w0


def dual_det(model, l):
    """det*(l) = det(iota^-1 l)"""
    return model.det(model.untransport(l))


def dual_trilinear(model, l1, l2, l3):
    return model.trilinear(model.untransport(l1), model.untransport(l2), model.untransport(l3))


def is_on_Y(model, l):
    """l lies on the dual variety Y iff iota^-1(l) lies on X"""
    return model.sharp(model.untransport(l)).is_zero()


def diamond_scalar(model, w0, u, v, w):
    """F*(L u, L v, L w) / F(u, v, w)"""
    value = model.trilinear(u, v, w)
    if value == 0:
        raise GenericityError("F(u, v, w) = 0, no scalar to fit")
    lmap = l_matrix(model, w0)
    return dual_trilinear(model, lmap.apply(u), lmap.apply(v), lmap.apply(w)) / value


def diamond_check(model, w0, triples):
    """
    Fit the scalar lambda_w0 on the first triple with F(u, v, w) != 0, then check
    F*(L u, L v, L w) = lambda_w0 F(u, v, w) on every triple.

    @return: (all triples agree, lambda_w0)
    """
    lmap = l_matrix(model, w0)
    scalar = None
    for u, v, w in triples:
        value = model.trilinear(u, v, w)
        dual = dual_trilinear(model, lmap.apply(u), lmap.apply(v), lmap.apply(w))
        if scalar is None:
            if value == 0:
                continue
            scalar = dual / value
        elif dual != scalar * value:
            logging.debug("diamond identity fails for w0 %s on (%s, %s, %s)", w0, u, v, w)
            return False, scalar
    if scalar is None:
        raise GenericityError("no triple with F(u, v, w) != 0")
    return True, scalar


def diamond_closed_form(model, w0):
    """The scalar lambda_w0 = -det(w0)^4 / 27 predicted by iota^-1 L_w0 = -1/3 U_{w0#}"""
    d = _off_sec(model, w0)
    return -d ** 4 / 27


def total_transform_limit(model, x, d):
    """
    Limit direction F(x, d, .) of G along x + eps d, for x on X.

    The result always lies on Sec(Y): dual_det = 0.
    """
    if not model.is_on_X(x):
        raise SeveriError("total_transform_limit needs a point of X, got %r", x)
    limit = model.bilinear_covector(x, d)
    if limit.is_zero():
        raise GenericityError("degenerate direction %r at %r", d, x)
    if dual_det(model, limit) != 0:
        raise SeveriError("limit %r of G at %r is not on Sec(Y)", limit, x)
    return limit


def gram_invertibility_check(model, omega):
    """Is the array F(omega, e_i, e_j) of full rank"""
    return linalg.rank(model.polar_matrix(omega)) == model.DIMENSION
