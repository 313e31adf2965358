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
Terracini: the dimension of the secant variety at a generic point x + y is the dimension of the span
of the (affine) tangent spaces at x and y.

Each family knows its parametrization and the first order perturbations of it; the tangent space of
the affine cone at a point is spanned by those perturbations.
"""
import itertools

from vsc.severi import linalg
from vsc.severi.common import GenericityError, SeveriError
from vsc.severi.sampling import random_vector


def _outer(v, w):
    return [a * b for a in v for b in w]


def _unit(size, idx):
    return [int(i == idx) for i in range(size)]


class TangentFamily:
    """A parametrized variety; params are lists of integer vectors"""
    NAME = None

    def ambient_dim(self):
        raise NotImplementedError

    def random_params(self, rng, bound):
        raise NotImplementedError

    def tangent_space(self, params):
        raise NotImplementedError

    def __repr__(self):
        return self.NAME


class Segre(TangentFamily):
    """P^a x P^b in P((a+1)(b+1) - 1): v (x) w"""

    def __init__(self, first, second):
        self.sizes = (first + 1, second + 1)
        self.NAME = f"segre({first},{second})"

    def ambient_dim(self):
        return self.sizes[0] * self.sizes[1]

    def random_params(self, rng, bound):
        return [random_vector(rng, size, bound) for size in self.sizes]

    def tangent_space(self, params):
        v, w = params
        return ([_outer(_unit(len(v), i), w) for i in range(len(v))]
                + [_outer(v, _unit(len(w), j)) for j in range(len(w))])


class Veronese2(TangentFamily):
    """nu_2(P^k): v v^T in the coordinates (i <= j)"""

    def __init__(self, k):
        self.size = k + 1
        self.pairs = list(itertools.combinations_with_replacement(range(self.size), 2))
        self.NAME = f"veronese2({k})"

    def ambient_dim(self):
        return len(self.pairs)

    def random_params(self, rng, bound):
        return [random_vector(rng, self.size, bound)]

    def tangent_space(self, params):
        v = params[0]
        return [[int(i == l) * v[j] + v[i] * int(j == l) for i, j in self.pairs] for l in range(self.size)]


class Grassmann2(TangentFamily):
    """G(2, k+1) in its Pluecker embedding: v ^ w"""

    def __init__(self, k):
        self.size = k + 1
        self.pairs = list(itertools.combinations(range(self.size), 2))
        self.NAME = f"grassmann2({k})"

    def ambient_dim(self):
        return len(self.pairs)

    def random_params(self, rng, bound):
        return [random_vector(rng, self.size, bound), random_vector(rng, self.size, bound)]

    def _wedge(self, v, w):
        return [v[i] * w[j] - v[j] * w[i] for i, j in self.pairs]

    def tangent_space(self, params):
        v, w = params
        units = [_unit(self.size, l) for l in range(self.size)]
        return [self._wedge(e, w) for e in units] + [self._wedge(v, e) for e in units]


class SegreVeronese(TangentFamily):
    """P^1 x nu_2(P^1) in P^5: v (x) (u0^2, u0 u1, u1^2)"""
    NAME = "segre_veronese(1,1)"

    def ambient_dim(self):
        return 6

    def random_params(self, rng, bound):
        return [random_vector(rng, 2, bound), random_vector(rng, 2, bound)]

    def tangent_space(self, params):
        v, u = params
        nu = [u[0] * u[0], u[0] * u[1], u[1] * u[1]]
        dnu = [[2 * u[0], u[1], 0], [0, u[0], 2 * u[1]]]
        return [_outer(_unit(2, i), nu) for i in range(2)] + [_outer(v, d) for d in dnu]


class ModelTangents(TangentFamily):
    """
    X of one of the four cubic models; params are points of X and the tangent space at x
    is the kernel of u -> x # u (of dimension n + 1).
    """

    def __init__(self, model):
        self.model = model
        self.NAME = f"model({model.NAME})"

    def ambient_dim(self):
        return self.model.DIMENSION

    def random_params(self, rng, bound):
        return [self.model.sample_X(rng, bound)]

    def tangent_space(self, params):
        model = self.model
        x = params[0]
        columns = [model.cross(x, model.basis(i)).coords for i in range(model.DIMENSION)]
        tangent = linalg.nullspace(linalg.transpose(columns), ncols=model.DIMENSION)
        if len(tangent) != model.n + 1:
            raise SeveriError("tangent space of %s at %r has dimension %s, expected %s",
                              model.NAME, x, len(tangent), model.n + 1)
        return tangent


def terracini_dim(family, s_params, t_params):
    """dim span(T_s, T_t), the affine dimension of the secant variety at a generic point"""
    vectors = family.tangent_space(s_params) + family.tangent_space(t_params)
    if not vectors:
        raise GenericityError("empty tangent spaces for %s", family)
    return linalg.rank(vectors)


def generic_terracini_dim(family, rng, bound=10, retries=8):
    """
    Terracini dimension at random parameters: the maximum over a few draws (a degenerate draw can only
    lower the rank).
    """
    return max(terracini_dim(family, family.random_params(rng, bound), family.random_params(rng, bound))
               for _ in range(retries))
