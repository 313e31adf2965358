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
Cubic spaces: a vector space V with a cubic form det, a basepoint c with det(c) = 1, and everything
derived from them (polarizations, trace form, sharp, cross product, U-operator).

Each concrete model (Veronese, Segre, Pfaffian, exceptional) subclasses CubicSpace and only provides
the procedural determinant, the basepoint and a way to produce rank-one points. The determinant is
expanded once with sympy into a sparse monomial table; all evaluation goes through that table.
"""
import functools
import logging
from fractions import Fraction

import sympy

from vsc.severi import linalg
from vsc.severi.common import (
    GenericityError, ModelMismatchError, SamplerError, SeveriError, fmt_rational, load_plugins, rational, what_class,
)
from vsc.severi.sampling import choice, random_rational, random_vector


class _Vector:
    """Immutable coordinate vector tagged with a model name"""

    def __init__(self, model, coords):
        self.model = model
        self.coords = tuple(rational(x) for x in coords)

    def _new(self, coords):
        return self.__class__(self.model, coords)

    def _check(self, other):
        if not isinstance(other, self.__class__) or other.model != self.model:
            raise ModelMismatchError("Cannot combine %r with %r", self, other)

    def __add__(self, other):
        self._check(other)
        return self._new([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return self._new([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self._new([-a for a in self.coords])

    def __mul__(self, scalar):
        if isinstance(scalar, _Vector):
            raise SeveriError("Vectors can only be multiplied by scalars, got %r", scalar)
        scalar = rational(scalar)
        return self._new([scalar * a for a in self.coords])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = rational(scalar)
        if scalar == 0:
            raise GenericityError("Division of %r by zero", self)
        return self._new([a / scalar for a in self.coords])

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.model == other.model and self.coords == other.coords

    def __hash__(self):
        return hash((self.__class__.__name__, self.model, self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, idx):
        return self.coords[idx]

    def __repr__(self):
        return f"{self.__class__.__name__}({self.model}: {', '.join(fmt_rational(x) for x in self.coords)})"

    def is_zero(self):
        return linalg.is_zero(self.coords)

    def proportional(self, other):
        """Projective equality: all 2x2 minors vanish"""
        self._check(other)
        return linalg.proportional(self.coords, other.coords)


class Point(_Vector):
    """A vector of V"""


class Covector(_Vector):
    """A linear form on V, in the dual basis"""

    def __call__(self, point):
        if not isinstance(point, Point) or point.model != self.model:
            raise ModelMismatchError("Cannot evaluate %r on %r", self, point)
        return linalg.dot(self.coords, point.coords)


def _compile(expr, symbols):
    """
    Sparse tables for a homogeneous cubic, its gradient and its Hessian.

    @return: (list of (coefficient, index tuple) for the cubic,
              list per coordinate of (coefficient, index tuple) for the partial derivatives,
              list of (coefficient, k, i, j) with d_i d_j of the cubic = sum of coefficient * z_k)
    """
    poly = sympy.Poly(sympy.expand(expr), *symbols)
    terms = []
    for exponents, coeff in poly.terms():
        idxs = tuple(i for i, e in enumerate(exponents) for _ in range(e))
        terms.append((Fraction(int(coeff.p), int(coeff.q)), idxs))

    gradient = [dict() for _ in symbols]
    for coeff, idxs in terms:
        for pos, var in enumerate(idxs):
            if var in idxs[:pos]:
                continue
            rest = list(idxs)
            rest.remove(var)
            key = tuple(rest)
            table = gradient[var]
            table[key] = table.get(key, 0) + coeff * idxs.count(var)
    gradient = [[(c, k) for k, c in sorted(table.items())] for table in gradient]

    hessian = {}
    for i, table in enumerate(gradient):
        for coeff, pair in table:
            for pos, j in enumerate(pair):
                if j in pair[:pos]:
                    continue
                key = (pair[1 - pos], i, j)
                hessian[key] = hessian.get(key, 0) + coeff * pair.count(j)
    return terms, gradient, [(c, k, i, j) for (k, i, j), c in sorted(hessian.items()) if c]


def _evaluate(terms, coords):
    total = Fraction(0)
    for coeff, idxs in terms:
        value = coeff
        for i in idxs:
            value *= coords[i]
            if not value:
                break
        total += value
    return total


class CubicSpace:
    """Base class for the four models"""
    HIDDEN = True

    NAME = None
    DIMENSION = None  # m + 1
    VARIETY_DIM = None  # n
    COORDINATE_NAMES = None

    # how sample_X produces its raw rank-one points
    PRIMARY_STRATEGY = 'decomposable'
    SAMPLE_STRATEGIES = ('primary', 'primary', 'closure')
    TRANSPORT_BOUND = 2

    def __init__(self):
        self.m = self.DIMENSION - 1
        self.n = self.VARIETY_DIM
        self.log = logging.getLogger(self.__class__.__name__)
        if len(self.COORDINATE_NAMES or ()) != self.DIMENSION:
            raise SeveriError("%s names %s coordinates, expected %s", self.NAME, len(self.COORDINATE_NAMES or ()),
                              self.DIMENSION)

        symbols = sympy.symbols(f'z0:{self.DIMENSION}')
        self.terms, self.gradient_terms, self.hessian_terms = _compile(self.cubic(list(symbols)), symbols)
        self.log.debug("%s: compiled cubic with %s terms", self.NAME, len(self.terms))

        self.basepoint = self.point(self.basepoint_coords())
        if self.det(self.basepoint) != 1:
            raise SeveriError("Basepoint of %s has det %s, expected 1", self.NAME, self.det(self.basepoint))

        self.gram = self._trace_gram()
        self.gram_sparse = linalg.sparsify(self.gram)
        try:
            self.gram_inverse = linalg.sparsify(linalg.inverse(self.gram))
        except GenericityError:
            raise SeveriError("Trace form of %s is degenerate", self.NAME)
        self.log.debug("%s: trace form inverse has %s nonzero entries", self.NAME,
                       sum(len(row) for row in self.gram_inverse))

        if self.sharp(self.basepoint) != self.basepoint:
            raise SeveriError("sharp(c) != c for %s", self.NAME)

    @classmethod
    def _is_model_for(cls, name):
        return name is not None and name.lower() == cls.NAME

    def __repr__(self):
        return f"{self.__class__.__name__}(n={self.n}, m={self.m})"

    # model specific
    def cubic(self, coords):
        """Procedural determinant; must only use ring operations so it also works on sympy symbols"""
        raise NotImplementedError

    def basepoint_coords(self):
        raise NotImplementedError

    def decomposable(self, rng, bound):
        """A nonzero point of X built from the model's own rank-one recipe"""
        raise NotImplementedError

    # constructors
    def point(self, coords):
        coords = list(coords)
        if len(coords) != self.DIMENSION:
            raise ModelMismatchError("%s needs %s coordinates, got %s", self.NAME, self.DIMENSION, len(coords))
        return Point(self.NAME, coords)

    def covector(self, coords):
        coords = list(coords)
        if len(coords) != self.DIMENSION:
            raise ModelMismatchError("%s needs %s coordinates, got %s", self.NAME, self.DIMENSION, len(coords))
        return Covector(self.NAME, coords)

    def zero(self):
        return self.point([0] * self.DIMENSION)

    def basis(self, idx):
        return self.point([int(i == idx) for i in range(self.DIMENSION)])

    def _own(self, *vectors):
        for vec in vectors:
            if not isinstance(vec, _Vector) or vec.model != self.NAME:
                raise ModelMismatchError("%r does not belong to model %s", vec, self.NAME)

    # the cubic and its polarizations
    def det_reference(self, w):
        """det through the procedural definition"""
        self._own(w)
        return rational(self.cubic(list(w.coords)))

    def det(self, w):
        self._own(w)
        return _evaluate(self.terms, w.coords)

    def nabla(self, w):
        """Gradient of det at w, as a plain list"""
        self._own(w)
        return [_evaluate(table, w.coords) for table in self.gradient_terms]

    def grad(self, w):
        """The covector F(w, w, .)"""
        return self.covector([x / 3 for x in self.nabla(w)])

    def bilinear_covector(self, u, v):
        """The covector F(u, v, .)"""
        both = self.nabla(u + v)
        return self.covector([(s - a - b) / 6 for s, a, b in zip(both, self.nabla(u), self.nabla(v))])

    def trilinear(self, u, v, w):
        """Symmetric trilinear form F(u, v, w), by polarization of det"""
        self._own(u, v, w)
        det = self.det
        total = det(u + v + w) - det(u + v) - det(u + w) - det(v + w) + det(u) + det(v) + det(w)
        return total / 6

    def polar_matrix(self, x):
        """The array F(x, e_i, e_j) over the standard basis, i.e. a sixth of the Hessian of det at x"""
        self._own(x)
        coords = x.coords
        matrix = [[Fraction(0)] * self.DIMENSION for _ in range(self.DIMENSION)]
        for coeff, k, i, j in self.hessian_terms:
            if coords[k]:
                matrix[i][j] += coeff * coords[k]
        return [[value / 6 for value in row] for row in matrix]

    # trace form and everything transported through it
    def _trace_gram(self):
        c = self.basepoint
        g = self.grad(c).coords
        fc = self.polar_matrix(c)
        return [[9 * g[i] * g[j] - 6 * fc[i][j] for j in range(self.DIMENSION)] for i in range(self.DIMENSION)]

    def trace_form(self, x, y):
        """T(x, y) = 9 F(c,c,x) F(c,c,y) - 6 F(c,x,y)"""
        self._own(x, y)
        return linalg.dot(linalg.sparse_matvec(self.gram_sparse, x.coords), y.coords)

    def transport(self, x):
        """iota(x) = T(x, .)"""
        self._own(x)
        return self.covector(linalg.sparse_matvec(self.gram_sparse, x.coords))

    def untransport(self, l):
        """iota^-1(l): the point x with T(x, .) = l"""
        self._own(l)
        return self.point(linalg.sparse_matvec(self.gram_inverse, l.coords))

    def sharp(self, x):
        """The point x# with T(x#, y) = 3 F(x, x, y) for all y"""
        return self.point(linalg.sparse_matvec(self.gram_inverse, self.nabla(x)))

    def cross(self, x, y):
        """x # y = (x + y)# - x# - y#"""
        self._own(x, y)
        return self.sharp(x + y) - self.sharp(x) - self.sharp(y)

    def u_operator(self, p, w):
        """U_p(w) = T(p, w) p - p# # w"""
        return self.trace_form(p, w) * p - self.cross(self.sharp(p), w)

    def u_matrix(self, p):
        """Columns of the linear map w -> U_p(w), one per basis vector"""
        return [self.u_operator(p, self.basis(i)) for i in range(self.DIMENSION)]

    def inverse(self, w):
        """w^-1 = w# / det(w)"""
        d = self.det(w)
        if d == 0:
            raise GenericityError("%r lies on the secant variety, no inverse", w)
        return self.sharp(w) / d

    # membership
    def is_on_X(self, w):
        on_x = self.sharp(w).is_zero()
        if on_x != self.grad(w).is_zero():
            raise SeveriError("sharp and grad disagree on X membership of %r", w)
        return on_x

    def is_on_sec(self, w):
        return self.det(w) == 0

    # sampling
    def _sample_x_decomposable(self, rng, bound):
        return self.decomposable(rng, bound)

    def _sample_x_transport(self, rng, bound):
        """U_p maps X into X for invertible p (sharp(U_p x) = U_{p#} x#)"""
        p = self.sample_off_sec(rng, self.TRANSPORT_BOUND)
        return self.u_operator(p, self.decomposable(rng, bound))

    def _sample_x_primary(self, rng, bound):
        return getattr(self, f'_sample_x_{self.PRIMARY_STRATEGY}')(rng, bound)

    def _sample_x_closure(self, rng, bound):
        """For x, y on X, P = x + y has det(P) = 0, so P# is on X (P## = det(P) P = 0)"""
        return self.sharp(self._sample_x_primary(rng, bound) + self._sample_x_primary(rng, bound))

    def sample_X(self, rng, bound=10, retries=64):
        """Nonzero random point with sharp = 0"""
        for attempt in range(retries):
            strategy = choice(rng, self.SAMPLE_STRATEGIES)
            x = random_rational(rng, bound) * getattr(self, f'_sample_x_{strategy}')(rng, bound)
            if not x.is_zero() and self.is_on_X(x):
                return x
            self.log.debug("%s: sample_X attempt %s (%s) rejected", self.NAME, attempt, strategy)
        raise SamplerError("%s: no point of X after %s attempts", self.NAME, retries)

    def sample_sec(self, rng, bound=10, retries=64):
        """x + y for independent samples of X"""
        p = self.sample_X(rng, bound, retries) + self.sample_X(rng, bound, retries)
        if not self.is_on_sec(p):
            raise SeveriError("%s: secant point %r is not on the cubic", self.NAME, p)
        return p

    def sample_off_sec(self, rng, bound=10, retries=64):
        """Random integer point with det != 0"""
        for attempt in range(retries):
            w = self.point(random_vector(rng, self.DIMENSION, bound))
            if self.det(w) != 0:
                return w
            self.log.debug("%s: sample_off_sec attempt %s on the cubic", self.NAME, attempt)
        raise SamplerError("%s: no point off the secant variety after %s attempts", self.NAME, retries)

    def sample_point(self, rng, bound=10):
        """Random integer point, no conditions"""
        return self.point(random_vector(rng, self.DIMENSION, bound))


def what_model(name):
    """Return the CubicSpace subclass for name, and all known model classes"""
    import vsc.severi.cubic as cubicm
    load_plugins(cubicm)
    return what_class(name, CubicSpace, '_is_model_for')


@functools.lru_cache(maxsize=None)
def get_model(name):
    """Shared instance of the named model; compiling the cubic is done once per process"""
    klass, found = what_model(name)
    if klass is None:
        raise SeveriError("Unknown model %s (known: %s)", name, ', '.join(sorted(k.NAME for k in found)))
    return klass()


def model_names():
    """Names of all models, in the order of their dimension"""
    _, found = what_model(None)
    return [k.NAME for k in sorted(found, key=lambda k: k.DIMENSION)]
