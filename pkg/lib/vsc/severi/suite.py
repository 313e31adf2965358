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
Verification suites: every identity of the algebra, cubic and geometry layers as a seeded check.

A check is a method check_<name>(target, rng) returning (ok, inputs); inputs are recorded so a failure
can be reproduced from (seed, suite, target, check, trial). Any SeveriError raised by a check (sampler
budget exhausted, non-generic input, violated assertion) is recorded as a failed trial.
"""
import logging
import time
from fractions import Fraction

import sympy

from vsc.severi import linalg
from vsc.severi.algebra.composition import (
    TAGS, CompositionElement, associator, conjugate, norm_form,
)
from vsc.severi.common import GenericityError, SamplerError, SeveriError
from vsc.severi.cubic.space import get_model
from vsc.severi.geometry import duality, homogeneity, secant, terracini
from vsc.severi.report import VerificationReport, load_fixture
from vsc.severi.sampling import random_vector, stream


def exact_scalar(value):
    """sympy Rational to Fraction"""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def exact(matrix):
    """sympy Matrix to nested lists of Fractions"""
    return [[exact_scalar(x) for x in row] for row in matrix.tolist()]


def scaled(trials, factor):
    """Trial count for a check: trials * factor, at least 1"""
    return max(1, int(trials * factor))


class Suite:
    """Runs the checks of a suite on one target"""
    HIDDEN = True

    NAME = None
    # (check name, trial factor)
    CHECKS = []

    def __init__(self, seed, trials=200, bound=10, retries=64, timing=False):
        self.seed = seed
        self.trials = trials
        self.bound = bound
        self.retries = retries
        self.timing = timing
        self.log = logging.getLogger(self.__class__.__name__)

    def applies(self, check, target):  # pylint: disable=unused-argument
        return True

    def run(self, target, name):
        """VerificationReport for target (called name in the report)"""
        report = VerificationReport(self.NAME, name, self.seed)
        start = time.time()
        for check, factor in self.CHECKS:
            if not self.applies(check, target):
                continue
            method = getattr(self, f'check_{check}')
            record = report.record(check)
            for trial in range(scaled(self.trials, factor)):
                rng = stream(self.seed, self.NAME, name, check, trial)
                try:
                    ok, inputs = method(target, rng)
                    error = None
                except SeveriError as err:
                    ok, inputs, error = False, {'seed': self.seed, 'trial': trial}, err
                if not ok:
                    self.log.error("%s/%s/%s trial %s failed: %s %s", self.NAME, name, check, trial, inputs, error)
                record.add(trial, ok, inputs, error=error)
            self.log.debug("%s/%s/%s: %s/%s", self.NAME, name, check, record.passed, record.attempted)
        if self.timing:
            report.timing = time.time() - start
        self.log.info("suite %s on %s: %s/%s passed", self.NAME, name, report.passed, report.attempted)
        return report

    # shared samplers
    def x_sample(self, model, rng):
        return model.sample_X(rng, self.bound, self.retries)

    def point(self, model, rng):
        return model.sample_point(rng, self.bound)

    def off_sec(self, model, rng):
        return model.sample_off_sec(rng, self.bound, self.retries)


class CompositionSuite(Suite):
    """algebra-core: the composition algebra laws, per algebra"""
    HIDDEN = False
    NAME = 'composition'
    CHECKS = [
        ('multiplicativity', 1),
        ('alternativity', 1),
        ('conjugation', 1),
        ('associativity', 1),
        ('associator_witness', 0),
    ]

    def applies(self, check, target):
        return check != 'associator_witness' or target.name == 'O'

    def element(self, tag, rng):
        return CompositionElement(tag, random_vector(rng, tag.dim, self.bound))

    def check_multiplicativity(self, tag, rng):
        x, y = self.element(tag, rng), self.element(tag, rng)
        return norm_form(x * y) == norm_form(x) * norm_form(y), {'x': x.coords, 'y': y.coords}

    def check_alternativity(self, tag, rng):
        x, y = self.element(tag, rng), self.element(tag, rng)
        ok = x * (x * y) == (x * x) * y and (y * x) * x == y * (x * x)
        return ok, {'x': x.coords, 'y': y.coords}

    def check_conjugation(self, tag, rng):
        x, y = self.element(tag, rng), self.element(tag, rng)
        ok = conjugate(x * y) == conjugate(y) * conjugate(x) and conjugate(conjugate(x)) == x
        return ok, {'x': x.coords, 'y': y.coords}

    def check_associativity(self, tag, rng):
        """Associative below O; O is only alternative"""
        x, y, z = self.element(tag, rng), self.element(tag, rng), self.element(tag, rng)
        zero = associator(x, y, z).is_zero()
        return zero or tag.dim == 8, {'x': x.coords, 'y': y.coords, 'z': z.coords}

    def check_associator_witness(self, tag, rng):
        """(e1 e2) e4 - e1 (e2 e4) matches the fixture, and random triples are non-associative"""
        e1, e2, e4 = [CompositionElement.unit(tag, i) for i in (1, 2, 4)]
        expected = [Fraction(x) for x in load_fixture('associator')['value']]
        ok = list(associator(e1, e2, e4).coords) == expected
        for _ in range(self.retries):
            x, y, z = self.element(tag, rng), self.element(tag, rng), self.element(tag, rng)
            if not associator(x, y, z).is_zero():
                return ok, {'x': x.coords, 'y': y.coords, 'z': z.coords}
        return False, {}


class AlgebraSuite(Suite):
    """cubic-spaces: the identities of the four cubic models"""
    HIDDEN = False
    NAME = 'verify-algebra'
    CHECKS = [
        ('adjoint_identity', 5),
        ('det_of_sharp', 1),
        ('grad_sharp', 1),
        ('euler', 1),
        ('trilinear', 1),
        ('compiled_cubic', 0.1),
        ('trace_basepoint', 0),
        ('gram_rank', 0),
        ('samplers', 1),
        ('u_operator', 1),
        ('segre_oracles', 1),
    ]

    def applies(self, check, model):
        return check != 'segre_oracles' or model.NAME == 'segre'

    def check_adjoint_identity(self, model, rng):
        x = self.point(model, rng)
        return model.sharp(model.sharp(x)) == model.det(x) * x, {'x': x}

    def check_det_of_sharp(self, model, rng):
        x = self.point(model, rng)
        return model.det(model.sharp(x)) == model.det(x) ** 2, {'x': x}

    def check_grad_sharp(self, model, rng):
        x, y = self.point(model, rng), self.point(model, rng)
        return model.grad(x)(y) == model.trace_form(model.sharp(x), y) / 3, {'x': x, 'y': y}

    def check_euler(self, model, rng):
        w = self.point(model, rng)
        return model.grad(w)(w) == model.det(w), {'w': w}

    def check_trilinear(self, model, rng):
        u, v, w = self.point(model, rng), self.point(model, rng), self.point(model, rng)
        value = model.trilinear(u, v, w)
        ok = (value == model.trilinear(v, u, w) == model.trilinear(w, v, u)
              and model.trilinear(w, w, w) == model.det(w)
              and model.bilinear_covector(u, v)(w) == value)
        return ok, {'u': u, 'v': v, 'w': w}

    def check_compiled_cubic(self, model, rng):
        w = self.point(model, rng)
        return model.det(w) == model.det_reference(w), {'w': w}

    def check_trace_basepoint(self, model, rng):  # pylint: disable=unused-argument
        c = model.basepoint
        ok = model.trace_form(c, c) == 3 and model.sharp(c) == c and model.det(c) == 1
        return ok, {'c': c}

    def check_gram_rank(self, model, rng):  # pylint: disable=unused-argument
        return linalg.rank(model.gram) == model.DIMENSION, {'model': model.NAME}

    def check_samplers(self, model, rng):
        x = self.x_sample(model, rng)
        p = model.sample_sec(rng, self.bound, self.retries)
        ok = model.is_on_X(x) and not x.is_zero() and model.is_on_sec(p)
        return ok, {'x': x, 'p': p}

    def check_u_operator(self, model, rng):
        p, w = self.point(model, rng), self.point(model, rng)
        ok = (model.u_operator(model.basepoint, w) == w
              and model.u_operator(p, model.sharp(p)) == model.det(p) * p)
        return ok, {'p': p, 'w': w}

    def check_segre_oracles(self, model, rng):
        """sharp = adjugate, T = tr(xy), U_p(w) = p w p"""
        x, y = self.point(model, rng), self.point(model, rng)
        mx, my = sympy.Matrix(model.to_matrix(x)), sympy.Matrix(model.to_matrix(y))
        adj = model.from_matrix(exact(mx.adjugate()))
        pwp = model.from_matrix(exact(mx * my * mx))
        ok = (model.sharp(x) == adj
              and model.trace_form(x, y) == exact_scalar((mx * my).trace())
              and model.u_operator(x, y) == pwp)
        return ok, {'x': x, 'y': y}


class GeometrySuite(Suite):
    """severi-geometry: secants, duality, entry loci and homogeneity"""
    HIDDEN = False
    NAME = 'verify-geometry'
    CHECKS = [
        ('secant_on_cubic', 1),
        ('duality_pairs', 1),
        ('l_rank', 0.25),
        ('involution', 3),
        ('cremona_on_Y', 1),
        ('segre_differential', 0.25),
        ('diamond', 0.05),
        ('total_transform', 1),
        ('entry_locus', 0.25),
        ('tangent_char', 0.25),
        ('same_entry_locus', 0.1),
        ('companion', 0.1),
        ('homogeneity', 0.1),
        ('sec_transitivity', 0.1),
        ('gram_invertibility', 0.5),
        ('terracini', 0),
    ]
    DIAMOND_TRIPLES = 10
    HOMOGENEITY_CHECKS = 20

    def applies(self, check, model):
        return check != 'segre_differential' or model.NAME == 'segre'

    def _retry(self, func, what):
        """Call func until it stops raising GenericityError"""
        for _ in range(self.retries):
            try:
                return func()
            except GenericityError:
                continue
        raise SamplerError("%s: genericity retry budget of %s exhausted", what, self.retries)

    def check_secant_on_cubic(self, model, rng):
        x, y = self.x_sample(model, rng), self.x_sample(model, rng)
        return model.det(x + y) == 0, {'x': x, 'y': y}

    def check_duality_pairs(self, model, rng):
        """L_w(x) is the tangent hyperplane at the second point, and lies on Y"""
        w = self.off_sec(model, rng)

        def pair():
            x = self.x_sample(model, rng)
            return x, duality.second_point(model, x, w)
        x, s = self._retry(pair, 'duality_pairs')
        image = duality.l_map(model, w, x)
        ok = (model.det(s) == 0
              and not model.grad(s).is_zero()
              and image.proportional(model.grad(s))
              and duality.dual_det(model, image) == 0
              and duality.is_on_Y(model, image))
        return ok, {'w': w, 'x': x}

    def check_l_rank(self, model, rng):
        w = self.off_sec(model, rng)
        return duality.l_matrix(model, w).rank() == model.DIMENSION, {'w': w}

    def check_involution(self, model, rng):
        w = self.off_sec(model, rng)
        return duality.involution_check(model, w), {'w': w}

    def check_diamond(self, model, rng):
        w = self.off_sec(model, rng)
        triples = [(self.point(model, rng), self.point(model, rng), self.point(model, rng))
                   for _ in range(self.DIAMOND_TRIPLES)]
        ok, scalar = duality.diamond_check(model, w, triples)
        return ok and scalar == duality.diamond_closed_form(model, w), {'w': w, 'scalar': scalar}

    def check_total_transform(self, model, rng):
        x = self.x_sample(model, rng)
        d = self._retry(lambda: self._limit_direction(model, x, rng), 'total_transform')
        limit = duality.total_transform_limit(model, x, d)
        return duality.dual_det(model, limit) == 0, {'x': x, 'd': d}

    def _limit_direction(self, model, x, rng):
        d = self.point(model, rng)
        if model.bilinear_covector(x, d).is_zero():
            raise GenericityError("degenerate direction")
        return d

    def check_entry_locus(self, model, rng):
        decomp = secant.sample_decomposition(model, rng, self.bound, self.retries)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        ok = (locus.dimension == model.n // 2 + 2
              and linalg.rank(locus.quadric_gram) == locus.dimension
              and locus.q(decomp.x) == 0 and locus.q(decomp.y) == 0)
        for _ in range(3):
            q = locus.quadric_point(rng, self.bound, self.retries)
            ok = ok and model.is_on_X(q)
        inside = secant.sigma_inside_sample(model, locus, rng, self.bound, self.retries)
        ok = ok and not model.is_on_X(inside)
        return ok, {'x': decomp.x, 'y': decomp.y}

    def check_tangent_char(self, model, rng):
        """One instance inside Sigma_P (true) and one outside (false)"""
        decomp = secant.sample_decomposition(model, rng, self.bound, self.retries)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        inside = secant.sigma_inside_sample(model, locus, rng, self.bound, self.retries)
        outside = secant.sigma_outside_sample(model, locus, rng, self.bound, self.retries)
        ok = (secant.tangent_char_check(model, decomp.P, inside)
              and not secant.tangent_char_check(model, decomp.P, outside))
        return ok, {'x': decomp.x, 'y': decomp.y, 'inside': inside, 'outside': outside}

    def check_companion(self, model, rng):
        decomp = secant.sample_decomposition(model, rng, self.bound, self.retries)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])

        def base():
            w0 = self.off_sec(model, rng)
            return w0, secant.companion_point(model, decomp.P, w0, locus=locus)
        w0, x = self._retry(base, 'companion')
        q = locus.quadric_point(rng, self.bound, self.retries)
        ok = (secant.cone_check(model, x, q)
              and x.proportional(model.u_operator(w0, model.sharp(decomp.P))))
        return ok, {'x': decomp.x, 'y': decomp.y, 'w0': w0, 'q': q}

    def check_same_entry_locus(self, model, rng):
        """P2 in Sigma_P - X has Sigma_P2 = Sigma_P"""
        decomp = secant.sample_decomposition(model, rng, self.bound, self.retries)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        inside = secant.sigma_inside_sample(model, locus, rng, self.bound, self.retries)
        ok = secant.same_entry_locus(model, decomp.P, inside, locus=locus)
        return ok, {'x': decomp.x, 'y': decomp.y, 'p2': inside}

    def check_cremona_on_Y(self, model, rng):
        p = secant.sample_decomposition(model, rng, self.bound, self.retries).P
        star, det = duality.cremona(model, p)
        return det == 0 and duality.is_on_Y(model, star), {'p': p}

    def check_segre_differential(self, model, rng):
        """iota^-1 L_M(B) = -(det(M)^2 / 3) M^-1 B M^-1"""
        m, b = self.off_sec(model, rng), self.point(model, rng)
        mm, mb = sympy.Matrix(model.to_matrix(m)), sympy.Matrix(model.to_matrix(b))
        inv = mm.inv()
        expected = model.from_matrix(exact(-mm.det() ** 2 / 3 * inv * mb * inv))
        return model.untransport(duality.l_map(model, m, b)) == expected, {'m': m, 'b': b}

    def check_homogeneity(self, model, rng):
        x, x2 = self.x_sample(model, rng), self.x_sample(model, rng)
        matrix = homogeneity.homogeneity_map(model, x, x2, rng, self.bound, self.retries,
                                             checks=self.HOMOGENEITY_CHECKS)
        return homogeneity.apply_matrix(model, matrix, x).proportional(x2), {'x': x, 'x2': x2}

    def check_sec_transitivity(self, model, rng):
        decomp = secant.sample_decomposition(model, rng, self.bound, self.retries)
        w0 = homogeneity.good_w0_for(model, decomp.P, rng, self.bound, self.retries)
        ok = (homogeneity.sec_transitivity_rank(model, decomp.P, w0) >= model.m
              and homogeneity.sec_kernel_intersection(model, decomp.P, w0) == 0)
        return ok, {'p': decomp.P, 'w0': w0}

    def check_gram_invertibility(self, model, rng):
        omega = self.off_sec(model, rng)
        ok = duality.gram_invertibility_check(model, omega)
        if self.log.isEnabledFor(logging.DEBUG):
            # observed only, never asserted
            x = self.x_sample(model, rng)
            self.log.debug("%s: F(x,.,.) on X has full rank: %s", model.NAME,
                           duality.gram_invertibility_check(model, x))
        return ok, {'omega': omega}

    def check_terracini(self, model, rng):
        family = terracini.ModelTangents(model)
        dim = terracini.generic_terracini_dim(family, rng, self.bound, retries=2)
        return dim == model.m, {'dim': dim}


def run_models(suite, names):
    """One report per model"""
    return [suite.run(get_model(name), name) for name in names]


def run_composition(suite):
    """One report per composition algebra"""
    return [suite.run(tag, tag.name) for tag in sorted(TAGS.values(), key=lambda t: t.dim)]
