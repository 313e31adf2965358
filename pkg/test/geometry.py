#
# Copyright 2024-2024 Ghent University
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
Tests for the vsc.severi.geometry modules
"""
import logging
from fractions import Fraction

from mock import patch
from vsc.install.testing import TestCase

from vsc.severi import linalg
from vsc.severi.common import GenericityError, SeveriError
from vsc.severi.cubic.space import get_model
from vsc.severi.geometry import duality, homogeneity, secant, terracini
from vsc.severi.sampling import stream
from vsc.severi.suite import GeometrySuite, run_models

MODELS = ['veronese', 'segre', 'pfaffian', 'exceptional']


def rng_for(name, check, trial=0):
    return stream(1234, 'test', name, check, trial)


def segre_point(*rows):
    return get_model('segre').point([entry for row in rows for entry in row])


IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
P_DIAG = ((1, 0, 0), (0, 1, 0), (0, 0, 0))


class TestDuality(TestCase):
    """L_w0, the Cremona transformation and the dual cubic"""

    def setUp(self):
        super().setUp()
        self.segre = get_model('segre')
        self.identity = segre_point(*IDENTITY)

    def test_second_point(self):
        """x = E11, w0 = I meet the secant variety again at diag(0, -1, -1)"""
        model = self.segre
        s = duality.second_point(model, model.basis(0), self.identity)
        self.assertEqual(s, segre_point((0, 0, 0), (0, -1, 0), (0, 0, -1)))
        self.assertEqual(model.det(s), 0)

        image = duality.l_map(model, self.identity, model.basis(0))
        self.assertTrue(image.proportional(model.grad(s)))
        self.assertTrue(duality.is_on_Y(model, image))

        self.assertErrorRegex(SeveriError, 'needs a point of X', duality.second_point, model, self.identity,
                              self.identity)
        self.assertErrorRegex(GenericityError, 'secant variety', duality.second_point, model, model.basis(0),
                              segre_point(*P_DIAG))

    def test_l_matrix(self):
        """L_w0 is invertible off the secant variety"""
        for name in MODELS:
            model = get_model(name)
            w0 = model.sample_off_sec(rng_for(name, 'l_matrix'))
            lmap = duality.l_matrix(model, w0)
            self.assertEqual(lmap.rank(), model.DIMENSION)
            self.assertTrue(lmap.is_invertible())
            x = model.sample_point(rng_for(name, 'l_matrix', 1))
            self.assertEqual(lmap.solve(lmap.apply(x)), x)

    def test_cremona(self):
        """G on the three regimes of the Segre model"""
        model = self.segre
        star, det = duality.cremona(model, self.identity)
        self.assertEqual(det, 1)
        self.assertEqual(star, model.covector([Fraction(1, 3), 0, 0, 0, Fraction(1, 3), 0, 0, 0, Fraction(1, 3)]))

        star, det = duality.cremona(model, segre_point(*P_DIAG))
        self.assertEqual(det, 0)
        self.assertEqual(star, model.covector([0] * 8 + [Fraction(1, 3)]))
        self.assertTrue(duality.is_on_Y(model, star))

        self.assertErrorRegex(GenericityError, 'total-transform', duality.cremona, model, model.basis(0))

    def test_involution(self):
        """sharp(sharp(w0)) = det(w0) w0 on every model"""
        for name in MODELS:
            model = get_model(name)
            w0 = model.sample_off_sec(rng_for(name, 'involution'))
            self.assertTrue(duality.involution_check(model, w0))
        self.assertErrorRegex(GenericityError, 'secant variety', duality.involution_check, self.segre,
                              segre_point(*P_DIAG))

    def test_segre_differential(self):
        """iota^-1 L_I(E33) = -E33 / 3"""
        model = self.segre
        image = model.untransport(duality.l_map(model, self.identity, model.basis(8)))
        self.assertEqual(image, model.basis(8) / -3)
        differential = duality.cremona_differential(model, 2 * self.identity, model.basis(8))
        self.assertEqual(differential, duality.l_map(model, 2 * self.identity, model.basis(8)) / 64)

    def test_diamond(self):
        """the scalar of the dual cubic is -det(w0)^4 / 27"""
        model = self.segre
        self.assertEqual(duality.diamond_closed_form(model, self.identity), Fraction(-1, 27))
        self.assertEqual(duality.diamond_closed_form(model, 2 * self.identity), Fraction(-4096, 27))
        self.assertEqual(duality.diamond_scalar(model, self.identity, self.identity, self.identity, self.identity),
                         Fraction(-1, 27))

        rng = rng_for('segre', 'diamond')
        w0 = model.sample_off_sec(rng)
        triples = [tuple(model.sample_point(rng) for _ in range(3)) for _ in range(4)]
        ok, scalar = duality.diamond_check(model, w0, triples)
        self.assertTrue(ok)
        self.assertEqual(scalar, duality.diamond_closed_form(model, w0))

        zero = model.zero()
        self.assertErrorRegex(GenericityError, 'no triple', duality.diamond_check, model, w0, [(zero, zero, zero)])

    def test_total_transform(self):
        """the limit of G at E11 along I is on Sec(Y)"""
        model = self.segre
        limit = duality.total_transform_limit(model, model.basis(0), self.identity)
        sixth = Fraction(1, 6)
        self.assertEqual(limit, model.covector([0, 0, 0, 0, sixth, 0, 0, 0, sixth]))
        self.assertEqual(duality.dual_det(model, limit), 0)
        self.assertErrorRegex(SeveriError, 'needs a point of X', duality.total_transform_limit, model,
                              self.identity, self.identity)

        e11 = model.basis(0)
        along_e22 = duality.total_transform_limit(model, e11, model.basis(4))
        self.assertEqual(along_e22, model.covector([0] * 8 + [sixth]))
        self.assertTrue(along_e22.proportional(model.covector([0] * 8 + [1])))
        along_e33 = duality.total_transform_limit(model, e11, model.basis(8))
        self.assertEqual(along_e33, model.covector([0] * 4 + [sixth] + [0] * 4))
        self.assertFalse(along_e22.proportional(along_e33))
        self.assertErrorRegex(GenericityError, 'degenerate direction', duality.total_transform_limit, model,
                              e11, e11)

    def test_gram_invertibility(self):
        """F(omega, ., .) is nondegenerate off the secant variety"""
        model = self.segre
        self.assertTrue(duality.gram_invertibility_check(model, self.identity))
        self.assertFalse(duality.gram_invertibility_check(model, model.basis(0)))


class TestSecant(TestCase):
    """entry loci and companion points"""

    def test_decomposition(self):
        """P = x + y lies on the cubic, and not on X"""
        model = get_model('pfaffian')
        decomp = secant.sample_decomposition(model, rng_for('pfaffian', 'decomposition'))
        self.assertEqual(model.det(decomp.P), 0)
        self.assertFalse(model.is_on_X(decomp.P))
        self.assertTrue('SecantDecomp' in repr(decomp))
        segre = get_model('segre')
        self.assertErrorRegex(SeveriError, 'Not a secant decomposition', secant.SecantDecomp, segre,
                              segre_point(*IDENTITY), segre.basis(0))

    def test_entry_locus_dimension(self):
        """Sigma_P has affine dimension n/2 + 2 and a nondegenerate quadric"""
        for name, expected in zip(MODELS, [3, 4, 6, 10]):
            model = get_model(name)
            rng = rng_for(name, 'entry_locus')
            decomp = secant.sample_decomposition(model, rng)
            locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
            self.assertEqual(locus.dimension, expected)
            self.assertEqual(linalg.rank(locus.quadric_gram), expected)
            self.assertTrue(locus.contains(decomp.x))
            self.assertEqual(locus.q(decomp.x), 0)
            self.assertTrue(model.is_on_X(locus.quadric_point(rng)))

    def test_entry_locus_segre(self):
        """P = diag(1, 1, 0): Sigma_P is the upper left block, q_P its determinant"""
        model = get_model('segre')
        P = segre_point(*P_DIAG)
        locus = secant.entry_locus(model, P)
        self.assertEqual(locus.dimension, 4)
        block = segre_point((1, 2, 0), (3, 4, 0), (0, 0, 0))
        self.assertTrue(locus.contains(block))
        self.assertEqual(locus.q(block), -2)
        self.assertFalse(locus.contains(model.basis(8)))
        self.assertEqual(locus.isotropic(), model.basis(0))

        self.assertErrorRegex(GenericityError, 'lies on X', secant.entry_locus, model, model.basis(0))
        self.assertErrorRegex(GenericityError, 'not on the secant variety', secant.entry_locus, model,
                              segre_point(*IDENTITY))

    def test_companion_segre(self):
        """P = diag(1, 1, 0), w0 = I: the companion point is -E33"""
        model = get_model('segre')
        P = segre_point(*P_DIAG)
        w0 = segre_point(*IDENTITY)
        x = secant.companion_point(model, P, w0)
        self.assertEqual(x, -model.basis(8))
        self.assertTrue(x.proportional(model.u_operator(w0, model.sharp(P))))
        q = secant.entry_locus(model, P).isotropic()
        self.assertTrue(secant.cone_check(model, x, q))

    def test_tangent_char(self):
        """T_P2 Sec = T_P Sec exactly for P2 in Sigma_P"""
        model = get_model('veronese')
        rng = rng_for('veronese', 'tangent_char')
        decomp = secant.sample_decomposition(model, rng)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        inside = secant.sigma_inside_sample(model, locus, rng)
        outside = secant.sigma_outside_sample(model, locus, rng)
        self.assertTrue(secant.tangent_char_check(model, decomp.P, inside))
        self.assertFalse(secant.tangent_char_check(model, decomp.P, outside))
        self.assertTrue(secant.same_entry_locus(model, decomp.P, inside))
        self.assertFalse(secant.same_entry_locus(model, decomp.P, outside))


    def test_companion_exceptional(self):
        """on the exceptional model the companion point is on X, in span(Sigma_P, w0), outside Sigma_P"""
        model = get_model('exceptional')
        rng = rng_for('exceptional', 'companion')
        decomp = secant.sample_decomposition(model, rng)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        self.assertEqual(locus.dimension, 10)
        w0 = model.sample_off_sec(rng)
        x = secant.companion_point(model, decomp.P, w0, locus=locus)
        self.assertTrue(model.is_on_X(x))
        self.assertFalse(locus.contains(x))
        self.assertTrue(x.proportional(model.u_operator(w0, model.sharp(decomp.P))))
        self.assertTrue(secant.cone_check(model, x, locus.quadric_point(rng)))

    def test_large_models(self):
        """tangent characterization, companion and Sec transitivity on pfaffian and exceptional"""
        suite = GeometrySuite(7)
        for name in MODELS[2:]:
            model = get_model(name)
            for check in ['tangent_char', 'same_entry_locus', 'companion', 'sec_transitivity']:
                ok, inputs = getattr(suite, f'check_{check}')(model, rng_for(name, check))
                self.assertTrue(ok, (name, check, inputs))

    def test_same_entry_locus_given(self):
        """passing Sigma_P gives the same answer as rebuilding it"""
        model = get_model('pfaffian')
        rng = rng_for('pfaffian', 'same_entry_locus')
        decomp = secant.sample_decomposition(model, rng)
        locus = secant.entry_locus(model, decomp.P, feet=[decomp.x, decomp.y])
        inside = secant.sigma_inside_sample(model, locus, rng)
        outside = secant.sigma_outside_sample(model, locus, rng)
        for other, expected in [(inside, True), (outside, False)]:
            self.assertEqual(secant.same_entry_locus(model, decomp.P, other), expected)
            self.assertEqual(secant.same_entry_locus(model, decomp.P, other, locus=locus), expected)


class TestHomogeneity(TestCase):
    """automorphisms moving points of X and of Sec - X"""

    def test_homogeneity_map(self):
        """E11 is moved to E22, and X is preserved"""
        model = get_model('segre')
        x, x2 = model.basis(0), model.basis(4)
        matrix = homogeneity.homogeneity_map(model, x, x2, rng_for('segre', 'homogeneity'), checks=5)
        self.assertTrue(homogeneity.apply_matrix(model, matrix, x).proportional(x2))
        self.assertErrorRegex(SeveriError, 'not a nonzero point of X', homogeneity.homogeneity_map, model,
                              segre_point(*IDENTITY), x2, rng_for('segre', 'homogeneity', 1))

    def test_homogeneity_exceptional(self):
        """two independent X-samples of the exceptional model are connected by A"""
        model = get_model('exceptional')
        rng = rng_for('exceptional', 'homogeneity')
        x, x2 = model.sample_X(rng), model.sample_X(rng)
        matrix = homogeneity.homogeneity_map(model, x, x2, rng, checks=3)
        self.assertTrue(homogeneity.apply_matrix(model, matrix, x).proportional(x2))
        self.assertFalse(homogeneity.apply_matrix(model, matrix, x).is_zero())
        self.assertTrue(model.is_on_X(homogeneity.apply_matrix(model, matrix, model.sample_X(rng))))

    def test_sec_transitivity(self):
        """rank of the transition map at P = diag(1, 1, 0) is at least m"""
        model = get_model('segre')
        P = segre_point(*P_DIAG)
        w0 = homogeneity.good_w0_for(model, P, rng_for('segre', 'sec_transitivity'))
        self.assertNotEqual(model.det(homogeneity.transition_point(model, P, w0)), 0)
        self.assertTrue(homogeneity.sec_transitivity_rank(model, P, w0) >= model.m)
        self.assertEqual(homogeneity.sec_kernel_intersection(model, P, w0), 0)
        self.assertErrorRegex(SeveriError, 'not a point of Sec - X', homogeneity.sec_transitivity_rank, model,
                              model.basis(0), w0)


class TestTerracini(TestCase):
    """dimensions of secant varieties by Terracini's lemma"""

    def test_families(self):
        """deficient and nondeficient examples"""
        expected = [
            (terracini.Segre(2, 2), 8),
            (terracini.Segre(1, 5), 12),
            (terracini.Veronese2(2), 5),
            (terracini.Grassmann2(5), 14),
            (terracini.Grassmann2(3), 6),
            (terracini.SegreVeronese(), 6),
        ]
        for family, dim in expected:
            rng = rng_for(repr(family), 'terracini')
            self.assertEqual(terracini.generic_terracini_dim(family, rng), dim, family)

    def test_explicit(self):
        """two points of P1 x P1 already span everything"""
        family = terracini.Segre(1, 1)
        self.assertEqual(family.ambient_dim(), 4)
        self.assertEqual(terracini.terracini_dim(family, [[1, 0], [1, 0]], [[0, 1], [0, 1]]), 4)
        self.assertEqual(terracini.terracini_dim(family, [[1, 0], [1, 0]], [[1, 0], [1, 0]]), 3)

    def test_models(self):
        """the secant variety of each model is the cubic hypersurface"""
        for name in MODELS:
            model = get_model(name)
            family = terracini.ModelTangents(model)
            self.assertEqual(terracini.generic_terracini_dim(family, rng_for(name, 'terracini'), retries=2), model.m)


class TestGeometrySuite(TestCase):
    """the geometry suite on the small models"""

    def test_suite(self):
        """every check passes, segre_differential only on segre"""
        reports = run_models(GeometrySuite(7, trials=2), ['veronese', 'segre'])
        for report in reports:
            self.assertTrue(report.ok, report.to_dict())
        self.assertNotIn('segre_differential', reports[0].records)
        self.assertEqual(reports[1].records['segre_differential'].attempted, 1)
        self.assertEqual(reports[1].records['involution'].attempted, 6)

    def test_duality_pairs_tangent(self):
        """a second point without a tangent hyperplane fails the duality pair check"""
        model = get_model('segre')
        suite = GeometrySuite(7)
        ok, _ = suite.check_duality_pairs(model, rng_for('segre', 'duality_pairs'))
        self.assertTrue(ok)
        with patch('vsc.severi.suite.duality.second_point', return_value=model.basis(0)):
            ok, _ = suite.check_duality_pairs(model, rng_for('segre', 'duality_pairs'))
        self.assertFalse(ok)

    def test_gram_invertibility_debug(self):
        """the X-sample rank is only computed for debug logging"""
        model = get_model('segre')
        suite = GeometrySuite(7)
        self.addCleanup(suite.log.setLevel, suite.log.level)
        for level, calls in [(logging.INFO, 0), (logging.DEBUG, 1)]:
            suite.log.setLevel(level)
            with patch.object(GeometrySuite, 'x_sample', return_value=model.basis(0)) as sampler:
                ok, _ = suite.check_gram_invertibility(model, rng_for('segre', 'gram_invertibility'))
            self.assertTrue(ok)
            self.assertEqual(sampler.call_count, calls)
