"""Test cases for the correspond module."""
import os
import tempfile
from unittest import TestCase
import numpy as np
from numpy.testing import assert_allclose
from .._errors import DegenerateGError
from .._errors import FlavorMismatchError
from .._errors import NonPositiveNuError
from .._errors import NotGeneralTypeFieldError
from .._errors import NotUnitaryError
from .._errors import PoleAtBaseError
from .._grid import GridSpec
from ..correspond import build_r3
from ..correspond import closed_form_fields
from ..correspond import equivalent_pairs
from ..correspond import mobius_apply
from ..correspond import mobius_apply_pair
from ..correspond import MobiusMap
from ..correspond import natural_residual_r3
from ..correspond import natural_residual_r4
from ..correspond import nu_field
from ..correspond import nu_r3
from ..correspond import principal_curvature_r3
from ..correspond import ScalarField
from ..correspond import split_combine
from ..curvature import curvatures_closed_form
from ..weierstrass import convert_pair
from ..weierstrass import HoloPair
from .test_weierstrass import golden_pair
from .test_weierstrass import one
from .test_weierstrass import z


def draw_map(rng):
    """Draw a Mobius map keeping the pole of e^(-kz) far from the origin."""
    while True:
        m = MobiusMap.random(rng)
        if abs(m.a + m.b) >= 0.8:
            return m


class ShouldComposeMobiusMaps(TestCase):
    def test(self):
        rng = np.random.default_rng(5)
        m1, m2 = MobiusMap.random(rng), MobiusMap.random(rng)
        product = m2 @ m1
        for g in (0.3 - 0.2j, 1.5j, -2):
            self.assertAlmostEqual(m2(m1(g)), product(g))

    def test_not_unitary(self):
        with self.assertRaises(NotUnitaryError):
            MobiusMap(1, 1)

    def test_pole_at_base(self):
        root = 1 / np.sqrt(2)
        with self.assertRaises(PoleAtBaseError):
            mobius_apply((-z()).exp(), MobiusMap(root, -root))

    def test_series_matches_values(self):
        m = MobiusMap(0.6, 0.8j)
        g = z().exp()
        moved = mobius_apply(g, m)
        for t in (0, 0.1 + 0.2j):
            self.assertAlmostEqual(m(g.evaluate(t)), moved.evaluate(t))


class ShouldBeMobiusInvariant(TestCase):
    def test_random_maps(self):
        rng = np.random.default_rng(2024)
        grid = GridSpec.parse('-0.05:0.05:0.01')
        pair = golden_pair()
        for _ in range(20):
            moved = mobius_apply_pair(pair, draw_map(rng), draw_map(rng))
            self.assertTrue(equivalent_pairs(pair, moved, grid))

    def test_w_pairs(self):
        rng = np.random.default_rng(9)
        w = convert_pair(golden_pair(), 'w')
        m1, m2 = draw_map(rng), draw_map(rng)
        moved = mobius_apply_pair(w, m1, m2)
        expected = mobius_apply_pair(golden_pair(), m1, m2)
        for t in (0, 0.04 - 0.03j):
            self.assertAlmostEqual(np.exp(moved.p.evaluate(t)), expected.p.evaluate(t))
            self.assertAlmostEqual(np.exp(moved.q.evaluate(t)), expected.q.evaluate(t))

    def test_h_pairs(self):
        m = MobiusMap(1, 0)
        with self.assertRaises(FlavorMismatchError):
            mobius_apply_pair(convert_pair(golden_pair(), 'h'), m, m)


class ShouldDecideEquivalence(TestCase):
    def test(self):
        grid = GridSpec.parse('-0.05:0.05:0.01')
        other = HoloPair((-z()).exp(), (z() * -3).exp(), 'g')
        self.assertTrue(equivalent_pairs(golden_pair(), golden_pair(), grid))
        self.assertFalse(equivalent_pairs(golden_pair(), other, grid))
        K, _ = closed_form_fields(other, grid)
        self.assertAlmostEqual(-15, K.values[5, 5])

    def test_flavor(self):
        grid = GridSpec.parse('-0.05:0.05:0.01')
        with self.assertRaises(FlavorMismatchError):
            equivalent_pairs(golden_pair(), convert_pair(golden_pair(), 'w'), grid)


class ShouldSplitAndCombine(TestCase):
    def test_golden(self):
        nu1, nu2, K, kappa = split_combine((-z()).exp(), (z() * -2).exp(), 0)
        assert_allclose([nu1, nu2, K, kappa], [1, 4, -5, -3], atol=1e-12)

    def test_random_points(self):
        rng = np.random.default_rng(17)
        pairs = [golden_pair(), HoloPair(z() * 0.5 + 0.2, (z() * 0.7).exp() + z() ** 2, 'g')]
        for _ in range(100):
            pair = pairs[rng.integers(len(pairs))]
            t = complex(*rng.uniform(-0.2, 0.2, 2))
            _, _, K, kappa = split_combine(pair.p, pair.q, t)
            expected = curvatures_closed_form('canonical_g', None, pair, t)
            assert_allclose([K, kappa], expected, rtol=1e-11, atol=1e-12)

    def test_degenerate(self):
        with self.assertRaises(DegenerateGError):
            nu_r3(one() * 2, 0)


class ShouldBuildSurfacesInR3(TestCase):
    def test(self):
        for g in ((-z()).exp(), z() * 0.5 + 0.3j + z() ** 2):
            phi3 = build_r3(g)
            self.assertEqual(3, len(phi3))
            self.assertLess(phi3.isotropy_residual(), 1e-12)
            # g' of the quadratic vanishes at -0.25
            for t in (0, 0.04 - 0.02j):
                self.assertAlmostEqual(nu_r3(g, t), principal_curvature_r3(phi3, t), places=10)

    def test_degenerate(self):
        with self.assertRaises(DegenerateGError):
            build_r3(z() ** 2)


class ShouldSatisfyNaturalEquations(TestCase):
    def test_r3(self):
        grid = GridSpec.parse('-0.1:0.1:0.01')
        for g in ((-z()).exp(), (z() * -2).exp()):
            self.assertLess(natural_residual_r3(nu_field(g, grid)), 1e-3)

    def test_r3_convergence(self):
        g = (z() * -2).exp()
        coarse = GridSpec.parse('-0.1:0.1:0.01')
        ratio = (natural_residual_r3(nu_field(g, coarse))
                 / natural_residual_r3(nu_field(g, coarse.halved())))
        self.assertTrue(3.5 <= ratio <= 4.5, ratio)

    def test_r4(self):
        grid = GridSpec.parse('-0.1:0.1:0.01')
        K, kappa = closed_form_fields(golden_pair(), grid)
        first, second = natural_residual_r4(K, kappa)
        self.assertLess(first, 5e-3)
        self.assertLess(second, 5e-3)

    def test_r4_convergence(self):
        coarse = GridSpec.parse('-0.1:0.1:0.01')
        first = natural_residual_r4(*closed_form_fields(golden_pair(), coarse))
        second = natural_residual_r4(*closed_form_fields(golden_pair(), coarse.halved()))
        for before, after in zip(first, second):
            self.assertTrue(3.5 <= before / after <= 4.5, (before, after))

    def test_not_general_type(self):
        grid = GridSpec.parse('-0.1:0.1:0.05')
        K = ScalarField(grid, np.full(grid.shape, -1.0), 'K')
        kappa = ScalarField(grid, np.full(grid.shape, 2.0), 'kappa')
        with self.assertRaises(NotGeneralTypeFieldError):
            natural_residual_r4(K, kappa)


class ShouldStoreScalarFields(TestCase):
    def test_round_trip(self):
        grid = GridSpec.parse('-0.1:0.1:0.05')
        field = nu_field((-z()).exp(), grid)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'nu.txt')
            field.save(path)
            loaded = ScalarField.load(path)
        self.assertEqual('nu', loaded.role)
        self.assertEqual(grid.shape, loaded.grid.shape)
        self.assertEqual(grid.h, loaded.grid.h)
        assert_allclose(loaded.values, field.values, rtol=0, atol=0)

    def test_non_positive_nu(self):
        grid = GridSpec.parse('-0.1:0.1:0.05')
        with self.assertRaises(NonPositiveNuError):
            ScalarField(grid, np.zeros(grid.shape), 'nu')

    def test_shape(self):
        grid = GridSpec.parse('-0.1:0.1:0.05')
        with self.assertRaises(ValueError):
            ScalarField(grid, np.ones((2, 2)), 'K')
