"""Test cases for the curvature module."""
from unittest import TestCase
import numpy as np
from numpy.testing import assert_allclose
from .._errors import FlavorMismatchError
from .._errors import InternalInconsistencyError
from .._errors import NotCanonicalError
from .._errors import NotGeneralTypeError
from .._grid import GridSpec
from ..curvature import canonical_invariants_from_phi
from ..curvature import coefficient_E_closed_form
from ..curvature import CurvatureSample
from ..curvature import curvatures_closed_form
from ..curvature import curvatures_from_invariants
from ..curvature import curvatures_from_phi
from ..curvature import ellipse_invariants
from ..curvature import numu_closed_form
from ..curvature import sample_grid
from ..curvature import sample_point
from ..geometry import fundamental_data
from ..weierstrass import build_canonical
from ..weierstrass import build_representation
from ..weierstrass import convert_pair
from ..weierstrass import HoloPair
from .test_weierstrass import golden_pair
from .test_weierstrass import one
from .test_weierstrass import z


def sample_pairs():
    """Return canonical g-pairs used across the dual path checks."""
    return [
        golden_pair(),
        HoloPair(z() ** 2 * 0.25 + z() + 0.5, 2 * z() - z() ** 2 / 6 + 1, 'g'),
        HoloPair(z().exp(), z() + 2, 'g'),
    ]


class ShouldReproduceGoldenCurvatures(TestCase):
    def test_from_phi(self):
        K, kappa = curvatures_from_phi(build_canonical(golden_pair()), 0)
        self.assertAlmostEqual(-5, K, places=10)
        self.assertAlmostEqual(-3, kappa, places=10)

    def test_closed_forms(self):
        pair = golden_pair()
        assert_allclose(curvatures_closed_form('canonical_g', None, pair, 0), [-5, -3])
        w = convert_pair(pair, 'w')
        assert_allclose(curvatures_closed_form('canonical_w', None, w, 0), [-5, -3])
        h = convert_pair(pair, 'h')
        assert_allclose(curvatures_closed_form('canonical_h', None, h, 0), [-5, -3])

    def test_invariants(self):
        nu, mu = numu_closed_form('canonical_g', golden_pair(), 0)
        self.assertAlmostEqual(3 * np.sqrt(2) / 2, nu, places=12)
        self.assertAlmostEqual(-np.sqrt(2) / 2, mu, places=12)
        assert_allclose(ellipse_invariants(-5, -3), [nu, mu], rtol=1e-12)
        self.assertAlmostEqual(0.5, coefficient_E_closed_form('canonical_g', None, golden_pair(), 0))

    def test_sample(self):
        sample = sample_point(build_canonical(golden_pair()), 0)
        assert_allclose([sample.K, sample.kappa, sample.nu, sample.mu, sample.E],
                        [-5, -3, 3 / np.sqrt(2), -1 / np.sqrt(2), 0.5], atol=1e-10)


class ShouldAgreeAcrossRoutes(TestCase):
    def test_grid(self):
        grid = GridSpec.parse('-0.2:0.2:0.02')
        for pair in sample_pairs():
            phi = build_canonical(pair)
            for t in grid.points().ravel():
                K, kappa = curvatures_from_phi(phi, t)
                K0, kappa0 = curvatures_closed_form('canonical_g', None, pair, t)
                scale = max(1, abs(K0))
                self.assertLess(abs(K - K0), 1e-9 * scale)
                self.assertLess(abs(kappa - kappa0), 1e-9 * scale)

    def test_general_forms(self):
        f = one() * 1.5 + z() * 0.2j
        pair = sample_pairs()[1]
        phi = build_representation('W6', f, pair)
        w = HoloPair(z() * 0.4 - 0.1, -z() * 1.3 + 0.2j, 'w')
        phi_w = build_representation('W5', f, w)
        h = convert_pair(w, 'h')
        phi_h = build_representation('W2', f, h)
        for t in (0, 0.1 + 0.05j, -0.07j):
            assert_allclose(curvatures_closed_form('general_g', f, pair, t),
                            curvatures_from_phi(phi, t), rtol=1e-9)
            assert_allclose(curvatures_closed_form('general_w', f, w, t),
                            curvatures_from_phi(phi_w, t), rtol=1e-9)
            assert_allclose(curvatures_closed_form('general_h', f, h, t),
                            curvatures_from_phi(phi_h, t), rtol=1e-9)
            value = phi.value(t)
            self.assertAlmostEqual(0.5 * np.vdot(value, value).real,
                                   coefficient_E_closed_form('general_g', f, pair, t))

    def test_frame_invariants(self):
        phi = build_canonical(sample_pairs()[1])
        for t in (0, 0.1 + 0.1j):
            nu, _, _, mu = fundamental_data(phi, t).weingarten()
            expected = numu_closed_form('canonical_g', sample_pairs()[1], t)
            assert_allclose([nu, mu], expected, rtol=1e-8)
            assert_allclose(canonical_invariants_from_phi(phi, t), expected, rtol=1e-8)


class ShouldCheckCanonicalCoordinateIdentities(TestCase):
    def test(self):
        pair = sample_pairs()[2]
        phi = build_canonical(pair)
        for t in (0, 0.15 - 0.1j):
            sample = sample_point(phi, t)
            self.assertAlmostEqual(1 / np.sqrt(sample.nu ** 2 - sample.mu ** 2), sample.E)
            value = phi.value(t)
            norm4 = np.vdot(value, value).real ** 2
            self.assertAlmostEqual(sample.nu ** 2 - sample.mu ** 2, 4 / norm4)

    def test_rejects_general_coordinates(self):
        phi = build_representation('W6', one(), golden_pair())
        with self.assertRaises(NotCanonicalError):
            canonical_invariants_from_phi(phi, 0)


class ShouldDetectSuperconformalPoints(TestCase):
    def test(self):
        pair = HoloPair((-z()).exp(), one() * 5, 'g')
        phi = build_representation('W6', one(), pair)
        K, kappa = curvatures_from_phi(phi, 0.05)
        self.assertAlmostEqual(0, K ** 2 - kappa ** 2, places=9)
        with self.assertRaises(NotGeneralTypeError):
            ellipse_invariants(K, abs(K))


class ShouldConvertEllipseInvariants(TestCase):
    def test_round_trip(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            nu = rng.uniform(0.1, 5)
            mu = rng.uniform(-nu, nu) * 0.99
            K, kappa = curvatures_from_invariants(nu, mu)
            assert_allclose(ellipse_invariants(K, kappa), [nu, mu], rtol=1e-10, atol=1e-12)

    def test_rejects_positive_curvature(self):
        with self.assertRaises(NotGeneralTypeError):
            ellipse_invariants(1, 0)
        with self.assertRaises(NotGeneralTypeError):
            ellipse_invariants(-1, 1)


class ShouldValidateInputs(TestCase):
    def test_flavor(self):
        with self.assertRaises(FlavorMismatchError):
            curvatures_closed_form('canonical_w', None, golden_pair(), 0)

    def test_missing_f(self):
        with self.assertRaises(TypeError):
            curvatures_closed_form('general_g', None, golden_pair(), 0)

    def test_inconsistent_sample(self):
        with self.assertRaises(InternalInconsistencyError):
            CurvatureSample(-5, -3, 1, 1, 0.5)

    def test_sample_grid(self):
        grid = GridSpec.parse('-0.1:0.1:0.05')
        fields = sample_grid(build_canonical(golden_pair()), grid)
        self.assertEqual((5, 5), fields['K'].shape)
        self.assertAlmostEqual(-5, fields['K'][2, 2])
        self.assertAlmostEqual(-3, fields['kappa'][2, 2])
