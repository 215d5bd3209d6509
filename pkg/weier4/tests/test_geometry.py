"""Test cases for the geometry module."""
from unittest import TestCase
import numpy as np
from numpy.testing import assert_allclose
from .._errors import DegeneratePointError
from .._errors import GridTooSmallError
from .._errors import NotOrthogonalError
from .._grid import GridSpec
from ..curvature import curvatures_from_phi
from ..geometry import apply_motion
from ..geometry import eval_patch
from ..geometry import fundamental_data
from ..geometry import harmonic_residual
from ..geometry import integrate_phi
from ..geometry import Motion4
from ..geometry import normal_project
from ..geometry import SurfacePatch
from ..series import TaylorSeries
from ..weierstrass import build_canonical
from ..weierstrass import build_representation
from ..weierstrass import HoloPair
from ..weierstrass import PhiCurve
from .test_weierstrass import golden_pair
from .test_weierstrass import one
from .test_weierstrass import z


class ShouldPinPatchAtOrigin(TestCase):
    def test(self):
        phi = build_canonical(golden_pair())
        patch = eval_patch(integrate_phi(phi), GridSpec.parse('-0.1:0.1:0.05'))
        self.assertTrue(patch.origin_pinned)
        assert_allclose(patch.points[2, 2], np.zeros(4), atol=1e-15)
        self.assertAlmostEqual(0.5, patch.E[2, 2])
        self.assertEqual((5, 5, 4), patch.points.shape)


class ShouldMatchTangentsByFiniteDifferences(TestCase):
    def test(self):
        phi = build_canonical(golden_pair())
        psi = integrate_phi(phi)
        h = 1e-4
        for t in (0, 0.05 + 0.02j, -0.03j):
            plus = np.array([c.evaluate(t + h) for c in psi]).real
            minus = np.array([c.evaluate(t - h) for c in psi]).real
            up = np.array([c.evaluate(t + 1j * h) for c in psi]).real
            down = np.array([c.evaluate(t - 1j * h) for c in psi]).real
            assert_allclose((plus - minus) / (2 * h), phi.value(t).real, atol=1e-7)
            assert_allclose((up - down) / (2 * h), -phi.value(t).imag, atol=1e-7)


class ShouldProjectOntoNormalPlane(TestCase):
    def test(self):
        phi = build_representation('W6', one(), golden_pair())
        t = 0.05 - 0.1j
        normal = normal_project(phi, t)
        value = phi.value(t)
        self.assertAlmostEqual(0, abs(np.vdot(value, normal)), places=12)
        self.assertAlmostEqual(0, abs(np.sum(value * normal)), places=12)

    def test_tangent_derivative(self):
        # Phi = e^z (1, i, 0, 0) has Phi' parallel to Phi
        e = z().exp()
        phi = PhiCurve([e, e * 1j, one() * 0, one() * 0])
        assert_allclose(normal_project(phi, 0.1), np.zeros(4), atol=1e-14)

    def test_degenerate(self):
        phi = PhiCurve([one() - z(), 1j * (one() - z()), one() * 0, one() * 0])
        with self.assertRaises(DegeneratePointError):
            normal_project(phi, 1)


class ShouldBuildAdaptedFrame(TestCase):
    def test_golden(self):
        data = fundamental_data(build_canonical(golden_pair()), 0)
        nu, lam, rho, mu = data.weingarten()
        self.assertAlmostEqual(3 * np.sqrt(2) / 2, nu)
        self.assertAlmostEqual(-np.sqrt(2) / 2, mu)
        self.assertAlmostEqual(0, lam)
        self.assertAlmostEqual(0, rho)
        self.assertAlmostEqual(0.5, data.E)

    def test_orthonormal_and_oriented(self):
        data = fundamental_data(build_canonical(golden_pair()), 0.03 + 0.07j)
        assert_allclose(data.frame @ data.frame.T, np.eye(4), atol=1e-12)
        self.assertAlmostEqual(1, np.linalg.det(data.frame))

    def test_curvatures_in_isothermal_coordinates(self):
        phi = build_representation('W6', one() + 0.3 * z(), golden_pair())
        for t in (0, 0.1 - 0.05j):
            K, kappa = fundamental_data(phi, t).curvatures()
            expected = curvatures_from_phi(phi, t)
            assert_allclose([K, kappa], expected, rtol=1e-9)


class ShouldApplyMotions(TestCase):
    def test_rejects_reflections(self):
        with self.assertRaises(NotOrthogonalError):
            Motion4(np.diag([1, 1, 1, -1]))
        with self.assertRaises(NotOrthogonalError):
            Motion4(2 * np.eye(4))

    def test_preserves_isotropy_and_kind(self):
        rng = np.random.default_rng(7)
        phi = build_canonical(golden_pair())
        moved = apply_motion(phi, Motion4.random(rng))
        self.assertEqual('canonical_first', moved.kind)
        self.assertLess(moved.isotropy_residual(), 1e-12)
        self.assertLess(moved.canonical_residual(1), 1e-9)

    def test_preserves_curvatures(self):
        rng = np.random.default_rng(13)
        phi = build_canonical(golden_pair())
        for _ in range(5):
            moved = apply_motion(phi, Motion4.random(rng))
            for t in (0, 0.05 + 0.02j, -0.08j):
                assert_allclose(curvatures_from_phi(moved, t), curvatures_from_phi(phi, t),
                                rtol=0, atol=1e-12)

    def test_moves_points(self):
        rng = np.random.default_rng(11)
        motion = Motion4.random(rng)
        phi = build_canonical(golden_pair())
        grid = GridSpec.parse('-0.1:0.1:0.05')
        patch = eval_patch(integrate_phi(phi), grid)
        moved = eval_patch(integrate_phi(apply_motion(phi, motion)), grid)
        assert_allclose(moved.points, patch.points @ motion.A.T, atol=1e-13)


class ShouldBeHarmonic(TestCase):
    def test_built_patches(self):
        grid = GridSpec.parse('-0.1:0.1:0.01')
        curves = [
            build_canonical(golden_pair()),
            build_representation('W6', one() + 0.5 * z(), golden_pair()),
            build_representation('W2', one(), HoloPair(z(), z() * 2, 'h')),
        ]
        for phi in curves:
            self.assertLess(harmonic_residual(eval_patch(integrate_phi(phi), grid)), 1e-3)

    def test_second_order_convergence(self):
        phi = build_canonical(golden_pair())
        coarse = GridSpec.parse('-0.1:0.1:0.01')
        fine = coarse.halved()
        ratio = (harmonic_residual(eval_patch(integrate_phi(phi), coarse))
                 / harmonic_residual(eval_patch(integrate_phi(phi), fine)))
        self.assertTrue(3.5 <= ratio <= 4.5, ratio)

    def test_control_field_fails(self):
        grid = GridSpec.parse('-0.1:0.1:0.01')
        u = grid.points().real
        points = np.zeros(grid.shape + (4,))
        points[..., 0] = u ** 2
        patch = SurfacePatch(grid, points, np.ones(grid.shape))
        self.assertAlmostEqual(2, harmonic_residual(patch), places=8)

    def test_small_grid(self):
        grid = GridSpec(0, 0, 0.1, 3, 3)
        patch = SurfacePatch(grid, np.zeros((3, 3, 4)), np.ones((3, 3)))
        with self.assertRaises(GridTooSmallError):
            harmonic_residual(patch)


class ShouldParseGrids(TestCase):
    def test(self):
        grid = GridSpec.parse('-0.2:0.2:0.02')
        self.assertEqual((21, 21), grid.shape)
        self.assertAlmostEqual(-0.2, grid.u[0])
        self.assertAlmostEqual(0.2, grid.v[-1])
        self.assertEqual((10, 10), grid.nearest_node(0))

    def test_separate_v_range(self):
        grid = GridSpec.parse('0:1:0.25', '-0.5:0.5')
        self.assertEqual((5, 5), grid.shape)
        self.assertAlmostEqual(-0.5, grid.v0)

    def test_malformed(self):
        with self.assertRaises(ValueError):
            GridSpec.parse('0:1')
        with self.assertRaises(ValueError):
            TaylorSeries([1], radius=-1)
