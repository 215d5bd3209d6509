"""Test cases for the associated family."""
from unittest import TestCase
import numpy as np
from numpy.testing import assert_allclose
from .._grid import GridSpec
from ..app.family import family_m
from ..app.family import family_pair
from ..app.family import FamilyParams
from ..app.family import match_patches
from ..app.family import pipeline_patch
from ..app.family import verify_family
from ..app.family import verify_family_members


GRID = GridSpec.parse('-0.3:0.3:0.05')


class ShouldSampleClosedForm(TestCase):
    def test_origin(self):
        grid = GridSpec.parse('-0.1:0.1:0.1')
        patch = family_m(FamilyParams(1, 2, 0, grid))
        assert_allclose(patch.points[1, 1], [0, -np.sqrt(2) / 3, 0, 0], atol=1e-15)
        self.assertFalse(patch.origin_pinned)

    def test_validation(self):
        with self.assertRaises(ValueError):
            FamilyParams(1, 1, 0, GRID)
        with self.assertRaises(ValueError):
            FamilyParams(1, 2, 1, GRID)
        with self.assertRaises(ValueError):
            FamilyParams(-1, 2, 0, GRID)

    def test_pair(self):
        params = FamilyParams(1, 2, np.pi / 8, GRID)
        pair = family_pair(params)
        self.assertAlmostEqual(-params.a, pair.p[1])
        self.assertAlmostEqual(-2 * params.a, pair.q[1])


class ShouldMatchPipeline(TestCase):
    def test(self):
        k1, k2 = 1, 2
        root = np.sqrt(k1 * k2)
        k_sum, k_diff = (k1 + k2) / 2, (k1 - k2) / 2
        for alpha in (0, np.pi / 8, np.pi / 4):
            params = FamilyParams(k1, k2, alpha, GRID)
            report = match_patches(pipeline_patch(params), family_m(params))
            self.assertEqual(1, report.sign)
            self.assertLess(report.max_deviation, 1e-8)
            expected = [0, np.cos(2 * alpha) / (k_sum * root),
                        0, np.sin(2 * alpha) / (k_diff * root)]
            assert_allclose(report.translation, expected, atol=1e-10)

    def test_conformal_factor(self):
        params = FamilyParams(1, 3, np.pi / 6, GRID)
        assert_allclose(pipeline_patch(params).E, family_m(params).E, rtol=1e-8)

    def test_grids_must_agree(self):
        params = FamilyParams(1, 2, 0, GRID)
        other = FamilyParams(1, 2, 0, GridSpec.parse('-0.2:0.2:0.05'))
        with self.assertRaises(ValueError):
            match_patches(family_m(params), family_m(other))


class ShouldShareCurvatures(TestCase):
    def test(self):
        report = verify_family(1, 2, [0, np.pi / 8, np.pi / 4], GRID)
        self.assertTrue(report.passed)
        self.assertEqual(3, len(report.per_alpha))

    def test_single_member(self):
        report = verify_family(2, 0.5, [np.pi / 5], GRID)
        self.assertEqual(0, report.max_dK)
        self.assertEqual(0, report.max_dkappa)

    def test_perturbed_member(self):
        members = [FamilyParams(1, 2, 0, GRID), FamilyParams(1, 2.1, np.pi / 8, GRID)]
        report = verify_family_members(members)
        self.assertFalse(report.passed)
        self.assertGreater(report.max_dK, 1e-3)
