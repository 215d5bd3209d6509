"""The associated family of minimal surfaces built from g = exp(-k a z)."""
import logging
from dataclasses import dataclass
from dataclasses import field
import numpy as np
from .._grid import GridSpec
from ..curvature import curvatures_closed_form
from ..geometry import eval_patch
from ..geometry import integrate_phi
from ..geometry import SurfacePatch
from ..series import DEFAULT_ORDER
from ..series import TaylorSeries
from ..weierstrass import build_canonical
from ..weierstrass import HoloPair


_LOGGER = logging.getLogger(__name__)


# the largest curvature deviation a passing family check allows
FAMILY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class FamilyParams(object):
    """The parameters (k1, k2; alpha) of one member of the family."""

    k1: float
    k2: float
    alpha: float
    grid: GridSpec

    def __post_init__(self):
        if not (self.k1 > 0 and self.k2 > 0):
            raise ValueError('k1 and k2 must be positive: {}, {}'.format(self.k1, self.k2))
        if self.k1 == self.k2:
            raise ValueError('k1 and k2 must differ: {}'.format(self.k1))
        if not 0 <= self.alpha <= np.pi / 4:
            raise ValueError('alpha must lie in [0, pi/4]: {}'.format(self.alpha))

    @property
    def a(self):
        """Return the unit a = cos(alpha) + i sin(alpha)."""
        return np.exp(1j * self.alpha)


def family_pair(params, base=0j, order=DEFAULT_ORDER):
    """
    Return the g-pair (exp(-k1 a z), exp(-k2 a z)) of a family member.

    Args:
        params (FamilyParams): the member
        base (complex): the expansion point
        order (int): the truncation degree

    Returns:
        HoloPair: the canonical g-pair

    """
    z = TaylorSeries.variable(base, order)
    return HoloPair((z * (-params.k1 * params.a)).exp(),
                    (z * (-params.k2 * params.a)).exp(), 'g')


def family_m(params):
    """
    Sample a member of the family from its closed form coordinates.

    Args:
        params (FamilyParams): the member

    Returns:
        SurfacePatch: the patch of (z1, z2, z3, z4) on the member's grid

    """
    k1, k2, alpha = params.k1, params.k2, params.alpha
    t = params.grid.points()
    u, v = t.real, t.imag
    # the rotated parameters
    p = u * np.cos(alpha) - v * np.sin(alpha)
    q = u * np.sin(alpha) + v * np.cos(alpha)
    k_sum, k_diff = (k1 + k2) / 2, (k1 - k2) / 2
    root = np.sqrt(k1 * k2)
    c, s = np.cos(2 * alpha), np.sin(2 * alpha)
    z1 = (s * np.sinh(k_sum * p) * np.cos(k_sum * q)
          - c * np.cosh(k_sum * p) * np.sin(k_sum * q)) / (k_sum * root)
    z2 = (-c * np.cosh(k_sum * p) * np.cos(k_sum * q)
          - s * np.sinh(k_sum * p) * np.sin(k_sum * q)) / (k_sum * root)
    z3 = (c * np.sinh(k_diff * p) * np.cos(k_diff * q)
          + s * np.cosh(k_diff * p) * np.sin(k_diff * q)) / (k_diff * root)
    z4 = (-s * np.cosh(k_diff * p) * np.cos(k_diff * q)
          + c * np.sinh(k_diff * p) * np.sin(k_diff * q)) / (k_diff * root)
    # |g_j| = exp(-k_j p) and |g_j'| = k_j exp(-k_j p)
    weight1 = np.exp(-2 * k1 * p) + 1
    weight2 = np.exp(-2 * k2 * p) + 1
    E = weight1 * weight2 / (4 * k1 * k2 * np.exp(-(k1 + k2) * p))
    return SurfacePatch(params.grid, np.stack([z1, z2, z3, z4], axis=-1), E)


def pipeline_patch(params, order=DEFAULT_ORDER):
    """Sample a family member through the canonical g representation."""
    phi = build_canonical(family_pair(params, order=order))
    return eval_patch(integrate_phi(phi), params.grid)


@dataclass(frozen=True)
class MatchReport(object):
    """The rigid correction found between two sampled patches."""

    sign: int
    translation: np.ndarray
    max_deviation: float


def match_patches(reference, candidate):
    """
    Match two patches up to an overall sign and a translation.

    Args:
        reference (SurfacePatch): the reference patch
        candidate (SurfacePatch): the patch to align with the reference

    Returns:
        MatchReport: the sign s and translation b minimizing
        max |s x_candidate + b - x_reference|, with b read at the node
        nearest the parameter origin

    """
    if reference.grid != candidate.grid:
        raise ValueError('patches live on different grids')
    origin = reference.grid.nearest_node(0)
    best = None
    for sign in (1, -1):
        translation = reference.points[origin] - sign * candidate.points[origin]
        aligned = sign * candidate.points + translation
        deviation = float(np.max(np.abs(aligned - reference.points)))
        if best is None or deviation < best.max_deviation:
            best = MatchReport(sign, translation, deviation)
    _LOGGER.info('patch match: sign %+d, deviation %.3e', best.sign, best.max_deviation)
    return best


@dataclass
class FamilyReport(object):
    """The curvature deviations of the family members from the first one."""

    max_dK: float = 0.0
    max_dkappa: float = 0.0
    per_alpha: dict = field(default_factory=dict)
    tolerance: float = FAMILY_TOLERANCE

    @property
    def passed(self):
        """Return whether both deviations are below the tolerance."""
        return self.max_dK < self.tolerance and self.max_dkappa < self.tolerance


def verify_family_members(members, tol=FAMILY_TOLERANCE):
    """
    Compare the curvatures of family members against the first member.

    Point t of a member with unit a is identified with the point
    (a / a_ref) t of the reference, which has the same (p, q).

    Args:
        members (list): FamilyParams sharing one grid, the reference first
        tol (float): the passing tolerance

    Returns:
        FamilyReport: the largest deviations of K and kappa

    """
    reference = members[0]
    reference_pair = family_pair(reference)
    t = reference.grid.points()
    report = FamilyReport(tolerance=tol)
    for member in members:
        pair = family_pair(member)
        rotation = member.a / reference.a
        dK = dkappa = 0.0
        for index in np.ndindex(*t.shape):
            K, kappa = curvatures_closed_form('canonical_g', None, pair, t[index])
            K0, kappa0 = curvatures_closed_form('canonical_g', None, reference_pair,
                                                rotation * t[index])
            dK = max(dK, abs(K - K0))
            dkappa = max(dkappa, abs(kappa - kappa0))
        report.per_alpha[member.alpha] = (dK, dkappa)
        report.max_dK = max(report.max_dK, dK)
        report.max_dkappa = max(report.max_dkappa, dkappa)
    return report


def verify_family(k1, k2, alphas, grid, tol=FAMILY_TOLERANCE):
    """
    Check that every member of the family has the curvatures of the first.

    Args:
        k1 (float): the first rate
        k2 (float): the second rate
        alphas (list): the family parameters, the reference first
        grid (GridSpec): the grid
        tol (float): the passing tolerance

    Returns:
        FamilyReport: the largest deviations of K and kappa

    """
    members = [FamilyParams(k1, k2, alpha, grid) for alpha in alphas]
    return verify_family_members(members, tol)


# explicitly define the outward facing API of this module
__all__ = [
    FamilyParams.__name__,
    family_pair.__name__,
    family_m.__name__,
    pipeline_patch.__name__,
    MatchReport.__name__,
    match_patches.__name__,
    FamilyReport.__name__,
    verify_family_members.__name__,
    verify_family.__name__,
]
