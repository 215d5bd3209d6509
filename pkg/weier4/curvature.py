"""Gauss curvature, normal curvature and the curvature ellipse invariants."""
import logging
from dataclasses import dataclass
import numpy as np
from tqdm import tqdm
from ._errors import DegeneratePointError
from ._errors import FlavorMismatchError
from ._errors import InternalInconsistencyError
from ._errors import NotCanonicalError
from ._errors import NotGeneralTypeError
from .weierstrass import convert_pair
from .weierstrass import HoloPair


_LOGGER = logging.getLogger(__name__)


# the relative tolerance between two routes to the same curvature
AGREEMENT_TOLERANCE = 1e-9


# the tolerance of Phi'^2(t) = 1 when reading canonical coordinates
CANONICAL_POINT_TOLERANCE = 1e-9


# the closed form kinds and the flavor each one consumes
CLOSED_FORM_KINDS = {
    'general_h': 'h',
    'general_w': 'w',
    'general_g': 'g',
    'canonical_h': 'h',
    'canonical_w': 'w',
    'canonical_g': 'g',
}


def _agree(a, b, scale):
    """Return whether two values agree relative to max(1, |scale|)."""
    return abs(a - b) <= AGREEMENT_TOLERANCE * max(1.0, abs(scale))


def curvatures_from_phi(phi, t):
    """
    Compute (K, kappa) from Phi and Phi' at t.

    K is computed as -4 |Phi'_perp|^2 / |Phi|^4 and cross checked against
    -4 (|Phi|^2 |Phi'|^2 - |conj(Phi) . Phi'|^2) / |Phi|^6; kappa is
    -4 det(Phi, conj Phi, Phi', conj Phi') / |Phi|^6.

    Args:
        phi (PhiCurve): the curve
        t (complex): the parameter

    Returns:
        tuple: the floats (K, kappa)

    """
    value = phi.value(t)
    derivative = phi.derivative_value(t)
    norm2 = np.vdot(value, value).real
    if np.sqrt(norm2) <= 1e-10:
        raise DegeneratePointError('Phi vanishes at t = {}'.format(t))
    projection = np.vdot(value, derivative)
    normal = derivative - (projection / norm2) * value
    K = -4 * np.vdot(normal, normal).real / norm2 ** 2
    wedge = norm2 * np.vdot(derivative, derivative).real - abs(projection) ** 2
    K_wedge = -4 * wedge / norm2 ** 3
    if not _agree(K, K_wedge, K):
        msg = 'Gauss curvature routes disagree: {} and {}'.format(K, K_wedge)
        raise InternalInconsistencyError(msg)
    matrix = np.array([value, value.conj(), derivative, derivative.conj()])
    kappa = -4 * np.linalg.det(matrix) / norm2 ** 3
    if abs(kappa.imag) > AGREEMENT_TOLERANCE * max(1.0, abs(K)):
        msg = 'normal curvature is not real: {}'.format(kappa)
        raise InternalInconsistencyError(msg)
    return float(K), float(kappa.real)


def _values(series, t):
    """Return the value and derivative value of a series at t."""
    return series.evaluate(t), series.differentiate().evaluate(t)


def _check_kind(kind, f, pair):
    """Validate the closed form kind, the pair flavor and f."""
    if kind not in CLOSED_FORM_KINDS:
        raise ValueError('unknown closed form kind: {!r}'.format(kind))
    if not isinstance(pair, HoloPair):
        raise TypeError('expected a HoloPair, got {}'.format(type(pair).__name__))
    if pair.flavor != CLOSED_FORM_KINDS[kind]:
        msg = '{} expects a {!r} pair, got {!r}'
        raise FlavorMismatchError(msg.format(kind, CLOSED_FORM_KINDS[kind], pair.flavor))
    if kind.startswith('general') and f is None:
        raise TypeError('{} requires the factor f'.format(kind))


def _pair_terms(kind, pair, t):
    """
    Return the per function terms of the closed forms.

    Args:
        kind (str): the closed form kind
        pair (HoloPair): the pair
        t (complex): the parameter

    Returns:
        tuple: (weights, slopes, product) where weights are cosh(Re w_j) or
        |g_j|^2 + 1, slopes are |w_j'| or |g_j'| and product is the
        product of the weights

    """
    if kind.endswith('_h'):
        pair = convert_pair(pair, 'w')
    (p, dp), (q, dq) = _values(pair.p, t), _values(pair.q, t)
    if pair.flavor == 'w':
        weights = np.cosh(p.real), np.cosh(q.real)
    else:
        weights = abs(p) ** 2 + 1, abs(q) ** 2 + 1
    return weights, (abs(dp), abs(dq))


def curvatures_closed_form(kind, f, pair, t):
    """
    Evaluate (K, kappa) from the closed forms of a representation.

    Args:
        kind (str): 'general_h', 'general_w', 'general_g', 'canonical_h',
            'canonical_w' or 'canonical_g'
        f (TaylorSeries): the factor of the general forms (None otherwise)
        pair (HoloPair): the pair of the kind's flavor
        t (complex): the parameter

    Returns:
        tuple: the floats (K, kappa)

    """
    _check_kind(kind, f, pair)
    (c1, c2), (d1, d2) = _pair_terms(kind, pair, t)
    r1, r2 = (d1 / c1) ** 2, (d2 / c2) ** 2
    g_flavor = kind.endswith('_g')
    if kind.startswith('general'):
        f2 = abs(f.evaluate(t)) ** 2
        prefactor = (2 if g_flavor else 0.5) / (f2 * c1 * c2)
    else:
        prefactor = (8 if g_flavor else 0.5) * d1 * d2 / (c1 * c2)
    return float(-prefactor * (r1 + r2)), float(prefactor * (r1 - r2))


def coefficient_E_closed_form(kind, f, pair, t):
    """
    Evaluate the conformal factor E from the closed forms.

    Args:
        kind (str): a closed form kind (see curvatures_closed_form)
        f (TaylorSeries): the factor of the general forms (None otherwise)
        pair (HoloPair): the pair of the kind's flavor
        t (complex): the parameter

    Returns:
        float: |f|^2 c1 c2 for general forms, c1 c2 / |w1' w2'| or
        c1 c2 / (4 |g1' g2'|) for canonical forms

    """
    _check_kind(kind, f, pair)
    (c1, c2), (d1, d2) = _pair_terms(kind, pair, t)
    if kind.startswith('general'):
        return float(abs(f.evaluate(t)) ** 2 * c1 * c2)
    if kind.endswith('_g'):
        return float(c1 * c2 / (4 * d1 * d2))
    return float(c1 * c2 / (d1 * d2))


def ellipse_invariants(K, kappa):
    """
    Return the curvature ellipse semi-axes (nu, mu) from (K, kappa).

    Args:
        K (float): the Gauss curvature
        kappa (float): the normal curvature

    Returns:
        tuple: nu = (sqrt(-K + kappa) + sqrt(-K - kappa)) / 2 and
        mu = (sqrt(-K + kappa) - sqrt(-K - kappa)) / 2

    """
    if not (K < 0 and -K > abs(kappa)):
        msg = 'not of general type: K = {}, kappa = {}'.format(K, kappa)
        raise NotGeneralTypeError(msg)
    plus, minus = np.sqrt(-K + kappa), np.sqrt(-K - kappa)
    return float((plus + minus) / 2), float((plus - minus) / 2)


def curvatures_from_invariants(nu, mu):
    """Return (K, kappa) = (-nu^2 - mu^2, 2 nu mu)."""
    return -(nu ** 2 + mu ** 2), 2 * nu * mu


def numu_closed_form(kind, pair, t):
    """
    Evaluate (nu, mu) in canonical coordinates from the closed forms.

    Args:
        kind (str): 'canonical_h', 'canonical_w' or 'canonical_g'
        pair (HoloPair): the pair of the kind's flavor
        t (complex): the parameter

    Returns:
        tuple: the floats (nu, mu) with nu > |mu|

    """
    if not kind.startswith('canonical'):
        raise ValueError('numu_closed_form needs a canonical kind: {!r}'.format(kind))
    _check_kind(kind, None, pair)
    (c1, c2), (d1, d2) = _pair_terms(kind, pair, t)
    if kind.endswith('_g'):
        scale = 2 * np.sqrt(d1 * d2 / (c1 * c2))
    else:
        scale = 0.5 * np.sqrt(d1 * d2 / (c1 * c2))
    nu = scale * (d1 / c1 + d2 / c2)
    mu = scale * (d1 / c1 - d2 / c2)
    if not nu > abs(mu):
        raise NotGeneralTypeError('nu = {} does not exceed |mu| = {}'.format(nu, abs(mu)))
    return float(nu), float(mu)


def canonical_invariants_from_phi(phi, t):
    """
    Compute (nu, mu) from Phi given in canonical coordinates of the first type.

    Args:
        phi (PhiCurve): a curve with Phi'^2 = 1
        t (complex): the parameter

    Returns:
        tuple: nu^2 = 2 (|Phi'_perp|^2 + 1) / |Phi|^4 and
        mu^2 = 2 (|Phi'_perp|^2 - 1) / |Phi|^4 with the sign of mu taken
        from kappa

    """
    derivative = phi.derivative_value(t)
    if abs(np.sum(derivative ** 2) - 1) > CANONICAL_POINT_TOLERANCE:
        raise NotCanonicalError("Phi'^2 is not 1 at t = {}".format(t))
    value = phi.value(t)
    norm2 = np.vdot(value, value).real
    normal = derivative - (np.vdot(value, derivative) / norm2) * value
    perp2 = np.vdot(normal, normal).real
    nu = np.sqrt(2 * (perp2 + 1)) / norm2
    mu = np.sqrt(max(2 * (perp2 - 1), 0.0)) / norm2
    _, kappa = curvatures_from_phi(phi, t)
    return float(nu), float(np.copysign(mu, kappa))


@dataclass(frozen=True)
class CurvatureSample(object):
    """The curvature data of one point of general type."""

    K: float
    kappa: float
    nu: float
    mu: float
    E: float

    def __post_init__(self):
        if not (self.K < 0 and -self.K > abs(self.kappa)):
            raise NotGeneralTypeError('sample is not of general type')
        if not self.E > 0:
            raise DegeneratePointError('E must be positive: {}'.format(self.E))
        K, kappa = curvatures_from_invariants(self.nu, self.mu)
        if not (_agree(K, self.K, self.K) and _agree(kappa, self.kappa, self.K)):
            raise InternalInconsistencyError('(nu, mu) do not match (K, kappa)')


def sample_point(phi, t):
    """
    Collect the curvature data of Phi at t.

    Args:
        phi (PhiCurve): the curve
        t (complex): the parameter

    Returns:
        CurvatureSample: K, kappa, nu, mu and E at t

    """
    K, kappa = curvatures_from_phi(phi, t)
    nu, mu = ellipse_invariants(K, kappa)
    value = phi.value(t)
    return CurvatureSample(K, kappa, nu, mu, 0.5 * np.vdot(value, value).real)


def sample_grid(phi, grid, progress=False):
    """
    Sample the curvature data of Phi on every grid node.

    Args:
        phi (PhiCurve): the curve
        grid (GridSpec): the parameter grid
        progress (bool): whether to show a progress bar over the rows

    Returns:
        dict: arrays of shape (rows, cols) keyed 'K', 'kappa', 'nu', 'mu', 'E'

    """
    names = ('K', 'kappa', 'nu', 'mu', 'E')
    fields = {name: np.empty(grid.shape) for name in names}
    t = grid.points()
    for row in tqdm(range(grid.rows), desc='curvature', disable=not progress):
        for col in range(grid.cols):
            sample = sample_point(phi, t[row, col])
            for name in names:
                fields[name][row, col] = getattr(sample, name)
    return fields


# explicitly define the outward facing API of this module
__all__ = [
    curvatures_from_phi.__name__,
    curvatures_closed_form.__name__,
    coefficient_E_closed_form.__name__,
    ellipse_invariants.__name__,
    curvatures_from_invariants.__name__,
    numu_closed_form.__name__,
    canonical_invariants_from_phi.__name__,
    CurvatureSample.__name__,
    sample_point.__name__,
    sample_grid.__name__,
]
