"""Canonical coordinates of general type minimal surfaces."""
import cmath
import logging
import numpy as np
from ._errors import InternalInconsistencyError
from ._errors import NotCanonicalError
from ._errors import NotInvertibleAtBaseError
from ._errors import SuperconformalInputError
from .series import TaylorSeries
from .weierstrass import CANONICAL_TOLERANCE
from .weierstrass import PhiCurve


_LOGGER = logging.getLogger(__name__)


# |Phi'^2(t)| below this times |Phi'(t)|^2 marks a superconformal point
SUPERCONFORMAL_TOLERANCE = 1e-10


# the tolerance of Phi'^2 = +-1 after a change of coordinates
REPARAM_TOLERANCE = 1e-8


# the tolerance of forward(inverse(s)) = s
IDENTITY_TOLERANCE = 1e-9


# the unit rotating canonical coordinates of one type into the other
_ROTATION = cmath.exp(0.25j * cmath.pi)


# the kind tag and the value of Phi'^2 of each canonical type
_TYPES = {'first': ('canonical_first', 1), 'second': ('canonical_second', -1)}


def phiprime_sq(phi):
    """Return the series Phi'^2 = sum phi_j'^2."""
    return phi.prime_square()


def classify_point(phi, t):
    """
    Classify a point of the surface.

    Args:
        phi (PhiCurve): the curve
        t (complex): the parameter

    Returns:
        str: 'superconformal' if Phi'^2(t) vanishes, 'general_type' otherwise

    """
    derivative = phi.derivative_value(t)
    square = abs(np.sum(derivative ** 2))
    scale = max(1.0, np.vdot(derivative, derivative).real)
    if square < SUPERCONFORMAL_TOLERANCE * scale:
        return 'superconformal'
    return 'general_type'


class Reparam(object):
    """A holomorphic (or antiholomorphic) change of the parameter."""

    def __init__(self, forward, inverse, target_type, conjugate=False):
        """
        Initialize a new change of parameter.

        Args:
            forward (TaylorSeries): the map t -> s (before conjugation)
            inverse (TaylorSeries): the map s -> t (after conjugation)
            target_type (str): 'first' or 'second'
            conjugate (bool): whether the actual maps are t -> conj(forward(t))
                and s -> inverse(conj(s))

        Returns:
            None

        """
        if target_type not in _TYPES:
            raise ValueError('unknown canonical type: {!r}'.format(target_type))
        if abs(forward.differentiate()[0]) <= 1e-14:
            raise NotInvertibleAtBaseError('forward map has a critical base point')
        identity = forward.compose(inverse)
        residual = max(abs(identity[0] - inverse.base), abs(identity[1] - 1),
                       np.max(np.abs(identity.coeffs[2:]), initial=0))
        if residual > IDENTITY_TOLERANCE:
            msg = 'forward and inverse disagree by {:.3e}'.format(residual)
            raise InternalInconsistencyError(msg)
        self.forward = forward
        self.inverse = inverse
        self.target_type = target_type
        self.conjugate = conjugate

    @classmethod
    def identity(cls, base=0j, order=24, target_type='first'):
        """Return the identity change of parameter around base."""
        variable = TaylorSeries.variable(base, order)
        return cls(variable, variable, target_type)

    def __repr__(self):
        template = 'Reparam(target_type={!r}, conjugate={})'
        return template.format(self.target_type, self.conjugate)

    def map(self, t):
        """Return the new parameter of the old parameter t."""
        s = self.forward.evaluate(t)
        return np.conj(s) if self.conjugate else s

    def unmap(self, s):
        """Return the old parameter of the new parameter s."""
        return self.inverse.evaluate(np.conj(s) if self.conjugate else s)


def _check_canonical(phi, sign):
    """Raise unless Phi'^2 equals sign to within the canonical tolerance."""
    residual = phi.canonical_residual(sign)
    if residual > REPARAM_TOLERANCE:
        msg = "Phi'^2 misses {} by {:.3e} after reparametrization".format(sign, residual)
        raise InternalInconsistencyError(msg)


def to_canonical(phi, target='first'):
    """
    Reparametrize Phi to canonical coordinates.

    The new parameter is s = integral of (+-Phi'^2)^(1/4) dt with the
    principal fourth root, and the new curve is Phi(t(s)) t'(s).

    Args:
        phi (PhiCurve): a curve of general type at its base
        target (str): 'first' (Phi'^2 = 1) or 'second' (Phi'^2 = -1)

    Returns:
        tuple: the canonical PhiCurve and the Reparam that produced it

    """
    if target not in _TYPES:
        raise ValueError('unknown canonical type: {!r}'.format(target))
    if classify_point(phi, phi.base) == 'superconformal':
        raise SuperconformalInputError("superconformal: Phi'^2 = 0 at the base")
    kind, sign = _TYPES[target]
    forward = (phiprime_sq(phi) * sign).root4().integrate()
    inverse = forward.revert()
    scale = inverse.differentiate()
    components = [component.compose(inverse) * scale for component in phi]
    canonical = PhiCurve(components, kind)
    _check_canonical(canonical, sign)
    _LOGGER.debug('canonical coordinates of the %s type, order %d', target, canonical.order)
    return canonical, Reparam(forward, inverse, target)


def _rotated(series, factor):
    """Return s -> series(factor s), expanded around base / factor."""
    powers = factor ** np.arange(series.order + 1)
    radius = None if series.radius is None else series.radius / abs(factor)
    return TaylorSeries(series.coeffs * powers, series.base / factor, series.order, radius)


def rotate_type(phi):
    """
    Swap the type of canonical coordinates by t = e^(i pi/4) s.

    The rotation is about t = 0, so a curve expanded around b comes back
    expanded around e^(-i pi/4) b.

    Args:
        phi (PhiCurve): a curve with Phi'^2 = 1 or Phi'^2 = -1

    Returns:
        PhiCurve: Phi(e^(i pi/4) s) e^(i pi/4), whose Phi'^2 has the
        opposite sign

    """
    if phi.canonical_residual(1) <= CANONICAL_TOLERANCE:
        kind = 'canonical_second'
    elif phi.canonical_residual(-1) <= CANONICAL_TOLERANCE:
        kind = 'canonical_first'
    else:
        raise NotCanonicalError("Phi'^2 is neither 1 nor -1")
    components = [_rotated(component, _ROTATION) * _ROTATION for component in phi]
    return PhiCurve(components, kind)


def conjugate_phi(phi):
    """
    Change the parameter by t = conj(s).

    Args:
        phi (PhiCurve): the curve

    Returns:
        PhiCurve: the curve s -> conj(Phi(conj(s))) around conj(base)

    """
    components = [
        TaylorSeries(np.conj(c.coeffs), np.conj(c.base), c.order, c.radius)
        for c in phi
    ]
    return PhiCurve(components, phi.kind)


def ambiguity_orbit(reparam):
    """
    Return the eight canonical coordinates sharing a base point.

    Canonical coordinates are unique up to s -> e s and s -> e conj(s) with
    e in {1, -1, i, -i}.

    Args:
        reparam (Reparam): one change of parameter to canonical coordinates

    Returns:
        list: eight Reparam values, the given one first

    """
    orbit = []
    for conjugate in (False, True):
        for unit in (1, -1, 1j, -1j):
            forward = reparam.forward * np.conj(unit)
            inverse = _rotated(reparam.inverse, unit)
            orbit.append(Reparam(forward, inverse, reparam.target_type, conjugate))
    return orbit


# explicitly define the outward facing API of this module
__all__ = [
    phiprime_sq.__name__,
    classify_point.__name__,
    Reparam.__name__,
    to_canonical.__name__,
    rotate_type.__name__,
    conjugate_phi.__name__,
    ambiguity_orbit.__name__,
]
