"""Weierstrass representations of minimal surfaces in R^4.

A minimal surface is described by an isotropic holomorphic curve
Phi = (phi_1, phi_2, phi_3, phi_4) with Phi^2 = 0. This module builds such
curves from pairs of holomorphic functions in the hyperbolic (h), the
exponential (w) and the stereographic (g) flavors.
"""
import logging
import numpy as np
from ._errors import DegenerateRecoveryError
from ._errors import FlavorMismatchError
from ._errors import InternalInconsistencyError
from ._errors import SuperconformalInputError
from ._errors import ZeroFError
from .series import TaylorSeries
from .series import ZERO_TOLERANCE


_LOGGER = logging.getLogger(__name__)


# the provenance tags a curve can carry
KINDS = ('general', 'canonical_first', 'canonical_second')


# the flavors of holomorphic pairs
FLAVORS = ('h', 'w', 'g')


# the representations and the flavor each one consumes
FORMS = {'W1': 'h', 'W2': 'h', 'W5': 'w', 'W6': 'g'}


# the isotropy tolerance of built curves, relative to the coefficient scale
ISOTROPY_TOLERANCE = 1e-10


# the tolerance of Phi'^2 = +-1 on canonical curves
CANONICAL_TOLERANCE = 1e-9


def _scaled_residual(residual, components):
    """
    Return the max residual coefficient relative to a product scale.

    Args:
        residual (TaylorSeries): a quadratic expression of the components
        components (iterable): the series the expression was built from

    Returns:
        float: max |residual coefficient| / max(1, max |coefficient|^2)

    """
    scale = max(np.max(np.abs(c.coeffs)) for c in components)
    return np.max(np.abs(residual.coeffs)) / max(1.0, scale ** 2)


def _square(components):
    """Return the bilinear square sum_j c_j^2 of a tuple of series."""
    total = components[0] * components[0]
    for component in components[1:]:
        total = total + component * component
    return total


class HoloPair(object):
    """A pair of holomorphic functions with a flavor tag."""

    def __init__(self, p, q, flavor):
        """
        Initialize a new holomorphic pair.

        Args:
            p (TaylorSeries): the first function
            q (TaylorSeries): the second function
            flavor (str): one of 'h', 'w', 'g'

        Returns:
            None

        """
        if flavor not in FLAVORS:
            raise ValueError('unknown flavor: {!r}'.format(flavor))
        if not isinstance(p, TaylorSeries) or not isinstance(q, TaylorSeries):
            raise TypeError('pair members must be TaylorSeries')
        # bring both members to a common truncation order
        order = min(p.order, q.order)
        self.p = p.truncate(order)
        self.q = q.truncate(order)
        # adding the members checks that their bases agree
        _ = self.p + self.q
        self.flavor = flavor

    def __repr__(self):
        return 'HoloPair(flavor={!r}, base={})'.format(self.flavor, self.base)

    def __iter__(self):
        return iter((self.p, self.q))

    @property
    def base(self):
        """Return the common expansion point."""
        return self.p.base

    @property
    def order(self):
        """Return the common truncation order."""
        return self.p.order

    def is_general_type(self):
        """
        Return whether the pair describes a general type point at its base.

        Returns:
            bool: h1'^2 != h2'^2 for h pairs, w1' w2' != 0 for w pairs,
            g1' g2' != 0 for g pairs

        """
        dp = self.p.differentiate()[0]
        dq = self.q.differentiate()[0]
        if self.flavor == 'h':
            return abs(dp ** 2 - dq ** 2) > ZERO_TOLERANCE
        return abs(dp) > ZERO_TOLERANCE and abs(dq) > ZERO_TOLERANCE


class PhiCurve(object):
    """An isotropic holomorphic curve Phi in C^4."""

    def __init__(self, components, kind='general'):
        """
        Initialize a new curve.

        Args:
            components (iterable): four TaylorSeries over a common base
            kind (str): the provenance tag ('general', 'canonical_first',
                'canonical_second')

        Returns:
            None

        """
        components = tuple(components)
        if kind not in KINDS:
            raise ValueError('unknown curve kind: {!r}'.format(kind))
        if not components:
            raise ValueError('a curve needs components')
        order = min(c.order for c in components)
        components = tuple(c.truncate(order) for c in components)
        for component in components[1:]:
            _ = components[0] + component
        # a curve must not vanish at its base
        if sum(abs(c[0]) ** 2 for c in components) <= 1e-12:
            raise ValueError('curve vanishes at its base')
        self.components = components
        self.kind = kind
        self._prime = tuple(c.differentiate() for c in components)

    def __repr__(self):
        template = 'PhiCurve(kind={!r}, base={}, order={})'
        return template.format(self.kind, self.base, self.order)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, index):
        return self.components[index]

    def __len__(self):
        return len(self.components)

    @property
    def base(self):
        """Return the common expansion point."""
        return self.components[0].base

    @property
    def order(self):
        """Return the common truncation order."""
        return self.components[0].order

    @property
    def prime(self):
        """Return the derivative series of every component."""
        return self._prime

    def square(self):
        """Return the series Phi^2 = sum phi_j^2."""
        return _square(self.components)

    def prime_square(self):
        """Return the series Phi'^2 = sum phi_j'^2."""
        return _square(self._prime)

    def isotropy_residual(self):
        """Return the largest scaled coefficient of Phi^2."""
        return _scaled_residual(self.square(), self.components)

    def canonical_residual(self, sign=1):
        """Return the largest scaled coefficient of Phi'^2 - sign."""
        return _scaled_residual(self.prime_square() - sign, self._prime)

    def value(self, t):
        """
        Evaluate the curve.

        Args:
            t (complex): the parameter

        Returns:
            numpy.ndarray: the complex vector Phi(t)

        """
        return np.array([c.evaluate(t) for c in self.components])

    def derivative_value(self, t):
        """Return the complex vector Phi'(t)."""
        return np.array([c.evaluate(t) for c in self._prime])

    def scaled(self, factor):
        """Return the curve multiplied by a complex constant."""
        return PhiCurve([c * factor for c in self.components], self.kind)

    def allclose(self, other, tol=1e-10, allow_sign=False):
        """
        Compare two curves coefficient by coefficient.

        Args:
            other (PhiCurve): the curve to compare against
            tol (float): the largest allowed coefficient difference
            allow_sign (bool): whether Phi and -Phi are considered equal

        Returns:
            bool: whether the curves agree within tol

        """
        def distance(sign):
            order = min(self.order, other.order)
            return max(
                np.max(np.abs(a.coeffs[:order + 1] - sign * b.coeffs[:order + 1]))
                for a, b in zip(self.components, other.components)
            )
        if len(self) != len(other) or abs(self.base - other.base) > 1e-12:
            return False
        if distance(1) <= tol:
            return True
        return allow_sign and distance(-1) <= tol


def _check_pair(pair, flavor):
    """Raise if a pair is not of the expected flavor."""
    if not isinstance(pair, HoloPair):
        raise TypeError('expected a HoloPair, got {}'.format(type(pair).__name__))
    if pair.flavor != flavor:
        msg = 'expected a {!r} pair, got a {!r} pair'.format(flavor, pair.flavor)
        raise FlavorMismatchError(msg)


def _finish(components, kind):
    """Build a curve and assert that it is isotropic."""
    curve = PhiCurve(components, kind)
    residual = curve.isotropy_residual()
    _LOGGER.debug('built %s curve with Phi^2 residual %.3e', kind, residual)
    if residual > ISOTROPY_TOLERANCE:
        msg = 'built curve violates Phi^2 = 0 by {:.3e}'.format(residual)
        raise InternalInconsistencyError(msg)
    return curve


def build_representation(form, f, pair):
    """
    Build Phi from one of the general Weierstrass representations.

    Args:
        form (str): 'W1' (trigonometric, h), 'W2' (hyperbolic, h),
            'W5' (exponential, w) or 'W6' (stereographic, g)
        f (TaylorSeries): the nonvanishing scalar factor
        pair (HoloPair): the pair of the flavor the form consumes

    Returns:
        PhiCurve: the isotropic curve with kind 'general'

    """
    if form not in FORMS:
        raise ValueError('unknown representation: {!r}'.format(form))
    _check_pair(pair, FORMS[form])
    if abs(f[0]) <= ZERO_TOLERANCE:
        raise ZeroFError('f vanishes at the base point')
    p, q = pair
    if form == 'W1':
        components = (f * p.cos(), f * p.sin(), 1j * f * q.cos(), 1j * f * q.sin())
    elif form == 'W2':
        components = (1j * f * p.cosh(), f * p.sinh(), f * q.cosh(), 1j * f * q.sinh())
    elif form == 'W5':
        half_sum = (p + q) * 0.5
        half_diff = (p - q) * 0.5
        components = (
            1j * f * half_sum.cosh(),
            f * half_sum.sinh(),
            f * half_diff.cosh(),
            1j * f * half_diff.sinh(),
        )
    else:
        product = p * q
        components = (
            1j * f * (product + 1),
            f * (product - 1),
            f * (p + q),
            1j * f * (p - q),
        )
    return _finish(components, 'general')


def build_canonical(pair):
    """
    Build Phi in canonical coordinates of the first type.

    Args:
        pair (HoloPair): a general type pair of any flavor

    Returns:
        PhiCurve: the isotropic curve with Phi'^2 = 1 and kind
        'canonical_first'

    """
    if not isinstance(pair, HoloPair):
        raise TypeError('expected a HoloPair, got {}'.format(type(pair).__name__))
    p, q = pair
    dp, dq = p.differentiate(), q.differentiate()
    if pair.flavor == 'h':
        if abs(dp[0] ** 2 - dq[0] ** 2) <= ZERO_TOLERANCE:
            raise SuperconformalInputError("superconformal: h1'^2 = h2'^2")
        scale = 1 / (dp * dp - dq * dq).sqrt()
        components = (1j * p.cosh(), p.sinh(), q.cosh(), 1j * q.sinh())
    else:
        if abs(dp[0]) <= ZERO_TOLERANCE:
            raise SuperconformalInputError("superconformal: {}1' = 0".format(pair.flavor))
        if abs(dq[0]) <= ZERO_TOLERANCE:
            raise SuperconformalInputError("superconformal: {}2' = 0".format(pair.flavor))
        scale = 1 / (dp * dq).sqrt()
        if pair.flavor == 'w':
            half_sum = (p + q) * 0.5
            half_diff = (p - q) * 0.5
            components = (
                1j * half_sum.cosh(),
                half_sum.sinh(),
                half_diff.cosh(),
                1j * half_diff.sinh(),
            )
        else:
            product = p * q
            components = (
                0.5j * (product + 1),
                0.5 * (product - 1),
                0.5 * (p + q),
                0.5j * (p - q),
            )
    curve = _finish([scale * c for c in components], 'canonical_first')
    residual = curve.canonical_residual(1)
    if residual > CANONICAL_TOLERANCE:
        msg = "canonical curve violates Phi'^2 = 1 by {:.3e}".format(residual)
        raise InternalInconsistencyError(msg)
    return curve


def convert_pair(pair, to):
    """
    Convert a holomorphic pair to another flavor.

    Args:
        pair (HoloPair): the pair to convert
        to (str): the target flavor

    Returns:
        HoloPair: w = (h1 + h2, h1 - h2), h = ((w1 + w2)/2, (w1 - w2)/2),
        g = (e^w1, e^w2) and w = (Log g1, Log g2)

    """
    if to not in FLAVORS:
        raise ValueError('unknown flavor: {!r}'.format(to))
    if pair.flavor == to:
        return pair
    p, q = pair
    if pair.flavor == 'h':
        w = HoloPair(p + q, p - q, 'w')
        return convert_pair(w, to)
    if pair.flavor == 'g':
        w = HoloPair(p.log(), q.log(), 'w')
        return convert_pair(w, to)
    if to == 'h':
        return HoloPair((p + q) * 0.5, (p - q) * 0.5, 'h')
    return HoloPair(p.exp(), q.exp(), 'g')


def recover_triplet(phi):
    """
    Recover (f, g1, g2) of the stereographic representation from Phi.

    Args:
        phi (PhiCurve): an isotropic curve

    Returns:
        tuple: f = -(i phi_1 + phi_2)/2, g1 = -(phi_3 - i phi_4)/(i phi_1 + phi_2)
        and g2 = -(phi_3 + i phi_4)/(i phi_1 + phi_2)

    """
    phi1, phi2, phi3, phi4 = phi.components
    s = 1j * phi1 + phi2
    if abs(s[0]) <= ZERO_TOLERANCE:
        raise DegenerateRecoveryError('i phi_1 + phi_2 vanishes at the base')
    f = s * -0.5
    g1 = -(phi3 - 1j * phi4) / s
    g2 = -(phi3 + 1j * phi4) / s
    return f, g1, g2


# explicitly define the outward facing API of this module
__all__ = [
    HoloPair.__name__,
    PhiCurve.__name__,
    build_representation.__name__,
    build_canonical.__name__,
    convert_pair.__name__,
    recover_triplet.__name__,
]
