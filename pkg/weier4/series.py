"""Truncated complex Taylor series around a base point."""
import cmath
import logging
import math
import operator
import numpy as np
from ._errors import BaseMismatchError
from ._errors import CompositionOutsideRadiusError
from ._errors import DivisionByZeroConstantTermError
from ._errors import LogAtZeroError
from ._errors import NotInvertibleAtBaseError
from ._errors import OutsideTrustRadiusError
from ._errors import RootAtBranchPointError


_LOGGER = logging.getLogger(__name__)


# the default truncation degree of every series built by the package
DEFAULT_ORDER = 24


# coefficients smaller than this in magnitude are flushed to zero
FLUSH_THRESHOLD = 1e-300


# a constant term smaller than this is treated as zero
ZERO_TOLERANCE = 1e-14


# base points closer than this are considered equal
BASE_TOLERANCE = 1e-12


def _principal(value):
    """Return a complex value whose negative zero imaginary part is cleared."""
    value = complex(value)
    return complex(value.real, value.imag + 0.0)


def _merge_radius(*radii):
    """
    Return the trust radius of a result built from operands.

    Args:
        radii: the trust radii of the operands (None when unknown)

    Returns:
        the smallest radius, or None if any operand radius is unknown

    """
    if any(radius is None for radius in radii):
        return None
    return min(radii)


def _convolve(a, b, order):
    """Return the truncated Cauchy product of two coefficient arrays."""
    return np.convolve(a[:order + 1], b[:order + 1])[:order + 1]


def _compose_coeffs(outer, inner, order):
    """
    Compose coefficient arrays with Horner's scheme.

    Args:
        outer (numpy.ndarray): coefficients of the outer polynomial
        inner (numpy.ndarray): coefficients of the inner series whose
            constant term is zero
        order (int): the truncation degree

    Returns:
        numpy.ndarray: the coefficients of outer(inner(s))

    """
    result = np.zeros(order + 1, dtype=np.complex128)
    for coefficient in outer[order::-1]:
        result = _convolve(result, inner, order)
        result[0] += coefficient
    return result


class TaylorSeries(object):
    """An immutable truncated power series sum c_k (t - base)^k."""

    def __init__(self, coeffs, base=0j, order=None, radius=None):
        """
        Initialize a new Taylor series.

        Args:
            coeffs (iterable): the complex coefficients c_0, c_1, ...
            base (complex): the expansion point
            order (int): the truncation degree (defaults to len(coeffs) - 1)
            radius (float): the trust radius for evaluation (None if unknown)

        Returns:
            None

        """
        coeffs = np.array(coeffs, dtype=np.complex128).ravel()
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if not isinstance(order, (int, np.integer)) or order < 0:
            raise TypeError('order must be a non-negative int: {}'.format(order))
        # pad or truncate the coefficients to the requested order
        padded = np.zeros(order + 1, dtype=np.complex128)
        count = min(len(coeffs), order + 1)
        padded[:count] = coeffs[:count]
        if not np.all(np.isfinite(padded)):
            raise ValueError('series coefficients must be finite')
        if radius is not None and not radius > 0:
            raise ValueError('radius must be positive: {}'.format(radius))
        # flush subnormal noise so recurrences stay well scaled
        padded[np.abs(padded) < FLUSH_THRESHOLD] = 0
        padded.setflags(write=False)
        self._coeffs = padded
        self._base = complex(base)
        self._order = int(order)
        self._radius = radius

    @classmethod
    def variable(cls, base=0j, order=DEFAULT_ORDER):
        """
        Return the identity series t around a base point.

        Args:
            base (complex): the expansion point
            order (int): the truncation degree

        Returns:
            TaylorSeries: the series base + (t - base)

        """
        return cls([base, 1], base=base, order=order, radius=math.inf)

    @classmethod
    def constant(cls, value, base=0j, order=DEFAULT_ORDER):
        """Return the constant series with the given value."""
        return cls([value], base=base, order=order, radius=math.inf)

    @property
    def coeffs(self):
        """Return the read-only coefficient array."""
        return self._coeffs

    @property
    def base(self):
        """Return the expansion point."""
        return self._base

    @property
    def order(self):
        """Return the truncation degree."""
        return self._order

    @property
    def radius(self):
        """Return the trust radius (None if unknown)."""
        return self._radius

    def with_radius(self, radius):
        """Return a copy of the series with another trust radius."""
        return TaylorSeries(self._coeffs, self._base, self._order, radius)

    def truncate(self, order):
        """Return the series truncated to a lower degree."""
        order = min(order, self._order)
        return TaylorSeries(self._coeffs, self._base, order, self._radius)

    def __repr__(self):
        """Return a debugging representation of the series."""
        template = 'TaylorSeries(base={}, order={}, coeffs={})'
        return template.format(self._base, self._order, self._coeffs[:4])

    def __getitem__(self, index):
        """Return the coefficient of (t - base)^index."""
        if index > self._order:
            return 0j
        return complex(self._coeffs[index])

    def __call__(self, t):
        """Evaluate the series at t."""
        return self.evaluate(t)

    #
    # MARK: Arithmetic
    #

    def _coerce(self, other):
        """Return other as a series matching this one, checking bases."""
        if isinstance(other, TaylorSeries):
            if abs(other.base - self._base) > BASE_TOLERANCE:
                msg = 'series bases differ: {} and {}'.format(self._base, other.base)
                raise BaseMismatchError(msg)
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return TaylorSeries.constant(other, self._base, self._order)
        return NotImplemented

    def _combine(self, other, coeffs, order):
        """Return a new series over the merged radius of two operands."""
        radius = _merge_radius(self._radius, other.radius)
        return TaylorSeries(coeffs, self._base, order, radius)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self._order, other.order)
        coeffs = self._coeffs[:order + 1] + other.coeffs[:order + 1]
        return self._combine(other, coeffs, order)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(-self._coeffs, self._base, self._order, self._radius)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            coeffs = self._coeffs * complex(other)
            return TaylorSeries(coeffs, self._base, self._order, self._radius)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self._order, other.order)
        coeffs = _convolve(self._coeffs, other.coeffs, order)
        return self._combine(other, coeffs, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            if abs(other) < ZERO_TOLERANCE:
                raise DivisionByZeroConstantTermError('division by zero scalar')
            return self * (1 / complex(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = other.coeffs
        if abs(b[0]) <= ZERO_TOLERANCE:
            msg = 'divisor vanishes at its base: {}'.format(complex(b[0]))
            raise DivisionByZeroConstantTermError(msg)
        order = min(self._order, other.order)
        a = self._coeffs
        q = np.zeros(order + 1, dtype=np.complex128)
        # q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0
        for k in range(order + 1):
            q[k] = (a[k] - np.dot(b[1:k + 1], q[k - 1::-1][:k])) / b[0]
        # a quotient may have poles the operands lack
        return TaylorSeries(q, self._base, order, None)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, (int, np.integer)):
            return self.power(exponent)
        if exponent < 0:
            return 1 / (self ** -exponent)
        # square and multiply
        result = TaylorSeries.constant(1, self._base, self._order)
        square = self
        while exponent:
            if exponent & 1:
                result = result * square
            square = square * square
            exponent >>= 1
        return result

    #
    # MARK: Calculus
    #

    def differentiate(self):
        """
        Return the derivative of the series.

        Returns:
            TaylorSeries: the derivative, one degree lower

        """
        if self._order == 0:
            return TaylorSeries([0], self._base, 0, self._radius)
        coeffs = self._coeffs[1:] * np.arange(1, self._order + 1)
        return TaylorSeries(coeffs, self._base, self._order - 1, self._radius)

    def integrate(self):
        """
        Return the antiderivative vanishing at the base.

        Returns:
            TaylorSeries: the antiderivative, one degree higher

        """
        coeffs = np.zeros(self._order + 2, dtype=np.complex128)
        coeffs[1:] = self._coeffs / np.arange(1, self._order + 2)
        return TaylorSeries(coeffs, self._base, self._order + 1, self._radius)

    #
    # MARK: Transcendental functions
    #

    def exp(self):
        """Return exp of the series."""
        a = self._coeffs
        n = self._order
        e = np.zeros(n + 1, dtype=np.complex128)
        e[0] = cmath.exp(a[0])
        weighted = a * np.arange(n + 1)
        # e_k = (1/k) sum_{j=1..k} j a_j e_{k-j}
        for k in range(1, n + 1):
            e[k] = np.dot(weighted[1:k + 1], e[k - 1::-1][:k]) / k
        return TaylorSeries(e, self._base, n, self._radius)

    def cosh(self):
        """Return cosh of the series."""
        return (self.exp() + (-self).exp()) * 0.5

    def sinh(self):
        """Return sinh of the series."""
        return (self.exp() - (-self).exp()) * 0.5

    def cos(self):
        """Return cos of the series."""
        return ((self * 1j).exp() + (self * -1j).exp()) * 0.5

    def sin(self):
        """Return sin of the series."""
        return ((self * 1j).exp() - (self * -1j).exp()) * -0.5j

    def log(self):
        """
        Return the principal logarithm of the series.

        Returns:
            TaylorSeries: the series whose constant term is Log(c_0)

        """
        a = self._coeffs
        if abs(a[0]) <= ZERO_TOLERANCE:
            raise LogAtZeroError('log of a series vanishing at its base')
        n = self._order
        l = np.zeros(n + 1, dtype=np.complex128)
        l[0] = cmath.log(_principal(a[0]))
        # k l_k a_0 = k a_k - sum_{j=1..k-1} j l_j a_{k-j}
        for k in range(1, n + 1):
            j = np.arange(1, k)
            l[k] = (a[k] - np.dot(j * l[1:k], a[k - 1:0:-1]) / k) / a[0]
        return TaylorSeries(l, self._base, n, None)

    def power(self, p):
        """
        Return the principal power A^p of the series.

        Args:
            p (float or complex): the exponent

        Returns:
            TaylorSeries: the series with constant term c_0^p (principal)

        """
        a = self._coeffs
        if abs(a[0]) <= ZERO_TOLERANCE:
            msg = 'fractional power of a series vanishing at its base'
            raise RootAtBranchPointError(msg)
        n = self._order
        q = np.zeros(n + 1, dtype=np.complex128)
        q[0] = _principal(a[0]) ** p
        # k a_0 q_k = sum_{j=1..k} (p j - (k - j)) a_j q_{k-j}
        for k in range(1, n + 1):
            j = np.arange(1, k + 1)
            weights = (p * j - (k - j)) * a[1:k + 1]
            q[k] = np.dot(weights, q[k - 1::-1][:k]) / (k * a[0])
        return TaylorSeries(q, self._base, n, None)

    def sqrt(self):
        """Return the principal square root of the series."""
        return self.power(0.5)

    def root4(self):
        """Return the principal fourth root of the series."""
        return self.power(0.25)

    #
    # MARK: Composition
    #

    def shift(self, base):
        """
        Re-expand the truncated polynomial around another base point.

        Args:
            base (complex): the new expansion point

        Returns:
            TaylorSeries: the same polynomial expanded around base

        """
        delta = complex(base) - self._base
        d = np.array(self._coeffs)
        n = self._order
        for i in range(n):
            for j in range(n - 1, i - 1, -1):
                d[j] += delta * d[j + 1]
        radius = self._radius
        if radius is not None:
            radius = radius - abs(delta)
            if radius <= 0:
                radius = None
        return TaylorSeries(d, base, n, radius)

    def compose(self, inner):
        """
        Return the composition self(inner(s)).

        Args:
            inner (TaylorSeries): the inner series

        Returns:
            TaylorSeries: the composition expanded around inner.base

        """
        center = inner.coeffs[0]
        if self._radius is not None and abs(center - self._base) >= self._radius:
            msg = 'inner value {} is outside the trust disc of radius {}'
            raise CompositionOutsideRadiusError(msg.format(center, self._radius))
        order = min(self._order, inner.order)
        outer = self if center == self._base else self.shift(center)
        shifted = np.array(inner.coeffs[:order + 1])
        shifted[0] = 0
        coeffs = _compose_coeffs(outer.coeffs, shifted, order)
        radius = None
        if self._radius == math.inf and inner.radius == math.inf:
            radius = math.inf
        return TaylorSeries(coeffs, inner.base, order, radius)

    def revert(self):
        """
        Return the compositional inverse of the series.

        Returns:
            TaylorSeries: the inverse B expanded around c_0 with B(c_0) = base

        """
        a = np.array(self._coeffs)
        if abs(a[1] if self._order else 0) <= ZERO_TOLERANCE:
            raise NotInvertibleAtBaseError('derivative vanishes at the base')
        n = self._order
        a1 = a[1]
        a[0] = 0
        s = np.zeros(n + 1, dtype=np.complex128)
        s[1] = 1
        b = s / a1
        # every pass fixes one more coefficient of the inverse
        for _ in range(n):
            higher = _compose_coeffs(a, b, n) - a1 * b
            b = (s - higher) / a1
        b[0] = self._base
        _LOGGER.debug('reverted series of order %d around %s', n, self._coeffs[0])
        return TaylorSeries(b, self._coeffs[0], n, None)

    #
    # MARK: Evaluation
    #

    def evaluate(self, t):
        """
        Evaluate the series at a point or an array of points.

        Args:
            t (complex or numpy.ndarray): the evaluation point(s)

        Returns:
            complex or numpy.ndarray: the value(s) of the series

        """
        delta = np.asarray(t, dtype=np.complex128) - self._base
        if self._radius is not None and self._radius != math.inf:
            if np.any(np.abs(delta) >= self._radius):
                msg = 'point outside the trust radius {}'.format(self._radius)
                raise OutsideTrustRadiusError(msg)
        result = np.zeros_like(delta)
        for coefficient in self._coeffs[::-1]:
            result = result * delta + coefficient
        if result.ndim == 0:
            return complex(result)
        return result


# arithmetic operations by symbol and by name
_ARITHMETIC = {
    '+': operator.add, 'add': operator.add,
    '-': operator.sub, 'sub': operator.sub,
    '*': operator.mul, 'mul': operator.mul,
    '/': operator.truediv, 'div': operator.truediv,
}


def arith(op, a, b):
    """
    Apply an arithmetic operation to two series.

    Args:
        op (str): one of '+', '-', '*', '/' or add, sub, mul, div
        a (TaylorSeries): the left operand
        b (TaylorSeries): the right operand

    Returns:
        TaylorSeries: the truncated result

    """
    try:
        function = _ARITHMETIC[op]
    except KeyError:
        raise ValueError('unknown arithmetic operation: {}'.format(op))
    return function(a, b)


# calculus operations by letter and by name
_CALCULUS = {
    'd': 'differentiate', 'differentiate': 'differentiate',
    'i': 'integrate', 'integrate': 'integrate',
}


def calculus(op, a):
    """Differentiate ('d', differentiate) or integrate ('i', integrate) a series."""
    try:
        method = _CALCULUS[op]
    except KeyError:
        raise ValueError('unknown calculus operation: {}'.format(op))
    return getattr(a, method)()


_TRANSCENDENTAL = {
    'exp': TaylorSeries.exp,
    'cosh': TaylorSeries.cosh,
    'sinh': TaylorSeries.sinh,
    'cos': TaylorSeries.cos,
    'sin': TaylorSeries.sin,
    'log': TaylorSeries.log,
    'sqrt': TaylorSeries.sqrt,
    'root4': TaylorSeries.root4,
}


def transcend(op, a):
    """Apply a named elementary function to a series."""
    try:
        function = _TRANSCENDENTAL[op]
    except KeyError:
        raise ValueError('unknown function: {}'.format(op))
    return function(a)


def compose(a, b):
    """Return the composition a(b(s))."""
    return a.compose(b)


def revert(a):
    """Return the compositional inverse of a."""
    return a.revert()


def evaluate(a, t):
    """Evaluate a series at t."""
    return a.evaluate(t)


# explicitly define the outward facing API of this module
__all__ = [
    TaylorSeries.__name__,
    arith.__name__,
    calculus.__name__,
    transcend.__name__,
    compose.__name__,
    revert.__name__,
    evaluate.__name__,
    'DEFAULT_ORDER',
]
