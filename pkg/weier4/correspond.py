"""Correspondence between minimal surfaces in R^4 and pairs of surfaces in R^3.

A canonical g-pair (g1, g2) of a surface in R^4 splits into two minimal
surfaces in R^3 given by the canonical representation of g1 and g2 alone.
The principal curvatures nu_1, nu_2 of those surfaces and the curvatures
(K, kappa) of the surface in R^4 determine each other, and both sides are
invariant under Mobius maps of the g's.
"""
import logging
import numpy as np
from ._errors import DegenerateGError
from ._errors import FlavorMismatchError
from ._errors import NonPositiveNuError
from ._errors import NotGeneralTypeError
from ._errors import NotGeneralTypeFieldError
from ._errors import NotUnitaryError
from ._errors import PoleAtBaseError
from ._grid import GridSpec
from .curvature import curvatures_closed_form
from .series import ZERO_TOLERANCE
from .weierstrass import HoloPair
from .weierstrass import PhiCurve


_LOGGER = logging.getLogger(__name__)


# the tolerance of |a|^2 + |b|^2 = 1
UNITARY_TOLERANCE = 1e-12


# the relative tolerance of pointwise curvature equality
EQUIVALENCE_TOLERANCE = 1e-8


# the roles a scalar field can play
ROLES = ('K', 'kappa', 'nu')


class MobiusMap(object):
    """The rotation g -> (-conj(b) + conj(a) g) / (a + b g) of the sphere."""

    def __init__(self, a, b):
        """
        Initialize a new Mobius map.

        Args:
            a (complex): the first coefficient
            b (complex): the second coefficient, |a|^2 + |b|^2 = 1

        Returns:
            None

        """
        a, b = complex(a), complex(b)
        if abs(abs(a) ** 2 + abs(b) ** 2 - 1) > UNITARY_TOLERANCE:
            raise NotUnitaryError('|a|^2 + |b|^2 = {}'.format(abs(a) ** 2 + abs(b) ** 2))
        self.a = a
        self.b = b

    @classmethod
    def random(cls, rng):
        """Draw a map from a uniformly random unit vector (a, b) of C^2."""
        vector = rng.standard_normal(4)
        vector /= np.linalg.norm(vector)
        return cls(complex(vector[0], vector[1]), complex(vector[2], vector[3]))

    def __repr__(self):
        return 'MobiusMap(a={}, b={})'.format(self.a, self.b)

    def matrix(self):
        """Return the SU(2) matrix [[conj a, -conj b], [b, a]]."""
        return np.array([[self.a.conjugate(), -self.b.conjugate()], [self.b, self.a]])

    def __matmul__(self, other):
        """Return the map applying other first and then self."""
        product = self.matrix() @ other.matrix()
        return MobiusMap(product[1, 1], product[1, 0])

    def __call__(self, g):
        """Apply the map to a complex value."""
        return (-self.b.conjugate() + self.a.conjugate() * g) / (self.a + self.b * g)


def mobius_apply(g, m):
    """
    Apply a Mobius map to a holomorphic function.

    Args:
        g (TaylorSeries): the function
        m (MobiusMap): the map

    Returns:
        TaylorSeries: (-conj(b) + conj(a) g) / (a + b g)

    """
    denominator = m.b * g + m.a
    if abs(denominator[0]) <= ZERO_TOLERANCE:
        raise PoleAtBaseError('a + b g vanishes at the base')
    return (m.a.conjugate() * g - m.b.conjugate()) / denominator


def mobius_apply_pair(pair, m1, m2):
    """
    Apply one Mobius map to each member of a g- or w-pair.

    Args:
        pair (HoloPair): a pair of flavor 'g' or 'w'
        m1 (MobiusMap): the map of the first member
        m2 (MobiusMap): the map of the second member

    Returns:
        HoloPair: the transformed pair of the same flavor, w-members through
        e^w -> m(e^w) with the principal logarithm

    """
    if pair.flavor == 'g':
        return HoloPair(mobius_apply(pair.p, m1), mobius_apply(pair.q, m2), 'g')
    if pair.flavor == 'w':
        p = mobius_apply(pair.p.exp(), m1).log()
        q = mobius_apply(pair.q.exp(), m2).log()
        return HoloPair(p, q, 'w')
    raise FlavorMismatchError('Mobius maps act on g- and w-pairs, not {!r}'.format(pair.flavor))


def nu_r3(g, t):
    """
    Return the principal curvature of the R^3 surface of g at t.

    Args:
        g (TaylorSeries): the function of the canonical representation
        t (complex): the parameter

    Returns:
        float: 4 |g'|^2 / (|g|^2 + 1)^2

    """
    value = g.evaluate(t)
    slope = g.differentiate().evaluate(t)
    if abs(slope) <= ZERO_TOLERANCE:
        raise DegenerateGError("g' vanishes at t = {}".format(t))
    return float(4 * abs(slope) ** 2 / (abs(value) ** 2 + 1) ** 2)


def build_r3(g):
    """
    Build the canonical representation of a minimal surface in R^3.

    Args:
        g (TaylorSeries): the stereographic normal with g'(base) != 0

    Returns:
        PhiCurve: ((g^2 - 1) / (2 g'), -i (g^2 + 1) / (2 g'), -g / g')

    """
    slope = g.differentiate()
    if abs(slope[0]) <= ZERO_TOLERANCE:
        raise DegenerateGError("g' vanishes at the base")
    square = g * g
    components = (
        (square - 1) / (2 * slope),
        (square + 1) * -0.5j / slope,
        -g / slope,
    )
    return PhiCurve(components, 'general')


def principal_curvature_r3(phi3, t):
    """
    Return the principal curvature of an R^3 minimal surface from its curve.

    Args:
        phi3 (PhiCurve): an isotropic curve in C^3
        t (complex): the parameter

    Returns:
        float: sqrt(L^2 + M^2) / E with the unit normal x_u x x_v

    """
    value = phi3.value(t)
    derivative = phi3.derivative_value(t)
    normal = np.cross(value.real, -value.imag)
    normal /= np.linalg.norm(normal)
    L = derivative.real @ normal
    M = -derivative.imag @ normal
    E = 0.5 * np.vdot(value, value).real
    return float(np.hypot(L, M) / E)


def split_combine(g1, g2, t):
    """
    Relate the principal curvatures of the split pair to (K, kappa).

    Args:
        g1 (TaylorSeries): the first function of a canonical g-pair
        g2 (TaylorSeries): the second function
        t (complex): the parameter

    Returns:
        tuple: (nu1, nu2, K, kappa) with K = -sqrt(nu1 nu2)(nu1 + nu2)/2 and
        kappa = sqrt(nu1 nu2)(nu1 - nu2)/2

    """
    nu1, nu2 = nu_r3(g1, t), nu_r3(g2, t)
    root = np.sqrt(nu1 * nu2)
    return nu1, nu2, float(-0.5 * root * (nu1 + nu2)), float(0.5 * root * (nu1 - nu2))


class ScalarField(object):
    """Values of K, kappa or nu on the nodes of a grid."""

    def __init__(self, grid, values, role):
        """
        Initialize a new scalar field.

        Args:
            grid (GridSpec): the grid
            values (numpy.ndarray): node values of shape (rows, cols)
            role (str): 'K', 'kappa' or 'nu'

        Returns:
            None

        """
        if role not in ROLES:
            raise ValueError('unknown field role: {!r}'.format(role))
        values = np.asarray(values, dtype=float)
        if values.shape != grid.shape:
            raise ValueError('field shape {} != grid {}'.format(values.shape, grid.shape))
        if not np.all(np.isfinite(values)):
            raise ValueError('field values must be finite')
        if role == 'nu' and not np.all(values > 0):
            raise NonPositiveNuError('nu field holds non-positive values')
        self.grid = grid
        self.values = values
        self.role = role

    def __repr__(self):
        return 'ScalarField(role={!r}, grid={})'.format(self.role, self.grid)

    def save(self, path):
        """
        Write the field as text.

        The first line is 'h <spacing> <role> <rows> <cols>', followed by one
        line of whitespace separated values per row.

        Args:
            path (str): the output path

        Returns:
            None

        """
        with open(path, 'w') as stream:
            header = 'h {!r} {} {} {}\n'
            stream.write(header.format(self.grid.h, self.role, self.grid.rows, self.grid.cols))
            for row in self.values:
                stream.write(' '.join('{:.17g}'.format(value) for value in row))
                stream.write('\n')

    @classmethod
    def load(cls, path):
        """
        Read a field written by save.

        Args:
            path (str): the input path

        Returns:
            ScalarField: the field on a grid whose first node is the origin

        """
        with open(path) as stream:
            header = stream.readline().split()
            if len(header) != 5 or header[0] != 'h':
                raise ValueError('malformed field header in {}'.format(path))
            h, role = float(header[1]), header[2]
            rows, cols = int(header[3]), int(header[4])
            values = np.loadtxt(stream, ndmin=2)
        return cls(GridSpec(0, 0, h, rows, cols), values, role)


def _match(*fields):
    """Raise unless every field lives on the same grid."""
    first = fields[0].grid
    for field in fields[1:]:
        if field.grid != first:
            raise ValueError('fields live on different grids')


def natural_residual_r3(nu):
    """
    Return the residual of Delta ln nu + 2 nu = 0.

    Args:
        nu (ScalarField): a principal curvature field in canonical coordinates

    Returns:
        float: the largest interior |Delta_h ln nu + 2 nu|

    """
    if nu.role != 'nu':
        raise ValueError('expected a nu field, got {!r}'.format(nu.role))
    laplacian = nu.grid.laplacian(np.log(nu.values))
    return float(np.max(np.abs(laplacian + 2 * nu.grid.interior(nu.values))))


def natural_residual_r4(K, kappa):
    """
    Return the residuals of the natural equations of a surface in R^4.

    The equations read (K^2 - kappa^2)^(1/4) Delta ln|kappa - K| = 2 (2K - kappa)
    and (K^2 - kappa^2)^(1/4) Delta ln|kappa + K| = 2 (2K + kappa).

    Args:
        K (ScalarField): the Gauss curvature in canonical coordinates
        kappa (ScalarField): the normal curvature on the same grid

    Returns:
        tuple: the largest interior residual of each equation

    """
    _match(K, kappa)
    k, x = K.values, kappa.values
    if not (np.all(k < 0) and np.all(-k > np.abs(x))):
        raise NotGeneralTypeFieldError('field holds a node that is not of general type')
    grid = K.grid
    scale = grid.interior((k ** 2 - x ** 2) ** 0.25)
    k_in, x_in = grid.interior(k), grid.interior(x)
    first = scale * grid.laplacian(np.log(np.abs(x - k))) - 2 * (2 * k_in - x_in)
    second = scale * grid.laplacian(np.log(np.abs(x + k))) - 2 * (2 * k_in + x_in)
    return float(np.max(np.abs(first))), float(np.max(np.abs(second)))


def nu_field(g, grid):
    """Sample nu of the R^3 surface of g on a grid."""
    t = grid.points()
    values = np.vectorize(lambda point: nu_r3(g, point))(t)
    return ScalarField(grid, values, 'nu')


def closed_form_fields(pair, grid):
    """
    Sample the canonical closed form (K, kappa) of a g-pair on a grid.

    Args:
        pair (HoloPair): a canonical g-pair
        grid (GridSpec): the grid

    Returns:
        tuple: the ScalarField values K and kappa

    """
    if pair.flavor != 'g':
        raise FlavorMismatchError('expected a g-pair, got {!r}'.format(pair.flavor))
    t = grid.points()
    K = np.empty(grid.shape)
    kappa = np.empty(grid.shape)
    for index in np.ndindex(*grid.shape):
        K[index], kappa[index] = curvatures_closed_form('canonical_g', None, pair, t[index])
    return ScalarField(grid, K, 'K'), ScalarField(grid, kappa, 'kappa')


def equivalent_pairs(p, q, grid):
    """
    Decide whether two canonical g-pairs give the same curvatures on a grid.

    Args:
        p (HoloPair): the first g-pair
        q (HoloPair): the second g-pair
        grid (GridSpec): the grid

    Returns:
        bool: whether K and kappa agree at every node within 1e-8 relative

    """
    for pair in (p, q):
        if not isinstance(pair, HoloPair) or pair.flavor != 'g':
            raise FlavorMismatchError('equivalence is decided on g-pairs')
    K1, kappa1 = closed_form_fields(p, grid)
    K2, kappa2 = closed_form_fields(q, grid)
    for K, kappa in ((K1, kappa1), (K2, kappa2)):
        if not (np.all(K.values < 0) and np.all(-K.values > np.abs(kappa.values))):
            raise NotGeneralTypeError('pair is not of general type on the grid')
    bound = EQUIVALENCE_TOLERANCE * np.maximum(1.0, np.abs(K1.values))
    dK = np.abs(K1.values - K2.values)
    dkappa = np.abs(kappa1.values - kappa2.values)
    _LOGGER.debug('equivalence deviation: K %.3e, kappa %.3e', dK.max(), dkappa.max())
    return bool(np.all(dK <= bound) and np.all(dkappa <= bound))


# explicitly define the outward facing API of this module
__all__ = [
    MobiusMap.__name__,
    mobius_apply.__name__,
    mobius_apply_pair.__name__,
    nu_r3.__name__,
    build_r3.__name__,
    principal_curvature_r3.__name__,
    split_combine.__name__,
    ScalarField.__name__,
    natural_residual_r3.__name__,
    natural_residual_r4.__name__,
    nu_field.__name__,
    closed_form_fields.__name__,
    equivalent_pairs.__name__,
]
