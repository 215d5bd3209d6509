"""Surface patches, fundamental forms and adapted frames."""
import logging
import numpy as np
from tqdm import tqdm
from ._errors import DegeneratePointError
from ._errors import NotOrthogonalError
from ._errors import UmbilicLikeFrameError
from ._grid import GridSpec
from .weierstrass import PhiCurve


_LOGGER = logging.getLogger(__name__)


# norms smaller than this mark a degenerate point
DEGENERACY_TOLERANCE = 1e-10


# the tolerance of A^T A = I and det A = 1 on motions
MOTION_TOLERANCE = 1e-12


def integrate_phi(phi):
    """
    Integrate a curve to the complex immersion Psi with Psi(base) = 0.

    Args:
        phi (PhiCurve): the isotropic curve

    Returns:
        tuple: one antiderivative TaylorSeries per component

    """
    return tuple(component.integrate() for component in phi)


class SurfacePatch(object):
    """A sampled conformal immersion x = Re Psi on a grid."""

    def __init__(self, grid, points, E, origin_pinned=False, fields=None):
        """
        Initialize a new surface patch.

        Args:
            grid (GridSpec): the parameter grid
            points (numpy.ndarray): real positions of shape (rows, cols, dim)
            E (numpy.ndarray): the conformal factor of shape (rows, cols)
            origin_pinned (bool): whether x(base) is the origin
            fields (dict): optional named scalar fields of shape (rows, cols)

        Returns:
            None

        """
        if not isinstance(grid, GridSpec):
            raise TypeError('grid must be a GridSpec')
        points = np.asarray(points, dtype=float)
        E = np.asarray(E, dtype=float)
        if points.shape[:2] != grid.shape or E.shape != grid.shape:
            raise ValueError('patch arrays do not match grid {}'.format(grid.shape))
        if not np.all(E > 0):
            raise DegeneratePointError('conformal factor must be positive')
        self.grid = grid
        self.points = points
        self.E = E
        self.origin_pinned = origin_pinned
        self.fields = dict(fields or {})

    def __repr__(self):
        return 'SurfacePatch(grid={}, dim={})'.format(self.grid, self.dim)

    @property
    def dim(self):
        """Return the dimension of the ambient space."""
        return self.points.shape[2]


def eval_patch(psi, grid, progress=False):
    """
    Sample x = Re Psi and E = |Phi|^2 / 2 on a grid.

    Args:
        psi (tuple): the complex immersion, one TaylorSeries per coordinate
        grid (GridSpec): the parameter grid
        progress (bool): whether to show a progress bar over the rows

    Returns:
        SurfacePatch: the sampled patch

    """
    phi = [component.differentiate() for component in psi]
    t = grid.points()
    points = np.empty(grid.shape + (len(psi),))
    E = np.empty(grid.shape)
    for row in tqdm(range(grid.rows), desc='patch', disable=not progress):
        values = np.array([component.evaluate(t[row]) for component in psi])
        points[row] = values.real.T
        tangents = np.array([component.evaluate(t[row]) for component in phi])
        E[row] = 0.5 * np.sum(np.abs(tangents) ** 2, axis=0)
    base = psi[0].base
    pinned = all(abs(component[0]) == 0 for component in psi)
    origin = grid.nearest_node(base)
    pinned = pinned and abs(t[origin] - base) < 1e-12
    return SurfacePatch(grid, points, E, origin_pinned=pinned)


def normal_project(phi, t):
    """
    Return the part of Phi'(t) normal to the tangent plane.

    Args:
        phi (PhiCurve): the curve
        t (complex): the parameter

    Returns:
        numpy.ndarray: Phi' - ((Phi' . conj Phi) / |Phi|^2) Phi

    """
    value = phi.value(t)
    derivative = phi.derivative_value(t)
    norm2 = np.vdot(value, value).real
    if np.sqrt(norm2) <= DEGENERACY_TOLERANCE:
        raise DegeneratePointError('Phi vanishes at t = {}'.format(t))
    return derivative - (np.vdot(value, derivative) / norm2) * value


def _null_completion(rows):
    """Return the unit vector orthogonal to three orthonormal rows."""
    _, _, vh = np.linalg.svd(np.asarray(rows))
    completion = vh[-1]
    if np.linalg.det(np.vstack([rows, completion])) < 0:
        completion = -completion
    return completion


class FundamentalData(object):
    """The first and second fundamental forms at a point with a frame."""

    def __init__(self, E, sigma_uu, sigma_uv, frame):
        """
        Initialize new fundamental data.

        Args:
            E (float): the conformal factor
            sigma_uu (numpy.ndarray): sigma(x_u, x_u) = -sigma(x_v, x_v)
            sigma_uv (numpy.ndarray): sigma(x_u, x_v)
            frame (numpy.ndarray): rows X1, X2, n1, n2

        Returns:
            None

        """
        self.E = E
        self.sigma_uu = sigma_uu
        self.sigma_uv = sigma_uv
        self.frame = frame

    @property
    def sigma_vv(self):
        """Return sigma(x_v, x_v)."""
        return -self.sigma_uu

    def weingarten(self):
        """
        Return the frame entries of the Weingarten operators.

        Returns:
            tuple: (nu, lambda, rho, mu) with sigma(X1, X1) = nu n1 + rho n2
            and sigma(X1, X2) = lambda n1 + mu n2

        """
        _, _, n1, n2 = self.frame
        s11 = self.sigma_uu / self.E
        s12 = self.sigma_uv / self.E
        return s11 @ n1, s12 @ n1, s11 @ n2, s12 @ n2

    def curvatures(self):
        """Return (K, kappa) from the Weingarten entries."""
        nu, lam, rho, mu = self.weingarten()
        return -(nu ** 2 + lam ** 2 + rho ** 2 + mu ** 2), 2 * (nu * mu - rho * lam)


def fundamental_data(phi, t):
    """
    Compute the fundamental forms and an adapted frame at t.

    Args:
        phi (PhiCurve): the curve
        t (complex): the parameter

    Returns:
        FundamentalData: E, sigma and the frame (X1, X2, n1, n2) with n1 along
        sigma(X1, X1) and a positively oriented frame

    """
    value = phi.value(t)
    E = 0.5 * np.vdot(value, value).real
    normal = normal_project(phi, t)
    sigma_uu = normal.real
    sigma_uv = -normal.imag
    x1 = value.real / np.linalg.norm(value.real)
    x2 = -value.imag / np.linalg.norm(value.imag)
    s11 = sigma_uu / E
    length = np.linalg.norm(s11)
    if length <= DEGENERACY_TOLERANCE * max(1.0, np.linalg.norm(sigma_uv) / E):
        raise UmbilicLikeFrameError('sigma(X1, X1) vanishes at t = {}'.format(t))
    n1 = s11 / length
    n2 = _null_completion([x1, x2, n1])
    return FundamentalData(E, sigma_uu, sigma_uv, np.array([x1, x2, n1, n2]))


class Motion4(object):
    """A proper rigid motion x -> A x + b of R^4."""

    def __init__(self, A, b=None):
        """
        Initialize a new motion.

        Args:
            A (numpy.ndarray): a 4x4 matrix in SO(4)
            b (numpy.ndarray): the translation (defaults to zero)

        Returns:
            None

        """
        A = np.asarray(A, dtype=float)
        if A.shape != (4, 4):
            raise ValueError('motion matrix must be 4x4, got {}'.format(A.shape))
        if not np.allclose(A.T @ A, np.eye(4), rtol=0, atol=MOTION_TOLERANCE):
            raise NotOrthogonalError('motion matrix is not orthogonal')
        if abs(np.linalg.det(A) - 1) > MOTION_TOLERANCE:
            raise NotOrthogonalError('motion matrix is not orientation preserving')
        self.A = A
        self.b = np.zeros(4) if b is None else np.asarray(b, dtype=float)

    @classmethod
    def random(cls, rng):
        """
        Draw a motion with a random SO(4) matrix.

        Args:
            rng (numpy.random.Generator): the random source

        Returns:
            Motion4: the random motion

        """
        q, r = np.linalg.qr(rng.standard_normal((4, 4)))
        q = q * np.sign(np.diag(r))
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        return cls(q, rng.standard_normal(4))

    def apply_points(self, points):
        """Apply the motion to real points of shape (..., 4)."""
        return np.asarray(points) @ self.A.T + self.b


def apply_motion(phi, motion):
    """
    Apply the linear part of a motion to a curve.

    Args:
        phi (PhiCurve): the curve
        motion (Motion4): the motion (its translation does not affect Phi)

    Returns:
        PhiCurve: the curve A Phi with the same kind tag

    """
    components = []
    for row in motion.A:
        total = phi[0] * row[0]
        for weight, component in zip(row[1:], phi.components[1:]):
            total = total + component * weight
        components.append(total)
    return PhiCurve(components, phi.kind)


def harmonic_residual(patch):
    """
    Return the largest five point Laplacian of x over the interior nodes.

    Args:
        patch (SurfacePatch): the sampled patch

    Returns:
        float: max |Delta_h x| over the interior nodes

    """
    laplacian = patch.grid.laplacian(patch.points)
    residual = float(np.max(np.linalg.norm(laplacian, axis=-1)))
    _LOGGER.debug('harmonic residual %.3e at h = %g', residual, patch.grid.h)
    return residual


# explicitly define the outward facing API of this module
__all__ = [
    integrate_phi.__name__,
    SurfacePatch.__name__,
    eval_patch.__name__,
    normal_project.__name__,
    FundamentalData.__name__,
    fundamental_data.__name__,
    Motion4.__name__,
    apply_motion.__name__,
    harmonic_residual.__name__,
]
