"""Exceptions raised by the weier4 package."""


class Weier4Error(ValueError):
    """The base class of every weier4 validation error."""


#
# MARK: Series
#


class BaseMismatchError(Weier4Error):
    """Two series are expanded around different base points."""


class DivisionByZeroConstantTermError(Weier4Error):
    """The divisor series vanishes at its base point."""


class RootAtBranchPointError(Weier4Error):
    """A fractional power was requested of a series vanishing at its base."""


class LogAtZeroError(Weier4Error):
    """A logarithm was requested of a series vanishing at its base."""


class CompositionOutsideRadiusError(Weier4Error):
    """The inner series maps its base outside the outer trust disc."""


class NotInvertibleAtBaseError(Weier4Error):
    """The series has a vanishing first derivative at its base."""


class OutsideTrustRadiusError(Weier4Error):
    """A series was evaluated outside of its trust radius."""


#
# MARK: Representations
#


class ZeroFError(Weier4Error):
    """The scalar factor f of a representation vanishes at the base."""


class FlavorMismatchError(Weier4Error):
    """A holomorphic pair of the wrong flavor was supplied."""


class SuperconformalInputError(Weier4Error):
    """The data describes a superconformal (not general type) point."""


class DegenerateRecoveryError(Weier4Error):
    """The triplet (f, g1, g2) cannot be recovered from the curve."""


class InternalInconsistencyError(Weier4Error):
    """Two routes to the same quantity disagree beyond tolerance."""


#
# MARK: Geometry
#


class DegeneratePointError(Weier4Error):
    """The immersion is singular at the requested point."""


class UmbilicLikeFrameError(Weier4Error):
    """The second fundamental form vanishes along the first tangent."""


class NotOrthogonalError(Weier4Error):
    """A motion matrix is not in SO(4)."""


class GridTooSmallError(Weier4Error):
    """A grid has too few nodes for a finite difference stencil."""


#
# MARK: Curvature and canonical coordinates
#


class NotGeneralTypeError(Weier4Error):
    """The point is not of general type (K < 0 and -K > |kappa|)."""


class NotCanonicalError(Weier4Error):
    """The curve is not given in canonical coordinates."""


#
# MARK: Correspondence
#


class DegenerateGError(Weier4Error):
    """The holomorphic function g has a vanishing derivative."""


class NonPositiveNuError(Weier4Error):
    """A principal curvature field holds a non-positive value."""


class NotGeneralTypeFieldError(Weier4Error):
    """A curvature field holds a node that is not of general type."""


class PoleAtBaseError(Weier4Error):
    """A Mobius image of g has a pole at the base point."""


class NotUnitaryError(Weier4Error):
    """The Mobius coefficients violate |a|^2 + |b|^2 = 1."""


#
# MARK: Command line
#


class ExprSyntaxError(Weier4Error):
    """A holomorphic expression could not be parsed."""

    def __init__(self, message, offset):
        """
        Initialize a new syntax error.

        Args:
            message (str): a description of the problem
            offset (int): the byte offset of the problem in the source

        Returns:
            None

        """
        super().__init__('{} (at offset {})'.format(message, offset))
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    """A holomorphic expression names an unknown identifier."""


class UnsupportedProjectionError(Weier4Error):
    """The export format cannot be written with the requested projection."""


# explicitly define the outward facing API of this module
__all__ = [
    Weier4Error.__name__,
    BaseMismatchError.__name__,
    DivisionByZeroConstantTermError.__name__,
    RootAtBranchPointError.__name__,
    LogAtZeroError.__name__,
    CompositionOutsideRadiusError.__name__,
    NotInvertibleAtBaseError.__name__,
    OutsideTrustRadiusError.__name__,
    ZeroFError.__name__,
    FlavorMismatchError.__name__,
    SuperconformalInputError.__name__,
    DegenerateRecoveryError.__name__,
    InternalInconsistencyError.__name__,
    DegeneratePointError.__name__,
    UmbilicLikeFrameError.__name__,
    NotOrthogonalError.__name__,
    GridTooSmallError.__name__,
    NotGeneralTypeError.__name__,
    NotCanonicalError.__name__,
    DegenerateGError.__name__,
    NonPositiveNuError.__name__,
    NotGeneralTypeFieldError.__name__,
    PoleAtBaseError.__name__,
    NotUnitaryError.__name__,
    ExprSyntaxError.__name__,
    UnknownIdentifierError.__name__,
    UnsupportedProjectionError.__name__,
]
