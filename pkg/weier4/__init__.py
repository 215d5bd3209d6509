"""Minimal surfaces in R^4 from canonical Weierstrass representations."""
from .series import TaylorSeries
from .weierstrass import HoloPair
from .weierstrass import PhiCurve
from .weierstrass import build_canonical
from .weierstrass import build_representation


# explicitly define the outward facing API of this package
__all__ = [
    TaylorSeries.__name__,
    HoloPair.__name__,
    PhiCurve.__name__,
    build_canonical.__name__,
    build_representation.__name__,
]
