"""Rectangular parameter grids and their finite difference stencils."""
import numpy as np
from ._errors import GridTooSmallError


# the fewest nodes per side a five point Laplacian check accepts
MIN_SIDE = 5


class GridSpec(object):
    """A node centered rectangular grid of parameter points t = u + i v."""

    def __init__(self, u0, v0, h, rows, cols):
        """
        Initialize a new grid.

        Args:
            u0 (float): the u coordinate of the first column
            v0 (float): the v coordinate of the first row
            h (float): the node spacing in both directions
            rows (int): the number of nodes along v
            cols (int): the number of nodes along u

        Returns:
            None

        """
        if not h > 0:
            raise ValueError('grid spacing must be positive: {}'.format(h))
        if rows < 1 or cols < 1:
            raise ValueError('grid must have nodes: {}x{}'.format(rows, cols))
        self.u0 = float(u0)
        self.v0 = float(v0)
        self.h = float(h)
        self.rows = int(rows)
        self.cols = int(cols)

    @classmethod
    def from_ranges(cls, lo, hi, h, v_lo=None, v_hi=None):
        """
        Build a grid covering [lo, hi] x [v_lo, v_hi] with spacing h.

        Args:
            lo (float): the smallest u
            hi (float): the largest u
            h (float): the node spacing
            v_lo (float): the smallest v (defaults to lo)
            v_hi (float): the largest v (defaults to hi)

        Returns:
            GridSpec: the grid whose nodes include both range ends

        """
        if v_lo is None:
            v_lo, v_hi = lo, hi
        cols = int(round((hi - lo) / h)) + 1
        rows = int(round((v_hi - v_lo) / h)) + 1
        return cls(lo, v_lo, h, rows, cols)

    @classmethod
    def parse(cls, text, v_text=None):
        """
        Parse a grid from 'lo:hi:h' strings.

        Args:
            text (str): the u range as 'lo:hi:h'
            v_text (str): the v range as 'lo:hi' or 'lo:hi:h' (optional)

        Returns:
            GridSpec: the parsed grid

        """
        try:
            lo, hi, h = (float(part) for part in text.split(':'))
        except ValueError:
            msg = "grid must be written as 'lo:hi:h': {!r}".format(text)
            raise ValueError(msg)
        if hi <= lo:
            raise ValueError('grid range is empty: {!r}'.format(text))
        if v_text is None:
            return cls.from_ranges(lo, hi, h)
        v_lo, v_hi = (float(part) for part in v_text.split(':')[:2])
        return cls.from_ranges(lo, hi, h, v_lo, v_hi)

    def __repr__(self):
        template = 'GridSpec(u0={}, v0={}, h={}, rows={}, cols={})'
        return template.format(self.u0, self.v0, self.h, self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, GridSpec):
            return NotImplemented
        return self.shape == other.shape and np.isclose(self.h, other.h)

    @property
    def shape(self):
        """Return the (rows, cols) shape of the node array."""
        return self.rows, self.cols

    @property
    def u(self):
        """Return the u coordinates of the columns."""
        return self.u0 + self.h * np.arange(self.cols)

    @property
    def v(self):
        """Return the v coordinates of the rows."""
        return self.v0 + self.h * np.arange(self.rows)

    def points(self):
        """
        Return the complex parameter of every node.

        Returns:
            numpy.ndarray: a (rows, cols) array of t = u + i v

        """
        u, v = np.meshgrid(self.u, self.v)
        return u + 1j * v

    def nearest_node(self, t):
        """Return the (row, col) index of the node nearest to t."""
        col = int(round((complex(t).real - self.u0) / self.h))
        row = int(round((complex(t).imag - self.v0) / self.h))
        return min(max(row, 0), self.rows - 1), min(max(col, 0), self.cols - 1)

    def halved(self):
        """Return the grid over the same rectangle with half the spacing."""
        return GridSpec(self.u0, self.v0, self.h / 2,
                        2 * self.rows - 1, 2 * self.cols - 1)

    def laplacian(self, values):
        """
        Apply the five point Laplacian at the interior nodes.

        Args:
            values (numpy.ndarray): node values of shape (rows, cols, ...)

        Returns:
            numpy.ndarray: the discrete Laplacian of shape (rows-2, cols-2, ...)

        """
        if self.rows < MIN_SIDE or self.cols < MIN_SIDE:
            msg = 'grid {}x{} is below {}x{}'.format(self.rows, self.cols, MIN_SIDE, MIN_SIDE)
            raise GridTooSmallError(msg)
        f = np.asarray(values)
        stencil = (
            f[2:, 1:-1] + f[:-2, 1:-1] + f[1:-1, 2:] + f[1:-1, :-2]
            - 4 * f[1:-1, 1:-1]
        )
        return stencil / self.h ** 2

    def interior(self, values):
        """Return the interior node values of a field."""
        return np.asarray(values)[1:-1, 1:-1]


# explicitly define the outward facing API of this module
__all__ = [GridSpec.__name__]
