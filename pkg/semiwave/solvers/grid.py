r"""Characteristic space-time lattice with unit CFL number.

Grid functions are plain :class:`numpy.ndarray` objects of shape ``(nt+1,
nx)``, indexed as ``U[n, i]`` for the node $(x_i, t_n)$.
"""
import math

import numpy as np

from ..errors import GridError

__all__ = ['CharGrid']

__private__ = []


class CharGrid(object):
    r"""Uniform lattice with $\Delta x = \Delta t = h$ covering the light
    cone $|x| \le t + R$ for $0 \le t \le T$.

    The number of time steps is ``nt = ceil(T/h)`` (so that the last level
    ``t_final = nt*h`` is at least `T`). The spatial nodes are $x_i = (i-m)h$
    for ``i = 0 .. 2m``, with $m h \ge$ ``t_final`` $+ R + h$: the grid is
    symmetric about $x=0$ (which is a node), has an odd number of nodes per
    level, and its two edge columns lie strictly outside the cone.

    Args:
        h (float): mesh size (>0)
        T (float): final time (>0)
        R (float): support radius of the data (>0)

    Raises:
        ValueError: for non-positive or non-finite arguments
    """

    _cone_tol = 1e-9  # in units of h

    def __init__(self, h, T, R):
        h, T, R = float(h), float(T), float(R)
        for name, val in (('h', h), ('T', T), ('R', R)):
            if not (np.isfinite(val) and val > 0):
                raise ValueError("%s must be a finite value >0, not %r"
                                 % (name, val))
        self._h = h
        self._T = T
        self._R = R
        self._nt = int(math.ceil(T / h - self._cone_tol))
        self._m = int(math.ceil((self._nt * h + R) / h - self._cone_tol)) + 1
        self._x = (np.arange(2 * self._m + 1) - self._m) * h
        self._t = np.arange(self._nt + 1) * h

    @property
    def h(self):
        """Mesh size (space and time)"""
        return self._h

    @property
    def T(self):
        """Requested final time"""
        return self._T

    @property
    def R(self):
        """Support radius of the data"""
        return self._R

    @property
    def nt(self):
        """Number of time steps"""
        return self._nt

    @property
    def nx(self):
        """Number of nodes per time level (odd)"""
        return 2 * self._m + 1

    @property
    def m(self):
        """Index of the node $x = 0$"""
        return self._m

    @property
    def shape(self):
        """Shape ``(nt+1, nx)`` of grid functions"""
        return (self._nt + 1, self.nx)

    @property
    def t_final(self):
        """Time of the last level, ``nt*h``"""
        return self._nt * self._h

    @property
    def X_extent(self):
        """Half-width ``m*h`` of the grid"""
        return self._m * self._h

    @property
    def x(self):
        """Spatial nodes (copy)"""
        return self._x.copy()

    @property
    def t(self):
        """Time levels (copy)"""
        return self._t.copy()

    def node(self, i, n):
        """Coordinates ``(x_i, t_n)`` of node `(i, n)`"""
        return (self._x[i], self._t[n])

    def index(self, x, t):
        """Nearest node indices `(i, n)` for the point `(x, t)`"""
        return (int(round(x / self._h)) + self._m,
                int(round(t / self._h)))

    def mesh(self):
        """Return arrays ``(X, Tn)`` of shape :attr:`shape` with the
        coordinates of every node"""
        return np.meshgrid(self._x, self._t)

    def zeros(self):
        """A grid function that is zero everywhere"""
        return np.zeros(self.shape)

    def sample(self, func):
        """Evaluate ``func(x, t)`` on all nodes"""
        X, Tn = self.mesh()
        return np.asarray(func(X, Tn), dtype=np.float64) * np.ones(self.shape)

    def cone_halfwidth(self, n):
        """Largest `k` such that the node ``m+k`` is inside the cone at level
        `n`"""
        return min(int(math.floor(
                   (n * self._h + self._R) / self._h + self._cone_tol)),
                   self._m)

    def cone_mask(self):
        r"""Boolean grid function that is True on the nodes inside the cone
        $|x| \le t + R$"""
        k = np.array([self.cone_halfwidth(n) for n in range(self._nt + 1)])
        offset = np.abs(np.arange(self.nx) - self._m)
        return offset[np.newaxis, :] <= k[:, np.newaxis]

    def check(self, U, name='U'):
        """Raise :exc:`GridError` unless `U` is a grid function on this
        grid"""
        shape = np.shape(U)
        if shape != self.shape:
            raise GridError("%s has shape %s, but the grid requires %s"
                            % (name, shape, self.shape))

    def __eq__(self, other):
        return (isinstance(other, CharGrid) and
                (self._h, self._T, self._R) == (other._h, other._T, other._R))

    def __hash__(self):
        return hash((self._h, self._T, self._R))

    def __repr__(self):
        return "CharGrid(h=%r, T=%r, R=%r)" % (self._h, self._T, self._R)
