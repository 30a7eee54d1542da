r"""Discrete Duhamel operators on the characteristic lattice.

For a source $U(x,t)$, the operators

.. math::

    L(U)(x,t) &= \frac{1}{2}\int_0^t ds \int_{x-t+s}^{x+t-s} U(y,s)\, dy \\
    L'(U)(x,t) &= \frac{1}{2}\int_0^t \{U(x+t-s,s) + U(x-t+s,s)\}\, ds \\
    \overline{L'}(U)(x,t) &= \frac{1}{2}\int_0^t \{U(x+t-s,s) - U(x-t+s,s)\}\,
    ds

are computed by recurrences along the backward characteristics. With unit
CFL number, the characteristics pass exactly through lattice nodes, so the
only approximation is the trapezoidal (resp. diamond) quadrature of the
source.

All operators take a grid function `U` and its :class:`CharGrid`. The
`edge` argument determines how reads outside of the grid are treated:

* ``'zero'`` (default): out-of-grid values are zero. This is only valid if
  `U` vanishes on the two edge columns (which always lie outside of the
  cone); otherwise, a :exc:`~semiwave.errors.GridError` is raised.
* ``'extend'``: out-of-grid values repeat the edge column. This makes the
  operators exact for sources that are constant in $x$ on every node of the
  grid.
"""
import numpy as np

from ..errors import GridError

__all__ = ['op_P', 'op_Q', 'op_Lprime', 'op_Lbar', 'op_L']

__private__ = []

_EDGES = ('zero', 'extend')


def _prepare(U, grid, edge):
    grid.check(U)
    if edge not in _EDGES:
        raise ValueError("edge must be one of %s" % ", ".join(_EDGES))
    U = np.asarray(U, dtype=np.float64)
    if edge == 'zero':
        if np.any(U[:, 0] != 0) or np.any(U[:, -1] != 0):
            raise GridError(
                "Grid too narrow for the cone: source does not vanish on the "
                "edge columns of %r" % grid)
    return U


def op_P(U, grid, edge='zero'):
    r"""Integral along the left-going backward characteristic,
    $P(U)(x,t) = \int_0^t U(x+t-s, s)\, ds$"""
    U = _prepare(U, grid, edge)
    hh = 0.5 * grid.h
    P = np.zeros_like(U)
    for n in range(grid.nt):
        P[n+1, :-1] = P[n, 1:] + hh * (U[n, 1:] + U[n+1, :-1])
        if edge == 'extend':
            P[n+1, -1] = P[n, -1] + hh * (U[n, -1] + U[n+1, -1])
    return P


def op_Q(U, grid, edge='zero'):
    r"""Integral along the right-going backward characteristic,
    $Q(U)(x,t) = \int_0^t U(x-t+s, s)\, ds$"""
    U = _prepare(U, grid, edge)
    hh = 0.5 * grid.h
    Q = np.zeros_like(U)
    for n in range(grid.nt):
        Q[n+1, 1:] = Q[n, :-1] + hh * (U[n, :-1] + U[n+1, 1:])
        if edge == 'extend':
            Q[n+1, 0] = Q[n, 0] + hh * (U[n, 0] + U[n+1, 0])
    return Q


def op_Lprime(U, grid, edge='zero'):
    r"""$L'(U) = (P+Q)/2$, the time derivative of the Duhamel term"""
    return 0.5 * (op_P(U, grid, edge) + op_Q(U, grid, edge))


def op_Lbar(U, grid, edge='zero'):
    r"""$\overline{L'}(U) = (P-Q)/2$, the space derivative of the Duhamel
    term"""
    return 0.5 * (op_P(U, grid, edge) - op_Q(U, grid, edge))


def op_L(U, grid, edge='zero'):
    r"""Duhamel term $L(U)$, via the diamond recurrence

    .. math::

        W_i^{n+1} = W_{i+1}^n + W_{i-1}^n - W_i^{n-1} + h^2 U_i^n

    seeded with $W^0 = 0$ and $W^1 = \frac{h^2}{2} U^0$. The global error is
    $\mathcal{O}(h^2)$; the result is exact (up to rounding) for sources that
    are constant.
    """
    U = _prepare(U, grid, edge)
    h2 = grid.h**2
    W = np.zeros_like(U)
    if grid.nt >= 1:
        W[1] = 0.5 * h2 * U[0]
    for n in range(1, grid.nt):
        W[n+1, 1:-1] = (W[n, 2:] + W[n, :-2] - W[n-1, 1:-1] +
                        h2 * U[n, 1:-1])
        if edge == 'extend':
            left, right = W[n, 0], W[n, -1]
        else:
            left = right = 0.0
        W[n+1, 0] = W[n, 1] + left - W[n-1, 0] + h2 * U[n, 0]
        W[n+1, -1] = right + W[n, -2] - W[n-1, -1] + h2 * U[n, -1]
    return W
