r"""Picard iteration for the integral system

.. math::

    v = \varepsilon u_t^0 + L'(F(v, w)), \qquad
    w = \varepsilon u_x^0 + \overline{L'}(F(v, w))

on the full space-time lattice, with $F(v,w) = |v|^p |w|^q$ (general product
model) or $F = |v \pm w|^{p-1}(v \pm w)$ (special model). The fixed point
$(v, w)$ approximates $(u_t, u_x)$; the solution itself is recovered as
$u = \varepsilon u^0 + L(F(v,w))$ by :func:`reconstruct_u`.

Optionally, the derivative fields $(v_x, w_x)$ are iterated alongside,
which gives the norm

.. math::

    \Vert (v,w) \Vert_X = \Vert v\Vert + \Vert v_x\Vert + \Vert w\Vert +
    \Vert w_x\Vert.
"""
import logging

import numpy as np

from ..data.freewave import FreeWave
from ..data.initial_data import NonlinearityParams
from ..errors import BlowupIndicated
from .duhamel import op_L, op_Lbar, op_Lprime
from .grid import CharGrid

__all__ = [
    'source', 'source_riemann', 'source_derivative', 'PicardState',
    'PicardResult', 'init_state', 'iterate_once', 'iterate_once_deriv',
    'run', 'reconstruct_u']

__private__ = ['default_tol']

MAX_ITER = 200


def default_tol(eps):
    """Default residual tolerance, ``1e-10 * max(eps, 1)``"""
    return 1e-10 * max(float(eps), 1.0)


def _abs_pow(z, p):
    """$|z|^p$ with the convention $|z|^0 = 1$"""
    if p == 0:
        return np.ones_like(z)
    return np.abs(z)**p


def _signed_pow(z, p):
    """$|z|^{p-1} z$"""
    return np.sign(z) * np.abs(z)**p


def source(v, w, params):
    r"""Nonlinear term $F$ evaluated nodewise from $v \approx u_t$ and $w
    \approx u_x$.

    Raises:
        ValueError: if `v` or `w` contain NaN
    """
    v = np.asarray(v, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if np.any(np.isnan(v)) or np.any(np.isnan(w)):
        raise ValueError("NaN in the arguments of the nonlinear source")
    with np.errstate(over='ignore', invalid='ignore'):
        if params.variant == NonlinearityParams.GENERAL:
            return _abs_pow(v, params.p) * _abs_pow(w, params.q)
        elif params.variant == NonlinearityParams.SPECIAL_PLUS:
            return _signed_pow(v + w, params.p)
        elif params.variant == NonlinearityParams.SPECIAL_MINUS:
            return _signed_pow(v - w, params.p)
        else:
            return np.zeros(np.broadcast(v, w).shape)


def source_riemann(a, b, params):
    r"""Nonlinear term $F$ in terms of the Riemann invariants $a = u_t +
    u_x$, $b = u_t - u_x$.

    For the special model, $F$ is computed from $a$ (plus) or $b$ (minus)
    alone, so that the driven invariant does not depend on the other one
    even through rounding.
    """
    if params.variant == NonlinearityParams.SPECIAL_PLUS:
        with np.errstate(over='ignore', invalid='ignore'):
            return _signed_pow(a, params.p)
    elif params.variant == NonlinearityParams.SPECIAL_MINUS:
        with np.errstate(over='ignore', invalid='ignore'):
            return _signed_pow(b, params.p)
    return source(0.5 * (a + b), 0.5 * (a - b), params)


def source_derivative(v, w, v_x, w_x, params):
    r"""Spatial derivative of $F(v, w)$,

    .. math::

        p |v|^{p-2} v\, v_x |w|^q + q |w|^{q-2} w\, w_x |v|^p

    for the general model, and $p |v \pm w|^{p-1} (v_x \pm w_x)$ for the
    special model.
    """
    p, q = params.p, params.q
    with np.errstate(over='ignore', invalid='ignore'):
        if params.variant == NonlinearityParams.GENERAL:
            res = np.zeros(np.shape(v))
            if p != 0:
                res = res + (p * _signed_pow(v, p - 1) * v_x *
                             _abs_pow(w, q))
            if q != 0:
                res = res + (q * _signed_pow(w, q - 1) * w_x *
                             _abs_pow(v, p))
            return res
        elif params.is_special:
            s = params.sign
            return p * np.abs(v + s * w)**(p - 1) * (v_x + s * w_x)
        else:
            return np.zeros(np.shape(v))


def _first_nonfinite(U):
    """Index `(i, n)` of the first (earliest time level, then smallest `i`)
    non-finite node in the grid function `U`, or None"""
    bad = np.argwhere(~np.isfinite(U))
    if len(bad) == 0:
        return None
    n, i = bad[0]
    return (int(i), int(n))


class PicardState(object):
    r"""State of the Picard iteration.

    Args:
        grid (CharGrid): the lattice
        params (NonlinearityParams): the nonlinearity
        eps (float): amplitude $\varepsilon$
        free (dict): the free terms ``'v'``, ``'w'`` ($\varepsilon u_t^0,
            \varepsilon u_x^0$) and, if derivative fields are tracked,
            ``'v_x'``, ``'w_x'`` ($\varepsilon u_{tx}^0, \varepsilon
            u_{xx}^0$), sampled on the grid
        deriv (bool): whether derivative fields are iterated

    Attributes:
        v, w: current iterates $(v_j, w_j)$
        v_x, w_x: current derivative iterates (None unless `deriv`)
        j (int): iteration counter (1 for the initial state)
        residuals (list): $r_j = \Vert v_{j+1} - v_j\Vert_\infty +
            \Vert w_{j+1} - w_j\Vert_\infty$ for every completed iteration
    """

    def __init__(self, grid, params, eps, free, deriv=False):
        self.grid = grid
        self.params = params
        self.eps = float(eps)
        self.free = free
        self.v = free['v'].copy()
        self.w = free['w'].copy()
        self.v_x = None
        self.w_x = None
        if deriv:
            self.v_x = free['v_x'].copy()
            self.w_x = free['w_x'].copy()
        self.j = 1
        self.residuals = []

    @property
    def deriv(self):
        """Whether derivative fields are iterated"""
        return self.v_x is not None

    def derivatives(self):
        """Return ``(v_x, w_x)``: the iterated derivative fields if
        available, central differences in $x$ otherwise"""
        if self.deriv:
            return self.v_x, self.w_x
        h = self.grid.h
        return (np.gradient(self.v, h, axis=1),
                np.gradient(self.w, h, axis=1))

    def x_norm(self):
        r"""The norm $\Vert v\Vert + \Vert v_x\Vert + \Vert w\Vert +
        \Vert w_x\Vert$ (sup norms over the grid)"""
        v_x, w_x = self.derivatives()
        return float(sum(np.max(np.abs(arr))
                         for arr in (self.v, v_x, self.w, w_x)))


def init_state(data, params, eps, grid, deriv=False):
    r"""Create the initial :class:`PicardState` $(v_1, w_1) = (\varepsilon
    u_t^0, \varepsilon u_x^0)$ (and $(\varepsilon u_{tx}^0,
    \varepsilon u_{xx}^0)$ for the derivative fields)"""
    fw = FreeWave(data, eps)
    X, Tn = grid.mesh()
    free = {'v': fw.scaled('u0_t', X, Tn), 'w': fw.scaled('u0_x', X, Tn)}
    if deriv:
        free['v_x'] = fw.scaled('u0_tx', X, Tn)
        free['w_x'] = fw.scaled('u0_xx', X, Tn)
    return PicardState(grid, params, eps, free, deriv=deriv)


def _checked_source(state):
    for U in (state.v, state.w):
        node = _first_nonfinite(U)
        if node is not None:
            raise BlowupIndicated(node, state.residuals)
    F = source(state.v, state.w, state.params)
    node = _first_nonfinite(F)
    if node is not None:
        raise BlowupIndicated(node, state.residuals)
    return F


def iterate_once(state):
    r"""Perform one Picard step $(v_j, w_j) \rightarrow (v_{j+1}, w_{j+1})$
    in place, append the residual, and increment the counter.

    Raises:
        BlowupIndicated: if the source overflows or becomes NaN
    """
    F = _checked_source(state)
    grid = state.grid
    v_new = state.free['v'] + op_Lprime(F, grid)
    w_new = state.free['w'] + op_Lbar(F, grid)
    residual = (np.max(np.abs(v_new - state.v)) +
                np.max(np.abs(w_new - state.w)))
    if not np.isfinite(residual):
        node = _first_nonfinite(v_new) or _first_nonfinite(w_new)
        raise BlowupIndicated(node, state.residuals)
    state.v, state.w = v_new, w_new
    state.residuals.append(float(residual))
    state.j += 1
    return state


def iterate_once_deriv(state):
    """Update the derivative fields $((v_{j+1})_x, (w_{j+1})_x)$ in place
    from the current $(v_j, w_j, (v_j)_x, (w_j)_x)$. Must be called *before*
    :func:`iterate_once` for the same `j`.

    Raises:
        ValueError: if derivative fields are not tracked
        BlowupIndicated: if the derivative source overflows or becomes NaN
    """
    if not state.deriv:
        raise ValueError("derivative fields are not allocated")
    params = state.params
    if params.variant == NonlinearityParams.GENERAL:
        if not (params.p > 1 and (params.q > 1 or params.q == 0)):
            raise ValueError("derivative iteration requires p > 1 and "
                             "(q > 1 or q = 0)")
    dF = source_derivative(state.v, state.w, state.v_x, state.w_x, params)
    node = _first_nonfinite(dF)
    if node is not None:
        raise BlowupIndicated(node, state.residuals)
    state.v_x = state.free['v_x'] + op_Lprime(dF, state.grid)
    state.w_x = state.free['w_x'] + op_Lbar(dF, state.grid)
    return state


class PicardResult(object):
    """Outcome of :func:`run`.

    Attributes:
        status (str): one of :attr:`CONVERGED`, :attr:`NOT_CONVERGED`,
            :attr:`BLOWUP_INDICATED`
        state (PicardState): the final state of the iteration
        data (InitialData): the initial data
        iterations (int): final value of the iteration counter `j`
        residuals (list): residual history
        node (tuple or None): first offending node `(i, n)` if the
            iteration broke down
        x_norm (float or None): the norm of the final iterate (None after a
            breakdown)
    """

    CONVERGED = 'converged'
    NOT_CONVERGED = 'not_converged'
    BLOWUP_INDICATED = 'blowup_indicated'

    def __init__(self, status, state, data, node=None):
        self.status = status
        self.state = state
        self.data = data
        self.node = node
        self.x_norm = None
        if status != self.BLOWUP_INDICATED:
            self.x_norm = state.x_norm()

    @property
    def converged(self):
        return self.status == self.CONVERGED

    @property
    def iterations(self):
        return self.state.j

    @property
    def residuals(self):
        return list(self.state.residuals)

    @property
    def grid(self):
        return self.state.grid

    @property
    def v(self):
        return self.state.v

    @property
    def w(self):
        return self.state.w

    def tail_ratio(self, n_tail=5):
        """Largest ratio $r_{j+1}/r_j$ among the last `n_tail` nonzero
        residuals (None if there are fewer than two)"""
        res = [r for r in self.residuals if r > 0][-(n_tail + 1):]
        if len(res) < 2:
            return None
        return max(r1 / r0 for (r0, r1) in zip(res[:-1], res[1:]))

    def summary(self):
        """Ordered summary dict for output files"""
        return {
            'status': self.status,
            'iterations': self.iterations,
            'final_residual': (self.residuals[-1] if self.residuals
                               else None),
            'x_norm': self.x_norm,
            'node': list(self.node) if self.node is not None else None,
            'tail_ratio': self.tail_ratio(),
        }

    def __repr__(self):
        return "PicardResult(status=%r, iterations=%d)" % (
            self.status, self.iterations)


def run(data, params, eps, T, h, tol=None, max_iter=MAX_ITER, deriv=False):
    r"""Iterate until the residual drops below `tol`.

    Args:
        data (InitialData): initial data
        params (NonlinearityParams): the nonlinearity
        eps (float): amplitude $\varepsilon$
        T (float): final time
        h (float): mesh size
        tol (float or None): residual tolerance (default
            ``1e-10*max(eps, 1)``)
        max_iter (int): maximum number of iterations
        deriv (bool): whether to iterate the derivative fields

    Returns:
        PicardResult: with status ``'converged'``, ``'not_converged'``, or
        ``'blowup_indicated'``
    """
    logger = logging.getLogger(__name__)
    if tol is None:
        tol = default_tol(eps)
    if not tol > 0:
        raise ValueError("tol must be >0, not %r" % tol)
    if int(max_iter) < 1:
        raise ValueError("max_iter must be >= 1, not %r" % max_iter)
    grid = CharGrid(h, T, data.R)
    logger.info("Picard run for %r, eps=%r on %r (%d x %d nodes)",
                params, eps, grid, grid.shape[0], grid.shape[1])
    state = init_state(data, params, eps, grid, deriv=deriv)
    if not deriv:
        logger.info("derivative norms from finite differences")
    try:
        for _ in range(int(max_iter)):
            if deriv:
                iterate_once_deriv(state)
            iterate_once(state)
            logger.debug("j = %d: residual %.3e", state.j,
                         state.residuals[-1])
            if state.residuals[-1] <= tol:
                logger.info("converged after %d iterations", state.j)
                return PicardResult(PicardResult.CONVERGED, state, data)
    except BlowupIndicated as exc_info:
        logger.info("Picard iteration broke down: %s", exc_info)
        return PicardResult(PicardResult.BLOWUP_INDICATED, state, data,
                            node=exc_info.node)
    logger.info("no convergence after %d iterations (residual %.3e)",
                state.j, state.residuals[-1])
    return PicardResult(PicardResult.NOT_CONVERGED, state, data)


def reconstruct_u(result):
    r"""Reconstruct $u = \varepsilon u^0 + L(F(v, w))$ from a converged
    result

    Raises:
        ValueError: if `result` did not converge
    """
    if not result.converged:
        raise ValueError("Can only reconstruct u from a converged result")
    state = result.state
    grid = state.grid
    fw = FreeWave(result.data, state.eps)
    X, Tn = grid.mesh()
    F = source(state.v, state.w, state.params)
    return fw.scaled('u0', X, Tn) + op_L(F, grid)
