r"""Time marching of the Riemann invariants $a = u_t + u_x$, $b = u_t - u_x$.

The wave equation $u_{tt} - u_{xx} = F(u_t, u_x)$ is equivalent to the pair
of transport equations

.. math::

    (\partial_t - \partial_x) a = F, \qquad (\partial_t + \partial_x) b = F,

i.e. $a$ is carried along $x + t = \text{const}$ and $b$ along $x - t =
\text{const}$. On the unit-CFL lattice both characteristics pass through
nodes, and each step integrates the ODE along them with Heun's method
(explicit trapezoid). Only nodes inside the light cone are updated; all
others stay exactly zero.
"""
import logging

import numpy as np

from ..data.initial_data import NonlinearityParams
from ..errors import BlowupDetected
from .grid import CharGrid
from .picard import source_riemann

__all__ = ['FieldState', 'SolveResult', 'init_fields', 'step', 'solve']

__private__ = ['AMP_THRESHOLD']

AMP_THRESHOLD = 1e6


class FieldState(object):
    """Current time level of the marching solver.

    Attributes:
        grid (CharGrid): the lattice (only one level is stored at a time)
        eps (float): amplitude of the data
        a, b, u (numpy.ndarray): fields on the current level
        n (int): current time index
        trace (list): one tuple ``(t, sup|a|, sup|b|, sup|u|)`` per
            completed level, starting with level 0
    """

    def __init__(self, grid, eps, a, b, u):
        self.grid = grid
        self.eps = float(eps)
        self.a = a
        self.b = b
        self.u = u
        self.n = 0
        self.trace = []
        self._record()

    @property
    def t(self):
        """Current time"""
        return self.n * self.grid.h

    @property
    def u_t(self):
        return 0.5 * (self.a + self.b)

    @property
    def u_x(self):
        return 0.5 * (self.a - self.b)

    @property
    def max_amplitude(self):
        r"""$\max_i \max(|a_i|, |b_i|)$ on the current level"""
        return max(self.trace[-1][1], self.trace[-1][2])

    def _record(self):
        self.trace.append(
            (self.t, float(np.max(np.abs(self.a))),
             float(np.max(np.abs(self.b))), float(np.max(np.abs(self.u)))))

    def trace_array(self):
        """The trace as an array of shape ``(n+1, 4)``"""
        return np.array(self.trace, dtype=np.float64).reshape(-1, 4)


def init_fields(data, eps, grid):
    r"""Level 0: $a = \varepsilon(g + f')$, $b = \varepsilon(g - f')$, $u =
    \varepsilon f$"""
    if grid.R < data.R:
        raise ValueError("grid radius %r is smaller than the support radius "
                         "%r of the data" % (grid.R, data.R))
    eps = float(eps)
    x = grid.x
    df, g = data.df(x), data.g(x)
    a = eps * (g + df)
    b = eps * (g - df)
    u = eps * data.f(x)
    return FieldState(grid, eps, a, b, u)


def step(state, params):
    """Advance `state` by one level in place.

    Raises:
        ValueError: if the state is already at the last level of its grid
        BlowupDetected: if a non-finite value appears on the new level
    """
    grid = state.grid
    if state.n >= grid.nt:
        raise ValueError("state is at the final level n = %d" % state.n)
    h = grid.h
    hh = 0.5 * h
    m = grid.m
    k = min(grid.cone_halfwidth(state.n + 1), m - 1)
    lo, hi = m - k, m + k + 1
    a, b = state.a, state.b
    F = source_riemann(a, b, params)
    # a arrives from i+1, b from i-1
    a_old, F_a = a[lo+1:hi+1], F[lo+1:hi+1]
    b_old, F_b = b[lo-1:hi-1], F[lo-1:hi-1]
    t_new = (state.n + 1) * h
    with np.errstate(over='ignore', invalid='ignore'):
        a_pred = a_old + h * F_a
        b_pred = b_old + h * F_b
        bad = np.flatnonzero(~(np.isfinite(a_pred) & np.isfinite(b_pred)))
        if len(bad) > 0:
            raise BlowupDetected(t_new, lo + bad[0])
        F_pred = source_riemann(a_pred, b_pred, params)
        a_new = np.zeros_like(a)
        b_new = np.zeros_like(b)
        a_new[lo:hi] = a_old + hh * (F_a + F_pred)
        b_new[lo:hi] = b_old + hh * (F_b + F_pred)
        u_new = state.u + hh * (state.u_t + 0.5 * (a_new + b_new))
    for arr in (a_new, b_new, u_new):
        bad = np.flatnonzero(~np.isfinite(arr))
        if len(bad) > 0:
            raise BlowupDetected(t_new, bad[0])
    state.a, state.b, state.u = a_new, b_new, u_new
    state.n += 1
    state._record()
    return state


class SolveResult(object):
    """Outcome of :func:`solve`.

    Attributes:
        status (str): :attr:`COMPLETED`, :attr:`THRESHOLD_CROSSED`, or
            :attr:`BLOWUP_DETECTED`
        state (FieldState): the last completed level
        t_cross (float or None): time at which the threshold was crossed (or
            at which the non-finite value appeared)
        x_cross (float or None): position of the largest amplitude at
            `t_cross`
        x_blowup (float or None): intercept with $t = 0$ of the
            characteristic through `x_cross`
        field (str or None): ``'a'`` or ``'b'``, the field that crossed
        exploratory (bool): whether the blow-up is a heuristic
            observation only (general product model with p, q > 1)
    """

    COMPLETED = 'completed'
    THRESHOLD_CROSSED = 'threshold_crossed'
    BLOWUP_DETECTED = 'blowup_detected'

    def __init__(self, status, state, params, threshold, t_cross=None,
                 x_cross=None, field=None):
        self.status = status
        self.state = state
        self.params = params
        self.threshold = threshold
        self.t_cross = t_cross
        self.x_cross = x_cross
        self.field = field
        self.x_blowup = None
        if x_cross is not None:
            if field == 'a':
                self.x_blowup = x_cross + t_cross
            else:
                self.x_blowup = x_cross - t_cross
        self.exploratory = (params.exploratory and
                            status != self.COMPLETED)

    @property
    def trace(self):
        """Trace array with columns ``t, sup_a, sup_b, sup_u``"""
        return self.state.trace_array()

    def amplitude(self):
        """The amplitude series used for blow-up fits: sup|a| (special plus),
        sup|b| (special minus), or max(sup|a|, sup|b|) otherwise"""
        tr = self.trace
        sign = self.params.sign
        if sign == 1:
            return tr[:, 1]
        elif sign == -1:
            return tr[:, 2]
        return np.maximum(tr[:, 1], tr[:, 2])

    def summary(self):
        return {
            'status': self.status,
            'steps': self.state.n,
            't_final': self.state.t,
            't_cross': self.t_cross,
            'x_cross': self.x_cross,
            'x_blowup': self.x_blowup,
            'field': self.field,
            'max_amplitude': self.state.max_amplitude,
            'exploratory': self.exploratory,
        }

    def __repr__(self):
        return "SolveResult(status=%r, t=%r)" % (self.status, self.state.t)


def _crossing(state, params):
    """Return ``(field, x)`` of the largest driving amplitude on the current
    level"""
    sign = params.sign
    amp_a, amp_b = np.abs(state.a), np.abs(state.b)
    if sign == 1 or (sign is None and amp_a.max() >= amp_b.max()):
        return 'a', float(state.grid.x[int(np.argmax(amp_a))])
    return 'b', float(state.grid.x[int(np.argmax(amp_b))])


def _driving_amplitude(state, params):
    _, sup_a, sup_b, _ = state.trace[-1]
    if params.sign == 1:
        return sup_a
    elif params.sign == -1:
        return sup_b
    return max(sup_a, sup_b)


def solve(data, params, eps, T, h, amp_threshold=AMP_THRESHOLD,
          log_every=1000):
    r"""March from $t = 0$ to $t \ge T$.

    Args:
        data (InitialData): initial data
        params (NonlinearityParams): the nonlinearity
        eps (float): amplitude $\varepsilon$
        T (float): final time
        h (float): mesh size
        amp_threshold (float): stop once the driving amplitude (see
            :meth:`SolveResult.amplitude`) exceeds this value
        log_every (int): emit a DEBUG message every `log_every` levels

    Returns:
        SolveResult: the outcome, with the full amplitude trace
    """
    logger = logging.getLogger(__name__)
    amp_threshold = float(amp_threshold)
    if not amp_threshold > 0:
        raise ValueError("amp_threshold must be >0, not %r" % amp_threshold)
    grid = CharGrid(h, T, data.R)
    state = init_fields(data, eps, grid)
    logger.info("marching %r, eps=%r on %r", params, eps, grid)
    if params.exploratory:
        logger.warning("%r: blow-up observations are exploratory only",
                       params)
    status = SolveResult.COMPLETED
    t_cross = x_cross = field = None
    try:
        while state.n < grid.nt:
            step(state, params)
            if state.n % log_every == 0:
                logger.debug("t = %g: max amplitude %.3e", state.t,
                             state.max_amplitude)
            if _driving_amplitude(state, params) > amp_threshold:
                status = SolveResult.THRESHOLD_CROSSED
                t_cross = state.t
                field, x_cross = _crossing(state, params)
                break
    except BlowupDetected as exc_info:
        status = SolveResult.BLOWUP_DETECTED
        t_cross = exc_info.t
        field, x_cross = _crossing(state, params)
        logger.info("%s", exc_info)
    result = SolveResult(status, state, params, amp_threshold,
                         t_cross=t_cross, x_cross=x_cross, field=field)
    logger.info("march finished: %r", result)
    return result
