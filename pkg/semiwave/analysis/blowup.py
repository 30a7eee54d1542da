r"""Closed-form blow-up oracle for the special model, and estimation of
blow-up times from amplitude traces.

Along the characteristic $x + t = x_0$, the invariant $a = u_t + u_x$ of the
special model $u_{tt} - u_{xx} = |u_t + u_x|^{p-1}(u_t + u_x)$ solves the
Riccati-type ODE $U' = |U|^{p-1} U$ with $U(0) = \varepsilon M_+(x_0)$,
$M_\pm(x_0) = \pm f'(x_0) + g(x_0)$. Its solution

.. math::

    U(t) = \left\{(|M|\varepsilon)^{1-p} - (p-1) t\right\}^{-1/(p-1)}

diverges at $t_0 = (|M|\varepsilon)^{1-p}/(p-1)$.
"""
import logging
import math
from collections import namedtuple

import numpy as np
from scipy.stats import linregress

from ..data.initial_data import (
    DEGENERATE_LIMIT, as_sign, eval_M, eval_Mstar)
from ..errors import EstimationError

__all__ = [
    'BlowupOracle', 'oracle_t0', 'oracle_U', 'estimate_blowup_time',
    'blowup_curve', 'predict_first_blowup', 'CurvePoint']

__private__ = ['GROWTH']

#: minimum growth of the amplitude (relative to its initial value) for the
#: tail of a trace used in :func:`estimate_blowup_time`
GROWTH = 10.0


def _check_p(p):
    p = float(p)
    if not p > 1:
        raise ValueError("blow-up exponent p = %r must be > 1" % p)
    return p


def oracle_t0(M, eps, p):
    r"""Exact blow-up time $(|M|\varepsilon)^{1-p}/(p-1)$.

    Returns :data:`math.inf` if $M\varepsilon = 0$ (no blow-up along the
    characteristic) or if $t_0$ exceeds the floating point range.

    Raises:
        ValueError: if ``p <= 1`` or ``eps < 0``

    Examples:

        >>> print("%.1f" % oracle_t0(1, 0.1, 3))
        50.0
        >>> oracle_t0(-2, 1, 2)
        0.5
    """
    p = _check_p(p)
    eps = float(eps)
    if eps < 0:
        raise ValueError("eps = %r must be >= 0" % eps)
    amp = abs(float(M)) * eps
    if amp == 0:
        return math.inf
    try:
        return amp**(1 - p) / (p - 1)
    except OverflowError:
        return math.inf


def oracle_U(M, eps, p, t):
    r"""Closed-form solution $U(t)$ of $U' = |U|^{p-1}U$, $U(0) =
    M\varepsilon$ (the sign of $M$ is preserved)

    Raises:
        ValueError: unless ``0 <= t < oracle_t0(M, eps, p)``
    """
    p = _check_p(p)
    t = float(t)
    t0 = oracle_t0(M, eps, p)
    if not 0 <= t < t0:
        raise ValueError("t = %r is outside of [0, t0 = %r)" % (t, t0))
    amp = abs(float(M)) * float(eps)
    if amp == 0:
        return 0.0
    try:
        val = (amp**(1 - p) - (p - 1) * t)**(-1.0 / (p - 1))
    except OverflowError:
        val = amp
    return math.copysign(val, float(M))


class BlowupOracle(object):
    r"""Closed-form blow-up data for one characteristic.

    Args:
        M (float): amplitude $\pm f'(x_0) + g(x_0)$
        eps (float): data amplitude
        p (float): exponent (>1)
        x0 (float or None): foot of the characteristic, for reference
    """

    def __init__(self, M, eps, p, x0=None):
        self._p = _check_p(p)
        self._M = float(M)
        self._eps = float(eps)
        self._t0 = oracle_t0(self._M, self._eps, self._p)
        self.x0 = x0

    @property
    def M(self):
        return self._M

    @property
    def eps(self):
        return self._eps

    @property
    def p(self):
        return self._p

    @property
    def t0(self):
        """Blow-up time"""
        return self._t0

    def U(self, t):
        """Evaluate the closed-form solution at `t` (scalar or array)"""
        if np.ndim(t) == 0:
            return oracle_U(self._M, self._eps, self._p, t)
        return np.array([oracle_U(self._M, self._eps, self._p, s)
                         for s in np.ravel(t)]).reshape(np.shape(t))

    def scaled(self, lam):
        """Oracle for the amplitude ``lam*eps``"""
        return BlowupOracle(self._M, lam * self._eps, self._p, x0=self.x0)

    def __repr__(self):
        return "BlowupOracle(M=%r, eps=%r, p=%r)" % (
            self._M, self._eps, self._p)


def estimate_blowup_time(times, amps, p, growth=GROWTH):
    r"""Estimate the blow-up time from an amplitude trace.

    The transform $y = A^{1-p}$ of the closed-form solution is affine in $t$
    (with slope $-(p-1)$), so a least-squares line through $(t_n, y_n)$ on
    the tail of the trace where $A \ge$ `growth` times the initial amplitude
    has its zero at the blow-up time.

    Args:
        times (array): time levels
        amps (array): amplitudes (e.g. sup|a|) on the same levels
        p (float): exponent (>1)
        growth (float): tail selection factor

    Raises:
        EstimationError: if the trace does not grow by `growth`, if the tail
            has fewer than three points or is not strictly increasing, or if
            the fitted line does not decrease
    """
    logger = logging.getLogger(__name__)
    p = _check_p(p)
    times = np.asarray(times, dtype=np.float64)
    amps = np.asarray(amps, dtype=np.float64)
    if times.shape != amps.shape or times.ndim != 1 or len(times) == 0:
        raise ValueError("times and amps must be 1D arrays of equal length")
    finite = np.isfinite(amps)
    times, amps = times[finite], amps[finite]
    if len(amps) == 0 or amps[0] <= 0:
        raise EstimationError("trace has no positive initial amplitude")
    tail = np.flatnonzero(amps >= growth * amps[0])
    if len(tail) < 3:
        raise EstimationError(
            "amplitude grows from %g to %g only; need a factor %g over at "
            "least three levels" % (amps[0], amps.max(), growth))
    tail = np.arange(tail[0], len(amps))
    if np.any(np.diff(amps[tail]) <= 0):
        raise EstimationError(
            "amplitude is not strictly increasing for t >= %g"
            % times[tail[0]])
    y = amps[tail]**(1 - p)
    fit = linregress(times[tail], y)
    if not fit.slope < 0:
        raise EstimationError("fitted slope %g is not negative" % fit.slope)
    t0 = -fit.intercept / fit.slope
    logger.debug("blow-up fit on %d points: slope %g (expected %g), "
                 "t0 = %g", len(tail), fit.slope, -(p - 1), t0)
    return float(t0)


CurvePoint = namedtuple('CurvePoint', ['x0', 'M', 't0'])


def blowup_curve(data, sign, eps, p, n_samples=201):
    r"""Per-characteristic blow-up times $t_0(x_0)$ for $x_0$ sampled
    uniformly in $[-R, R]$.

    Samples with $|M_\pm(x_0)| < 10^{-14}$ or an infinite $t_0$ are
    omitted.

    Returns:
        list of :class:`CurvePoint`

    Raises:
        ValueError: if ``eps <= 0``
    """
    p = _check_p(p)
    eps = float(eps)
    if not eps > 0:
        raise ValueError("eps = %r must be > 0" % eps)
    sign = as_sign(sign)
    if int(n_samples) < 2:
        raise ValueError("n_samples must be >= 2")
    xs = np.linspace(-data.R, data.R, int(n_samples))
    Ms = eval_M(data, sign, xs)
    curve = []
    for (x0, M) in zip(xs, Ms):
        if abs(M) < DEGENERATE_LIMIT:
            continue
        t0 = oracle_t0(M, eps, p)
        if not np.isfinite(t0):
            continue
        curve.append(CurvePoint(float(x0), float(M), t0))
    return curve


def predict_first_blowup(data, sign, eps, p, n_samples=2**16 + 1):
    r"""Oracle for the earliest blow-up, on the characteristic maximizing
    $|M_\pm|$; None for degenerate data"""
    mstar = eval_Mstar(data, sign, n_samples=n_samples)
    if mstar.degenerate:
        return None
    M = float(eval_M(data, sign, mstar.x))
    return BlowupOracle(M, eps, p, x0=mstar.x)
