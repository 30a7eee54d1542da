r"""Lifespan sweeps over the data amplitude $\varepsilon$ and fits of the
scaling law

.. math::

    T(\varepsilon) \sim C \varepsilon^{-\kappa},

with $\kappa = p - 1$ for the special model and (conjecturally) $\kappa =
p + q - 1$ for the general product model.
"""
import logging
import multiprocessing
from collections import namedtuple

import numpy as np
from scipy.stats import linregress

from ..data.initial_data import NonlinearityParams
from ..errors import EstimationError, InsufficientDataError
from ..solvers import march, picard
from .blowup import estimate_blowup_time, predict_first_blowup

__all__ = ['LifespanRecord', 'FitReport', 'sweep', 'fit_exponent',
           'default_T_cap', 'geometric_eps_list']

__private__ = ['METHODS', 'MIN_RECORDS']

METHODS = ('march', 'picard')
MIN_RECORDS = 3


class LifespanRecord(namedtuple('LifespanRecord', [
        'eps', 'T_obs', 'method', 'h', 'threshold', 'censored'])):
    """Observed breakdown time for one amplitude.

    Attributes:
        eps (float): amplitude
        T_obs (float): breakdown time (>0), or the time cap for a censored
            record
        method (str): ``'march'`` (blow-up time from the marching solver) or
            ``'picard'`` (largest time with a converging Picard iteration)
        h (float): mesh size
        threshold (float): amplitude threshold (march) or residual tolerance
            (picard)
        censored (bool): True if no breakdown was observed up to the cap
    """
    __slots__ = ()

    def __new__(cls, eps, T_obs, method, h, threshold, censored):
        if not T_obs > 0:
            raise ValueError("T_obs = %r must be > 0" % T_obs)
        if method not in METHODS:
            raise ValueError("method '%s' must be one of %s"
                             % (method, ", ".join(METHODS)))
        return super(LifespanRecord, cls).__new__(
            cls, float(eps), float(T_obs), method, float(h),
            float(threshold), bool(censored))


class FitReport(object):
    r"""Least-squares fit of $\log T$ against $\log \varepsilon$.

    Attributes:
        slope (float): fitted exponent (negative for a decreasing lifespan)
        intercept (float): $\log C$
        r_squared (float): coefficient of determination
        residuals (numpy.ndarray): per-point residuals of $\log T$
        expected_slope (float or None): $-\kappa$ for the model
        tolerance (float): relative tolerance for :attr:`passed`
        passed (bool or None): whether the slope matches the expected one
            within the tolerance; None if there is no verified expectation
            (exploratory parameters, or no parameters given)
        method (str): method tag of the records
        n_points (int): number of records in the fit
    """

    def __init__(self, slope, intercept, r_squared, residuals,
                 expected_slope, tolerance, passed, method, n_points):
        self.slope = slope
        self.intercept = intercept
        self.r_squared = r_squared
        self.residuals = residuals
        self.expected_slope = expected_slope
        self.tolerance = tolerance
        self.passed = passed
        self.method = method
        self.n_points = n_points

    def as_dict(self):
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r_squared': self.r_squared,
            'residuals': [float(r) for r in self.residuals],
            'expected_slope': self.expected_slope,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'method': self.method,
            'n_points': self.n_points,
        }

    def __repr__(self):
        return ("FitReport(slope=%r, expected_slope=%r, r_squared=%r, "
                "passed=%r)" % (self.slope, self.expected_slope,
                                self.r_squared, self.passed))


def geometric_eps_list(eps_max=0.4, ratio=2.0, n=4):
    """Amplitudes ``eps_max, eps_max/ratio, ...`` (`n` values)"""
    if n < 1 or not ratio > 1 or not eps_max > 0:
        raise ValueError("invalid geometric grid: eps_max=%r, ratio=%r, n=%r"
                         % (eps_max, ratio, n))
    return [eps_max / ratio**k for k in range(n)]


def default_T_cap(data, params, eps_list):
    r"""Ten times the expected lifespan at the smallest amplitude: the
    oracle blow-up time for the special model, $\varepsilon^{-\kappa}$ for
    the general product model

    Raises:
        ValueError: if there is no expected lifespan (free equation, or
            degenerate data)
    """
    eps_min = min(eps_list)
    if params.is_special:
        oracle = predict_first_blowup(data, params.sign, eps_min, params.p)
        if oracle is None:
            raise ValueError("data %r do not blow up; give T_cap explicitly"
                             % data)
        return 10.0 * oracle.t0
    elif params.variant == NonlinearityParams.GENERAL:
        return 10.0 * eps_min**(-params.lifespan_exponent)
    raise ValueError("no expected lifespan for %r; give T_cap explicitly"
                     % params)


def _fit_exponent_p(params):
    r"""Exponent of the amplitude ODE $A' \sim A^{p'}$ used to linearize
    march traces"""
    if params.variant == NonlinearityParams.GENERAL:
        return params.p + params.q
    return params.p


def _march_record(data, params, eps, h, T_cap, threshold):
    logger = logging.getLogger(__name__)
    result = march.solve(data, params, eps, T_cap, h,
                         amp_threshold=threshold)
    if result.status == march.SolveResult.COMPLETED:
        logger.warning("eps = %g: no breakdown up to T_cap = %g (censored)",
                       eps, T_cap)
        return LifespanRecord(eps, T_cap, 'march', h, threshold, True)
    try:
        T_obs = estimate_blowup_time(result.trace[:, 0], result.amplitude(),
                                     _fit_exponent_p(params))
    except EstimationError as exc_info:
        logger.warning("eps = %g: %s; using the crossing time %g", eps,
                       exc_info, result.t_cross)
        T_obs = result.t_cross
    return LifespanRecord(eps, T_obs, 'march', h, threshold, False)


def _picard_record(data, params, eps, h, T_cap, tol, max_iter, n_bisect):
    logger = logging.getLogger(__name__)

    def converges(T):
        return picard.run(data, params, eps, T, h, tol=tol,
                          max_iter=max_iter).converged

    if tol is None:
        tol = picard.default_tol(eps)
    if converges(T_cap):
        logger.warning("eps = %g: Picard iteration converges up to T_cap = "
                       "%g (censored)", eps, T_cap)
        return LifespanRecord(eps, T_cap, 'picard', h, tol, True)
    lo, hi = 0.0, float(T_cap)
    for _ in range(int(n_bisect)):
        mid = 0.5 * (lo + hi)
        if converges(mid):
            lo = mid
        else:
            hi = mid
        logger.debug("eps = %g: bracket [%g, %g]", eps, lo, hi)
    if lo == 0:
        raise EstimationError(
            "eps = %g: Picard iteration does not converge for any T >= %g"
            % (eps, hi))
    return LifespanRecord(eps, lo, 'picard', h, tol, False)


def _sweep_worker(args):
    """Compute the :class:`LifespanRecord` for a single amplitude (top-level,
    so that it can be sent to a worker process)"""
    (method, data, params, eps, h, T_cap, threshold, tol, max_iter,
     n_bisect) = args
    if method == 'march':
        return _march_record(data, params, eps, h, T_cap, threshold)
    return _picard_record(data, params, eps, h, T_cap, tol, max_iter,
                          n_bisect)


def sweep(data, params, eps_list, h, T_cap=None,
          threshold=march.AMP_THRESHOLD, method='march', jobs=1, tol=None,
          max_iter=picard.MAX_ITER, n_bisect=8):
    r"""Observe the breakdown time for each amplitude in `eps_list`.

    Args:
        data (InitialData): initial data
        params (NonlinearityParams): the nonlinearity
        eps_list (list): at least three amplitudes $\varepsilon > 0$
        h (float): mesh size
        T_cap (float or None): time cap; records reaching it are censored.
            Defaults to :func:`default_T_cap`
        threshold (float): amplitude threshold for the march method
        method (str): ``'march'`` or ``'picard'``
        jobs (int): number of worker processes
        tol (float or None): Picard residual tolerance (picard method)
        max_iter (int): Picard iteration limit (picard method)
        n_bisect (int): number of bisection steps over $T$ (picard method)

    Returns:
        list of :class:`LifespanRecord`, sorted by `eps`

    Raises:
        EstimationError: if, for the picard method, the iteration converges
            for none of the bisection times
    """
    logger = logging.getLogger(__name__)
    if method not in METHODS:
        raise ValueError("method '%s' must be one of %s"
                         % (method, ", ".join(METHODS)))
    eps_list = sorted(float(eps) for eps in eps_list)
    if len(eps_list) < MIN_RECORDS:
        raise ValueError("a sweep requires at least %d amplitudes"
                         % MIN_RECORDS)
    if eps_list[0] <= 0:
        raise ValueError("all amplitudes must be > 0")
    if T_cap is None:
        T_cap = default_T_cap(data, params, eps_list)
    logger.info("%s sweep over eps = %s, T_cap = %g, %d job(s)", method,
                eps_list, T_cap, jobs)
    tasks = [(method, data, params, eps, h, T_cap, threshold, tol, max_iter,
              n_bisect) for eps in eps_list]
    jobs = min(int(jobs), len(tasks))
    if jobs > 1:
        pool = multiprocessing.Pool(jobs)
        try:
            records = pool.map(_sweep_worker, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        records = [_sweep_worker(task) for task in tasks]
    return sorted(records, key=lambda rec: rec.eps)


def fit_exponent(records, params=None, tolerance=0.05):
    r"""Fit $\log T_{obs} = \text{slope} \cdot \log\varepsilon +
    \text{intercept}$ to the uncensored `records`.

    Args:
        records (list of LifespanRecord): sweep output (one method only)
        params (NonlinearityParams or None): if given, the slope is compared
            to $-\kappa$
        tolerance (float): relative tolerance on the slope

    Raises:
        InsufficientDataError: for fewer than three uncensored records
        ValueError: if the records mix methods
    """
    logger = logging.getLogger(__name__)
    methods = set(rec.method for rec in records)
    if len(methods) > 1:
        raise ValueError("cannot fit records from different methods: %s"
                         % ", ".join(sorted(methods)))
    used = [rec for rec in records if not rec.censored]
    if len(used) < MIN_RECORDS:
        raise InsufficientDataError(
            "%d uncensored record(s); a fit requires at least %d"
            % (len(used), MIN_RECORDS))
    log_eps = np.log([rec.eps for rec in used])
    log_T = np.log([rec.T_obs for rec in used])
    fit = linregress(log_eps, log_T)
    residuals = log_T - (fit.slope * log_eps + fit.intercept)
    expected = passed = None
    if params is not None and params.lifespan_exponent is not None:
        expected = -params.lifespan_exponent
        if params.exploratory:
            logger.warning("slope %g for %r is exploratory (expected %g is "
                           "conjectural)", fit.slope, params, expected)
        else:
            passed = bool(abs(fit.slope - expected) <=
                          tolerance * abs(expected))
    r_squared = fit.rvalue**2
    logger.debug("lifespan fit: slope %g, intercept %g, R^2 %g", fit.slope,
                 fit.intercept, r_squared)
    return FitReport(float(fit.slope), float(fit.intercept),
                     float(r_squared), residuals, expected, tolerance, passed,
                     methods.pop(), len(used))
