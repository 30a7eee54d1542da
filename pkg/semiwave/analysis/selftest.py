"""Invariant checks for the Duhamel operators, the free wave, and the
marching solver.

Each check is registered under a name with the :func:`check` decorator and
receives a :class:`SelftestSetup`; it returns a list of violation messages
(empty on success). The operators are looked up on the
:mod:`~semiwave.solvers.duhamel` module at call time, so that a replaced
operator is picked up by the checks.
"""
import logging
from collections import OrderedDict, namedtuple

import numpy as np

from ..data.freewave import FreeWave
from ..data.initial_data import NonlinearityParams, make_bump_data
from ..misc.testing_tools import random_nonnegative_gridfn
from ..solvers import duhamel, march
from ..solvers.grid import CharGrid

__all__ = ['SelftestSetup', 'SelftestReport', 'run_selftest', 'CHECKS']

__private__ = ['check', 'CheckResult']

#: Registry of invariant checks, by name
CHECKS = OrderedDict()

CheckResult = namedtuple('CheckResult', ['name', 'passed', 'messages'])


def check(name):
    """Decorator registering a check function under `name`"""
    def register(func):
        CHECKS[name] = func
        return func
    return register


class SelftestSetup(object):
    """Parameters shared by all checks.

    Args:
        h (float): mesh size
        T (float): final time
        R (float): support radius
        seed (int): seed for the random grid functions
        n_random (int): number of random grid functions
        n_transport (int): number of free-transport steps
    """

    slack = 1e-12

    def __init__(self, h=1.0/64, T=4.0, R=1.0, seed=0, n_random=20,
                 n_transport=1000):
        self.grid = CharGrid(h, T, R)
        self.seed = int(seed)
        self.n_random = int(n_random)
        self.n_transport = int(n_transport)
        self.data = make_bump_data(1.0, 1.0, R)

    def random_fields(self):
        rng = np.random.RandomState(self.seed)
        for _ in range(self.n_random):
            yield random_nonnegative_gridfn(self.grid, rng)


@check('operator exactness')
def _check_exactness(setup):
    grid = setup.grid
    one = np.ones(grid.shape)
    tn = grid.mesh()[1]
    msgs = []
    err = np.max(np.abs(duhamel.op_Lprime(one, grid, edge='extend') - tn))
    if err > setup.slack:
        msgs.append("L'(1) differs from t by %.3e" % err)
    err = np.max(np.abs(duhamel.op_Lbar(one, grid, edge='extend')))
    if err > setup.slack:
        msgs.append("Lbar'(1) differs from 0 by %.3e" % err)
    W = duhamel.op_L(one, grid, edge='extend')
    err = np.max(np.abs(W[1:] - 0.5 * tn[1:]**2) / (0.5 * tn[1:]**2))
    if err > 1e-9:
        msgs.append("L(1) differs from t^2/2 by %.3e (relative)" % err)
    return msgs


@check('domination |Lbar(U)| <= L\'(U)')
def _check_domination(setup):
    grid = setup.grid
    n_viol = 0
    for U in setup.random_fields():
        Lp = duhamel.op_Lprime(U, grid)
        Lb = duhamel.op_Lbar(U, grid)
        n_viol += int(np.sum(np.abs(Lb) > Lp + setup.slack))
    if n_viol > 0:
        return ["domination |Lbar(U)| <= L'(U) violated at %d nodes"
                % n_viol]
    return []


@check('a priori bound')
def _check_a_priori(setup):
    grid = setup.grid
    msgs = []
    for U in setup.random_fields():
        bound = grid.t_final * np.max(np.abs(U))
        val = np.max(np.abs(duhamel.op_Lprime(U, grid)))
        if val > bound + setup.slack:
            msgs.append("|L'(U)| = %g exceeds T |U| = %g" % (val, bound))
    return msgs


@check('linearity')
def _check_linearity(setup):
    grid = setup.grid
    fields = list(setup.random_fields())
    msgs = []
    for U, V in zip(fields[:-1], fields[1:]):
        for name in ('op_Lprime', 'op_Lbar', 'op_L'):
            op = getattr(duhamel, name)
            lhs = op(2.0 * U - 0.5 * V, grid)
            rhs = 2.0 * op(U, grid) - 0.5 * op(V, grid)
            err = np.max(np.abs(lhs - rhs))
            if err > 1e-10 * max(np.max(np.abs(rhs)), 1.0):
                msgs.append("%s is not linear (error %.3e)" % (name, err))
    return msgs


@check('cone support')
def _check_cone(setup):
    grid = setup.grid
    outside = ~grid.cone_mask()
    msgs = []
    for U in setup.random_fields():
        for name in ('op_Lprime', 'op_Lbar', 'op_L'):
            res = getattr(duhamel, name)(U, grid)
            if np.any(res[outside] != 0):
                msgs.append("%s(U) does not vanish outside the cone" % name)
    return msgs


@check('free wave identities')
def _check_freewave(setup):
    grid = setup.grid
    data = setup.data
    fw = FreeWave(data)
    X, Tn = grid.mesh()
    x = grid.x
    msgs = []
    if np.max(np.abs(fw.u0(x, 0) - data.f(x))) > setup.slack:
        msgs.append("u0(x, 0) != f(x)")
    if np.max(np.abs(fw.u0_t(x, 0) - data.g(x))) > setup.slack:
        msgs.append("u0_t(x, 0) != g(x)")
    if np.any(fw.u0_tt(X, Tn) != fw.u0_xx(X, Tn)):
        msgs.append("u0_tt != u0_xx")
    outside = ~grid.cone_mask()
    for name in FreeWave._names:
        if np.any(getattr(fw, name)(X, Tn)[outside] != 0):
            msgs.append("%s does not vanish outside the cone" % name)
    return msgs


@check('d\'Alembert splitting')
def _check_splitting(setup):
    grid = setup.grid
    data = setup.data
    fw = FreeWave(data)
    X, Tn = grid.mesh()
    u_t, u_x = fw.u0_t(X, Tn), fw.u0_x(X, Tn)
    A, B = u_t + u_x, u_t - u_x
    msgs = []
    # A is constant along x + t = const, B along x - t = const
    spread_a = spread_b = 0.0
    for n in range(1, grid.nt + 1):
        spread_a = max(spread_a, np.max(np.abs(A[n, :-n] - A[0, n:])))
        spread_b = max(spread_b, np.max(np.abs(B[n, n:] - B[0, :-n])))
    if spread_a > setup.slack:
        msgs.append("u0_t + u0_x varies by %.3e along x + t = const"
                    % spread_a)
    if spread_b > setup.slack:
        msgs.append("u0_t - u0_x varies by %.3e along x - t = const"
                    % spread_b)
    eps = 0.5
    state = march.init_fields(data, eps, grid)
    x = grid.x
    if np.max(np.abs(state.a - eps * A[0])) > setup.slack:
        msgs.append("a != eps*(u0_t + u0_x) at t = 0")
    if np.max(np.abs(state.b - eps * B[0])) > setup.slack:
        msgs.append("b != eps*(u0_t - u0_x) at t = 0")
    if np.max(np.abs(state.u_t - eps * data.g(x))) > setup.slack:
        msgs.append("(a+b)/2 != eps*g at t = 0")
    if np.max(np.abs(state.u_x - eps * data.df(x))) > setup.slack:
        msgs.append("(a-b)/2 != eps*f' at t = 0")
    return msgs


@check('free transport')
def _check_transport(setup):
    n = setup.n_transport
    h = setup.grid.h
    grid = CharGrid(h, n * h, setup.grid.R)
    params = NonlinearityParams(0, variant=NonlinearityParams.FREE)
    state = march.init_fields(setup.data, 1.0, grid)
    a0, b0 = state.a.copy(), state.b.copy()
    norm_a, norm_b = np.linalg.norm(a0), np.linalg.norm(b0)
    msgs = []
    for k in range(1, n + 1):
        march.step(state, params)
        if np.any(state.a[:-k] != a0[k:]) or np.any(state.b[k:] != b0[:-k]):
            msgs.append("level %d is not an exact shift of level 0" % k)
            break
    for name, arr, norm in (('a', state.a, norm_a), ('b', state.b, norm_b)):
        err = abs(np.linalg.norm(arr) - norm) / norm
        if err > setup.slack:
            msgs.append("l2 norm of %s changed by %.3e (relative)"
                        % (name, err))
    return msgs


class SelftestReport(object):
    """Results of :func:`run_selftest`

    Attributes:
        results (list of CheckResult): one entry per check, in registry order
    """

    def __init__(self, results):
        self.results = list(results)

    @property
    def passed(self):
        return all(res.passed for res in self.results)

    @property
    def failed(self):
        """Names of the failed checks"""
        return [res.name for res in self.results if not res.passed]

    def table(self):
        """Text table with one line per check and one line per violation"""
        width = max(len(name) for name in CHECKS)
        lines = []
        for res in self.results:
            lines.append("%-*s  %s" % (width, res.name,
                                       'ok' if res.passed else 'FAILED'))
            for msg in res.messages:
                lines.append("    %s" % msg)
        return "\n".join(lines)

    def __str__(self):
        return self.table()


def run_selftest(setup=None, names=None):
    """Run the registered checks (or only those in `names`)

    Returns:
        SelftestReport: the results, in registry order
    """
    logger = logging.getLogger(__name__)
    if setup is None:
        setup = SelftestSetup()
    if names is None:
        names = list(CHECKS)
    unknown = set(names) - set(CHECKS)
    if len(unknown) > 0:
        raise ValueError("Unknown check(s): %s" % ", ".join(sorted(unknown)))
    results = []
    for name in CHECKS:
        if name not in names:
            continue
        messages = CHECKS[name](setup)
        logger.info("selftest %s: %s", name,
                    'ok' if len(messages) == 0 else 'FAILED')
        results.append(CheckResult(name, len(messages) == 0, messages))
    return SelftestReport(results)
