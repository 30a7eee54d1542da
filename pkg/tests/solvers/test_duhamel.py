import numpy as np
import pytest
from numpy.polynomial import Polynomial

from semiwave.errors import GridError
from semiwave.solvers.grid import CharGrid
from semiwave.solvers.duhamel import op_P, op_Q, op_Lprime, op_Lbar, op_L
from semiwave.misc.testing_tools import (
    convergence_order, random_nonnegative_gridfn)


def test_constant_source_exact():
    """For U = 1: L'(U) = t, Lbar'(U) = 0, L(U) = t^2/2"""
    grid = CharGrid(1.0/256, 4.0, 1.0)
    one = np.ones(grid.shape)
    tn = grid.mesh()[1]
    assert np.max(np.abs(op_Lprime(one, grid, edge='extend') - tn)) < 1e-12
    assert np.max(np.abs(op_Lbar(one, grid, edge='extend'))) < 1e-12
    W = op_L(one, grid, edge='extend')
    assert np.all(W[0] == 0.0)
    rel = np.abs(W[1:] - 0.5 * tn[1:]**2) / (0.5 * tn[1:]**2)
    assert np.max(rel) < 1e-9


def test_zero_edge_requires_vanishing_source():
    grid = CharGrid(0.25, 1.0, 1.0)
    for op in (op_P, op_Q, op_Lprime, op_Lbar, op_L):
        with pytest.raises(GridError) as exc_info:
            op(np.ones(grid.shape), grid)
        assert 'edge columns' in str(exc_info.value)


def test_invalid_arguments():
    grid = CharGrid(0.25, 1.0, 1.0)
    with pytest.raises(ValueError):
        op_P(grid.zeros(), grid, edge='periodic')
    with pytest.raises(GridError):
        op_Q(np.zeros((3, 3)), grid)


def test_domination_and_bound():
    """|Lbar'(U)| <= L'(U) <= t sup|U| for non-negative U"""
    grid = CharGrid(0.1, 1.0, 1.0)
    tn = grid.mesh()[1]
    rng = np.random.RandomState(42)
    for _ in range(1000):
        U = random_nonnegative_gridfn(grid, rng)
        Lp = op_Lprime(U, grid)
        Lb = op_Lbar(U, grid)
        assert np.all(np.abs(Lb) <= Lp + 1e-12)
        assert np.all(Lp <= tn * np.max(U) + 1e-12)


def test_mirror_symmetry():
    """P and Q are exchanged under x -> -x"""
    grid = CharGrid(1.0/16, 2.0, 1.0)
    U = random_nonnegative_gridfn(grid, np.random.RandomState(0))
    assert np.max(np.abs(op_P(U[:, ::-1], grid) - op_Q(U, grid)[:, ::-1])) \
        < 1e-14
    assert np.max(np.abs(op_Lbar(U[:, ::-1], grid) +
                         op_Lbar(U, grid)[:, ::-1])) < 1e-14


def test_cone_support():
    grid = CharGrid(1.0/16, 2.0, 1.0)
    U = random_nonnegative_gridfn(grid, np.random.RandomState(1))
    outside = ~grid.cone_mask()
    for op in (op_Lprime, op_Lbar, op_L):
        assert np.all(op(U, grid)[outside] == 0.0)


def _exact_operators():
    """Exact L', Lbar', L for the time-independent source g(x) = (1-x^2)^2
    on |x| <= 1"""
    g = Polynomial([1, 0, -1])**2
    Phi = g.integ(lbnd=-1)
    Psi = Phi.integ(lbnd=-1)
    total, Psi1 = Phi(1.0), Psi(1.0)

    def phi(y):
        return np.where(y < -1, 0.0,
                        np.where(y > 1, total, Phi(np.clip(y, -1, 1))))

    def psi(y):
        return np.where(y < -1, 0.0,
                        np.where(y > 1, Psi1 + total * (y - 1),
                                 Psi(np.clip(y, -1, 1))))

    def source(x, t):
        return np.where(np.abs(x) <= 1, g(np.clip(x, -1, 1)), 0.0)

    def Lp(x, t):
        return 0.5 * (phi(x + t) - phi(x - t))

    def Lb(x, t):
        return 0.5 * (phi(x + t) + phi(x - t) - 2 * phi(x))

    def L(x, t):
        return 0.5 * (psi(x + t) + psi(x - t) - 2 * psi(x))

    return source, Lp, Lb, L


def test_second_order_convergence():
    source, Lp, Lb, L = _exact_operators()
    errors = {'Lprime': [], 'Lbar': [], 'L': []}
    for h in (1.0/16, 1.0/32, 1.0/64):
        grid = CharGrid(h, 1.0, 1.0)
        U = grid.sample(source)
        errors['Lprime'].append(
            np.max(np.abs(op_Lprime(U, grid) - grid.sample(Lp))))
        errors['Lbar'].append(
            np.max(np.abs(op_Lbar(U, grid) - grid.sample(Lb))))
        errors['L'].append(np.max(np.abs(op_L(U, grid) - grid.sample(L))))
    for name, errs in errors.items():
        assert np.all(convergence_order(errs) >= 1.8), name
