import numpy as np

from semiwave.misc.testing_tools import (
    convergence_order, random_nonnegative_gridfn)
from semiwave.solvers.grid import CharGrid


def test_convergence_order():
    orders = convergence_order([1.0, 0.25, 0.0625])
    assert np.allclose(orders, [2.0, 2.0])
    orders = convergence_order([1.0, 0.1], ratio=10)
    assert np.allclose(orders, [1.0])


def test_random_nonnegative_gridfn():
    grid = CharGrid(0.125, 1.0, 1.0)
    U = random_nonnegative_gridfn(grid, np.random.RandomState(0), scale=2.0)
    assert U.shape == grid.shape
    assert np.all(U >= 0) and np.all(U < 2.0)
    assert np.all(U[~grid.cone_mask()] == 0.0)
    V = random_nonnegative_gridfn(grid, np.random.RandomState(0), scale=2.0)
    assert np.all(U == V)
