"""Collection of routines needed for testing. This includes proto-fixtures,
i.e. routines that should be imported and then turned into a fixture with the
pytest.fixture decorator, and helpers shared by the test suite and the
:mod:`~semiwave.analysis.selftest` checks.

See <https://docs.pytest.org/en/latest/fixture.html>
"""
import os
import shutil

import numpy as np

__all__ = []

__private__ = ['datadir', 'convergence_order', 'random_nonnegative_gridfn']


def datadir(tmpdir, request):
    '''Proto-fixture responsible for searching a folder with the same name of
    test module and, if available, copying all contents to a temporary
    directory so tests can use them freely.

    In any test, import the datadir routine and turn it into a fixture::

        >>> import pytest
        >>> import semiwave.misc.testing_tools
        >>> datadir = pytest.fixture(semiwave.misc.testing_tools.datadir)
    '''
    filename = request.module.__file__
    test_dir, _ = os.path.splitext(filename)

    if os.path.isdir(test_dir):
        shutil.copytree(test_dir, str(tmpdir), dirs_exist_ok=True)

    return str(tmpdir)


def convergence_order(errors, ratio=2.0):
    """Observed orders ``log(e_k/e_{k+1})/log(ratio)`` for a sequence of
    errors obtained by successively refining the mesh by `ratio`"""
    errors = np.asarray(errors, dtype=np.float64)
    return np.log(errors[:-1] / errors[1:]) / np.log(ratio)


def random_nonnegative_gridfn(grid, rng, scale=1.0):
    """Random grid function with values uniform in ``[0, scale)`` inside the
    cone and exactly zero outside

    Args:
        grid (CharGrid): the lattice
        rng (numpy.random.RandomState): random number generator
        scale (float): upper bound for the values
    """
    U = scale * rng.uniform(size=grid.shape)
    U[~grid.cone_mask()] = 0.0
    return U
