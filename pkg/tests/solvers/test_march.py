import logging

import numpy as np
import pytest

from semiwave.analysis.blowup import estimate_blowup_time, oracle_t0
from semiwave.data.initial_data import (
    NonlinearityParams, make_bump_data, make_traveling_data)
from semiwave.solvers.grid import CharGrid
from semiwave.solvers.march import init_fields, step, solve, SolveResult
from semiwave.misc.testing_tools import convergence_order


FREE = NonlinearityParams(0, variant='free')
PLUS2 = NonlinearityParams(2, variant='special-plus')


def test_init_fields():
    data = make_bump_data(1.0, 0.5, 1.0)
    grid = CharGrid(1.0/16, 1.0, 1.0)
    state = init_fields(data, 0.2, grid)
    x = grid.x
    assert state.n == 0
    assert state.t == 0.0
    assert np.all(state.a == 0.2 * (data.g(x) + data.df(x)))
    assert np.all(state.b == 0.2 * (data.g(x) - data.df(x)))
    assert np.all(state.u == 0.2 * data.f(x))
    assert np.allclose(state.u_t, 0.2 * data.g(x), rtol=0, atol=1e-15)
    assert len(state.trace) == 1
    with pytest.raises(ValueError):
        init_fields(make_bump_data(1.0, 0.5, 2.0), 0.2, grid)


def test_step_at_final_level():
    grid = CharGrid(0.25, 0.5, 1.0)
    state = init_fields(make_bump_data(0, 1), 0.1, grid)
    step(state, PLUS2)
    step(state, PLUS2)
    assert state.n == grid.nt
    with pytest.raises(ValueError):
        step(state, PLUS2)


def test_free_transport():
    """Without source, the invariants are shifted exactly"""
    data = make_bump_data(1.0, 0.5, 1.0)
    h = 1.0/64
    grid = CharGrid(h, 10000 * h, 1.0)
    state = init_fields(data, 1.0, grid)
    a0, b0 = state.a.copy(), state.b.copy()
    norm_a0, norm_b0 = np.linalg.norm(a0), np.linalg.norm(b0)
    m = grid.m
    for n in range(1, grid.nt + 1):
        step(state, FREE)
        if n % 2500 == 0:
            k = grid.cone_halfwidth(n)
            outside = np.abs(np.arange(grid.nx) - m) > k
            assert np.all(state.a[outside] == 0.0)
            assert np.all(state.b[outside] == 0.0)
    assert state.n == 10000
    assert abs(np.linalg.norm(state.a) / norm_a0 - 1) <= 1e-12
    assert abs(np.linalg.norm(state.b) / norm_b0 - 1) <= 1e-12
    # a moves left, b moves right
    assert np.all(state.a[:-10000] == a0[10000:])
    assert np.all(state.b[10000:] == b0[:-10000])


@pytest.mark.parametrize('variant', ['special-plus', 'special-minus'])
def test_riemann_decoupling(variant):
    """The driving invariant does not see the other one"""
    params = NonlinearityParams(2, variant=variant)
    grid = CharGrid(1.0/32, 1.0, 1.0)
    data = make_bump_data(0.3, 1.0, 1.0)
    state1 = init_fields(data, 0.5, grid)
    state2 = init_fields(data, 0.5, grid)
    if variant == 'special-plus':
        state2.b = 3.0 * state2.b
    else:
        state2.a = 3.0 * state2.a
    for _ in range(grid.nt):
        step(state1, params)
        step(state2, params)
    if variant == 'special-plus':
        assert np.all(state1.a == state2.a)
    else:
        assert np.all(state1.b == state2.b)


def test_traveling_wave_global_solution():
    """u = eps*f(x - t) is a global solution of the special-plus model"""
    f_data = make_traveling_data(1.0, R=1.0, sign='+')
    errors = []
    for h in (1.0/16, 1.0/32):
        result = solve(f_data, PLUS2, 1.0, T=50.0, h=h)
        assert result.status == SolveResult.COMPLETED
        state = result.state
        assert np.all(state.a == 0.0)
        x = state.grid.x
        errors.append(np.max(np.abs(state.u - f_data.f(x - state.t))))
    assert errors[0] < 1e-2
    assert convergence_order(errors)[0] >= 1.8


@pytest.mark.parametrize('p, eps, t0', [(2, 0.25, 4.0), (2, 0.5, 2.0),
                                        (3, 0.5, 2.0)])
def test_blowup_time(p, eps, t0):
    """Estimated blow-up time for f = 0, max(g) = 1"""
    data = make_bump_data(0, 1, 1)
    params = NonlinearityParams(p, variant='special-plus')
    assert oracle_t0(1.0, eps, p) == pytest.approx(t0)
    errors = []
    for h in (1.0/512, 1.0/1024):
        result = solve(data, params, eps, T=2 * t0, h=h)
        assert result.status == SolveResult.THRESHOLD_CROSSED
        assert result.field == 'a'
        t_est = estimate_blowup_time(result.trace[:, 0], result.amplitude(),
                                     p)
        errors.append(abs(t_est - t0))
    assert errors[1] <= 0.02 * t0
    assert errors[1] < errors[0]


def test_blowup_location():
    data = make_bump_data(0, 1, 1)
    h = 1.0/16
    result = solve(data, PLUS2, 1.0, T=3.0, h=h)
    assert result.status == SolveResult.THRESHOLD_CROSSED
    assert result.x_blowup == 0.0
    assert result.t_cross < 3.0
    result = solve(data, PLUS2, 1.0, T=3.0, h=h, amp_threshold=np.inf)
    assert result.status == SolveResult.BLOWUP_DETECTED
    assert abs(result.x_blowup) <= 2 * h
    summary = result.summary()
    assert summary['status'] == 'blowup_detected'
    assert summary['field'] == 'a'
    assert not summary['exploratory']


def test_special_minus_drives_b():
    data = make_bump_data(0, 1, 1)
    params = NonlinearityParams(2, variant='special-minus')
    result = solve(data, params, 1.0, T=3.0, h=1.0/16)
    assert result.status == SolveResult.THRESHOLD_CROSSED
    assert result.field == 'b'
    assert result.x_blowup == 0.0
    assert np.all(result.amplitude() == result.trace[:, 2])


def test_trace():
    data = make_bump_data(0, 1, 1)
    result = solve(data, PLUS2, 0.1, T=1.0, h=0.125)
    assert result.status == SolveResult.COMPLETED
    trace = result.trace
    assert trace.shape == (9, 4)
    assert np.all(trace[:, 0] == np.arange(9) * 0.125)
    assert trace[0, 1] == pytest.approx(0.1)
    assert result.t_cross is None and result.x_blowup is None


def test_exploratory_warning(caplog):
    data = make_bump_data(0, 1, 1)
    params = NonlinearityParams(2, 2)
    with caplog.at_level(logging.WARNING):
        result = solve(data, params, 0.1, T=1.0, h=0.125)
    assert 'exploratory' in caplog.text
    assert not result.exploratory
    result = solve(data, params, 5.0, T=5.0, h=0.125)
    assert result.status != SolveResult.COMPLETED
    assert result.exploratory


def test_invalid_threshold():
    with pytest.raises(ValueError):
        solve(make_bump_data(0, 1), PLUS2, 0.1, T=1.0, h=0.125,
              amp_threshold=0)


@pytest.mark.parametrize('variant, column', [('special-plus', 1),
                                             ('special-minus', 2)])
def test_driving_amplitude_increases(variant, column):
    """With M > 0 (here M = g >= 0), the sup of the driving Riemann field
    grows strictly at every step"""
    data = make_bump_data(0, 1, 1)
    params = NonlinearityParams(2, variant=variant)
    result = solve(data, params, 0.5, T=1.5, h=1.0/64)
    assert result.status == SolveResult.COMPLETED
    amp = result.trace[:, column]
    assert len(amp) == 97
    assert np.all(np.diff(amp) > 0)
