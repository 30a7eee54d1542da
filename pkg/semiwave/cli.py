# This file is part of semiwave.
#
#    semiwave is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#    semiwave is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with semiwave.  If not, see <http://www.gnu.org/licenses/>.
#
# Copyright (C) 2024-2026, semiwave authors
#
###########################################################################
"""Command line interface.

Run as

    semiwave [--config FILE] [-v|-d] COMMAND [options]

where COMMAND is one of ``selftest``, ``solve``, ``picard``, ``blowup``,
``sweep``, ``oracle``. All options of a command may also be given in the
config file (``key = value`` lines); flags take precedence over the file.
Results are written to the directory ``--out``.

Exit codes: 0 success, 1 numerical failure, 2 configuration error, 3 I/O
error.
"""
import logging
import os
import sys

import click

from .analysis import blowup, lifespan, selftest
from .errors import ConfigError, SemiWaveException
from .io.config import RunConfig
from .io.tables import CurveTable, RecordsTable, TraceTable, write_json
from .solvers import march, picard

__all__ = []

__private__ = ['main', 'cli', 'config_options']

EXIT_OK, EXIT_NUMERICAL, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3

_CONFIG_OPTIONS = [
    click.option('--model', help="nonlinearity: general, special-plus, "
                 "special-minus, free"),
    click.option('--p', 'p', type=float, help="exponent p"),
    click.option('--q', 'q', type=float, help="exponent q (general model)"),
    click.option('--eps', type=float, help="data amplitude"),
    click.option('--eps-list', help="comma-separated amplitudes (sweep)"),
    click.option('--family', help="data family: bump, traveling"),
    click.option('--amp-f', type=float, help="amplitude of f"),
    click.option('--amp-g', type=float, help="amplitude of g (bump)"),
    click.option('--sign', help="'+' or '-' (traveling data)"),
    click.option('--R', 'R', type=float, help="support radius (>= 1)"),
    click.option('--h', 'h', type=float, help="mesh size"),
    click.option('--T', 'T', type=float, help="final time"),
    click.option('--T-cap', 'T_cap', type=float, help="time cap (sweep)"),
    click.option('--tol', type=float, help="Picard residual tolerance"),
    click.option('--max-iter', type=int, help="Picard iteration limit"),
    click.option('--threshold', type=float, help="amplitude threshold"),
    click.option('--deriv/--no-deriv', default=None,
                 help="iterate the derivative fields (picard)"),
    click.option('--method', help="lifespan method: march, picard"),
    click.option('--M', 'M', type=float, help="blow-up amplitude (oracle)"),
    click.option('--t', 't', type=float, help="evaluation time (oracle)"),
    click.option('--samples', type=int, help="number of curve samples"),
    click.option('--out', help="output directory"),
    click.option('--jobs', type=int, help="number of worker processes"),
    click.option('--seed', type=int, help="random seed (selftest)"),
]


def config_options(func):
    """Decorator adding all :class:`RunConfig` flags to a command"""
    for option in reversed(_CONFIG_OPTIONS):
        func = option(func)
    return func


def _make_config(ctx, flags):
    config = RunConfig.from_sources(ctx.obj.get('config_file'), flags)
    config.validate()
    logging.getLogger(__name__).debug("%r", config)
    return config


def _out_path(config, filename):
    os.makedirs(config.out, exist_ok=True)
    return os.path.join(config.out, filename)


def _fmt(value):
    return "%.12g" % value


@click.group()
@click.option('--config', 'config_file', type=click.Path(),
              help="key = value configuration file")
@click.option('--verbose', '-v', is_flag=True, help="log run summaries")
@click.option('--debug', '-d', is_flag=True, help="log every iteration")
@click.pass_context
def cli(ctx, config_file, verbose, debug):
    """Solve 1D semilinear wave equations with derivative
    nonlinearities"""
    level = logging.WARNING
    if verbose:
        level = logging.INFO
    if debug:
        level = logging.DEBUG
    logging.basicConfig(level=level,
                        format="%(levelname)s:%(name)s: %(message)s")
    logging.getLogger('semiwave').setLevel(level)
    ctx.ensure_object(dict)
    ctx.obj['config_file'] = config_file


@cli.command('selftest')
@config_options
@click.pass_context
def cmd_selftest(ctx, **flags):
    """Check the invariants of the operators and the free wave"""
    config = _make_config(ctx, flags)
    setup = selftest.SelftestSetup(h=config.h, T=config.T, R=config.R,
                                   seed=config.seed)
    report = selftest.run_selftest(setup)
    summary = {'passed': report.passed, 'failed': report.failed,
               'checks': dict((res.name, res.messages)
                              for res in report.results)}
    write_json(_out_path(config, 'selftest.json'), config.effective(),
               summary)
    if not report.passed:
        click.echo(report.table())
        click.echo("selftest FAILED: %s" % ", ".join(report.failed))
        return EXIT_NUMERICAL
    click.echo("selftest passed (%d checks)" % len(report.results))
    return EXIT_OK


def _blowup_expected(data, params, eps, T):
    """Whether the oracle predicts a blow-up before `T`"""
    if params.exploratory:
        return True
    if not params.is_special or eps == 0:
        return False
    oracle = blowup.predict_first_blowup(data, params.sign, eps, params.p)
    return oracle is not None and oracle.t0 <= T


@cli.command('solve')
@config_options
@click.pass_context
def cmd_solve(ctx, **flags):
    """March the Riemann invariants up to T"""
    config = _make_config(ctx, flags)
    data, params = config.data(), config.params()
    result = march.solve(data, params, config.eps, config.T, config.h,
                         amp_threshold=config.threshold)
    TraceTable.from_result(result, config.effective()).write(
        _out_path(config, 'trace.dat'))
    write_json(_out_path(config, 'solve.json'), config.effective(),
               result.summary())
    click.echo("solve: %s at t = %s (max amplitude %s)" % (
               result.status, _fmt(result.t_cross or result.state.t),
               _fmt(result.state.max_amplitude)))
    if result.status == march.SolveResult.COMPLETED:
        return EXIT_OK
    if _blowup_expected(data, params, config.eps, config.T):
        return EXIT_OK
    return EXIT_NUMERICAL


@cli.command('picard')
@config_options
@click.pass_context
def cmd_picard(ctx, **flags):
    """Picard iteration on [0, T]"""
    config = _make_config(ctx, flags)
    result = picard.run(config.data(), config.params(), config.eps,
                        config.T, config.h, tol=config.tol,
                        max_iter=config.max_iter, deriv=config.deriv)
    write_json(_out_path(config, 'picard.json'), config.effective(),
               result.summary(), result.residuals)
    click.echo("picard: %s after %d iterations" % (result.status,
                                                   result.iterations))
    return EXIT_OK if result.converged else EXIT_NUMERICAL


@cli.command('blowup')
@config_options
@click.pass_context
def cmd_blowup(ctx, **flags):
    """Estimate the blow-up time and compare with the oracle"""
    config = _make_config(ctx, flags)
    data, params = config.data(), config.params()
    if params.variant == params.FREE:
        raise ConfigError("the free equation has no blow-up")
    result = march.solve(data, params, config.eps, config.T, config.h,
                         amp_threshold=config.threshold)
    effective = config.effective()
    TraceTable.from_result(result, effective).write(
        _out_path(config, 'trace.dat'))
    summary = result.summary()
    p_fit = params.p + params.q if params.sign is None else params.p
    if result.status != march.SolveResult.COMPLETED:
        summary['t0_estimate'] = blowup.estimate_blowup_time(
            result.trace[:, 0], result.amplitude(), p_fit)
    if params.is_special and config.eps > 0:
        curve = blowup.blowup_curve(data, params.sign, config.eps, params.p,
                                    n_samples=config.samples)
        CurveTable.from_curve(curve, effective).write(
            _out_path(config, 'curve.dat'))
        oracle = blowup.predict_first_blowup(data, params.sign, config.eps,
                                             params.p)
        if oracle is not None:
            summary['t0_oracle'] = oracle.t0
            summary['x0_oracle'] = oracle.x0
    write_json(_out_path(config, 'blowup.json'), effective, summary)
    if 't0_estimate' not in summary:
        click.echo("blowup: no blow-up up to T = %s" % _fmt(config.T))
        return EXIT_NUMERICAL
    line = "blowup: t0 = %s" % _fmt(summary['t0_estimate'])
    if 't0_oracle' in summary:
        line += " (oracle %s)" % _fmt(summary['t0_oracle'])
    if result.exploratory:
        line += " [exploratory]"
    click.echo(line)
    return EXIT_OK


@cli.command('sweep')
@config_options
@click.pass_context
def cmd_sweep(ctx, **flags):
    """Lifespan sweep over eps and fit of the scaling exponent"""
    config = _make_config(ctx, flags)
    params = config.params()
    records = lifespan.sweep(
        config.data(), params, config.eps_values(), config.h,
        T_cap=config.T_cap, threshold=config.threshold,
        method=config.method, jobs=config.jobs, tol=config.tol,
        max_iter=config.max_iter)
    effective = config.effective()
    RecordsTable.from_records(records, effective).write(
        _out_path(config, 'records.dat'))
    report = lifespan.fit_exponent(records, params)
    write_json(_out_path(config, 'sweep.json'), effective, report.as_dict())
    click.echo("sweep: slope %s (expected %s), R^2 = %s" % (
               _fmt(report.slope), report.expected_slope,
               _fmt(report.r_squared)))
    return EXIT_NUMERICAL if report.passed is False else EXIT_OK


@cli.command('oracle')
@config_options
@click.pass_context
def cmd_oracle(ctx, **flags):
    """Closed-form blow-up time (and solution value at --t)"""
    config = _make_config(ctx, flags)
    M = config.M
    if M is None:
        params = config.params()
        if not params.is_special:
            raise ConfigError("give --M, or a special model to compute it "
                              "from the data")
        oracle = blowup.predict_first_blowup(config.data(), params.sign,
                                             config.eps, config.p)
        M = 0.0 if oracle is None else oracle.M
    try:
        t0 = blowup.oracle_t0(M, config.eps, config.p)
        summary = {'M': M, 'eps': config.eps, 'p': config.p, 't0': t0}
        line = "t0 = %s" % _fmt(t0)
        if config.t is not None:
            summary['U'] = blowup.oracle_U(M, config.eps, config.p,
                                           config.t)
            line += ", U(%s) = %s" % (_fmt(config.t), _fmt(summary['U']))
    except ValueError as exc_info:
        raise ConfigError(str(exc_info))
    write_json(_out_path(config, 'oracle.json'), config.effective(), summary)
    click.echo(line)
    return EXIT_OK


def main(argv=None):
    """Run the command line interface and return the exit code"""
    logger = logging.getLogger(__name__)
    if argv is None:
        argv = sys.argv[1:]
    try:
        exit_code = cli.main(args=list(argv), prog_name='semiwave',
                             standalone_mode=False)
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_NUMERICAL
    except ConfigError as exc_info:
        click.echo("Error: %s" % exc_info, err=True)
        return EXIT_CONFIG
    except click.ClickException as exc_info:
        exc_info.show()
        return EXIT_CONFIG
    except SemiWaveException as exc_info:
        click.echo("Error: %s" % exc_info, err=True)
        return EXIT_NUMERICAL
    except ValueError as exc_info:
        click.echo("Error: %s" % exc_info, err=True)
        return EXIT_CONFIG
    except (IOError, OSError) as exc_info:
        logger.debug("I/O error", exc_info=True)
        click.echo("I/O error: %s" % exc_info, err=True)
        return EXIT_IO
    if exit_code is None:
        return EXIT_OK
    return int(exit_code)
