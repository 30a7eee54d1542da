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
"""Exceptions raised by semiwave.

All errors concerning grids, numerical breakdown of the solvers, estimation
of blow-up times and lifespan exponents, configuration and file parsing derive
from :class:`SemiWaveException`. Violations of the documented preconditions of
an operation (e.g. a support radius below one) raise a plain
:exc:`ValueError` instead.
"""

__all__ = [
    'SemiWaveException', 'GridError', 'NumericalBreakdown',
    'BlowupIndicated', 'BlowupDetected', 'EstimationError',
    'InsufficientDataError', 'ConfigError', 'TableParserError']

__private__ = []


class SemiWaveException(Exception):
    """Base class for all semiwave errors"""
    pass


class GridError(SemiWaveException):
    """Raised if a grid function does not fit its :class:`CharGrid`, or if the
    grid does not cover the light cone of the data"""
    pass


class NumericalBreakdown(SemiWaveException):
    """Base class for non-finite values appearing during a solve"""
    pass


class BlowupIndicated(NumericalBreakdown):
    """Raised by the Picard iteration if the nonlinear source becomes
    non-finite.

    Args:
        node (tuple): ``(i, n)`` index of the first offending lattice node
            (spatial index, time index)
        history (list): residual history up to the failing iteration
    """

    def __init__(self, node, history=None):
        self.node = tuple(node)
        self.history = list(history or [])
        super(BlowupIndicated, self).__init__(
            "non-finite nonlinear source at node (i, n) = (%d, %d)" % self.node)


class BlowupDetected(NumericalBreakdown):
    """Raised by the time-marching solver if a field value becomes
    non-finite.

    Args:
        t (float): time of the level on which the non-finite value appeared
        node (int): spatial index of the offending node
    """

    def __init__(self, t, node):
        self.t = float(t)
        self.node = int(node)
        super(BlowupDetected, self).__init__(
            "non-finite field value at t = %r (node %d)" % (self.t, self.node))


class EstimationError(SemiWaveException):
    """Raised if a blow-up time cannot be estimated from an amplitude
    trace"""
    pass


class InsufficientDataError(SemiWaveException):
    """Raised if a lifespan fit is requested from fewer than three uncensored
    records"""
    pass


class ConfigError(SemiWaveException):
    """Raised for invalid run configurations"""
    pass


class TableParserError(SemiWaveException):
    """Exception raised if a trace, records, or curve file is malformed"""
    pass
