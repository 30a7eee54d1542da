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
r"""The :mod:`semiwave` package solves the one-dimensional semilinear wave
equation

.. math::

    u_{tt} - u_{xx} = F(u_t, u_x), \qquad
    u(x, 0) = \varepsilon f(x), \quad u_t(x, 0) = \varepsilon g(x)

with compactly supported data and a derivative nonlinearity, either the
product $F = |u_t|^p |u_x|^q$ or $F = |u_t \pm u_x|^{p-1}(u_t \pm u_x)$.

The subpackages are

    * Initial data and the free (d'Alembert) solution as :mod:`semiwave.data`
    * The characteristic lattice, the Duhamel operators, the Picard
      iteration, and the time-marching solver as :mod:`semiwave.solvers`
    * Blow-up times, lifespan sweeps, and selftests as
      :mod:`semiwave.analysis`
    * Configuration and output files as :mod:`semiwave.io`

Every subpackage exposes a "flat" API through its `__all__` attribute, e.g.

.. code-block:: python

    from semiwave.solvers import CharGrid, op_Lprime

Internally, the flat API (or star imports) must never be used.

The command line interface lives in :mod:`semiwave.cli`.
"""

import semiwave.errors
import semiwave.data
import semiwave.solvers
import semiwave.analysis
import semiwave.io
import semiwave.misc

__all__ = []

__version__ = "0.3.0"
