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
"""Initial data and the free wave solution"""

import semiwave.data.initial_data
import semiwave.data.freewave

from .initial_data import *
from .freewave import *

from semiwave._flat_api_tools import _combine_all

__all__ = _combine_all(
    'semiwave.data.initial_data',
    'semiwave.data.freewave')
