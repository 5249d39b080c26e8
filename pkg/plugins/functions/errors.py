# PARABOLA - Betti tables of edge ideals and templates of graphs
# Copyright (C) 2019 SCP-079 <https://scp-079.org>
#
# This file is part of PARABOLA.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


class ParabolaError(Exception):
    # Base of every error raised on purpose
    exit_code: int = 1
    kind: str = "error"


class InputError(ParabolaError):
    # Invalid parameters, malformed graph6, vertex out of range
    exit_code = 2
    kind = "input"


class CapacityError(ParabolaError):
    # A configured budget would be exceeded
    exit_code = 1
    kind = "capacity"


class InvariantError(ParabolaError):
    # A structure is not what it claims to be
    exit_code = 1
    kind = "invariant"


class RegularityError(ParabolaError):
    # The zero ideal has no regularity
    exit_code = 2
    kind = "regularity"
