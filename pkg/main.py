#!/usr/bin/env python3
# -*- coding: utf-8 -*-

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

import logging

from plugins import glovar
from plugins.handlers.command import cli

# Enable logging
logger = logging.getLogger(__name__)

# Start
if __name__ == "__main__":
    cli(prog_name=glovar.sender.lower())
