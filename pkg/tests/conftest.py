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

import pytest

from plugins import glovar
from plugins.functions.graph import Graph, complete_graph, cycle_graph, disjoint_union, make_graph, path_graph


@pytest.fixture(autouse=True, scope="session")
def no_cache():
    # Tests never read or write data/
    glovar.cache = False
    yield


@pytest.fixture
def two_edges() -> Graph:
    return disjoint_union([complete_graph(2), complete_graph(2)])


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c7() -> Graph:
    return cycle_graph(7)


@pytest.fixture
def p5() -> Graph:
    return path_graph(5)


@pytest.fixture
def bowtie() -> Graph:
    return make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
