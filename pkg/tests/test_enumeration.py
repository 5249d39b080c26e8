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

from plugins.functions.enumeration import (GRAPH_COUNTS, TREE_COUNTS, GraphStream, enumerate_partition,
                                           enumerate_trees, enumerate_unlabeled, labeled_count, sample_graphs)
from plugins.functions.errors import CapacityError, InputError
from plugins.functions.file import write_graph6_file
from plugins.functions.graph import (brute_canonical_form, canonical_form, contains_induced, is_connected, is_tree,
                                     matching_graph)


@pytest.mark.parametrize("n", range(1, 7))
def test_unlabeled_counts(n):
    assert sum(1 for _ in enumerate_unlabeled(n)) == GRAPH_COUNTS[n]


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_unlabeled_counts_on_larger_orders(n):
    graphs = list(enumerate_unlabeled(n))
    assert len(graphs) == GRAPH_COUNTS[n]
    assert len({canonical_form(g) for g in graphs}) == GRAPH_COUNTS[n]


def test_classes_are_pairwise_non_isomorphic():
    for n in range(1, 7):
        keys = [brute_canonical_form(g) for g in enumerate_unlabeled(n)]
        assert len(set(keys)) == len(keys)


def test_labeled_counts_add_up():
    assert sum(labeled_count(g) for g in enumerate_unlabeled(4)) == 2 ** 6
    assert sum(labeled_count(g) for g in enumerate_unlabeled(5)) == 2 ** 10


def test_partitions_cover_the_level():
    whole = {canonical_form(g) for g in enumerate_unlabeled(5)}
    parts = [[canonical_form(g) for g in enumerate_partition(5, part, 3)] for part in range(3)]

    assert sum(len(p) for p in parts) == len(whole)
    assert set().union(*map(set, parts)) == whole

    with pytest.raises(InputError):
        list(enumerate_partition(5, 3, 3))


def test_enumeration_budget():
    with pytest.raises(CapacityError):
        list(enumerate_unlabeled(10))

    with pytest.raises(CapacityError):
        list(enumerate_unlabeled(0))


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == TREE_COUNTS[n]
    assert all(is_tree(t) for t in trees)
    assert len({canonical_form(t) for t in trees}) == len(trees)


def test_tree_budget():
    with pytest.raises(CapacityError):
        list(enumerate_trees(0))


def test_samples_are_reproducible():
    first = list(sample_graphs(9, 20, 3))
    second = list(sample_graphs(9, 20, 3))

    assert first == second
    assert all(g.n == 9 for g in first)
    assert list(sample_graphs(4, 0, 1)) == []

    with pytest.raises(InputError):
        list(sample_graphs(4, -1, 1))

    with pytest.raises(CapacityError):
        list(sample_graphs(65, 1, 1))


def test_stream_filters_by_predicate():
    assert sum(1 for _ in GraphStream(4, predicate=is_connected)) == 6
    assert sum(1 for _ in GraphStream(6, source="random", count=15, seed=2)) == 15

    with pytest.raises(InputError):
        list(GraphStream(4, source="files"))


def test_stream_rereads_a_graph6_file(tmp_path):
    path = str(tmp_path / "mixed.g6")
    graphs = list(enumerate_unlabeled(4)) + list(enumerate_unlabeled(3))
    write_graph6_file(path, graphs)

    assert list(GraphStream(4, source="file", path=path)) == list(enumerate_unlabeled(4))
    assert list(GraphStream(3, source="file", path=path, predicate=is_connected)) == [
        g for g in enumerate_unlabeled(3) if is_connected(g)
    ]
    assert list(GraphStream(5, source="file", path=path)) == []

    with pytest.raises(InputError):
        list(GraphStream(4, source="file"))


def test_samples_have_half_the_edges():
    graphs = list(sample_graphs(10, 400, 0))
    mean = sum(g.edge_count for g in graphs) / len(graphs)
    assert abs(mean - 22.5) <= 1


def test_samples_almost_always_hold_two_independent_edges():
    graphs = list(sample_graphs(12, 200, 0))
    hits = sum(1 for g in graphs if contains_induced(g, matching_graph(2)))
    assert hits >= 0.99 * len(graphs)
