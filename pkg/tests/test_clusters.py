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

from plugins.functions.clusters import (ClusterSpec, DyckPath, catalan, catalan_sum_bound, cluster_graph,
                                        cluster_to_dyck, dyck_paths, dyck_to_cluster, make_spec, parabolic_clusters,
                                        row_pattern_graph, row_pattern_parameters, row_pattern_report,
                                        special_graph, special_lemma_report)
from plugins.functions.enumeration import enumerate_trees
from plugins.functions.errors import CapacityError, InputError
from plugins.functions.graph import complement, complete_multipartite, cycle_graph, empty_graph, path_graph
from plugins.functions.homology import FieldSpec

GF2 = FieldSpec(2)


def first_tree(b: int):
    return empty_graph(0) if b == 0 else next(enumerate_trees(b))


def test_small_cluster_lists():
    assert [s.parts for s in parabolic_clusters(2)] == [(2, 2)]
    assert [s.parts for s in parabolic_clusters(3)] == [(2, 2, 2), (2, 2, 3)]
    assert [s.label() for s in parabolic_clusters(4)] == [
        "c(2,2,2,2)", "c(2,2,2,3)", "c(2,2,2,4)", "c(2,2,3,3)", "c(2,2,3,4)"
    ]


@pytest.mark.parametrize("k", range(2, 9))
def test_clusters_are_counted_by_catalan(k):
    specs = parabolic_clusters(k)
    assert len(specs) == catalan(k - 1)
    assert len(set(specs)) == len(specs)
    assert all(spec.is_parabolic() for spec in specs)


def test_cluster_spec_checks():
    assert make_spec([3, 2, 2]).parts == (2, 2, 3)
    assert not make_spec([3, 3]).is_parabolic()
    assert not make_spec([2, 2, 4]).is_parabolic()
    assert make_spec([2, 2, 3]).order == 7

    with pytest.raises(InputError):
        ClusterSpec((3, 2))

    with pytest.raises(InputError):
        make_spec([0, 2])

    with pytest.raises(InputError):
        parabolic_clusters(1)


def test_dyck_paths_of_clusters():
    assert cluster_to_dyck(make_spec([2, 2])).steps == "RU"
    assert cluster_to_dyck(make_spec([2, 2, 2, 2])).steps == "RRRUUU"
    assert cluster_to_dyck(make_spec([2, 2, 3, 4])).steps == "RURURU"
    assert DyckPath("RURU").heights() == [0, 1, 2]
    assert cluster_to_dyck(make_spec([2, 2, 3])).heights() == [0, 1, 2]

    with pytest.raises(InputError):
        cluster_to_dyck(make_spec([3, 3]))


@pytest.mark.parametrize("k", range(2, 9))
def test_bijection_with_dyck_paths(k):
    specs = parabolic_clusters(k)
    paths = {cluster_to_dyck(spec).steps for spec in specs}

    assert len(paths) == len(specs)
    assert paths == {path.steps for path in dyck_paths(k - 1)}
    assert all(dyck_to_cluster(cluster_to_dyck(spec)) == spec for spec in specs)


def test_dyck_path_checks():
    assert len(dyck_paths(4)) == 14
    assert dyck_paths(0) == [DyckPath("")]

    for steps in ("UR", "RRU", "RXU"):
        with pytest.raises(InputError):
            DyckPath(steps)

    with pytest.raises(InputError):
        dyck_to_cluster(DyckPath(""))


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert all(catalan_sum_bound(d) for d in range(13))

    with pytest.raises(InputError):
        catalan(-1)

    with pytest.raises(CapacityError):
        catalan(31)


def test_cluster_graphs():
    g = cluster_graph(make_spec([2, 2, 3]))
    assert (g.n, g.edge_count) == (7, 5)

    for k in range(2, 6):
        for spec in parabolic_clusters(k):
            assert cluster_graph(spec) == complement(complete_multipartite(spec.parts))


def test_special_graph_checks():
    g = special_graph(3, empty_graph(0), 0)
    assert (g.n, g.edge_count) == (3, 0)
    assert special_graph(4, path_graph(2), 1).n == 8

    with pytest.raises(InputError):
        special_graph(2, empty_graph(0), 0)

    with pytest.raises(InputError):
        special_graph(4, cycle_graph(3), 0)

    with pytest.raises(InputError):
        special_graph(4, empty_graph(0), -1)

    with pytest.raises(CapacityError):
        special_graph(21, empty_graph(0), 0)


def test_special_lemma():
    # Homology sits in degree c + 1 from a + 2c vertices on, once the cycle is not a triangle
    for a in (3, 4, 5):
        for b in range(4):
            for c in range(2):
                report = special_lemma_report(a, first_tree(b), c, GF2)
                assert report.claim_two
                assert report.claim_three
                assert report.claim_one == (a >= 4)


def test_special_lemma_witnesses():
    report = special_lemma_report(4, path_graph(2), 1, GF2)
    assert sorted(report.witnesses) == [6, 7, 8]
    assert report.to_json()["claim_one"] is True


def test_row_pattern_parameters():
    assert row_pattern_parameters(3, 3, 7) == (4, 3, 0)
    assert row_pattern_parameters(4, 5, 6) == (4, 1, 1)

    with pytest.raises(InputError):
        row_pattern_parameters(2, 3, 7)

    with pytest.raises(InputError):
        row_pattern_parameters(4, 3, 7)

    with pytest.raises(InputError):
        row_pattern_graph(3, 3, 7, path_graph(2))


def test_row_pattern_with_a_square():
    report = row_pattern_report(3, 3, 7, path_graph(3), GF2)
    assert report.columns == (1, 2, 3, 4)
    assert report.predicted == (1, 4)
    assert report.matches_prediction
    assert report.claim_one
    assert report.rows_after_zero
    assert not report.rows_before_zero


def test_row_pattern_with_a_matching():
    report = row_pattern_report(4, 5, 6, path_graph(1), GF2)
    assert report.columns == (2, 3)
    assert report.predicted == (2, 3)
    assert report.matches_prediction
    assert report.rows_after_zero


def test_row_pattern_with_a_triangle_is_empty():
    report = row_pattern_report(3, 2, 7, first_tree(4), GF2)
    assert report.columns == ()
    assert not report.claim_one
    assert report.claim_two
    assert not report.matches_prediction


def test_row_pattern_on_six_vertices_is_empty():
    report = row_pattern_report(3, 2, 6, path_graph(3), GF2)
    assert report.predicted == (0, 3)
    assert report.columns == ()
    assert not report.claim_one
    assert report.claim_two
    assert report.rows_after_zero


def all_trees(b: int):
    return [empty_graph(0)] if b == 0 else list(enumerate_trees(b))


def test_row_pattern_follows_the_special_lemma():
    checked = 0

    for r, i, n in ((3, 3, 5), (3, 3, 7), (3, 4, 6), (3, 4, 7), (4, 5, 5), (4, 5, 7), (4, 6, 7)):
        a, b, c = row_pattern_parameters(r, i, n)

        for tree in all_trees(b):
            lemma = special_lemma_report(a, tree, c, GF2)

            if lemma.claim_one and lemma.claim_two:
                assert row_pattern_report(r, i, n, tree, GF2).matches_prediction
                checked += 1

    assert checked >= 7
