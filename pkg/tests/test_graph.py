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

from math import ceil

import networkx as nx
import numpy as np
import pytest

from plugins.functions.enumeration import enumerate_unlabeled
from plugins.functions.errors import CapacityError, InputError, InvariantError
from plugins.functions.graph import (Graph, automorphism_count, brute_canonical_form, canonical_form,
                                     clique_number, cluster_of, complement, complete_graph, contains_induced,
                                     cycle_graph, empty_graph, from_graph6, heawood_graph, homogeneous_set_size,
                                     induced_subgraph, is_isomorphic, is_tree, make_graph, named, path_graph,
                                     substitution, to_graph6, to_networkx)
from plugins.functions.templates import cover


def relabel(g: Graph, order) -> Graph:
    position = {v: k for k, v in enumerate(order)}
    return make_graph(g.n, ((position[u], position[v]) for u, v in g.edges()))


def test_graph6_known_strings():
    assert to_graph6(path_graph(3)) == "Bg"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6("?").n == 0
    assert from_graph6(">>graph6<<Bw") == complete_graph(3)


def test_graph6_reads_back_what_it_writes():
    for g in (cycle_graph(7), heawood_graph(), named("KM", 2, 2, 3), empty_graph(5)):
        assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_garbage():
    with pytest.raises(InputError):
        from_graph6("!!")

    with pytest.raises(InputError):
        from_graph6("  ")


def test_make_graph_rejects_bad_edges():
    with pytest.raises(InputError):
        make_graph(3, [(0, 0)])

    with pytest.raises(InputError):
        make_graph(3, [(0, 3)])

    with pytest.raises(CapacityError):
        make_graph(65)


def test_graph_checks_its_adjacency():
    with pytest.raises(InvariantError):
        Graph(2, (2, 0))

    with pytest.raises(InvariantError):
        Graph(2, (1,))

    with pytest.raises(InvariantError):
        Graph(1, (1,))


def test_complement_is_an_involution(c5):
    assert complement(complement(c5)) == c5
    assert complement(c5).edge_count == 5
    assert complement(empty_graph(4)) == complete_graph(4)


def test_induced_subgraph_follows_the_given_order(p5):
    h = induced_subgraph(p5, [4, 3, 2])
    assert h.edges() == [(0, 1), (1, 2)]
    assert induced_subgraph(p5, 0b10101).edge_count == 0

    with pytest.raises(InputError):
        induced_subgraph(p5, [0, 0])

    with pytest.raises(InputError):
        induced_subgraph(p5, [5])


def test_automorphism_counts():
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(path_graph(4)) == 2
    assert automorphism_count(heawood_graph()) == 336


def test_heawood_graph_is_cubic_on_fourteen_vertices():
    g = heawood_graph()
    assert g.n == 14
    assert g.edge_count == 21
    assert set(g.degrees()) == {3}
    assert nx.is_bipartite(to_networkx(g))


def test_named_families():
    assert named("KM", 2, 2, 2).edge_count == 12
    assert named("cluster", 2, 3).edge_count == 4
    assert named("M", 3).edge_count == 3
    assert named("heawood") == heawood_graph()
    assert cluster_of([2, 2]) == make_graph(4, [(0, 1), (2, 3)])

    with pytest.raises(InputError):
        named("X", 1)

    with pytest.raises(InputError):
        named("C", 2)

    with pytest.raises(InputError):
        named("H", 7)


def test_contains_induced(c5):
    assert contains_induced(c5, path_graph(4))
    assert not contains_induced(c5, cycle_graph(4))
    assert not contains_induced(c5, complete_graph(3))
    assert contains_induced(complete_graph(6), complete_graph(4))
    assert contains_induced(c5, empty_graph(0))
    assert not contains_induced(path_graph(3), path_graph(4))


def test_substitution_blows_up_a_vertex():
    g = substitution(path_graph(3), 1, complete_graph(2))
    assert g.n == 4
    assert g.edge_count == 5
    assert is_isomorphic(g, complement(make_graph(4, [(0, 1)])))

    with pytest.raises(InputError):
        substitution(path_graph(3), 3, complete_graph(2))


def test_substitution_keeps_families():
    for n in range(2, 7):
        for v in range(n - 1):
            assert substitution(complete_graph(n - 1), v, complete_graph(2)) == complete_graph(n)

    for g in (path_graph(5), cycle_graph(6), heawood_graph()):
        assert substitution(g, g.n - 1, complete_graph(1)) == g
        assert is_isomorphic(substitution(g, 0, complete_graph(1)), g)

    for parts in ((2, 2), (2, 2, 3), (1, 3, 4)):
        g = empty_graph(len(parts))

        for a in parts:
            g = substitution(g, 0, complete_graph(a))

        assert canonical_form(g) == canonical_form(cluster_of(parts))


def test_homogeneous_set_size():
    assert homogeneous_set_size(cycle_graph(5)) == 2
    assert homogeneous_set_size(heawood_graph()) == 7

    for n in range(1, 8):
        assert homogeneous_set_size(complete_graph(n)) == n
        assert homogeneous_set_size(empty_graph(n)) == n

    for n in range(1, 7):
        for g in enumerate_unlabeled(n):
            assert homogeneous_set_size(complement(g)) == homogeneous_set_size(g)


def test_templates_have_large_homogeneous_sets():
    for n in range(1, 7):
        for g in enumerate_unlabeled(n):
            for s, t in ((1, 1), (2, 1), (1, 2)):
                if cover(g, s, t) is not None:
                    assert homogeneous_set_size(g) >= ceil(n / (s + t))


def test_is_tree():
    assert is_tree(path_graph(5))
    assert is_tree(empty_graph(0))
    assert not is_tree(cycle_graph(4))
    assert not is_tree(empty_graph(2))


def test_clique_number_matches_networkx():
    for n in range(1, 7):
        for g in enumerate_unlabeled(n):
            expected = max(len(c) for c in nx.find_cliques(to_networkx(g)))
            assert clique_number(g) == expected


def test_canonical_form_separates_classes_like_brute_force():
    # Every labeled graph on 5 vertices: equal keys exactly when the brute-force keys agree
    n = 5
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    classes = {}

    for code in range(1 << len(pairs)):
        g = make_graph(n, (pair for k, pair in enumerate(pairs) if code >> k & 1))
        classes.setdefault(brute_canonical_form(g), set()).add(canonical_form(g))

    assert len(classes) == 34
    assert all(len(keys) == 1 for keys in classes.values())
    assert len(set().union(*classes.values())) == 34


def test_canonical_form_ignores_relabeling():
    rng = np.random.default_rng(7)

    for g in (heawood_graph(), cycle_graph(9), named("KM", 2, 3, 4), complement(heawood_graph())):
        for _ in range(5):
            order = [int(v) for v in rng.permutation(g.n)]
            assert canonical_form(relabel(g, order)) == canonical_form(g)

    assert canonical_form(cycle_graph(6)) != canonical_form(named("cluster", 3, 3))


def test_brute_force_oracle_has_a_budget():
    with pytest.raises(CapacityError):
        brute_canonical_form(empty_graph(9))


@pytest.mark.slow
def test_canonical_form_on_seven_vertices_against_brute_force():
    rng = np.random.default_rng(3)
    graphs = list(enumerate_unlabeled(7))

    assert len({brute_canonical_form(g) for g in graphs}) == 1044

    for g in graphs:
        order = [int(v) for v in rng.permutation(7)]
        assert canonical_form(relabel(g, order)) == canonical_form(g)
