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

from plugins.functions.clusters import cluster_graph, parabolic_clusters
from plugins.functions.enumeration import enumerate_unlabeled
from plugins.functions.errors import CapacityError, InputError
from plugins.functions.graph import (canonical_form, complement, complete_graph, contains_induced,
                                     disjoint_union, empty_graph, five_vertex_graph, path_graph)
from plugins.functions.templates import (CoverCertificate, Verdict, coloring_number, cover, is_critical_desk,
                                         is_template, level_pairs, p_family, residue_family, verify_certificate,
                                         witness_check)


def keys(graphs):
    return {canonical_form(g) for g in graphs}


def test_cover_certificates(p5):
    assert cover(p5, 2, 0) is None

    cert = cover(p5, 2, 1)
    assert cert is not None
    assert verify_certificate(p5, cert)
    assert len(cert.to_json()["cliques"]) == 2


def test_certificates_are_checked_independently():
    assert not verify_certificate(path_graph(3), CoverCertificate(1, 0, (0, 0, 0)))
    assert not verify_certificate(path_graph(3), CoverCertificate(0, 1, (0, 0, 0)))
    assert not verify_certificate(path_graph(3), CoverCertificate(1, 1, (0, 2, 1)))
    assert verify_certificate(path_graph(3), CoverCertificate(1, 1, (0, 0, 1)))


def test_cover_edge_cases(c5):
    assert cover(empty_graph(0), 0, 0) is not None
    assert cover(c5, 0, 0) is None
    assert is_template(c5, 0, 3)
    assert not is_template(c5, 0, 2)

    with pytest.raises(InputError):
        cover(c5, -1, 2)


def test_every_cover_found_is_valid():
    for n in range(1, 6):
        for g in enumerate_unlabeled(n):
            for s in range(3):
                for t in range(3):
                    cert = cover(g, s, t)

                    if cert is not None:
                        assert verify_certificate(g, cert)


def test_templates_are_monotone():
    for n in range(1, 7):
        for g in enumerate_unlabeled(n):
            for s in range(3):
                for t in range(3 - s):
                    if is_template(g, s, t):
                        assert is_template(g, s + 1, t)
                        assert is_template(g, s, t + 1)


def test_complement_swaps_the_pair():
    for n in range(1, 7):
        for g in enumerate_unlabeled(n):
            for s in range(3):
                for t in range(3 - s + 1):
                    assert is_template(g, s, t) == is_template(complement(g), t, s)


def test_level_pairs():
    assert level_pairs(2) == [(2, 0), (1, 1), (0, 2)]
    assert level_pairs(0) == [(0, 0)]


def test_coloring_numbers(c5, c7):
    five = coloring_number(c5)
    assert five.number == 3
    assert set(five.witnesses) == {(2, 0), (1, 1), (0, 2)}

    seven = coloring_number(c7)
    assert seven.number == 4
    assert seven.witnesses == ((3, 0), (2, 1))
    assert witness_check(c7, [(2, 1), (3, 0)])

    assert coloring_number(empty_graph(0)).number == 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_parabolic_clusters_need_k_plus_one(k):
    for spec in parabolic_clusters(k):
        result = coloring_number(cluster_graph(spec))
        assert result.number == k + 1
        assert result.witnesses == ((k - 1, 1),)


@pytest.mark.slow
def test_parabolic_five_clusters_need_six():
    for spec in parabolic_clusters(5):
        assert witness_check(cluster_graph(spec), [(4, 1)])


def test_residues_of_a_path(p5):
    family = residue_family(p5, 1, 0)
    assert keys(family.members) == keys([path_graph(3), disjoint_union([complete_graph(2), empty_graph(1)])])
    assert [m.edge_count for m in family.members] == [1, 2]


def test_residues_of_the_seven_cycle(c7):
    two_cliques = residue_family(c7, 2, 0).members
    assert keys(two_cliques) == keys([path_graph(3), disjoint_union([complete_graph(2), empty_graph(1)])])
    assert keys(residue_family(c7, 1, 1).members) == keys([empty_graph(2)])
    assert keys(residue_family(c7, 0, 2).members) == keys([empty_graph(1)])


def test_residue_of_a_template_is_the_empty_graph(c5):
    members = residue_family(c5, 2, 1).members
    assert len(members) == 1
    assert members[0].n == 0


def test_residue_without_classes_is_the_graph_itself(c5):
    assert keys(residue_family(c5, 0, 0).members) == keys([c5])


def test_residue_families_are_antichains(c7, bowtie):
    for h in (c7, bowtie, five_vertex_graph(2)):
        for s, t in ((1, 0), (0, 1), (1, 1)):
            members = residue_family(h, s, t).members

            for a in members:
                assert not any(b is not a and contains_induced(a, b) for b in members)


def test_residue_budget():
    with pytest.raises(CapacityError):
        residue_family(empty_graph(13), 1, 0)

    with pytest.raises(InputError):
        residue_family(empty_graph(3), -1, 0)


def test_free_families():
    for n in (4, 5):
        assert keys(p_family(n, [complete_graph(2)])) == keys([empty_graph(n)])
        assert keys(p_family(n, [empty_graph(2)])) == keys([complete_graph(n)])

    assert p_family(4, [empty_graph(0)]) == []
    assert len(p_family(5, [path_graph(3)])) == 7


def test_two_cliques_off_the_seven_cycle_leave_two_graphs(c7):
    family = residue_family(c7, 2, 0).members
    assert keys(p_family(7, family)) == keys([complete_graph(7), empty_graph(7)])


def test_sampled_free_family_is_free_and_deduplicated():
    graphs = p_family(6, [complete_graph(3)], sample=100, seed=4)
    assert all(not contains_induced(g, complete_graph(3)) for g in graphs)
    assert len(keys(graphs)) == len(graphs)


def test_five_cycle_is_not_critical(c5):
    evidence = is_critical_desk(c5, 6)
    assert evidence.verdict is Verdict.NOT_CRITICAL
    assert evidence.chi == 3
    assert evidence.horizon == (4, 5, 6)
    assert [pair.counts for pair in evidence.pairs][0] == {4: 5, 5: 7, 6: 11}
    assert evidence.to_json()["kind"] == "desk verdict"


def test_seven_cycle_is_critical(c7):
    evidence = is_critical_desk(c7, 7)
    assert evidence.verdict is Verdict.CRITICAL
    assert [(pair.s, pair.t) for pair in evidence.pairs] == [(2, 0), (1, 1), (0, 2)]
    assert evidence.pairs[0].labels[7] == ("E", "K")
    assert evidence.pairs[1].labels[7] == ("K",)
    assert evidence.pairs[2].counts[7] == 0


@pytest.mark.slow
def test_cycle_verdicts_up_to_eight_vertices(c5, c7):
    five = is_critical_desk(c5, 8)
    assert five.verdict is Verdict.NOT_CRITICAL
    assert five.horizon == (5, 6, 7, 8)

    seven = is_critical_desk(c7, 8)
    assert seven.verdict is Verdict.CRITICAL
    assert seven.horizon == (6, 7, 8)


def test_criticality_budget(c5):
    with pytest.raises(CapacityError):
        is_critical_desk(c5, 10)

    with pytest.raises(InputError):
        is_critical_desk(c5, 2)


@pytest.mark.slow
@pytest.mark.parametrize("k, verdict", [
    (1, Verdict.NOT_CRITICAL),
    (2, Verdict.CRITICAL),
    (3, Verdict.NOT_CRITICAL),
    (4, Verdict.CRITICAL),
    (5, Verdict.CRITICAL),
    (6, Verdict.NOT_CRITICAL)
])
def test_five_vertex_verdicts(k, verdict):
    assert is_critical_desk(five_vertex_graph(k), 8).verdict is verdict


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4])
def test_parabolic_clusters_are_critical(k):
    for spec in parabolic_clusters(k):
        assert is_critical_desk(cluster_graph(spec), 8).verdict is Verdict.CRITICAL
