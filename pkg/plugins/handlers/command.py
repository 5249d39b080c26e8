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
from typing import Any, List, Optional

import click

from .. import glovar
from ..functions.betti import HEAWOOD_ROWS, BettiTable, betti_table, hochster_entry, regularity, table_diff
from ..functions.clusters import (cluster_to_dyck, parabolic_clusters, row_pattern_parameters, row_pattern_report,
                                  special_lemma_report)
from ..functions.decorators import guarded
from ..functions.enumeration import enumerate_partition, enumerate_trees, enumerate_unlabeled, sample_graphs
from ..functions.errors import InputError
from ..functions.etc import format_pairs, fraction_text, get_ints, lang, to_csv, to_json
from ..functions.experiments import (CENSUS_HEADER, TRAJECTORY_HEADER, beta25_census, census, greedy_bound,
                                     greedy_induced_matching, homogeneous_census, matching_average,
                                     maximum_induced_matching, metagraph_connectivity, ratio_trajectory,
                                     regularity_census, template_cluster_containment, template_growth, tree_growth)
from ..functions.file import write_graph6_file
from ..functions.graph import Graph, complement, empty_graph, from_graph6, heawood_graph, named, to_graph6
from ..functions.homology import FieldSpec, euler_characteristic, f_vector, independence_complex, reduced_homology
from ..functions.templates import coloring_number, cover, is_critical_desk, residue_family

# Enable logging
logger = logging.getLogger(__name__)

GROWTH_HEADER = ["n", "count", "log2_count", "bound"]


def print_version(ctx: click.Context, _, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return

    click.echo(glovar.copyright_text, nl=False)
    ctx.exit()


def parse_graph(text: str) -> Graph:
    # graph6, or a named family as "C:7", "KM:2,2,2", "heawood:"
    text = text.strip()

    if ":" not in text:
        return from_graph6(text)

    family, _, params = text.partition(":")
    values = get_ints(params)

    if values is None:
        raise InputError(f"Bad family parameters {params!r}")

    return named(family, *values)


def read_graphs(graph6: Optional[str]) -> List[Graph]:
    # The positional graph, or one graph per line of standard input
    if graph6:
        return [parse_graph(graph6)]

    graphs = [parse_graph(line) for line in click.get_text_stream("stdin") if line.strip()]

    if not graphs:
        raise InputError("No graph6 input given")

    return graphs


def emit(data: Any, text: str) -> None:
    # JSON when asked for, the text form otherwise
    ctx = click.get_current_context()

    if ctx.obj["json"]:
        click.echo(to_json(data))
    elif text:
        click.echo(text)


def report_text(data: dict) -> str:
    return "\n".join(f"{key}{lang('colon')}{value}" for key, value in sorted(data.items()))


def table_text(table: BettiTable) -> str:
    lines = [f"{lang('field')}{lang('colon')}GF({table.field.p})"]

    if not table.entries:
        lines.append(f"{lang('note')}{lang('colon')}{lang('empty_table')}")
        return "\n".join(lines)

    lines.append(table.render())
    lines.extend(f"beta({i},{j}) = {v}  ({lang('row')} {j - i}, {lang('column')} {i})"
                 for (i, j), v in sorted(table.entries.items()))

    return "\n".join(lines)


def tree_by_index(b: int, index: int) -> Graph:
    # A tree on b vertices by its position in the enumeration order
    if b == 0 and index == 0:
        return empty_graph(0)

    trees = list(enumerate_trees(b)) if b > 0 else []

    if not 0 <= index < len(trees):
        raise InputError(f"There are {len(trees)} trees on {b} vertices, index {index} does not exist")

    return trees[index]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--p", "prime", type=int, default=lambda: glovar.prime, help="Prime of the coefficient field.")
@click.option("--jobs", type=int, envvar="PARABOLA_JOBS", default=lambda: glovar.jobs, help="Worker processes.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
@click.option("--error-json", is_flag=True, help="Print errors as JSON.")
@click.option("--progress", "show_progress", is_flag=True, help="Progress bars on standard error.")
@click.option("--version", is_flag=True, expose_value=False, is_eager=True, callback=print_version,
              help="Show the version and exit.")
@click.pass_context
@guarded
def cli(ctx: click.Context, prime: int, jobs: int, as_json: bool, error_json: bool, show_progress: bool) -> None:
    """Betti tables of edge ideals, templates and census experiments on small graphs."""
    ctx.obj = {"error_json": error_json, "json": as_json, "jobs": jobs, "progress": show_progress}

    if jobs == 0:
        raise InputError("--jobs must not be 0")

    ctx.obj["field"] = FieldSpec(prime)


@cli.command("betti")
@click.argument("graph6", required=False)
@click.option("--entry", nargs=2, type=int, default=None, help="Only beta_{i,j}, given as I J.")
@click.pass_context
@guarded
def betti(ctx: click.Context, graph6: Optional[str], entry: Optional[tuple]) -> None:
    """Betti table of the edge ideal."""
    f, jobs = ctx.obj["field"], ctx.obj["jobs"]

    for g in read_graphs(graph6):
        if entry:
            i, j = entry
            value = hochster_entry(g, i, j, f, jobs)
            emit({"field": f.p, "i": i, "j": j, "row": j - i, "column": i, "value": value},
                 f"beta({i},{j}) = {value}  ({lang('row')} {j - i}, {lang('column')} {i})")
        else:
            table = betti_table(g, f, jobs)
            emit(table.to_json(), table_text(table))


@cli.command("reg")
@click.argument("graph6", required=False)
@click.pass_context
@guarded
def reg(ctx: click.Context, graph6: Optional[str]) -> None:
    """Regularity of the edge ideal."""
    for g in read_graphs(graph6):
        value = regularity(g, ctx.obj["field"], ctx.obj["jobs"])
        emit({"regularity": value}, f"{lang('regularity')}{lang('colon')}{value}")


@cli.command("cover")
@click.argument("graph6", required=False)
@click.option("--s", "s", type=int, required=True, help="Cliques.")
@click.option("--t", "t", type=int, required=True, help="Independent sets.")
@guarded
def cover_command(graph6: Optional[str], s: int, t: int) -> None:
    """Cover by s cliques and t independent sets."""
    for g in read_graphs(graph6):
        cert = cover(g, s, t)

        if cert is None:
            emit({"s": s, "t": t, "cover": None}, lang("cover_none"))
            continue

        data = cert.to_json()
        text = (f"cliques{lang('colon')}{' '.join(str(c) for c in data['cliques'])}\n"
                f"independent{lang('colon')}{' '.join(str(c) for c in data['independent'])}")
        emit({"s": s, "t": t, "cover": data}, text)


@cli.command("chic")
@click.argument("graph6", required=False)
@guarded
def chic(graph6: Optional[str]) -> None:
    """Coloring number and witnessing pairs."""
    for g in read_graphs(graph6):
        result = coloring_number(g)
        emit({"chi": result.number, "witnessing": [list(pair) for pair in result.witnesses]},
             f"{result.number}; {lang('witnessing')}: {format_pairs(result.witnesses)}")


@cli.command("residue")
@click.argument("graph6", required=False)
@click.option("--s", "s", type=int, required=True, help="Cliques.")
@click.option("--t", "t", type=int, required=True, help="Independent sets.")
@guarded
def residue(graph6: Optional[str], s: int, t: int) -> None:
    """Minimal residue family F(h,s,t), one graph6 per line."""
    for h in read_graphs(graph6):
        family = residue_family(h, s, t)
        emit(family.to_json(), "\n".join(to_graph6(m) for m in family.members))


@cli.command("critical")
@click.argument("graph6", required=False)
@click.option("--nmax", type=int, default=8, show_default=True, help="Largest order looked at.")
@click.pass_context
@guarded
def critical(ctx: click.Context, graph6: Optional[str], nmax: int) -> None:
    """Finite-horizon criticality verdict."""
    for h in read_graphs(graph6):
        evidence = is_critical_desk(h, nmax, ctx.obj["jobs"])
        lines = [f"{evidence.verdict.value} ({lang('desk_verdict')}, chi_c = {evidence.chi})"]
        lines.extend(f"({pair.s},{pair.t}): " + " ".join(f"n={n}:{c}" for n, c in sorted(pair.counts.items()))
                     for pair in evidence.pairs)

        if evidence.note:
            lines.append(f"{lang('note')}{lang('colon')}{evidence.note}")

        emit(evidence.to_json(), "\n".join(lines))


@cli.command("clusters")
@click.option("--k", "k", type=int, required=True, help="Number of cliques.")
@guarded
def clusters(k: int) -> None:
    """Parabolic k-clusters with their Dyck paths."""
    specs = parabolic_clusters(k)
    paths = [cluster_to_dyck(spec).steps for spec in specs]
    emit([{"parts": spec.to_json(), "dyck": path} for spec, path in zip(specs, paths)],
         "\n".join(f"{spec.label()}  {path}" for spec, path in zip(specs, paths)))


@cli.command("census")
@click.option("--r", "r", type=int, required=True, help="Row.")
@click.option("--offset", "p", type=int, default=0, show_default=True, help="Offset inside the row.")
@click.option("--nmin", type=int, default=1, show_default=True)
@click.option("--nmax", type=int, required=True)
@click.option("--all-clusters", is_flag=True, help="Intersect over every cluster of the order.")
@click.option("--weighted", is_flag=True, help="Also count labeled graphs.")
@click.option("--sample", type=int, default=0, help="Labeled random graphs per n instead of every class.")
@click.option("--seed", type=int, default=lambda: glovar.seed)
@click.option("--trajectory", is_flag=True, help="Long-format ratios instead of rows.")
@click.pass_context
@guarded
def census_command(ctx: click.Context, r: int, p: int, nmin: int, nmax: int, all_clusters: bool, weighted: bool,
                   sample: int, seed: int, trajectory: bool) -> None:
    """Census of B(n), H(n) and T(n)."""
    rows = census(r, p, range(nmin, nmax + 1), ctx.obj["field"], ctx.obj["jobs"], all_clusters, weighted,
                  sample, seed, ctx.obj["progress"])

    if trajectory:
        lines = ratio_trajectory(rows)
        emit([dict(zip(TRAJECTORY_HEADER, line)) for line in lines], to_csv(TRAJECTORY_HEADER, lines).rstrip("\n"))
    else:
        source = lang("sampled") if sample else lang("exhaustive")
        text = f"# {source}\n" + to_csv(CENSUS_HEADER, [row.csv_row() for row in rows]).rstrip("\n")
        emit([row.to_json() for row in rows], text)


@cli.command("regcensus")
@click.option("--r", "r", type=int, required=True)
@click.option("--offset", "p", type=int, default=0, show_default=True, help="Offset inside the row.")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
@guarded
def regcensus(ctx: click.Context, r: int, p: int, n: int) -> None:
    """Regularity histogram over the graphs with a vanishing parabolic entry."""
    data = regularity_census(r, p, n, ctx.obj["field"], ctx.obj["jobs"]).to_json()
    emit(data, report_text(data))


@cli.command("metagraph")
@click.option("--n", "n", type=int, required=True)
@click.option("--s", "s", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@guarded
def metagraph_command(n: int, s: int, t: int) -> None:
    """Components of the (s,t)-templates in the edge-addition graph."""
    data = metagraph_connectivity(n, s, t).to_json()
    emit(data, report_text(data))


@cli.command("matching")
@click.argument("graph6", required=False)
@click.option("--k", "k", type=int, default=None, help="Average over graphs with beta_{k-2,k} = 0.")
@click.option("--n", "n", type=int, default=None, help="Order for the average.")
@click.pass_context
@guarded
def matching(ctx: click.Context, graph6: Optional[str], k: Optional[int], n: Optional[int]) -> None:
    """Greedy and maximum induced matchings, or their exact average."""
    if k is not None or n is not None:
        if k is None or n is None:
            raise InputError("Averages need both --k and --n")

        data = matching_average(k, n, ctx.obj["field"], ctx.obj["jobs"]).to_json()
        emit(data, report_text(data))
        return

    for g in read_graphs(graph6):
        greedy = greedy_induced_matching(g)
        maximum = maximum_induced_matching(g)
        bound = greedy_bound(g)
        text = (f"{lang('greedy')}{lang('colon')}{len(greedy)} {format_pairs(greedy)}\n"
                f"{lang('maximum')}{lang('colon')}{len(maximum)} {format_pairs(maximum)}\n"
                f"e/(2d^2){lang('colon')}{fraction_text(bound)}")
        emit({"greedy": [list(e) for e in greedy], "maximum": [list(e) for e in maximum], "bound": str(bound)}, text)


@cli.command("homology")
@click.argument("graph6", required=False)
@click.pass_context
@guarded
def homology(ctx: click.Context, graph6: Optional[str]) -> None:
    """f-vector and reduced homology of the independence complex."""
    f = ctx.obj["field"]

    for g in read_graphs(graph6):
        c = independence_complex(g)
        profile = reduced_homology(c, f)
        data = {
            "field": f.p,
            "f_vector": f_vector(c),
            "euler": euler_characteristic(c),
            "homology": profile.to_json()
        }
        text = (f"f-vector{lang('colon')}{' '.join(str(x) for x in data['f_vector'])}\n"
                f"euler{lang('colon')}{data['euler']}\n"
                f"homology{lang('colon')}" + " ".join(f"H~{i}={v}" for i, v in sorted(profile.dims.items())))
        emit(data, text)


@cli.command("gen")
@click.option("--n", "n", type=int, required=True)
@click.option("--trees", is_flag=True, help="Trees instead of all graphs.")
@click.option("--sample", type=int, default=0, help="Labeled random graphs instead of every class.")
@click.option("--seed", type=int, default=lambda: glovar.seed)
@click.option("--part", type=int, default=0, show_default=True)
@click.option("--parts", type=int, default=1, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None, help="Write to a file.")
@click.pass_context
@guarded
def gen(ctx: click.Context, n: int, trees: bool, sample: int, seed: int, part: int, parts: int,
        output: Optional[str]) -> None:
    """Graphs on n vertices as graph6 lines."""
    if trees:
        graphs = list(enumerate_trees(n))
    elif sample:
        graphs = list(sample_graphs(n, sample, seed))
    elif parts > 1:
        graphs = list(enumerate_partition(n, part, parts))
    else:
        graphs = list(enumerate_unlabeled(n, ctx.obj["jobs"]))

    if output:
        count = write_graph6_file(output, graphs)
        emit({"output": output, "count": count}, f"{count} -> {output}")
    else:
        codes = [to_graph6(g) for g in graphs]
        emit(codes, "\n".join(codes))


@cli.command("heawood-demo")
@click.pass_context
@guarded
def heawood_demo(ctx: click.Context) -> None:
    """Betti table of the complement of the Heawood graph against the known rows."""
    table = betti_table(complement(heawood_graph()), ctx.obj["field"], ctx.obj["jobs"])
    diff = table_diff(table, HEAWOOD_ROWS)
    lines = [table_text(table), lang("diff_match") if not diff else lang("diff_mismatch")]
    lines.extend(f"beta({i},{j}): {expected} != {actual}" for i, j, expected, actual in diff)
    emit({"table": table.to_json(), "matches": not diff, "diff": [list(d) for d in diff]}, "\n".join(lines))

    if diff:
        ctx.exit(1)


@cli.command("homogeneous")
@click.option("--r", "r", type=int, required=True)
@click.option("--offset", "p", type=int, default=0, show_default=True, help="Offset inside the row.")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
@guarded
def homogeneous(ctx: click.Context, r: int, p: int, n: int) -> None:
    """Homogeneous sets of order n/(r-1) among graphs with a vanishing parabolic entry."""
    data = homogeneous_census(r, p, n, ctx.obj["field"], ctx.obj["jobs"]).to_json()
    emit(data, report_text(data))


@cli.command("containment")
@click.option("--d", "d", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.pass_context
@guarded
def containment(ctx: click.Context, d: int, n: int) -> None:
    """(d,1)-templates containing every parabolic k-cluster, k <= d."""
    data = template_cluster_containment(d, n, ctx.obj["jobs"]).to_json()
    emit(data, report_text(data))


@cli.command("beta25")
@click.option("--n", "n", type=int, required=True)
@click.pass_context
@guarded
def beta25(ctx: click.Context, n: int) -> None:
    """Graphs with beta_{2,5} = 0 against the H_1..H_6-free graphs."""
    data = beta25_census(n, ctx.obj["field"], ctx.obj["jobs"]).to_json()
    emit(data, report_text(data))


@cli.command("growth")
@click.option("--d", "d", type=int, default=1, show_default=True)
@click.option("--nmax", type=int, required=True)
@click.option("--trees", is_flag=True, help="Count trees instead of (d,1)-templates.")
@click.pass_context
@guarded
def growth(ctx: click.Context, d: int, nmax: int, trees: bool) -> None:
    """Counts per n beside their growth bound."""
    rows = tree_growth(nmax) if trees else template_growth(d, nmax, ctx.obj["jobs"])
    lines = [[row.n, row.count, "" if row.log_count is None else f"{row.log_count:.6f}", f"{row.bound:.6f}"]
             for row in rows]
    emit([row.to_json() for row in rows], to_csv(GROWTH_HEADER, lines).rstrip("\n"))


@cli.command("lemma")
@click.option("--a", "a", type=int, required=True, help="Cycle length.")
@click.option("--b", "b", type=int, required=True, help="Tree order.")
@click.option("--c", "c", type=int, required=True, help="Matching size.")
@click.option("--tree-index", type=int, default=0, show_default=True)
@click.pass_context
@guarded
def lemma(ctx: click.Context, a: int, b: int, c: int, tree_index: int) -> None:
    """Homology of every induced subgraph of complement(C_a + T_b) + M_c."""
    data = special_lemma_report(a, tree_by_index(b, tree_index), c, ctx.obj["field"]).to_json()
    emit(data, report_text(data))


@cli.command("rowpattern")
@click.option("--r", "r", type=int, required=True)
@click.option("--i", "i", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--tree-index", type=int, default=0, show_default=True)
@click.pass_context
@guarded
def rowpattern(ctx: click.Context, r: int, i: int, n: int, tree_index: int) -> None:
    """Betti row r of the row-pattern graph."""
    _, b, _ = row_pattern_parameters(r, i, n)
    report = row_pattern_report(r, i, n, tree_by_index(b, tree_index), ctx.obj["field"], ctx.obj["jobs"])
    data = report.to_json()
    emit(data, report_text(data))
