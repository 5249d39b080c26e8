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
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, log2
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .. import glovar
from .betti import betti_table, hochster_entry, parabolic_indices, window
from .clusters import cluster_graph, parabolic_clusters
from .enumeration import enumerate_trees, enumerate_unlabeled, labeled_count, sample_graphs
from .errors import CapacityError, InputError
from .etc import effective_jobs, progress, run_chunks, split_range
from .graph import (Graph, add_edge, canonical_form, contains_induced, five_vertex_graph, homogeneous_set_size,
                    popcount)
from .homology import FieldSpec, default_field
from .templates import cover, is_template, p_family

# Enable logging
logger = logging.getLogger(__name__)

# Experiments that need a full Betti table or an exact matching per class stop here
TABLE_CENSUS_MAX = 8

CENSUS_HEADER = ["n", "r", "p", "source", "clusters", "all", "b", "h", "t", "t_not_b", "b_not_h",
                 "b_over_t", "h_over_t", "weighted_all", "weighted_b", "weighted_h", "weighted_t"]

TRAJECTORY_HEADER = ["n", "r", "p", "metric", "value"]


def _ratio(a: int, b: int) -> Optional[Fraction]:
    return Fraction(a, b) if b else None


def _check_table_order(n: int) -> None:
    if not 1 <= n <= TABLE_CENSUS_MAX:
        raise CapacityError(f"This census covers 1..{TABLE_CENSUS_MAX} vertices, not {n}")


def _check_window(r: int, p: int) -> None:
    if r < 3:
        raise InputError(f"Rows start at 3, not {r}")

    if not 0 <= p <= window(r):
        raise InputError(f"Offset p = {p} is outside the row-{r} window 0..{window(r)}")


def _vanishes(g: Graph, r: int, p: int, f: FieldSpec) -> bool:
    # beta_{r-2+p, 2(r-1)+p} = 0
    return hochster_entry(g, r - 2 + p, 2 * (r - 1) + p, f) == 0


# Census

def census_clusters(r: int, p: int, all_clusters: bool = False) -> List[Tuple[str, Graph]]:
    # Parabolic (r-1)-clusters of order 2(r-1)+p, the first one unless all are asked for
    _check_window(r, p)
    order = 2 * (r - 1) + p
    specs = [spec for spec in parabolic_clusters(r - 1) if spec.order == order]

    if not all_clusters:
        specs = specs[:1]

    return [(spec.label(), cluster_graph(spec)) for spec in specs]


@dataclass(frozen=True)
class CensusRow:
    n: int
    r: int
    p: int
    source: str
    clusters: Tuple[str, ...]
    all: int
    b: int
    h: int
    t: int
    t_not_b: int
    b_not_h: int
    weighted: Optional[Dict[str, int]] = None

    @property
    def b_over_t(self) -> Optional[Fraction]:
        return _ratio(self.b, self.t)

    @property
    def h_over_t(self) -> Optional[Fraction]:
        return _ratio(self.h, self.t)

    @property
    def violations(self) -> int:
        return self.t_not_b + self.b_not_h

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": self.p,
            "source": self.source,
            "clusters": list(self.clusters),
            "all": self.all,
            "b": self.b,
            "h": self.h,
            "t": self.t,
            "t_not_b": self.t_not_b,
            "b_not_h": self.b_not_h,
            "b_over_t": None if self.b_over_t is None else str(self.b_over_t),
            "h_over_t": None if self.h_over_t is None else str(self.h_over_t),
            "weighted": self.weighted
        }

    def csv_row(self) -> List:
        weighted = self.weighted or {}

        return [self.n, self.r, self.p, self.source, " ".join(self.clusters), self.all, self.b, self.h, self.t,
                self.t_not_b, self.b_not_h,
                "" if self.b_over_t is None else f"{float(self.b_over_t):.6f}",
                "" if self.h_over_t is None else f"{float(self.h_over_t):.6f}",
                weighted.get("all", ""), weighted.get("b", ""), weighted.get("h", ""), weighted.get("t", "")]


def _census_chunk(graphs: List[Graph], r: int, p: int, clusters: List[Graph], f: FieldSpec,
                  weighted: bool) -> Counter:
    counter = Counter()

    for g in graphs:
        b = _vanishes(g, r, p, f)
        h = not any(contains_induced(g, c) for c in clusters)
        t = is_template(g, r - 2, 1)
        weight = labeled_count(g) if weighted else 0

        for name, flag in (("all", True), ("b", b), ("h", h), ("t", t)):
            if flag:
                counter[name] += 1
                counter[f"w_{name}"] += weight

        counter["t_not_b"] += t and not b
        counter["b_not_h"] += b and not h

    return counter


def census(r: int, p: int, n_range: Iterable[int], f: Optional[FieldSpec] = None, jobs: int = 1,
           all_clusters: bool = False, weighted: bool = False, sample: int = 0, seed: int = 0,
           show_progress: bool = False) -> List[CensusRow]:
    """Classify the graphs on n vertices into A, B, H and T for every n.

    B: beta_{r-2+p, 2(r-1)+p} vanishes. H: free of the parabolic (r-1)-cluster(s)
    of order 2(r-1)+p. T: (r-2,1)-templates. T is inside B and B inside H, the
    two violation counters hold the exceptions. With ``sample`` the graphs are
    labeled G(n, 1/2) draws instead of every unlabeled class.
    """
    f = f or default_field()
    named = census_clusters(r, p, all_clusters)
    labels = tuple(label for label, _ in named)
    clusters = [c for _, c in named]
    source = "random" if sample else "exhaustive"
    rows = []

    for n in progress(list(n_range), desc="census", enabled=show_progress):
        if sample:
            pool = list(sample_graphs(n, sample, seed))
        else:
            if n > glovar.census_max:
                raise CapacityError(f"Exhaustive census stops at {glovar.census_max} vertices, not {n}")

            pool = list(enumerate_unlabeled(n, jobs))

        chunks = [(pool[lo:hi], r, p, clusters, f, weighted and not sample)
                  for lo, hi in split_range(len(pool), effective_jobs(jobs))]
        total = Counter()

        for counter in run_chunks(_census_chunk, chunks, jobs):
            total.update(counter)

        row = CensusRow(
            n=n,
            r=r,
            p=p,
            source=source,
            clusters=labels,
            all=total["all"],
            b=total["b"],
            h=total["h"],
            t=total["t"],
            t_not_b=total["t_not_b"],
            b_not_h=total["b_not_h"],
            weighted=({name: total[f"w_{name}"] for name in ("all", "b", "h", "t")}
                      if weighted and not sample else None)
        )
        rows.append(row)

        logger.info(f"Census r={r} p={p} n={n}: A={row.all} B={row.b} H={row.h} T={row.t} "
                    f"violations={row.violations}")

    return rows


def ratio_trajectory(rows: Sequence[CensusRow]) -> List[List]:
    # Long format: one line per (n, metric)
    result = []

    for row in rows:
        metrics = {
            "b_over_all": _ratio(row.b, row.all),
            "h_over_all": _ratio(row.h, row.all),
            "t_over_all": _ratio(row.t, row.all),
            "b_over_t": row.b_over_t,
            "h_over_t": row.h_over_t
        }

        for metric, value in metrics.items():
            if value is not None:
                result.append([row.n, row.r, row.p, metric, f"{float(value):.6f}"])

    return result


# Regularity

@dataclass(frozen=True)
class RegularityReport:
    n: int
    r: int
    p: int
    histogram: Dict[int, int]
    vanishing: int
    edgeless: int
    parabolic_nonzero: int
    templates: int
    bound_violations: int

    @property
    def fraction(self) -> Optional[Fraction]:
        # Share of the graphs in the histogram whose parabolic entries above row r are all non-zero
        return _ratio(self.parabolic_nonzero, sum(self.histogram.values()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": self.p,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "vanishing": self.vanishing,
            "edgeless": self.edgeless,
            "parabolic_nonzero": self.parabolic_nonzero,
            "fraction": None if self.fraction is None else str(self.fraction),
            "templates": self.templates,
            "bound_violations": self.bound_violations
        }


def _regularity_chunk(graphs: List[Graph], r: int, p: int, f: FieldSpec) -> Counter:
    counter = Counter()

    for g in graphs:
        if not _vanishes(g, r, p, f):
            continue

        counter["vanishing"] += 1

        if not g.edge_count:
            counter["edgeless"] += 1
            continue

        table = betti_table(g, f)
        reg = table.regularity()
        counter[("reg", reg)] += 1

        # Parabolic entries of rows 3..r-1 that fit on n vertices
        above = [index for row in range(3, r) for index in parabolic_indices(row) if index.j <= g.n]

        if all(table.get(index.i, index.j) for index in above):
            counter["parabolic"] += 1

        if is_template(g, r - 2, 1):
            counter["templates"] += 1
            counter["violations"] += reg > r - 1

    return counter


def regularity_census(r: int, p: int, n: int, f: Optional[FieldSpec] = None, jobs: int = 1) -> RegularityReport:
    # Regularity over the graphs with beta_{r-2+p, 2(r-1)+p} = 0, edgeless graph left out
    f = f or default_field()
    _check_window(r, p)
    _check_table_order(n)
    pool = list(enumerate_unlabeled(n, jobs))
    chunks = [(pool[lo:hi], r, p, f) for lo, hi in split_range(len(pool), effective_jobs(jobs))]
    total = Counter()

    for counter in run_chunks(_regularity_chunk, chunks, jobs):
        total.update(counter)

    return RegularityReport(
        n=n,
        r=r,
        p=p,
        histogram=dict(sorted((key[1], value) for key, value in total.items() if isinstance(key, tuple))),
        vanishing=total["vanishing"],
        edgeless=total["edgeless"],
        parabolic_nonzero=total["parabolic"],
        templates=total["templates"],
        bound_violations=total["violations"]
    )


# Induced matchings

def _closed_neighbourhood(g: Graph, u: int, v: int) -> int:
    return g.adj[u] | g.adj[v] | 1 << u | 1 << v


def is_induced_matching(g: Graph, edges: Sequence[Tuple[int, int]]) -> bool:
    for k, (u, v) in enumerate(edges):
        if not g.has_edge(u, v):
            return False

        near = _closed_neighbourhood(g, u, v)

        if any(near >> a & 1 or near >> b & 1 for a, b in edges[k + 1:]):
            return False

    return True


def greedy_induced_matching(g: Graph) -> List[Tuple[int, int]]:
    """Colour every edge black, take the first black edge, redden it with its
    incident edges and their incident edges, repeat until nothing is black."""
    chosen = []
    red = 0

    for u, v in g.edges():
        if red >> u & 1 or red >> v & 1:
            continue

        chosen.append((u, v))
        red |= _closed_neighbourhood(g, u, v)

    return chosen


def greedy_bound(g: Graph) -> Fraction:
    # e / (2 d^2), zero without edges
    d = max(g.degrees(), default=0)

    return Fraction(g.edge_count, 2 * d * d) if d else Fraction(0)


def maximum_induced_matching(g: Graph) -> List[Tuple[int, int]]:
    # Exact, edges in order with a free-vertex bound
    edges = g.edges()
    best: List[Tuple[int, int]] = []
    chosen: List[Tuple[int, int]] = []

    def extend(start: int, blocked: int) -> None:
        nonlocal best

        if len(chosen) > len(best):
            best = list(chosen)

        if len(chosen) + popcount(g.mask & ~blocked) // 2 <= len(best):
            return

        for k in range(start, len(edges)):
            u, v = edges[k]

            if blocked >> u & 1 or blocked >> v & 1:
                continue

            chosen.append((u, v))
            extend(k + 1, blocked | _closed_neighbourhood(g, u, v))
            chosen.pop()

    extend(0, 0)

    return best


@dataclass(frozen=True)
class MatchingAverage:
    k: int
    n: int
    count: int
    labeled: int
    average: Optional[Fraction]
    labeled_average: Optional[Fraction]
    bound: Fraction

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "count": self.count,
            "labeled": self.labeled,
            "average": None if self.average is None else str(self.average),
            "labeled_average": None if self.labeled_average is None else str(self.labeled_average),
            "bound": str(self.bound),
            "holds": self.holds,
            "labeled_holds": self.labeled_holds
        }

    @property
    def holds(self) -> bool:
        return self.average is None or self.average >= self.bound

    @property
    def labeled_holds(self) -> bool:
        return self.labeled_average is None or self.labeled_average >= self.bound


def _matching_chunk(graphs: List[Graph], k: int, f: FieldSpec) -> Counter:
    counter = Counter()

    for g in graphs:
        if hochster_entry(g, k - 2, k, f):
            continue

        size = len(maximum_induced_matching(g))
        weight = labeled_count(g)
        counter["count"] += 1
        counter["sum"] += size
        counter["labeled"] += weight
        counter["labeled_sum"] += size * weight

    return counter


def matching_average(k: int, n: int, f: Optional[FieldSpec] = None, jobs: int = 1) -> MatchingAverage:
    # Exact average of the maximum induced matching over the graphs with beta_{k-2,k} = 0
    f = f or default_field()

    if k < 3:
        raise InputError(f"Matching averages need k >= 3, not {k}")

    _check_table_order(n)
    pool = list(enumerate_unlabeled(n, jobs))
    chunks = [(pool[lo:hi], k, f) for lo, hi in split_range(len(pool), effective_jobs(jobs))]
    total = Counter()

    for counter in run_chunks(_matching_chunk, chunks, jobs):
        total.update(counter)

    return MatchingAverage(
        k=k,
        n=n,
        count=total["count"],
        labeled=total["labeled"],
        average=_ratio(total["sum"], total["count"]),
        labeled_average=_ratio(total["labeled_sum"], total["labeled"]),
        bound=Fraction(n - 1, 4 * (k - 2) ** 2)
    )


# Containment of clusters in templates

@dataclass(frozen=True)
class ContainmentReport:
    d: int
    n: int
    clusters: Tuple[str, ...]
    templates: int
    containing: int

    @property
    def fraction(self) -> Optional[Fraction]:
        return _ratio(self.containing, self.templates)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "clusters": list(self.clusters),
            "templates": self.templates,
            "containing": self.containing,
            "fraction": None if self.fraction is None else str(self.fraction)
        }


def template_cluster_containment(d: int, n: int, jobs: int = 1) -> ContainmentReport:
    # (d,1)-templates on n vertices that contain every parabolic k-cluster, k <= d
    if not 1 <= d <= 3:
        raise InputError(f"Containment is measured for d in 1..3, not {d}")

    _check_table_order(n)
    specs = [spec for k in range(2, d + 1) for spec in parabolic_clusters(k)]
    clusters = [cluster_graph(spec) for spec in specs]
    templates = containing = 0

    for g in enumerate_unlabeled(n, jobs):
        if not is_template(g, d, 1):
            continue

        templates += 1
        containing += all(contains_induced(g, c) for c in clusters)

    return ContainmentReport(d, n, tuple(spec.label() for spec in specs), templates, containing)


# Meta-graph

@dataclass(frozen=True)
class MetaGraphReport:
    n: int
    s: int
    t: int
    classes: int
    templates: int
    components: int
    bipartite: bool
    parity: bool

    @property
    def connected(self) -> bool:
        # The empty set of templates counts as connected
        return self.components <= 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "classes": self.classes,
            "templates": self.templates,
            "components": self.components,
            "connected": self.connected,
            "bipartite": self.bipartite,
            "parity": self.parity
        }


def metagraph(n: int) -> nx.Graph:
    # Nodes are canonical forms, edges join graphs one edge addition apart
    if not 1 <= n <= glovar.meta_max:
        raise CapacityError(f"Meta-graphs cover 1..{glovar.meta_max} vertices, not {n}")

    graph = nx.Graph()

    for g in enumerate_unlabeled(n):
        graph.add_node(canonical_form(g), graph=g, edges=g.edge_count)

    for key, data in list(graph.nodes(data=True)):
        g = data["graph"]

        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    graph.add_edge(key, canonical_form(add_edge(g, u, v)))

    return graph


def metagraph_connectivity(n: int, s: int, t: int) -> MetaGraphReport:
    if s < 0 or t < 0:
        raise InputError(f"Pair ({s},{t}) must be non-negative")

    graph = metagraph(n)
    members = [key for key, data in graph.nodes(data=True) if is_template(data["graph"], s, t)]
    sub = graph.subgraph(members)
    components = nx.number_connected_components(sub) if members else 0
    parity = all(abs(graph.nodes[a]["edges"] - graph.nodes[b]["edges"]) == 1 for a, b in graph.edges())

    return MetaGraphReport(n, s, t, graph.number_of_nodes(), len(members), components, nx.is_bipartite(graph), parity)


def edge_addition_witness(g: Graph, s: int, t: int) -> Optional[Tuple[int, int]]:
    """A missing edge whose addition keeps g an (s,t)-template.

    Edges between two classes of a cover never break it, so those are tried
    first. None when g is complete.
    """
    cert = cover(g, s, t)

    if cert is None:
        raise InputError(f"The graph is not a ({s},{t})-template")

    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    missing.sort(key=lambda e: cert.assignment[e[0]] == cert.assignment[e[1]])

    for u, v in missing:
        if is_template(add_edge(g, u, v), s, t):
            return u, v

    return None


# Homogeneous sets

@dataclass(frozen=True)
class HomogeneousReport:
    n: int
    r: int
    p: int
    threshold: int
    vanishing: int
    satisfying: int

    @property
    def fraction(self) -> Optional[Fraction]:
        return _ratio(self.satisfying, self.vanishing)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": self.p,
            "threshold": self.threshold,
            "vanishing": self.vanishing,
            "satisfying": self.satisfying,
            "fraction": None if self.fraction is None else str(self.fraction)
        }


def homogeneous_census(r: int, p: int, n: int, f: Optional[FieldSpec] = None, jobs: int = 1) -> HomogeneousReport:
    # Graphs with beta_{r-2+p, 2(r-1)+p} = 0 holding a homogeneous set of order ceil(n/(r-1))
    f = f or default_field()
    _check_window(r, p)
    _check_table_order(n)
    threshold = ceil(n / (r - 1))
    vanishing = satisfying = 0

    for g in enumerate_unlabeled(n, jobs):
        if not _vanishes(g, r, p, f):
            continue

        vanishing += 1
        satisfying += homogeneous_set_size(g) >= threshold

    return HomogeneousReport(n, r, p, threshold, vanishing, satisfying)


# beta_{2,5}

@dataclass(frozen=True)
class Beta25Report:
    n: int
    vanishing: int
    free: int
    equal: bool
    templates: int
    regularity_two: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vanishing": self.vanishing,
            "free": self.free,
            "equal": self.equal,
            "templates": self.templates,
            "regularity_two": self.regularity_two,
            "template_fraction": None if not self.vanishing else str(Fraction(self.templates, self.vanishing)),
            "regularity_fraction": None if not self.vanishing else str(Fraction(self.regularity_two, self.vanishing))
        }


def beta25_census(n: int, f: Optional[FieldSpec] = None, jobs: int = 1) -> Beta25Report:
    """Graphs with beta_{2,5} = 0 against P(n, {H_1, ..., H_6}).

    Also counts the (1,1)-templates among them and those with regularity 2.
    """
    f = f or default_field()
    _check_table_order(n)
    vanishing = {}

    for g in enumerate_unlabeled(n, jobs):
        if not hochster_entry(g, 2, 5, f):
            vanishing[canonical_form(g)] = g

    free = {canonical_form(g) for g in p_family(n, [five_vertex_graph(k) for k in range(1, 7)], jobs)}
    templates = sum(is_template(g, 1, 1) for g in vanishing.values())
    regularity_two = sum(1 for g in vanishing.values() if g.edge_count and betti_table(g, f).regularity() == 2)

    return Beta25Report(n, len(vanishing), len(free), set(vanishing) == free, templates, regularity_two)


# Growth

@dataclass(frozen=True)
class GrowthRow:
    n: int
    count: int
    bound: float

    @property
    def log_count(self) -> Optional[float]:
        return log2(self.count) if self.count else None

    def to_json(self) -> dict:
        return {"n": self.n, "count": self.count, "log2_count": self.log_count, "bound": self.bound}


def template_growth(d: int, n_max: int, jobs: int = 1) -> List[GrowthRow]:
    # Unlabeled (d,1)-templates per n, bound (1 - 1/(d+1)) C(n,2) on the log2 scale
    if d < 1:
        raise InputError(f"Growth needs d >= 1, not {d}")

    rows = []

    for n in range(1, n_max + 1):
        count = sum(is_template(g, d, 1) for g in enumerate_unlabeled(n, jobs))
        rows.append(GrowthRow(n, count, (1 - 1 / (d + 1)) * comb(n, 2)))

    return rows


def tree_growth(n_max: int) -> List[GrowthRow]:
    # Unlabeled trees per n beside 2.995^n
    return [GrowthRow(n, sum(1 for _ in enumerate_trees(n)), 2.995 ** n) for n in range(1, n_max + 1)]

