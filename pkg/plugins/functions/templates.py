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
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from .. import glovar
from .enumeration import enumerate_unlabeled, sample_graphs
from .errors import CapacityError, InputError
from .etc import effective_jobs, run_chunks, split_range
from .graph import Graph, bits, canonical_form, contains_induced, induced_subgraph, popcount, to_graph6

# Enable logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverCertificate:
    """Vertex v goes to class assignment[v]; classes 0..s-1 are cliques, s..s+t-1 independent sets."""

    s: int
    t: int
    assignment: Tuple[int, ...]

    def classes(self) -> List[int]:
        result = [0] * (self.s + self.t)

        for v, c in enumerate(self.assignment):
            result[c] |= 1 << v

        return result

    def to_json(self) -> dict:
        classes = self.classes()

        return {
            "s": self.s,
            "t": self.t,
            "assignment": list(self.assignment),
            "cliques": [list(bits(m)) for m in classes[:self.s]],
            "independent": [list(bits(m)) for m in classes[self.s:]]
        }


def verify_certificate(g: Graph, cert: CoverCertificate) -> bool:
    # Class by class, independent of the search that produced it
    if len(cert.assignment) != g.n or any(not 0 <= c < cert.s + cert.t for c in cert.assignment):
        return False

    for c, members in enumerate(cert.classes()):
        for v in bits(members):
            inside = g.adj[v] & members

            if c < cert.s and inside != members & ~(1 << v):
                return False

            if c >= cert.s and inside:
                return False

    return True


def cover(g: Graph, s: int, t: int) -> Optional[CoverCertificate]:
    # Exact backtracking, vertices by descending degree, empty classes of one kind tried once
    if s < 0 or t < 0:
        raise InputError(f"Cover pair ({s},{t}) must be non-negative")

    if g.n == 0:
        return CoverCertificate(s, t, ())

    if s + t == 0:
        return None

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    members = [0] * (s + t)
    assignment = [-1] * g.n

    def place(k: int) -> bool:
        if k == len(order):
            return True

        v = order[k]
        row = g.adj[v]
        tried_clique = tried_independent = False

        for c in range(s + t):
            m = members[c]

            if c < s:
                if not m:
                    if tried_clique:
                        continue

                    tried_clique = True
                elif row & m != m:
                    continue
            else:
                if not m:
                    if tried_independent:
                        continue

                    tried_independent = True
                elif row & m:
                    continue

            members[c] |= 1 << v
            assignment[v] = c

            if place(k + 1):
                return True

            members[c] &= ~(1 << v)
            assignment[v] = -1

        return False

    if not place(0):
        return None

    return CoverCertificate(s, t, tuple(assignment))


def is_template(g: Graph, s: int, t: int) -> bool:
    return cover(g, s, t) is not None


def level_pairs(k: int) -> List[Tuple[int, int]]:
    # (k,0), (k-1,1), ..., (0,k)
    return [(s, k - s) for s in range(k, -1, -1)]


@dataclass(frozen=True)
class Coloring:
    number: int
    witnesses: Tuple[Tuple[int, int], ...]


def coloring_number(g: Graph) -> Coloring:
    # Least k with every pair of level k covering, plus the failing pairs one level down
    previous: List[Tuple[int, int]] = []

    for k in range(g.n + 1):
        failing = [pair for pair in level_pairs(k) if not is_template(g, *pair)]

        if not failing:
            return Coloring(k, tuple(previous))

        previous = failing

    return Coloring(g.n, tuple(previous))


def witness_check(g: Graph, pairs: Iterable[Tuple[int, int]]) -> bool:
    return set(coloring_number(g).witnesses) == set(pairs)


@dataclass(frozen=True)
class ResidueFamily:
    """Minimal graphs left after deleting an (s,t)-template from h."""

    h: Graph
    s: int
    t: int
    members: Tuple[Graph, ...]

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "source": to_graph6(self.h), "members": [to_graph6(m) for m in self.members]}


def residue_family(h: Graph, s: int, t: int) -> ResidueFamily:
    if h.n > glovar.residue_max:
        raise CapacityError(f"Residue families stop at {glovar.residue_max} vertices, not {h.n}")

    if s < 0 or t < 0:
        raise InputError(f"Pair ({s},{t}) must be non-negative")

    # Being a template is hereditary, a set with a non-template facet is skipped
    template = [False] * (1 << h.n)

    for mask in sorted(range(1 << h.n), key=popcount):
        if any(not template[mask & ~(1 << v)] for v in bits(mask)):
            continue

        template[mask] = is_template(induced_subgraph(h, mask), s, t)

    # Minimal residues come from maximal template sets
    residues: Dict[bytes, Graph] = {}

    for mask in range(1 << h.n):
        if not template[mask] or any(template[mask | 1 << v] for v in bits(h.mask & ~mask)):
            continue

        rest = induced_subgraph(h, h.mask & ~mask)
        residues.setdefault(canonical_form(rest), rest)

    candidates = list(residues.values())
    members = [a for a in candidates if not any(b is not a and contains_induced(a, b) for b in candidates)]
    members.sort(key=lambda m: (m.n, m.edge_count, canonical_form(m)))

    return ResidueFamily(h, s, t, tuple(members))


def _free_chunk(graphs: List[Graph], family: List[Graph]) -> List[Graph]:
    return [g for g in graphs if not any(contains_induced(g, f) for f in family)]


def p_family(n: int, family: Iterable[Graph], jobs: int = 1, sample: int = 0, seed: int = 0) -> List[Graph]:
    """P(n, family): unlabeled n-vertex graphs with no member of the family as induced subgraph.

    Exhaustive up to the enumeration budget. With ``sample`` the graphs come from
    labeled G(n, 1/2) draws, deduplicated up to isomorphism.
    """
    members = list(family)

    if any(m.n == 0 for m in members):
        return []

    if sample:
        graphs: Dict[bytes, Graph] = {}

        for g in sample_graphs(n, sample, seed):
            graphs.setdefault(canonical_form(g), g)

        pool = list(graphs.values())
    else:
        pool = list(enumerate_unlabeled(n, jobs))

    chunks = [(pool[lo:hi], members) for lo, hi in split_range(len(pool), effective_jobs(jobs))]

    return [g for chunk in run_chunks(_free_chunk, chunks, jobs) for g in chunk]


class Verdict(Enum):
    CRITICAL = "CRITICAL"
    NOT_CRITICAL = "NOT_CRITICAL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PairEvidence:
    s: int
    t: int
    family: Tuple[Graph, ...]
    counts: Dict[int, int]
    labels: Dict[int, Tuple[str, ...]]
    growth: bool
    stable: bool

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "family": [to_graph6(f) for f in self.family],
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "labels": {str(n): list(v) for n, v in sorted(self.labels.items())},
            "growth": self.growth,
            "stable": self.stable
        }


@dataclass(frozen=True)
class CriticalityEvidence:
    verdict: Verdict
    chi: int
    horizon: Tuple[int, ...]
    pairs: Tuple[PairEvidence, ...]
    note: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "kind": "desk verdict",
            "chi": self.chi,
            "horizon": list(self.horizon),
            "pairs": [pair.to_json() for pair in self.pairs],
            "note": self.note
        }


def _label(g: Graph) -> str:
    if g.edge_count == comb(g.n, 2):
        return "K"

    if g.edge_count == 0:
        return "E"

    return "other"


def is_critical_desk(h: Graph, n_max: int, jobs: int = 1) -> CriticalityEvidence:
    """Finite-horizon criticality.

    For every pair (s,t) with s + t = chi_c(h) - 2 the family P(n, F(h,s,t)) is
    computed for n = min(|h|, n_max - 2) .. n_max and read over the last three n.
    Growth past two graphs means NOT_CRITICAL, a fixed set of at most two graphs
    among K_n and the empty graph means CRITICAL, anything else is INCONCLUSIVE.
    """
    if n_max > glovar.enum_max:
        raise CapacityError(f"Criticality horizon stops at {glovar.enum_max} vertices, not {n_max}")

    if n_max < 3:
        raise InputError(f"Criticality needs three orders, n_max = {n_max} gives fewer")

    if h.n > glovar.residue_max:
        raise CapacityError(f"Criticality checks stop at {glovar.residue_max} vertices, not {h.n}")

    chi = coloring_number(h).number
    horizon = tuple(range(max(1, min(h.n, n_max - 2)), n_max + 1))
    last = horizon[-3:]

    if chi < 2:
        return CriticalityEvidence(Verdict.INCONCLUSIVE, chi, horizon, (), "coloring number below 2 leaves no pairs")

    pairs = []

    for s, t in level_pairs(chi - 2):
        family = residue_family(h, s, t).members
        counts: Dict[int, int] = {}
        labels: Dict[int, Tuple[str, ...]] = {}

        for n in horizon:
            graphs = p_family(n, family, jobs)
            counts[n] = len(graphs)
            labels[n] = tuple(sorted(_label(g) for g in graphs))

        tail = [counts[n] for n in last]
        growth = all(c > 2 for c in tail) and all(a <= b for a, b in zip(tail, tail[1:]))
        stable = (all(c <= 2 for c in tail)
                  and all("other" not in labels[n] for n in last)
                  and len({labels[n] for n in last}) == 1)
        pairs.append(PairEvidence(s, t, family, counts, labels, growth, stable))

        logger.info(f"Pair ({s},{t}) of {to_graph6(h)}: counts {counts}")

    if any(pair.growth for pair in pairs):
        verdict = Verdict.NOT_CRITICAL
    elif all(pair.stable for pair in pairs):
        verdict = Verdict.CRITICAL
    else:
        verdict = Verdict.INCONCLUSIVE

    return CriticalityEvidence(verdict, chi, horizon, tuple(pairs))
