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
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .. import glovar
from .betti import betti_table
from .errors import CapacityError, InputError
from .graph import Graph, cluster_of, complement, cycle_graph, disjoint_union, is_tree, matching_graph, popcount
from .homology import FieldSpec, default_field, profile_on

# Enable logging
logger = logging.getLogger(__name__)

# Exact Catalan numbers are served up to this index
CATALAN_MAX = 30


@dataclass(frozen=True)
class ClusterSpec:
    """Clique orders a_1 <= ... <= a_k of a disjoint union of cliques."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 1 for a in self.parts):
            raise InputError(f"Cluster parts {self.parts} must be positive")

        if list(self.parts) != sorted(self.parts):
            raise InputError(f"Cluster parts {self.parts} must be sorted, use make_spec")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return sum(self.parts)

    def is_parabolic(self) -> bool:
        return (self.k >= 2 and self.parts[0] == 2
                and all(2 <= a <= i for i, a in enumerate(self.parts, start=1) if i >= 2))

    def label(self) -> str:
        return "c(" + ",".join(str(a) for a in self.parts) + ")"

    def to_json(self) -> List[int]:
        return list(self.parts)


def make_spec(parts: Sequence[int]) -> ClusterSpec:
    return ClusterSpec(tuple(sorted(parts)))


def parabolic_clusters(k: int) -> List[ClusterSpec]:
    # Lexicographic: a_1 = 2, then a_i from max(a_{i-1}, 2) to i
    if k < 2:
        raise InputError(f"Parabolic clusters need k >= 2, not {k}")

    result = []

    def extend(parts: List[int]) -> None:
        if len(parts) == k:
            result.append(ClusterSpec(tuple(parts)))
            return

        i = len(parts) + 1

        for a in range(max(parts[-1], 2), i + 1):
            extend(parts + [a])

    extend([2])

    return result


@dataclass(frozen=True)
class DyckPath:
    """Right/up steps from (0,0) to (m,m) never rising above the diagonal."""

    steps: str

    def __post_init__(self) -> None:
        if set(self.steps) - {"R", "U"}:
            raise InputError(f"Dyck path {self.steps!r} uses steps other than R and U")

        x = y = 0

        for step in self.steps:
            x += step == "R"
            y += step == "U"

            if y > x:
                raise InputError(f"Dyck path {self.steps!r} crosses the diagonal")

        if x != y:
            raise InputError(f"Dyck path {self.steps!r} is not balanced")

    @property
    def m(self) -> int:
        return len(self.steps) // 2

    def levels(self) -> List[int]:
        # Height at which each right step is taken
        result = []
        y = 0

        for step in self.steps:
            if step == "U":
                y += 1
            else:
                result.append(y)

        return result

    def heights(self) -> List[int]:
        # h_0 = 0, h_i = level of the i-th right step plus one
        return [0] + [y + 1 for y in self.levels()]


def _path_of(levels: Sequence[int], m: int) -> DyckPath:
    steps = []
    y = 0

    for level in levels:
        steps.append("U" * (level - y) + "R")
        y = level

    steps.append("U" * (m - y))

    return DyckPath("".join(steps))


def cluster_to_dyck(spec: ClusterSpec) -> DyckPath:
    if not spec.is_parabolic():
        raise InputError(f"{spec.label()} is not parabolic")

    return _path_of([a - 2 for a in spec.parts[1:]], spec.k - 1)


def dyck_to_cluster(path: DyckPath) -> ClusterSpec:
    if path.m < 1:
        raise InputError("A cluster needs a Dyck path with at least one right step")

    return ClusterSpec((2,) + tuple(level + 2 for level in path.levels()))


def dyck_paths(m: int) -> List[DyckPath]:
    # Levels y_1 <= ... <= y_m with y_c <= c - 1
    if m < 0:
        raise InputError(f"Dyck paths need m >= 0, not {m}")

    result = []

    def extend(levels: List[int]) -> None:
        if len(levels) == m:
            result.append(_path_of(levels, m))
            return

        c = len(levels) + 1

        for level in range(levels[-1] if levels else 0, c):
            extend(levels + [level])

    extend([])

    return result


def catalan(n: int) -> int:
    if n < 0:
        raise InputError(f"Catalan numbers start at 0, not {n}")

    if n > CATALAN_MAX:
        raise CapacityError(f"Catalan numbers are served up to index {CATALAN_MAX}")

    return comb(2 * n, n) // (n + 1)


def catalan_sum_bound(d: int) -> bool:
    # sum_{k <= d} C_k <= 4^d
    return sum(catalan(k) for k in range(d + 1)) <= 4 ** d


def cluster_graph(spec: ClusterSpec) -> Graph:
    return cluster_of(spec.parts)


# Special graphs

def special_graph(a: int, tree: Graph, c: int) -> Graph:
    # complement(C_a + T_b) + M_c
    if a < 3:
        raise InputError(f"The cycle needs a >= 3, not {a}")

    if c < 0:
        raise InputError(f"The matching needs c >= 0, not {c}")

    if not is_tree(tree):
        raise InputError("The second part must be a tree")

    total = a + tree.n + 2 * c

    if total > glovar.special_max:
        raise CapacityError(f"Special graphs stop at {glovar.special_max} vertices, not {total}")

    return disjoint_union([complement(disjoint_union([cycle_graph(a), tree])), matching_graph(c)])


@dataclass(frozen=True)
class LemmaReport:
    a: int
    b: int
    c: int
    claim_one: bool
    claim_two: bool
    claim_three: bool
    witnesses: Dict[int, int]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "claim_one": self.claim_one,
            "claim_two": self.claim_two,
            "claim_three": self.claim_three,
            "witnesses": {str(m): mask for m, mask in sorted(self.witnesses.items())}
        }


def special_lemma_report(a: int, tree: Graph, c: int, f: Optional[FieldSpec] = None) -> LemmaReport:
    """Brute force over every induced subgraph H of complement(C_a + T_b) + M_c.

    claim_one: for each a+2c <= m <= a+b+2c some H on m vertices has dim H~_{c+1} = 1.
    claim_two: every H on fewer than a+2c vertices has H~_{c+1} = 0.
    claim_three: no H has homology in degree above c+1.
    """
    f = f or default_field()
    g = special_graph(a, tree, c)
    b = tree.n
    low, high = a + 2 * c, a + b + 2 * c
    witnesses: Dict[int, int] = {}
    claim_two = claim_three = True

    for mask in range(1 << g.n):
        dims = profile_on(g, mask, f)
        m = popcount(mask)

        if low <= m <= high and dims.get(c + 1, 0) == 1:
            witnesses.setdefault(m, mask)

        if m < low and dims.get(c + 1, 0):
            claim_two = False

        if any(value and degree > c + 1 for degree, value in dims.items()):
            claim_three = False

    claim_one = all(m in witnesses for m in range(low, high + 1))

    return LemmaReport(a, b, c, claim_one, claim_two, claim_three, witnesses)


def row_pattern_parameters(r: int, i: int, n: int) -> Tuple[int, int, int]:
    # (a, b, c) of the row-pattern construction
    if r < 3:
        raise InputError(f"Row-pattern graphs need r >= 3, not {r}")

    if i < 2 * r - 4:
        raise InputError(f"Row-pattern graphs need i >= 2r - 4 = {2 * r - 4}, not {i}")

    if n < i + r - 4:
        raise InputError(f"Row-pattern graphs need n >= i + r - 4 = {i + r - 4}, not {n}")

    return i - 2 * r + 7, n - i + r - 4, r - 3


def row_pattern_graph(r: int, i: int, n: int, tree: Graph) -> Graph:
    a, b, c = row_pattern_parameters(r, i, n)

    if tree.n != b:
        raise InputError(f"The tree must have n - i + r - 4 = {b} vertices, not {tree.n}")

    return special_graph(a, tree, c)


@dataclass(frozen=True)
class RowPatternReport:
    r: int
    i: int
    n: int
    columns: Tuple[int, ...]
    predicted: Tuple[int, int]
    claim_one: bool
    claim_two: bool
    rows_after_zero: bool
    rows_before_zero: bool

    @property
    def matches_prediction(self) -> bool:
        return self.columns == tuple(range(self.predicted[0], self.predicted[1] + 1))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "i": self.i,
            "n": self.n,
            "columns": list(self.columns),
            "predicted": list(self.predicted),
            "matches_prediction": self.matches_prediction,
            "claim_one": self.claim_one,
            "claim_two": self.claim_two,
            "rows_after_zero": self.rows_after_zero,
            "rows_before_zero": self.rows_before_zero
        }


def row_pattern_report(r: int, i: int, n: int, tree: Graph, f: Optional[FieldSpec] = None,
                       jobs: int = 1) -> RowPatternReport:
    """Measure the Betti row r of the row-pattern graph.

    ``columns`` are the j with beta_{j,r+j} != 0; ``predicted`` is the column
    range a+2c-r .. a+b+2c-r where the special-graph lemma puts homology;
    claim_one reads "non-zero for i < j <= n - r", claim_two reads "zero for
    j <= i". Both row orientations of the vanishing claim are reported.
    """
    a, b, c = row_pattern_parameters(r, i, n)
    table = betti_table(row_pattern_graph(r, i, n, tree), f, jobs)
    columns = tuple(sorted(table.row(r)))
    claim_one = all(table.get(j, r + j) > 0 for j in range(i + 1, n - r + 1))
    claim_two = all(table.get(j, r + j) == 0 for j in range(0, i + 1))
    rows = table.rows()

    return RowPatternReport(
        r=r,
        i=i,
        n=n,
        columns=columns,
        predicted=(a + 2 * c - r, a + b + 2 * c - r),
        claim_one=claim_one,
        claim_two=claim_two,
        rows_after_zero=all(row <= r for row in rows),
        rows_before_zero=all(row >= r for row in rows)
    )
