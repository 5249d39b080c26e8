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
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .. import glovar
from .errors import CapacityError, InputError, RegularityError
from .etc import effective_jobs, run_chunks, split_range
from .graph import Graph, bits, mask_of, popcount
from .homology import FieldSpec, complex_on, default_field, homology_in_degree, profile_on

# Enable logging
logger = logging.getLogger(__name__)

# Rows of the Betti table of the complement of the Heawood graph: first column, values
HEAWOOD_ROWS: Dict[int, Tuple[int, Tuple[int, ...]]] = {
    2: (0, (70, 476, 1617, 3388, 4648, 4184, 2394, 826, 161, 14)),
    3: (3, (28, 224, 777, 1442, 1547, 994, 385, 84, 8))
}


@dataclass(frozen=True)
class BettiTable:
    """Non-zero graded Betti numbers beta_{i,j}, column i, row j - i."""

    n: int
    field: FieldSpec
    entries: Dict[Tuple[int, int], int]

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, r: int) -> Dict[int, int]:
        return {i: v for (i, j), v in sorted(self.entries.items()) if j - i == r}

    def rows(self) -> List[int]:
        return sorted({j - i for i, j in self.entries})

    def regularity(self) -> int:
        if not self.entries:
            raise RegularityError("The zero ideal has no regularity")

        return max(self.rows())

    def to_json(self) -> dict:
        return {
            "field": self.field.p,
            "n": self.n,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())]
        }

    def render(self) -> str:
        # Grid with rows j - i and columns i, zeros shown as "-"
        if not self.entries:
            return ""

        columns = range(max(i for i, _ in self.entries) + 1)
        rows = range(min(self.rows()), max(self.rows()) + 1)
        cells = {(r, i): str(self.get(i, i + r) or "-") for r in rows for i in columns}
        width = max(max(len(text) for text in cells.values()), len(str(columns[-1])))
        label = max(len(str(r)) for r in rows) + 1
        lines = [" " * label + " " + " ".join(str(i).rjust(width) for i in columns)]

        for r in rows:
            lines.append(f"{r}:".rjust(label) + " " + " ".join(cells[(r, i)].rjust(width) for i in columns))

        return "\n".join(lines)


def has_isolated(g: Graph, within: int) -> bool:
    # A vertex of g[within] without neighbours makes Ind a cone
    return any(not g.adj[v] & within for v in bits(within))


def _entry_chunk(g: Graph, d: int, f: FieldSpec, masks: List[int]) -> int:
    total = 0

    for mask in masks:
        if has_isolated(g, mask):
            continue

        c = complex_on(g, mask, d - 1, d + 1)
        total += homology_in_degree(c, d, f)

    return total


def hochster_entry(g: Graph, i: int, j: int, f: Optional[FieldSpec] = None, jobs: int = 1) -> int:
    # beta_{i,j}(I_g) as a sum over j-subsets of dim H~_{j-i-2}(Ind(g[W]))
    f = f or default_field()
    d = j - i - 2

    if i < 0 or j < 0 or j > g.n or d < 0:
        return 0

    masks = [mask_of(combo) for combo in combinations(range(g.n), j)]
    chunks = [(g, d, f, masks[lo:hi]) for lo, hi in split_range(len(masks), effective_jobs(jobs))]

    return sum(run_chunks(_entry_chunk, chunks, jobs))


def _table_chunk(g: Graph, f: FieldSpec, lo: int, hi: int) -> Counter:
    counter = Counter()

    for mask in range(max(lo, 1), hi):
        if has_isolated(g, mask):
            continue

        size = popcount(mask)

        for d, value in profile_on(g, mask, f).items():
            i = size - d - 2

            if i >= 0:
                counter[(i, size)] += value

    return counter


def betti_table(g: Graph, f: Optional[FieldSpec] = None, jobs: int = 1) -> BettiTable:
    # Every subset once, each contributes its whole homology profile
    f = f or default_field()

    if g.n > glovar.full_table:
        raise CapacityError(f"Full Betti tables stop at {glovar.full_table} vertices, "
                            f"ask for single entries on {g.n} vertices")

    chunks = [(g, f, lo, hi) for lo, hi in split_range(1 << g.n, effective_jobs(jobs))]
    total = Counter()

    for counter in run_chunks(_table_chunk, chunks, jobs):
        total.update(counter)

    return BettiTable(g.n, f, {key: value for key, value in sorted(total.items()) if value})


def table_diff(table: BettiTable, expected: Dict[int, Tuple[int, Sequence[int]]]) -> List[Tuple[int, int, int, int]]:
    # (i, j, expected, actual) wherever the table leaves the expected rows, given as first column and values
    wanted = {(i, i + r): v for r, (first, values) in expected.items() for i, v in enumerate(values, start=first)}
    keys = sorted(set(wanted) | set(table.entries))
    pairs = [(i, j, wanted.get((i, j), 0), table.get(i, j)) for i, j in keys]

    return [pair for pair in pairs if pair[2] != pair[3]]


def regularity(g: Graph, f: Optional[FieldSpec] = None, jobs: int = 1) -> int:
    if not g.edge_count:
        raise RegularityError("An edgeless graph has the zero edge ideal, which has no regularity")

    return betti_table(g, f, jobs).regularity()


# Parabolic window

@dataclass(frozen=True)
class ParabolicIndex:
    r: int
    p: int

    @property
    def i(self) -> int:
        return self.r - 2 + self.p

    @property
    def j(self) -> int:
        return 2 * (self.r - 1) + self.p


def window(r: int) -> int:
    # Largest offset on row r, the orders 2(r-1)+p realised by parabolic (r-1)-clusters
    return comb(r - 2, 2)


def parabolic_indices(r: int) -> List[ParabolicIndex]:
    if r < 3:
        raise InputError(f"Parabolic rows start at 3, not {r}")

    return [ParabolicIndex(r, p) for p in range(window(r) + 1)]


def is_parabolic(i: int, j: int) -> Tuple[bool, Optional[ParabolicIndex]]:
    r = j - i

    if r < 3:
        return False, None

    p = i - (r - 2)

    if 0 <= p <= window(r):
        return True, ParabolicIndex(r, p)

    return False, None
