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
from itertools import combinations
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .. import glovar
from .errors import CapacityError, InputError
from .etc import effective_jobs, run_chunks
from .file import load_graphs, read_graph6_file, save_graphs
from .graph import Graph, automorphism_count, canonical_form, canonical_labeling, empty_graph, make_graph, popcount

# Enable logging
logger = logging.getLogger(__name__)

# Unlabeled graphs and trees on n vertices, used to reject damaged caches
GRAPH_COUNTS: Dict[int, int] = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
TREE_COUNTS: Dict[int, int] = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235,
                               12: 551, 13: 1301, 14: 3159, 15: 7741, 16: 19320}

# In-memory levels of the generation tree
levels: Dict[int, List[Graph]] = {}


def _children(parent: Graph) -> List[Graph]:
    """Canonical augmentation by one vertex.

    A child is kept when its new vertex lies in the orbit of the canonical
    deletion vertex, the first maximum-degree vertex of the canonical order.
    Children of one parent are deduplicated by canonical form.
    """
    new = parent.n
    base = parent.degrees()
    seen = set()
    result = []

    for s in range(1 << parent.n):
        degree = popcount(s)
        degrees = [d + (s >> v & 1) for v, d in enumerate(base)] + [degree]
        top = max(degrees)

        if degree != top:
            continue

        child = Graph(parent.n + 1, tuple(row | (s >> v & 1) << new for v, row in enumerate(parent.adj)) + (s,))

        if degrees.count(top) == 1:
            key = canonical_form(child)
        else:
            key, order = canonical_labeling(child)
            w = next(v for v in order if degrees[v] == top)

            if w != new and canonical_labeling(child, new)[0] != canonical_labeling(child, w)[0]:
                continue

        if key in seen:
            continue

        seen.add(key)
        result.append(child)

    return result


def _partition_children(parents: List[Graph], part: int, parts: int) -> List[Tuple[int, List[Graph]]]:
    return [(index, _children(parents[index])) for index in range(part, len(parents), parts)]


def _level(n: int, jobs: int = 1) -> List[Graph]:
    # All classes on n vertices in generation order
    if n in levels:
        return levels[n]

    graphs = load_graphs(f"graphs_{n}.g6") if glovar.cache and n > 5 else None

    if graphs is not None and len(graphs) != GRAPH_COUNTS.get(n, len(graphs)):
        logger.warning(f"Cached graphs_{n}.g6 has {len(graphs)} graphs, regenerating")
        graphs = None

    if graphs is None:
        if n == 1:
            graphs = [empty_graph(1)]
        else:
            parents = _level(n - 1, jobs)
            parts = effective_jobs(jobs)
            chunks = run_chunks(_partition_children, [(parents, part, parts) for part in range(parts)], jobs)
            merged = sorted((pair for chunk in chunks for pair in chunk), key=lambda pair: pair[0])
            graphs = [child for _, children in merged for child in children]

        logger.info(f"Generated {len(graphs)} graphs on {n} vertices")

        if glovar.cache and n > 5:
            save_graphs(f"graphs_{n}.g6", graphs)

    levels[n] = graphs

    return graphs


def check_order(n: int) -> None:
    if not 1 <= n <= glovar.enum_max:
        raise CapacityError(f"Exhaustive enumeration covers 1..{glovar.enum_max} vertices, not {n}")


def enumerate_unlabeled(n: int, jobs: int = 1) -> Iterator[Graph]:
    # One representative per isomorphism class
    check_order(n)
    yield from _level(n, jobs)


def enumerate_partition(n: int, part: int, parts: int) -> Iterator[Graph]:
    # Children of every parts-th parent, starting at part
    check_order(n)

    if not 0 <= part < parts:
        raise InputError(f"Partition {part} of {parts} does not exist")

    if n == 1:
        if part == 0:
            yield from _level(1)

        return

    for _, children in _partition_children(_level(n - 1), part, parts):
        yield from children


def _level_sequences(n: int) -> Iterator[List[int]]:
    # Rooted trees as canonical level sequences, root at level 0
    sequence = list(range(n))

    while True:
        yield list(sequence)

        p = max((k for k in range(n) if sequence[k] > 1), default=-1)

        if p < 0:
            return

        q = max(k for k in range(p) if sequence[k] == sequence[p] - 1)

        for k in range(p, n):
            sequence[k] = sequence[k - (p - q)]


def _tree_of(sequence: List[int]) -> Graph:
    last: Dict[int, int] = {}
    edges = []

    for k, level in enumerate(sequence):
        if level > 0:
            edges.append((last[level - 1], k))

        last[level] = k

    return make_graph(len(sequence), edges)


def _rooted_at_centroid(sequence: List[int]) -> bool:
    # Every branch at the root has at most half the vertices
    n = len(sequence)
    roots = [k for k, level in enumerate(sequence) if level == 1] + [n]

    return all(2 * (roots[k + 1] - roots[k]) <= n for k in range(len(roots) - 1))


def enumerate_trees(n: int) -> Iterator[Graph]:
    # One representative per unlabeled tree
    if not 1 <= n <= glovar.tree_max:
        raise CapacityError(f"Tree enumeration covers 1..{glovar.tree_max} vertices, not {n}")

    seen = set()

    for sequence in _level_sequences(n):
        if not _rooted_at_centroid(sequence):
            continue

        tree = _tree_of(sequence)
        key = canonical_form(tree)

        if key in seen:
            continue

        seen.add(key)

        yield tree


def sample_graphs(n: int, count: int, seed: int) -> Iterator[Graph]:
    # Labeled G(n, 1/2), reproducible by seed
    if not 0 <= n <= glovar.sample_max:
        raise CapacityError(f"Sampling covers 0..{glovar.sample_max} vertices, not {n}")

    if count < 0:
        raise InputError(f"Sample count {count} is negative")

    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))

    for _ in range(count):
        coins = rng.integers(0, 2, size=len(pairs))
        yield make_graph(n, (pair for pair, coin in zip(pairs, coins) if coin))


def labeled_count(g: Graph) -> int:
    # Number of labeled graphs in the class of g
    return factorial(g.n) // automorphism_count(g)


@dataclass(frozen=True)
class GraphStream:
    """A family of graphs on n vertices: every class once, labeled random samples, or a graph6 file.

    A file source keeps the graphs of order n in file order, so a census can be rerun on a saved family.
    """

    n: int
    source: str = "exhaustive"
    seed: int = 0
    count: int = 0
    path: Optional[str] = None
    predicate: Optional[Callable[[Graph], bool]] = None

    def __iter__(self) -> Iterator[Graph]:
        if self.source == "exhaustive":
            graphs = enumerate_unlabeled(self.n)
        elif self.source == "random":
            graphs = sample_graphs(self.n, self.count, self.seed)
        elif self.source == "file":
            if not self.path:
                raise InputError("A file stream needs a path")

            graphs = (g for g in read_graph6_file(self.path) if g.n == self.n)
        else:
            raise InputError(f"Unknown stream source {self.source!r}")

        for g in graphs:
            if self.predicate is None or self.predicate(g):
                yield g
