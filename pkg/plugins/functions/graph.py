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
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import CapacityError, InputError, InvariantError

# Enable logging
logger = logging.getLogger(__name__)

# A vertex set is one machine word
MAX_VERTICES = 64

# Brute-force canonical forms stop here
BRUTE_MAX = 8

VertexSet = Union[int, Sequence[int]]


def bits(mask: int) -> Iterator[int]:
    # Iterate over the set bits of a mask, lowest first
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    result = 0

    for v in vertices:
        result |= 1 << v

    return result


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on the vertices 0..n-1, adjacency as per-vertex bitsets."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"Graph order {self.n} is outside 0..{MAX_VERTICES}")

        if len(self.adj) != self.n:
            raise InvariantError(f"Adjacency has {len(self.adj)} rows for {self.n} vertices")

        full = (1 << self.n) - 1

        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise InvariantError(f"Vertex {v} has a neighbour outside the graph")

            if row >> v & 1:
                raise InvariantError(f"Vertex {v} has a loop")

            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvariantError(f"Edge {v}-{u} is not symmetric")

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]


def make_graph(n: int, edges: Iterable[Tuple[int, int]] = ()) -> Graph:
    # Build a graph from an edge list
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"Graph order {n} is outside 0..{MAX_VERTICES}")

    adj = [0] * n

    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"Edge {u}-{v} leaves the vertex range 0..{n - 1}")

        if u == v:
            raise InputError(f"Loop at vertex {u}")

        adj[u] |= 1 << v
        adj[v] |= 1 << u

    return Graph(n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError(f"Cannot add edge {u}-{v} to a graph on {g.n} vertices")

    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u

    return Graph(g.n, tuple(adj))


def vertex_list(g: Graph, u: VertexSet) -> List[int]:
    # Normalize a vertex set to an ordered list
    if isinstance(u, int):
        if u < 0 or u & ~g.mask:
            raise InputError(f"Vertex set {u:b} does not fit a graph on {g.n} vertices")

        return list(bits(u))

    result = list(u)

    if any(not 0 <= v < g.n for v in result):
        raise InputError(f"Vertex set {result} does not fit a graph on {g.n} vertices")

    if len(set(result)) != len(result):
        raise InputError(f"Vertex set {result} repeats a vertex")

    return result


def induced_subgraph(g: Graph, u: VertexSet) -> Graph:
    # The subgraph induced on u, relabeled 0..|u|-1 in the order of u
    order = vertex_list(g, u)
    index = {v: k for k, v in enumerate(order)}
    adj = []

    for v in order:
        row = 0

        for w in bits(g.adj[v]):
            k = index.get(w)

            if k is not None:
                row |= 1 << k

        adj.append(row)

    return Graph(len(order), tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    # Block-diagonal adjacency, vertex order is the concatenation order
    total = sum(g.n for g in gs)

    if total > MAX_VERTICES:
        raise CapacityError(f"Disjoint union has {total} vertices, more than {MAX_VERTICES}")

    adj = []
    offset = 0

    for g in gs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n

    return Graph(total, tuple(adj))


def components(g: Graph) -> List[int]:
    # Vertex masks of the connected components
    result = []
    left = g.mask

    while left:
        seen = left & -left
        frontier = seen

        while frontier:
            reach = 0

            for v in bits(frontier):
                reach |= g.adj[v]

            frontier = reach & ~seen
            seen |= frontier

        result.append(seen)
        left &= ~seen

    return result


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n == 0 or (is_connected(g) and g.edge_count == g.n - 1)


# Named families

def empty_graph(n: int) -> Graph:
    return make_graph(n)


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"Path P_{n} needs at least one vertex")

    return make_graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"Cycle C_{n} needs at least three vertices")

    return make_graph(n, ((v, (v + 1) % n) for v in range(n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(a < 1 for a in parts):
        raise InputError(f"Parts {tuple(parts)} must be positive")

    return complement(cluster_of(parts))


def cluster_of(parts: Sequence[int]) -> Graph:
    # Disjoint union of cliques of the given orders
    if any(a < 1 for a in parts):
        raise InputError(f"Parts {tuple(parts)} must be positive")

    return disjoint_union([complete_graph(a) for a in parts])


def matching_graph(c: int) -> Graph:
    if c < 0:
        raise InputError(f"Matching M_{c} needs a non-negative size")

    return make_graph(2 * c, ((2 * k, 2 * k + 1) for k in range(c)))


def heawood_graph() -> Graph:
    # Points 0..6 and lines 7..13 of the Fano plane, line k is {k, k+1, k+3} mod 7
    edges = [(p, 7 + k) for k in range(7) for p in ((k + d) % 7 for d in (0, 1, 3))]
    return make_graph(14, edges)


def five_vertex_graph(k: int) -> Graph:
    # Complements of the five-vertex graphs with an induced cycle of length at least four
    edges: Dict[int, List[Tuple[int, int]]] = {
        1: [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
        2: [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)],
        3: [(0, 1), (0, 2), (1, 2), (3, 4)],
        4: [(0, 1), (1, 2), (2, 3), (3, 4)],
        5: [(0, 1), (1, 2), (3, 4)],
        6: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    }

    if k not in edges:
        raise InputError(f"H_{k} is not one of H_1..H_6")

    return make_graph(5, edges[k])


def six_vertex_graph(k: int) -> Graph:
    # 2P_3, C_4 + K_2, 2K_3, K_4 + K_2
    if k == 1:
        return disjoint_union([path_graph(3), path_graph(3)])
    elif k == 2:
        return disjoint_union([cycle_graph(4), complete_graph(2)])
    elif k == 3:
        return disjoint_union([complete_graph(3), complete_graph(3)])
    elif k == 4:
        return disjoint_union([complete_graph(4), complete_graph(2)])

    raise InputError(f"R_{k} is not one of R_1..R_4")


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "C": cycle_graph,
    "E": empty_graph,
    "H": five_vertex_graph,
    "K": complete_graph,
    "KM": lambda *parts: complete_multipartite(parts),
    "M": matching_graph,
    "P": path_graph,
    "R": six_vertex_graph,
    "cluster": lambda *parts: cluster_of(parts),
    "heawood": heawood_graph
}


def named(family: str, *params: int) -> Graph:
    # Construct a member of a named family, e.g. named("C", 7) or named("KM", 2, 2, 2)
    builder = FAMILIES.get(family)

    if builder is None:
        raise InputError(f"Unknown family {family!r}, choose from {sorted(FAMILIES)}")

    try:
        return builder(*params)
    except TypeError as e:
        raise InputError(f"Bad parameters {params} for family {family!r}: {e}") from e


# Canonical forms

def _refine(g: Graph, cells: List[List[int]]) -> List[List[int]]:
    # Equitable refinement: split cells by neighbour counts into every current cell
    while True:
        masks = [mask_of(cell) for cell in cells]
        result = []
        split = False

        for cell in cells:
            if len(cell) == 1:
                result.append(cell)
                continue

            signature = {v: tuple(popcount(g.adj[v] & m) for m in masks) for v in cell}
            keys = sorted(set(signature.values()))
            split = split or len(keys) > 1
            result.extend([v for v in cell if signature[v] == key] for key in keys)

        cells = result

        if not split:
            return cells


def _is_twin_cell(g: Graph, cell: List[int]) -> bool:
    # Every vertex of the cell has the neighbourhood of the first one, up to each other
    first = cell[0]

    for v in cell[1:]:
        if g.adj[first] & ~(1 << v) != g.adj[v] & ~(1 << first):
            return False

    return True


def _leaf_key(g: Graph, order: Sequence[int]) -> int:
    # Upper triangle of the relabeled adjacency matrix, row by row
    key = 0

    for a, v in enumerate(order):
        row = g.adj[v]

        for w in order[a + 1:]:
            key = key << 1 | (row >> w & 1)

    return key


def _encode(n: int, key: int) -> bytes:
    size = max(1, (n * (n - 1) // 2 + 7) // 8)
    return bytes([n]) + key.to_bytes(size, "big")


def _search(g: Graph, cells: List[List[int]], best: list) -> None:
    cells = _refine(g, cells)
    target = -1

    for index, cell in enumerate(cells):
        if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
            target = index

    if target < 0:
        order = [cell[0] for cell in cells]
        key = _leaf_key(g, order)

        if best[0] is None or key > best[0]:
            best[0], best[1] = key, order

        return

    cell = cells[target]

    # Twins in one cell are swapped by an automorphism fixing the partition
    candidates = cell[:1] if _is_twin_cell(g, cell) else cell

    for v in candidates:
        rest = [w for w in cell if w != v]
        _search(g, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_labeling(g: Graph, mark: Optional[int] = None) -> Tuple[bytes, List[int]]:
    """Individualization-refinement canonical labeling.

    Returns the canonical key and a vertex order realizing it. With ``mark`` the
    search starts from the partition that individualizes that vertex, so two
    marked keys agree iff an automorphism maps one mark onto the other.
    """
    if g.n == 0:
        return _encode(0, 0), []

    if mark is None:
        cells = [list(range(g.n))]
    elif 0 <= mark < g.n:
        cells = [[mark]] + ([[v for v in range(g.n) if v != mark]] if g.n > 1 else [])
    else:
        raise InputError(f"Marked vertex {mark} is outside the graph")

    best = [None, None]
    _search(g, cells, best)

    return _encode(g.n, best[0]), best[1]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    # Equal keys iff isomorphic
    return canonical_labeling(g)[0]


def brute_canonical_form(g: Graph) -> bytes:
    # Largest adjacency key over all relabelings, the oracle for small graphs
    if g.n > BRUTE_MAX:
        raise CapacityError(f"Brute-force canonical form stops at {BRUTE_MAX} vertices")

    key = max((_leaf_key(g, order) for order in permutations(range(g.n))), default=0)

    return _encode(g.n, key)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)


def contains_induced(g: Graph, h: Graph) -> bool:
    # Subset enumeration with degree-sequence pruning
    if h.n > g.n:
        return False

    if h.n == 0:
        return True

    degrees = sorted(h.degrees())
    key = canonical_form(h)

    for combo in combinations(range(g.n), h.n):
        mask = mask_of(combo)

        if sorted(popcount(g.adj[v] & mask) for v in combo) != degrees:
            continue

        if canonical_form(induced_subgraph(g, mask)) == key:
            return True

    return False


def substitution(f: Graph, v: int, h: Graph) -> Graph:
    # Replace v by h and join h to the former neighbours of v
    if not 0 <= v < f.n:
        raise InputError(f"Vertex {v} is outside the graph")

    total = f.n - 1 + h.n

    if total > MAX_VERTICES:
        raise CapacityError(f"Substitution has {total} vertices, more than {MAX_VERTICES}")

    others = [w for w in range(f.n) if w != v]
    index = {w: k for k, w in enumerate(others)}
    base = len(others)
    edges = [(index[a], index[b]) for a, b in f.edges() if v not in {a, b}]
    edges += [(base + a, base + b) for a, b in h.edges()]
    edges += [(index[w], base + x) for w in bits(f.adj[v]) for x in range(h.n)]

    return make_graph(total, edges)


def clique_number(g: Graph) -> int:
    # Branch and bound over candidate bitsets
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best

        if not candidates:
            best = max(best, size)
            return

        while candidates:
            if size + popcount(candidates) <= best:
                return

            v = candidates.bit_length() - 1
            expand(candidates & g.adj[v], size + 1)
            candidates &= ~(1 << v)

    expand(g.mask, 0)

    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def homogeneous_set_size(g: Graph) -> int:
    return max(clique_number(g), independence_number(g))


def automorphism_count(g: Graph) -> int:
    # |Aut(g)| by VF2 matching of the graph onto itself
    if g.n <= 1:
        return 1

    graph = to_networkx(g)

    return sum(1 for _ in GraphMatcher(graph, graph).isomorphisms_iter())


# graph6

def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())

    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    nodes = sorted(graph.nodes())
    index = {v: k for k, v in enumerate(nodes)}

    return make_graph(len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v))


def to_graph6(g: Graph) -> str:
    if g.n == 0:
        return "?"

    data = nx.to_graph6_bytes(to_networkx(g), nodes=list(range(g.n)), header=False)

    return data.decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    text = text.strip()

    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]

    if not text:
        raise InputError("Empty graph6 string")

    if text == "?":
        return empty_graph(0)

    try:
        graph = nx.from_graph6_bytes(text.encode("ascii"))
    except Exception as e:
        raise InputError(f"Malformed graph6 string {text!r}: {e}") from e

    return from_networkx(graph)
