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
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .. import glovar
from .errors import InputError, InvariantError
from .graph import Graph, bits, popcount

# Enable logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field GF(p)."""

    p: int = 2

    def __post_init__(self) -> None:
        if not 2 <= self.p < 2 ** 31 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise InputError(f"GF({self.p}) is not a prime field below 2^31")


def default_field() -> FieldSpec:
    return FieldSpec(glovar.prime)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces by dimension as vertex bitsets, recorded for dimensions lo..hi.

    ``complete`` means every dimension above ``hi`` is known to be empty.
    """

    n: int
    faces: Dict[int, Tuple[int, ...]]
    lo: int = -1
    hi: int = -1
    complete: bool = True

    def dimension(self) -> int:
        return max((d for d, faces in self.faces.items() if faces), default=-2)


@dataclass(frozen=True)
class HomologyProfile:
    """Non-zero reduced Betti numbers dim H~_i, keyed by degree."""

    dims: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def to_json(self) -> Dict[str, int]:
        return {str(i): v for i, v in sorted(self.dims.items())}


def independent_sets(g: Graph, within: int, largest: int) -> List[int]:
    # Independent subsets of within with at most largest vertices, including the empty set
    result = [0]

    def extend(face: int, candidates: int, size: int) -> None:
        if size == largest:
            return

        for v in bits(candidates):
            grown = face | 1 << v
            result.append(grown)
            # Only higher vertices, so every set is produced once
            extend(grown, candidates & ~g.adj[v] & ~((2 << v) - 1), size + 1)

    extend(0, within, 0)

    return result


def complex_on(g: Graph, within: int, lo: int = -1, hi: Optional[int] = None) -> SimplicialComplex:
    # Ind(g[within]) restricted to dimensions lo..hi, vertices keep their labels in g
    lo = max(lo, -1)
    largest = popcount(within) if hi is None else hi + 1
    grouped: Dict[int, List[int]] = {}

    for face in independent_sets(g, within, max(largest, 0)):
        grouped.setdefault(popcount(face) - 1, []).append(face)

    if hi is None:
        hi = max(grouped) + 1

    faces = {d: tuple(sorted(grouped.get(d, ()))) for d in range(lo, hi + 1)}

    return SimplicialComplex(g.n, faces, lo, hi, complete=largest >= popcount(within))


def independence_complex(g: Graph, lo: int = -1, hi: Optional[int] = None) -> SimplicialComplex:
    """Ind(g): the independent sets of g as faces, a face of k vertices has dimension k-1.

    With ``lo``/``hi`` only those dimensions are generated, which is all a single
    homology degree needs.
    """
    return complex_on(g, g.mask, lo, hi)


def f_vector(c: SimplicialComplex) -> List[int]:
    # Face counts from dimension lo upwards
    top = c.dimension()
    return [len(c.faces.get(d, ())) for d in range(c.lo, max(top, c.lo - 1) + 1)]


def euler_characteristic(c: SimplicialComplex) -> int:
    # Reduced, the empty face counts at dimension -1
    return sum((-1) ** d * len(faces) for d, faces in c.faces.items())


def rank_gf2(rows: List[int]) -> int:
    # Rows packed as ints, pivots kept by leading bit
    pivots: Dict[int, int] = {}

    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = pivots.get(top)

            if pivot is None:
                pivots[top] = row
                break

            row ^= pivot

    return len(pivots)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    # Gaussian elimination over GF(p), entries stay below p so products fit int64
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape if m.ndim == 2 else (0, 0)
    rank = 0

    for col in range(cols):
        if rank == rows:
            break

        nonzero = np.nonzero(m[rank:, col])[0]

        if nonzero.size == 0:
            continue

        pivot = rank + int(nonzero[0])

        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]

        m[rank] = m[rank] * pow(int(m[rank, col]), p - 2, p) % p
        factors = m[rank + 1:, col].copy()

        if factors.any():
            m[rank + 1:] = (m[rank + 1:] - np.outer(factors, m[rank])) % p

        rank += 1

    return rank


def boundary_rank(c: SimplicialComplex, d: int, f: FieldSpec) -> int:
    # Rank of the boundary map from d-faces to (d-1)-faces
    if d < 0:
        return 0

    upper = c.faces.get(d, ())
    lower = c.faces.get(d - 1, ())

    if not upper or not lower:
        return 0

    index = {face: k for k, face in enumerate(lower)}

    if any(face & ~(1 << v) not in index for face in upper for v in bits(face)):
        raise InvariantError(f"Dimension {d} has a face whose facet is missing")

    if f.p == 2:
        rows = []

        for face in upper:
            row = 0

            for v in bits(face):
                row |= 1 << index[face & ~(1 << v)]

            rows.append(row)

        return rank_gf2(rows)

    matrix = np.zeros((len(upper), len(lower)), dtype=np.int64)

    for r, face in enumerate(upper):
        for position, v in enumerate(bits(face)):
            matrix[r, index[face & ~(1 << v)]] = 1 if position % 2 == 0 else f.p - 1

    return rank_mod_p(matrix, f.p)


def check_closed(c: SimplicialComplex) -> None:
    # Every face minus one vertex is a face one dimension down
    for d in range(c.lo + 1, max(c.hi, c.dimension()) + 1):
        lower = set(c.faces.get(d - 1, ()))
        faces = c.faces.get(d, ())

        if len(set(faces)) != len(faces):
            raise InvariantError(f"Repeated face in dimension {d}")

        for face in faces:
            if popcount(face) != d + 1:
                raise InvariantError(f"Face {face:b} is filed under dimension {d}")

            for v in bits(face):
                if face & ~(1 << v) not in lower:
                    raise InvariantError(f"Face {face:b} misses the facet {face & ~(1 << v):b}")


def homology_in_degree(c: SimplicialComplex, i: int, f: FieldSpec) -> int:
    # dim H~_i from the faces in dimensions i-1, i, i+1
    if i < -1:
        return 0

    if c.lo > max(i - 1, -1) or (c.hi < i + 1 and not c.complete):
        raise InputError(f"Complex records dimensions {c.lo}..{c.hi}, degree {i} needs {i - 1}..{i + 1}")

    size = len(c.faces.get(i, ()))

    return size - boundary_rank(c, i, f) - boundary_rank(c, i + 1, f)


def reduced_homology(c: SimplicialComplex, f: FieldSpec) -> HomologyProfile:
    if c.lo != -1 or not c.complete:
        raise InputError("Full reduced homology needs every dimension of the complex")

    check_closed(c)
    dims = {}

    for i in range(-1, c.dimension() + 1):
        value = homology_in_degree(c, i, f)

        if value < 0:
            raise InvariantError(f"Negative homology in degree {i}")

        if value:
            dims[i] = value

    return HomologyProfile(dims)


def profile_on(g: Graph, within: int, f: FieldSpec) -> Dict[int, int]:
    # Homology of Ind(g[within]) without the closure check, for Hochster sums
    c = complex_on(g, within)
    result = {}

    for i in range(-1, c.dimension() + 1):
        value = homology_in_degree(c, i, f)

        if value:
            result[i] = value

    return result
