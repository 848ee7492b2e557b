"""Primitive Fishburn matrices and spanning connected subgraphs of CRY_n.

Cell ``(i, j)`` (0-based, ``i <= j``) of an ``n x n`` matrix is the edge
``(v_{i+1}, v_{j+2})`` of ``K_{n+1}``, so the path ``v_1 -> ... -> v_{n+1}``
is the identity matrix::

    edges of K_4          matrix cells
    (1,2) (1,3) (1,4)     [0,0] [0,1] [0,2]
          (2,3) (2,4)           [1,1] [1,2]
                (3,4)                 [2,2]

A zero row ``i`` means ``v_{i+1}`` has no out-edge, a zero column ``j``
means ``v_{j+2}`` has no in-edge.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .oracle import Subgraph, in_omega, is_primitive


@dataclass(frozen=True)
class FishburnMatrix:
    """Upper-triangular 0/1 matrix with no zero row and no zero column."""

    size: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.size
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} matrix")
        for i, r in enumerate(rows):
            if any(v not in (0, 1) for v in r):
                raise ValueError("primitive Fishburn matrices have 0/1 entries")
            if any(r[j] for j in range(i)):
                raise ValueError("entries below the diagonal must be zero")
            if not any(r):
                raise ValueError(f"row {i} is zero")
        for j in range(n):
            if not any(rows[i][j] for i in range(n)):
                raise ValueError(f"column {j} is zero")

    def ones(self) -> int:
        return sum(map(sum, self.rows))

    def upper_triangle(self) -> list[list[int]]:
        """Row-major upper triangle: row ``i`` holds cells ``(i, i..n-1)``."""
        return [list(r[i:]) for i, r in enumerate(self.rows)]

    @classmethod
    def from_upper_triangle(cls, tri: Sequence[Sequence[int]]) -> "FishburnMatrix":
        n = len(tri)
        rows = [[0] * i + list(tri[i]) for i in range(n)]
        return cls(n, tuple(map(tuple, rows)))


def graph_to_matrix(H: Subgraph) -> FishburnMatrix:
    if not (H.edges and in_omega(H) and is_primitive(H)):
        raise ValueError("graph_to_matrix needs a spanning connected graph of Omega'_n")
    n = H.n
    rows = [[0] * n for _ in range(n)]
    for i, j in H.edge_set():
        rows[i - 1][j - 2] = 1
    return FishburnMatrix(n, tuple(map(tuple, rows)))


def matrix_to_graph(M: FishburnMatrix) -> Subgraph:
    return Subgraph.from_edges(M.size, ((i + 1, j + 2) for i in range(M.size)
                                        for j in range(i, M.size) if M.rows[i][j]))


def primitive_fishburn_matrices(n: int) -> Iterator[FishburnMatrix]:
    """All size-``n`` primitive Fishburn matrices, by direct enumeration of 0/1 triangles."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for bits in itertools.product((0, 1), repeat=len(cells)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), b in zip(cells, bits):
            rows[i][j] = b
        if all(any(r) for r in rows) and all(any(rows[i][j] for i in range(n)) for j in range(n)):
            yield FishburnMatrix(n, tuple(map(tuple, rows)))


def matrices_to_json(matrices: Sequence[FishburnMatrix]) -> str:
    return json.dumps([{"size": M.size, "upper": M.upper_triangle()} for M in matrices],
                      separators=(",", ":"))


def matrices_from_json(text: str) -> list[FishburnMatrix]:
    return [FishburnMatrix.from_upper_triangle(d["upper"]) for d in json.loads(text)]
