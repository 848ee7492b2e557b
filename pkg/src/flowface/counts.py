"""Direct counts of vertices, edges and low-codimension faces.

These avoid building the whole f-vector. Two of the closed forms here are
not the literal textbook expressions:

* the vertex count is the prefix-supply product
  ``prod_{j<n} (1 + #{i <= j : a_i = 1})``; the signature-based form
  ``k**(c_k-1) prod_{i<k} (i+1)**c_i`` (kept as
  :func:`flow_vertex_count_signature`) returns 1 for ``(1, 0, ..., 0)``
  instead of ``2**(n-1)``;
* the low-codimension sum uses the edge count ``E = C(n+1, 2)`` of
  ``K_{n+1}`` as the top binomial argument, not ``C(n, 2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Sequence

from .compositions import netflow, signature


def cry_vertex_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** (n - 1)


def cry_edge_count(n: int) -> int:
    """``2 * 3**(n-1) - (n+3) * 2**(n-2)`` for ``n >= 2``."""
    if n < 2:
        raise ValueError("the edge-count formula needs n >= 2")
    return 2 * 3 ** (n - 1) - (n + 3) * 2 ** (n - 2)


def flow_vertex_count(a: Sequence[int]) -> int:
    """Number of vertices of ``Flow_n(a)``."""
    a = netflow(a)
    supplies = list(itertools.accumulate(a))
    return prod(1 + s for s in supplies[:-1])


def flow_vertex_count_signature(a: Sequence[int]) -> int:
    """The signature form ``k**(c_k - 1) * prod_{i<k} (i+1)**c_i``; see module docs."""
    c = signature(a)
    k = len(c)
    return k ** (c[-1] - 1) * prod((i + 1) ** c[i - 1] for i in range(1, k))


@dataclass(frozen=True)
class BicoloredPartitionCoeffs:
    """``a_i = [x**i] prod_{k>=1} (1 - x**k)**2`` for ``i = 0..D``."""

    coefficients: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)


def partition_coeffs(D: int) -> BicoloredPartitionCoeffs:
    if D < 0:
        raise ValueError("D must be >= 0")
    series = [1] + [0] * D
    for k in range(1, D + 1):
        for _ in range(2):
            # multiply by (1 - x**k), high degrees first
            for i in range(D, k - 1, -1):
                series[i] -= series[i - k]
    return BicoloredPartitionCoeffs(tuple(series))


def signed_bicolored_partitions(D: int) -> list[int]:
    """Even minus odd numbers of pairs of distinct-part partitions, by total size.

    Direct enumeration, used as an independent check on :func:`partition_coeffs`.
    """
    distinct: dict[int, list[int]] = {m: [] for m in range(D + 1)}
    # parts counts of all distinct-part partitions of m
    for r in range(D + 1):
        for parts in itertools.combinations(range(1, D + 1), r):
            s = sum(parts)
            if s <= D:
                distinct[s].append(r)
    out = [0] * (D + 1)
    for m1 in range(D + 1):
        for m2 in range(D + 1 - m1):
            for r1 in distinct[m1]:
                for r2 in distinct[m2]:
                    out[m1 + m2] += -1 if (r1 + r2) & 1 else 1
    return out


def low_codim_face_count(n: int, d: int) -> int:
    """Primitive faces of CRY_n in dimension ``C(n,2) - d`` for ``1 <= d <= n-1``.

    Also the full face count there when ``d <= n - 2``.
    """
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    E = comb(n + 1, 2)
    coeffs = partition_coeffs(d)
    return sum(coeffs[i] * comb(E - i, d - i) for i in range(d + 1))
