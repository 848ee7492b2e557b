"""Brute-force face enumeration through subgraphs of the complete DAG.

Faces of ``Flow_n(a)`` (nonnegative ``a``) correspond to subgraphs ``H`` of
``K_{n+1}`` that support an ``a``-flow, and the face dimension is the first
Betti number ``|E| - |V| + c``. The empty face is the empty subgraph.

Validity is decided by reachability. On a DAG with nonnegative supplies, a
flow decomposes into supply-to-sink paths, so ``H`` is the support of a flow
iff every supply reaches the sink and every edge lies on some path that
starts at a supply and ends at the sink. Conversely, routing a small amount
along one such path per edge and the remaining supply along any path gives a
strictly positive flow.

Vertices are 0-based internally (``v_1`` is 0, the sink ``v_{n+1}`` is
``n``); the public edge labels stay 1-based.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .compositions import netflow
from .facecount import FVector

DEFAULT_MAX_N = 6
ENV_MAX_N = "FLOWFACE_MAX_ORACLE_N"


class OracleCapError(ValueError):
    """Requested enumeration is larger than the configured cap."""


def max_oracle_n() -> int:
    return int(os.environ.get(ENV_MAX_N, DEFAULT_MAX_N))


@lru_cache(maxsize=None)
def edge_list(n: int) -> tuple[tuple[int, int], ...]:
    """Edges ``(i, j)``, ``1 <= i < j <= n+1``, in lexicographic order (bit k = edge k)."""
    return tuple((i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2))


@lru_cache(maxsize=None)
def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(edge_list(n))}


@dataclass(frozen=True)
class Subgraph:
    """Edge subset of ``K_{n+1}`` stored as a bitset over :func:`edge_list`."""

    n: int
    edges: int = 0

    def __post_init__(self):
        if self.edges < 0 or self.edges >> len(edge_list(self.n)):
            raise ValueError(f"edge bitset does not fit K_{self.n + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Subgraph":
        idx = _edge_index(n)
        bits = 0
        for e in edges:
            e = tuple(e)
            if e not in idx:
                raise ValueError(f"{e} is not an edge of K_{n + 1}")
            bits |= 1 << idx[e]
        return cls(n, bits)

    @classmethod
    def from_out_masks(cls, n: int, out: Sequence[int]) -> "Subgraph":
        return cls.from_edges(n, ((i + 1, j + 1) for i, m in enumerate(out)
                                  for j in range(n + 1) if m >> j & 1))

    def edge_set(self) -> list[tuple[int, int]]:
        return [e for k, e in enumerate(edge_list(self.n)) if self.edges >> k & 1]

    def out_masks(self) -> list[int]:
        out = [0] * (self.n + 1)
        for i, j in self.edge_set():
            out[i - 1] |= 1 << (j - 1)
        return out

    def vertices(self) -> set[int]:
        return {v for e in self.edge_set() for v in e}

    def __len__(self):
        return bin(self.edges).count("1")


def _bitcount(m: int) -> int:
    return bin(m).count("1")


def _valid_masks(out: Sequence[int], supplies: int, n: int) -> bool:
    sink = 1 << n
    reach = sink
    for i in range(n - 1, -1, -1):
        if out[i] & reach:
            reach |= 1 << i
    if supplies & ~reach:
        return False
    fwd = supplies
    for i in range(n):
        m = out[i]
        if m:
            if not fwd >> i & 1 or m & ~reach:
                return False
            fwd |= m
    return True


def _betti_masks(out: Sequence[int], n: int) -> tuple[int, bool]:
    """First Betti number and whether ``H`` spans all vertices and is connected."""
    adj = [0] * (n + 1)
    edges = 0
    for i, m in enumerate(out):
        if m:
            edges += _bitcount(m)
            adj[i] |= m
            for j in range(i + 1, n + 1):
                if m >> j & 1:
                    adj[j] |= 1 << i
    verts = 0
    for i, m in enumerate(adj):
        if m:
            verts |= 1 << i
    nverts = _bitcount(verts)
    comps = 0
    left = verts
    while left:
        comps += 1
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        left &= ~seen
    primitive = nverts == n + 1 and comps == 1
    return edges - nverts + comps, primitive


def _supplies(a: Sequence[int]) -> int:
    return sum(1 << i for i, v in enumerate(a) if v)


def is_valid(H: Subgraph, a: Sequence[int]) -> bool:
    """Whether ``H`` is the support of an ``a``-flow (the empty graph never is)."""
    a = netflow(a)
    if H.n != len(a):
        raise ValueError(f"subgraph of K_{H.n + 1} does not match netflow of length {len(a)}")
    if not H.edges:
        return False
    return _valid_masks(H.out_masks(), _supplies(a), H.n)


def betti(H: Subgraph) -> int:
    """``|E| - |V| + c`` with ``V`` the set of edge endpoints."""
    return _betti_masks(H.out_masks(), H.n)[0]


def is_primitive(H: Subgraph) -> bool:
    return _betti_masks(H.out_masks(), H.n)[1]


def flow_certificate(H: Subgraph, a: Sequence[int]) -> dict[tuple[int, int], Fraction] | None:
    """A strictly positive ``a``-flow supported exactly on ``H``, or ``None``.

    Independent of :func:`is_valid`: explicit BFS paths, exact rational
    arithmetic and a final conservation check. For each edge an ``a``-flow
    routing all supply through that edge's path is built; their average is
    positive on every edge of ``H``.
    """
    a = netflow(a)
    n = H.n
    edges = H.edge_set()
    if not edges:
        return None
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 2)}
    pred: dict[int, list[int]] = {v: [] for v in range(1, n + 2)}
    for i, j in edges:
        succ[i].append(j)
        pred[j].append(i)

    def path(start: int, goal_set: set[int], nbrs) -> list[int] | None:
        prev = {start: None}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if u in goal_set:
                out = [u]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return out[::-1]
            for w in nbrs[u]:
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        return None

    supplies = {i + 1 for i, v in enumerate(a) if v}
    sink = n + 1
    to_sink = {}
    for s in supplies:
        p = path(s, {sink}, succ)
        if p is None:
            return None
        to_sink[s] = p

    flows = []
    for (u, w) in edges:
        back = path(u, supplies, pred)  # u ... s, walking backwards
        fwd = path(w, {sink}, succ)
        if back is None or fwd is None:
            return None
        src = back[-1]
        routes = dict(to_sink)
        routes[src] = back[::-1] + fwd
        f: dict[tuple[int, int], Fraction] = {}
        for s, p in routes.items():
            for e in zip(p, p[1:]):
                f[e] = f.get(e, Fraction(0)) + a[s - 1]
        flows.append(f)

    total = {e: sum((f.get(e, Fraction(0)) for f in flows), Fraction(0)) / len(flows)
             for e in edges}
    if any(v <= 0 for v in total.values()):
        return None
    for v in range(1, n + 1):
        net = sum(total[(v, w)] for w in succ[v]) - sum(total[(u, v)] for u in pred[v])
        if net != a[v - 1]:
            return None
    return total


def in_omega(H: Subgraph) -> bool:
    """Every vertex of ``H`` lies on a directed path from ``v_1`` to ``v_{n+1}``."""
    if not H.edges:
        return True
    n = H.n
    succ: dict[int, set[int]] = {v: set() for v in range(1, n + 2)}
    pred: dict[int, set[int]] = {v: set() for v in range(1, n + 2)}
    for i, j in H.edge_set():
        succ[i].add(j)
        pred[j].add(i)

    def closure(start: int, nbrs) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    on_path = closure(1, succ) & closure(n + 1, pred)
    return H.vertices() <= on_path


# -- enumeration -----------------------------------------------------------

def _check_cap(n: int, cap: int | None) -> None:
    cap = max_oracle_n() if cap is None else cap
    if n > cap:
        raise OracleCapError(f"n = {n} exceeds the enumeration cap {cap} "
                             f"(raise it with {ENV_MAX_N} or --max-n)")


def _mask_choices(n: int) -> list[range]:
    # vertex i (0-based) may point at i+1..n
    return [range(0, 1 << (n + 1), 1 << (i + 1)) for i in range(n)]


def _iter_out_masks(n: int, first: Iterable[int]) -> Iterator[tuple[int, ...]]:
    choices = _mask_choices(n)
    return itertools.product(first, *choices[1:])


def _scan(args) -> tuple[Counter, Counter]:
    a, lo, hi = args
    n = len(a)
    supplies = _supplies(a)
    first = _mask_choices(n)[0][lo:hi]
    full: Counter = Counter()
    prim: Counter = Counter()
    for out in _iter_out_masks(n, first):
        if not any(out) or not _valid_masks(out, supplies, n):
            continue
        b, p = _betti_masks(out, n)
        full[b] += 1
        if p:
            prim[b] += 1
    return full, prim


def betti_profiles(a: Sequence[int], cap: int | None = None, jobs: int = 1) -> tuple[Counter, Counter]:
    """Counts of valid subgraphs (and of primitive ones) by Betti number.

    All ``2**(n(n+1)/2)`` edge subsets are visited. The index space is split
    into contiguous ranges of ``v_1``'s out-edge choices; per-range counters
    are summed, so the result does not depend on ``jobs``.
    """
    a = netflow(a)
    n = len(a)
    _check_cap(n, cap)
    width = len(_mask_choices(n)[0])
    parts = max(1, min(jobs, width))
    bounds = [width * k // parts for k in range(parts + 1)]
    tasks = [(a, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
    if parts == 1:
        results = [_scan(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            results = list(pool.map(_scan, tasks))
    full: Counter = Counter()
    prim: Counter = Counter()
    for f, p in results:
        full.update(f)
        prim.update(p)
    return full, prim


def _profile_to_fvector(profile: Counter, empty: int) -> FVector:
    top = max(profile, default=-1)
    return FVector((empty,) + tuple(profile.get(d, 0) for d in range(top + 1)))


def enumerate_fvector(a: Sequence[int], cap: int | None = None, jobs: int = 1) -> FVector:
    full, _ = betti_profiles(a, cap, jobs)
    return _profile_to_fvector(full, 1)


def enumerate_primitive_fvector(a: Sequence[int], cap: int | None = None, jobs: int = 1) -> FVector:
    _, prim = betti_profiles(a, cap, jobs)
    return _profile_to_fvector(prim, 0)


def valid_subgraphs(a: Sequence[int], primitive: bool = False, betti_number: int | None = None,
                    cap: int | None = None) -> Iterator[Subgraph]:
    """Yield valid subgraphs (optionally only primitive ones, or one Betti number)."""
    a = netflow(a)
    n = len(a)
    _check_cap(n, cap)
    supplies = _supplies(a)
    for out in _iter_out_masks(n, _mask_choices(n)[0]):
        if not any(out) or not _valid_masks(out, supplies, n):
            continue
        if primitive or betti_number is not None:
            b, p = _betti_masks(out, n)
            if primitive and not p:
                continue
            if betti_number is not None and b != betti_number:
                continue
        yield Subgraph.from_out_masks(n, out)


def vertex_tuple(H: Subgraph, a: Sequence[int]) -> tuple[int, ...]:
    """Interval tuple ``(s_1, ..., s_{n-1})`` of a vertex (Betti-0 valid subgraph).

    The flow out of ``v_i`` leaves along a single edge to ``v_{i'}``;
    ``s_{i-1}`` is the flow carried into ``[v_i, v_{i'-1}]`` by edges whose
    tail lies left of ``v_i``. An unused ``v_i`` gets 0.
    """
    a = netflow(a)
    n = H.n
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 2)}
    for i, j in H.edge_set():
        succ[i].append(j)
    if any(len(s) > 1 for s in succ.values()):
        raise ValueError("a vertex of the polytope has out-degree at most 1 everywhere")
    flow: dict[tuple[int, int], int] = {}
    inflow = [0] * (n + 2)
    for v in range(1, n + 1):
        if succ[v]:
            (w,) = succ[v]
            flow[(v, w)] = a[v - 1] + inflow[v]
            inflow[w] += flow[(v, w)]
    tup = []
    for i in range(2, n + 1):
        end = succ[i][0] - 1 if succ[i] else i
        tup.append(sum(f for (u, w), f in flow.items() if u < i <= w <= end))
    return tuple(tup)


def vertex_tuples(a: Sequence[int], cap: int | None = None) -> list[tuple[int, ...]]:
    a = netflow(a)
    return [vertex_tuple(H, a) for H in valid_subgraphs(a, betti_number=0, cap=cap)]


def subgraph_to_dot(H: Subgraph, name: str = "H") -> str:
    """One ``digraph`` block with vertices ``v1 .. v{n+1}``."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in range(1, H.n + 2):
        lines.append(f"  v{v};")
    for i, j in H.edge_set():
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def family_to_dot(graphs: Iterable[Subgraph]) -> str:
    return "".join(subgraph_to_dot(H, f"H{k}") for k, H in enumerate(graphs))
