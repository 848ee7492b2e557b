"""Integer compositions, binary netflow vectors and the maps between them.

Compositions are plain tuples of positive ints. Netflow vectors are tuples
of 0/1 with a leading 1. ``beta >= alpha`` in the refinement order means
``beta`` splits the parts of ``alpha``; ``beta <=_c alpha`` means equal
length with every part decreased or kept.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Iterator, Sequence

Composition = tuple[int, ...]
NetflowVector = tuple[int, ...]


def check_composition(alpha: Sequence[int]) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def netflow(a: Sequence[int], strict: bool = False) -> NetflowVector:
    """Canonicalize a nonnegative netflow to its 0/1 support.

    The face structure only depends on which entries are nonzero. With
    ``strict`` anything other than 0/1 is rejected instead. The first entry
    must be nonzero.
    """
    a = tuple(int(v) for v in a)
    if not a:
        raise ValueError("netflow vector must be non-empty")
    if any(v < 0 for v in a):
        raise ValueError(f"netflow entries must be nonnegative: {a}")
    if strict and any(v not in (0, 1) for v in a):
        raise ValueError(f"netflow entries must be 0 or 1: {a}")
    if a[0] == 0:
        raise ValueError("the first netflow entry must be nonzero")
    return tuple(1 if v else 0 for v in a)


def binary_netflows(n: int) -> Iterator[NetflowVector]:
    """All 0/1 vectors of length ``n`` with a leading 1, in lexicographic order."""
    for rest in itertools.product((0, 1), repeat=n - 1):
        yield (1,) + rest


def cry_netflow(n: int) -> NetflowVector:
    return (1,) + (0,) * (n - 1)


@dataclass(frozen=True)
class SubsetMask:
    """A subset of ``{1, ..., n}``."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not 1 <= s <= self.n for s in self.members):
            raise ValueError(f"members must lie in 1..{self.n}: {sorted(self.members)}")

    def rev(self) -> "SubsetMask":
        return SubsetMask(self.n, frozenset(self.n + 1 - s for s in self.members))

    def __len__(self):
        return len(self.members)


def support(a: Sequence[int]) -> frozenset[int]:
    """1-based indices of the nonzero entries."""
    return frozenset(i + 1 for i, v in enumerate(a) if v)


def comp_from_set(S: frozenset[int] | set[int], n: int) -> Composition:
    """The standard map sending ``S`` subset of ``[n-1]`` to a composition of ``n``."""
    cuts = [0] + sorted(S) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def set_from_comp(alpha: Sequence[int]) -> frozenset[int]:
    return frozenset(itertools.accumulate(alpha[:-1]))


def revcomp(a: Sequence[int]) -> Composition:
    """Read ``a`` right to left, starting a new block at every nonzero entry.

    >>> revcomp((1, 1, 0, 0, 1, 0, 1, 0))
    (2, 2, 3, 1)
    """
    a = netflow(a)
    n = len(a)
    tail = SubsetMask(n - 1, support(a[1:])).rev()
    return comp_from_set(tail.members, n)


def revcomp_inverse(alpha: Sequence[int]) -> NetflowVector:
    """The unique 0/1 vector with leading 1 whose revcomp is ``alpha``."""
    alpha = check_composition(alpha)
    # the last part of alpha is the block that starts at a_1
    out: list[int] = []
    for part in alpha[::-1]:
        out.extend([1] + [0] * (part - 1))
    return tuple(out)


def signature(a: Sequence[int]) -> Composition:
    """Sizes of the blocks "1 followed by its trailing zeros", left to right."""
    a = netflow(a)
    sizes: list[int] = []
    for v in a:
        if v:
            sizes.append(1)
        else:
            sizes[-1] += 1
    return tuple(sizes)


def seq(S: SubsetMask | frozenset[int] | set[int], n: int | None = None) -> tuple[int, ...]:
    """``seq_n(S)_j = 1 + #{s in S : s >= j}`` for ``j = 1..n+1``."""
    if isinstance(S, SubsetMask):
        n, members = S.n, S.members
    else:
        members = frozenset(S)
        if n is None:
            raise TypeError("n is required when S is a plain set")
    return tuple(1 + sum(1 for s in members if s >= j) for j in range(1, n + 2))


def descents(sequence: Sequence[int]) -> frozenset[int]:
    """1-based indices ``j`` with ``sequence[j] > sequence[j+1]``."""
    return frozenset(j + 1 for j in range(len(sequence) - 1) if sequence[j] > sequence[j + 1])


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def refinements(alpha: Sequence[int]) -> Iterator[Composition]:
    """Every composition refining ``alpha`` (``alpha`` itself included)."""
    alpha = check_composition(alpha)
    for pieces in itertools.product(*(list(compositions(p)) for p in alpha)):
        yield tuple(itertools.chain.from_iterable(pieces))


def downset_c(alpha: Sequence[int]) -> Iterator[Composition]:
    """All ``beta`` with the same length as ``alpha`` and ``1 <= beta_i <= alpha_i``."""
    alpha = check_composition(alpha)
    return itertools.product(*(range(1, p + 1) for p in alpha))


def k_coeff(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Number of ways to delete zeros turning the vector of ``alpha`` into that of ``beta``."""
    if len(alpha) != len(beta):
        raise ValueError("k_coeff needs compositions of equal length")
    if any(b > a or b < 1 for a, b in zip(alpha, beta)):
        raise ValueError(f"{tuple(beta)} is not below {tuple(alpha)} componentwise")
    return prod(comb(a - 1, a - b) for a, b in zip(alpha, beta))


def count_refinements(alpha: Sequence[int]) -> int:
    return prod(2 ** (p - 1) for p in alpha)
