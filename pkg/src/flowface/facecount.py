"""Closed formulas for f-polynomials of flow polytopes of the complete graph.

Several independent routes compute the same polynomials and are checked
against each other in the tests:

* :func:`primitive_fpoly_subsets` - inclusion-exclusion over subsets of ``[n-1]``
* :func:`primitive_fpoly` - the same sum reorganised over refinements of ``revcomp(a)``
* :func:`fpoly_from_primitive` - f from primitive f over zero deletions
* :func:`fpoly_main` - the one-shot refinement sum with ``pi`` factors
* :func:`cry_fpoly`, :func:`cry_primitive_fpoly` - complete homogeneous
  specialisations for ``a = (1, 0, ..., 0)``

Signs: every refinement sum carries ``(-1)**(|alpha| - len(beta))``. The
variant ``(-1)**(len(alpha) - len(beta))`` disagrees with small cases
(``n = 2`` gives ``1/x - (x + 2)``) and is not used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Sequence

from .compositions import (
    Composition,
    check_composition,
    cry_netflow,
    downset_c,
    k_coeff,
    netflow,
    refinements,
    revcomp,
    revcomp_inverse,
    seq,
    support,
)
from .laurent import ONE, X, XINV, ZERO, LaurentPoly, pi, poly_sum, xp1_pow

# Largest |alpha| accepted by helper_identity_check.
HELPER_IDENTITY_MAX_SIZE = 12


@dataclass(frozen=True)
class FVector:
    """Face numbers indexed by dimension ``d = -1, 0, 1, ...``."""

    entries: tuple[int, ...]

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "FVector":
        if p.is_zero():
            return cls((0,))
        if p.lowest() < -1:
            raise ValueError(f"f-polynomials have no exponent below -1: {p!r}")
        return cls(tuple(p.to_list(low=-1)))

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.entries, low=-1)

    def __getitem__(self, d: int) -> int:
        i = d + 1
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    @property
    def top_dim(self) -> int:
        return len(self.entries) - 2

    def as_dict(self) -> dict[int, int]:
        return {d - 1: v for d, v in enumerate(self.entries)}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


# -- evaluation points --------------------------------------------------------

@lru_cache(maxsize=None)
def primitive_slots(n: int) -> tuple[LaurentPoly, ...]:
    """``x_i = (x+1)**i - 1`` for ``i = 1..n``."""
    return tuple(xp1_pow(i) - 1 for i in range(1, n + 1))


@lru_cache(maxsize=None)
def main_slots(n: int) -> tuple[LaurentPoly, ...]:
    """``x_i = (x+1)**i - (x+1)`` for ``i = 1..n`` (``x_1`` is zero)."""
    return tuple(xp1_pow(i) - xp1_pow(1) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _pi_x(k: int) -> LaurentPoly:
    return pi(k, X)


def _one_like(values: Sequence[Any]):
    if values and isinstance(values[0], LaurentPoly):
        return ONE
    return 1


class _Powers:
    """Memoised ``values[i] ** k``."""

    def __init__(self, values: Sequence[Any]):
        self.values = values
        self.one = _one_like(values)
        self.cache: dict[tuple[int, int], Any] = {}

    def __call__(self, i: int, k: int):
        if k == 0:
            return self.one
        key = (i, k)
        if key not in self.cache:
            self.cache[key] = self(i, k - 1) * self.values[i]
        return self.cache[key]


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


# -- generic polynomial evaluations ------------------------------------------

def p_alpha_eval(alpha: Sequence[int], values: Sequence[Any]):
    """``P_alpha = sum_{beta refines alpha} (-1)**(|alpha|-len(beta)) x**beta`` at ``values``.

    ``values[i-1]`` is substituted for ``x_i``. Works over any commutative
    ring whose elements support ``+`` and ``*`` (ints, LaurentPoly, sympy).
    """
    alpha = check_composition(alpha)
    size = sum(alpha)
    if len(values) < size:
        raise ValueError(f"P_alpha needs {size} slots, got {len(values)}")
    pw = _Powers(values)
    total = 0
    for beta in refinements(alpha):
        term = pw.one
        for i, b in enumerate(beta):
            term = term * pw(i, b)
        total = total + _sign(size - len(beta)) * term
    return total


def h_complete_eval(m: int, values: Sequence[Any]):
    """Complete homogeneous symmetric polynomial ``h_m`` at ``values``."""
    one = _one_like(values)
    if m == 0:
        return one
    if not values:
        return 0 * one
    # row[j] = h_j(values[:k]) after processing k values
    row = [one] + [0 * one] * m
    for v in values:
        for j in range(1, m + 1):
            row[j] = row[j] + v * row[j - 1]
    return row[m]


# -- primitive f-polynomials ---------------------------------------------------

def primitive_fpoly_subsets(a: Sequence[int]) -> LaurentPoly:
    """Primitive f-polynomial by inclusion-exclusion over ``supp(a') <= S <= [n-1]``."""
    a = netflow(a)
    n = len(a)
    base = support(a[1:])
    free = [i for i in range(1, n) if i not in base]
    terms = []
    for mask in range(1 << len(free)):
        S = set(base) | {free[k] for k in range(len(free)) if mask >> k & 1}
        term = ONE
        for e in seq(S, n - 1):
            term = term * (xp1_pow(e) - 1)
        terms.append(_sign(len(S) + n + 1) * term)
    total = poly_sum(terms)
    return total.div_xpow(n, min_exp=0)


@lru_cache(maxsize=None)
def _primitive_fpoly(a: tuple[int, ...]) -> LaurentPoly:
    n = len(a)
    return p_alpha_eval(revcomp(a), primitive_slots(n)).div_xpow(n, min_exp=0)


def primitive_fpoly(a: Sequence[int]) -> LaurentPoly:
    """Primitive f-polynomial as ``x**-n P_alpha(x, (x+1)**2-1, ..., (x+1)**n-1)``."""
    return _primitive_fpoly(netflow(a))


def primitive_fpoly_terms(a: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """``(k_{a,b}, b)`` pairs for every ``b`` reachable from ``a`` by deleting zeros."""
    alpha = revcomp(netflow(a))
    return [(k_coeff(alpha, beta), revcomp_inverse(beta)) for beta in downset_c(alpha)]


def fpoly_from_primitive(a: Sequence[int]) -> LaurentPoly:
    """``1/x + sum_b k_{a,b} primitive_fpoly(b)`` over zero deletions ``b`` of ``a``."""
    return XINV + poly_sum(k * primitive_fpoly(b) for k, b in primitive_fpoly_terms(a))


def fpoly_main(a: Sequence[int]) -> LaurentPoly:
    """f-polynomial from a single refinement sum with ``pi`` factors.

    ``1/x + x**-n sum_{beta refines alpha} (-1)**(n-len(beta)) pi_{len(beta)}(x)
    prod_i ((x+1)**i - (x+1))**(beta_i - 1)`` with ``alpha = revcomp(a)``.
    """
    a = netflow(a)
    n = len(a)
    alpha = revcomp(a)
    pw = _Powers(main_slots(n))
    terms = []
    for beta in refinements(alpha):
        if beta[0] > 1:
            continue  # x_1 = 0 kills the monomial
        term = _pi_x(len(beta))
        for i, b in enumerate(beta):
            if b > 1:
                term = term * pw(i, b - 1)
        terms.append(_sign(n - len(beta)) * term)
    return XINV + poly_sum(terms).div_xpow(n, min_exp=0)


# -- CRY specialisations --------------------------------------------------------

def cry_fpoly(n: int, allow_zero: bool = False) -> LaurentPoly:
    """f-polynomial of CRY_n from complete homogeneous evaluations.

    The ``m`` sum runs to ``n - 1``; the extra ``m = n - 1`` term vanishes
    for ``n >= 2`` and supplies the constant 1 at ``n = 1``. ``n = 0`` is
    only accepted with ``allow_zero`` and returns ``1/x + 1`` by convention.
    """
    if n == 0 and allow_zero:
        return XINV + ONE
    if n < 1:
        raise ValueError("n must be >= 1")
    slots = primitive_slots(n)
    terms = []
    for m in range(n):
        h = h_complete_eval(m, slots[: n - m - 1])
        terms.append(_sign(m) * xp1_pow(m) * _pi_x(n - m) * h)
    return XINV + poly_sum(terms).div_xpow(n, min_exp=0)


def cry_primitive_fpoly(n: int, allow_zero: bool = False) -> LaurentPoly:
    """Primitive f-polynomial of CRY_n; ``n = 0`` gives 1 under ``allow_zero``."""
    if n == 0 and allow_zero:
        return ONE
    if n < 1:
        raise ValueError("n must be >= 1")
    slots = primitive_slots(n)
    terms = []
    for m in range(n):
        h = h_complete_eval(m, slots[: n - m])
        terms.append(_sign(m) * _pi_x(n - m) * h)
    return poly_sum(terms).div_xpow(n, min_exp=0)


def cry_face_count_binomial(n: int, d: int) -> int:
    """``sum_i C(n-1, i) * primitive_f^{(n-i)}_d``; equals ``f^{(n)}_d`` for ``d >= 0``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(comb(n - 1, i) * cry_primitive_fpoly(n - i)[d] for i in range(n))


# -- the multivariate identity behind the main formula ----------------------

def helper_identity_sides(alpha: Sequence[int], values: Sequence[Any]):
    """Both sides of the identity that turns the downset sum into the refinement sum.

    Left: ``sum_{beta <=_c alpha} x_1**(|alpha|-|beta|) k(alpha, beta) P_beta``.
    Right: ``sum_{beta refines alpha} (-1)**(|alpha|-len(beta)) prod_i x_i (x_i - x_1)**(beta_i-1)``.
    """
    alpha = check_composition(alpha)
    size = sum(alpha)
    x1 = values[0]
    one = _one_like(values)
    lhs = 0 * one
    for beta in downset_c(alpha):
        lhs = lhs + k_coeff(alpha, beta) * x1 ** (size - sum(beta)) * p_alpha_eval(beta, values)
    rhs = 0 * one
    for beta in refinements(alpha):
        term = one
        for i, b in enumerate(beta):
            term = term * values[i] * (values[i] - x1) ** (b - 1)
        rhs = rhs + _sign(size - len(beta)) * term
    return lhs, rhs


def helper_identity_check(alpha: Sequence[int], trials: int = 30, seed: int = 0,
                          low: int = -20, high: int = 20) -> bool:
    """Check the identity at ``trials`` random integer points in ``[low, high]``."""
    alpha = check_composition(alpha)
    size = sum(alpha)
    if size > HELPER_IDENTITY_MAX_SIZE:
        raise ValueError(f"|alpha| = {size} exceeds {HELPER_IDENTITY_MAX_SIZE}")
    rng = random.Random(f"{seed}:{alpha}")
    for _ in range(trials):
        point = [rng.randint(low, high) for _ in range(size)]
        lhs, rhs = helper_identity_sides(alpha, point)
        if lhs != rhs:
            return False
    return True


def cry_fvector(n: int) -> FVector:
    return FVector.from_poly(cry_fpoly(n))


def cry_primitive_fvector(n: int) -> FVector:
    return FVector.from_poly(cry_primitive_fpoly(n))


__all__ = [
    "FVector",
    "primitive_slots",
    "main_slots",
    "p_alpha_eval",
    "h_complete_eval",
    "primitive_fpoly_subsets",
    "primitive_fpoly",
    "primitive_fpoly_terms",
    "fpoly_from_primitive",
    "fpoly_main",
    "cry_fpoly",
    "cry_primitive_fpoly",
    "cry_face_count_binomial",
    "helper_identity_sides",
    "helper_identity_check",
    "cry_fvector",
    "cry_primitive_fvector",
    "cry_netflow",
]
