"""Exact Laurent polynomials in ``x`` and truncated power series in ``t``.

Coefficients are Python ints, so every computation is exact. A
:class:`LaurentPoly` is stored sparsely as ``{exponent: coefficient}`` with
zero coefficients dropped on construction, which makes ``==`` structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence, Union


class InexactDivisionError(ArithmeticError):
    """A division by a power of ``x`` left terms below the allowed exponent."""


class LaurentPoly:
    """Immutable Laurent polynomial over the integers in one variable ``x``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """Build from a dense coefficient list whose first entry has exponent ``low``."""
        return cls({low + i: v for i, v in enumerate(coeffs)})

    # -- inspection -------------------------------------------------------
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._c)

    def lowest(self) -> int:
        if not self._c:
            raise ValueError("lowest exponent of the zero polynomial is undefined")
        return min(self._c)

    def to_list(self, low: int | None = None) -> list[int]:
        """Dense coefficients from exponent ``low`` (default: lowest) up to the degree."""
        if not self._c:
            return []
        lo = self.lowest() if low is None else low
        return [self._c.get(e, 0) for e in range(lo, self.degree() + 1)]

    def __call__(self, value):
        """Evaluate at ``value``; negative exponents need an invertible value."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * value**e
            else:
                total += v * Fraction(1, value) ** (-e)
        return total

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({e * k: v ** (-k)})
            raise ValueError("negative powers only exist for unit monomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def div_xpow(self, k: int, min_exp: int = 0) -> "LaurentPoly":
        """Exact division by ``x**k``; every resulting exponent must be >= ``min_exp``."""
        out = self.shift(-k)
        if out._c and out.lowest() < min_exp:
            raise InexactDivisionError(
                f"division by x^{k} leaves exponent {out.lowest()} < {min_exp}"
            )
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = []
        for e, v in self.items():
            if e == 0:
                terms.append(f"{v}")
            elif e == 1:
                terms.append(f"{v}*x")
            else:
                terms.append(f"{v}*x^{e}")
        return "LaurentPoly(" + " + ".join(terms) + ")"


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    if not p._c or not q._c:
        return ZERO
    out: dict[int, int] = {}
    qi = list(q._c.items())
    for e1, v1 in p._c.items():
        for e2, v2 in qi:
            e = e1 + e2
            out[e] = out.get(e, 0) + v1 * v2
    return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
X = LaurentPoly({1: 1})
XINV = LaurentPoly({-1: 1})


def poly_sum(terms: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[int, int] = {}
    for p in terms:
        for e, v in p._c.items():
            acc[e] = acc.get(e, 0) + v
    return LaurentPoly(acc)


@lru_cache(maxsize=None)
def xp1_pow(i: int) -> LaurentPoly:
    """``(x+1)**i`` for ``i >= 0``, cached."""
    return LaurentPoly({k: comb(i, k) for k in range(i + 1)})


def pi(k: int, x0: Union[LaurentPoly, int] = X):
    """``prod_{i=1..k} ((x0+1)**i - 1)``; works for ints and LaurentPoly alike."""
    result = 1 if isinstance(x0, int) else ONE
    for i in range(1, k + 1):
        result = result * ((x0 + 1) ** i - 1)
    return result


def q_factorial_shifted(n: int) -> LaurentPoly:
    """``[n]_{x+1}! = prod_{i=1..n} (1 + (x+1) + ... + (x+1)**(i-1))``."""
    result = ONE
    for i in range(1, n + 1):
        result = result * poly_sum(xp1_pow(j) for j in range(i))
    return result


class TruncatedSeries:
    """Power series ``sum_k c_k t**k`` kept up to ``t**order``, with LaurentPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[LaurentPoly | int], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [LaurentPoly._coerce(c) for c in list(coeffs)[: order + 1]]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([ONE], order)

    def __getitem__(self, k: int) -> LaurentPoly:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"t^{k} is beyond order {self.order}")

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def _align(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._align(other)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = self._align(other)
        out = []
        for k in range(n + 1):
            out.append(poly_sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)
                                if not self.coeffs[i].is_zero() and not other.coeffs[k - i].is_zero()))
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def shift_t(self, k: int) -> "TruncatedSeries":
        """Multiply by ``t**k`` (``k >= 0``), dropping what falls past the order."""
        return TruncatedSeries([ZERO] * k + list(self.coeffs), self.order)

    def scale_t(self, c: LaurentPoly) -> "TruncatedSeries":
        """Substitute ``t -> c*t``."""
        out = []
        power = ONE
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * c
        return TruncatedSeries(out, self.order)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires the ``t**0`` coefficient to be exactly 1."""
        if self.coeffs[0] != ONE:
            raise ValueError("series inverse needs constant term 1")
        inv = [ONE]
        for k in range(1, self.order + 1):
            inv.append(-poly_sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1)
                                 if not self.coeffs[i].is_zero()))
        return TruncatedSeries(inv, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def series_expand_rational(numer: LaurentPoly | int, denom: Sequence[LaurentPoly | int],
                           order: int, numer_power: int = 0) -> TruncatedSeries:
    """Expand ``numer * t**numer_power / (d_0 + d_1 t + ...)`` to ``t**order``.

    ``d_0`` has to be 1. For the linear denominators used throughout
    (``1 + c t``) this is the geometric series ``sum (-c)**k t**k``.
    """
    ds = [LaurentPoly._coerce(d) for d in denom]
    if not ds or ds[0] != ONE:
        raise ValueError("denominator must have t^0 coefficient equal to 1")
    inv = TruncatedSeries(ds, order).inverse()
    return (inv * LaurentPoly._coerce(numer)).shift_t(numer_power)
