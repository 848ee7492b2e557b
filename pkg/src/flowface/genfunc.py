"""Truncated generating functions for the faces of CRY_n.

``[t^n] F(t, x)`` is the f-polynomial of CRY_n. Jelinek's series ``G``
counts primitive Fishburn matrices; at ``v = w = x = y = x`` the variable
``x`` marks every 1-entry, so ``[t^n] G = x**n * primitive_f^{(n)}(x)``
(a matrix with ``n`` rows and ``n + b`` ones is a spanning connected graph
with Betti number ``b``). There is no shift in ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .facecount import cry_fpoly, cry_primitive_fpoly
from .laurent import ONE, X, XINV, LaurentPoly, TruncatedSeries, series_expand_rational, xp1_pow


def cry_face_series(N: int) -> TruncatedSeries:
    """``F(t,x) = 1/(x - x t) + sum_n t^n x^-n prod_{i<=n} ((1+x)^i - 1)/(1 + c_i t)``.

    ``c_i = ((1+x)^i - 1 - x)/x`` is a polynomial. Expanded to ``t**N``.
    """
    if N < 0:
        raise ValueError("order must be >= 0")
    total = TruncatedSeries([XINV] * (N + 1), N)
    running = TruncatedSeries.one(N)
    total = total + running
    for n in range(1, N + 1):
        numer = xp1_pow(n) - 1
        c = (xp1_pow(n) - 1 - X).div_xpow(1, min_exp=0)
        running = running * series_expand_rational(numer, [ONE, c], N)
        total = total + (running * XINV ** n).shift_t(n)
    return total


@dataclass(frozen=True)
class SeriesRequest:
    """Order in ``t`` and the values substituted for ``v, w, x, y``."""

    order: int
    v: LaurentPoly = field(default=X)
    w: LaurentPoly = field(default=X)
    x: LaurentPoly = field(default=X)
    y: LaurentPoly = field(default=X)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")


def jelinek_series(req: SeriesRequest) -> TruncatedSeries:
    """Expand Jelinek's primitive Fishburn series ``G(t, v, w, x, y)`` to ``t**order``."""
    N = req.order
    total = TruncatedSeries.zero(N)
    running = TruncatedSeries.one(N)  # prod_{i<n} ((v+1)(w+1)^i - 1)/(1 + t(...))
    v1, w1 = req.v + 1, req.w + 1
    x1, y1 = req.x + 1, req.y + 1
    for n in range(N):
        vw = v1 * w1 ** n - 1
        term = running * series_expand_rational(x1 * y1 ** n - 1, [ONE, vw], N)
        total = total + term.shift_t(n + 1)
        running = running * series_expand_rational(vw, [ONE, vw], N)
    return total


def primitive_from_jelinek(N: int) -> list[LaurentPoly]:
    """``x**-n [t^n] G(t,x,x,x,x)`` for ``n = 0..N`` (index 0 is the zero polynomial)."""
    G = jelinek_series(SeriesRequest(N))
    return [G[n].div_xpow(n, min_exp=0) for n in range(N + 1)]


def face_series_from_jelinek(N: int) -> TruncatedSeries:
    """``sum_{n>=1} f^{(n)} t^n = ((1+x)t/x) (1 + G((1+x)t/x, x,x,x,x))``.

    Follows from ``x f^{(n)} = (1+x)^n primitive_f^{(n-1)}`` with
    ``primitive_f^{(0)} = 1``.
    """
    G = jelinek_series(SeriesRequest(N))
    scale = xp1_pow(1) * XINV
    inner = TruncatedSeries.one(N) + G.scale_t(scale)
    return (inner * scale).shift_t(1)


def literal_jelinek_face_series(N: int) -> TruncatedSeries:
    """``(1/x) G((1+x) t, x,x,x,x)``, which does not reproduce the f-polynomials."""
    G = jelinek_series(SeriesRequest(N))
    return G.scale_t(xp1_pow(1)) * XINV


def product_identity_check(n: int, literal: bool = False) -> bool:
    """``x f^{(n)} == (1+x)**n primitive_f^{(n-1)}``.

    With ``literal`` the variant ``x f^{(n)} == (1+x)**(n-1) primitive_f^{(n)}``
    is tested instead; it holds at ``n = 2`` and fails from ``n = 3`` on.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = X * cry_fpoly(n)
    if literal:
        return lhs == xp1_pow(n - 1) * cry_primitive_fpoly(n)
    return lhs == xp1_pow(n) * cry_primitive_fpoly(n - 1)


def product_identity_sides(n: int, literal: bool = False) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = X * cry_fpoly(n)
    if literal:
        return lhs, xp1_pow(n - 1) * cry_primitive_fpoly(n)
    return lhs, xp1_pow(n) * cry_primitive_fpoly(n - 1, allow_zero=True)


__all__ = [
    "cry_face_series",
    "SeriesRequest",
    "jelinek_series",
    "primitive_from_jelinek",
    "face_series_from_jelinek",
    "literal_jelinek_face_series",
    "product_identity_check",
    "product_identity_sides",
]
