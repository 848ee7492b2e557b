import pytest
from hypothesis import given, settings, strategies as st

from flowface.laurent import (
    ONE, X, XINV, InexactDivisionError, LaurentPoly, TruncatedSeries, pi, poly_mul,
    q_factorial_shifted, series_expand_rational, xp1_pow,
)

coeff_maps = st.dictionaries(st.integers(-3, 6), st.integers(-10**15, 10**15), max_size=6)
polys = coeff_maps.map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_canonical_form_drops_zeros():
    p = LaurentPoly({0: 1, 2: 0, -1: 0})
    assert p.coeffs() == {0: 1}
    assert LaurentPoly({3: 0}).is_zero()
    assert LaurentPoly({1: 2}) == LaurentPoly({1: 2, 5: 0})


def test_mul_examples():
    assert poly_mul(1 + X, ONE) == 1 + X
    assert poly_mul(XINV + 2 + X, X) == LaurentPoly.from_list([1, 2, 1])
    lhs = LaurentPoly.from_list([1, 4, 6, 4, 1]) * LaurentPoly.from_list([1, 4, 4, 1])
    assert lhs.to_list() == [1, 8, 26, 45, 45, 26, 8, 1]


def test_pi_examples():
    assert pi(0) == ONE
    assert pi(2) == X ** 3 + 2 * X ** 2
    assert pi(3, 1) == 21


@pytest.mark.parametrize("k", range(11))
def test_pi_at_one(k):
    expected = 1
    for i in range(1, k + 1):
        expected *= 2 ** i - 1
    assert pi(k, 1) == expected
    assert pi(k)(1) == expected


def test_q_factorial():
    assert q_factorial_shifted(0) == ONE
    assert q_factorial_shifted(3) == X ** 3 + 5 * X ** 2 + 9 * X + 6
    assert q_factorial_shifted(3)(1) == 21


def test_series_expand_examples():
    s = series_expand_rational(ONE, [ONE, LaurentPoly()], 3)
    assert [s[k] for k in range(4)] == [ONE, 0, 0, 0]
    s = series_expand_rational(ONE, [ONE, X], 2)
    assert [s[k] for k in range(3)] == [ONE, -X, X ** 2]
    c = (xp1_pow(2) - 1 - X).div_xpow(1)
    assert c == X + 1
    s = series_expand_rational(ONE, [ONE, c], 2)
    assert [s[k] for k in range(3)] == [ONE, -(X + 1), (X + 1) ** 2]
    with pytest.raises(ValueError):
        series_expand_rational(ONE, [X, ONE], 2)


def test_series_order_is_enforced():
    s = TruncatedSeries([ONE, X], 1)
    with pytest.raises(IndexError):
        s[2]
    assert len(s.coeffs) == 2


def test_div_xpow_exact_or_raises():
    assert (X ** 3 + X ** 4).div_xpow(3) == 1 + X
    with pytest.raises(InexactDivisionError):
        (ONE + X).div_xpow(1)
    assert (ONE + X).div_xpow(1, min_exp=-1) == XINV + 1


def test_evaluation_negative_exponent():
    assert (XINV + 1)(2) == pytest.approx(1.5)
    assert (XINV + 1)(1) == 2


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == LaurentPoly()


@settings(max_examples=150, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_degree_additivity(p, q):
    pq = p * q
    assert pq.degree() == p.degree() + q.degree()
    assert pq.lowest() == p.lowest() + q.lowest()


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff_maps, min_size=1, max_size=6), st.lists(coeff_maps, min_size=1, max_size=6),
       st.integers(0, 5))
def test_series_truncation_consistency(a, b, N):
    def series(cs, order):
        cs = [LaurentPoly(c) for c in cs][: order + 1]
        return TruncatedSeries(cs + [LaurentPoly()] * (order + 1 - len(cs)), order)

    sa, sb = series(a, N), series(b, N)
    la, lb = series(a, N + 5), series(b, N + 5)
    assert (sa * sb).coeffs == (la * lb).truncate(N).coeffs
    assert (sa + sb).coeffs == (la + lb).truncate(N).coeffs
    assert (sa - sb).coeffs == (la - lb).truncate(N).coeffs


def test_inverse():
    s = series_expand_rational(ONE, [ONE, X + 1], 6)
    inv = s.inverse()
    assert (s * inv) == TruncatedSeries.one(6)
    assert inv[1] == X + 1 and inv[2] == LaurentPoly()
