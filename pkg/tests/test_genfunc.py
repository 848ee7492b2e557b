import pytest

from flowface.facecount import cry_fpoly, cry_primitive_fpoly
from flowface.genfunc import (
    SeriesRequest, cry_face_series, face_series_from_jelinek, jelinek_series,
    primitive_from_jelinek, literal_jelinek_face_series, product_identity_check,
    product_identity_sides,
)
from flowface.laurent import ONE, X, XINV, LaurentPoly, TruncatedSeries


def test_face_series_examples():
    F = cry_face_series(4)
    assert F[2] == XINV + 2 + X
    assert F[4][3] == 45
    assert F[1] == XINV + 1
    assert F[0] == XINV + 1


@pytest.mark.parametrize("n", range(1, 9))
def test_face_series_matches(n):
    F = cry_face_series(8)
    assert F[n] == cry_fpoly(n)
    assert F[n].lowest() >= -1


def test_series_truncation_stable():
    assert cry_face_series(5).coeffs == cry_face_series(9).truncate(5).coeffs


def test_jelinek_alignment():
    G = jelinek_series(SeriesRequest(8))
    assert G[0] == LaurentPoly()
    assert G[3] == X ** 3 * (1 + 4 * X + 4 * X ** 2 + X ** 3)
    assert G[3](1) == 10
    prim = primitive_from_jelinek(8)
    for n in range(1, 9):
        assert prim[n] == cry_primitive_fpoly(n)


def test_jelinek_order_zero():
    assert jelinek_series(SeriesRequest(0)) == TruncatedSeries.zero(0)
    with pytest.raises(ValueError):
        SeriesRequest(-1)


def test_jelinek_counts_fishburn_matrices():
    G = jelinek_series(SeriesRequest(4, ONE, ONE, ONE, ONE))
    assert [G[k] for k in range(5)] == [0, 1, 2, 10, 122]


def test_face_series_from_jelinek():
    S = face_series_from_jelinek(8)
    for n in range(1, 9):
        assert S[n] == cry_fpoly(n)


def test_literal_relation_fails():
    P = literal_jelinek_face_series(4)
    assert P[1] == 1 + X != cry_fpoly(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_product_identity(n):
    assert product_identity_check(n)
    lhs, rhs = product_identity_sides(n)
    assert lhs == rhs


def test_product_identity_examples():
    lhs, rhs = product_identity_sides(2)
    assert lhs == rhs == 1 + 2 * X + X ** 2
    assert product_identity_check(4)
    with pytest.raises(ValueError):
        product_identity_check(1)


def test_literal_product_identity_counterexample():
    assert product_identity_check(2, literal=True)
    lhs, rhs = product_identity_sides(3, literal=True)
    assert lhs.to_list() == [1, 4, 6, 4, 1]
    assert rhs.to_list() == [1, 6, 13, 13, 6, 1]
    for n in range(3, 9):
        assert not product_identity_check(n, literal=True)
