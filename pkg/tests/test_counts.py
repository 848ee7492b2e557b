from math import comb

import pytest

from flowface.compositions import binary_netflows, cry_netflow
from flowface.counts import (
    cry_edge_count, cry_vertex_count, flow_vertex_count, flow_vertex_count_signature,
    low_codim_face_count, partition_coeffs, signed_bicolored_partitions,
)
from flowface.facecount import cry_fpoly, cry_primitive_fpoly
from flowface.laurent import q_factorial_shifted
from tables import CRY_F, CRY_PRIMITIVE, entry


def test_vertex_examples():
    assert cry_vertex_count(4) == 8
    assert cry_vertex_count(1) == 1
    assert cry_vertex_count(8) == 128
    for n in range(1, 9):
        assert flow_vertex_count(cry_netflow(n)) == 2 ** (n - 1)
    assert flow_vertex_count((1, 1, 0)) == 6
    assert flow_vertex_count((1, 1, 1)) == 6


def test_edge_examples():
    assert cry_edge_count(4) == 26
    assert cry_edge_count(5) == 98
    assert cry_edge_count(2) == 1
    with pytest.raises(ValueError):
        cry_edge_count(1)


@pytest.mark.parametrize("n", range(1, 9))
def test_table_columns(n):
    assert cry_vertex_count(n) == entry(CRY_F[n], 0) == cry_fpoly(n)[0]
    if n >= 2:
        assert cry_edge_count(n) == entry(CRY_F[n], 1) == cry_fpoly(n)[1]


def test_tesler_vertices_are_factorial():
    for n in range(1, 9):
        assert flow_vertex_count((1,) * n) == q_factorial_shifted(n)(0)


def test_signature_form_disagrees():
    assert flow_vertex_count_signature((1, 1, 0)) == 4
    assert flow_vertex_count_signature(cry_netflow(5)) == 1


def test_partition_coeff_examples():
    c = partition_coeffs(10)
    assert c[0] == 1 and c[1] == -2 and c[2] == -1
    assert len(c) == 11


@pytest.mark.parametrize("D", range(0, 13))
def test_partition_coeffs_against_enumeration(D):
    assert list(partition_coeffs(D).coefficients) == signed_bicolored_partitions(D)


def test_low_codim_examples():
    assert low_codim_face_count(4, 1) == 8
    assert low_codim_face_count(4, 2) == 26
    assert low_codim_face_count(5, 4) == 584
    with pytest.raises(ValueError):
        low_codim_face_count(4, 4)
    with pytest.raises(ValueError):
        low_codim_face_count(4, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_low_codim_ranges(n):
    top = comb(n, 2)
    for d in range(1, n):
        value = low_codim_face_count(n, d)
        assert value == entry(CRY_PRIMITIVE[n], top - d) == cry_primitive_fpoly(n)[top - d]
        if d <= n - 2:
            assert value == entry(CRY_F[n], top - d)


def test_full_fvector_disagrees_at_top_of_range():
    assert low_codim_face_count(4, 3) == 42 != entry(CRY_F[4], 3)
    assert low_codim_face_count(5, 4) == 584 != entry(CRY_F[5], 6)
