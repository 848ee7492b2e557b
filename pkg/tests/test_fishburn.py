import json

import pytest

from flowface.compositions import cry_netflow
from flowface.facecount import cry_primitive_fpoly
from flowface.fishburn import (
    FishburnMatrix, graph_to_matrix, matrices_from_json, matrices_to_json, matrix_to_graph,
    primitive_fishburn_matrices,
)
from flowface.oracle import Subgraph, betti, is_primitive, valid_subgraphs


def identity(n):
    return FishburnMatrix(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def path(n):
    return Subgraph.from_edges(n, [(i, i + 1) for i in range(1, n + 1)])


def test_path_is_identity():
    for n in range(1, 6):
        assert graph_to_matrix(path(n)) == identity(n)
        assert matrix_to_graph(identity(n)) == path(n)
    assert matrix_to_graph(FishburnMatrix(1, ((1,),))).edge_set() == [(1, 2)]


def test_invalid_matrices_rejected():
    with pytest.raises(ValueError):
        FishburnMatrix(2, ((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        FishburnMatrix(2, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        FishburnMatrix(2, ((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        FishburnMatrix(1, ((2,),))


def test_graph_outside_omega_rejected():
    with pytest.raises(ValueError):
        graph_to_matrix(Subgraph.from_edges(2, [(1, 2)]))


def test_size_three_matrices_span_and_connect():
    mats = list(primitive_fishburn_matrices(3))
    assert len(mats) == 10
    for M in mats:
        H = matrix_to_graph(M)
        assert H.vertices() == {1, 2, 3, 4} and is_primitive(H)


@pytest.mark.parametrize("n", range(1, 5))
def test_bijection(n):
    graphs = list(valid_subgraphs(cry_netflow(n), primitive=True))
    mats = {graph_to_matrix(H) for H in graphs}
    assert len(mats) == len(graphs)
    assert mats == set(primitive_fishburn_matrices(n))
    for H in graphs:
        M = graph_to_matrix(H)
        assert matrix_to_graph(M) == H
        assert M.ones() - n == betti(H)
    grading = {}
    for M in mats:
        grading[M.ones() - n] = grading.get(M.ones() - n, 0) + 1
    p = cry_primitive_fpoly(n)
    assert grading == {e: c for e, c in p.items()}


def test_json_roundtrip():
    mats = list(primitive_fishburn_matrices(3))
    text = matrices_to_json(mats)
    assert matrices_from_json(text) == mats
    assert json.loads(matrices_to_json([identity(2)])) == [{"size": 2, "upper": [[1, 0], [1]]}]
