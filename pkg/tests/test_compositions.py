import itertools
from math import prod

import pytest
from hypothesis import given, strategies as st

from flowface.compositions import (
    SubsetMask, binary_netflows, comp_from_set, compositions, count_refinements, cry_netflow,
    descents, downset_c, k_coeff, netflow, refinements, revcomp, revcomp_inverse, seq,
    set_from_comp, signature,
)


def test_revcomp_examples():
    assert revcomp((1, 1, 0, 0, 1, 0, 1, 0)) == (2, 2, 3, 1)
    assert revcomp((1,)) == (1,)
    assert revcomp((1, 0, 0)) == (3,)


def test_seq_examples():
    assert seq({1, 2}, 4) == (3, 2, 1, 1, 1)
    assert seq({3, 4}, 4) == (3, 3, 3, 2, 1)
    assert seq(set(), 5) == (1,) * 6
    assert seq(SubsetMask(4, frozenset({1, 2}))) == (3, 2, 1, 1, 1)


def test_refinement_examples():
    assert set(refinements((2,))) == {(2,), (1, 1)}
    assert set(refinements((2, 1))) == {(2, 1), (1, 1, 1)}


def test_downset_examples():
    assert set(downset_c((2, 2))) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert list(downset_c((1, 1, 1))) == [(1, 1, 1)]


def test_k_coeff_examples():
    assert k_coeff(revcomp((1, 0, 0, 1, 1, 0)), revcomp((1, 0, 1, 1, 0))) == 2
    assert k_coeff((2, 3, 1), (2, 3, 1)) == 1
    assert k_coeff((3,), (2,)) == 2
    with pytest.raises(ValueError):
        k_coeff((2,), (3,))
    with pytest.raises(ValueError):
        k_coeff((2, 1), (2,))


def test_signature_examples():
    for n in range(1, 8):
        assert signature(cry_netflow(n)) == (n,)
    assert signature((1, 1, 1, 0)) == (1, 1, 2)
    assert signature((1, 1)) == (1, 1)


def test_netflow_canonicalization():
    assert netflow((3, 0, 2)) == (1, 0, 1)
    with pytest.raises(ValueError):
        netflow((3, 0, 2), strict=True)
    with pytest.raises(ValueError):
        netflow((0, 1))
    with pytest.raises(ValueError):
        netflow((1, -1))
    with pytest.raises(ValueError):
        netflow(())


@pytest.mark.parametrize("n", range(1, 13))
def test_revcomp_bijection_and_size_swap(n):
    seen = set()
    for a in binary_netflows(n):
        alpha = revcomp(a)
        assert sum(alpha) == n
        assert len(alpha) == sum(a)
        assert revcomp_inverse(alpha) == a
        seen.add(alpha)
    assert seen == set(compositions(n))
    assert len(seen) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(0, 11))
def test_descents_invert_seq(n):
    for r in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), r):
            s = seq(set(S), n)
            assert descents(s) == frozenset(S)
            assert s[0] == 1 + len(S) and s[-1] == 1 and len(s) == n + 1
            assert all(s[i] - s[i + 1] in (0, 1) for i in range(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_poset_sizes(n):
    for alpha in compositions(n):
        refs = list(refinements(alpha))
        assert len(refs) == len(set(refs)) == prod(2 ** (p - 1) for p in alpha)
        assert count_refinements(alpha) == len(refs)
        assert len(list(downset_c(alpha))) == prod(alpha)


def test_iteration_is_lexicographic():
    for n in range(1, 7):
        comps = list(compositions(n))
        assert comps == sorted(comps)
        for alpha in comps:
            refs = list(refinements(alpha))
            assert refs == sorted(refs)


@given(st.lists(st.booleans(), min_size=0, max_size=15))
def test_comp_set_roundtrip(bits):
    n = len(bits) + 1
    S = frozenset(i + 1 for i, b in enumerate(bits) if b)
    alpha = comp_from_set(S, n)
    assert sum(alpha) == n
    assert set_from_comp(alpha) == S
