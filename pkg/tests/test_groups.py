import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzmon.groups import (Matrix2ModM, Permutation, ResourceCapExceeded, centralizer,
                               closure, conj, find_conjugator, sl2_order)

from oracles import sl2_order_by_count, sl2_order_formula

S4 = closure([Permutation((2, 1, 3, 4)), Permutation((2, 3, 4, 1))])
SL2_4 = closure([Matrix2ModM(1, 0, 3, 1, 4), Matrix2ModM(1, 1, 0, 1, 4)])


def test_permutation_convention():
    p = Permutation.from_cycles("(1,2)", 3)
    q = Permutation.from_cycles("(2,3)", 3)
    # left to right: apply p first
    assert (p * q)(1) == q(p(1)) == 3
    assert Permutation.from_cycles("(1,2)(2,3)", 3) == p * q
    assert str(p * q) == "(1,3,2)"
    assert str(Permutation.identity(3)) == "()"
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,4)", 3)


def test_matrix_arithmetic():
    A = Matrix2ModM.from_rows([[1, 0], [31, 1]], 32)
    B = Matrix2ModM.from_rows([[1, 1], [0, 1]], 32)
    assert (A * B).rows() == [[1, 1], [31, 0]]
    assert (A * A.inverse()).is_identity()
    assert (B ** 32).is_identity() and not (B ** 16).is_identity()
    assert Matrix2ModM(33, -1, 0, 1, 32).rows() == [[1, 31], [0, 1]]
    assert str(A) == "[[1,0],[31,1]] mod 32"


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8, 9, 12])
def test_sl2_order_matches_oracles(m):
    G = closure([Matrix2ModM(1, 0, m - 1, 1, m), Matrix2ModM(1, 1, 0, 1, m)])
    assert len(G) == sl2_order(m) == sl2_order_by_count(m) == sl2_order_formula(m)


def test_sl2_32_order(sl2_32):
    assert len(sl2_32) == 24576 == sl2_order_formula(32)


def test_closure_examples():
    assert len(S4) == 24
    assert len(closure([Permutation.from_cycles("(1,2,3)", 3)])) == 3
    assert len(closure([Permutation.identity(4)])) == 1
    with pytest.raises(ValueError):
        closure([Permutation.identity(3), Matrix2ModM.identity(5)])


def test_closure_cap():
    with pytest.raises(ResourceCapExceeded) as info:
        closure([Permutation((2, 1, 3, 4)), Permutation((2, 3, 4, 1))], cap=10)
    assert info.value.cap == 10


@pytest.mark.parametrize("G", [S4, SL2_4], ids=["S4", "SL2_4"])
def test_closure_is_a_subgroup(G):
    els = list(G)
    assert all(x * y in G for x, y in itertools.product(els[:30], els))
    assert all(x.inverse() in G for x in els)


def test_find_conjugator_certificates():
    x = Permutation.from_cycles("(1,2,3)", 4)
    y = Permutation.from_cycles("(2,4,3)", 4)
    g = find_conjugator(S4, x, y)
    assert g is not None and conj(x, g) == y
    assert find_conjugator(S4, x, Permutation.from_cycles("(1,2)", 4)) is None
    with pytest.raises(ValueError):
        find_conjugator(S4, x, Permutation.identity(5))


def test_centralizer_examples():
    assert len(centralizer(S4, Permutation.from_cycles("(1,2,3,4)", 4))) == 4
    assert len(centralizer(S4, Permutation.from_cycles("(1,2)", 4))) == 4
    assert len(centralizer(S4, Permutation.identity(4))) == 24
    # -I is central in SL(2, Z/4)
    assert centralizer(SL2_4, Matrix2ModM(3, 0, 0, 3, 4)) == SL2_4


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_conjugacy_search_properties(data):
    G = data.draw(st.sampled_from([S4, SL2_4]))
    els = list(G)
    x = data.draw(st.sampled_from(els))
    u = data.draw(st.sampled_from(els))
    y = conj(x, u)
    g = find_conjugator(G, x, y)
    assert g is not None and g.inverse() * x * g == y
    C = centralizer(G, x)
    assert x in C and len(G) % len(C) == 0
    # orbit-stabilizer: |class of x| * |C(x)| = |G|
    assert len({conj(x, h) for h in els}) * len(C) == len(G)
