import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzmon import engine
from hurwitzmon.engine import ClassOrbit, IndexedGroup
from hurwitzmon.groups import Permutation, centralizer, closure
from hurwitzmon.hurwitz import LabeledTuple, pseudo_coxeter
from hurwitzmon.representations import sl2_mod_rep

from oracles import full_orbit

S4 = closure([Permutation((2, 1, 3, 4)), Permutation((2, 3, 4, 1))])
SL2_6 = sl2_mod_rep(6).image_group()
# degree 20 is too large for the integer encoding of permutations
C20 = closure([Permutation(tuple(range(2, 21)) + (1,))])
GROUPS = [S4, SL2_6, C20]
INDEXED = {id(G): IndexedGroup(G) for G in GROUPS}


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_indexed_products_match_objects(G, data):
    IG = INDEXED[id(G)]
    i = data.draw(st.integers(0, IG.order - 1))
    j = data.draw(st.integers(0, IG.order - 1))
    x, y = IG.elements[i], IG.elements[j]
    assert IG.elements[int(IG.mul(i, j))] == x * y
    assert IG.elements[int(IG.inv[i])] == x.inverse()
    assert IG.elements[IG.identity].is_identity()


def test_sl2_32_indexing(sl2_32):
    IG = IndexedGroup(sl2_32)
    idx = np.arange(IG.order)
    assert np.array_equal(IG.mul(idx, IG.inv[idx]), np.full(IG.order, IG.identity))


def test_conj_table_rows():
    IG = INDEXED[id(S4)]
    H = [IG.index[h] for h in centralizer(S4, Permutation((2, 1, 4, 3)))]
    T = IG.conj_table(H)
    for k, h in enumerate(H):
        g = IG.elements[h]
        assert [IG.elements[e] for e in T[k]] == [g.inverse() * x * g for x in IG.elements]
    with pytest.raises(ValueError):
        IG.conj_table([IG.identity, IG.index[Permutation((2, 3, 4, 1))]])


def _oracle_counts(t, G, H):
    plain = full_orbit(t.entries, list(H))
    classes = {frozenset(tuple((l, h.inverse() * g * h) for l, g in s) for h in H) for s in plain}
    return len(plain), len(classes)


@st.composite
def cases(draw):
    G = draw(st.sampled_from([S4, SL2_6]))
    r = draw(st.integers(2, 3))
    els = sorted(G.elements(), key=lambda e: e.key)
    t = LabeledTuple(tuple((draw(st.integers(0, 1)), draw(st.sampled_from(els))) for _ in range(r)))
    return G, t


@settings(max_examples=200, deadline=None)
@given(cases(), st.booleans())
def test_class_orbit_counts_match_oracle(case, use_table):
    G, t = case
    IG = INDEXED[id(G)]
    H = centralizer(G, pseudo_coxeter(t))
    limit = engine.CONJ_TABLE_LIMIT if use_table else 0
    old, engine.CONJ_TABLE_LIMIT = engine.CONJ_TABLE_LIMIT, limit
    try:
        run = ClassOrbit(IG, [IG.index[h] for h in H]).run(
            [IG.index[g] for g in t.elements], list(t.labels))
    finally:
        engine.CONJ_TABLE_LIMIT = old
    assert (run.tuples, run.classes) == _oracle_counts(t, G, H)
    assert run.exhausted and run.hit is None
