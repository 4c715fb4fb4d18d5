import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzmon import datasets
from hurwitzmon.braids import BraidWord
from hurwitzmon.groups import Permutation, closure
from hurwitzmon.representations import (BraidRelationError, apply_rep, hurwitz_rep,
                                        make_representation, sl2_mod_rep, sym_rep)

from conftest import braids
from oracles import full_orbit

TABLE = [(9, 162), (8, 24), (12, 48), (12, 48), (18, 17496), (18, 648)]
QUOTIENT = [(3, 6), (4, 12), (6, 6), (6, 24), (6, 24), (3, 6)]


def sigma3(k):
    return datasets.to_tuple(datasets.dataset(f"sigma3-{k}")).elements


def P(text, n=3):
    return Permutation.from_cycles(text, n)


def test_make_representation_accepts_and_rejects():
    rep = make_representation(3, [P("(1,2)"), P("(2,3)")])
    assert rep.strands == 3
    with pytest.raises(BraidRelationError, match="sigma_1, sigma_2"):
        make_representation(3, [P("(1,2)"), P("(1,2,3)")])
    with pytest.raises(BraidRelationError, match="sigma_1 and sigma_3"):
        make_representation(4, [P("(1,2)", 4), P("(2,3)", 4), P("(1,4)", 4)])
    with pytest.raises(ValueError):
        make_representation(3, [P("(1,2)")])


def test_sl2_mod_32_images(rep32):
    A, B = rep32.images
    assert A.rows() == [[1, 0], [31, 1]] and B.rows() == [[1, 1], [0, 1]]
    assert (A * B * A).rows() == [[0, 1], [31, 0]]
    assert A * B * A == B * A * B


@pytest.mark.parametrize("m, order", [(2, 6), (7, 336)])
def test_sl2_image_orders(m, order):
    assert len(sl2_mod_rep(m).image_group()) == order


def test_apply_rep_examples(rep32):
    assert apply_rep(rep32, BraidWord((2,) * 8, 3)).rows() == [[1, 8], [0, 1]]
    assert apply_rep(rep32, BraidWord((), 3)).is_identity()
    assert apply_rep(sym_rep(4), BraidWord((1, 2, 3), 4)) == P("(1,2)(2,3)(3,4)", 4)
    with pytest.raises(ValueError):
        apply_rep(rep32, BraidWord((1,), 4))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_apply_rep_is_a_homomorphism(data):
    rep = data.draw(st.sampled_from([sl2_mod_rep(32), sl2_mod_rep(6), sym_rep(4), sym_rep(5)]))
    b1 = data.draw(braids(rep.strands))
    b2 = data.draw(braids(rep.strands))
    assert apply_rep(rep, b1 * b2) == apply_rep(rep, b1) * apply_rep(rep, b2)
    inv = BraidWord(tuple(-l for l in reversed(b1.letters)), rep.strands)
    assert apply_rep(rep, inv) == apply_rep(rep, b1).inverse()


@pytest.mark.parametrize("k", range(1, 7))
def test_hurwitz_tables(k):
    res = hurwitz_rep(sigma3(k))
    assert (res.orbit_size, res.group_order) == TABLE[k - 1]
    start = tuple((0, g) for g in sigma3(k))
    assert len(full_orbit(start, [])) == res.orbit_size


@pytest.mark.parametrize("k", range(1, 7))
def test_hurwitz_tables_quotient(k):
    res = hurwitz_rep(sigma3(k), quotient=True)
    assert (res.orbit_size, res.group_order) == QUOTIENT[k - 1]


def test_hurwitz_rep_commuting_and_degenerate_tuples():
    res = hurwitz_rep([P("()"), P("(1,2,3)"), P("(1,3,2)")])
    assert (res.orbit_size, res.group_order) == (6, 6)
    # commuting pair: sigma_1 is an involution on the orbit
    res = hurwitz_rep([P("(1,2,3)"), P("(1,3,2)")])
    assert (res.generators[0] * res.generators[0]).is_identity()
    with pytest.raises(ValueError):
        hurwitz_rep([P("(1,2)")])


def _tuples(max_r=3):
    gens = [P("(1,2)"), P("(1,2,3)"), P("(2,3)"), P("()")]
    return st.lists(st.sampled_from(gens), min_size=2, max_size=max_r).map(tuple)


@settings(max_examples=200, deadline=None)
@given(_tuples())
def test_hurwitz_rep_properties(t):
    res = hurwitz_rep(t)
    gens = res.generators
    for i in range(len(gens)):
        for j in range(len(gens)):
            a, b = gens[i], gens[j]
            if abs(i - j) == 1:
                assert a * b * a == b * a * b
            elif abs(i - j) > 1:
                assert a * b == b * a
    # the induced group is transitive on the orbit
    assert res.group_order % res.orbit_size == 0
    assert len(full_orbit(tuple((0, g) for g in t), [])) == res.orbit_size


@settings(max_examples=200, deadline=None)
@given(_tuples())
def test_quotient_counts_conjugacy_classes_of_the_orbit(t):
    G = closure(t)
    plain = hurwitz_rep(t).orbit
    classes = {frozenset(tuple(g.inverse() * x * g for x in s) for g in G) for s in plain}
    res = hurwitz_rep(t, quotient=True)
    assert res.orbit_size == len(classes)
    assert res.orbit_size <= len(plain)
