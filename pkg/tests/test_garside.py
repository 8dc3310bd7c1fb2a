import itertools

import pytest
from hypothesis import given, strategies as st

from torus_garside import garside as gs
from torus_garside.params import compute_params, coprime_pairs

from conftest import ball, structure

# |Div(Delta)| per pair; regression fixture (values cross-checked by the oracle
# for the small pairs in test_oracle.py)
SIMPLES_COUNT = {
    (2, 3): 8, (2, 5): 15, (2, 7): 24, (2, 9): 35, (2, 11): 48, (2, 13): 63,
    (3, 4): 21, (3, 5): 30, (3, 7): 56, (3, 8): 72, (3, 10): 115, (3, 11): 140, (3, 13): 204,
    (4, 5): 55, (4, 7): 112, (4, 9): 209, (4, 11): 345, (4, 13): 551,
    (5, 6): 144, (5, 7): 208, (5, 8): 297, (5, 9): 418,
}


def word_over(n, max_size=10):
    return st.lists(st.integers(1, n), max_size=max_size).map(tuple)


@pytest.mark.parametrize("nm", sorted(SIMPLES_COUNT))
def test_simples_count(nm):
    g = structure(*nm)
    assert len(g.simples) == SIMPLES_COUNT[nm]
    assert g.simples[0] == () and g.simples[-1] == (nm[0],) * nm[1]


def test_simples_2_3_from_oracle():
    b = ball(2, 3, 6)
    assert len(b.left_divisors(b.class_id((2, 2, 2)))) == 8


def test_atoms_are_simple():
    g = structure(3, 5)
    for a in (1, 2, 3):
        assert g.find_simple((a,)) is not None


def test_complement_of_atom():
    g = structure(3, 5)
    assert gs.complement_of_atom(g, 3) == (3, 3, 3, 3)
    g = structure(2, 3)
    a1 = gs.complement_of_atom(g, 1)
    assert a1 == (2, 1, 2) and g.equal((1,) + a1, (2, 2, 2))


def test_normal_form_examples():
    g = structure(2, 3)
    assert gs.normal_form(g, ()) == []
    assert gs.normal_form(g, (2, 2, 2)) == [(2, 2, 2)]
    g = structure(3, 5)
    assert gs.normal_form(g, (1, 3, 1)) == [(2, 3, 3)]


def test_head_matches_oracle():
    g = structure(3, 5)
    b = ball(3, 5, 15)
    w = (1, 3, 1, 2, 3, 1)
    simples = {b.class_id(s) for s in g.simples}
    below = simples & b.left_divisors(b.class_id(w))
    top = max(below, key=lambda c: b.class_lambda[c])
    head = gs.normal_form(g, w)[0]
    assert b.class_id(head) == top
    assert all(c in b.left_divisors(top) for c in below)


def test_lcm_examples():
    g = structure(3, 5)
    atoms = [(1,), (2,), (3,)]
    assert gs.lcm_all(g, "right", atoms) == (3, 3, 3, 3)
    assert gs.lcm_all(g, "left", atoms) == (2, 3, 3)
    for side in ("left", "right"):
        assert gs.lcm(g, side, (1, 3), ()) == gs.canonical_word(g, (1, 3))


def test_gcd_examples():
    g = structure(3, 5)
    assert gs.gcd(g, "left", (1, 3, 1), (2, 3, 2)) == (2, 3)
    assert gs.gcd(g, "right", (1, 3, 1), (2, 3, 2)) == (3, 2)
    for side in ("left", "right"):
        assert gs.gcd(g, side, (1, 3, 1), (1, 3, 1)) == (2, 3, 3)
        assert gs.gcd(g, side, (1, 3, 1), ()) == ()


def test_gcd_matches_oracle():
    g = structure(3, 5)
    b = ball(3, 5, 10)
    cu, cv = b.class_id((1, 3, 1)), b.class_id((2, 3, 2))
    common = b.left_divisors(cu) & b.left_divisors(cv)
    top = max(common, key=lambda c: b.class_lambda[c])
    assert b.rep(top) in [tuple(x) for x in b.class_words(b.class_id((2, 3)))]


@pytest.mark.parametrize("nm", [(2, 3), (3, 5), (4, 5)])
def test_axioms(nm):
    rep = gs.check_garside_axioms(structure(*nm))
    assert rep["ok"], rep


def test_left_right_lcm_at_4_5():
    g = structure(4, 5)
    atoms = [(a,) for a in range(1, 5)]
    assert gs.lcm_all(g, "left", atoms) == gs.lcm_all(g, "right", atoms) == (4,) * 4


@given(st.sampled_from([(2, 5), (3, 4), (3, 5), (4, 7)]), st.data())
def test_delta_central(nm, data):
    g = structure(*nm)
    w = data.draw(word_over(nm[0], 6))
    assert g.equal(g.delta + w, w + g.delta)


@given(word_over(3, 12))
def test_normal_form_properties(w):
    g = structure(3, 5)
    nf = gs.normal_form(g, w)
    flat = tuple(x for s in nf for x in s)
    assert g.equal(flat, w)
    for k in range(len(nf)):
        rest = tuple(x for s in nf[k:] for x in s)
        assert g.simples[gs.head(g, rest)] == nf[k]
        assert nf[k] != ()


@given(word_over(3, 8), word_over(3, 8))
def test_normal_form_complete_invariant(u, v):
    g = structure(3, 5)
    assert (gs.normal_form(g, u) == gs.normal_form(g, v)) == g.equal(u, v)


@given(word_over(4, 7), word_over(4, 7))
def test_lcm_and_gcd_divisibility(u, v):
    g = structure(4, 7)
    r = gs.lcm(g, "right", u, v)
    assert g.left_divides(u, r) and g.left_divides(v, r)
    l = gs.lcm(g, "left", u, v)
    assert g.right_divides(u, l) and g.right_divides(v, l)
    d = gs.gcd(g, "left", u, v)
    assert g.left_divides(d, u) and g.left_divides(d, v)
    e = gs.gcd(g, "right", u, v)
    assert g.right_divides(e, u) and g.right_divides(e, v)


def test_simples_closed_under_divisors():
    g = structure(3, 7)
    for s in g.simples:
        for k in range(len(s) + 1):
            assert g.find_simple(s[:k]) is not None
            assert g.find_simple(s[k:]) is not None


@pytest.mark.parametrize("side", ["left", "right"])
def test_lattice_laws(side):
    g = structure(3, 5)
    meet, join = gs.lattice_tables(g, side)
    idx = range(len(g.simples))
    for a, b in itertools.product(idx, repeat=2):
        assert meet[a][b] == meet[b][a] and join[a][b] == join[b][a]
        assert meet[a][join[a][b]] == a and join[a][meet[a][b]] == a
    assert all(meet[a][a] == a == join[a][a] for a in idx)
    for a, b, c in itertools.product(range(0, 30, 4), repeat=3):
        assert meet[a][meet[b][c]] == meet[meet[a][b]][c]
        assert join[a][join[b][c]] == join[join[a][b]][c]


def test_side_validation():
    g = structure(2, 3)
    with pytest.raises(ValueError):
        gs.lcm(g, "up", (1,), (2,))


def test_canonical_words_are_shortest():
    g = structure(3, 5)
    b = ball(3, 5, 15)
    for s in g.simples:
        members = b.class_words(b.class_id(s))
        best = min(members, key=gs.word_key)
        assert s == best


@pytest.mark.parametrize("nm", coprime_pairs(4, 9)[:6])
def test_atom_lcm_theorem(nm):
    p = compute_params(*nm)
    g = structure(*nm)
    atoms = [(a,) for a in range(1, p.n + 1)]
    assert g.equal(gs.lcm_all(g, "right", atoms), (p.n,) * (p.m - p.q))
