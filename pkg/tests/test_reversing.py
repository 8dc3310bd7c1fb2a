import pytest
from hypothesis import given, strategies as st

from torus_garside.params import compute_params
from torus_garside.presentations import build_presentation
from torus_garside.reversing import (
    BudgetExceeded,
    ComplementTable,
    EngineNotCertified,
    NotComplemented,
    certify,
    cube_check,
    extend_complement,
    left_divides,
    left_quotient,
    right_lcm,
    words_equal,
)
from torus_garside.words import Variant, make_presentation

from conftest import ball, certified_tables


def word_over(n, max_size=8):
    return st.lists(st.integers(1, n), max_size=max_size).map(tuple)


def test_extension_examples_3_5():
    right, _ = certified_tables(3, 5)
    assert extend_complement(right, (1, 3), (2,)) == (1,)
    assert extend_complement(right, (), (2, 1)) == (2, 1)
    assert extend_complement(right, (2, 1), ()) == ()


@given(word_over(3))
def test_extension_trivial_cases(w):
    right, _ = certified_tables(3, 5)
    assert extend_complement(right, w, w) == ()
    assert extend_complement(right, (), w) == w
    assert extend_complement(right, w, ()) == ()


def test_cube_examples():
    right, left = certified_tables(3, 5)
    assert cube_check(right, (1,), (2,), (3,)).status == "pass"
    assert cube_check(left, (1,), (2,), (3,)).status == "pass"
    res = cube_check(right, (1,), (1,), (2,))
    assert res.ok and res.lhs == res.rhs


def test_practical_table_is_not_certified():
    p = compute_params(3, 5)
    t = ComplementTable.from_presentation(build_presentation(p, "practical"))
    assert certify(t) is False
    assert all(f.status == "fail" for f in t.cube_failures)
    with pytest.raises(EngineNotCertified):
        words_equal(t, (1,), (1,))


def test_lax_cube_uses_oracle_when_uncertified():
    p = compute_params(2, 3)
    t = ComplementTable.from_presentation(build_presentation(p, "practical"))
    assert cube_check(t, (1,), (2,), (1,), sharp=False).ok


def test_equality_examples():
    right, _ = certified_tables(3, 4)
    assert words_equal(right, (1, 3, 1), (2, 3))
    right, _ = certified_tables(3, 5)
    assert not words_equal(right, (1, 3, 1), (3, 3))
    right, _ = certified_tables(2, 3)
    assert words_equal(right, (1, 2, 1, 2), (2, 2, 2))


def test_divisibility_examples():
    right, _ = certified_tables(3, 5)
    assert left_divides(right, (), (1, 3))
    assert left_quotient(right, (2,), (1, 3, 1)) == (3, 3)
    assert not left_divides(right, (3,), (1,))


def test_lcm_examples():
    right, _ = certified_tables(3, 5)
    assert right_lcm(right, (1, 2), (1, 2)) == (1, 2)
    l12 = right_lcm(right, (1,), (2,))
    assert l12 == (1, 3, 1) and words_equal(right, l12, (2, 3, 3))
    acc = ()
    for a in (1, 2, 3):
        acc = right_lcm(right, acc, (a,))
    assert words_equal(right, acc, (3, 3, 3, 3))


def test_not_complemented_rejected():
    p = make_presentation(2, [((1, 2), (1, 1))], (1, 1), Variant.RAW)
    with pytest.raises(NotComplemented):
        ComplementTable.from_presentation(p)


def test_budget_is_a_hard_error():
    right, _ = certified_tables(3, 5)
    with pytest.raises(BudgetExceeded):
        right.reverse_signed([-1, -3, 2, 3], budget=1)
    assert right.reverse_signed([-1, 2], budget=1) == ((3, 1), (3, 3))


def test_default_budget_is_generous():
    right, _ = certified_tables(3, 5)
    delta = (3,) * 5
    for k in range(1, 4):
        w = (1, 2) * (3 * k)
        assert right.reverse(w, delta * k) is not None


@given(word_over(3), word_over(3), word_over(3, 3), word_over(3, 3))
def test_equality_is_a_congruence(u, v, a, b):
    right, _ = certified_tables(3, 5)
    if words_equal(right, u, v):
        assert words_equal(right, a + u + b, a + v + b)


@given(word_over(3, 5), word_over(3, 5))
def test_lcm_is_common_multiple(u, v):
    right, _ = certified_tables(3, 5)
    l = right_lcm(right, u, v)
    assert left_divides(right, u, l) and left_divides(right, v, l)
    assert words_equal(right, l, right_lcm(right, v, u))


@given(word_over(3, 5), word_over(3, 5))
def test_divisibility_antisymmetric(u, v):
    right, _ = certified_tables(3, 5)
    if left_divides(right, u, v) and left_divides(right, v, u):
        assert words_equal(right, u, v)


@given(st.data())
def test_equality_matches_oracle(data):
    b = ball(3, 5, 9)
    right, _ = certified_tables(3, 5)
    stratum = data.draw(st.sampled_from([ws for ws in b.words if len(ws) > 1]))
    x, y = data.draw(st.sampled_from(stratum)), data.draw(st.sampled_from(stratum))
    u = tuple(ord(c) - 64 for c in x)
    v = tuple(ord(c) - 64 for c in y)
    assert words_equal(right, u, v) == (b.class_of[x] == b.class_of[y])


def test_concurrent_queries_agree():
    from concurrent.futures import ThreadPoolExecutor

    p = compute_params(4, 7)
    t = ComplementTable.from_presentation(build_presentation(p, "r1"), scale=28)
    certify(t)
    pairs = [((i, 4, j), (j, 4, i)) for i in range(1, 5) for j in range(1, 5)] * 4
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(lambda uv: t.reverse(*uv), pairs))
    fresh = ComplementTable.from_presentation(t.presentation, scale=28)
    assert got == [fresh.reverse(*uv) for uv in pairs]
