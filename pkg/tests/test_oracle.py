import pytest
from hypothesis import given, strategies as st

from torus_garside.oracle import (
    OracleBudgetExceeded,
    OutOfBall,
    cancellativity_audit,
    congruence_sample,
    default_radius,
    enumerate_ball,
    oracle_cross_check,
    oracle_equal,
    stratum_sizes,
)
from torus_garside.params import compute_params
from torus_garside.presentations import build_presentation
from torus_garside.words import Variant, make_presentation

from conftest import ball, structure

# (words, classes) per stratum; regression fixture
STRATA_2_3 = [(1, 1), (1, 1), (2, 2), (3, 3), (5, 4), (8, 6), (13, 8)]


def test_class_of_delta_2_3():
    b = ball(2, 3, 6)
    members = set(b.class_words(b.class_id((2, 2, 2))))
    assert {(1, 2, 1, 2), (2, 1, 2, 1), (2, 2, 2)} <= members


def test_radius_zero():
    b = enumerate_ball(build_presentation(compute_params(3, 5), "practical"), 0)
    assert b.members == [[""]]


def test_strata_fixture():
    assert ball(2, 3, 6).stratum_counts() == STRATA_2_3


def test_equal_examples():
    b = ball(3, 5, 8)
    assert oracle_equal(b, (1, 3, 1), (2, 3, 3))
    assert oracle_equal(b, (1, 2), (1, 2))
    assert not oracle_equal(b, (1, 2), (2, 1))
    b = enumerate_ball(build_presentation(compute_params(3, 4), "practical"), 6)
    assert oracle_equal(b, (1, 3, 2), (3, 3))
    with pytest.raises(OutOfBall):
        oracle_equal(b, (3, 3, 3), (3, 3, 3))


def test_inhomogeneous_rejected():
    p = make_presentation(2, [((1, 2), (2, 1)), ((1, 2, 1), (2, 2))], (1, 1), Variant.RAW)
    with pytest.raises(ValueError):
        enumerate_ball(p, 4)


def test_budget():
    p = build_presentation(compute_params(3, 5), "practical")
    with pytest.raises(OracleBudgetExceeded, match="lambda=6"):
        enumerate_ball(p, 8, budget=20)
    sizes = stratum_sizes(p, 8)
    assert sizes[:4] == [1, 1, 2, 4]
    assert default_radius(p, 4, budget=20) == 5


def test_budget_env(monkeypatch):
    monkeypatch.setenv("GARSIDE_BUDGET", "20")
    p = build_presentation(compute_params(3, 5), "practical")
    with pytest.raises(OracleBudgetExceeded):
        enumerate_ball(p, 8)


def test_no_word_equals_unit():
    b = ball(3, 5, 9)
    assert b.members[0] == [""]
    assert all(b.class_lambda[b.class_of[w]] == lam for lam, ws in enumerate(b.words) for w in ws)


def test_cancellativity_and_congruence():
    b = ball(3, 5, 12)
    assert cancellativity_audit(b)["ok"]
    assert congruence_sample(b, 300)["ok"]


def test_cancellativity_failure_detected():
    # aa = ba: cancelling a on the right would identify a and b, which stay distinct
    p = make_presentation(2, [((1, 1), (2, 1))], (1, 1), Variant.RAW)
    rep = cancellativity_audit(enumerate_ball(p, 3))
    assert not rep["ok"]


@pytest.mark.parametrize("nm,radius", [((2, 3), 8), ((3, 5), 12)])
def test_cross_check(nm, radius):
    rep = oracle_cross_check(ball(nm[0], nm[1], radius), structure(*nm), sample_budget=20_000)
    assert rep["ok"], rep


def test_cross_check_mismatch():
    with pytest.raises(ValueError):
        oracle_cross_check(ball(2, 3, 4), structure(3, 5))


@given(st.data())
def test_class_members_share_lambda(data):
    b = ball(2, 5, 10)
    c = data.draw(st.integers(0, len(b.members) - 1))
    lams = {b.presentation.length(w) for w in b.class_words(c)}
    assert lams == {b.class_lambda[c]}
