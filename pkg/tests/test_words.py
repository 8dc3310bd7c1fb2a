import json

import pytest
from hypothesis import given, strategies as st

from torus_garside.params import compute_params
from torus_garside.presentations import build_presentation
from torus_garside.words import (
    Presentation,
    Variant,
    format_word,
    lambda_length,
    make_presentation,
    opposite_presentation,
    parse_word,
    validate_presentation,
)

words = st.lists(st.integers(1, 4), max_size=12).map(tuple)


def test_practical_3_5_validates_clean():
    assert validate_presentation(build_presentation(compute_params(3, 5), "practical")) == []


def test_empty_side_reported():
    p = make_presentation(2, [((1,), ())], (1, 1), Variant.RAW)
    assert any("empty side" in v for v in validate_presentation(p))


def test_duplicate_pair_reported():
    p = make_presentation(2, [((1, 2), (2, 1)), ((1, 1, 2), (2, 2, 1))], (1, 1), Variant.RAW)
    assert any("duplicate complement pair" in v for v in validate_presentation(p))


def test_inhomogeneous_reported():
    p = make_presentation(2, [((1, 2, 1), (2, 2))], (1, 1), Variant.RAW)
    assert any("inhomogeneous" in v for v in validate_presentation(p))


def test_same_first_letter_reported_only_for_complemented():
    rels = [((1, 2), (1, 2))]
    assert validate_presentation(make_presentation(2, rels, (1, 1), Variant.RAW))
    assert validate_presentation(make_presentation(2, rels, (1, 1), Variant.OPPOSITE)) == []


def test_lambda_length_3_5():
    p = build_presentation(compute_params(3, 5), "practical")
    assert lambda_length(p, (1, 3, 1)) == 7 == lambda_length(p, (2, 3, 3))
    assert lambda_length(p, ()) == 0
    with pytest.raises(IndexError):
        lambda_length(p, (4,))


@pytest.mark.parametrize("n", range(2, 7))
def test_lambda_consecutive_case(n):
    p = build_presentation(compute_params(n, n + 1), "practical")
    for i in range(1, n):
        assert lambda_length(p, (1, n, i)) == n + i + 1 == lambda_length(p, (i + 1, n))


def test_opposite_examples():
    p23 = build_presentation(compute_params(2, 3), "practical")
    assert [(r.lhs, r.rhs) for r in opposite_presentation(p23).relations] == [((1, 2, 1), (2, 2))]
    p35 = build_presentation(compute_params(3, 5), "practical")
    opp = opposite_presentation(p35)
    assert opp.variant is Variant.OPPOSITE
    assert (opp.relations[0].lhs, opp.relations[0].rhs) == ((1, 3, 1), (3, 3, 2))
    assert opposite_presentation(opp) == p35


@given(words)
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_parse_syntax():
    assert parse_word("r1 r3^2") == (1, 3, 3)
    assert parse_word("r1, r3 r1") == (1, 3, 1)
    assert parse_word("1") == ()
    with pytest.raises(ValueError):
        parse_word("r1^0")
    with pytest.raises(ValueError):
        parse_word("r1^-1")
    with pytest.raises(ValueError):
        parse_word("t1", ("r1", "r2"))


def test_json_roundtrip():
    p = build_presentation(compute_params(3, 5), "r1")
    data = json.loads(p.to_json())
    assert data["generators"] == 3 and data["lambda"] == [2, 1, 3]
    q = Presentation.from_json(p.to_json())
    assert q.relations == p.relations and q.weights == p.weights and q.variant == p.variant


def test_presentation_rejects_bad_weights():
    with pytest.raises(ValueError):
        make_presentation(2, [], (1, 0), Variant.RAW)
