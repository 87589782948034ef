import random

import pytest
from hypothesis import given, settings

from rbenvelope.poly import Q
from rbenvelope.reducer import (
    Reducer, ReductionLimitError, confluence_sample, is_irreducible, normal_form, random_poly, trace_sum,
)
from rbenvelope.rules import Family, find_match
from rbenvelope.textio import parse_expr as pe, parse_word as pw, print_expr

from strategies import polys

WORKED = [
    ("R(y1)", "x1"),
    ("R(x1 x1)", "0"),
    ("x1 y1", "y1 x1 + y1"),
    ("R(y1 x1)", "1/2 x1 x1 - 1/2 x1"),
    ("x1 y1 y1", "y1 y1 x1 + 2 y1 y1"),
    ("R(y1 x1 x1)", "1/3 x1 x1 x1 - 1/2 x1 x1 + 1/6 x1"),
]


@pytest.mark.parametrize("strategy", ["outermost", "innermost"])
@pytest.mark.parametrize("text, expected", WORKED)
def test_worked_normal_forms(H1, text, expected, strategy):
    assert print_expr(normal_form(pe(text), H1, strategy=strategy)) == expected


def test_r_y1_x1_oracle(H1):
    # x1^2 = R(y1) R(y1) = R(y1 x1 + x1 y1) = 2 R(y1 x1) + R(y1), solved for R(y1 x1)
    lhs = normal_form(pe("R(y1 x1)"), H1)
    rhs = normal_form(pe("x1 x1 - R(y1)"), H1).scale(Q(1, 2))
    assert lhs == rhs


@pytest.mark.parametrize("text, irr", [("y1 x1", True), ("y1 y1", True), ("R(y1 x1)", False),
                                       ("R(y1 y1)", True), ("R(y1 y1) R(y1 y1)", False)])
def test_is_irreducible(text, irr):
    assert is_irreducible(pw(text)) is irr


def test_straighten_only(H2):
    p = pe("x2 x1 y1")
    q = normal_form(p, H2, families=[Family.STRAIGHTEN])
    assert all(is_irreducible(u, [Family.STRAIGHTEN]) for u in q.terms)
    assert normal_form(pe("R(y1)"), H2, families="straighten") == pe("R(y1)")


def test_letters_are_fixed(H2):
    p = pe("2 x1 - y2 + 1/3 x2")
    assert normal_form(p, H2) == p


def test_trace_soundness(H2):
    rng = random.Random(7)
    for _ in range(40):
        p = random_poly(rng, 2, 5, 2)
        tr = []
        q = normal_form(p, H2, trace=tr)
        assert p - q == trace_sum(tr, H2)


def test_trace_needs_outermost(H1):
    with pytest.raises(ValueError):
        normal_form(pe("x1 y1"), H1, strategy="innermost", trace=[])


def test_step_limit(H1):
    with pytest.raises(ReductionLimitError):
        normal_form(pe("R(y1 x1 x1 x1)"), H1, max_steps=2)


@settings(max_examples=80)
@given(polys(n=2, max_depth=2, max_len=4))
def test_idempotent_and_irreducible(H2, p):
    q = normal_form(p, H2)
    assert normal_form(q, H2) == q
    for u in q.terms:
        assert find_match(u) is None
        _no_descents_or_adjacent_wraps(u)


def _no_descents_or_adjacent_wraps(w):
    for a, b in zip(w, w[1:]):
        if type(a) is int and type(b) is int:
            assert a <= b
        assert not (type(a) is tuple and type(b) is tuple)
    for a in w:
        if type(a) is tuple:
            _no_descents_or_adjacent_wraps(a)


@given(polys(n=2, max_depth=2, max_len=4))
def test_strategies_agree(H2, p):
    assert normal_form(p, H2, strategy="innermost") == normal_form(p, H2, strategy="outermost")


def test_confluence_examples(H1):
    w = pe("y1 R(y1 y1) x1")
    assert normal_form(w, H1) == w
    rep = confluence_sample(H1, 0, polys=[pe("x1 y1 y1"), w])
    assert rep.passed and rep.checks[0].total == 2


def test_confluence_sample_deterministic(H2):
    a = confluence_sample(H2, 50, seed=3).to_dict()
    b = confluence_sample(H2, 50, seed=3).to_dict()
    assert a == b and a["pass"]


def test_linearity(H2):
    rng = random.Random(1)
    for _ in range(20):
        p, q = random_poly(rng, 2, 5, 2), random_poly(rng, 2, 5, 2)
        assert normal_form(p + q.scale(3), H2) == normal_form(p, H2) + normal_form(q, H2).scale(3)


def test_shared_cache_reducer(H1):
    red = Reducer(H1)
    assert red.normal_form(pe("R(y1 x1)")) == red.normal_form(pe("R(y1 x1)"), "outermost")
    with pytest.raises(ValueError):
        red.normal_form(pe("x1"), "sideways")
