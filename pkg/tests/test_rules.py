import pytest
from hypothesis import given, settings

from rbenvelope.poly import Poly
from rbenvelope.rules import (
    Family, RuleError, RuleMatch, all_matches, enumerate_relations, expand, find_match, lead_match,
    local_replacement, relation_of,
)
from rbenvelope.textio import parse_expr as pe, parse_word as pw
from rbenvelope.words import STAR, order_key, substitute, words_up_to, x, y

from strategies import words


def test_find_match_examples():
    m = find_match(pw("x1 y1"))
    assert m.family is Family.STRAIGHTEN and m.params == (x(1), y(1)) and m.context == (STAR,)

    m = find_match(pw("R(y1) R(x1)"))
    assert m.family is Family.RB and m.params == ((y(1),), (x(1),))

    m = find_match(pw("y1 R(y1 x1)"))
    assert m.family is Family.YCOLLAPSE
    assert m.context == (y(1), STAR)
    sh = m.params
    assert (sh.s, sh.blocks, sh.beta, sh.k, sh.z_first, sh.z_last) == (1, ((),), 1, 1, None, None)

    assert find_match(pw("y1 x1")) is None


def test_expand_examples(H1):
    assert expand(find_match(pw("x1 y1")), H1) == pe("y1 x1 + y1")
    assert expand(find_match(pw("R(y1)")), H1) == pe("x1")
    assert expand(find_match(pw("R(x1 x1)")), H1) == 0
    # RB identity with R(y1) = x1 gives R(y1 R(z)) = x1 R(z) - R(x1 z)
    m = find_match(pw("R(y1 R(y1 y1))"))
    assert m.family is Family.YCOLLAPSE and m.params.k == 0
    assert expand(m, H1) == pe("x1 R(y1 y1) - R(x1 y1 y1)")


def test_degenerate_ycollapse_is_x_beta(H2):
    for b in (1, 2):
        m = lead_match(((y(b),),))
        assert m.family is Family.YCOLLAPSE
        assert local_replacement(m.family, m.params, H2) == {(x(b),): 1}


def test_rb_is_preferred_over_wrap_rules():
    m = find_match(pw("R(y1) R(y1)"))
    assert m.family is Family.RB


def test_side_conditions():
    # a single letter between two x-blocks is not a valid inner word
    assert lead_match(pw("R(x1 y1 x1)"), {Family.XZERO}) is None
    # x_beta must exceed every letter of the last block
    assert lead_match(pw("R(x2 y1 x1)"), {Family.YCOLLAPSE}) is None
    assert lead_match(pw("R(x1 y2 x2)"), {Family.YCOLLAPSE}) is not None
    # y followed by a smaller x power is fine only with matching index
    assert lead_match(pw("R(y2 x1)"), {Family.YCOLLAPSE}) is None
    # R-content that is a bare inner word has no x-block
    assert lead_match(pw("R(R(y1) R(x1))"), {Family.XZERO}) is None


def test_expand_rejects_bad_match(H1):
    m = RuleMatch((STAR,), Family.STRAIGHTEN, (y(1), x(1)), pw("y1 x1"))
    with pytest.raises(RuleError):
        expand(m, H1)


def test_enumerate_examples(H1):
    rels = enumerate_relations(H1, 2, 0)
    assert [(r.lhs, r.family) for r in rels] == [(pw("x1 y1"), Family.STRAIGHTEN)]
    assert rels[0].poly == pe("x1 y1 - y1 x1 - y1")
    small = {r.lhs: r.poly for r in enumerate_relations(H1, 1, 1)}
    assert small[pw("R(y1)")] == pe("R(y1) - x1")
    assert small[pw("R(x1)")] == pe("R(x1)")
    assert enumerate_relations(H1, 0, 0) == []


def test_relations_monic_and_decreasing(H2):
    for r in enumerate_relations(H2, 4, 2):
        assert r.poly.leading() == r.lhs and r.poly.is_monic()
        assert relation_of(r.lhs, H2).poly == r.poly


def test_straighten_of_y_letters_has_no_bracket(H2):
    assert local_replacement(Family.STRAIGHTEN, (y(2), y(1)), H2) == {(y(1), y(2)): 1}


@settings(max_examples=200)
@given(words(n=2, max_depth=2, max_len=4))
def test_every_expansion_decreases(H2, w):
    key = order_key(w)
    for m in all_matches(w):
        assert m.ambient == w
        assert substitute(m.context, m.lead) == w
        r = expand(m, H2)
        assert all(order_key(u) < key for u in r.terms)


@given(words(n=2, max_depth=2, max_len=4))
def test_find_match_consistent_with_all_matches(w):
    m = find_match(w)
    ms = all_matches(w)
    assert (m is None) == (not ms)
    if m is not None:
        assert m == ms[0]


def test_ycollapse_general_shape(H2):
    w = pw("R(R(y1 y2) x1 R(y2 y2) y1 x1 x1 R(x1 y1))")
    m = lead_match(w)
    assert m.family is Family.YCOLLAPSE
    sh = m.params
    assert sh.s == 2 and sh.beta == 1 and sh.k == 2
    assert sh.z_first == (y(1), y(2)) and sh.z_last == (x(1), y(1))
    # single-letter contents are not allowed as inner words
    assert lead_match(pw("R(R(y1) x1 y1 x1)"), {Family.YCOLLAPSE}) is None
    assert all(order_key(u) < order_key(w) for u in expand(m, H2).terms)
