import random

import pytest
from hypothesis import given, settings, strategies as st

from rbenvelope.envelope import (
    Envelope, binomial_identity, check_associativity, check_dendriform_axioms, check_embedding,
    check_identities, check_lemma34, check_long_rb, check_rb_in_quotient, check_yx_relation,
    dendriform_prec, dendriform_succ, env_mul, env_R, lemma34_check, long_rb_sides,
)
from rbenvelope.prelie import PreLieAlgebra, build_hat
from rbenvelope.reducer import Reducer
from rbenvelope.rules import Family
from rbenvelope.textio import parse_expr as pe, parse_word as pw
from rbenvelope.words import x, y


def test_env_examples(env1):
    assert env_R(env1, pe("y1")) == pe("x1")
    assert env_R(env1, pe("x1")) == 0
    assert env_mul(env1, pe("y1"), pe("y1")) == pe("y1 y1")


def test_dendriform_examples(env1):
    Y = pe("y1")
    assert dendriform_succ(env1, Y, Y) == pe("y1 x1 + y1")
    assert dendriform_prec(env1, Y, Y) == pe("y1 x1")
    assert env1.induced(Y, Y) == Y
    rng = random.Random(0)
    for _ in range(10):
        assert dendriform_succ(env1, pe("x1"), env1.sample(rng)) == 0


def test_rb_law_examples(env1):
    Y = pe("y1")
    lhs = env1.mul(env1.R(Y), env1.R(Y))
    assert lhs == env1.nf(pe("R(y1 x1) + R(x1 y1)"))
    rep = check_rb_in_quotient(env1, 20, seed=5)
    assert rep.passed and rep.checks[0].total == 20


def test_rb_law_degenerate(env2):
    rng = random.Random(2)
    X = pe("x1")
    for _ in range(10):
        v = env2.sample(rng)
        assert env2.mul(env2.R(X), env2.R(v)) == 0
        assert env2.R(env2.mul(env2.R(X), v) + env2.mul(X, env2.R(v))) == 0


def test_dendriform_letters(env1):
    Y = pe("y1")
    rep = check_dendriform_axioms(env1, triples=[(Y, Y, Y), (pe("x1"), Y, Y)])
    assert rep.passed and all(c.total == 2 for c in rep.checks)


def test_sampled_laws(env2):
    assert check_rb_in_quotient(env2, 40, seed=11).passed
    assert check_dendriform_axioms(env2, 30, seed=11).passed
    assert check_associativity(env2, 30, seed=11).passed


def test_embedding(A1, A2):
    for A in (A1, A2):
        rep = check_embedding(A, 20, seed=4)
        assert rep.passed
        assert {c.name for c in rep.checks} == {"injectivity", "product-preservation", "lie-enveloping",
                                                 "left-symmetry"}


def test_embedding_zero_product():
    A = PreLieAlgebra(2, [[[0, 0]] * 2] * 2)
    env = Envelope.of(A)
    for a in (1, 2):
        for b in (1, 2):
            assert env.induced(pe(f"y{a}"), pe(f"y{b}")) == 0
    assert check_embedding(A, 10, env=env).passed


def test_embedding_nonassociative():
    from conftest import NONASSOC

    assert check_embedding(NONASSOC, 20, seed=1).passed


def test_long_rb(H1, H2):
    a = (y(1),)
    lhs, rhs = long_rb_sides([a, a], H1)
    assert Reducer(H1).nf_dict(lhs.terms) == Reducer(H1).nf_dict(rhs.terms)
    assert check_long_rb([a, a, a], H1)
    assert check_long_rb([pw("y1 x2"), pw("R(y2) y1"), (x(1),), (y(2),)], H2)
    with pytest.raises(ValueError):
        long_rb_sides([a], H1)


def test_yx_relation(H1, H2, env1):
    assert check_yx_relation(0, 1, H1)
    assert env1.nf(pe("R(y1 x1)")) == env1.nf(pe("1/2 x1 x1 - 1/2 x1"))
    assert check_yx_relation(1, 1, H1)
    assert check_yx_relation(3, 2, H2)


def test_identities_report(env2):
    rep = check_identities(env2, max_k=3, max_l=3, args_per_k=5)
    assert rep.passed


@pytest.mark.parametrize("l", [0, 1, 4])
def test_lemma34_examples(H1, l):
    assert lemma34_check(l, x(1), y(1), H1)


def test_lemma34_all_pairs(H2):
    rep = check_lemma34(H2, 3, 12)
    assert rep.passed


def test_lemma34_fails_without_brackets(H1):
    # dropping the bracket terms breaks the identity for l >= 1
    from rbenvelope.envelope import lemma34_sides

    red = Reducer(H1, frozenset([Family.STRAIGHTEN]))
    lhs, rhs = lemma34_sides(2, x(1), y(1), H1)
    plain = {w: c for w, c in rhs.terms.items() if len(w) == 3}
    assert red.nf_dict(lhs.terms) != red.nf_dict(plain)


@given(st.integers(0, 12))
def test_binomial_identity(l):
    assert binomial_identity(l)


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32))
def test_rb_law_property(seed):
    env = _env_unit2()
    assert check_rb_in_quotient(env, 3, seed=seed).passed
    assert check_associativity(env, 2, seed=seed).passed


_ENV = {}


def _env_unit2():
    from conftest import UNIT2

    if "u" not in _ENV:
        _ENV["u"] = Envelope.of(UNIT2)
    return _ENV["u"]
