"""Arithmetic in the enveloping RB-algebra on normal-form representatives.

Elements are polynomials whose monomials are all irreducible.  Products and
R are taken in the free algebra and reduced again.  On top of that sit the
dendriform products ``p > q = R(p) q`` and ``p < q = p R(q)`` and the checks
of the identities that hold in the quotient.
"""

from __future__ import annotations

import random
from itertools import product
from math import comb

from .poly import Poly, Q
from .prelie import HatLie, PreLieAlgebra, build_hat, iterated_combo
from .reducer import Reducer, random_poly
from .report import Report
from .rules import Family
from .textio import format_word, print_expr
from .words import Word, letter_index, x as xl, y as yl


class Envelope:
    """Normal-form arithmetic for one hat algebra (shares one reduction cache)."""

    def __init__(self, H: HatLie):
        self.H = H
        self.red = Reducer(H)

    @classmethod
    def of(cls, A: PreLieAlgebra) -> "Envelope":
        return cls(build_hat(A))

    def nf(self, p: Poly) -> Poly:
        return Poly._raw(self.red.nf_dict(p.terms))

    def mul(self, p: Poly, q: Poly) -> Poly:
        return self.nf(p * q)

    def R(self, p: Poly) -> Poly:
        return self.nf(p.wrap())

    def succ(self, p: Poly, q: Poly) -> Poly:
        return self.mul(self.R(p), q)

    def prec(self, p: Poly, q: Poly) -> Poly:
        return self.mul(p, self.R(q))

    def induced(self, p: Poly, q: Poly) -> Poly:
        """The pre-Lie product ``p > q - q < p``."""
        return self.succ(p, q) - self.prec(q, p)

    def letter(self, code: int) -> Poly:
        return Poly.word((code,))

    def combo(self, combo: dict) -> Poly:
        return Poly({(code,): c for code, c in combo.items()})

    def is_normal(self, p: Poly) -> bool:
        return self.nf(p) == p

    def sample(self, rng: random.Random, max_weight: int = 3, max_rdeg: int = 1, max_terms: int = 2) -> Poly:
        """A random non-zero element in normal form."""
        while True:
            p = self.nf(random_poly(rng, self.H.n, max_weight, max_rdeg, max_terms))
            if p:
                return p


def env_mul(env: Envelope, p: Poly, q: Poly) -> Poly:
    return env.mul(p, q)


def env_R(env: Envelope, p: Poly) -> Poly:
    return env.R(p)


def dendriform_succ(env: Envelope, p: Poly, q: Poly) -> Poly:
    return env.succ(p, q)


def dendriform_prec(env: Envelope, p: Poly, q: Poly) -> Poly:
    return env.prec(p, q)


# --- sampled identities ------------------------------------------------------------


def check_rb_in_quotient(env: Envelope, samples: int = 200, seed: int = 0, max_weight: int = 3,
                         max_rdeg: int = 1) -> Report:
    rep = Report("rb-law", {"samples": samples, "max_deg": max_weight, "max_rdeg": max_rdeg}, seed)
    chk = rep.check("rb-law")
    rng = random.Random(seed)
    for _ in range(samples):
        u = env.sample(rng, max_weight, max_rdeg)
        v = env.sample(rng, max_weight, max_rdeg)
        Ru, Rv = env.R(u), env.R(v)
        lhs = env.mul(Ru, Rv)
        rhs = env.R(env.mul(Ru, v) + env.mul(u, Rv))
        chk.record(lhs == rhs, f"u = {print_expr(u)}; v = {print_expr(v)}", print_expr(lhs - rhs))
    return rep


def check_associativity(env: Envelope, samples: int = 50, seed: int = 0) -> Report:
    rep = Report("associativity", {"samples": samples}, seed)
    chk = rep.check("associativity")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (env.sample(rng) for _ in range(3))
        d = env.mul(env.mul(a, b), c) - env.mul(a, env.mul(b, c))
        chk.record(not d, " ; ".join(map(print_expr, (a, b, c))), print_expr(d))
    return rep


def dendriform_defects(env: Envelope, a: Poly, b: Poly, c: Poly) -> tuple[Poly, Poly, Poly]:
    s, p = env.succ, env.prec
    one = s(s(a, b) + p(a, b), c) - s(a, s(b, c))
    two = p(s(a, b), c) - s(a, p(b, c))
    three = p(a, s(b, c) + p(b, c)) - p(p(a, b), c)
    return one, two, three


def check_dendriform_axioms(env: Envelope, samples: int = 100, seed: int = 0, triples=None) -> Report:
    rep = Report("dendriform", {"samples": samples}, seed)
    names = ("dendriform-1", "dendriform-2", "dendriform-3")
    checks = [rep.check(n) for n in names]
    rng = random.Random(seed)
    if triples is None:
        triples = ([env.sample(rng, 2, 1) for _ in range(3)] for _ in range(samples))
    for a, b, c in triples:
        w = " ; ".join(map(print_expr, (a, b, c)))
        for chk, d in zip(checks, dendriform_defects(env, a, b, c)):
            chk.record(not d, w, print_expr(d))
    return rep


def embed(env: Envelope, vec) -> Poly:
    """Image ``a -> a'`` of a pre-Lie element (coefficient vector) as y-letters."""
    return Poly({(yl(k + 1),): c for k, c in enumerate(vec) if c})


def check_embedding(A: PreLieAlgebra, samples: int = 100, seed: int = 0, env: Envelope | None = None) -> Report:
    env = env or Envelope.of(A)
    H = env.H
    n = A.n
    rep = Report("embedding", {"n": n, "samples": samples}, seed)

    inj = rep.check("injectivity")
    images = [env.nf(env.letter(yl(i + 1))) for i in range(n)]
    words = []
    for i, img in enumerate(images):
        ok = len(img) == 1 and next(iter(img))[1] == 1 and env.red.is_irreducible(next(iter(img))[0])
        inj.record(ok, f"y{i + 1}", print_expr(img))
        if ok:
            words.append(next(iter(img))[0])
    inj.record(len(set(words)) == n, "images", "images of basis elements are not distinct")

    pres = rep.check("product-preservation")
    for a, b in product(range(n), repeat=2):
        lhs = env.induced(images[a], images[b])
        rhs = embed(env, A.mul(A.basis(a), A.basis(b)))
        pres.record(lhs == rhs, f"e{a + 1}.e{b + 1}", f"{print_expr(lhs)} != {print_expr(rhs)}")

    lie = rep.check("lie-enveloping")
    for u, v in product(H.letters(), repeat=2):
        U, V = env.letter(u), env.letter(v)
        d = env.mul(U, V) - env.mul(V, U) - env.combo(H.bracket_letters(u, v))
        lie.record(not d, f"{format_word((u,))}, {format_word((v,))}", print_expr(d))

    sym = rep.check("left-symmetry")
    rng = random.Random(seed)
    m = env.induced
    for _ in range(samples):
        a, b, c = (_sample_generated(env, rng, n) for _ in range(3))
        d = (m(m(a, b), c) - m(a, m(b, c))) - (m(m(b, a), c) - m(b, m(a, c)))
        sym.record(not d, " ; ".join(map(print_expr, (a, b, c))), print_expr(d))
    return rep


def _sample_generated(env: Envelope, rng: random.Random, n: int) -> Poly:
    """A random element of the subalgebra generated by the y-letters under > and <."""
    def gen(depth):
        if depth == 0 or rng.random() < 0.4:
            terms = {}
            for _ in range(rng.randint(1, 2)):
                terms[(yl(rng.randint(1, n)),)] = Q(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2]))
            return Poly(terms)
        a, b = gen(depth - 1), gen(depth - 1)
        return env.succ(a, b) if rng.random() < 0.5 else env.prec(a, b)

    while True:
        p = gen(2)
        if p:
            return p


# --- identities --------------------------------------------------------------------


def long_rb_sides(args: list, H: HatLie) -> tuple[Poly, Poly]:
    if len(args) < 2:
        raise ValueError("need at least two arguments")
    lhs = Poly.word(tuple(args))
    rhs: dict = {}
    for i, a in enumerate(args):
        word = tuple(args[:i]) + a + tuple(args[i + 1:])
        rhs[(word,)] = rhs.get((word,), 0) + 1
    return lhs, Poly(rhs)


def check_long_rb(args: list, H: HatLie, env: Envelope | None = None) -> bool:
    """``R(a1)..R(ak) = R(sum_i R(a1)..a_i..R(ak))`` for words ``a_i``."""
    env = env or Envelope(H)
    lhs, rhs = long_rb_sides(args, H)
    return env.nf(lhs) == env.nf(rhs)


def yx_sides(l: int, beta: int, H: HatLie) -> dict:
    """Both sides of the closed formula for ``R(y x^l)`` and of its derivation."""
    yb, xb = yl(beta), xl(beta)
    yx = Poly.word((yb,) + (xb,) * l).wrap()
    closed: dict = {(xb,) * (l + 1): Q(1)}
    for i in range(2, l + 2):
        coef = (-1) ** i * comb(l + 1, i)
        for code, c in iterated_combo(H, {yb: Q(1)}, xb, i - 1).items():
            w = ((code,) + (xb,) * (l + 1 - i),)
            closed[w] = closed.get(w, 0) + coef * c
    closed_p = Poly(closed).scale(Q(1, l + 1))
    power = Poly.word((xb,) * (l + 1))
    r_power = Poly.word(((yb,),) * (l + 1))
    spread = Poly({(xb,) * j + (yb,) + (xb,) * (l - j): 1 for j in range(l + 1)}).wrap()
    return {"R(yx^l)": yx, "closed": closed_p, "x^(l+1)": power, "R(y)^(l+1)": r_power, "R(spread)": spread}


def check_yx_relation(l: int, beta: int, H: HatLie, env: Envelope | None = None) -> bool:
    if l < 0:
        raise ValueError("l must be >= 0")
    env = env or Envelope(H)
    s = {k: env.nf(v) for k, v in yx_sides(l, beta, H).items()}
    return s["R(yx^l)"] == s["closed"] and s["x^(l+1)"] == s["R(y)^(l+1)"] == s["R(spread)"]


def lemma34_sides(l: int, xcode: int, ycode: int, H: HatLie) -> tuple[Poly, Poly]:
    """``(l+1) y x^l`` and the bracket expansion plus ``sum_j x^j y x^(l-j)``."""
    lhs = Poly.word((ycode,) + (xcode,) * l, l + 1) if l else Poly.word((ycode,))
    rhs: dict = {}
    for i in range(2, l + 2):
        coef = (-1) ** i * comb(l + 1, i)
        for code, c in iterated_combo(H, {ycode: Q(1)}, xcode, i - 1).items():
            w = (code,) + (xcode,) * (l + 1 - i)
            rhs[w] = rhs.get(w, 0) + coef * c
    for j in range(l + 1):
        w = (xcode,) * j + (ycode,) + (xcode,) * (l - j)
        rhs[w] = rhs.get(w, 0) + 1
    return lhs, Poly(rhs)


def lemma34_check(l: int, xcode: int, ycode: int, H: HatLie, reducer: Reducer | None = None) -> bool:
    """Compare both sides in the universal enveloping algebra (straightening only)."""
    red = reducer or Reducer(H, frozenset([Family.STRAIGHTEN]))
    lhs, rhs = lemma34_sides(l, xcode, ycode, H)
    return red.nf_dict(lhs.terms) == red.nf_dict(rhs.terms) and binomial_identity(l)


def binomial_identity(l: int) -> bool:
    """The coefficient identity behind the lemma, in closed and in summed form."""
    for i in range(2, l + 2):
        target = comb(l + 1, i)
        if (l + 1) * comb(l, i - 1) - (i - 1) * comb(l + 1, i) != target:
            return False
        hockey = sum(comb(m, i - 2) for m in range(i - 2, l))
        if hockey != comb(l, i - 1):
            return False
        # 1 + i + i(i+1)/2 + ... + i(i+1)...l/(l-i+1)!
        rising = sum(comb(i - 1 + m, m) for m in range(l - i + 2))
        if rising != comb(l + 1, i):
            return False
        weighted = sum((l - m) * comb(m, i - 2) for m in range(i - 2, l))
        if weighted != target:
            return False
    return True


def check_lemma34(H: HatLie, max_l: int = 6, binomial_l: int = 12) -> Report:
    rep = Report("lemma34", {"n": H.n, "max_l": max_l, "binomial_l": binomial_l})
    red = Reducer(H, frozenset([Family.STRAIGHTEN]))
    chk = rep.check("lemma34")
    for l in range(max_l + 1):
        for u, v in product(H.letters(), repeat=2):
            lhs, rhs = lemma34_sides(l, u, v, H)
            ok = red.nf_dict(lhs.terms) == red.nf_dict(rhs.terms)
            chk.record(ok, f"l={l} x={format_word((u,))} y={format_word((v,))}")
    bino = rep.check("binomial-identity")
    for l in range(binomial_l + 1):
        bino.record(binomial_identity(l), f"l={l}")
    return rep


def check_identities(env: Envelope, max_k: int = 4, max_l: int = 5, seed: int = 0, args_per_k: int = 20) -> Report:
    """The long RB identity for ``k <= max_k`` and the ``R(y x^l)`` formulas."""
    H = env.H
    rep = Report("identities", {"max_k": max_k, "max_l": max_l}, seed)
    lrb = rep.check("long-rb")
    rng = random.Random(seed)
    pool = [(yl(1),)] + [w for w in _small_words(H.n)]
    for k in range(2, max_k + 1):
        tuples = [[(yl(1),)] * k]
        tuples += [[rng.choice(pool) for _ in range(k)] for _ in range(args_per_k)]
        for args in tuples:
            ok = check_long_rb(args, H, env)
            lrb.record(ok, " , ".join(format_word(a) for a in args))
    yx = rep.check("yx-relation")
    for l in range(max_l + 1):
        for beta in range(1, H.n + 1):
            yx.record(check_yx_relation(l, beta, H, env), f"l={l} beta={beta}")
    return rep


def _small_words(n: int) -> list[Word]:
    from .words import words_up_to

    return list(words_up_to(n, 2, 1))


def letter_images_distinct(env: Envelope) -> bool:
    imgs = {tuple(sorted(env.nf(env.letter(c)).terms)) for c in env.H.letters()}
    return len(imgs) == 2 * env.H.n


__all__ = [
    "Envelope",
    "env_mul",
    "env_R",
    "dendriform_succ",
    "dendriform_prec",
    "check_rb_in_quotient",
    "check_dendriform_axioms",
    "check_embedding",
    "check_long_rb",
    "check_yx_relation",
    "lemma34_check",
    "binomial_identity",
    "letter_index",
]
