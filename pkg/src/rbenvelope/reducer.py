"""Normal forms modulo the rewriting system.

Two strategies are provided and must agree on every input:

``innermost``  memoised, bottom-up.  Contents of R-letters are normalised
               first; once they are irreducible any remaining match sits at
               the top level of the word.  Used for bulk work.
``outermost``  repeatedly rewrites the largest reducible monomial of the
               polynomial at its leftmost-outermost match.  Can record a
               trace of the rewrite steps.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field

from .poly import Poly, add_into, Q
from .prelie import HatLie
from .report import Report
from .rules import (
    ALL_FAMILIES,
    Family,
    RuleMatch,
    find_match,
    local_replacement,
    top_match,
)
from .words import Word, deg_r, order_key, weight

STRATEGIES = ("innermost", "outermost")


class ReductionLimitError(RuntimeError):
    pass


@dataclass
class TraceStep:
    coefficient: Q
    match: RuleMatch


def _families(families) -> frozenset:
    if families is None or families == "all":
        return ALL_FAMILIES
    if isinstance(families, (str, Family)):
        return frozenset([Family(families)])
    return frozenset(Family(f) for f in families)


@dataclass
class Reducer:
    """Normal-form engine for one hat algebra and one family subset.

    The word cache maps a word to its normal form (a plain dict); it is a
    cache of a pure function and may be shared freely.
    """

    H: HatLie
    families: frozenset = ALL_FAMILIES
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.families = _families(self.families)

    # -- innermost, memoised --------------------------------------------------

    def nf_word(self, w: Word) -> dict:
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        res = self._nf_word(w)
        self.cache[w] = res
        return res

    def _nf_word(self, w: Word) -> dict:
        changed = False
        parts = []
        for a in w:
            if type(a) is tuple:
                inner = self.nf_word(a)
                if not inner:
                    return {}
                if len(inner) != 1 or inner.get(a) != 1:
                    changed = True
                parts.append(inner)
            else:
                parts.append(None)
        if changed:
            acc: dict = {(): Q(1)}
            for a, inner in zip(w, parts):
                if inner is None:
                    acc = {u + (a,): c for u, c in acc.items()}
                else:
                    nxt: dict = {}
                    for u, c in acc.items():
                        for v, d in inner.items():
                            add_into(nxt, {u + (v,): c * d})
                    acc = nxt
            return self.nf_dict(acc)
        m = top_match(w, self.families)
        if m is None:
            return {w: Q(1)}
        start, stop, fam, params = m
        pre, post = w[:start], w[stop:]
        local = local_replacement(fam, params, self.H)
        return self.nf_dict({pre + u + post: c for u, c in local.items()})

    def nf_dict(self, terms: dict) -> dict:
        out: dict = {}
        for u, c in terms.items():
            for v, d in self.nf_word(u).items():
                s = out.get(v, 0) + c * d
                if s:
                    out[v] = s
                else:
                    del out[v]
        return out

    # -- outermost, largest monomial first ------------------------------------

    def nf_outermost(self, p: dict, max_steps: int | None = None, trace: list | None = None) -> dict:
        cur = dict(p)
        irreducible: set = set()
        if max_steps is None:
            max_steps = default_step_limit(cur)
        steps = 0
        while True:
            pending = [u for u in cur if u not in irreducible]
            if not pending:
                return cur
            u = max(pending, key=order_key)
            m = find_match(u, self.families)
            if m is None:
                irreducible.add(u)
                continue
            steps += 1
            if steps > max_steps:
                raise ReductionLimitError(f"normal form exceeded {max_steps} rewrite steps")
            c = cur.pop(u)
            if trace is not None:
                trace.append(TraceStep(c, m))
            for v, d in Poly._raw(local_replacement(m.family, m.params, self.H)).in_context(m.context):
                s = cur.get(v, 0) + c * d
                if s:
                    cur[v] = s
                else:
                    del cur[v]

    # -- public ---------------------------------------------------------------

    def normal_form(self, p: Poly, strategy: str = "innermost", **kw) -> Poly:
        if strategy == "innermost":
            return Poly._raw(self.nf_dict(p.terms))
        if strategy == "outermost":
            return Poly._raw(self.nf_outermost(p.terms, **kw))
        raise ValueError(f"unknown strategy {strategy!r}")

    def is_irreducible(self, w: Word) -> bool:
        return find_match(w, self.families) is None


def default_step_limit(terms: dict) -> int:
    # generous: grows with the size of the largest input word
    size = max((weight(u) + 2 * deg_r(u) for u in terms), default=0)
    return 10_000 * (size + 1) ** 3


_REDUCERS: dict = {}


def reducer_for(H: HatLie, families=None) -> Reducer:
    fams = _families(families)
    key = (id(H), fams)
    red = _REDUCERS.get(key)
    if red is None or red.H is not H:
        red = _REDUCERS[key] = Reducer(H, fams)
    return red


def normal_form(p: Poly, H: HatLie, families=None, strategy: str = "outermost", trace: list | None = None,
                max_steps: int | None = None) -> Poly:
    """Normal form of ``p`` modulo the selected families.

    The default strategy rewrites the largest reducible monomial first.
    """
    red = reducer_for(H, families)
    if strategy == "outermost":
        return Poly._raw(red.nf_outermost(p.terms, max_steps=max_steps, trace=trace))
    if trace is not None:
        raise ValueError("traces are only recorded by the outermost strategy")
    return red.normal_form(p, strategy)


def is_irreducible(w: Word, families=None) -> bool:
    return find_match(w, _families(families)) is None


def trace_sum(trace: list, H: HatLie) -> Poly:
    """``sum c_i q_i|_{s_i}`` over a trace: equals ``p - normal_form(p)``."""
    from .rules import relation_of

    total: dict = {}
    for step in trace:
        rel = relation_of(step.match.lead, H, frozenset([step.match.family]))
        add_into(total, rel.poly.in_context(step.match.context).terms, step.coefficient)
    return Poly._raw(total)


# --- random sampling and confluence ------------------------------------------------


def random_word(rng: random.Random, n: int, max_weight: int, max_rdeg: int) -> Word:
    """A random word with at most the given numbers of letters and R's."""
    wt = rng.randint(1, max_weight)
    rd = rng.randint(0, max_rdeg) if max_rdeg > 0 else 0
    return _random_exact(rng, n, wt, min(rd, wt))


def _random_exact(rng, n, wt, rd):
    # wt >= 1 letters, rd R's; every R content needs at least one letter
    if rd == 0:
        return tuple(rng.randrange(2 * n) for _ in range(wt))
    # choose how many R's sit at the top level and how letters split
    top_r = rng.randint(1, rd)
    inner_r = rd - top_r
    n_top_letters = rng.randint(0, wt - top_r) if wt > top_r else 0
    rest = wt - n_top_letters
    # distribute `rest` letters (>= 1 each) and `inner_r` R's over top_r wraps
    cuts = sorted(rng.sample(range(1, rest), top_r - 1)) if top_r > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [rest])]
    rs = [0] * top_r
    for _ in range(inner_r):
        rs[rng.randrange(top_r)] += 1
    atoms = [rng.randrange(2 * n) for _ in range(n_top_letters)]
    for size, r in zip(sizes, rs):
        atoms.append(_random_exact(rng, n, size, min(r, size)))
    rng.shuffle(atoms)
    return tuple(atoms)


def random_poly(rng: random.Random, n: int, max_weight: int, max_rdeg: int, max_terms: int = 3) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(rng, n, max_weight, max_rdeg)
        terms[w] = terms.get(w, 0) + Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    return Poly(terms)


def confluence_sample(H: HatLie, count: int, max_weight: int = 6, max_rdeg: int = 2, seed: int = 0,
                      polys=None) -> Report:
    """Normal forms under both strategies must agree on random inputs."""
    from .textio import print_expr

    rep = Report("confluence", {"samples": count, "max_deg": max_weight, "max_rdeg": max_rdeg}, seed)
    chk = rep.check("strategy-agreement")
    rng = random.Random(seed)
    inner = Reducer(H)
    outer = Reducer(H)
    if polys is None:
        polys = (random_poly(rng, H.n, max_weight, max_rdeg) for _ in range(count))
    for p in polys:
        a = inner.nf_dict(p.terms)
        b = outer.nf_outermost(p.terms)
        chk.record(a == b, print_expr(p), f"innermost={print_expr(Poly._raw(a))} outermost={print_expr(Poly._raw(b))}")
    return rep


def _bump_recursion_limit(limit: int = 20_000) -> None:
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)


_bump_recursion_limit()
