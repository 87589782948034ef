"""Compositions of relations and bounded verification that every one is trivial.

A passing run only says that no nontrivial composition exists among the
relations whose leading words fit the bounds; it is not a proof.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .poly import Poly, Q
from .prelie import HatLie
from .reducer import Reducer
from .report import Report
from .rules import Relation, enumerate_relations
from .textio import format_word
from .words import STAR, Word, occurrences, order_key, subword_sites, x as xl, y as yl

# reducer cache entries kept per worker before a reset (bounds memory)
CACHE_LIMIT = 300_000

INTERSECTION = "intersection"
INCLUSION = "inclusion"


class CompositionError(AssertionError):
    pass


@dataclass(frozen=True)
class Composition:
    kind: str
    f: Relation
    g: Relation
    w: Word
    data: tuple
    value: Poly

    def label(self) -> str:
        return f"{self.kind} {self.f.family}/{self.g.family}"


def _checked(c: Composition) -> Composition:
    wk = order_key(c.w)
    if any(order_key(u) >= wk for u in c.value.terms):
        raise CompositionError(f"composition value not below its ambient word ({c.label()})")
    return c


def intersection_compositions(f: Relation, g: Relation) -> list[Composition]:
    """Top-level overlaps ``w = lead(f) mu = nu lead(g)`` with both ``mu, nu`` non-empty."""
    fl, gl = f.lhs, g.lhs
    out = []
    for L in range(1, min(len(fl), len(gl))):
        if fl[-L:] == gl[:L]:
            mu, nu = gl[L:], fl[:-L]
            w = fl + mu
            if w != nu + gl:
                raise CompositionError("overlap does not reconstruct its ambient word")
            out.append(_checked(Composition(INTERSECTION, f, g, w, (mu, nu), f.poly * mu - nu * g.poly)))
    return out


def inclusion_compositions(f: Relation, g: Relation) -> list[Composition]:
    """One composition per occurrence of ``lead(g)`` inside ``lead(f)``."""
    out = []
    for q in occurrences(f.lhs, g.lhs):
        if q == (STAR,) and f.lhs == g.lhs and f.poly == g.poly:
            continue
        out.append(_checked(Composition(INCLUSION, f, g, f.lhs, (q,), f.poly - g.poly.in_context(q))))
    return out


def check_trivial(c: Composition, H: HatLie, reducer: Reducer | None = None) -> bool:
    """Trivial iff the value reduces to zero; every rewrite then happens below ``w``."""
    red = reducer or Reducer(H)
    return not red.nf_dict(c.value.terms)


# --- bounded verification --------------------------------------------------------


def _pair_key(c: Composition) -> str:
    return f"{c.kind}:{c.f.family}/{c.g.family}"


def compositions_of(f: Relation, by_lhs: dict, by_prefix: dict):
    """All compositions with ``f`` as the first relation against the indexed set."""
    fl = f.lhs
    for q, u in subword_sites(fl):
        g = by_lhs.get(u)
        if g is None or (q == (STAR,) and g is f):
            continue
        yield Composition(INCLUSION, f, g, fl, (q,), f.poly - g.poly.in_context(q))
    for L in range(1, len(fl)):
        for g in by_prefix.get(fl[-L:], ()):
            if len(g.lhs) > L:
                mu, nu = g.lhs[L:], fl[:-L]
                yield Composition(INTERSECTION, f, g, fl + mu, (mu, nu), f.poly * mu - nu * g.poly)


def _index(relations):
    by_lhs = {r.lhs: r for r in relations}
    by_prefix: dict = defaultdict(list)
    for r in relations:
        for L in range(1, len(r.lhs)):
            by_prefix[r.lhs[:L]].append(r)
    return by_lhs, by_prefix


def _check_chunk(args):
    H, relations, lo, hi = args
    from .textio import format_word, print_expr

    by_lhs, by_prefix = _index(relations)
    red = Reducer(H)
    counts: Counter = Counter()
    failures = []
    for idx in range(lo, hi):
        f = relations[idx]
        for c in compositions_of(f, by_lhs, by_prefix):
            _checked(c)
            key = _pair_key(c)
            counts[key] += 1
            nf = red.nf_dict(c.value.terms)
            if nf:
                failures.append((key, {
                    "witness": f"w = {format_word(c.w)}",
                    "detail": f"f = {format_word(f.lhs)}; g = {format_word(c.g.lhs)}; "
                              f"normal form {print_expr(Poly._raw(nf))}",
                }))
        if len(red.cache) > CACHE_LIMIT:
            red.cache.clear()
    return counts, failures


def verify_gsb(H: HatLie, max_deg: int, max_deg_r: int, jobs: int = 1, progress=None) -> Report:
    """Form every composition among the bounded relations and reduce it."""
    rep = Report("gsb-verify", {"n": H.n, "max_deg": max_deg, "max_rdeg": max_deg_r})
    relations = enumerate_relations(H, max_deg, max_deg_r)
    fam_counts = Counter(str(r.family) for r in relations)
    rel_check = rep.check("relations")
    for r in relations:
        rel_check.record(r.poly.leading() == r.lhs and r.poly.is_monic(), format_word(r.lhs))

    n = len(relations)
    chunk = max(1, n // (jobs * 8 or 1)) if n else 1
    tasks = [(H, relations, lo, min(n, lo + chunk)) for lo in range(0, n, chunk)]
    counts: Counter = Counter()
    failures: list = []
    if jobs > 1 and len(tasks) > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(jobs) as pool:
            for res in pool.imap(_check_chunk, tasks):
                counts.update(res[0])
                failures.extend(res[1])
                if progress:
                    progress(sum(counts.values()))
    else:
        for t in tasks:
            res = _check_chunk(t)
            counts.update(res[0])
            failures.extend(res[1])
            if progress:
                progress(sum(counts.values()))

    fail_by_key = defaultdict(list)
    for key, f in failures:
        fail_by_key[key].append(f)
    for key in sorted(set(counts) | set(fail_by_key)):
        chk = rep.check(key)
        chk.total = counts[key]
        chk.failures = fail_by_key[key]
    rep.params["relations"] = dict(sorted(fam_counts.items()))
    rep.params["compositions"] = sum(counts.values())
    rep.notes.append(
        "bounded check: no nontrivial composition among relations with leading words "
        f"of at most {max_deg} letters and {max_deg_r} R's; not a proof beyond the bound"
    )
    return rep


# --- the auxiliary identity from the inclusion case with Straighten -------------------


@dataclass(frozen=True)
class IdentityParams:
    """``R(z1) X1 R(z2) ... R(zs) Xs R(zs1)`` with x-words ``Xi`` (indices, 1-based)."""

    blocks: tuple
    mids: tuple = ()
    z_first: Word | None = None
    z_last: Word | None = None


def _validate_params(p: IdentityParams):
    if not p.blocks or len(p.mids) != len(p.blocks) - 1:
        raise ValueError("need s >= 1 blocks and s - 1 inner words")
    if any(not b for b in p.blocks):
        raise ValueError("every x-block must be non-empty")
    if any(i < 1 for b in p.blocks for i in b):
        raise ValueError("letter indices start at 1")
    for z in (p.z_first, p.z_last, *p.mids):
        if z is not None and (not z or (len(z) == 1 and type(z[0]) is int)):
            raise ValueError("inner words must be non-empty and not single letters")


def proof_identity_A(p: IdentityParams, literal: bool = False) -> Poly:
    """The combination that must vanish when Straighten acts in the last block.

    ``Xs`` has its largest letter ``x_b`` at positions ``K`` (``|K| = m``) and
    ``Xs0`` is ``Xs`` with those letters removed.  The correction term is
    ``Xs0 y_b x_b^(m-1)`` with multiplicity ``m``; ``literal=True`` uses the
    printed variant ``Xs0 y_b x_b^m`` with multiplicity ``m + 1``, which does
    not vanish (kept for comparison in the tests).
    """
    _validate_params(p)
    blocks = [tuple(xl(i) for i in b) for b in p.blocks]
    segs = []
    if p.z_first is not None:
        segs.append(("z", p.z_first))
    for j, b in enumerate(blocks):
        if j:
            segs.append(("z", p.mids[j - 1]))
        segs.append(("x", b))
    if p.z_last is not None:
        segs.append(("z", p.z_last))

    def build(ss):
        out: list = []
        for tag, v in ss:
            if tag == "z":
                out.append(v)
            else:
                out.extend(v)
        return tuple(out)

    terms: dict = {}

    def add(w, c):
        s = terms.get(w, 0) + Q(c)
        if s:
            terms[w] = s
        else:
            terms.pop(w, None)

    add(build(segs), 1)
    last_x = max(i for i, (tag, _) in enumerate(segs) if tag == "x")
    Xs = segs[last_x][1]
    beta = max(Xs)
    K = [t for t, c in enumerate(Xs) if c == beta] if Xs else []
    m = len(K)
    for idx, (tag, v) in enumerate(segs):
        before, after = build(segs[:idx]), build(segs[idx + 1:])
        if tag == "z":
            add((before + v + after,), -1)
        else:
            for t in range(len(v)):
                add((before + v[:t] + (v[t] - 1,) + v[t + 1:] + after,), -1)
    if m:
        before, after = build(segs[:last_x]), build(segs[last_x + 1:])
        x0 = tuple(c for c in Xs if c != beta)
        power, mult = (m, m + 1) if literal else (m - 1, m)
        corr = (before + x0 + (beta - 1,) + (beta,) * power + after,)
        # each K position carries "- corr" inside its bracket, then "- mult * corr"
        add(corr, m)
        add(corr, -mult)
    return Poly._raw(terms)


def check_proof_identity_A(p: IdentityParams, H: HatLie, reducer: Reducer | None = None) -> bool:
    red = reducer or Reducer(H)
    return not red.nf_dict(proof_identity_A(p).terms)


def identity_instances(n: int, max_len: int = 3):
    """Small parameter sets: s = 1, 2 with short blocks and short inner words."""
    z_pool = [(yl(1), yl(1)), (xl(1), yl(1)), ((yl(1), xl(1)),)]
    idx = range(1, n + 1)
    blocks = [b for L in range(1, max_len + 1) for b in combinations_with_replacement(idx, L)]
    blocks += [tuple(reversed(b)) for b in blocks if len(set(b)) > 1]
    for b in blocks:
        yield IdentityParams((b,))
        yield IdentityParams((b,), z_first=z_pool[0])
        yield IdentityParams((b,), z_last=z_pool[1])
    for b1 in blocks[:4]:
        for b2 in blocks:
            yield IdentityParams((b1, b2), (z_pool[2],))
            yield IdentityParams((b1, b2), (z_pool[0],), z_last=z_pool[2])

