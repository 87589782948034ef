"""The rewriting system: four relation families as leading patterns and expansions.

``STRAIGHTEN``  ``u v -> v u + [u, v]`` for adjacent letters with ``u > v``.
``RB``          ``R(a) R(b) -> R(R(a) b + a R(b))``.
``XZERO``       ``R(R(z1) X1 R(z2) ... R(zs) Xs R(zs1)) -> 0`` with ``Xi`` non-empty
                words in x-letters.
``YCOLLAPSE``   ``R(R(z1) X1 ... R(zs) Xs y_b x_b^k R(zs1))`` is rewritten to a
                combination with factor ``1/(k+1)``; here ``Xs`` may be empty and
                every letter of ``Xs`` is below ``x_b``.

In the last two families ``R(z1)`` and ``R(zs1)`` are optional and every
``z`` is a word that is not a single letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .poly import Poly, add_into, Q
from .prelie import HatLie, iterated_combo
from .words import STAR, Word, order_key, substitute, words_up_to


class Family(str, Enum):
    STRAIGHTEN = "straighten"
    RB = "rb"
    XZERO = "xzero"
    YCOLLAPSE = "ycollapse"

    def __str__(self):
        return self.value


ALL_FAMILIES = frozenset(Family)
PRIORITY = (Family.STRAIGHTEN, Family.RB, Family.XZERO, Family.YCOLLAPSE)


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """Decomposition of an R-content against the XZERO / YCOLLAPSE pattern.

    ``blocks`` are the x-words ``X1..Xs`` and ``mids`` the inner words
    ``z2..zs``; ``beta`` (a letter index) is set only for YCOLLAPSE.
    """

    z_first: Word | None
    blocks: tuple
    mids: tuple
    z_last: Word | None
    beta: int | None = None
    k: int = 0

    @property
    def s(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class RuleMatch:
    context: Word
    family: Family
    params: tuple | Shape
    lead: Word

    @property
    def ambient(self) -> Word:
        return substitute(self.context, self.lead)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    poly: Poly
    family: Family
    match: RuleMatch


# --- shape recognition --------------------------------------------------------


def _nonletter(z: Word) -> bool:
    return not (len(z) == 1 and type(z[0]) is int)


def _split_prefix(atoms, last_may_be_empty: bool):
    z_first = None
    start = 0
    if atoms and type(atoms[0]) is tuple:
        z_first = atoms[0]
        if not _nonletter(z_first):
            return None
        start = 1
    blocks, mids, run = [], [], []
    for a in atoms[start:]:
        if type(a) is int:
            if not a & 1:
                return None
            run.append(a)
        else:
            if not run or not _nonletter(a):
                return None
            blocks.append(tuple(run))
            mids.append(a)
            run = []
    if not run and not last_may_be_empty:
        return None
    blocks.append(tuple(run))
    return z_first, tuple(blocks), tuple(mids)


def xzero_shape(content: Word) -> Shape | None:
    """Shape of ``R(content)`` as an XZERO leading word, or ``None``."""
    body, z_last = content, None
    if len(content) >= 2 and type(content[-1]) is tuple:
        z_last = content[-1]
        if not _nonletter(z_last):
            return None
        body = content[:-1]
    split = _split_prefix(body, last_may_be_empty=False)
    if split is None:
        return None
    return Shape(split[0], split[1], split[2], z_last)


def ycollapse_shape(content: Word) -> Shape | None:
    """Shape of ``R(content)`` as a YCOLLAPSE leading word, or ``None``."""
    pos = -1
    for i, a in enumerate(content):
        if type(a) is int and not a & 1:
            if pos >= 0:
                return None
            pos = i
    if pos < 0:
        return None
    yb = content[pos]
    xb = yb + 1
    tail = content[pos + 1:]
    k = 0
    while k < len(tail) and tail[k] == xb:
        k += 1
    rest = tail[k:]
    z_last = None
    if rest:
        if len(rest) != 1 or type(rest[0]) is not tuple or not _nonletter(rest[0]):
            return None
        z_last = rest[0]
    split = _split_prefix(content[:pos], last_may_be_empty=True)
    if split is None:
        return None
    z_first, blocks, mids = split
    if any(c >= xb for c in blocks[-1]):
        return None
    return Shape(z_first, blocks, mids, z_last, beta=yb // 2 + 1, k=k)


# --- matching -----------------------------------------------------------------


def _wrap_match(content: Word, families) -> tuple | None:
    if Family.XZERO in families:
        sh = xzero_shape(content)
        if sh is not None:
            return Family.XZERO, sh
    if Family.YCOLLAPSE in families:
        sh = ycollapse_shape(content)
        if sh is not None:
            return Family.YCOLLAPSE, sh
    return None


def top_match(w: Word, families=ALL_FAMILIES) -> tuple | None:
    """First match among the top-level atoms of ``w``, ignoring deeper levels.

    Returns ``(start, stop, family, params)``; the leading word is
    ``w[start:stop]``.
    """
    st = Family.STRAIGHTEN in families
    rb = Family.RB in families
    wr = Family.XZERO in families or Family.YCOLLAPSE in families
    last = len(w) - 1
    for i, a in enumerate(w):
        if type(a) is int:
            if st and i < last:
                b = w[i + 1]
                if type(b) is int and a > b:
                    return i, i + 2, Family.STRAIGHTEN, (a, b)
        else:
            if rb and i < last and type(w[i + 1]) is tuple:
                return i, i + 2, Family.RB, (a, w[i + 1])
            if wr:
                hit = _wrap_match(a, families)
                if hit is not None:
                    return i, i + 1, hit[0], hit[1]
    return None


def find_match(w: Word, families=ALL_FAMILIES) -> RuleMatch | None:
    """Leftmost-outermost match in pre-order, family priority as in ``PRIORITY``."""
    st = Family.STRAIGHTEN in families
    rb = Family.RB in families
    last = len(w) - 1
    for i, a in enumerate(w):
        nxt = w[i + 1] if i < last else None
        if st and type(a) is int and type(nxt) is int and a > nxt:
            return RuleMatch(w[:i] + (STAR,) + w[i + 2:], Family.STRAIGHTEN, (a, nxt), w[i:i + 2])
        if type(a) is tuple:
            if rb and type(nxt) is tuple:
                return RuleMatch(w[:i] + (STAR,) + w[i + 2:], Family.RB, (a, nxt), w[i:i + 2])
            hit = _wrap_match(a, families)
            if hit is not None:
                return RuleMatch(w[:i] + (STAR,) + w[i + 1:], hit[0], hit[1], (a,))
            inner = find_match(a, families)
            if inner is not None:
                return RuleMatch(
                    w[:i] + (inner.context,) + w[i + 1:], inner.family, inner.params, inner.lead
                )
    return None


def lead_match(u: Word, families=ALL_FAMILIES) -> RuleMatch | None:
    """Match of ``u`` itself as a leading word (context ``*``), if any."""
    if len(u) == 2:
        a, b = u
        if Family.STRAIGHTEN in families and type(a) is int and type(b) is int and a > b:
            return RuleMatch((STAR,), Family.STRAIGHTEN, (a, b), u)
        if Family.RB in families and type(a) is tuple and type(b) is tuple:
            return RuleMatch((STAR,), Family.RB, (a, b), u)
    elif len(u) == 1 and type(u[0]) is tuple:
        hit = _wrap_match(u[0], families)
        if hit is not None:
            return RuleMatch((STAR,), hit[0], hit[1], u)
    return None


def all_matches(w: Word, families=ALL_FAMILIES) -> list[RuleMatch]:
    """Every occurrence of every leading pattern in ``w``, in pre-order."""
    out = []
    last = len(w) - 1
    for i, a in enumerate(w):
        nxt = w[i + 1] if i < last else None
        if Family.STRAIGHTEN in families and type(a) is int and type(nxt) is int and a > nxt:
            out.append(RuleMatch(w[:i] + (STAR,) + w[i + 2:], Family.STRAIGHTEN, (a, nxt), w[i:i + 2]))
        if type(a) is tuple:
            if Family.RB in families and type(nxt) is tuple:
                out.append(RuleMatch(w[:i] + (STAR,) + w[i + 2:], Family.RB, (a, nxt), w[i:i + 2]))
            hit = _wrap_match(a, families)
            if hit is not None:
                out.append(RuleMatch(w[:i] + (STAR,) + w[i + 1:], hit[0], hit[1], (a,)))
            for inner in all_matches(a, families):
                out.append(
                    RuleMatch(w[:i] + (inner.context,) + w[i + 1:], inner.family, inner.params, inner.lead)
                )
    return out


# --- expansion ----------------------------------------------------------------


def _prefix_segments(sh: Shape) -> list:
    segs = []
    if sh.z_first is not None:
        segs.append(("z", sh.z_first))
    for j, block in enumerate(sh.blocks):
        if j:
            segs.append(("z", sh.mids[j - 1]))
        segs.append(("x", block))
    return segs


def _build(segs) -> Word:
    out: list = []
    for tag, val in segs:
        if tag == "z":
            out.append(val)
        else:
            out.extend(val)
    return tuple(out)


def _ycollapse_local(sh: Shape, H: HatLie) -> dict:
    k = sh.k
    yb = 2 * sh.beta - 2
    xb = yb + 1
    prefix = _prefix_segments(sh)
    tail_segs = [("z", sh.z_last)] if sh.z_last is not None else []
    P = _build(prefix)
    tail = _build(tail_segs)
    out: dict = {}

    # the unwrapped word with y_b x_b^k replaced by x_b^(k+1)
    base = P + (xb,) * (k + 1) + tail
    add_into(out, {base: 1})

    for i in range(2, k + 2):
        coef = (-1) ** i * comb(k + 1, i)
        for code, c in iterated_combo(H, {yb: Q(1)}, xb, i - 1).items():
            add_into(out, {(P + (code,) + (xb,) * (k + 1 - i) + tail,): coef * c})

    segs = prefix + [("b", (xb,) * (k + 1))] + tail_segs
    for idx, (tag, val) in enumerate(segs):
        if tag == "z":
            word = _build(segs[:idx]) + val + _build(segs[idx + 1:])
            add_into(out, {(word,): -1})
        elif tag == "x":
            before, after = _build(segs[:idx]), _build(segs[idx + 1:])
            for t in range(len(val)):
                block = val[:t] + (val[t] - 1,) + val[t + 1:]
                add_into(out, {(before + block + after,): -1})

    f = Q(1, k + 1)
    return {w: f * c for w, c in out.items()}


def local_replacement(family: Family, params, H: HatLie) -> dict:
    """Replacement ``r`` of a leading word, before embedding in its context."""
    if family is Family.STRAIGHTEN:
        u, v = params
        out = {(v, u): Q(1)}
        for code, c in H.bracket_letters(u, v).items():
            out[(code,)] = c
        return out
    if family is Family.RB:
        a, b = params
        out: dict = {}
        add_into(out, {(((a,) + b),): 1})
        add_into(out, {((a + (b,)),): 1})
        return out
    if family is Family.XZERO:
        return {}
    return _ycollapse_local(params, H)


def _validate(m: RuleMatch) -> None:
    again = lead_match(m.lead, frozenset([m.family]))
    if again is None or again.params != m.params:
        raise RuleError(f"{m.family} side conditions fail for this match")


def expand(m: RuleMatch, H: HatLie) -> Poly:
    """Replacement of the matched leading word, embedded in the ambient word."""
    _validate(m)
    return Poly._raw(local_replacement(m.family, m.params, H)).in_context(m.context)


def relation_of(u: Word, H: HatLie, families=ALL_FAMILIES) -> Relation | None:
    """The relation whose leading word is ``u``, if ``u`` is one."""
    m = lead_match(u, families)
    if m is None:
        return None
    r = Poly._raw(local_replacement(m.family, m.params, H))
    rel = Relation(u, Poly.word(u) - r, m.family, m)
    if rel.poly.leading() != u or not rel.poly.is_monic():
        raise RuleError("relation is not monic with the expected leading word")
    return rel


def enumerate_relations(H: HatLie, max_deg: int, max_deg_r: int, families=ALL_FAMILIES) -> list[Relation]:
    """All relations whose leading word has at most ``max_deg`` letters and
    ``max_deg_r`` R's, sorted by leading word."""
    out = []
    for u in words_up_to(H.n, max_deg, max_deg_r):
        rel = relation_of(u, H, families)
        if rel is not None:
            out.append(rel)
    out.sort(key=lambda r: order_key(r.lhs))
    return out

