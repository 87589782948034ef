"""Bracketed words of the free associative algebra with one linear operator R.

Representation (chosen for cheap hashing and comparison):

* a letter is a non-negative ``int``; ``y_a`` has code ``2a - 2`` and
  ``x_a`` has code ``2a - 1``, so integer order is the letter order
  ``y1 < x1 < y2 < x2 < ...``;
* an R-letter ``R(w)`` is stored as the content word ``w`` itself (a tuple);
* a word is a non-empty tuple of atoms.

So ``x1 R(y1 x1)`` is ``(1, (0, 1))``.  A star word (context) is a word in
which exactly one atom, possibly nested inside R-letters, is ``STAR``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Union

Atom = Union[int, tuple]
Word = tuple

STAR = -1

X, Y = "x", "y"


def letter(kind: str, index: int) -> int:
    if index < 1:
        raise ValueError(f"letter index must be >= 1, got {index}")
    if kind == X:
        return 2 * index - 1
    if kind == Y:
        return 2 * index - 2
    raise ValueError(f"unknown letter kind {kind!r}")


def x(index: int) -> int:
    return 2 * index - 1


def y(index: int) -> int:
    return 2 * index - 2


def letter_kind(code: int) -> str:
    return X if code & 1 else Y


def letter_index(code: int) -> int:
    return code // 2 + 1


def is_x(code) -> bool:
    return type(code) is int and code >= 0 and code & 1 == 1


def is_y(code) -> bool:
    return type(code) is int and code >= 0 and code & 1 == 0


def y_of(code: int) -> int:
    """The y-letter whose R-image is the x-letter ``code``."""
    return code - 1


def is_letter(atom) -> bool:
    return type(atom) is int


def wrap(content: Word) -> Word:
    """The one-atom word ``R(content)``."""
    if not content:
        raise ValueError("R of the empty word is not a word")
    return (content,)


@lru_cache(maxsize=1 << 18)
def deg_r(w: Word) -> int:
    """Number of R symbols at all nesting depths."""
    return sum(1 + deg_r(a) for a in w if type(a) is tuple)


def deg(w: Word) -> int:
    """Length over the alphabet of letters and R-letters (top level only)."""
    return len(w)


@lru_cache(maxsize=1 << 18)
def weight(w: Word) -> int:
    """Number of letters at all nesting depths."""
    return sum(1 if type(a) is int else weight(a) for a in w)


@lru_cache(maxsize=1 << 18)
def order_key(w: Word) -> tuple:
    """Sort key realising the monomial order.

    R-degree first, then length over letters and R-letters, then
    lexicographic with every letter below every R-letter and R-letters
    compared by their contents.
    """
    return (
        deg_r(w),
        len(w),
        tuple((0, a) if type(a) is int else (1, order_key(a)) for a in w),
    )


def compare(u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is below, equal to or above ``v``."""
    if u == v:
        return 0
    return -1 if order_key(u) < order_key(v) else 1


def well_formed(w, n: int | None = None, allow_star: bool = False) -> bool:
    """Check the structural invariants, optionally the index range 1..n."""
    stars = _count_stars(w, n, allow_star)
    if stars is None:
        return False
    return stars == 1 if allow_star else stars == 0


def _count_stars(w, n, allow_star):
    if type(w) is not tuple or not w:
        return None
    total = 0
    for a in w:
        if type(a) is int:
            if a == STAR and allow_star:
                total += 1
            elif a < 0 or (n is not None and a >= 2 * n):
                return None
        elif type(a) is tuple:
            inner = _count_stars(a, n, allow_star)
            if inner is None:
                return None
            total += inner
        else:
            return None
    return total


def letters(w: Word) -> Iterator[int]:
    """All letters of ``w`` in reading order, at every depth."""
    for a in w:
        if type(a) is int:
            yield a
        else:
            yield from letters(a)


# --- star words -------------------------------------------------------------


def substitute(q: Word, u: Word) -> Word:
    """Replace the star of ``q`` by the atoms of ``u`` (spliced in place)."""
    out = _substitute(q, u)
    if out is None:
        raise ValueError("star word has no star")
    return out


def _substitute(q, u):
    for i, a in enumerate(q):
        if a == STAR and type(a) is int:
            return q[:i] + u + q[i + 1:]
        if type(a) is tuple:
            inner = _substitute(a, u)
            if inner is not None:
                return q[:i] + (inner,) + q[i + 1:]
    return None


def occurrences(w: Word, g: Word) -> list[Word]:
    """Every context ``q`` with ``substitute(q, g) == w``, at all depths."""
    out: list[Word] = []
    _occurrences(w, g, out)
    return out


def _occurrences(w, g, out):
    m = len(g)
    for i in range(len(w) - m + 1):
        if w[i:i + m] == g:
            out.append(w[:i] + (STAR,) + w[i + m:])
    for i, a in enumerate(w):
        if type(a) is tuple:
            inner: list = []
            _occurrences(a, g, inner)
            for q in inner:
                out.append(w[:i] + (q,) + w[i + 1:])


def subword_sites(w: Word) -> Iterator[tuple[Word, Word]]:
    """All pairs ``(q, u)`` with ``u`` a contiguous atom run of ``w`` at some depth."""
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield w[:i] + (STAR,) + w[j:], w[i:j]
    for i, a in enumerate(w):
        if type(a) is tuple:
            for q, u in subword_sites(a):
                yield w[:i] + (q,) + w[i + 1:], u


# --- enumeration --------------------------------------------------------------


@lru_cache(maxsize=None)
def words_exact(n: int, wt: int, rd: int) -> tuple:
    """All words over ``n`` indices with exactly ``wt`` letters and ``rd`` R's."""
    if wt <= 0:
        return ()
    return tuple(_sequences(n, wt, rd))


@lru_cache(maxsize=None)
def _atoms_exact(n: int, wt: int, rd: int) -> tuple:
    out = []
    if wt == 1 and rd == 0:
        out.extend(range(2 * n))
    if rd >= 1:
        out.extend(words_exact(n, wt, rd - 1))
    return tuple(out)


def _sequences(n, wt, rd):
    # first atom, then an optional non-empty tail
    for w1 in range(1, wt + 1):
        for r1 in range(rd + 1):
            heads = _atoms_exact(n, w1, r1)
            if not heads:
                continue
            if w1 == wt:
                if r1 == rd:
                    for a in heads:
                        yield (a,)
                continue
            tails = words_exact(n, wt - w1, rd - r1)
            for a in heads:
                for t in tails:
                    yield (a,) + t


def words_up_to(n: int, max_weight: int, max_rdeg: int) -> Iterator[Word]:
    """All words with at most ``max_weight`` letters and ``max_rdeg`` R's."""
    for wt in range(1, max_weight + 1):
        for rd in range(max_rdeg + 1):
            yield from words_exact(n, wt, rd)
