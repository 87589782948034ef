"""Noncommutative polynomials over bracketed words with exact rational coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

from .words import Word, order_key, substitute


class Poly:
    """Finite linear combination of words; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Q] = {}
        for w, c in items:
            c = Q(c)
            if c:
                s = acc.get(w, 0) + c
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
        self.terms = acc

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def word(cls, w: Word, c=1) -> "Poly":
        return cls({w: c})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, w: Word) -> Q:
        return self.terms.get(w, Q(0))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        add_into(out, other.terms)
        return Poly._raw(out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        add_into(out, other.terms, -1)
        return Poly._raw(out)

    def __neg__(self) -> "Poly":
        return Poly._raw({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        c = Q(c)
        if not c:
            return Poly.zero()
        return Poly._raw({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    s = out.get(w, 0) + a * b
                    if s:
                        out[w] = s
                    else:
                        del out[w]
            return Poly._raw(out)
        if isinstance(other, tuple):
            return Poly._raw({u + other: a for u, a in self.terms.items()})
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, tuple):
            return Poly._raw({other + u: a for u, a in self.terms.items()})
        return self.scale(other)

    def wrap(self) -> "Poly":
        """Apply R linearly: every monomial ``w`` becomes ``R(w)``."""
        return Poly._raw({(w,): c for w, c in self.terms.items()})

    def in_context(self, q: Word) -> "Poly":
        """``q|_p``: substitute every monomial of ``p`` into the star of ``q``."""
        out: dict = {}
        for w, c in self.terms.items():
            add_into(out, {substitute(q, w): c})
        return Poly._raw(out)

    def leading(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key)

    def sorted_terms(self) -> list[tuple[Word, Q]]:
        """Terms in strictly decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[self.leading()] == 1

    def __repr__(self):
        from .textio import print_expr

        return f"Poly({print_expr(self)!r})"


def add_into(acc: dict, terms: Mapping, factor=1) -> None:
    """In-place ``acc += factor * terms`` dropping cancelled entries."""
    for w, c in terms.items():
        s = acc.get(w, 0) + factor * c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_scale(c, p: Poly) -> Poly:
    return p.scale(c)


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def leading_monomial(p: Poly) -> Word:
    return p.leading()
