"""Expression syntax, algebra files and report serialisation.

Grammar::

    expr   := '0' | ['-'] term (('+' | '-') term)*
    term   := [rational] factor+
    factor := letter | 'R' '(' factor+ ')'
    letter := ('x' | 'y') integer

Juxtaposition is concatenation; ``R`` takes a single monomial.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .poly import Poly, Q
from .prelie import PreLieAlgebra
from .words import Word, letter, letter_index, letter_kind, order_key


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        where = f"at column {pos + 1}"
        if text:
            where += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(f"{msg} {where}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<letter>[xy]\d+)|(?P<op>[-+()])|(?P<R>R))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, n: int | None):
        self.text = text
        self.n = n
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def expr(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "num" and val == "0" and self.toks[self.i + 1][0] == "end":
            self.take()
            return Poly.zero()
        terms: list = []
        sign = 1
        if (kind, val) == ("op", "-"):
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while True:
            kind, val, _ = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                terms.append(self.term(1 if val == "+" else -1))
            else:
                self.fail("expected '+', '-' or end of input")
        return Poly(terms)

    def term(self, sign):
        coef = Q(sign)
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            num = Q(val)
            if num == 0:
                self.fail("zero coefficient", self.toks[self.i - 1])
            coef *= num
        atoms = self.factors()
        return tuple(atoms), coef

    def factors(self):
        atoms = []
        while True:
            kind, val, pos = self.peek()
            if kind == "letter":
                self.take()
                idx = int(val[1:])
                if idx < 1 or (self.n is not None and idx > self.n):
                    bound = f"1..{self.n}" if self.n is not None else ">= 1"
                    raise ParseError(f"letter index {idx} out of range {bound}", pos, self.text)
                atoms.append(letter(val[0], idx))
            elif kind == "R":
                self.take()
                kind2, val2, _ = self.peek()
                if (kind2, val2) != ("op", "("):
                    self.fail("expected '(' after R")
                self.take()
                if self.peek()[0] not in ("letter", "R"):
                    self.fail("R needs a non-empty monomial argument")
                inner = self.factors()
                kind3, val3, _ = self.peek()
                if (kind3, val3) != ("op", ")"):
                    self.fail("expected ')'")
                self.take()
                atoms.append(tuple(inner))
            else:
                break
        if not atoms:
            self.fail("expected a letter or R(...)")
        return atoms


def parse_expr(text: str, n: int | None = None) -> Poly:
    """Parse an expression; letter indices are checked against ``1..n`` if given."""
    return _Parser(text, n).expr()


def parse_word(text: str, n: int | None = None) -> Word:
    p = parse_expr(text, n)
    if len(p) != 1 or next(iter(p))[1] != 1:
        raise ParseError("expected a single monomial", 0, text)
    return next(iter(p))[0]


def format_letter(code: int) -> str:
    return f"{letter_kind(code)}{letter_index(code)}"


def format_word(w) -> str:
    parts = []
    for a in w:
        if type(a) is int:
            parts.append("*" if a < 0 else format_letter(a))
        else:
            parts.append(f"R({format_word(a)})")
    return " ".join(parts)


def _format_coef(c: Q) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_expr(p) -> str:
    """Monomials in decreasing order, reduced rational coefficients."""
    terms = p.sorted_terms() if isinstance(p, Poly) else Poly(p).sorted_terms()
    if not terms:
        return "0"
    out = []
    for i, (w, c) in enumerate(terms):
        mag = abs(c)
        body = format_word(w) if mag == 1 else f"{_format_coef(mag)} {format_word(w)}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out)


def format_combo(combo: dict) -> str:
    return print_expr(Poly({(code,): c for code, c in combo.items()}))


# --- algebra files -------------------------------------------------------------


class AlgebraFileError(ValueError):
    pass


def _rational(v) -> Q:
    if isinstance(v, bool):
        raise AlgebraFileError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Q(v)
    if isinstance(v, str) and re.fullmatch(r"\s*-?\d+(/\d+)?\s*", v):
        return Q(v.strip())
    raise AlgebraFileError(f"not a rational: {v!r} (use an integer or 'p/q')")


def algebra_from_dict(d: dict) -> PreLieAlgebra:
    try:
        n = d["dim"]
        prod = d["product"]
    except (KeyError, TypeError) as e:
        raise AlgebraFileError(f"algebra file needs 'dim' and 'product': missing {e}") from None
    if not isinstance(n, int) or n < 1:
        raise AlgebraFileError("'dim' must be a positive integer")
    if len(prod) != n or any(len(row) != n for row in prod):
        raise AlgebraFileError(f"'product' must be an {n}x{n} array")
    c = []
    for row in prod:
        crow = []
        for vec in row:
            if len(vec) != n:
                raise AlgebraFileError(f"every product vector must have length {n}")
            crow.append(tuple(_rational(v) for v in vec))
        c.append(tuple(crow))
    return PreLieAlgebra(n, tuple(c), d.get("name", ""))


def algebra_to_dict(A: PreLieAlgebra) -> dict:
    d = {"dim": A.n, "product": [[[_format_coef(v) for v in vec] for vec in row] for row in A.c]}
    if A.name:
        d = {"name": A.name, **d}
    return d


def load_algebra(path) -> PreLieAlgebra:
    try:
        d = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{path}: invalid JSON ({e})") from None
    return algebra_from_dict(d)


def save_algebra(A: PreLieAlgebra, path) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(A), indent=2) + "\n")


def dump_report(report, path=None) -> str:
    text = json.dumps(report.to_dict(), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def sort_words(words) -> list:
    return sorted(words, key=order_key, reverse=True)
