"""Pre-Lie algebras by structure constants and the Lie RB-algebra built from them.

From a pre-Lie algebra ``L`` with product ``a.b`` the hat algebra is
``L + L'`` with basis ``x_a`` (a copy of ``L``) and ``y_a`` (the primed copy).
Splitting the Lie bracket as ``a > b = a.b`` and ``a < b = -b.a`` gives

    [x_a, x_b] = x(a.b - b.a),  [x_a, y_b] = y(a.b),
    [y_a, x_b] = -y(b.a),       [y_a, y_b] = 0,

and the weight-zero RB-operator ``R(y_a) = x_a``, ``R(x_a) = 0``.

Elements of the hat algebra are coefficient vectors of length ``2n`` over the
basis ``(y_1, ..., y_n, x_1, ..., x_n)``.  Internally brackets are kept as
dictionaries keyed by letter codes (see :mod:`rbenvelope.words`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .poly import Q
from .report import Report
from .words import x as xl, y as yl, is_x, letter_index, letter_kind


class PreLieError(ValueError):
    pass


@dataclass(frozen=True)
class PreLieAlgebra:
    """``e_i . e_j = sum_k c[i][j][k] e_k`` (0-based indices internally)."""

    n: int
    c: tuple
    name: str = ""

    def __post_init__(self):
        c = tuple(tuple(tuple(Q(v) for v in vec) for vec in row) for row in self.c)
        if len(c) != self.n or any(len(row) != self.n for row in c):
            raise PreLieError(f"structure constants must be an {self.n}x{self.n} table")
        if any(len(vec) != self.n for row in c for vec in row):
            raise PreLieError(f"every product vector must have length {self.n}")
        object.__setattr__(self, "c", c)

    def mul(self, a, b) -> tuple:
        """Product of two coefficient vectors."""
        n = self.n
        out = [Q(0)] * n
        for i in range(n):
            if not a[i]:
                continue
            for j in range(n):
                if not b[j]:
                    continue
                f = a[i] * b[j]
                for k, v in enumerate(self.c[i][j]):
                    if v:
                        out[k] += f * v
        return tuple(out)

    def basis(self, i: int) -> tuple:
        return tuple(Q(int(k == i)) for k in range(self.n))


def _sub(a, b):
    return tuple(p - q for p, q in zip(a, b))


def prelie_violations(A: PreLieAlgebra) -> list[tuple[int, int, int]]:
    """Basis triples (1-based) where left-symmetry fails."""
    bad = []
    e = [A.basis(i) for i in range(A.n)]
    for i, j, k in product(range(A.n), repeat=3):
        lhs = _sub(A.mul(A.mul(e[i], e[j]), e[k]), A.mul(e[i], A.mul(e[j], e[k])))
        rhs = _sub(A.mul(A.mul(e[j], e[i]), e[k]), A.mul(e[j], A.mul(e[i], e[k])))
        if lhs != rhs:
            bad.append((i + 1, j + 1, k + 1))
    return bad


def check_pre_lie(A: PreLieAlgebra) -> bool:
    return not prelie_violations(A)


# --- the hat algebra ---------------------------------------------------------


@dataclass(frozen=True)
class HatLie:
    """Bracket on letter codes plus the RB action ``R(y_a) = x_a, R(x_a) = 0``."""

    n: int
    table: dict = field(repr=False)

    def letters(self) -> range:
        return range(2 * self.n)

    def bracket_letters(self, u: int, v: int) -> dict:
        """``[u, v]`` for two letter codes, as ``{letter: coefficient}``."""
        return self.table[u, v]

    def bracket_combo(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for u, cu in a.items():
            for v, cv in b.items():
                for w, c in self.table[u, v].items():
                    s = out.get(w, 0) + cu * cv * c
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
        return out

    def rb_combo(self, a: dict) -> dict:
        return {code + 1: c for code, c in a.items() if not is_x(code)}


def build_hat(A: PreLieAlgebra) -> HatLie:
    bad = prelie_violations(A)
    if bad:
        raise PreLieError(f"not a pre-Lie algebra; left-symmetry fails on {bad[0]}")
    n = A.n
    e = [A.basis(i) for i in range(n)]
    table: dict = {}

    def combo(vec, kind):
        to_code = xl if kind == "x" else yl
        return {to_code(k + 1): v for k, v in enumerate(vec) if v}

    for a in range(n):
        for b in range(n):
            ab = A.mul(e[a], e[b])
            ba = A.mul(e[b], e[a])
            table[xl(a + 1), xl(b + 1)] = combo(_sub(ab, ba), "x")
            table[xl(a + 1), yl(b + 1)] = combo(ab, "y")
            table[yl(a + 1), xl(b + 1)] = combo(tuple(-v for v in ba), "y")
            table[yl(a + 1), yl(b + 1)] = {}
    return HatLie(n, table)


# --- vector interface --------------------------------------------------------


def to_combo(H: HatLie, v) -> dict:
    """Coefficient vector over ``(y_1..y_n, x_1..x_n)`` to a letter combination."""
    n = H.n
    if len(v) != 2 * n:
        raise ValueError(f"hat element must have length {2 * n}")
    out = {}
    for i, c in enumerate(v):
        if c:
            out[yl(i + 1) if i < n else xl(i - n + 1)] = Q(c)
    return out


def to_vector(H: HatLie, combo: dict) -> tuple:
    n = H.n
    v = [Q(0)] * (2 * n)
    for code, c in combo.items():
        i = letter_index(code) - 1
        v[i if letter_kind(code) == "y" else n + i] += c
    return tuple(v)


def basis_vector(H: HatLie, code: int) -> tuple:
    return to_vector(H, {code: Q(1)})


def bracket(H: HatLie, a, b) -> tuple:
    return to_vector(H, H.bracket_combo(to_combo(H, a), to_combo(H, b)))


def rb_apply(H: HatLie, a) -> tuple:
    return to_vector(H, H.rb_combo(to_combo(H, a)))


def iterated_combo(H: HatLie, y: dict, xcode: int, p: int) -> dict:
    """``[[..[y, x], x].., x]`` with ``p`` brackets, on letter combinations."""
    cur = dict(y)
    for _ in range(p):
        cur = H.bracket_combo(cur, {xcode: Q(1)})
    return cur


def iterated_bracket(H: HatLie, y, xcode: int, p: int) -> tuple:
    if p < 0:
        raise ValueError("p must be >= 0")
    return to_vector(H, iterated_combo(H, to_combo(H, y), xcode, p))


def _fmt_combo(combo: dict) -> str:
    from .textio import format_combo

    return format_combo(combo)


def check_hat_lie_rb(H: HatLie) -> Report:
    """Antisymmetry, Jacobi and the weight-zero RB identity on basis elements."""
    rep = Report("hat-check", {"n": H.n})
    L = list(H.letters())
    one = Q(1)

    anti = rep.check("antisymmetry")
    for u, v in product(L, repeat=2):
        s = dict(H.table[u, v])
        for w, c in H.table[v, u].items():
            s[w] = s.get(w, 0) + c
        s = {w: c for w, c in s.items() if c}
        anti.record(not s, f"[{_fmt_combo({u: one})}, {_fmt_combo({v: one})}]", _fmt_combo(s))

    jac = rep.check("jacobi")
    for u, v, w in product(L, repeat=3):
        a, b, c = {u: one}, {v: one}, {w: one}
        total: dict = {}
        for t in (
            H.bracket_combo(H.bracket_combo(a, b), c),
            H.bracket_combo(H.bracket_combo(b, c), a),
            H.bracket_combo(H.bracket_combo(c, a), b),
        ):
            for k, val in t.items():
                total[k] = total.get(k, 0) + val
        total = {k: val for k, val in total.items() if val}
        jac.record(not total, " ".join(_fmt_combo({t: one}) for t in (u, v, w)), _fmt_combo(total))

    rb = rep.check("rota-baxter")
    for u, v in product(L, repeat=2):
        a, b = {u: one}, {v: one}
        lhs = H.bracket_combo(H.rb_combo(a), H.rb_combo(b))
        inner = H.bracket_combo(H.rb_combo(a), b)
        for k, val in H.bracket_combo(a, H.rb_combo(b)).items():
            inner[k] = inner.get(k, 0) + val
        rhs = H.rb_combo({k: val for k, val in inner.items() if val})
        diff = dict(lhs)
        for k, val in rhs.items():
            diff[k] = diff.get(k, 0) - val
        diff = {k: val for k, val in diff.items() if val}
        rb.record(not diff, f"{_fmt_combo(a)}, {_fmt_combo(b)}", _fmt_combo(diff))
    return rep
