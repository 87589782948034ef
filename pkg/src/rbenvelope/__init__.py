"""Universal enveloping Rota-Baxter algebras of pre-Lie algebras, computed by rewriting."""

from .envelope import Envelope
from .poly import Poly, Q
from .prelie import HatLie, PreLieAlgebra, build_hat, check_pre_lie
from .reducer import Reducer, normal_form
from .rules import Family
from .textio import load_algebra, parse_expr, print_expr

__all__ = [
    "Envelope", "Family", "HatLie", "Poly", "PreLieAlgebra", "Q", "Reducer",
    "build_hat", "check_pre_lie", "load_algebra", "normal_form", "parse_expr", "print_expr",
]
