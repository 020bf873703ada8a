from dataclasses import dataclass
from fractions import Fraction
from functools import cache
import logging

import sympy as sp

from src.utils.exceptions import DegenerateOrderError

logger = logging.getLogger(__name__)

N, K, E = sp.symbols("n k e", integer=True)
_LOCALS = {"n": N, "k": K, "e": E, "binomial": sp.binomial}

# ((power of n, power of k, power of e), coefficient)
Term = tuple[tuple[int, int, int], Fraction]


def _terms(expr: sp.Expr) -> tuple[Term, ...]:
    poly = sp.Poly(sp.expand(expr), N, K, E)
    return tuple(((i, j, l), Fraction(int(c.p), int(c.q))) for (i, j, l), c in poly.terms())


def _evaluate_terms(terms: tuple[Term, ...], n: int, k: int, e: int) -> Fraction:
    total = Fraction(0)
    for (i, j, l), coefficient in terms:
        total += coefficient * n**i * k**j * e**l
    return total


@dataclass(frozen=True)
class RationalFormula:
    """Exact rational function of (n, k, e) parsed from its source text.

    Evaluation runs on the expanded numerator and denominator coefficient lists
    with Fractions; sympy is only used to parse and to reason symbolically.
    """

    source: str
    expr: sp.Expr
    numerator: tuple[Term, ...]
    denominator: tuple[Term, ...]

    @classmethod
    def parse(cls, source: str) -> "RationalFormula":
        expr = sp.expand_func(sp.sympify(source, locals=_LOCALS))
        numerator, denominator = sp.fraction(sp.together(expr))
        return cls(source=source, expr=expr, numerator=_terms(numerator), denominator=_terms(denominator))

    def evaluate(self, n: int, k: int = 0, e: int = 0) -> Fraction:
        denominator = _evaluate_terms(self.denominator, n, k, e)
        if denominator == 0:
            raise DegenerateOrderError(f"{self.source} has a zero denominator at n={n}, k={k}")
        return _evaluate_terms(self.numerator, n, k, e) / denominator


@cache
def parse_formula(source: str) -> RationalFormula:
    return RationalFormula.parse(source)


def substitution_gap(target: str, bound: str, edge_threshold: str) -> sp.Expr:
    """target - bound(e := edge_threshold), simplified; zero when the target is exactly the substituted bound."""
    bound_at_threshold = parse_formula(bound).expr.subs(E, parse_formula(edge_threshold).expr)
    return sp.simplify(parse_formula(target).expr - bound_at_threshold)
