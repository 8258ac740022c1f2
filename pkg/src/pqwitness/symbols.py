"""Symbols for unipotent characters of types B and C.

A symbol is a pair of rows (X, Y) of strictly increasing non-negative integers,
taken up to swapping the rows and up to the shift
(X, Y) ~ ({0} + (X + 1), {0} + (Y + 1)).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .numtheory import ValuationContext, prime_power_base, psi, psi_valuation


def _check_row(row) -> tuple[int, ...]:
    row = tuple(row)
    if any(not isinstance(v, int) or v < 0 for v in row):
        raise ValueError(f"row entries must be non-negative integers: {row}")
    if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
        raise ValueError(f"row must be strictly increasing: {row}")
    return row


@dataclass(frozen=True, order=True)
class Symbol:
    """Canonical representative: rows never both start with 0, and the top row is the
    longer one (the lexicographically larger one on a tie)."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    @classmethod
    def make(cls, top, bottom) -> "Symbol":
        return normalize(top, bottom)

    @property
    def rank(self) -> int:
        k, l = len(self.top), len(self.bottom)
        return sum(self.top) + sum(self.bottom) - (k + l - 1) ** 2 // 4

    @property
    def defect(self) -> int:
        return abs(len(self.top) - len(self.bottom))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    def __str__(self):
        def row(r):
            return "{" + ",".join(map(str, r)) + "}"

        return f"({row(self.top)} over {row(self.bottom)})"


def normalize(top, bottom) -> Symbol:
    X, Y = _check_row(top), _check_row(bottom)
    while X and Y and X[0] == 0 and Y[0] == 0:
        X = tuple(v - 1 for v in X[1:])
        Y = tuple(v - 1 for v in Y[1:])
    if (len(X), X) < (len(Y), Y):
        X, Y = Y, X
    return Symbol(X, Y)


def trivial_symbol(n: int) -> Symbol:
    return Symbol((n,), ())


def steinberg_symbol(n: int) -> Symbol:
    return normalize(range(n + 1), range(1, n + 1))


def _gaps_below(x: int, row: tuple[int, ...]):
    members = set(row)
    return [v for v in range(x) if v not in members]


def hook_multiset(sym: Symbol) -> list[int]:
    out = []
    for row in (sym.top, sym.bottom):
        for x in row:
            out.extend(x - v for v in _gaps_below(x, row))
    return sorted(out)


def cohook_multiset(sym: Symbol) -> list[int]:
    out = []
    for row, other in ((sym.top, sym.bottom), (sym.bottom, sym.top)):
        for x in row:
            out.extend(x - v for v in _gaps_below(x, other))
    return sorted(out)


def _row_core(row: tuple[int, ...], e: int) -> list[int]:
    runners = Counter(v % e for v in row)
    return sorted(j + i * e for j, c in runners.items() for i in range(c))


def e_core_symbol(sym: Symbol, e: int) -> Symbol:
    """Remove e-hooks until none remain; each row is handled on its own e-abacus."""
    if e < 1:
        raise ValueError("e must be positive")
    return normalize(_row_core(sym.top, e), _row_core(sym.bottom, e))


def remove_cohook(X: set, Y: set, x: int, e: int, from_top: bool):
    src, dst = (X, Y) if from_top else (Y, X)
    if x not in src or x < e or (x - e) in dst:
        raise ValueError("no such cohook")
    src.discard(x)
    dst.add(x - e)


def e_cocore_symbol(sym: Symbol, e: int) -> Symbol:
    """Remove e-cohooks, always taking the largest available entry first."""
    if e < 1:
        raise ValueError("e must be positive")
    X, Y = set(sym.top), set(sym.bottom)
    while True:
        moves = [(x, True) for x in X if x >= e and x - e not in Y]
        moves += [(y, False) for y in Y if y >= e and y - e not in X]
        if not moves:
            return normalize(sorted(X), sorted(Y))
        x, from_top = max(moves)
        remove_cohook(X, Y, x, e, from_top)


def b_prime(sym: Symbol) -> int:
    X, Y = sym.top, sym.bottom
    return (len(X) + len(Y) - 1) // 2 - len(set(X) & set(Y))


def symbol_degree_valuation(sym: Symbol, Q: int, p: int) -> int:
    """v_p of the Q'-part of the unipotent degree labelled by sym."""
    if Q % p == 0:
        raise ValueError(f"{p} divides {Q}")
    ctx = ValuationContext.make(Q, p)
    v = sum(psi_valuation(ctx, 2 * i, -1) for i in range(1, sym.rank + 1))
    v -= b_prime(sym) * (p == 2)
    v -= sum(psi_valuation(ctx, h, -1) for h in hook_multiset(sym))
    v -= sum(psi_valuation(ctx, c, 1) for c in cohook_multiset(sym))
    return v


def symbol_degree_qprime(sym: Symbol, Q: int) -> Fraction:
    """The Q'-part of the degree as an exact rational, from the raw product."""
    num = prod(psi(Q, 2 * i, -1) for i in range(1, sym.rank + 1))
    den = 2 ** b_prime(sym)
    den *= prod(psi(Q, h, -1) for h in hook_multiset(sym))
    den *= prod(psi(Q, c, 1) for c in cohook_multiset(sym))
    return qprime_part(Fraction(num, den), Q)


class Family(enum.Enum):
    L1 = "Lambda1"
    L2 = "Lambda2"
    L3 = "Lambda3"
    L4 = "Lambda4"


@dataclass(frozen=True)
class SpecialSymbolSpec:
    family: Family
    n: int
    k: int
    l: int

    def __post_init__(self):
        if not 0 <= self.k <= self.l or self.k + self.l >= self.n:
            raise ValueError(f"need 0 <= k <= l and k + l < n, got {self}")
        if self.family in (Family.L3, Family.L4) and self.k == self.l:
            raise ValueError("families 3 and 4 need k < l")


def special_symbol(spec: SpecialSymbolSpec) -> Symbol:
    n, k, l = spec.n, spec.k, spec.l
    N = n - k - l
    low, low_plus = list(range(N)), list(range(1, N))
    K, L = n - k, n - l
    rows = {
        Family.L1: (low + [K], low_plus + [L]),
        Family.L2: (low + [L], low_plus + [K]),
        Family.L3: (low_plus + [L, K], low),
        Family.L4: (low + [L, K], low_plus),
    }[spec.family]
    return normalize(*rows)


def _psi2(Q, f, sign):
    return psi(Q, 2 * f, sign)


def special_symbol_degree_parts(spec: SpecialSymbolSpec, Q: int) -> tuple[Fraction, Fraction]:
    """Canonical part C and exceptional part E of the degree of a special symbol.

    The two product expressions for C are computed and compared.
    """
    n, k, l = spec.n, spec.k, spec.l
    others = [i for i in range(1, l + 1) if i != l - k]
    den = prod(_psi2(Q, i, -1) for i in range(1, k + 1)) * prod(
        _psi2(Q, i, -1) for i in others
    )
    c1 = Fraction(
        prod(_psi2(Q, n - k + i, -1) for i in range(1, k + 1))
        * prod(_psi2(Q, n - k - i, -1) for i in others),
        den,
    )
    c2 = Fraction(
        prod(_psi2(Q, n - l + i, -1) for i in others)
        * prod(_psi2(Q, n - l - i, -1) for i in range(1, k + 1)),
        den,
    )
    if c1 != c2:
        raise ArithmeticError(f"canonical part formulas disagree for {spec}")
    if k == l:
        return c1, Fraction(1)
    K, L, d = n - k, n - l, l - k
    m, pl = -1, 1
    num_signs, den_sign = {
        Family.L1: ((m, pl), m),
        Family.L2: ((pl, m), m),
        Family.L3: ((pl, pl), pl),
        Family.L4: ((m, m), pl),
    }[spec.family]
    E = Fraction(psi(Q, K, num_signs[0]) * psi(Q, L, num_signs[1]), psi(Q, d, den_sign) * 2)
    return c1, E


def qprime_part(value: Fraction, Q: int) -> Fraction:
    """Strip the prime dividing the prime power Q from a rational number."""
    r = prime_power_base(Q)
    if r is None:
        raise ValueError(f"{Q} is not a prime power")
    num, den = value.numerator, value.denominator
    while num and num % r == 0:
        num //= r
    while den % r == 0:
        den //= r
    return Fraction(num, den)
