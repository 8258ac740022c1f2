"""p-adic and e_p-p-adic expansions of n and the chopping rule built on them.

A p-adic expansion writes n = s + sum c_i p^{a_i} with 0 <= s < p, nonzero digits
c_i and increasing exponents a_i >= 1.  Chopping against a second modulus keeps the
smallest terms of the expansion whose running sum stays at most n mod q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .numtheory import is_prime


@dataclass(frozen=True)
class PAdicExpansion:
    n: int
    p: int
    s: int
    terms: tuple[tuple[int, int], ...]  # (c_i, a_i)

    def term_values(self) -> list[int]:
        return [c * self.p**a for c, a in self.terms]


@dataclass(frozen=True)
class EpPAdicExpansion:
    """n = s + e_p * sum c_i p^{a_i}; the first term always has a_0 = 0 and may have c_0 = 0."""

    n: int
    p: int
    e_p: int
    s: int
    terms: tuple[tuple[int, int], ...]

    def term_values(self) -> list[int]:
        return [c * self.e_p * self.p**a for c, a in self.terms]


@dataclass(frozen=True)
class PrimedChop:
    residue: int
    t0: int
    b: int
    T: int


@dataclass(frozen=True)
class ChoppedExpansion:
    """Result of chopping: n = b + T where b collects the terms before index t0."""

    n: int
    residue: int
    modulus: int
    t0: int
    b: int
    T: int
    primed: Optional[PrimedChop]


def _digits(w: int, p: int):
    a = 0
    while w:
        w, c = divmod(w, p)
        yield c, a
        a += 1


def p_adic_expansion(n: int, p: int) -> PAdicExpansion:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    s = n % p
    terms = tuple((c, a) for c, a in _digits(n // p, p) if c)
    return PAdicExpansion(n, p, s, tuple((c, a + 1) for c, a in terms))


def ep_p_adic_expansion(n: int, p: int, e_p: int) -> EpPAdicExpansion:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= e_p < p:
        raise ValueError(f"need 1 <= e_p < p, got e_p={e_p}, p={p}")
    if n < e_p:
        raise ValueError(f"need e_p <= n, got e_p={e_p}, n={n}")
    w, s = divmod(n, e_p)
    digits = list(_digits(w, p))
    terms = [(digits[0][0], 0)] + [(c, a) for c, a in digits[1:] if c]
    return EpPAdicExpansion(n, p, e_p, s, tuple(terms))


def _scan(s: int, values: list[int], residue: int, first_index: int):
    """Index t0, the chopped part b and the remainder, or None if the residue is too big."""
    b = s
    for i, v in enumerate(values):
        if residue < v:
            return first_index + i, b
        b += v
    return None


def _chop(n, s, values, modulus, first_index) -> ChoppedExpansion:
    r = n % modulus
    found = _scan(s, values, r, first_index)
    if found is None:
        raise ValueError(f"residue {r} exceeds every term of the expansion of {n}")
    t0, b = found
    primed = None
    r2 = modulus + r
    if n >= 2 * r2:
        found2 = _scan(s, values, r2, first_index)
        if found2 is None:
            raise ArithmeticError(f"primed chop failed for n={n}")
        primed = PrimedChop(r2, found2[0], found2[1], n - found2[1])
    return ChoppedExpansion(n, r, modulus, t0, b, n - b, primed)


def chop(n: int, p: int, q: int) -> ChoppedExpansion:
    """Chop the p-adic expansion of n against r = n mod q (t0 counts from 1)."""
    if not (is_prime(q) and p != q):
        raise ValueError("q must be a prime different from p")
    if p > n or q > n:
        raise ValueError("both primes must be at most n")
    exp = p_adic_expansion(n, p)
    return _chop(n, exp.s, exp.term_values(), q, 1)


def chop_ep(n: int, p: int, e_p: int, e_q: int) -> ChoppedExpansion:
    """Chop the e_p-p-adic expansion of n against r = n mod e_q (t0 counts from 0)."""
    if not 1 <= e_q <= n:
        raise ValueError("need 1 <= e_q <= n")
    exp = ep_p_adic_expansion(n, p, e_p)
    return _chop(n, exp.s, exp.term_values(), e_q, 0)
