"""Witness characters for S_n and A_n, plus the small-intersection classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .expansions import chop, p_adic_expansion
from .numtheory import is_fermat_prime, is_mersenne_prime, is_prime, primes_upto, valuation
from .partitions import (
    Partition,
    degree,
    is_p_principal_alt,
    is_p_principal_sym,
    sign,
    trivial,
)


class VerificationError(RuntimeError):
    """A constructed witness failed an independent check."""


class Constituent(enum.Enum):
    FULL = "FullRestriction"
    PLUS = "SplitPlus"
    MINUS = "SplitMinus"


@dataclass(frozen=True)
class SymWitness:
    partition: Partition
    case_tag: str
    primes_swapped: bool
    p: int
    q: int


@dataclass(frozen=True)
class AltWitness:
    partition: Partition
    constituent: Constituent
    degree: int
    case_tag: str


def _check_primes(n: int, p: int, q: int, least_n: int):
    if n < least_n:
        raise ValueError(f"need n >= {least_n}")
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError("p and q must be distinct primes")
    if p > n or q > n:
        raise ValueError("p and q must be at most n")


def _hookish(ones: int, *parts: int) -> Partition:
    return Partition.of(*parts, *([1] * ones))


def _order_primes(n, p, q):
    if n % q < n % p:
        return q, p, True
    return p, q, False


def build_symmetric(n: int, p: int, q: int) -> SymWitness:
    """Construct the witness without verifying it."""
    _check_primes(n, p, q, 3)
    p, q, swapped = _order_primes(n, p, q)
    r = n % q
    if r <= 1:
        return SymWitness(sign(n), "Sign", swapped, p, q)
    ch = chop(n, p, q)
    b, R, m = ch.b, n - r, n // q
    if b == r:
        return SymWitness(_hookish(R, r), "I", swapped, p, q)
    if r > b:
        return SymWitness(_hookish(R - b - 1, b + 1, r), "IIa", swapped, p, q)
    if b < q:
        return SymWitness(_hookish(R - b - 1, r + 1, b), "IIb", swapped, p, q)
    if (m - 1) % q:
        return SymWitness(_hookish(R - b - 1, r + 1, b), "IIbb", swapped, p, q)
    pr = ch.primed
    if pr is None:
        raise VerificationError(f"primed chop missing for n={n}, p={p}, q={q}")
    b2, r2, R2 = pr.b, pr.residue, (m - 1) * q
    if r2 > b2:
        return SymWitness(_hookish(R2 - b2 - 1, b2 + 1, r2), "IIIa", swapped, p, q)
    if r2 < b2:
        return SymWitness(_hookish(R2 - b2 - 1, r2 + 1, b2), "IIIb", swapped, p, q)
    raise VerificationError(f"primed chop gave b' = r' for n={n}, p={p}, q={q}")


def verify_symmetric(lam: Partition, n: int, p: int, q: int) -> None:
    if lam.size != n or lam == trivial(n):
        raise VerificationError(f"{lam} is not a non-trivial partition of {n}")
    for ell in (p, q):
        if not is_p_principal_sym(lam, ell):
            raise VerificationError(f"{lam} is not {ell}-principal")
    if gcd(degree(lam), p * q) != 1:
        raise VerificationError(f"degree of {lam} is divisible by p or q")


def witness_symmetric(n: int, p: int, q: int) -> SymWitness:
    w = build_symmetric(n, p, q)
    verify_symmetric(w.partition, n, p, q)
    return w


def _alt_case(n: int, p: int, q: int) -> tuple[Partition, str]:
    """Dispatch for the residues r, s <= 1 where the sign character is all S_n offers."""
    s, r = n % p, n % q
    if r == 0 and s == 0:
        return _hookish(1, n - 1), "Case1"
    if s == 0 and r == 1:
        k = valuation(n - 1, q)
        mt = (n - 1) // q**k
        first = p_adic_expansion(n, p).term_values()[0]
        qk = q**k
        if qk < first and mt != 1:
            if mt == 2 and 2 in (p, q):
                raise VerificationError("Case 2.1 with m~ = 2 needs both primes odd")
            return _hookish(n - qk - 1, qk + 1), "Case2_1"
        if qk > first:
            return _hookish(n - first - 2, 2, first), "Case2_2"
        if n == first == qk + 1 and q != 2:
            return _hookish(n // 2 - 2, 2, n // 2), "Case2_3"
        if n == first == qk + 1 and q == 2:
            half = qk // 2
            return _hookish(half, half + 1), "Case2_4"
        raise VerificationError(f"no Case 2 branch applies to n={n}, p={p}, q={q}")
    if r == 1 and s == 1:
        if 2 not in (p, q) or n % 4 != 3:
            return Partition.of(n - 2, 2), "Case3_1"
        other = q if p == 2 else p
        if other >= 5:
            return Partition.of(n - 3, 2, 1), "Case3_2"
        if other != 3:
            raise VerificationError("unexpected prime in Case 3")
        k = valuation(n - 1, 3)
        mt = (n - 1) // 3**k
        if k >= 2 or (mt - 1) % 3:
            return Partition.of(n - 3, 2, 1), "Case3_3a"
        a2 = valuation(n - 3, 2)
        if a2 == 2:
            return _hookish(n - 12, 5, 7), "Case3_3b"
        return _hookish(n - 8, 4, 4), "Case3_3c"
    raise VerificationError(f"residues r={r}, s={s} do not reach the A_n dispatcher")


def verify_alternating(w: AltWitness, n: int, p: int, q: int) -> None:
    lam = w.partition
    if lam.size != n or lam in (trivial(n), sign(n)):
        raise VerificationError(f"{lam} restricts to the trivial character")
    split = lam.is_self_conjugate()
    if split != (w.constituent is not Constituent.FULL):
        raise VerificationError("split marker disagrees with self-conjugacy")
    d = degree(lam)
    if w.degree != (d // 2 if split else d):
        raise VerificationError("recorded degree is wrong")
    for ell in (p, q):
        if not is_p_principal_alt(lam, ell):
            raise VerificationError(f"{lam} is not {ell}-principal for A_n")
    if gcd(w.degree, p * q) != 1:
        raise VerificationError(f"constituent degree {w.degree} not prime to pq")


def witness_alternating(n: int, p: int, q: int) -> AltWitness:
    _check_primes(n, p, q, 4)
    sw = build_symmetric(n, p, q)
    if sw.partition != sign(n):
        lam = sw.partition
        if lam.is_self_conjugate():
            raise VerificationError(f"S_n witness {lam} is self-conjugate")
        w = AltWitness(lam, Constituent.FULL, degree(lam), "FromSym")
    else:
        lam, tag = _alt_case(n, sw.p, sw.q)
        d = degree(lam)
        if lam.is_self_conjugate():
            w = AltWitness(lam, Constituent.PLUS, d // 2, tag)
        else:
            w = AltWitness(lam, Constituent.FULL, d, tag)
    verify_alternating(w, n, p, q)
    return w


class Smallness(enum.Enum):
    LINEAR_ONLY = "LinearOnly"
    LARGER = "Larger"


def classify_small_intersection(n: int, p: int, q: int) -> Smallness:
    _check_primes(n, p, q, 4)
    if not q < p:
        raise ValueError("need q < p")
    if q == 2 and ((n, p) == (9, 3) or (n == p and is_fermat_prime(p))
                   or (n - 1 == p and is_mersenne_prime(p))):
        return Smallness.LINEAR_ONLY
    return Smallness.LARGER


def linear_only_triples(max_n: int) -> list[tuple[int, int, int]]:
    out = []
    for n in range(4, max_n + 1):
        for p in primes_upto(n):
            if p > 2 and classify_small_intersection(n, p, 2) is Smallness.LINEAR_ONLY:
                out.append((n, p, 2))
    return out
