"""Elementary number theory: valuations, orders, Psi values and their p-parts."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class Kind(enum.Enum):
    """How an odd prime sits relative to a base x (Even is reserved for p = 2)."""

    LINEAR = "linear"
    UNITARY = "unitary"
    EVEN = "even"


def valuation(k: int, p: int) -> int:
    """Exponent of p in |k|."""
    if k == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"bad prime {p}")
    k = abs(k)
    v = 0
    while k % p == 0:
        k //= p
        v += 1
    return v


def p_part(k: int, p: int) -> int:
    """Largest power of p dividing the positive integer k."""
    if k < 1:
        raise ValueError("p_part needs a positive integer")
    return p ** valuation(k, p)


def ord_mod(x: int, m: int) -> int:
    """Multiplicative order of x modulo m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(x, m) != 1:
        raise ValueError(f"{x} is not a unit modulo {m}")
    x %= m
    y, k = x, 1
    while y != 1:
        y = (y * x) % m
        k += 1
    return k


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, exact for n < 3.3e24
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_factors(k: int) -> set[int]:
    """Distinct prime divisors of |k| by trial division (k should be modest)."""
    k = abs(k)
    if k == 0:
        raise ValueError("0 has no factorisation")
    out = set()
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.add(d)
            while k % d == 0:
                k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        out.add(k)
    return out


def prime_power_base(q: int) -> int | None:
    """Return r if q = r^a for a prime r and a >= 1, else None."""
    if q < 2:
        return None
    r = min(prime_factors(q))
    while q % r == 0:
        q //= r
    return r if q == 1 else None


def is_fermat_prime(p: int) -> bool:
    if p < 3 or not is_prime(p):
        return False
    m = p - 1
    return m & (m - 1) == 0


def is_mersenne_prime(p: int) -> bool:
    if p < 3 or not is_prime(p):
        return False
    m = p + 1
    return m & (m - 1) == 0


def psi(x: int, f: int, sign: int) -> int:
    """Psi^{+}_f(x) = x^f + 1 when sign is +1 and Psi^{-}_f(x) = x^f - 1 when sign is -1."""
    if f < 1:
        raise ValueError("f must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return x**f + sign


def mobius(n: int) -> int:
    result = 1
    for r in prime_factors(n) if n > 1 else ():
        if n % (r * r) == 0:
            return 0
        result = -result
    return result


def cyclotomic_value(d: int, x: int) -> int:
    """Phi_d(x) via the Moebius product over the values x^e - 1."""
    if d < 1:
        raise ValueError("d must be positive")
    if abs(x) < 2:
        raise ValueError("need |x| >= 2")
    acc = Fraction(1)
    for e in range(1, d + 1):
        if d % e == 0:
            mu = mobius(d // e)
            if mu:
                acc *= Fraction(x**e - 1) ** mu
    if acc.denominator != 1:
        raise ArithmeticError("cyclotomic value is not integral")
    return acc.numerator


def classify_linear_unitary(x: int, p: int) -> Kind:
    """Linear when ord_p(x) is odd, unitary otherwise; only defined for odd p."""
    if p == 2:
        raise ValueError("linear/unitary is only defined for odd primes")
    return Kind.LINEAR if ord_mod(x, p) % 2 else Kind.UNITARY


@dataclass(frozen=True)
class ValuationContext:
    """A base x together with a prime p not dividing it."""

    x: int
    p: int
    e_p: int
    kind: Kind

    @classmethod
    def make(cls, x: int, p: int) -> "ValuationContext":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if x % p == 0:
            raise ValueError(f"{p} divides {x}")
        kind = Kind.EVEN if p == 2 else classify_linear_unitary(x, p)
        return cls(x, p, ord_mod(x, p), kind)


def _v_minus(ctx: ValuationContext, f: int) -> int:
    x, p = ctx.x, ctx.p
    if p == 2:
        base = valuation(x - 1, 2)
        if f % 2:
            return base
        return base + valuation(x + 1, 2) + valuation(f, 2) - 1
    if f % ctx.e_p:
        return 0
    return valuation(x**ctx.e_p - 1, p) + valuation(f, p)


def psi_valuation(ctx: ValuationContext, f: int, sign: int) -> int:
    """v_p(Psi^{sign}_f(x)) by the lifting-the-exponent rules, without forming x^f."""
    if f < 1:
        raise ValueError("f must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x = ctx.x
    if (x == 1 and sign == -1) or (x == -1 and (sign == -1) == (f % 2 == 0)):
        raise ValueError("Psi value is zero")
    if sign == -1:
        return _v_minus(ctx, f)
    if ctx.p == 2:
        return valuation(x + 1, 2) if f % 2 else 1
    return _v_minus(ctx, 2 * f) - _v_minus(ctx, f)
