"""Brute-force ground truth for the witness constructions.

Everything here is recomputed from first principles and avoids the fast paths used
by the constructors: cores come from repeated rim hook removal on the Young diagram,
degrees of S_n characters from counting standard tableaux, and unipotent degrees
from the full big-integer products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .numtheory import ord_mod, prime_power_base
from .partitions import Partition, format_exponential
from .symbols import Symbol, normalize

MAX_PARTITION_N = 60
MAX_SYMBOL_N = 12
MAX_SYM_N = 30
MAX_TYPEA_N = 10
MAX_BC_N = 8
MAX_FIELD = 9


class OracleBoundError(ValueError):
    pass


def _guard(value, bound, what):
    if value > bound:
        raise OracleBoundError(f"{what} = {value} exceeds the oracle bound {bound}")


@dataclass(frozen=True)
class IntersectionReport:
    group: str
    n: int
    params: dict = field(hash=False)
    labels: tuple[str, ...]
    witness_label: str | None = None

    @property
    def cardinality(self) -> int:
        return len(self.labels)

    @property
    def contains_witness(self) -> bool:
        return self.witness_label is not None and self.witness_label in self.labels

    def with_witness(self, label: str) -> "IntersectionReport":
        return IntersectionReport(self.group, self.n, self.params, self.labels, label)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            **self.params,
            "cardinality": self.cardinality,
            "labels": list(self.labels),
            "witness": self.witness_label,
            "contains_witness": self.contains_witness,
        }


# partitions ---------------------------------------------------------------


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for a in range(min(n, largest), 0, -1):
        for rest in _partitions(n - a, a):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _partition_tuple(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _partitions(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be non-negative")
    _guard(n, MAX_PARTITION_N, "n")
    return list(_partition_tuple(n))


def _column_length(parts: list[int], j: int) -> int:
    return sum(1 for a in parts if a > j)


@lru_cache(maxsize=None)
def rim_hook_core(parts: tuple[int, ...], e: int) -> tuple[int, ...]:
    """Strip rim e-hooks one at a time from the diagram until none is left."""
    lam = list(parts)
    while True:
        for i, a in enumerate(lam):
            for j in range(a):
                leg = _column_length(lam, j) - i - 1
                if (a - j - 1) + leg + 1 == e:
                    for t in range(i, i + leg):
                        lam[t] = lam[t + 1] - 1
                    lam[i + leg] = j
                    break
            else:
                continue
            break
        else:
            return tuple(a for a in lam if a)
        lam = [a for a in lam if a]


@lru_cache(maxsize=None)
def tableaux_count(parts: tuple[int, ...]) -> int:
    """Number of standard Young tableaux, by removing the cell holding the largest entry."""
    if sum(parts) <= 1:
        return 1
    total = 0
    for i, a in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < a:
            smaller = parts[:i] + (a - 1,) + parts[i + 1 :]
            total += tableaux_count(tuple(b for b in smaller if b))
    return total


def _transpose(parts: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_column_length(list(parts), j) for j in range(parts[0])) if parts else ()


def _sym_principal(parts, ell) -> bool:
    n = sum(parts)
    return rim_hook_core(parts, ell) == rim_hook_core((n,), ell)


def intersection_sym(n: int, p: int, q: int) -> IntersectionReport:
    _guard(n, MAX_SYM_N, "n")
    labels = []
    for lam in _partition_tuple(n):
        t = lam.parts
        if _sym_principal(t, p) and _sym_principal(t, q) and gcd(tableaux_count(t), p * q) == 1:
            labels.append(format_exponential(lam))
    return IntersectionReport("S", n, {"p": p, "q": q}, tuple(labels))


def alt_label(lam: Partition, marker: str = "") -> str:
    """Label of an A_n constituent: a pair {lam, lam^t} is named by its larger member."""
    conj = Partition(_transpose(lam.parts))
    rep = max(lam, conj)
    if conj == lam:
        return format_exponential(rep) + (marker or "+")
    return format_exponential(rep)


def _alt_principal(parts, ell) -> bool:
    n = sum(parts)
    core = rim_hook_core(parts, ell)
    if core not in (rim_hook_core((n,), ell), rim_hook_core((1,) * n, ell)):
        return False
    self_conj = _transpose(parts) == parts
    # a self-conjugate ell-core splits into two characters of defect zero
    return not (self_conj and core == parts and n > 1)


def intersection_alt(n: int, p: int, q: int) -> IntersectionReport:
    _guard(n, MAX_SYM_N, "n")
    labels = []
    for lam in _partition_tuple(n):
        t = lam.parts
        conj = _transpose(t)
        if conj > t:
            continue
        if not (_alt_principal(t, p) and _alt_principal(t, q)):
            continue
        d = tableaux_count(t)
        if conj == t:
            if d % 2 == 0 and gcd(d // 2, p * q) == 1:
                labels += [alt_label(lam, "+"), alt_label(lam, "-")]
        elif gcd(d, p * q) == 1:
            labels.append(alt_label(lam))
    return IntersectionReport("A", n, {"p": p, "q": q}, tuple(labels))


# type A -------------------------------------------------------------------


def _diagram_hooks(parts: tuple[int, ...]) -> list[int]:
    lam = list(parts)
    return [
        (a - j - 1) + (_column_length(lam, j) - i - 1) + 1
        for i, a in enumerate(lam)
        for j in range(a)
    ]


def typeA_qprime(parts: tuple[int, ...], x: int) -> int:
    """Q'-part of the unipotent degree up to sign, as an exact integer."""
    n = sum(parts)
    num = prod(x**k - 1 for k in range(1, n + 1))
    den = prod(x**h - 1 for h in _diagram_hooks(parts))
    if num % den:
        raise ArithmeticError(f"non-integral degree for {parts}")
    return abs(num // den)


def _field_guard(Q: int):
    _guard(Q, MAX_FIELD, "Q")
    if prime_power_base(Q) is None:
        raise ValueError(f"{Q} is not a prime power")


def intersection_typeA(n: int, Q: int, epsilon: int, p: int, q: int) -> IntersectionReport:
    _guard(n, MAX_TYPEA_N, "n")
    _field_guard(Q)
    x = epsilon * Q
    es = {ell: ord_mod(x, ell) for ell in (p, q)}
    labels = []
    for lam in _partition_tuple(n):
        t = lam.parts
        if any(rim_hook_core(t, e) != rim_hook_core((n,), e) for e in es.values()):
            continue
        d = typeA_qprime(t, x)
        if d % p and d % q:
            labels.append(format_exponential(lam))
    family = "A" if epsilon == 1 else "2A"
    return IntersectionReport(family, n, {"Q": Q, "epsilon": epsilon, "p": p, "q": q},
                              tuple(labels))


# types B and C ------------------------------------------------------------


def _beta(parts: tuple[int, ...], length: int) -> list[int]:
    padded = list(parts) + [0] * (length - len(parts))
    return sorted(a + length - 1 - i for i, a in enumerate(padded))


def enumerate_symbols_odd_defect(n: int) -> list[Symbol]:
    if n < 0:
        raise ValueError("n must be non-negative")
    _guard(n, MAX_SYMBOL_N, "n")
    out = []
    d = 1
    while (d * d - 1) // 4 <= n:
        rest = n - (d * d - 1) // 4
        for a in range(rest + 1):
            for alpha in _partitions(a, a):
                for beta in _partitions(rest - a, rest - a):
                    m = max(len(beta), len(alpha) - d, 0)
                    sym = normalize(_beta(alpha, m + d), _beta(beta, m))
                    if sym.rank != n or sym.defect != d:
                        raise ArithmeticError(f"bad symbol {sym} for rank {n}")
                    out.append(sym)
        d += 2
    if len(set(out)) != len(out):
        raise ArithmeticError("duplicate symbols in enumeration")
    return out


def _naive_core(X, Y, e, cross: bool):
    # repeatedly take the smallest removable entry
    X, Y = set(X), set(Y)
    while True:
        moves = []
        for src, dst, same in ((X, Y, X), (Y, X, Y)):
            target = dst if cross else same
            moves += [(v, src, target) for v in src if v >= e and v - e not in target]
        if not moves:
            return normalize(sorted(X), sorted(Y))
        v, src, target = min(moves, key=lambda t: t[0])
        src.remove(v)
        target.add(v - e)


def _symbol_factors(sym: Symbol):
    X, Y = set(sym.top), set(sym.bottom)
    hooks, cohooks = [], []
    for row, other in ((X, Y), (Y, X)):
        for x in row:
            for v in range(x):
                if v not in row:
                    hooks.append(x - v)
                if v not in other:
                    cohooks.append(x - v)
    return hooks, cohooks


def bc_qprime(sym: Symbol, Q: int) -> Fraction:
    """Q'-part of the unipotent degree labelled by sym, from the full product."""
    hooks, cohooks = _symbol_factors(sym)
    X, Y = sym.top, sym.bottom
    bp = (len(X) + len(Y) - 1) // 2 - len(set(X) & set(Y))
    value = Fraction(
        prod(Q ** (2 * i) - 1 for i in range(1, sym.rank + 1)),
        2**bp * prod(Q**h - 1 for h in hooks) * prod(Q**c + 1 for c in cohooks),
    )
    r = prime_power_base(Q)
    num, den = value.numerator, value.denominator
    while num % r == 0:
        num //= r
    while den % r == 0:
        den //= r
    return Fraction(num, den)


def _bc_principal(sym: Symbol, n: int, Q: int, ell: int) -> bool:
    if ell == 2:
        return True
    e = ord_mod(Q * Q, ell)
    unitary = ord_mod(Q, ell) % 2 == 0
    triv = ((n,), ())
    return _naive_core(sym.top, sym.bottom, e, unitary) == _naive_core(*triv, e, unitary)


def intersection_typeBC(n: int, Q: int, p: int, q: int) -> IntersectionReport:
    _guard(n, MAX_BC_N, "n")
    _field_guard(Q)
    labels = []
    for sym in enumerate_symbols_odd_defect(n):
        if not (_bc_principal(sym, n, Q, p) and _bc_principal(sym, n, Q, q)):
            continue
        d = bc_qprime(sym, Q)
        if d.denominator != 1:
            raise ArithmeticError(f"non-integral degree for {sym}")
        if d.numerator % p and d.numerator % q:
            labels.append(str(sym))
    return IntersectionReport("BC", n, {"Q": Q, "p": p, "q": q}, tuple(labels))
