"""Witnesses for unipotent characters of GL_n(Q), GU_n(Q) and of types B_n, C_n."""

from __future__ import annotations

from dataclasses import dataclass

from .expansions import chop_ep
from .numtheory import Kind, ValuationContext, is_prime, prime_factors, prime_power_base
from .partitions import Partition, e_core, sign, trivial, typeA_degree_valuation
from .symbols import (
    Family,
    SpecialSymbolSpec,
    Symbol,
    e_cocore_symbol,
    e_core_symbol,
    special_symbol,
    steinberg_symbol,
    symbol_degree_valuation,
    trivial_symbol,
)
from .witness_sn import VerificationError


def _check_field(Q: int, p: int, q: int):
    if prime_power_base(Q) is None:
        raise ValueError(f"{Q} is not a prime power")
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise ValueError("p and q must be distinct primes")
    if Q % p == 0 or Q % q == 0:
        raise ValueError("p and q must not divide Q")


@dataclass(frozen=True)
class TypeAContext:
    n: int
    Q: int
    epsilon: int
    p: int
    q: int
    e_p: int
    e_q: int

    @classmethod
    def make(cls, n: int, Q: int, epsilon: int, p: int, q: int) -> "TypeAContext":
        if n < 2:
            raise ValueError("need n >= 2")
        if epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        _check_field(Q, p, q)
        x = epsilon * Q
        e_p = ValuationContext.make(x, p).e_p
        e_q = ValuationContext.make(x, q).e_p
        if e_p > n or e_q > n:
            raise ValueError(f"orders e_p={e_p}, e_q={e_q} must be at most n={n}")
        return cls(n, Q, epsilon, p, q, e_p, e_q)

    @property
    def x(self) -> int:
        return self.epsilon * self.Q


@dataclass(frozen=True)
class TypeBCContext:
    n: int
    Q: int
    p: int
    q: int
    e_p: int
    e_q: int
    p_kind: Kind
    q_kind: Kind

    @classmethod
    def make(cls, n: int, Q: int, p: int, q: int) -> "TypeBCContext":
        if n < 2:
            raise ValueError("need n >= 2")
        _check_field(Q, p, q)
        cp, cq = ValuationContext.make(Q, p), ValuationContext.make(Q, q)
        e_p = ValuationContext.make(Q * Q, p).e_p
        e_q = ValuationContext.make(Q * Q, q).e_p
        if e_p > n or e_q > n:
            raise ValueError(f"orders e_p={e_p}, e_q={e_q} must be at most n={n}")
        return cls(n, Q, p, q, e_p, e_q, cp.kind, cq.kind)

    def swapped(self) -> "TypeBCContext":
        return TypeBCContext(self.n, self.Q, self.q, self.p, self.e_q, self.e_p,
                             self.q_kind, self.p_kind)


@dataclass(frozen=True)
class TypeAWitness:
    partition: Partition
    case_tag: str
    primes_swapped: bool


@dataclass(frozen=True)
class BCWitness:
    symbol: Symbol
    case_tag: str
    subcase: str
    primes_swapped: bool


@dataclass(frozen=True)
class _MainCase:
    tag: str
    r: int
    b: int
    T: int
    R: int
    m: int


def _main_case(n, p, q, e_p, e_q) -> _MainCase:
    """Case analysis on the e_p-p-adic chop, shared by the linear and symplectic families."""
    r = n % e_q
    m = n // e_q
    ch = chop_ep(n, p, e_p, e_q)
    b, T, R = ch.b, ch.T, n - r
    if b == r:
        return _MainCase("I", r, b, T, R, m)
    if r > b:
        return _MainCase("IIa", r, b, T, R, m)
    if b < e_q:
        return _MainCase("IIb", r, b, T, R, m)
    if (m - 1) % q:
        return _MainCase("IIbb", r, b, T, R, m)
    pr = ch.primed
    if pr is None:
        raise VerificationError(f"primed chop missing for n={n}")
    R2 = (m - 1) * e_q
    if pr.residue > pr.b:
        return _MainCase("IIIa", pr.residue, pr.b, pr.T, R2, m)
    if pr.residue < pr.b:
        return _MainCase("IIIb", pr.residue, pr.b, pr.T, R2, m)
    raise VerificationError(f"primed chop gave b' = r' for n={n}")


def _almost_hook(mc: _MainCase) -> Partition:
    ones = mc.R - mc.b - 1
    if mc.tag == "I":
        return Partition.of(mc.r, *([1] * mc.R))
    if mc.r > mc.b:
        return Partition.of(mc.b + 1, mc.r, *([1] * ones))
    return Partition.of(mc.r + 1, mc.b, *([1] * ones))


def build_typeA(ctx: TypeAContext) -> TypeAWitness:
    n = ctx.n
    p, q, e_p, e_q = ctx.p, ctx.q, ctx.e_p, ctx.e_q
    swapped = n % e_q < n % e_p
    if swapped:
        p, q, e_p, e_q = q, p, e_q, e_p
    if n % e_q <= 1:
        return TypeAWitness(sign(n), "Steinberg", swapped)
    mc = _main_case(n, p, q, e_p, e_q)
    return TypeAWitness(_almost_hook(mc), mc.tag, swapped)


def verify_typeA(lam: Partition, ctx: TypeAContext) -> None:
    n = ctx.n
    if lam.size != n or lam == trivial(n):
        raise VerificationError(f"{lam} is not a non-trivial partition of {n}")
    for ell, e in ((ctx.p, ctx.e_p), (ctx.q, ctx.e_q)):
        if e_core(lam, e) != e_core(trivial(n), e):
            raise VerificationError(f"{lam} is not {ell}-principal")
        if typeA_degree_valuation(lam, ctx.x, ell):
            raise VerificationError(f"degree of {lam} is divisible by {ell}")


def witness_typeA(ctx: TypeAContext) -> TypeAWitness:
    w = build_typeA(ctx)
    verify_typeA(w.partition, ctx)
    return w


def _p_side_first(kind: Kind, T: int, e_p: int) -> bool:
    # first row of the subcase table: p = 2, p linear, or p unitary with T/e_p even
    return kind is not Kind.UNITARY or (T // e_p) % 2 == 0


def _q_side_first(kind: Kind, m: int, primed: bool) -> bool:
    if kind is not Kind.UNITARY:
        return True
    return m % 2 == (1 if primed else 0)


def bc_subcase(mc: _MainCase, ctx: TypeBCContext) -> str:
    primed = mc.tag.startswith("III")
    p_first = _p_side_first(ctx.p_kind, mc.T, ctx.e_p)
    q_first = _q_side_first(ctx.q_kind, mc.m, primed)
    name = {(True, True): "alpha", (True, False): "beta",
            (False, True): "gamma", (False, False): "delta"}[(p_first, q_first)]
    return name + ("'" if primed else "")


def _bc_symbol(n: int, mc: _MainCase, subcase: str) -> Symbol:
    if mc.tag == "I":
        return special_symbol(SpecialSymbolSpec(Family.L1, n, mc.r, mc.r))
    k, l = sorted((mc.r, mc.b))
    base = subcase.rstrip("'")
    if base == "alpha":
        family = Family.L3
    elif base == "delta":
        family = Family.L4
    else:
        # beta puts R on top and T below; gamma the reverse.  Lambda1 carries n-k on top.
        r_is_big_k = mc.R == n - k
        family = Family.L1 if (base == "beta") == r_is_big_k else Family.L2
    return special_symbol(SpecialSymbolSpec(family, n, k, l))


def build_typeBC(ctx: TypeBCContext) -> BCWitness:
    n = ctx.n
    swapped = n % ctx.e_q < n % ctx.e_p
    c = ctx.swapped() if swapped else ctx
    if n % c.e_q == 0:
        return BCWitness(steinberg_symbol(n), "Steinberg", "none", swapped)
    mc = _main_case(n, c.p, c.q, c.e_p, c.e_q)
    sub = bc_subcase(mc, c)
    return BCWitness(_bc_symbol(n, mc, sub), mc.tag, sub, swapped)


def bc_principal(sym: Symbol, n: int, e: int, kind: Kind) -> bool:
    if kind is Kind.EVEN:
        return True
    if kind is Kind.LINEAR:
        return e_core_symbol(sym, e) == e_core_symbol(trivial_symbol(n), e)
    return e_cocore_symbol(sym, e) == e_cocore_symbol(trivial_symbol(n), e)


def verify_typeBC(sym: Symbol, ctx: TypeBCContext) -> None:
    n = ctx.n
    if sym.rank != n or sym.defect % 2 == 0:
        raise VerificationError(f"{sym} does not have rank {n} and odd defect")
    if sym == trivial_symbol(n):
        raise VerificationError("witness is the trivial symbol")
    for ell, e, kind in ((ctx.p, ctx.e_p, ctx.p_kind), (ctx.q, ctx.e_q, ctx.q_kind)):
        if not bc_principal(sym, n, e, kind):
            raise VerificationError(f"{sym} is not {ell}-principal")
        if symbol_degree_valuation(sym, ctx.Q, ell):
            raise VerificationError(f"degree of {sym} is divisible by {ell}")


def witness_typeBC(ctx: TypeBCContext) -> BCWitness:
    w = build_typeBC(ctx)
    verify_typeBC(w.symbol, ctx)
    return w


def _relevant_primes(values, Q: int) -> list[int]:
    found = set()
    for v in values:
        found |= prime_factors(v)
    return sorted(ell for ell in found if Q % ell)


def typeA_primes(n: int, Q: int, epsilon: int) -> list[int]:
    """Primes dividing prod_{k<=n} |(eps Q)^k - 1| but not Q."""
    x = epsilon * Q
    return _relevant_primes((x**k - 1 for k in range(1, n + 1)), Q)


def typeBC_primes(n: int, Q: int) -> list[int]:
    """Primes dividing prod_{k<=n} (Q^{2k} - 1) but not Q."""
    vals = [Q**k + s for k in range(1, n + 1) for s in (1, -1)]
    return _relevant_primes(vals, Q)
