"""Integer partitions: notation, hook lengths, degrees, cores and block tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .numtheory import ValuationContext, psi_valuation


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(a, int) or a < 1 for a in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts in any order; zero parts are dropped."""
        if any(a < 0 for a in parts):
            raise ValueError("negative part")
        return cls(tuple(sorted((a for a in parts if a), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for a in self.parts if a > j) for j in range(self.parts[0]))
        )

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate()

    def __str__(self):
        return format_exponential(self)


def trivial(n: int) -> Partition:
    return Partition((n,) if n else ())


def sign(n: int) -> Partition:
    return Partition((1,) * n)


def parse_exponential(text: str) -> Partition:
    """Parse notation such as ``1^5,2,3``; the empty string is the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, caret, mult = token.partition("^")
        try:
            a = int(base)
            m = int(mult) if caret else 1
        except ValueError:
            raise ValueError(f"malformed token {token!r}") from None
        if a < 0 or m < 0:
            raise ValueError(f"negative entry in {token!r}")
        if a == 0 and m > 0:
            raise ValueError(f"zero part in {token!r}")
        parts.extend([a] * m)
    return Partition.of(*parts)


def format_exponential(lam: Partition) -> str:
    counts = Counter(lam.parts)
    return ",".join(
        str(a) if counts[a] == 1 else f"{a}^{counts[a]}" for a in sorted(counts)
    )


def hook_lengths(lam: Partition) -> list[int]:
    conj = lam.conjugate().parts
    return sorted(
        (a - j) + (conj[j] - i) - 1
        for i, a in enumerate(lam.parts)
        for j in range(a)
    )


def degree(lam: Partition) -> int:
    """Character degree of S_n via the hook length formula."""
    return factorial(lam.size) // prod(hook_lengths(lam))


@dataclass(frozen=True)
class AlmostHookSpec:
    """Parameters of the almost hook (1^{n-k-l-1}, k+1, l) with 0 <= k < l < n-k."""

    n: int
    k: int
    l: int

    def __post_init__(self):
        if not 0 <= self.k < self.l < self.n - self.k:
            raise ValueError(f"need 0 <= k < l < n-k, got {self}")

    def partition(self) -> Partition:
        return Partition.of(self.l, self.k + 1, *([1] * (self.n - self.k - self.l - 1)))


def almost_hook_degree(spec: AlmostHookSpec) -> int:
    """Degree from the two product formulas; they are checked against each other."""
    n, k, l = spec.n, spec.k, spec.l
    others = [i for i in range(1, l + 1) if i != l - k]
    den = factorial(k) * prod(others)
    first = Fraction(
        prod(n - k + i for i in range(1, k + 1)) * prod(n - k - i for i in others), den
    )
    second = Fraction(
        prod(n - l + i for i in others) * prod(n - l - i for i in range(1, k + 1)), den
    )
    if first != second or first.denominator != 1:
        raise ArithmeticError(f"almost hook formulas disagree for {spec}")
    return first.numerator


def _beta_set(lam: Partition) -> list[int]:
    L = len(lam)
    return [a + L - 1 - i for i, a in enumerate(lam.parts)]


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return Partition.of(*(b - (L - 1 - i) for i, b in enumerate(beta)))


def e_core(lam: Partition, e: int) -> Partition:
    """The e-core, by sliding beads up the runners of an e-abacus."""
    if e < 1:
        raise ValueError("e must be positive")
    beta = _beta_set(lam)
    runners = Counter(b % e for b in beta)
    return _from_beta(j + i * e for j, c in runners.items() for i in range(c))


def e_weight(lam: Partition, e: int) -> int:
    return (lam.size - e_core(lam, e).size) // e


def is_p_principal_sym(lam: Partition, p: int) -> bool:
    return e_core(lam, p) == trivial(lam.size % p)


def is_p_principal_alt(lam: Partition, p: int) -> bool:
    """Whether the A_n constituents of lam lie in the principal p-block of A_n."""
    n = lam.size
    s = n % p
    core = e_core(lam, p)
    if core not in (trivial(s), sign(s)):
        return False
    special = (trivial(n), sign(n))
    return not (lam.is_self_conjugate() and core == lam and lam not in special)


def typeA_degree_valuation(lam: Partition, x: int, p: int) -> int:
    """v_p of the unipotent degree attached to lam in GL_n(Q) or GU_n(Q), with x = eps*Q."""
    ctx = ValuationContext.make(x, p)
    top = sum(psi_valuation(ctx, k, -1) for k in range(1, lam.size + 1))
    return top - sum(psi_valuation(ctx, h, -1) for h in hook_lengths(lam))
