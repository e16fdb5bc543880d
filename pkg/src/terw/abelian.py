"""Finite abelian groups as products of prime-power cyclic factors.

A group is described by an ordered list of factors C_{p^e}; elements are
exponent vectors stored reduced mod each factor modulus, written additively.
On top of that sit order-2 coordinate-diagonal automorphisms
f(t_1, ..., t_k) = (s_1*t_1, ..., s_k*t_k) and the two subgroups they induce:
the fixed points and the twisted commutators {f(x) - x}.  The per-factor
invariants d_i = gcd(s_i - 1, p_i^{e_i}) and n_i = p_i^{e_i} / d_i drive every
closed form downstream, so they are computed once and carried around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _iterproduct
from typing import Iterator, Sequence

from .errors import (
    DimensionMismatchError,
    IdentityAutomorphismError,
    NonPrimeError,
    NotInvolutionError,
    OrderTooSmallError,
)

AbElem = tuple[int, ...]


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, math.isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class CyclicFactor:
    """One cyclic factor C_m with m = p^e."""

    p: int
    e: int
    m: int


@dataclass(frozen=True)
class AbelianGroup:
    """Product of prime-power cyclic factors, even-prime factors first."""

    factors: tuple[CyclicFactor, ...]

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(f.m for f in self.factors)

    @property
    def lam(self) -> int:
        """Number of factors with p = 2."""
        return sum(1 for f in self.factors if f.p == 2)

    @property
    def mu(self) -> int:
        """Number of factors with odd p."""
        return len(self.factors) - self.lam

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> AbElem:
        return (0,) * len(self.factors)

    def reduce(self, t: Sequence[int]) -> AbElem:
        if len(t) != len(self.factors):
            raise DimensionMismatchError(
                f"expected {len(self.factors)} coordinates, got {len(t)}"
            )
        return tuple(v % m for v, m in zip(t, self.moduli))

    def mul(self, x: AbElem, y: AbElem) -> AbElem:
        if len(x) != len(self.factors) or len(y) != len(self.factors):
            raise DimensionMismatchError("element has wrong number of coordinates")
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def inv(self, x: AbElem) -> AbElem:
        if len(x) != len(self.factors):
            raise DimensionMismatchError("element has wrong number of coordinates")
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def elements(self) -> Iterator[AbElem]:
        """All elements in mixed-radix order, last coordinate fastest."""
        return _iterproduct(*(range(m) for m in self.moduli))

    def index(self, x: AbElem) -> int:
        idx = 0
        for v, m in zip(x, self.moduli):
            idx = idx * m + v
        return idx

    def element(self, idx: int) -> AbElem:
        out = []
        for m in reversed(self.moduli):
            idx, r = divmod(idx, m)
            out.append(r)
        return tuple(reversed(out))

    def describe(self) -> str:
        return " x ".join(f"C{f.m}" for f in self.factors) if self.factors else "1"


def canonical_factor_order(factors: Sequence[tuple[int, int]]) -> list[int]:
    """Permutation putting p=2 factors first, then odd primes, exponents ascending."""
    return sorted(range(len(factors)), key=lambda i: (factors[i][0] != 2, factors[i][0], factors[i][1]))


def make_abelian(factor_list: Sequence[tuple[int, int]]) -> AbelianGroup:
    """Validate and canonically order a list of (p, e) prime-power factors."""
    if not factor_list:
        raise OrderTooSmallError("a group needs at least one cyclic factor")
    for p, e in factor_list:
        if not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if e < 1:
            raise NonPrimeError(f"exponent must be >= 1, got {e}")
    order = canonical_factor_order(factor_list)
    factors = tuple(CyclicFactor(p=factor_list[i][0], e=factor_list[i][1], m=factor_list[i][0] ** factor_list[i][1]) for i in order)
    group = AbelianGroup(factors=factors)
    if group.order < 3:
        raise OrderTooSmallError(f"group order must be >= 3, got {group.order}")
    return group


@dataclass(frozen=True)
class Involution:
    """Order-2 coordinate-diagonal automorphism t_i -> s_i * t_i mod m_i."""

    s: tuple[int, ...]
    moduli: tuple[int, ...]

    def apply(self, x: AbElem) -> AbElem:
        return tuple((si * t) % m for si, t, m in zip(self.s, x, self.moduli))


def make_involution(group: AbelianGroup, s_vector: Sequence[int]) -> Involution:
    """Validate s as a non-identity diagonal automorphism of order 2."""
    moduli = group.moduli
    if len(s_vector) != len(moduli):
        raise DimensionMismatchError(
            f"expected {len(moduli)} coordinates, got {len(s_vector)}"
        )
    s = tuple(si % m for si, m in zip(s_vector, moduli))
    for si, m in zip(s, moduli):
        if (si * si) % m != 1 % m:
            raise NotInvolutionError(f"{si}^2 != 1 (mod {m})")
    if all(si == 1 % m for si, m in zip(s, moduli)):
        raise IdentityAutomorphismError("twist fixes every element; the extension would be abelian")
    return Involution(s=s, moduli=moduli)


@dataclass(frozen=True)
class FixedData:
    """Per-factor gcd data for an involution: d_i = gcd(s_i - 1, m_i), n_i = m_i / d_i.

    The fixed subgroup consists of vectors with n_i | t_i (size d = prod d_i);
    the twisted-commutator subgroup {f(x) - x} of vectors with d_i | t_i
    (size prod n_i).
    """

    d_vec: tuple[int, ...]
    n_vec: tuple[int, ...]
    d: int

    @property
    def twisted_size(self) -> int:
        return math.prod(self.n_vec)

    def is_fixed(self, x: AbElem) -> bool:
        return all(t % n == 0 for t, n in zip(x, self.n_vec))

    def in_b(self, x: AbElem) -> bool:
        return all(t % d == 0 for t, d in zip(x, self.d_vec))


def fixed_data(group: AbelianGroup, twist: Involution) -> FixedData:
    """Compute the gcd invariants of a validated involution."""
    d_vec = tuple(math.gcd((si - 1) % m, m) for si, m in zip(twist.s, group.moduli))
    n_vec = tuple(m // d for m, d in zip(group.moduli, d_vec))
    return FixedData(d_vec=d_vec, n_vec=n_vec, d=math.prod(d_vec))


def square_roots_of_unity(m: int) -> list[int]:
    """All s in [0, m) with s^2 = 1 (mod m), for a prime-power modulus m."""
    return [s for s in range(m) if (s * s) % m == 1]
