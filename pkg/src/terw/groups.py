"""Non-abelian groups with an abelian subgroup of index 2.

Given an abelian group A, an order-2 diagonal automorphism f, and a fixed
point y of f, the extension <A, b | b^2 = y, b*x*b^-1 = f(x)> has order 2|A|.
Elements are kept in the normal form x * b^beta with beta in {0, 1}, so
multiplication is

    (x, beta) * (x', beta') = (x + f^beta(x') + [beta and beta'] * y,
                               (beta + beta') mod 2),

the [..] term injecting b^2 = y exactly when two b's meet.  The named
constructors cover the three classical families: generalized dihedral
(f = inversion, y = 0), generalized dicyclic (f = inversion, y of order 2),
and the order-2n extensions of a cyclic group, which are stored internally
in prime-power coordinates via the Chinese remainder theorem.
"""

from __future__ import annotations

import math
import warnings
from typing import Iterator, Sequence

import numpy as np

from .abelian import (
    AbElem,
    AbelianGroup,
    FixedData,
    Involution,
    canonical_factor_order,
    fixed_data,
    make_abelian,
    make_involution,
)
from .errors import BadDicyclicYError, BadG2ParamsError, YNotFixedError

D2Elem = tuple[AbElem, int]


class NonUniqueInvolutionWarning(UserWarning):
    """The abelian part has several order-2 elements, so the dicyclic
    construction is ambiguous; the requested one is used anyway."""


class D2Group:
    """The extension of an abelian group by an order-2 twist.

    Elements are pairs (exponent vector, beta); the abelian subgroup is
    beta = 0 and the nontrivial coset is beta = 1.  Enumeration order lists
    the abelian part first, each half in the abelian group's own order.
    """

    def __init__(
        self,
        abelian: AbelianGroup,
        twist: Involution,
        square: Sequence[int],
        name: str | None = None,
    ):
        y = abelian.reduce(square)
        if twist.apply(y) != y:
            raise YNotFixedError(
                f"b^2 = {y} is not fixed by the twist, but b*y*b^-1 = y always holds"
            )
        self.abelian = abelian
        self.twist = twist
        self.square = y
        self.fixed: FixedData = fixed_data(abelian, twist)
        self.n = abelian.order
        self.d = self.fixed.d
        self.order = 2 * abelian.order
        self.name = name or f"D2({abelian.describe()}; s={list(twist.s)}; y={list(y)})"

    # -- element arithmetic --------------------------------------------

    @property
    def identity(self) -> D2Elem:
        return (self.abelian.identity, 0)

    def mul(self, g: D2Elem, h: D2Elem) -> D2Elem:
        a, beta = g
        c, gamma = h
        if beta:
            c = self.twist.apply(c)
        prod = self.abelian.mul(a, c)
        if beta and gamma:
            prod = self.abelian.mul(prod, self.square)
        return (prod, (beta + gamma) % 2)

    def inv(self, g: D2Elem) -> D2Elem:
        a, beta = g
        if beta == 0:
            return (self.abelian.inv(a), 0)
        # (x, 1)^-1 = (-f(x) - y, 1)
        fa = self.twist.apply(a)
        return (self.abelian.inv(self.abelian.mul(fa, self.square)), 1)

    def conjugate(self, g: D2Elem, by: D2Elem) -> D2Elem:
        return self.mul(self.mul(by, g), self.inv(by))

    def element_order(self, g: D2Elem) -> int:
        k = 1
        x = g
        e = self.identity
        while x != e:
            x = self.mul(x, g)
            k += 1
        return k

    # -- enumeration -----------------------------------------------------

    def elements(self) -> Iterator[D2Elem]:
        for beta in (0, 1):
            for a in self.abelian.elements():
                yield (a, beta)

    def index(self, g: D2Elem) -> int:
        a, beta = g
        return self.abelian.index(a) + beta * self.n

    def element(self, idx: int) -> D2Elem:
        beta, rem = divmod(idx, self.n)
        return (self.abelian.element(rem), beta)

    def generators(self) -> list[D2Elem]:
        """Coordinate generators of the abelian part plus b."""
        gens: list[D2Elem] = []
        k = self.abelian.rank
        for i in range(k):
            vec = [0] * k
            vec[i] = 1
            gens.append((tuple(vec), 0))
        gens.append((self.abelian.identity, 1))
        return gens

    @property
    def root_order(self) -> int:
        """Order of the cyclotomic field hosting all character values.

        Twice the lcm of the factor moduli, so that square roots of values on
        the abelian part (needed on the b-coset) are still integral powers.
        """
        return 2 * math.lcm(*self.abelian.moduli)

    def __repr__(self) -> str:
        return f"<D2Group {self.name} of order {self.order}>"


def make_d2(abelian: AbelianGroup, twist: Involution, square: Sequence[int]) -> D2Group:
    """Build and validate the index-2 extension of an abelian group."""
    return D2Group(abelian, twist, square)


def dihedral(factor_list: Sequence[tuple[int, int]]) -> D2Group:
    """Generalized dihedral group: f = inversion, b^2 = identity."""
    group = make_abelian(factor_list)
    twist = make_involution(group, [m - 1 for m in group.moduli])
    d2 = D2Group(group, twist, group.identity, name=f"Dih({group.describe()})")
    return d2


def dicyclic(factor_list: Sequence[tuple[int, int]], y: Sequence[int]) -> D2Group:
    """Generalized dicyclic group: f = inversion, b^2 = y of order 2.

    The coordinates of y follow the given factor order and are permuted
    along with the factors during canonicalization.
    """
    group = make_abelian(factor_list)
    if len(y) != len(factor_list):
        y_red = group.reduce(y)  # let reduce raise the dimension error
    perm = canonical_factor_order(factor_list)
    y_red = group.reduce([y[i] for i in perm])
    if y_red == group.identity or any((2 * t) % m != 0 for t, m in zip(y_red, group.moduli)):
        raise BadDicyclicYError(f"{list(y_red)} does not have order exactly 2")
    if group.lam != 1:
        # 2^lam - 1 involutions; the classical construction presumes exactly one.
        warnings.warn(
            f"{group.describe()} has {2 ** group.lam - 1} elements of order 2; "
            "the dicyclic construction is not unique",
            NonUniqueInvolutionWarning,
            stacklevel=2,
        )
    twist = make_involution(group, [m - 1 for m in group.moduli])
    return D2Group(group, twist, y_red, name=f"Dic({group.describe()}; y={list(y_red)})")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as (p, e) pairs, ascending p."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def g2_group(n: int, s: int, t: int) -> D2Group:
    """Index-2 extension of a cyclic group: a^n = 1, b^2 = a^t, b*a*b^-1 = a^s.

    Requires s^2 = 1 (mod n), s != 1 (mod n), gcd(s, n) = 1, and
    t*(s-1) = 0 (mod n).  The cyclic group is stored in prime-power
    coordinates; the generator a corresponds to the all-ones vector.
    """
    if n < 3:
        raise BadG2ParamsError(f"need n >= 3, got {n}")
    s %= n
    t %= n
    if math.gcd(s, n) != 1:
        raise BadG2ParamsError(f"gcd({s}, {n}) != 1")
    if s == 1:
        raise BadG2ParamsError("s = 1 (mod n) makes the group abelian")
    if (s * s) % n != 1:
        raise BadG2ParamsError(f"{s}^2 != 1 (mod {n})")
    if (t * (s - 1)) % n != 0:
        raise BadG2ParamsError(f"t*(s-1) = {t}*{s - 1} != 0 (mod {n})")
    group = make_abelian(factorize(n))
    twist = make_involution(group, [s % m for m in group.moduli])
    y = tuple(t % m for m in group.moduli)
    d2 = D2Group(group, twist, y, name=f"G2(n={n}, s={s}, t={t})")
    d2.g2_params = (n, s, t)
    return d2


def index_tables(group: D2Group) -> tuple[np.ndarray, np.ndarray]:
    """Dense multiplication and inverse tables over element indices."""
    order = group.order
    elems = list(group.elements())
    mult = np.empty((order, order), dtype=np.int32)
    inv = np.empty(order, dtype=np.int32)
    for i, g in enumerate(elems):
        inv[i] = group.index(group.inv(g))
        for j, h in enumerate(elems):
            mult[i, j] = group.index(group.mul(g, h))
    return mult, inv
