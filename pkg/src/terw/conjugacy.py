"""Conjugacy classes of an index-2-abelian extension, by closed form and by orbit.

The closed form: elements of the abelian part fixed by the twist are central
(singleton classes); the remaining abelian elements pair up as {x, f(x)};
and the classes in the coset are the translates B*z*b of the twisted
commutator subgroup B, one for each residue box representative z with
0 <= z_i < d_i.  The canonical class order is fixed singletons first (in
enumeration order), then pairs (by smaller representative), then coset
classes (by mixed-radix z); class 0 is always {e}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _iterproduct
from typing import Iterator, Literal

import numpy as np

from .abelian import AbElem
from .errors import GuardExceededError
from .groups import D2Elem, D2Group
from .limits import DEFAULT_MATRIX_GUARD

Kind = Literal["fixed", "paired", "coset"]

FIXED: Kind = "fixed"
PAIRED: Kind = "paired"
COSET: Kind = "coset"


@dataclass(frozen=True)
class ConjClass:
    kind: Kind
    rep: D2Elem
    elements: tuple[D2Elem, ...]
    index: int

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass
class ClassList:
    """All conjugacy classes of a group, canonically ordered."""

    group: D2Group
    classes: tuple[ConjClass, ...]
    _lookup: dict[D2Elem, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for cls in self.classes:
            for g in cls.elements:
                self._lookup[g] = cls.index

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[ConjClass]:
        return iter(self.classes)

    def __getitem__(self, i: int) -> ConjClass:
        return self.classes[i]

    def index_of(self, g: D2Elem) -> int:
        return self._lookup[g]

    @property
    def counts(self) -> tuple[int, int, int]:
        """(number of fixed, paired, coset classes)."""
        kinds = [c.kind for c in self.classes]
        return (kinds.count(FIXED), kinds.count(PAIRED), kinds.count(COSET))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def reps(self) -> list[D2Elem]:
        return [c.rep for c in self.classes]


def _twisted_subgroup(group: D2Group) -> list[AbElem]:
    """Elements of B = {f(x) - x}: per-coordinate multiples of d_i."""
    d_vec = group.fixed.d_vec
    return [
        tuple(d * j for d, j in zip(d_vec, js))
        for js in _iterproduct(*(range(n) for n in group.fixed.n_vec))
    ]


def residue_box(group: D2Group) -> list[AbElem]:
    """Coset representatives of B in mixed-radix order, 0 <= z_i < d_i."""
    return list(_iterproduct(*(range(d) for d in group.fixed.d_vec)))


def conjugacy_classes(group: D2Group) -> ClassList:
    """Conjugacy classes by the closed form."""
    A = group.abelian
    fx = group.fixed
    twist = group.twist
    classes: list[ConjClass] = []

    for a in A.elements():
        if fx.is_fixed(a):
            g = (a, 0)
            classes.append(ConjClass(FIXED, g, (g,), len(classes)))

    seen: set[AbElem] = set()
    for a in A.elements():
        if fx.is_fixed(a) or a in seen:
            continue
        fa = twist.apply(a)
        seen.add(a)
        seen.add(fa)
        pair = tuple(sorted(((a, 0), (fa, 0)), key=group.index))
        classes.append(ConjClass(PAIRED, pair[0], pair, len(classes)))

    b_elems = _twisted_subgroup(group)
    for z in residue_box(group):
        elems = tuple(
            sorted(((A.mul(w, z), 1) for w in b_elems), key=group.index)
        )
        classes.append(ConjClass(COSET, (z, 1), elems, len(classes)))

    return ClassList(group=group, classes=tuple(classes))


def conjugacy_classes_bruteforce(
    group: D2Group, guard: int = DEFAULT_MATRIX_GUARD
) -> ClassList:
    """Conjugacy classes as orbits of g -> hgh^-1, then canonically ordered."""
    if group.order > guard:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for orbit enumeration"
        )
    elems = list(group.elements())
    remaining = set(elems)
    orbits: list[set[D2Elem]] = []
    for g in elems:
        if g not in remaining:
            continue
        orbit = {group.conjugate(g, h) for h in elems}
        orbits.append(orbit)
        remaining -= orbit
    return ClassList(group=group, classes=tuple(_canonicalize(group, orbits)))


def _canonicalize(group: D2Group, orbits: list[set[D2Elem]]) -> list[ConjClass]:
    """Order raw orbits exactly as the closed form does."""
    fixed, paired, coset = [], [], []
    d_vec = group.fixed.d_vec
    for orbit in orbits:
        members = tuple(sorted(orbit, key=group.index))
        if all(beta == 0 for _, beta in members):
            if len(members) == 1:
                fixed.append(members)
            else:
                paired.append(members)
        else:
            coset.append(members)
    fixed.sort(key=lambda ms: group.index(ms[0]))
    paired.sort(key=lambda ms: group.index(ms[0]))

    def coset_key(members: tuple[D2Elem, ...]) -> AbElem:
        a, _ = members[0]
        return tuple(t % d for t, d in zip(a, d_vec))

    coset.sort(key=lambda ms: group.abelian.index(coset_key(ms)))

    classes: list[ConjClass] = []
    for members in fixed:
        classes.append(ConjClass(FIXED, members[0], members, len(classes)))
    for members in paired:
        classes.append(ConjClass(PAIRED, members[0], members, len(classes)))
    for members in coset:
        rep = (coset_key(members), 1)
        classes.append(ConjClass(COSET, rep, members, len(classes)))
    return classes


def class_of(classes: ClassList, g: D2Elem) -> int:
    """Index of the unique class containing g."""
    return classes.index_of(g)


def structure_constant(group: D2Group, classes: ClassList, i: int, j: int, k: int) -> int:
    """p_ij^k: with x = e and y any element of class k, the number of z in
    class i such that y*z^-1 lies in class j.  Independent of the chosen y."""
    y = classes[k].rep
    count = 0
    for z in classes[i].elements:
        if classes.index_of(group.mul(y, group.inv(z))) == j:
            count += 1
    return count


def class_products(group: D2Group, classes: ClassList, i: int, j: int) -> set[int]:
    """Indices of the classes contained in the elementwise product Cl_i * Cl_j."""
    out: set[int] = set()
    for u in classes[i].elements:
        for v in classes[j].elements:
            out.add(classes.index_of(group.mul(u, v)))
    return out


def structure_tensor(group: D2Group, classes: ClassList) -> np.ndarray:
    """Full tensor p[i, j, k], computed from product distributions.

    (N_i N_j)(x, y) counts factorizations y*x^-1 = v*u with u in class i and
    v in class j, so p[i, j, k] is that count at any representative of class k.
    """
    ell = len(classes)
    p = np.zeros((ell, ell, ell), dtype=np.int64)
    for i in range(ell):
        for j in range(ell):
            dist: dict[D2Elem, int] = {}
            for v in classes[j].elements:
                for u in classes[i].elements:
                    w = group.mul(v, u)
                    dist[w] = dist.get(w, 0) + 1
            for k in range(ell):
                p[i, j, k] = dist.get(classes[k].rep, 0)
    return p


def class_index_table(group: D2Group, classes: ClassList) -> np.ndarray:
    """Table D with D[x, y] = class index of y * x^-1, over element indices."""
    order = group.order
    elems = list(group.elements())
    table = np.empty((order, order), dtype=np.int32)
    for xi, x in enumerate(elems):
        x_inv = group.inv(x)
        for yi, y in enumerate(elems):
            table[xi, yi] = classes.index_of(group.mul(y, x_inv))
    return table
