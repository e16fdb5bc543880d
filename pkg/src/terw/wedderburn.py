"""Block multiplicities of the centralizer algebra, three independent ways.

The conjugation action of the group on itself has permutation character
psi(g) = |C_G(g)|.  Its decomposition psi = sum d_j chi_j gives the
Wedderburn blocks M_{d_j} of the centralizer algebra (equal to the
Terwilliger algebra here).  The three routes to the d_j:

  * closed form by the divisibility pattern of the label vectors,
  * the plain character sum d_j = sum_k conj(chi_j(g_k)) over class reps,
  * the inner product <psi, chi_j>.

The primitive central idempotents e_j built from the characters provide a
matrix-level oracle: e_j^2 = e_j, mutually annihilating, summing to the
identity, and the two-sided block T~ e_j has dimension d_j^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .characters import (
    CharacterTable,
    CharLabel,
    LinearLabel,
    character_labels,
    character_table,
)
from .closure import Orbitals, conjugation_orbitals
from .conjugacy import ClassList, conjugacy_classes
from .errors import (
    GuardExceededError,
    IdempotencyFailure,
    MultiplicityMismatch,
    NonIntegralMultiplicity,
)
from .groups import D2Group, index_tables
from .limits import DEFAULT_MATRIX_GUARD
from .scheme import dim_centralizer


@dataclass(frozen=True)
class MultiplicityVector:
    """Per-character block multiplicities, in table row order."""

    labels: tuple[CharLabel, ...]
    values: tuple[int, ...]

    def blocks(self) -> list[int]:
        """Nonzero block sizes, in label order (zero summands are vacuous)."""
        return [v for v in self.values if v > 0]

    @property
    def sum_d_sq(self) -> int:
        return sum(v * v for v in self.values)

    def sum_d_deg(self) -> int:
        return sum(v * label.degree for v, label in zip(self.values, self.labels))


def conjugation_permutation(group: D2Group, g) -> np.ndarray:
    """The permutation matrix of u -> g u g^-1 over element indices."""
    order = group.order
    mat = np.zeros((order, order), dtype=np.int64)
    for u in group.elements():
        mat[group.index(u), group.index(group.conjugate(u, g))] = 1
    return mat


def permutation_character(group: D2Group, classes: ClassList) -> list[int]:
    """psi on class representatives: psi(g) = |C_G(g)| = |G| / |Cl(g)|."""
    mult, _ = index_tables(group)
    cent_sizes = (mult == mult.T).sum(axis=1)
    values = []
    for cls in classes:
        size = int(cent_sizes[group.index(cls.rep)])
        if size * cls.size != group.order:
            raise MultiplicityMismatch(
                f"centralizer order {size} inconsistent with class size {cls.size}"
            )
        values.append(size)
    return values


def multiplicities_char_sum(group: D2Group, table: CharacterTable) -> MultiplicityVector:
    """d_j = sum over class representatives of conj(chi_j), exactly."""
    values = []
    for row in table.rows:
        total = row[0].conjugate()
        for v in row[1:]:
            total = total + v.conjugate()
        d = total.is_integer(1e-6)
        if d is None or d < 0:
            raise NonIntegralMultiplicity(
                f"character sum {total.eval_complex()} is not a non-negative integer"
            )
        values.append(d)
    return MultiplicityVector(labels=tuple(table.labels), values=tuple(values))


def multiplicities_inner_product(group: D2Group, table: CharacterTable) -> MultiplicityVector:
    """d_j = <psi, chi_j> with psi the conjugation permutation character."""
    psi = permutation_character(group, table.classes)
    order = group.order
    values = []
    for row in table.rows:
        total = row[0].conjugate() * (psi[0] * table.classes[0].size)
        for cls, v in zip(table.classes[1:], row[1:]):
            total = total + v.conjugate() * (psi[cls.index] * cls.size)
        val = total.eval_complex() / order
        nearest = round(val.real)
        if abs(val.imag) > 1e-6 or abs(val.real - nearest) > 1e-6 or nearest < 0:
            raise NonIntegralMultiplicity(
                f"<psi, chi> = {val} is not a non-negative integer"
            )
        values.append(nearest)
    return MultiplicityVector(labels=tuple(table.labels), values=tuple(values))


def multiplicities_closed_form(
    group: D2Group, labels: list[CharLabel] | None = None
) -> MultiplicityVector:
    """The case-by-case closed form, driven by divisibility of the labels."""
    labels = labels if labels is not None else character_labels(group)
    n, d = group.n, group.d
    d_vec = group.fixed.d_vec
    n_vec = group.fixed.n_vec
    values = []
    for label in labels:
        if isinstance(label, LinearLabel):
            trivial_on_quotient = all(l % di == 0 for l, di in zip(label.i_vec, d_vec))
            if trivial_on_quotient:
                # (n + 3d)/2 for the principal sign, (n - d)/2 for the other
                val = (n + 3 * d) // 2 if label.sign == 1 else (n - d) // 2
                assert (n + 3 * d) % 2 == 0 and (n - d) % 2 == 0
            elif all((ni * l) % di == 0 for l, di, ni in zip(label.i_vec, d_vec, n_vec)):
                assert d % 2 == 0
                val = d // 2
            else:
                val = 0
        else:
            val = d if all(k % di == 0 for k, di in zip(label.j_vec, d_vec)) else 0
        values.append(val)
    return MultiplicityVector(labels=tuple(labels), values=tuple(values))


# -- central idempotents ------------------------------------------------------


def central_idempotent(
    group: D2Group,
    table: CharacterTable,
    label_index: int,
    guard: int = DEFAULT_MATRIX_GUARD,
) -> np.ndarray:
    """e_j = (deg_j / |G|) sum_g conj(chi_j(g)) Phi(g), as a complex matrix."""
    order = group.order
    if order > guard:
        raise GuardExceededError(
            f"group order {order} exceeds guard {guard} for idempotent matrices"
        )
    chi = table.complex_matrix[label_index]
    conj_idx = _conjugation_index_table(group)
    e = np.zeros((order, order), dtype=complex)
    rows = np.arange(order)
    for gi, g in enumerate(group.elements()):
        weight = chi[table.classes.index_of(g)].conjugate()
        np.add.at(e, (rows, conj_idx[gi]), weight)
    deg = table.labels[label_index].degree
    return e * (deg / order)


def _conjugation_index_table(group: D2Group) -> np.ndarray:
    order = group.order
    mult, inv = index_tables(group)
    out = np.empty((order, order), dtype=np.int64)
    for gi in range(order):
        out[gi] = mult[mult[gi, np.arange(order)], inv[gi]]
    return out


def block_dimension(e: np.ndarray, orb: Orbitals, tol: float = 1e-9) -> float:
    """Dimension of the two-sided block T~ e_j.

    Right multiplication by a verified idempotent is an idempotent linear map
    on the centralizer algebra, so its rank equals its trace; in orbit
    coordinates the trace is sum over orbits c with rep (u, v) of
    sum_{w in orbit-row of c at u} e[w, v].
    """
    trace = 0.0 + 0.0j
    labels = orb.labels
    for c, (u, v) in enumerate(orb.reps):
        members = np.nonzero(labels[u] == c)[0]
        trace += e[members, v].sum()
    if abs(trace.imag) > tol:
        raise IdempotencyFailure(f"block trace {trace} is not real")
    return trace.real


@dataclass(frozen=True)
class IdempotentReport:
    multiplicities: tuple[int, ...]
    block_dims: tuple[int, ...]
    max_idempotency_dev: float
    max_product_dev: float
    max_resolution_dev: float


def verify_central_idempotents(
    group: D2Group,
    table: CharacterTable,
    multiplicities: MultiplicityVector,
    guard: int = DEFAULT_MATRIX_GUARD,
    tol: float = 1e-9,
) -> IdempotentReport:
    """Check e_j^2 = e_j, e_j e_k = 0, sum e_j = I, and dim(T~ e_j) = d_j^2."""
    idems = [
        central_idempotent(group, table, j, guard=guard) for j in range(len(table.labels))
    ]
    order = group.order

    max_idem = 0.0
    for j, e in enumerate(idems):
        dev = float(np.abs(e @ e - e).max())
        max_idem = max(max_idem, dev)
        if dev > tol:
            raise IdempotencyFailure(f"e_{j}^2 != e_{j} (deviation {dev:.3e})")

    max_prod = 0.0
    for j in range(len(idems)):
        for k in range(j + 1, len(idems)):
            dev = float(np.abs(idems[j] @ idems[k]).max())
            max_prod = max(max_prod, dev)
            if dev > tol:
                raise IdempotencyFailure(f"e_{j} e_{k} != 0 (deviation {dev:.3e})")

    resolution = sum(idems)
    max_res = float(np.abs(resolution - np.eye(order)).max())
    if max_res > tol:
        raise IdempotencyFailure(f"sum of idempotents != identity (deviation {max_res:.3e})")

    orb = conjugation_orbitals(group)
    block_dims = []
    for j, e in enumerate(idems):
        dim = block_dimension(e, orb, tol=tol)
        target = multiplicities.values[j] ** 2
        if abs(dim - target) > 1e-6:
            raise IdempotencyFailure(
                f"block of e_{j} has dimension {dim:.6f}, expected {target}"
            )
        block_dims.append(target)

    return IdempotentReport(
        multiplicities=multiplicities.values,
        block_dims=tuple(block_dims),
        max_idempotency_dev=max_idem,
        max_product_dev=max_prod,
        max_resolution_dev=max_res,
    )


# -- combined report -----------------------------------------------------------


@dataclass(frozen=True)
class WedderburnReport:
    group_name: str
    order: int
    labels: tuple[CharLabel, ...]
    closed_form: tuple[int, ...]
    char_sum: tuple[int, ...]
    inner_product: tuple[int, ...]
    blocks: tuple[int, ...]
    sum_d_sq: int
    sum_d_deg: int
    centralizer_dim: int

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.order,
            "characters": [
                {
                    "label": label.describe(),
                    "degree": label.degree,
                    "multiplicity": m,
                    "sources_agree": True,
                }
                for label, m in zip(self.labels, self.closed_form)
            ],
            "blocks": list(self.blocks),
            "sum_d_squared": self.sum_d_sq,
            "centralizer_dim": self.centralizer_dim,
            "sum_d_times_degree": self.sum_d_deg,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def wedderburn_report(
    group: D2Group,
    classes: ClassList | None = None,
    table: CharacterTable | None = None,
) -> WedderburnReport:
    """Compute all three multiplicity vectors and check the global identities.

    Raises MultiplicityMismatch if the three vectors differ or if either
    sum d^2 = dim of the centralizer algebra or sum d*deg = |G| fails.
    """
    classes = classes if classes is not None else conjugacy_classes(group)
    table = table if table is not None else character_table(group, classes)

    closed = multiplicities_closed_form(group, table.labels)
    sums = multiplicities_char_sum(group, table)
    inner = multiplicities_inner_product(group, table)

    if not (closed.values == sums.values == inner.values):
        raise MultiplicityMismatch(
            f"closed form {closed.values} vs char sums {sums.values} "
            f"vs inner products {inner.values} on {group.name}"
        )
    cent = dim_centralizer(group)
    if closed.sum_d_sq != cent:
        raise MultiplicityMismatch(
            f"sum d^2 = {closed.sum_d_sq} but centralizer dimension is {cent}"
        )
    if closed.sum_d_deg() != group.order:
        raise MultiplicityMismatch(
            f"sum d*deg = {closed.sum_d_deg()} but |G| = {group.order}"
        )
    return WedderburnReport(
        group_name=group.name,
        order=group.order,
        labels=closed.labels,
        closed_form=closed.values,
        char_sum=sums.values,
        inner_product=inner.values,
        blocks=tuple(closed.blocks()),
        sum_d_sq=closed.sum_d_sq,
        sum_d_deg=closed.sum_d_deg(),
        centralizer_dim=cent,
    )
