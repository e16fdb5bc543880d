"""Association-scheme matrices of the group and the three dimension paths.

The scheme has one 0/1 matrix per conjugacy class, (N_i)_{x,y} = 1 iff
y*x^-1 lies in class i, plus the diagonal dual idempotents picking out each
class along row/column of the identity element.  Three independent routes to
the dimension of the algebra they generate:

  * the count of class triples (i, j, k) with Cl_k contained in Cl_i * Cl_j,
    which is the dimension of the span of the sandwiches E*_i N_j E*_k;
  * the centralizer-algebra dimension (1/|G|) sum |C_G(g)|^2, equivalently
    the number of simultaneous-conjugation orbits on G x G;
  * the explicit closed form (3nd + n^2 + 4d^2) / 2.

The product closure of the generated algebra (closure module) sits between
the first two, so the four numbers agree exactly on every valid instance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closure import (
    SparseRationalBasis,
    centralizer_orbit_count,
    terwilliger_closure_dim,
)
from .conjugacy import (
    ClassList,
    class_index_table,
    class_products,
    conjugacy_classes,
    structure_tensor,
)
from .errors import AxiomFailure, GuardExceededError, OracleMismatch
from .groups import D2Group, index_tables
from .limits import DEFAULT_MATRIX_GUARD, ENUMERATION_LIMIT


def adjacency_matrices(
    group: D2Group, classes: ClassList | None = None, guard: int = DEFAULT_MATRIX_GUARD
) -> list[np.ndarray]:
    """The 0/1 scheme matrices, one per class, over element indices."""
    if group.order > guard:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for dense matrices"
        )
    classes = classes if classes is not None else conjugacy_classes(group)
    table = class_index_table(group, classes)
    return [(table == i).astype(np.int64) for i in range(len(classes))]


def dual_idempotents(
    group: D2Group, classes: ClassList | None = None, guard: int = DEFAULT_MATRIX_GUARD
) -> list[np.ndarray]:
    """Diagonal 0/1 idempotents E*_i marking the elements of each class."""
    if group.order > guard:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for dense matrices"
        )
    classes = classes if classes is not None else conjugacy_classes(group)
    out = []
    for cls in classes:
        diag = np.zeros(group.order, dtype=np.int64)
        for g in cls.elements:
            diag[group.index(g)] = 1
        out.append(np.diag(diag))
    return out


@dataclass(frozen=True)
class SchemeAxiomReport:
    transpose_pairing: tuple[int, ...]
    class_count: int


def verify_scheme_axioms(
    group: D2Group,
    classes: ClassList | None = None,
    matrices: list[np.ndarray] | None = None,
    guard: int = DEFAULT_MATRIX_GUARD,
) -> SchemeAxiomReport:
    """Check the four defining identities on explicit matrices.

    (i) N_0 = I, (ii) sum N_i = J, (iii) each transpose is again a scheme
    matrix, (iv) N_i N_j = sum_k p_ij^k N_k with the structure constants
    counted from the classes.  Raises AxiomFailure naming the first violated
    clause; matrices may be passed in explicitly (e.g. corrupted, in tests).
    """
    classes = classes if classes is not None else conjugacy_classes(group)
    if matrices is None:
        matrices = adjacency_matrices(group, classes, guard=guard)
    order = group.order
    stack = np.stack([np.asarray(m, dtype=np.int64) for m in matrices])

    if not np.array_equal(stack[0], np.eye(order, dtype=np.int64)):
        raise AxiomFailure("(i)", "N_0 is not the identity")
    if not np.array_equal(stack.sum(axis=0), np.ones((order, order), dtype=np.int64)):
        raise AxiomFailure("(ii)", "matrices do not sum to the all-ones matrix")

    pairing = []
    for i, mat in enumerate(stack):
        partner = next(
            (j for j, other in enumerate(stack) if np.array_equal(mat.T, other)), None
        )
        if partner is None:
            raise AxiomFailure("(iii)", f"transpose of N_{i} is not a scheme matrix")
        pairing.append(partner)

    p = structure_tensor(group, classes)
    products = np.einsum("aij,bjk->abik", stack, stack)
    recon = np.tensordot(p, stack, axes=([2], [0]))
    if not np.array_equal(products, recon):
        bad = np.argwhere((products != recon).any(axis=(2, 3)))[0]
        raise AxiomFailure(
            "(iv)", f"N_{bad[0]} N_{bad[1]} differs from its structure-constant expansion"
        )

    return SchemeAxiomReport(transpose_pairing=tuple(pairing), class_count=len(classes))


def dump_matrices(group: D2Group, classes: ClassList | None = None, guard: int = DEFAULT_MATRIX_GUARD) -> str:
    """Dense integer grids of every N_i and E*_i, for external verification."""
    classes = classes if classes is not None else conjugacy_classes(group)
    mats = adjacency_matrices(group, classes, guard=guard)
    duals = dual_idempotents(group, classes, guard=guard)
    chunks = []
    for i, mat in enumerate(mats):
        chunks.append(f"N_{i} (class {classes[i].kind}, size {classes[i].size})")
        chunks.append("\n".join(" ".join(str(v) for v in row) for row in mat))
    for i, mat in enumerate(duals):
        chunks.append(f"E*_{i}")
        chunks.append("\n".join(" ".join(str(v) for v in row) for row in mat))
    return "\n".join(chunks) + "\n"


# -- dimension paths ---------------------------------------------------------


def dim_t0(
    group: D2Group,
    classes: ClassList | None = None,
    strategy: str = "triples",
    guard: int = DEFAULT_MATRIX_GUARD,
) -> int:
    """Dimension of the span of the sandwiches E*_i N_j E*_k.

    The default strategy counts class triples (i, j, k) with Cl_k inside
    Cl_i * Cl_j; the "span" strategy ranks the flattened sandwich matrices
    over exact rationals.
    """
    classes = classes if classes is not None else conjugacy_classes(group)
    ell = len(classes)
    if strategy == "triples":
        return sum(
            len(class_products(group, classes, i, j))
            for i in range(ell)
            for j in range(ell)
        )
    if strategy != "span":
        raise ValueError(f"unknown strategy {strategy!r}")
    if group.order > guard:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for the span path"
        )
    order = group.order
    table = class_index_table(group, classes)
    row_class = table[0]
    basis = SparseRationalBasis()
    for i in range(ell):
        rows = np.nonzero(row_class == i)[0]
        for k in range(ell):
            cols = np.nonzero(row_class == k)[0]
            block = table[np.ix_(rows, cols)]
            for j in range(ell):
                rr, cc = np.nonzero(block == j)
                if rr.size:
                    vec = {
                        int(rows[a] * order + cols[b]): 1 for a, b in zip(rr, cc)
                    }
                    basis.insert(vec)
    return basis.dimension


def dim_centralizer(group: D2Group, strategy: str = "formula") -> int:
    """Dimension of the centralizer algebra of the conjugation action.

    "formula": (1/|G|) sum over g of |C_G(g)|^2 with centralizer orders found
    by scanning the multiplication table.  "orbits": count the orbits of G on
    G x G directly.
    """
    if group.order > ENUMERATION_LIMIT:
        raise GuardExceededError(
            f"group order {group.order} exceeds the enumeration limit {ENUMERATION_LIMIT}"
        )
    if strategy == "formula":
        mult, _ = index_tables(group)
        cent_sizes = (mult == mult.T).sum(axis=1)
        total = int((cent_sizes.astype(np.int64) ** 2).sum())
        if total % group.order:
            raise OracleMismatch("sum of squared centralizer orders not divisible by |G|")
        return total // group.order
    if strategy == "orbits":
        return centralizer_orbit_count(group)
    raise ValueError(f"unknown strategy {strategy!r}")


def dim_closed_form(group: D2Group) -> int:
    """(3nd + n^2 + 4d^2) / 2, exactly; n and d always share parity."""
    n, d = group.n, group.d
    total = 3 * n * d + n * n + 4 * d * d
    assert total % 2 == 0
    return total // 2


@dataclass(frozen=True)
class TransitivityReport:
    """The four dimension computations and the resulting verdict."""

    dim_t0: int
    dim_closed_form: int
    dim_centralizer: int
    dim_closure: int | None
    triply_transitive: bool

    def as_tuple(self) -> tuple[int, int, int, int | None]:
        return (self.dim_t0, self.dim_closed_form, self.dim_centralizer, self.dim_closure)


def is_triply_transitive(
    group: D2Group,
    classes: ClassList | None = None,
    guard: int = DEFAULT_MATRIX_GUARD,
    need_closure: bool = False,
) -> TransitivityReport:
    """Compute all dimension paths; the verdict compares the sandwich span
    against the centralizer algebra.

    The closure path runs only within the matrix guard: above it, the value
    is None unless ``need_closure`` forces the computation, in which case the
    guard violation propagates.
    """
    classes = classes if classes is not None else conjugacy_classes(group)
    t0 = dim_t0(group, classes)
    closed = dim_closed_form(group)
    cent = dim_centralizer(group)
    closure: int | None
    if group.order <= guard:
        closure = terwilliger_closure_dim(group, classes, guard=guard)
    elif need_closure:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for the closure path"
        )
    else:
        closure = None
    return TransitivityReport(
        dim_t0=t0,
        dim_closed_form=closed,
        dim_centralizer=cent,
        dim_closure=closure,
        triply_transitive=(t0 == cent),
    )
