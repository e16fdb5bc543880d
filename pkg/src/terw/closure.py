"""Exact algebra-closure dimension and the conjugation-orbit machinery.

Two closure paths are provided.

``algebra_dimension`` is the plain oracle: seed a basis with the generator
matrices, repeatedly append products of basis elements with generators
(both sides), and row-reduce the flattened matrices over exact rationals
until the dimension stabilizes.  Integer matrices are multiplied with
arbitrary-precision entries, so there is no tolerance anywhere.

``terwilliger_closure_dim`` specializes the same idea to the generators of
the Terwilliger algebra (scheme matrices plus dual idempotents) and makes it
fast enough for batch sweeps.  The key fact, checked exactly per instance
rather than assumed: all generators commute with every conjugation
permutation, hence everything the closure can produce is constant on the
orbits of G acting on G x G by simultaneous conjugation.  Each matrix is
then represented by one integer per orbit, products with generators become
sparse operator applications, and the orbit count is a hard ceiling for the
dimension (reaching it certifies equality with the centralizer algebra and
closure in one step).  The eliminations stay exact rational throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .conjugacy import ClassList, class_index_table, conjugacy_classes
from .errors import GuardExceededError
from .groups import D2Group, index_tables
from .limits import DEFAULT_MATRIX_GUARD

SparseVec = dict[int, int]


class SparseRationalBasis:
    """Row-reduced basis of sparse vectors over exact rationals.

    Rows are kept normalized with pivot coefficient 1; the pivot of a row is
    its smallest nonzero coordinate.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        while vec:
            pivot = min(vec)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            coeff = vec[pivot]
            for col, val in row.items():
                new = vec.get(col, Fraction(0)) - coeff * val
                if new:
                    vec[col] = new
                else:
                    vec.pop(col, None)
        return vec

    def insert(self, vec: SparseVec | dict[int, Fraction]) -> bool:
        """Reduce vec against the basis; add the residual if nonzero."""
        work = {col: Fraction(val) for col, val in vec.items() if val}
        residual = self._reduce(work)
        if not residual:
            return False
        pivot = min(residual)
        scale = residual[pivot]
        self.rows[pivot] = {col: val / scale for col, val in residual.items()}
        return True


def algebra_dimension(
    generators: Sequence[np.ndarray],
    guard: int = DEFAULT_MATRIX_GUARD,
    max_rounds: int | None = None,
) -> int:
    """Dimension of the matrix algebra generated by the given integer matrices.

    Breadth-first closure: new candidates are products of matrices that grew
    the basis with the original generators, on both sides; stops when a full
    round adds nothing.
    """
    if not generators:
        raise ValueError("need at least one generator")
    side = generators[0].shape[0]
    if side > guard:
        raise GuardExceededError(f"matrix side {side} exceeds guard {guard}")
    gens = [np.asarray(g, dtype=object) for g in generators]

    def flat(mat: np.ndarray) -> SparseVec:
        return {
            int(i * side + j): int(mat[i, j])
            for i in range(side)
            for j in range(side)
            if mat[i, j] != 0
        }

    basis = SparseRationalBasis()
    frontier = [g for g in gens if basis.insert(flat(g))]
    rounds = 0
    while frontier:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            break
        new: list[np.ndarray] = []
        for mat in frontier:
            for gen in gens:
                for prod in (mat @ gen, gen @ mat):
                    if basis.insert(flat(prod)):
                        new.append(prod)
        frontier = new
    return basis.dimension


# -- conjugation orbits -------------------------------------------------------


@dataclass
class Orbitals:
    """Orbits of G acting on G x G by simultaneous conjugation.

    ``labels[u, v]`` is the orbit id of the pair (u, v) over element indices;
    ids are contiguous and assigned in order of each orbit's first pair.
    ``reps`` holds that first pair per orbit.
    """

    count: int
    labels: np.ndarray
    reps: list[tuple[int, int]]


def conjugation_perms(group: D2Group, mult: np.ndarray, inv: np.ndarray) -> list[np.ndarray]:
    """Permutations x -> g x g^-1 of element indices, for group generators g."""
    order = group.order
    perms = []
    for g in group.generators():
        gi = group.index(g)
        perm = mult[mult[gi, np.arange(order)], inv[gi]]
        perms.append(perm.astype(np.int64))
    return perms


def conjugation_orbitals(group: D2Group) -> Orbitals:
    """Label the simultaneous-conjugation orbits on G x G by min-propagation."""
    order = group.order
    mult, inv = index_tables(group)
    perms = conjugation_perms(group, mult, inv)
    # include inverses so the fixpoint is constant on whole orbits
    all_perms = []
    for p in perms:
        all_perms.append(p)
        q = np.empty_like(p)
        q[p] = np.arange(order)
        all_perms.append(q)

    pair_perms = [
        (p[:, None] * order + p[None, :]).ravel() for p in all_perms
    ]
    labels = np.arange(order * order, dtype=np.int64)
    changed = True
    while changed:
        changed = False
        for pp in pair_perms:
            moved = labels[pp]
            if (moved < labels).any():
                labels = np.minimum(labels, moved)
                changed = True
    uniq, first, relabeled = np.unique(labels, return_index=True, return_inverse=True)
    reps = [(int(i // order), int(i % order)) for i in first]
    return Orbitals(
        count=len(uniq),
        labels=relabeled.reshape(order, order).astype(np.int32),
        reps=reps,
    )


def centralizer_orbit_count(group: D2Group) -> int:
    """Number of simultaneous-conjugation orbits on G x G (Burnside count)."""
    return conjugation_orbitals(group).count


# -- Terwilliger closure in orbit coordinates ---------------------------------


def _assert_conjugation_invariant(table: np.ndarray, perms: Iterable[np.ndarray]) -> None:
    """Exact certificate that every scheme matrix and dual idempotent lies in
    the centralizer algebra: the class-of-quotient table is invariant under
    simultaneous conjugation, and classes are conjugation-stable."""
    for p in perms:
        if not np.array_equal(table[np.ix_(p, p)], table):
            raise AssertionError(
                "conjugation does not preserve the class table; generators "
                "would not lie in the centralizer algebra"
            )


Operator = Callable[[SparseVec], SparseVec]


def _left_class_operator(
    orb: Orbitals, mult: np.ndarray, class_elems: np.ndarray
) -> Operator:
    """Coordinates of N_j * X from coordinates of X.

    (N_j X)(u, v) = sum over c in class j of X(c*u, v), so orbit rep (u, v)
    accumulates the coordinates at orbits of (c*u, v).
    """
    labels = orb.labels
    incoming: dict[int, list[int]] = {}
    for row, (u, v) in enumerate(orb.reps):
        for src in labels[mult[class_elems, u], v]:
            incoming.setdefault(int(src), []).append(row)
    return _accumulator(incoming)


def _right_class_operator(
    orb: Orbitals, mult: np.ndarray, inv: np.ndarray, class_elems: np.ndarray
) -> Operator:
    """Coordinates of X * N_j: (X N_j)(u, v) = sum over c of X(u, c^-1 * v)."""
    labels = orb.labels
    inv_elems = inv[class_elems]
    incoming: dict[int, list[int]] = {}
    for row, (u, v) in enumerate(orb.reps):
        for src in labels[u, mult[inv_elems, v]]:
            incoming.setdefault(int(src), []).append(row)
    return _accumulator(incoming)


def _accumulator(incoming: dict[int, list[int]]) -> Operator:
    def apply(vec: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for col, val in vec.items():
            for row in incoming.get(col, ()):
                out[row] = out.get(row, 0) + val
        return {k: v for k, v in out.items() if v}

    return apply


def _mask_operator(keep: np.ndarray) -> Operator:
    allowed = set(int(i) for i in np.nonzero(keep)[0])

    def apply(vec: SparseVec) -> SparseVec:
        return {c: v for c, v in vec.items() if c in allowed}

    return apply


def terwilliger_generator_coords(
    group: D2Group, classes: ClassList, orb: Orbitals, table: np.ndarray
) -> tuple[list[SparseVec], list[SparseVec]]:
    """Orbit coordinates of the scheme matrices and of the dual idempotents."""
    ell = len(classes)
    rep_u = np.array([u for u, _ in orb.reps])
    rep_v = np.array([v for _, v in orb.reps])
    rel = table[rep_u, rep_v]  # class of v*u^-1 at each orbit rep
    scheme = [
        {int(c): 1 for c in np.nonzero(rel == j)[0]} for j in range(ell)
    ]
    diag_class = np.where(
        rep_u == rep_v, table[np.zeros_like(rep_u), rep_u], -1
    )  # class of the diagonal element, or -1 off the diagonal
    dual = [
        {int(c): 1 for c in np.nonzero(diag_class == i)[0]} for i in range(ell)
    ]
    return scheme, dual


def closure_dim_in_orbit_coords(
    vectors: list[SparseVec], operators: list[Operator], cap: int
) -> int:
    """Breadth-first closure over exact rationals in orbit coordinates.

    ``cap`` is the orbit count: since every product stays constant on
    orbits, hitting the cap proves closure without generating more products.
    """
    basis = SparseRationalBasis()
    frontier: list[SparseVec] = []
    for vec in vectors:
        if basis.insert(vec):
            frontier.append(vec)
            if basis.dimension == cap:
                return cap
    while frontier:
        new: list[SparseVec] = []
        for vec in frontier:
            for op in operators:
                prod = op(vec)
                if prod and basis.insert(prod):
                    new.append(prod)
                    if basis.dimension == cap:
                        return cap
        frontier = new
    return basis.dimension


def terwilliger_closure_dim(
    group: D2Group,
    classes: ClassList | None = None,
    guard: int = DEFAULT_MATRIX_GUARD,
    include_scheme: bool = True,
    include_dual: bool = True,
) -> int:
    """Closure dimension of the algebra generated by the scheme matrices and
    dual idempotents (by default: the Terwilliger algebra).

    Restricting the generator set exercises genuinely smaller algebras, e.g.
    the scheme matrices alone span the commutative adjacency algebra.
    """
    if group.order > guard:
        raise GuardExceededError(
            f"group order {group.order} exceeds guard {guard} for the closure path"
        )
    classes = classes if classes is not None else conjugacy_classes(group)
    mult, inv = index_tables(group)
    table = class_index_table(group, classes)
    perms = conjugation_perms(group, mult, inv)
    _assert_conjugation_invariant(table, perms)
    orb = conjugation_orbitals(group)

    scheme_vecs, dual_vecs = terwilliger_generator_coords(group, classes, orb, table)
    rep_u = np.array([u for u, _ in orb.reps])
    rep_v = np.array([v for _, v in orb.reps])
    row_class = table[np.zeros_like(rep_u), rep_u]
    col_class = table[np.zeros_like(rep_v), rep_v]

    vectors: list[SparseVec] = []
    operators: list[Operator] = []
    if include_scheme:
        vectors.extend(scheme_vecs)
        for cls in classes:
            elems = np.array([group.index(g) for g in cls.elements])
            operators.append(_left_class_operator(orb, mult, elems))
            operators.append(_right_class_operator(orb, mult, inv, elems))
    if include_dual:
        vectors.extend(dual_vecs)
        for i in range(len(classes)):
            operators.append(_mask_operator(row_class == i))
            operators.append(_mask_operator(col_class == i))
    if not vectors:
        raise ValueError("need at least one family of generators")

    return closure_dim_in_orbit_coords(vectors, operators, cap=orb.count)
