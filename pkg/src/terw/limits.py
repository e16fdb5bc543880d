"""Default resource guards.

Explicit-matrix paths (adjacency matrices, algebra closure, idempotents,
brute-force class enumeration) are quadratic or worse in the group order and
are gated behind ``DEFAULT_MATRIX_GUARD``.  Formula and counting paths stay
cheap much longer and are capped only by ``ENUMERATION_LIMIT``.
"""

DEFAULT_MATRIX_GUARD = 64

ENUMERATION_LIMIT = 4096

MIN_GUARD = 6
