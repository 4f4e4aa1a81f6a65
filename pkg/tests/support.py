"""Shared deterministic generators for the test suite.

Everything is seeded through the package's own LCG so failures
reproduce exactly.
"""

from geninv import (GF, QI, QQ, Lcg, Matrix, column_space_basis, inverse,
                    matrix_index, nullspace_basis, rank)

FIELDS = [QQ, QI, GF(2), GF(3), GF(5)]


def random_matrix(field, nrows, ncols, rng):
    return Matrix(field, [[field.sample(rng) for _ in range(ncols)]
                          for _ in range(nrows)], ncols)


def random_invertible(field, n, rng):
    while True:
        M = random_matrix(field, n, n, rng)
        if rank(M) == n:
            return M


def random_structured(field, n, rng):
    """Random conjugate of diag(C, N): controlled rank and nilpotency type."""
    r = rng.randrange(n + 1)
    lengths = []
    left = n - r
    while left > 0:
        L = 1 + rng.randrange(left)
        lengths.append(L)
        left -= L
    f = field
    rows = [[f.zero()] * n for _ in range(n)]
    if r:
        C = random_invertible(field, r, rng)
        for i in range(r):
            for j in range(r):
                rows[i][j] = C.rows[i][j]
    offset = r
    for L in lengths:
        for k in range(L - 1):
            rows[offset + k + 1][offset + k] = f.one()
        offset += L
    T = random_invertible(field, n, rng)
    return T @ Matrix(field, rows, n) @ inverse(T)


def _hstack_all(cols, field, n):
    if not cols:
        return Matrix(field, [[] for _ in range(n)], 0)
    M = cols[0]
    for v in cols[1:]:
        M = M.hstack(v)
    return M


def _in_span(basis: Matrix, v: Matrix) -> bool:
    if basis.ncols == 0:
        return v.is_zero()
    return rank(basis.hstack(v)) == rank(basis)


def ordered_extension(A, rng, tries=20):
    """A matrix B with A below B in both the GD1 and the 1GD order.

    B = A + u v^t where u lies in U_A but outside Im A (rank
    additivity on columns), v^t kills Im A, and v does not vanish on
    Ker A (rank additivity on rows).  Returns None when A admits no
    such extension (e.g. A invertible).
    """
    field = A.field
    n = A.nrows
    m = matrix_index(A)
    U_cols = nullspace_basis(A ** m)
    colA = column_space_basis(A)
    left_null = nullspace_basis(A.transpose())
    kerA = nullspace_basis(A)
    if not U_cols or not left_null or not kerA:
        return None
    U = _hstack_all(U_cols, field, n)
    for _ in range(tries):
        u = U @ random_matrix(field, U.ncols, 1, rng)
        if u.is_zero() or _in_span(colA, u):
            continue
        for _ in range(tries):
            coeffs = random_matrix(field, len(left_null), 1, rng)
            v = _hstack_all(left_null, field, n) @ coeffs
            vt = v.transpose()
            if v.is_zero():
                continue
            if all((vt @ w).is_zero() for w in kerA):
                continue
            return A + u @ vt
        return None
    return None
