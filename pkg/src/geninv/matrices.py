"""Dense exact matrices and the solvers the rest of the package needs.

Everything here is a pure function on immutable inputs.  Row reduction
uses deterministic pivoting (first nonzero entry in column order), so
every output is reproducible bit-for-bit.
"""

from __future__ import annotations

from .errors import FieldMismatchError, ShapeError, SingularMatrixError
from .fields import Field
from .rng import Lcg


class Matrix:
    """Immutable n x s matrix over a single field.

    Entries are stored as the field's raw canonical values (see the
    fields module); 0 x 0 and 0 x k shapes are legal.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
        else:
            width = 0 if ncols is None else ncols
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)]
                              for i in range(n)], n)

    @staticmethod
    def from_ints(field: Field, rows) -> "Matrix":
        ncols = len(rows[0]) if rows else 0
        return Matrix(field, [[field.from_int(e) for e in r] for r in rows], ncols)

    @staticmethod
    def from_strings(field: Field, rows) -> "Matrix":
        ncols = len(rows[0]) if rows else 0
        return Matrix(field, [[field.parse(e) for e in r] for r in rows], ncols)

    @staticmethod
    def column(field: Field, entries) -> "Matrix":
        return Matrix(field, [[e] for e in entries], 1)

    # -- basics ----------------------------------------------------------

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(
                "field mismatch: %r vs %r" % (self.field, other.field))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(e) for e in r)
                         for r in self.rows)
        return "Matrix(%r, %dx%d: %s)" % (self.field, self.nrows, self.ncols, body)

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(e == z for r in self.rows for e in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def to_strings(self):
        return [[self.field.format(e) for e in r] for r in self.rows]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("shape mismatch in add")
        add = self.field.add
        return Matrix(self.field,
                      [[add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("shape mismatch in sub")
        sub = self.field.sub
        return Matrix(self.field,
                      [[sub(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(e) for e in r] for r in self.rows],
                      self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, e) for e in r] for r in self.rows],
                      self.ncols)

    def __matmul__(self, other):
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise ShapeError("inner dimensions disagree: %dx%d @ %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero()
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for arow in self.rows:
            orow = []
            for bcol in cols:
                acc = zero
                for a, b in zip(arow, bcol):
                    if a != zero:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(f, out, other.ncols)

    def __pow__(self, e: int):
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        if e < 0:
            raise ShapeError("negative matrix power")
        result = Matrix.identity(self.field, self.nrows)
        for _ in range(e):
            result = result @ self
        return result

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [],
                      self.nrows)

    def hstack(self, other):
        self._check_same_field(other)
        if self.nrows != other.nrows:
            raise ShapeError("row counts disagree in hstack")
        if self.nrows == 0:
            return Matrix(self.field, [], self.ncols + other.ncols)
        return Matrix(self.field,
                      [ra + rb for ra, rb in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def take_columns(self, indices):
        return Matrix(self.field,
                      [[r[j] for j in indices] for r in self.rows],
                      len(indices))


def rref(M: Matrix):
    """Reduced row echelon form: (R, pivot_columns, rank)."""
    f = M.field
    zero = f.zero()
    sub, mul, inv = f.sub, f.mul, f.inv
    rows = [list(r) for r in M.rows]
    nrows, ncols = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != f.one():
            pinv = inv(pv)
            rows[r] = [mul(pinv, e) for e in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor == zero:
                continue
            row_i = rows[i]
            for k in range(c, ncols):
                if prow[k] != zero:
                    row_i[k] = sub(row_i[k], mul(factor, prow[k]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(f, rows, ncols), pivots, r


def rank(M: Matrix) -> int:
    return rref(M)[2]


def nullspace_basis(M: Matrix):
    """Basis of {v : Mv = 0} as a list of column vectors."""
    f = M.field
    R, pivots, rk = rref(M)
    zero, one = f.zero(), f.one()
    pivot_set = set(pivots)
    basis = []
    for j in range(M.ncols):
        if j in pivot_set:
            continue
        v = [zero] * M.ncols
        v[j] = one
        for k, pc in enumerate(pivots):
            v[pc] = f.neg(R.rows[k][j])
        basis.append(Matrix.column(f, v))
    return basis


def column_space_basis(M: Matrix) -> Matrix:
    """Canonical basis of the column space, returned as an n x r matrix.

    Canonical means: the nonzero rows of rref(M^t), transposed.  The same
    input always yields the same basis.
    """
    R, _, rk = rref(M.transpose())
    rows = R.rows[:rk]
    cols = list(zip(*rows)) if rows else [() for _ in range(M.nrows)]
    if not rows:
        return Matrix(M.field, [[] for _ in range(M.nrows)], 0)
    return Matrix(M.field, cols, rk)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = M.nrows
    aug, pivots, _ = rref(M.hstack(Matrix.identity(M.field, n)))
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix(M.field, [r[n:] for r in aug.rows], n)


def solve_right(B: Matrix, Y: Matrix) -> Matrix:
    """Unique X with B @ X = Y, for B of full column rank.

    Used to express images in a chosen basis (e.g. the matrix of A
    restricted to an invariant subspace).
    """
    if B.nrows != Y.nrows:
        raise ShapeError("row counts disagree in solve_right")
    r = B.ncols
    aug, pivots, rk = rref(B.hstack(Y))
    if pivots[:r] != list(range(r)):
        raise ShapeError("basis matrix is rank-deficient")
    zero = B.field.zero()
    for i in range(r, aug.nrows):
        if any(e != zero for e in aug.rows[i][r:]):
            raise ShapeError("inconsistent system in solve_right")
    return Matrix(B.field, [row[r:] for row in aug.rows[:r]], Y.ncols)


class AffineMatrixSpace:
    """Exact affine set of matrices: particular + span(basis).

    ``constraints`` keeps the defining linear constraints so membership
    can always be re-verified; see solve_affine_matrix_system for the
    constraint format.
    """

    def __init__(self, field, shape, particular, basis, constraints):
        self.field = field
        self.shape = shape
        self.particular = particular
        self.basis = list(basis)
        self.constraints = list(constraints)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def member(self, coeffs) -> Matrix:
        if len(coeffs) != len(self.basis):
            raise ShapeError("expected %d coefficients" % len(self.basis))
        X = self.particular
        for c, Bk in zip(coeffs, self.basis):
            X = X + Bk.scale(c)
        return X

    def contains(self, X: Matrix) -> bool:
        if (X.nrows, X.ncols) != self.shape or X.field != self.field:
            return False
        return all(_constraint_holds(c, X) for c in self.constraints)


def _normalize_constraint(c):
    """Accepts (L, R, T) or (terms, T) with terms a list of (L, R) pairs."""
    if len(c) == 3:
        L, R, T = c
        return [(L, R)], T
    terms, T = c
    return list(terms), T


def _constraint_holds(c, X: Matrix) -> bool:
    terms, T = _normalize_constraint(c)
    acc = None
    for L, R in terms:
        part = L @ X @ R
        acc = part if acc is None else acc + part
    return acc == T


def solve_affine_matrix_system(constraints, shape, field) -> AffineMatrixSpace | None:
    """Exact affine solution set of linear constraints on an unknown X.

    Each constraint is L @ X @ R = T, or a sum of such terms sharing one
    right-hand side: ([(L1, R1), (L2, R2), ...], T).  X is vectorized
    column-major and all constraints are stacked into a single system
    solved by RREF.  Returns None when infeasible.
    """
    n, s = shape
    nunk = n * s
    zero = field.zero()
    add, mul = field.add, field.mul
    coeff_rows = []
    rhs = []
    for c in constraints:
        terms, T = _normalize_constraint(c)
        for L, R in terms:
            if L.ncols != n or R.nrows != s:
                raise ShapeError("constraint term shapes do not fit X")
            if (L.nrows, R.ncols) != (T.nrows, T.ncols):
                raise ShapeError("constraint target shape mismatch")
        for i in range(T.nrows):
            for j in range(T.ncols):
                row = [zero] * nunk
                for L, R in terms:
                    Li = L.rows[i]
                    for a in range(n):
                        la = Li[a]
                        if la == zero:
                            continue
                        for b in range(s):
                            rb = R.rows[b][j]
                            if rb == zero:
                                continue
                            k = b * n + a
                            row[k] = add(row[k], mul(la, rb))
                coeff_rows.append(row + [T.rows[i][j]])
                rhs.append(T.rows[i][j])
    if not coeff_rows:
        # no constraints: the whole space
        particular = Matrix.zeros(field, n, s)
        basis = []
        for k in range(nunk):
            vec = [zero] * nunk
            vec[k] = field.one()
            basis.append(_unvec(field, vec, n, s))
        return AffineMatrixSpace(field, shape, particular, basis, constraints)
    aug = Matrix(field, coeff_rows, nunk + 1)
    R, pivots, rk = rref(aug)
    if pivots and pivots[-1] == nunk:
        return None
    # particular solution: free unknowns zero
    part_vec = [zero] * nunk
    for k, pc in enumerate(pivots):
        part_vec[pc] = R.rows[k][nunk]
    particular = _unvec(field, part_vec, n, s)
    pivot_set = set(pivots)
    basis = []
    one = field.one()
    for j in range(nunk):
        if j in pivot_set:
            continue
        vec = [zero] * nunk
        vec[j] = one
        for k, pc in enumerate(pivots):
            vec[pc] = field.neg(R.rows[k][j])
        basis.append(_unvec(field, vec, n, s))
    return AffineMatrixSpace(field, shape, particular, basis, constraints)


def _unvec(field, vec, n, s) -> Matrix:
    # column-major: unknown (a, b) sits at index b*n + a
    return Matrix(field, [[vec[b * n + a] for b in range(s)] for a in range(n)], s)


def sample_member(S: AffineMatrixSpace, seed: int) -> Matrix:
    """Deterministic pseudo-random member of a feasible affine space."""
    rng = Lcg(seed)
    coeffs = [S.field.sample(rng) for _ in S.basis]
    X = S.member(coeffs)
    if not S.contains(X):
        raise AssertionError("sampled member fails its defining constraints")
    return X
