"""Parameterized GD1 and 1GD inverse families, and their membership oracles.

A GD1 inverse of A is a reflexive generalized inverse (AXA = A and
XAX = X) that leaves W = Im A^m invariant; a 1GD inverse is one leaving
U = Ker A^m invariant.  Both families are affinely parameterized in the
J-basis of the Fitting decomposition: a template matrix holds the fixed
block diag(C^{-1}, N^t), a set of free parameter slots, and dependent
entries computed by the bilinear rule

    entry(i, j) = row_i(Jt) . J . col_j(Jt)

with the dependent positions themselves taken as zero inside the
product (their values never contribute: J is zero on the rows and
columns they meet).  Evaluating a member conjugates the filled template
back by P.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .decomp import FittingData, fitting_decomposition, matrix_index
from .errors import GeninvError, ShapeError
from .fields import Field
from .matrices import (Matrix, column_space_basis, inverse, nullspace_basis,
                       rank)


def _zero_columns(M: Matrix):
    zero = M.field.zero()
    out = []
    for j in range(M.ncols):
        if all(M.rows[i][j] == zero for i in range(M.nrows)):
            out.append(j)
    return out


@dataclass(frozen=True)
class InverseFamily:
    kind: str                   # "gd1" | "1gd"
    field: Field
    n: int
    fitting: FittingData
    base: Matrix                # J' = diag(C^{-1}, N^t), the fixed part
    free_slots: tuple           # ordered (i, j) positions, 0-based, J-basis
    dependent_slots: tuple      # (i, j) positions filled by the bilinear rule

    @property
    def param_count(self) -> int:
        return len(self.free_slots)

    def slot_names(self):
        """Human-readable 1-based parameter names, e.g. 'a[5,3]'."""
        return ["a[%d,%d]" % (i + 1, j + 1) for (i, j) in self.free_slots]


def _build_family(A: Matrix, kind: str, fitting: FittingData | None) -> InverseFamily:
    fd = fitting if fitting is not None else fitting_decomposition(A)
    f = A.field
    n = A.nrows
    r = fd.r
    zero = f.zero()
    # J' = diag(C^{-1}, N^t)
    Cinv = inverse(fd.C)
    base_rows = [[zero] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            base_rows[i][j] = Cinv.rows[i][j]
    for i in range(r, n):
        for j in range(r, n):
            base_rows[i][j] = fd.J.rows[j][i]  # transpose of the nilpotent block
    base = Matrix(f, base_rows, n)
    zero_J = set(_zero_columns(fd.J))          # last column of each chain
    zero_Jp = set(_zero_columns(base))         # first column of each chain
    free = []
    for j in range(n):
        if j in zero_Jp:
            # step 7: fill the zero columns of J' with parameters
            lo = 0 if kind == "gd1" else r
            for i in range(lo, n):
                if i not in zero_J:
                    free.append((i, j))
        else:
            # step 6: a general kernel element into the nonzero columns
            if kind == "gd1" and j < r:
                continue
            for i in sorted(zero_J):
                free.append((i, j))
    dependent = [(i, j) for j in sorted(zero_Jp) for i in sorted(zero_J)]
    family = InverseFamily(kind=kind, field=f, n=n, fitting=fd, base=base,
                           free_slots=tuple(free), dependent_slots=tuple(dependent))
    expected = _expected_param_count(fd)
    if family.param_count != expected:
        raise AssertionError(
            "parameter count %d does not match the structure theorem value %d"
            % (family.param_count, expected))
    return family


def _expected_param_count(fd: FittingData) -> int:
    # dim N_u(A) * (rank A + rank A2), all read off the Jordan structure
    lengths = fd.chain_lengths
    rank_A2 = sum(L - 1 for L in lengths)
    rank_A = fd.r + rank_A2
    dim_ker = len(lengths)
    return dim_ker * (rank_A + rank_A2)


def gd1_family(A: Matrix, fitting: FittingData | None = None) -> InverseFamily:
    return _build_family(A, "gd1", fitting)


def one_gd_family(A: Matrix, fitting: FittingData | None = None) -> InverseFamily:
    return _build_family(A, "1gd", fitting)


def j_basis_member(F: InverseFamily, assignment) -> Matrix:
    """The filled template Jt in the J-basis (before conjugation by P)."""
    f = F.field
    n = F.n
    keys = set(assignment)
    slots = set(F.free_slots)
    if keys != slots:
        missing = sorted(slots - keys)
        extra = sorted(keys - slots)
        raise GeninvError("bad assignment; missing %r, extra %r" % (missing, extra))
    rows = [list(r) for r in F.base.rows]
    for (i, j), value in assignment.items():
        rows[i][j] = value
    J = F.fitting.J
    add, mul, zero = f.add, f.mul, f.zero()
    filled = {}
    for (i, j) in F.dependent_slots:
        u = [zero] * n  # row_i(Jt) . J
        for k in range(n):
            c = rows[i][k]
            if c == zero:
                continue
            Jk = J.rows[k]
            for l in range(n):
                if Jk[l] != zero:
                    u[l] = add(u[l], mul(c, Jk[l]))
        val = zero
        for l in range(n):
            if u[l] != zero:
                val = add(val, mul(u[l], rows[l][j]))
        filled[(i, j)] = val
    for (i, j), val in filled.items():
        rows[i][j] = val
    return Matrix(f, rows, n)


def evaluate_family(F: InverseFamily, assignment) -> Matrix:
    """A member of the family: P @ Jt @ P^{-1} for the given parameters."""
    Jt = j_basis_member(F, assignment)
    return F.fitting.P @ Jt @ F.fitting.P_inv


def enumerate_family(F: InverseFamily, cap: int = 4096):
    """All members over a finite field, pairwise distinct."""
    f = F.field
    if not f.finite:
        raise GeninvError("enumeration needs a finite field")
    count = f.p ** F.param_count
    if count > cap:
        raise GeninvError("family has %d members, over the cap %d" % (count, cap))
    members = []
    for values in product(f.elements(), repeat=F.param_count):
        assignment = dict(zip(F.free_slots, values))
        members.append(evaluate_family(F, assignment))
    if len(set(members)) != len(members):
        raise AssertionError("enumerated members are not pairwise distinct")
    return members


def _is_reflexive_pair(A: Matrix, X: Matrix) -> bool:
    return A @ X @ A == A and X @ A @ X == X


def _invariant_under(X: Matrix, basis: Matrix) -> bool:
    """Does X map span(basis) into itself?"""
    if basis.ncols == 0:
        return True
    stacked = basis.hstack(X @ basis)
    return rank(stacked) == basis.ncols


def is_gd1(A: Matrix, X: Matrix, fitting: FittingData | None = None) -> bool:
    """Reflexive generalized inverse leaving W = Im A^m invariant."""
    if A.nrows != X.nrows or A.ncols != X.ncols or not A.is_square():
        raise ShapeError("is_gd1 needs same-size square matrices")
    if not _is_reflexive_pair(A, X):
        return False
    if fitting is not None:
        basis_W = fitting.basis_W
    else:
        basis_W = column_space_basis(A ** matrix_index(A))
    return _invariant_under(X, basis_W)


def is_1gd(A: Matrix, X: Matrix, fitting: FittingData | None = None) -> bool:
    """Reflexive generalized inverse leaving U = Ker A^m invariant."""
    if A.nrows != X.nrows or A.ncols != X.ncols or not A.is_square():
        raise ShapeError("is_1gd needs same-size square matrices")
    if not _is_reflexive_pair(A, X):
        return False
    if fitting is not None:
        basis_U = fitting.basis_U
    else:
        Am = A ** matrix_index(A)
        cols = nullspace_basis(Am)
        if not cols:
            return True
        basis_U = cols[0]
        for v in cols[1:]:
            basis_U = basis_U.hstack(v)
    return _invariant_under(X, basis_U)
