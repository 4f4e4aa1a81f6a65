"""Index, Fitting decomposition, core-nilpotent split and Jordan chains.

For a square A over an exact field, the index m is the smallest m >= 0
with rank(A^m) = rank(A^{m+1}).  Then k^n = W + U with W = Im A^m,
U = Ker A^m, A restricted to W invertible and A restricted to U
nilpotent.  Assembling a basis of W with Jordan chains of A on U gives
P and J = P^{-1} A P = diag(C, N), where N carries ones on the
subdiagonal inside each chain (chain vectors are stored in the order
v, Av, ..., A^{i-1}v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GeninvError, ShapeError
from .matrices import (Matrix, column_space_basis, inverse, nullspace_basis,
                       rank, solve_right)


def matrix_index(A: Matrix) -> int:
    """Endomorphism-convention index: invertible (and 0x0) matrices get 0."""
    if not A.is_square():
        raise ShapeError("index of a non-square matrix")
    prev = A.nrows  # rank of A^0
    power = A
    m = 0
    while True:
        r = rank(power)
        if r == prev:
            return m
        prev = r
        power = power @ A
        m += 1


def matrix_convention_index(A: Matrix) -> int:
    """The positive-integer convention: max(m, 1)."""
    return max(matrix_index(A), 1)


@dataclass(frozen=True)
class JordanChain:
    generator: Matrix           # column vector v
    vectors: tuple              # (v, Av, ..., A^{i-1}v)

    @property
    def length(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class FittingData:
    index: int                  # endomorphism convention
    basis_W: Matrix             # n x r
    basis_U: Matrix             # n x (n-r), columns = chain vectors
    C: Matrix                   # r x r, invertible
    chains: tuple               # JordanChains, sorted by length ascending
    P: Matrix
    P_inv: Matrix
    J: Matrix                   # diag(C, N)

    @property
    def r(self) -> int:
        return self.basis_W.ncols

    @property
    def matrix_convention_index(self) -> int:
        return max(self.index, 1)

    @property
    def chain_lengths(self):
        return [c.length for c in self.chains]


class _Span:
    """Incremental row-reduced span with membership testing."""

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []          # reduced rows, pivot order
        self.pivots = []

    def add(self, vec) -> bool:
        """Reduce vec against the span; add it if independent."""
        f = self.field
        zero = f.zero()
        v = [vec.rows[i][0] for i in range(self.dim)]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != zero:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        pivot = next((i for i, e in enumerate(v) if e != zero), None)
        if pivot is None:
            return False
        pinv = f.inv(v[pivot])
        self.rows.append([f.mul(pinv, e) for e in v])
        self.pivots.append(pivot)
        return True


def nilpotent_jordan_chains(N: Matrix):
    """Jordan chains of a nilpotent matrix, deterministically chosen.

    Works down from the nilpotency order: at level i the images of the
    longer chains already land in Ker N^i, and new generators are taken
    from the nullspace basis of N^i in index order whenever they are
    independent of Ker N^{i-1} plus those images.
    """
    if not N.is_square():
        raise ShapeError("Jordan chains of a non-square matrix")
    d = N.nrows
    if d == 0:
        return []
    powers = [Matrix.identity(N.field, d)]
    while not powers[-1].is_zero():
        if len(powers) > d:
            raise GeninvError("matrix is not nilpotent")
        powers.append(powers[-1] @ N)
    m = len(powers) - 1  # nilpotency order
    kernel_bases = [nullspace_basis(powers[i]) for i in range(m + 1)]
    chains = []  # list of list-of-vectors, longest first as discovered
    for level in range(m, 0, -1):
        span = _Span(N.field, d)
        for b in kernel_bases[level - 1]:
            span.add(b)
        for chain in chains:
            carried = chain[len(chain) - level]  # N^{len-level} of its generator
            span.add(carried)
        for cand in kernel_bases[level]:
            if span.add(cand):
                vecs = [cand]
                for _ in range(level - 1):
                    vecs.append(N @ vecs[-1])
                chains.append(vecs)
    chains.sort(key=len)
    result = [JordanChain(generator=c[0], vectors=tuple(c)) for c in chains]
    total = sum(ch.length for ch in result)
    if total != d:
        raise AssertionError("Jordan chains do not exhaust the space")
    return result


def _nilpotent_block(field, lengths) -> Matrix:
    d = sum(lengths)
    N = [[field.zero()] * d for _ in range(d)]
    offset = 0
    for L in lengths:
        for k in range(L - 1):
            N[offset + k + 1][offset + k] = field.one()
        offset += L
    return Matrix(field, N, d)


def fitting_decomposition(A: Matrix) -> FittingData:
    if not A.is_square():
        raise ShapeError("decomposition of a non-square matrix")
    f = A.field
    n = A.nrows
    m = matrix_index(A)
    Am = A ** m
    basis_W = column_space_basis(Am)
    r = basis_W.ncols
    C = solve_right(basis_W, A @ basis_W)
    U0_cols = nullspace_basis(Am)
    if U0_cols:
        basis_U0 = U0_cols[0]
        for v in U0_cols[1:]:
            basis_U0 = basis_U0.hstack(v)
    else:
        basis_U0 = Matrix(f, [[] for _ in range(n)], 0)
    Nmat = solve_right(basis_U0, A @ basis_U0) if basis_U0.ncols else \
        Matrix(f, [], 0)
    coord_chains = nilpotent_jordan_chains(Nmat)
    chains = []
    for ch in coord_chains:
        ambient = tuple(basis_U0 @ v for v in ch.vectors)
        chains.append(JordanChain(generator=ambient[0], vectors=ambient))
    P = basis_W
    for ch in chains:
        for v in ch.vectors:
            P = P.hstack(v)
    basis_U = P.take_columns(range(r, n))
    Nblock = _nilpotent_block(f, [ch.length for ch in chains])
    J_rows = []
    zero = f.zero()
    d = n - r
    for i in range(r):
        J_rows.append(list(C.rows[i]) + [zero] * d)
    for i in range(d):
        J_rows.append([zero] * r + list(Nblock.rows[i]))
    J = Matrix(f, J_rows, n)
    P_inv = inverse(P)
    if A @ P != P @ J:
        raise AssertionError("decomposition failed: A P != P J")
    return FittingData(index=m, basis_W=basis_W, basis_U=basis_U, C=C,
                       chains=tuple(chains), P=P, P_inv=P_inv, J=J)


@dataclass(frozen=True)
class CoreNilpotent:
    A1: Matrix
    A2: Matrix


def core_nilpotent(A: Matrix, fitting: FittingData | None = None) -> CoreNilpotent:
    """A = A1 + A2 with A1 A2 = A2 A1 = 0, A2 nilpotent, index(A1) <= 1."""
    fd = fitting if fitting is not None else fitting_decomposition(A)
    f = A.field
    n = A.nrows
    r = fd.r
    zero = f.zero()
    D1 = [[fd.J.rows[i][j] if i < r and j < r else zero for j in range(n)]
          for i in range(n)]
    A1 = fd.P @ Matrix(f, D1, n) @ fd.P_inv
    A2 = A - A1
    return CoreNilpotent(A1=A1, A2=A2)
