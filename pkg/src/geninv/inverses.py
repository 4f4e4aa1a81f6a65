"""Classical inverse sets and the compositions that build GD1/1GD members.

The {1}-inverse set {X : AXA = A} and the G-Drazin set
{X : AXA = A, X A^m = A^m X} are exact affine spaces; reflexive
inverses are produced only through the composition X1 A X2 of two
{1}-inverses, which is surjective onto the reflexive set.
"""

from __future__ import annotations

from .decomp import matrix_index
from .errors import GeninvError, ShapeError
from .families import is_1gd, is_gd1
from .matrices import (AffineMatrixSpace, Matrix, sample_member,
                       solve_affine_matrix_system)

__all__ = [
    "one_inverse_space", "gdrazin_space", "sample_member",
    "is_one_inverse", "is_reflexive", "is_gdrazin",
    "gamma_reflexive", "gd1_from_components", "one_gd_from_components",
    "gamma_bilateral", "gamma_bilateral_reversed",
]


def _require_square(A: Matrix):
    if not A.is_square():
        raise ShapeError("square matrix required")


def one_inverse_space(A: Matrix) -> AffineMatrixSpace:
    """{X : AXA = A}; never empty."""
    _require_square(A)
    n = A.nrows
    S = solve_affine_matrix_system([(A, A, A)], (n, n), A.field)
    if S is None:
        raise AssertionError("{1}-inverse system reported infeasible")
    return S


def gdrazin_space(A: Matrix) -> AffineMatrixSpace:
    """{X : AXA = A, X A^m = A^m X} with m the index of A; never empty."""
    _require_square(A)
    n = A.nrows
    m = matrix_index(A)
    constraints = [(A, A, A)]
    if m > 0:
        Am = A ** m
        I = Matrix.identity(A.field, n)
        Z = Matrix.zeros(A.field, n, n)
        constraints.append(([(I, Am), (-Am, I)], Z))
    S = solve_affine_matrix_system(constraints, (n, n), A.field)
    if S is None:
        raise AssertionError("G-Drazin system reported infeasible")
    return S


def is_one_inverse(A: Matrix, X: Matrix) -> bool:
    if (A.nrows, A.ncols) != (X.nrows, X.ncols):
        raise ShapeError("shape mismatch")
    return A @ X @ A == A


def is_reflexive(A: Matrix, X: Matrix) -> bool:
    return is_one_inverse(A, X) and X @ A @ X == X


def is_gdrazin(A: Matrix, X: Matrix) -> bool:
    if not is_one_inverse(A, X):
        return False
    m = matrix_index(A)
    Am = A ** m
    return X @ Am == Am @ X


def gamma_reflexive(A: Matrix, X1: Matrix, X2: Matrix) -> Matrix:
    """X1 A X2 for {1}-inverses X1, X2; lands in the reflexive set."""
    if not (is_one_inverse(A, X1) and is_one_inverse(A, X2)):
        raise GeninvError("gamma_reflexive needs two {1}-inverses")
    out = X1 @ A @ X2
    if not is_reflexive(A, out):
        raise AssertionError("composition left the reflexive set")
    return out


def gd1_from_components(A: Matrix, Xgd: Matrix, Xone: Matrix) -> Matrix:
    """Xgd A Xone with Xgd G-Drazin and Xone a {1}-inverse; lands in GD1."""
    if not is_gdrazin(A, Xgd):
        raise GeninvError("first component is not a G-Drazin inverse")
    if not is_one_inverse(A, Xone):
        raise GeninvError("second component is not a {1}-inverse")
    out = Xgd @ A @ Xone
    if not is_gd1(A, out):
        raise AssertionError("composition left the GD1 set")
    return out


def one_gd_from_components(A: Matrix, Xone: Matrix, Xgd: Matrix) -> Matrix:
    """Xone A Xgd; lands in the 1GD set."""
    if not is_one_inverse(A, Xone):
        raise GeninvError("first component is not a {1}-inverse")
    if not is_gdrazin(A, Xgd):
        raise GeninvError("second component is not a G-Drazin inverse")
    out = Xone @ A @ Xgd
    if not is_1gd(A, out):
        raise AssertionError("composition left the 1GD set")
    return out


def gamma_bilateral(A: Matrix, Xgd1: Matrix, X1gd: Matrix) -> Matrix:
    """Xgd1 A X1gd; simultaneously G-Drazin and reflexive."""
    if not is_gd1(A, Xgd1):
        raise GeninvError("first component is not a GD1 inverse")
    if not is_1gd(A, X1gd):
        raise GeninvError("second component is not a 1GD inverse")
    out = Xgd1 @ A @ X1gd
    if not (is_gdrazin(A, out) and is_reflexive(A, out)):
        raise AssertionError("composition left GD intersect {1,2}")
    return out


def gamma_bilateral_reversed(A: Matrix, X1gd: Matrix, Xgd1: Matrix) -> Matrix:
    """X1gd A Xgd1; lands in the reflexive set."""
    if not is_1gd(A, X1gd):
        raise GeninvError("first component is not a 1GD inverse")
    if not is_gd1(A, Xgd1):
        raise GeninvError("second component is not a GD1 inverse")
    out = X1gd @ A @ Xgd1
    if not is_reflexive(A, out):
        raise AssertionError("composition left the reflexive set")
    return out
