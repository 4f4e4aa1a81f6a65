"""Decision procedures for the binary relations between square matrices.

Every relation is reduced to an exact linear feasibility problem, so
the answers carry no tolerance.  When a relation holds, the report
carries a witness matrix that certifies it and has been substituted
back into the defining equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .decomp import fitting_decomposition, matrix_index
from .errors import ShapeError
from .families import is_1gd, is_gd1
from .inverses import gdrazin_space
from .matrices import Matrix, nullspace_basis, rank, solve_affine_matrix_system

RELATIONS = ("space", "minus", "gd", "gd1", "1gd", "gd1-1gd", "1gd-gd1")


@dataclass
class OrderCheckReport:
    relation: str
    holds: bool
    witness: Matrix | None = None
    evidence: dict = dataclass_field(default_factory=dict)


def _check_pair(A: Matrix, B: Matrix):
    if not A.is_square() or not B.is_square():
        raise ShapeError("order relations need square matrices")
    if (A.nrows, A.ncols) != (B.nrows, B.ncols):
        raise ShapeError("size mismatch")
    if A.field != B.field:
        raise ShapeError("field mismatch")


def space_preorder(A: Matrix, B: Matrix) -> OrderCheckReport:
    """Im A contained in Im B and Ker B contained in Ker A."""
    _check_pair(A, B)
    im_ok = rank(B.hstack(A)) == rank(B)
    Z = Matrix.zeros(A.field, A.nrows, 1)
    ker_ok = all((A @ v) == Z for v in nullspace_basis(B))
    return OrderCheckReport(relation="space", holds=im_ok and ker_ok,
                            evidence={"im_A_in_im_B": im_ok,
                                      "ker_B_in_ker_A": ker_ok})


def minus_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """Feasibility of {AXA = A, X(A-B) = 0, (A-B)X = 0}."""
    _check_pair(A, B)
    n = A.nrows
    f = A.field
    I = Matrix.identity(f, n)
    Z = Matrix.zeros(f, n, n)
    D = A - B
    S = solve_affine_matrix_system([(A, A, A), (I, D, Z), (D, I, Z)], (n, n), f)
    if S is None:
        return OrderCheckReport(relation="minus", holds=False,
                                evidence={"feasible": False})
    X = S.particular
    if not (A @ X @ A == A and X @ A == X @ B and A @ X == B @ X):
        raise AssertionError("minus witness fails its defining equations")
    return OrderCheckReport(relation="minus", holds=True, witness=X,
                            evidence={"feasible": True})


def gd_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """Minus-order system strengthened by commutation with A^m."""
    _check_pair(A, B)
    n = A.nrows
    f = A.field
    I = Matrix.identity(f, n)
    Z = Matrix.zeros(f, n, n)
    D = A - B
    constraints = [(A, A, A), (I, D, Z), (D, I, Z)]
    m = matrix_index(A)
    if m > 0:
        Am = A ** m
        constraints.append(([(I, Am), (-Am, I)], Z))
    S = solve_affine_matrix_system(constraints, (n, n), f)
    if S is None:
        return OrderCheckReport(relation="gd", holds=False,
                                evidence={"feasible": False})
    X = S.particular
    return OrderCheckReport(relation="gd", holds=True, witness=X,
                            evidence={"feasible": True})


def gd1_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """A and B agree on W_A, plus the minus order."""
    _check_pair(A, B)
    fd = fitting_decomposition(A)
    agrees = (B - A) @ fd.basis_W == Matrix.zeros(A.field, A.nrows, fd.r)
    minus = minus_order(A, B)
    evidence = {"agrees_on_W": agrees, "minus": minus.holds}
    if not (agrees and minus.holds):
        return OrderCheckReport(relation="gd1", holds=False, evidence=evidence)
    Bgd = gdrazin_space(B).particular
    X = Bgd @ A @ minus.witness
    if not (is_gd1(A, X, fd) and A @ X == B @ X and X @ A == X @ B):
        raise AssertionError("gd1 witness fails the definition")
    return OrderCheckReport(relation="gd1", holds=True, witness=X,
                            evidence=evidence)


def one_gd_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """Im(B - A) contained in U_A, plus the minus order."""
    _check_pair(A, B)
    m = matrix_index(A)
    Am = A ** m
    into_U = Am @ (B - A) == Matrix.zeros(A.field, A.nrows, A.ncols)
    minus = minus_order(A, B)
    evidence = {"im_diff_in_U": into_U, "minus": minus.holds}
    if not (into_U and minus.holds):
        return OrderCheckReport(relation="1gd", holds=False, evidence=evidence)
    Bgd = gdrazin_space(B).particular
    X = minus.witness @ A @ Bgd
    if not (is_1gd(A, X) and A @ X == B @ X and X @ A == X @ B):
        raise AssertionError("1gd witness fails the definition")
    return OrderCheckReport(relation="1gd", holds=True, witness=X,
                            evidence=evidence)


def gd1_1gd_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """The bilateral GD1/1GD relation coincides with the G-Drazin order."""
    rep = gd_order(A, B)
    return OrderCheckReport(relation="gd1-1gd", holds=rep.holds,
                            witness=rep.witness,
                            evidence={"delegated_to": "gd", **rep.evidence})


def one_gd_gd1_order(A: Matrix, B: Matrix) -> OrderCheckReport:
    """The bilateral 1GD/GD1 relation coincides with the minus order."""
    rep = minus_order(A, B)
    return OrderCheckReport(relation="1gd-gd1", holds=rep.holds,
                            witness=rep.witness,
                            evidence={"delegated_to": "minus", **rep.evidence})


def check_order(relation: str, A: Matrix, B: Matrix) -> OrderCheckReport:
    table = {
        "space": space_preorder,
        "minus": minus_order,
        "gd": gd_order,
        "gd1": gd1_order,
        "1gd": one_gd_order,
        "gd1-1gd": gd1_1gd_order,
        "1gd-gd1": one_gd_gd1_order,
    }
    if relation not in table:
        raise ShapeError("unknown relation %r" % relation)
    return table[relation](A, B)
