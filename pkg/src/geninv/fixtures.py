"""Published example matrices and their replay checks.

Each fixture re-derives a published quantity with this package and
compares exactly.  The registry is consumed by the CLI
(``geninv paper-examples``) and by the acceptance suite.
"""

from __future__ import annotations

from .decomp import core_nilpotent, fitting_decomposition, matrix_index
from .families import (evaluate_family, gd1_family, is_gd1, is_1gd,
                       j_basis_member, one_gd_family)
from .fields import QI, QQ
from .inverses import gdrazin_space, is_one_inverse, sample_member
from .matrices import (Matrix, column_space_basis, inverse, nullspace_basis,
                       rank)
from .orders import gd1_order, minus_order, one_gd_order
from .rng import Lcg


class FixtureError(AssertionError):
    pass


def _expect(cond: bool, message: str):
    if not cond:
        raise FixtureError(message)


# 5x5 Gaussian-rational matrix used by both family walkthroughs.
COMP_A = Matrix.from_strings(QI, [
    ["19-4i", "-12+3i", "-9+2i", "20-4i", "15-4i"],
    ["12-4i", "-6+3i", "-6+2i", "12-4i", "12-4i"],
    ["186-12i", "-117+9i", "-87+6i", "192-12i", "144-12i"],
    ["45-4i", "-28+3i", "-21+2i", "46-4i", "35-4i"],
    ["38", "-23", "-18", "39", "31"],
])

COMP_P = Matrix.from_strings(QI, [
    ["1", "0", "3", "-1", "1"],
    ["1", "-2", "0", "0", "0"],
    ["3", "1", "2", "0", "6"],
    ["1", "0", "-2", "1", "1"],
    ["0", "-1", "0", "0", "1"],
])

COMP_J = Matrix.from_strings(QI, [
    ["i", "0", "0", "0", "0"],
    ["0", "3", "0", "0", "0"],
    ["0", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0"],
    ["0", "0", "0", "1", "0"],
])

COMP_P_INV = Matrix.from_strings(QI, [
    ["-4", "3", "2", "-4", "-4"],
    ["-2", "1", "1", "-2", "-2"],
    ["13", "-8", "-6", "13", "10"],
    ["32", "-20", "-15", "33", "25"],
    ["-2", "1", "1", "-2", "-1"],
])

# 2x2 pair showing the GD1 order without containment of GD1 sets.
SIN_A = Matrix.from_strings(QQ, [["2", "0"], ["0", "0"]])
SIN_B = Matrix.from_strings(QQ, [["2", "-6"], ["0", "3"]])

# 5x5 rational pair ordered by GD1 and 1GD with indices 2 and 3.
NT_A = Matrix.from_strings(QQ, [
    ["9", "0", "1", "2", "-8"],
    ["-32", "1", "-4", "-13", "32"],
    ["2", "0", "0", "1", "-2"],
    ["0", "0", "0", "0", "0"],
    ["9", "0", "1", "2", "-8"],
])

NT_B = Matrix.from_strings(QQ, [
    ["9", "0", "1", "2", "-8"],
    ["-37", "1", "-4", "-13", "37"],
    ["5", "0", "0", "1", "-5"],
    ["-1", "0", "0", "0", "1"],
    ["9", "0", "1", "2", "-8"],
])

# The example's span statements (W = <e1,e2> etc.) are written in the
# Jordan basis given by the columns of this printed P.
NT_P = Matrix.from_strings(QQ, [
    ["1", "2", "-1", "0", "3"],
    ["0", "1", "4", "5", "-2"],
    ["0", "0", "1", "-3", "1"],
    ["0", "0", "0", "1", "2"],
    ["1", "2", "-1", "0", "4"],
])

NT_A_MINUS = Matrix.from_strings(QQ, [
    ["11", "0", "1", "3", "-10"],
    ["-5", "1", "1", "-2", "5"],
    ["-21", "0", "-3", "-9", "21"],
    ["7", "0", "1", "3", "-7"],
    ["11", "0", "1", "3", "-10"],
])


def _seeded_assignment(family, seed: int):
    rng = Lcg(seed)
    return {slot: family.field.sample(rng) for slot in family.free_slots}


def fixture_comp_factorization():
    """The printed P * J * P^{-1} product reproduces A."""
    _expect(COMP_P @ COMP_J @ COMP_P_INV == COMP_A,
            "printed factorization does not multiply back to A")
    _expect(inverse(COMP_P) == COMP_P_INV, "printed P^{-1} is wrong")
    _expect(rank(COMP_A) == 4, "rank of the 5x5 example is not 4")


def fixture_comp_decomposition():
    fd = fitting_decomposition(COMP_A)
    _expect(fd.index == 3, "index is not 3")
    _expect(fd.r == 2, "dim W is not 2")
    _expect(fd.chain_lengths == [3], "nilpotent part is not a single 3-chain")
    cn = core_nilpotent(COMP_A, fd)
    _expect(rank(cn.A1) == 2, "rank of the core part is not 2")
    _expect(rank(cn.A2) == 2, "rank of the nilpotent part is not 2")
    kernel = nullspace_basis(fd.J)
    e5 = Matrix.from_strings(QI, [["0"], ["0"], ["0"], ["0"], ["1"]])
    _expect(kernel == [e5], "N_u(J) is not the line through e5")


def fixture_comp_gd1_family():
    fd = fitting_decomposition(COMP_A)
    fam = gd1_family(COMP_A, fd)
    _expect(fam.param_count == 6, "GD1 family does not have 6 parameters")
    expected_slots = {(0, 2), (1, 2), (2, 2), (3, 2), (4, 3), (4, 4)}
    _expect(set(fam.free_slots) == expected_slots,
            "GD1 free slots are misplaced")
    _expect(fam.dependent_slots == ((4, 2),),
            "GD1 dependent slot is misplaced")
    f = fam.field
    for seed in range(50):
        assignment = _seeded_assignment(fam, seed)
        Jt = j_basis_member(fam, assignment)
        want = f.add(f.mul(assignment[(2, 2)], assignment[(4, 3)]),
                     f.mul(assignment[(3, 2)], assignment[(4, 4)]))
        _expect(Jt.rows[4][2] == want,
                "dependent entry disagrees with a'33*a'54 + a'43*a'55")
        X = fd.P @ Jt @ fd.P_inv
        _expect(is_gd1(COMP_A, X, fd), "a GD1 member fails the oracle")


def fixture_comp_1gd_family():
    fd = fitting_decomposition(COMP_A)
    fam = one_gd_family(COMP_A, fd)
    _expect(fam.param_count == 6, "1GD family does not have 6 parameters")
    expected_slots = {(4, 0), (4, 1), (4, 3), (4, 4), (2, 2), (3, 2)}
    _expect(set(fam.free_slots) == expected_slots,
            "1GD free slots are misplaced")
    _expect(fam.dependent_slots == ((4, 2),),
            "1GD dependent slot is misplaced")
    for seed in range(50):
        assignment = _seeded_assignment(fam, seed)
        X = evaluate_family(fam, assignment)
        _expect(is_1gd(COMP_A, X, fd), "a 1GD member fails the oracle")


def fixture_comp_gdrazin_restriction():
    """Every G-Drazin inverse acts as C^{-1} on W."""
    fd = fitting_decomposition(COMP_A)
    S = gdrazin_space(COMP_A)
    Cinv = inverse(fd.C)
    for seed in (1, 2, 3):
        X = sample_member(S, seed)
        _expect(X @ fd.basis_W == fd.basis_W @ Cinv,
                "a G-Drazin member does not restrict to C^{-1} on W")


def fixture_sin_contencion_families():
    fam_a = gd1_family(SIN_A)
    _expect(fam_a.param_count == 1, "A(GD1) is not a one-parameter family")
    half = QQ.parse("1/2")
    zero = QQ.zero()
    seen = set()
    for k in range(5):
        X = evaluate_family(fam_a, {fam_a.free_slots[0]: QQ.from_int(k)})
        _expect(X.rows[0][0] == half and X.rows[1][0] == zero
                and X.rows[1][1] == zero,
                "A(GD1) member is not of the form [[1/2, a], [0, 0]]")
        seen.add(X.rows[0][1])
    _expect(len(seen) == 5, "distinct parameters gave equal members")
    fam_b = gd1_family(SIN_B)
    _expect(fam_b.param_count == 0, "B(GD1) is not a single point")
    B_inv = inverse(SIN_B)
    _expect(evaluate_family(fam_b, {}) == B_inv, "B(GD1) is not {B^{-1}}")
    _expect(B_inv == Matrix.from_strings(QQ, [["1/2", "1"], ["0", "1/3"]]),
            "B^{-1} disagrees with the printed value")


def fixture_sin_contencion_order():
    rep = gd1_order(SIN_A, SIN_B)
    _expect(rep.holds, "the GD1 order does not hold for the 2x2 pair")
    X = rep.witness
    _expect(SIN_A @ X == SIN_B @ X and X @ SIN_A == X @ SIN_B,
            "the GD1 witness fails the order equalities")
    _expect(not is_gd1(SIN_A, inverse(SIN_B)),
            "B^{-1} unexpectedly belongs to A(GD1)")
    printed = Matrix.from_strings(QQ, [["1/2", "1"], ["0", "0"]])
    _expect(is_gd1(SIN_A, printed), "the printed witness fails is_gd1")


def fixture_non_trivial():
    _expect(matrix_index(NT_A) == 2, "index of A is not 2")
    _expect(matrix_index(NT_B) == 3, "index of B is not 3")
    W = column_space_basis(NT_A ** 2)
    span_P12 = column_space_basis(NT_P.take_columns([0, 1]))
    _expect(W == span_P12, "W_A is not the span of the first two P columns")
    U_cols = nullspace_basis(NT_A ** 2)
    U = U_cols[0]
    for v in U_cols[1:]:
        U = U.hstack(v)
    span_P345 = column_space_basis(NT_P.take_columns([2, 3, 4]))
    _expect(column_space_basis(U) == span_P345,
            "U_A is not the span of the last three P columns")
    diff = NT_B - NT_A
    P_e4 = column_space_basis(NT_P.take_columns([3]))
    _expect(column_space_basis(diff) == P_e4,
            "Im(B - A) is not the line through the fourth P column")
    _expect(is_one_inverse(NT_A, NT_A_MINUS),
            "the printed A^- is not a {1}-inverse of A")
    _expect(NT_A @ NT_A_MINUS == NT_B @ NT_A_MINUS
            and NT_A_MINUS @ NT_A == NT_A_MINUS @ NT_B,
            "the printed A^- does not certify the minus order")
    _expect(minus_order(NT_A, NT_B).holds, "minus order does not hold")
    _expect(gd1_order(NT_A, NT_B).holds, "GD1 order does not hold")
    _expect(one_gd_order(NT_A, NT_B).holds, "1GD order does not hold")


FIXTURES = [
    ("comp-factorization", fixture_comp_factorization),
    ("comp-decomposition", fixture_comp_decomposition),
    ("comp-gd1-family", fixture_comp_gd1_family),
    ("comp-1gd-family", fixture_comp_1gd_family),
    ("comp-gdrazin-restriction", fixture_comp_gdrazin_restriction),
    ("sin-contencion-families", fixture_sin_contencion_families),
    ("sin-contencion-order", fixture_sin_contencion_order),
    ("non-trivial-order-pair", fixture_non_trivial),
]


def run_all():
    """Returns a list of (name, ok, detail) triples."""
    results = []
    for name, fn in FIXTURES:
        try:
            fn()
        except FixtureError as exc:
            results.append((name, False, str(exc)))
        else:
            results.append((name, True, ""))
    return results
