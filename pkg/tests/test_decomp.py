import pytest

from geninv import (GF, QI, QQ, GeninvError, Lcg, Matrix, ShapeError,
                    core_nilpotent, fitting_decomposition, matrix_index,
                    matrix_convention_index, nilpotent_jordan_chains,
                    nullspace_basis, rank)
from geninv.fixtures import COMP_A, NT_A
from support import FIELDS, random_structured


def test_index_examples():
    I3 = Matrix.identity(QQ, 3)
    assert matrix_index(I3) == 0
    assert matrix_convention_index(I3) == 1
    J3 = Matrix.from_ints(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert matrix_index(J3) == 3
    assert matrix_index(NT_A) == 2
    assert matrix_index(Matrix(QQ, [], 0)) == 0
    with pytest.raises(ShapeError):
        matrix_index(Matrix.from_ints(QQ, [[1, 2]]))


def test_fitting_examples():
    fd = fitting_decomposition(COMP_A)
    assert fd.index == 3
    assert fd.r == 2
    assert fd.chain_lengths == [3]
    # nilpotent input: W trivial, C is 0x0
    N = Matrix.from_ints(QQ, [[0, 0], [1, 0]])
    fd = fitting_decomposition(N)
    assert fd.r == 0 and fd.C.nrows == 0
    assert fd.basis_U.ncols == 2
    # invertible input: U trivial, no chains
    fd = fitting_decomposition(Matrix.from_ints(QQ, [[1, 1], [0, 1]]))
    assert fd.r == 2 and fd.chains == ()


def test_fitting_invariants_random():
    rng = Lcg(99)
    for field in FIELDS:
        for n in (2, 3, 4):
            for _ in range(8):
                A = random_structured(field, n, rng)
                fd = fitting_decomposition(A)
                m = fd.index
                assert rank(A ** m) == rank(A ** (m + 1))
                if m > 0:
                    assert rank(A ** (m - 1)) > rank(A ** m)
                assert fd.P_inv @ A @ fd.P == fd.J
                assert A @ fd.basis_W == fd.basis_W @ fd.C
                assert rank(fd.C) == fd.r
                assert rank(fd.basis_W.hstack(fd.basis_U)) == n
                # chain lengths sorted ascending
                assert fd.chain_lengths == sorted(fd.chain_lengths)
                for ch in fd.chains:
                    L = ch.length
                    assert (A ** L @ ch.generator).is_zero()
                    assert not (A ** (L - 1) @ ch.generator).is_zero()


def test_core_nilpotent():
    N = Matrix.from_ints(QQ, [[0, 0], [1, 0]])
    cn = core_nilpotent(N)
    assert cn.A1.is_zero() and cn.A2 == N
    V = Matrix.from_ints(QQ, [[2, 1], [1, 1]])
    cn = core_nilpotent(V)
    assert cn.A1 == V and cn.A2.is_zero()
    fd = fitting_decomposition(COMP_A)
    cn = core_nilpotent(COMP_A, fd)
    assert rank(cn.A1) == 2 and rank(cn.A2) == 2
    rng = Lcg(7)
    for field in FIELDS:
        for _ in range(6):
            A = random_structured(field, 4, rng)
            cn = core_nilpotent(A)
            Z = Matrix.zeros(field, 4, 4)
            assert cn.A1 + cn.A2 == A
            assert cn.A1 @ cn.A2 == Z and cn.A2 @ cn.A1 == Z
            assert (cn.A2 ** 4).is_zero()
            assert rank(cn.A1) == rank(cn.A1 @ cn.A1)


def test_jordan_chain_examples():
    Z = Matrix.zeros(QQ, 3, 3)
    chains = nilpotent_jordan_chains(Z)
    assert sorted(ch.length for ch in chains) == [1, 1, 1]
    J3 = Matrix.from_ints(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    chains = nilpotent_jordan_chains(J3)
    assert [ch.length for ch in chains] == [3]
    N = Matrix.from_ints(GF(2), [[0, 0], [1, 0]])
    chains = nilpotent_jordan_chains(N)
    assert len(chains) == 1 and chains[0].length == 2
    assert chains[0].generator == Matrix.from_ints(GF(2), [[1], [0]])
    with pytest.raises(GeninvError):
        nilpotent_jordan_chains(Matrix.identity(QQ, 2))


def test_chain_multiset_matches_rank_profile():
    rng = Lcg(123)
    for field in FIELDS:
        for n in (2, 3, 4, 5):
            for _ in range(6):
                # random similarity of a random nilpotent Jordan type
                A = random_structured(field, n, rng)
                fd = fitting_decomposition(A)
                Nmat = fd.P_inv @ A @ fd.P
                Nmat = Matrix(field,
                              [row[fd.r:] for row in Nmat.rows[fd.r:]],
                              n - fd.r)
                chains = nilpotent_jordan_chains(Nmat)
                lengths = [ch.length for ch in chains]
                for i in range(1, n - fd.r + 1):
                    expected = rank(Nmat ** (i - 1)) - rank(Nmat ** i)
                    assert sum(1 for L in lengths if L >= i) == expected


def test_chain_tails_span_kernel():
    rng = Lcg(321)
    for field in (QQ, GF(2), GF(3)):
        for _ in range(10):
            A = random_structured(field, 4, rng)
            fd = fitting_decomposition(A)
            tails = [ch.vectors[-1] for ch in fd.chains]
            kern = nullspace_basis(A)
            if not tails:
                assert not kern
                continue
            T = tails[0]
            for v in tails[1:]:
                T = T.hstack(v)
            assert rank(T) == len(tails) == len(kern)
            for v in kern:
                assert rank(T.hstack(v)) == len(tails)
