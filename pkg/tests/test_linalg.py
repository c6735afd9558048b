import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bihom.linalg import (
    InconsistentSystemError,
    LinAlgError,
    Matrix,
    SingularMatrixError,
    as_rational,
    inverse,
    kernel_basis,
    mat_mul,
    rank,
    rational_from_json,
    rational_to_json,
    solve,
    try_solve,
    vec_is_zero,
)

Q = Fraction

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def mat(rows):
    return Matrix.from_rows(rows)


def small_matrix(rng, rows, cols, span=3):
    return mat([[Q(rng.randint(-span, span), rng.choice((1, 2)))
                 for _ in range(cols)] for _ in range(rows)])


class TestMatMul:
    def test_identity_absorbs(self):
        m = mat([[1, Q(1, 2)], [3, -2]])
        assert mat_mul(Matrix.identity(2), m) == m
        assert mat_mul(m, Matrix.identity(2)) == m

    def test_inverse_scalars(self):
        assert mat_mul(mat([[Q(1, 2)]]), mat([[2]])) == mat([[1]])

    def test_matches_triple_sum_oracle(self):
        rng = random.Random(7)
        for _ in range(10):
            a = small_matrix(rng, 3, 3)
            b = small_matrix(rng, 3, 3)
            product = mat_mul(a, b)
            for i in range(3):
                for j in range(3):
                    expected = sum((a.entries[i][k] * b.entries[k][j]
                                    for k in range(3)), Q(0))
                    assert product.entries[i][j] == expected

    def test_dimension_mismatch(self):
        with pytest.raises(LinAlgError):
            mat_mul(mat([[1, 2]]), mat([[1, 2]]))


class TestKernel:
    def test_zero_matrix_full_kernel(self):
        basis = kernel_basis(Matrix.zeros(2, 3))
        assert len(basis) == 3

    def test_identity_trivial_kernel(self):
        assert kernel_basis(Matrix.identity(3)) == []

    def test_rank_one_plane(self):
        basis = kernel_basis(mat([[1, 1], [2, 2]]))
        assert len(basis) == 1
        v = basis[0]
        # proportional to (1, -1)
        assert v[0] == -v[1] != 0

    def test_kernel_vectors_annihilated_and_independent(self):
        rng = random.Random(11)
        for _ in range(20):
            m = small_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            basis = kernel_basis(m)
            for v in basis:
                assert vec_is_zero(m.apply(v))
            if basis:
                stacked = Matrix.from_rows(list(zip(*basis)))
                assert rank(stacked) == len(basis)

    @given(st.lists(st.lists(rationals, min_size=3, max_size=3),
                    min_size=1, max_size=4))
    def test_rank_nullity(self, rows):
        m = mat(rows)
        assert rank(m) + len(kernel_basis(m)) == m.cols


class TestInverseSolve:
    def test_inverse_of_diagonal(self):
        assert inverse(Matrix.diagonal([2, 3])) == Matrix.diagonal([Q(1, 2), Q(1, 3)])

    def test_rank_of_zero(self):
        assert rank(Matrix.zeros(3, 3)) == 0

    def test_inverse_two_sided(self):
        rng = random.Random(23)
        for _ in range(10):
            m = small_matrix(rng, 3, 3)
            if rank(m) < 3:
                continue
            minv = inverse(m)
            assert mat_mul(minv, m) == Matrix.identity(3)
            assert mat_mul(m, minv) == Matrix.identity(3)

    def test_singular_inverse_raises(self):
        with pytest.raises(SingularMatrixError):
            inverse(mat([[1, 1], [2, 2]]))
        with pytest.raises(LinAlgError):
            inverse(Matrix.zeros(2, 3))

    def test_solve_exact_residual(self):
        rng = random.Random(31)
        done = 0
        while done < 10:
            m = small_matrix(rng, 3, 3)
            if rank(m) < 3:
                continue
            rhs = tuple(Q(rng.randint(-4, 4)) for _ in range(3))
            x = solve(m, rhs)
            assert m.apply(x) == rhs
            done += 1

    def test_solve_inconsistent(self):
        with pytest.raises(InconsistentSystemError):
            solve(mat([[1, 1], [1, 1]]), (Q(0), Q(1)))
        assert try_solve(mat([[1, 1], [1, 1]]), (Q(0), Q(1))) is None

    def test_solve_underdetermined_returns_particular(self):
        m = mat([[1, 1]])
        x = solve(m, (Q(3),))
        assert m.apply(x) == (Q(3),)


class TestExactArithmetic:
    @given(rationals, rationals, rationals)
    def test_field_identities(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    def test_power_and_kron(self):
        m = mat([[1, 1], [0, 1]])
        assert m.power(0) == Matrix.identity(2)
        assert m.power(3) == mat([[1, 3], [0, 1]])
        assert m.power(-1) == mat([[1, -1], [0, 1]])
        a = mat([[1, 2], [3, 4]])
        b = mat([[0, 1], [1, 0]])
        k = a.kron(b)
        assert k.rows == k.cols == 4
        # (A kron B)[(i,j),(k,l)] = A[i][k] * B[j][l]
        for i in range(2):
            for j in range(2):
                for kk in range(2):
                    for ll in range(2):
                        assert k.entries[2 * i + j][2 * kk + ll] == \
                            a.entries[i][kk] * b.entries[j][ll]


class TestRationalJson:
    def test_round_trip(self):
        for q in (Q(0), Q(5), Q(-7), Q(1, 2), Q(-3, 4)):
            assert rational_from_json(rational_to_json(q)) == q

    def test_integer_encoding(self):
        assert rational_to_json(Q(4, 2)) == 2
        assert rational_to_json(Q(-3, 2)) == "-3/2"

    def test_string_parsing(self):
        assert rational_from_json("2/4") == Q(1, 2)
        assert rational_from_json("-7") == Q(-7)

    def test_rejects_garbage(self):
        for bad in ("1.5", "a/b", "1/2/3", 1.5, None, True):
            with pytest.raises(ValueError):
                rational_from_json(bad)

    def test_as_rational_rejects_floats(self):
        with pytest.raises(ValueError):
            as_rational(0.5)
