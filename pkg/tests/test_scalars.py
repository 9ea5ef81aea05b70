import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tft2d.errors import NotHermitian, ScalarFormatError
from tft2d.scalars import (
    I, ONE, ZERO, GaussianRational, GMatrix, SparseEchelon, dense_to_sparse, determinant,
    format_scalar, gr, hermitian_part, inverse, is_positive_definite_hermitian, kernel_basis,
    parse_scalar, rank, realify_form, signature, solve,
)

from oracles import ldl_positive_definite, random_hermitian

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 10**6)
gaussians = st.builds(GaussianRational, fractions, fractions)


def m(rows):
    return GMatrix.from_rows([[gr(x) for x in r] for r in rows])


class TestGaussianRational:
    def test_canonical_form_is_lowest_terms(self):
        z = GaussianRational(Fraction(2, 4), Fraction(-6, -8))
        assert z.re == Fraction(1, 2) and z.re.denominator == 2
        assert z.im == Fraction(3, 4)

    def test_i_squared(self):
        assert I * I == -ONE

    def test_compares_with_int_and_fraction(self):
        assert GaussianRational(3) == 3
        assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
        assert I != 0

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            GaussianRational.coerce(1.5)
        with pytest.raises(TypeError):
            gr(1j)

    @given(gaussians, gaussians, gaussians)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if b != 0:
            assert (a / b) * b == a

    @given(gaussians)
    def test_conjugate_norm(self, z):
        assert z * z.conjugate() == z.norm()
        assert z.conjugate().conjugate() == z

    @given(gaussians, gaussians)
    def test_hash_consistent_with_eq(self, a, b):
        if a == b:
            assert hash(a) == hash(b)


class TestScalarFormat:
    def test_documented_example(self):
        assert parse_scalar("1/2+-1/3*i") == GaussianRational(Fraction(1, 2), Fraction(-1, 3))

    @pytest.mark.parametrize("text", ["1", "-3/4", "0", "1/2+-1/3*i", "0+1*i", "7+2/5*i"])
    def test_canonical_strings_roundtrip(self, text):
        assert format_scalar(parse_scalar(text)) == text

    @pytest.mark.parametrize("text", ["", "1.5", "1 /2", "i", "1+i", "1-2*i", "2/4x", "1/0", "0+1/0*i", "+1"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ScalarFormatError):
            parse_scalar(text)

    def test_non_canonical_input_is_normalised(self):
        assert format_scalar(parse_scalar("2/4+0*i")) == "1/2"

    @given(gaussians)
    def test_print_parse_roundtrip(self, z):
        assert parse_scalar(format_scalar(z)) == z


class TestLinearAlgebra:
    def test_kernel_of_identity_is_empty(self):
        assert kernel_basis(GMatrix.identity(2)) == []

    def test_kernel_of_ones(self):
        assert kernel_basis(m([[1, 1], [1, 1]])) == [(ONE, -ONE)]

    def test_kernel_of_zero_row(self):
        assert kernel_basis(m([[0, 0]])) == [(ONE, ZERO), (ZERO, ONE)]

    def test_determinant_and_inverse(self):
        a = m([[1, 2], [3, 4]])
        assert determinant(a) == -2
        assert a @ inverse(a) == GMatrix.identity(2)

    def test_solve_inconsistent(self):
        assert solve(m([[1, 1], [1, 1]]), (ONE, ZERO)) is None

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**31), st.integers(1, 4), st.integers(1, 4))
    def test_rank_nullity(self, seed, rows, cols):
        rng = random.Random(seed)
        a = m([[rng.choice([0, 0, 1, -1, 2]) for _ in range(cols)] for _ in range(rows)])
        basis = kernel_basis(a)
        for v in basis:
            assert all(x == 0 for x in a.apply(v))
        assert rank(a) + len(basis) == cols

    def test_sparse_echelon_matches_rank(self):
        rng = random.Random(7)
        for _ in range(20):
            rows = [[rng.choice([0, 1, -1, I]) for _ in range(5)] for _ in range(4)]
            ech = SparseEchelon(5)
            for r in rows:
                ech.add(dense_to_sparse([gr(x) for x in r]))
            assert len(ech.pivots()) == rank(m(rows))


class TestDefiniteness:
    def test_identity(self):
        assert is_positive_definite_hermitian(GMatrix.identity(2))

    def test_off_diagonal_plane(self):
        assert not is_positive_definite_hermitian(m([[0, 1], [1, 0]]))

    def test_two_one_one_two(self):
        assert is_positive_definite_hermitian(m([[2, 1], [1, 2]]))

    def test_empty_form_is_positive(self):
        assert is_positive_definite_hermitian(GMatrix.zeros(0, 0))

    def test_degenerate_is_not_positive(self):
        assert not is_positive_definite_hermitian(m([[1, 1], [1, 1]]))

    def test_non_hermitian_rejected(self):
        with pytest.raises(NotHermitian):
            is_positive_definite_hermitian(m([[1, 2], [0, 1]]))

    def test_agrees_with_ldl_oracle(self):
        rng = random.Random(20261018)
        outcomes = set()
        for _ in range(220):
            rows = random_hermitian(rng, rng.randint(1, 6))
            g = GMatrix.from_rows(rows)
            expected = ldl_positive_definite(rows)
            assert is_positive_definite_hermitian(g) == expected
            outcomes.add(expected)
        assert outcomes == {True, False}

    def test_realification_preserves_definiteness(self):
        rng = random.Random(11)
        for _ in range(60):
            g = GMatrix.from_rows(random_hermitian(rng, rng.randint(1, 4)))
            assert is_positive_definite_hermitian(g) == is_positive_definite_hermitian(
                realify_form(g, "hermitian"))


class TestRealify:
    def test_hermitian_scalar(self):
        assert realify_form(m([[2]]), "hermitian") == m([[4, 0], [0, 4]])

    def test_complex_symmetric_scalar(self):
        assert realify_form(m([[1]]), "complex-symmetric") == m([[2, 0], [0, -2]])

    def test_empty(self):
        assert realify_form(GMatrix.zeros(0, 0), "hermitian").shape == (0, 0)

    def test_complex_symmetric_always_split(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(1, 4)
            rows = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    z = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
                    rows[i][j] = rows[j][i] = z
            g = GMatrix.from_rows(rows)
            r = realify_form(g, "complex-symmetric")
            assert not is_positive_definite_hermitian(r)
            pos, neg, zero = signature(r)
            assert pos == neg

    def test_signature_and_hermitian_part(self):
        assert signature(m([[0, I], [-I, 0]])) == (1, 1, 0)
        assert signature(m([[1, 0], [0, 0]])) == (1, 0, 1)
        assert hermitian_part(m([[0, 2], [0, 0]])) == m([[0, 1], [1, 0]])
