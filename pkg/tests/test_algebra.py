import itertools
import random

import pytest
from hypothesis import given, strategies as st

from tgrs.algebra import (
    Matrix,
    Poly,
    elementary_symmetric,
    elementary_symmetric_all,
    mat_mul,
    mat_transpose,
    monomial,
    null_space,
    poly_derivative,
    poly_eval,
    poly_from_roots,
    rank,
    row_span_contains,
    rref,
    same_row_span,
    span_contains,
)
from tgrs.errors import DimensionMismatch, IndexOutOfRange, SpecMismatch
from tgrs.gf import field_make

F5 = field_make(5)
F7 = field_make(7)


def P(field, *coeffs):
    return Poly(field, coeffs)


def sigma_by_subsets(field, S, l):
    """Reference value: sum over all l-subsets of the product."""
    total = 0
    for combo in itertools.combinations(S, l):
        prod = 1
        for a in combo:
            prod = field.mul(prod, a)
        total = field.add(total, prod)
    return total


class TestPoly:
    def test_eval_examples(self):
        assert poly_eval(Poly(F5, ()), 3) == 0
        assert poly_eval(P(F5, 1, 0, 1), 2) == 0
        assert poly_eval(P(F5, 0, 1, 0, 3), 2) == 1

    def test_eval_field_mismatch(self):
        with pytest.raises(SpecMismatch):
            poly_eval(P(F5, 1, 1), field_make(7)(2))

    def test_normalization(self):
        f = P(F5, 1, 2, 0, 0)
        assert f.coeffs == (1, 2)
        assert f.degree == 1
        assert P(F5, 0, 0).is_zero and P(F5, 0, 0).degree < 0

    def test_derivative(self):
        assert poly_derivative(P(F5, 3)).is_zero
        assert poly_derivative(P(F5, 4, 0, 0, 0, 1)).coeffs == (0, 0, 0, 4)
        F2 = field_make(2)
        assert poly_derivative(P(F2, 0, 0, 1)).is_zero

    def test_from_roots(self):
        assert poly_from_roots(F5, []).coeffs == (1,)
        assert poly_from_roots(F5, [1, 2, 3, 4]).coeffs == (4, 0, 0, 0, 1)
        assert poly_from_roots(F7, [2, 3]).coeffs == (6, 2, 1)

    def test_arithmetic(self):
        f, g = P(F7, 1, 2), P(F7, 3, 0, 1)
        h = f * g
        for x in F7.elements():
            assert h(x) == F7.mul(f(x), g(x))
            assert (f + g)(x) == F7.add(f(x), g(x))
        assert monomial(F7, 3, 2).coeffs == (0, 0, 0, 2)

    def test_format(self):
        assert P(F5, 4, 0, 1).format() == "x^2 + 4"

    @pytest.mark.parametrize("pm", [(2, 3), (5, 1), (3, 2), (7, 1)])
    def test_roots_exactly(self, pm):
        F = field_make(*pm)
        rng = random.Random(pm[0] * 10 + pm[1])
        for _ in range(20):
            S = rng.sample(range(F.q), rng.randint(0, F.q))
            f = poly_from_roots(F, S)
            assert f.degree == len(S) or (not S and f.coeffs == (1,))
            for a in F.elements():
                assert (f(a) == 0) == (a in S)


class TestSymmetric:
    def test_examples(self):
        assert elementary_symmetric(F5, [2, 3], 0) == 1
        assert elementary_symmetric(F5, [], 0) == 1
        assert elementary_symmetric(F5, [2, 3], 1) == 0
        assert elementary_symmetric(F5, [2, 3], 2) == 1
        assert elementary_symmetric(F7, [1, 2, 3], 2) == 4

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            elementary_symmetric(F5, [1, 2], 3)
        with pytest.raises(IndexOutOfRange):
            elementary_symmetric(F5, [1, 2], -1)

    @pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)])
    @given(data=st.data())
    def test_vieta_matches_subsets(self, pm, data):
        F = field_make(*pm)
        S = data.draw(st.lists(st.integers(0, F.q - 1), max_size=8))
        sig = elementary_symmetric_all(F, S)
        assert len(sig) == len(S) + 1
        for l in range(len(S) + 1):
            assert sig[l] == sigma_by_subsets(F, S, l)


def random_matrix(F, rng, r, c, rank_hint=None):
    if rank_hint is None:
        return Matrix(F, [[rng.randrange(F.q) for _ in range(c)] for _ in range(r)])
    A = Matrix(F, [[rng.randrange(F.q) for _ in range(rank_hint)] for _ in range(r)])
    B = Matrix(F, [[rng.randrange(F.q) for _ in range(c)] for _ in range(rank_hint)])
    return A @ B


class TestMatrix:
    def test_rref_examples(self):
        I = Matrix.identity(F5, 3)
        R, r, piv = rref(I)
        assert R == I and r == 3 and piv == [0, 1, 2]
        Z = Matrix.zeros(F5, 2, 3)
        R, r, piv = rref(Z)
        assert R == Z and r == 0 and piv == []
        R, r, _ = rref(Matrix(F5, [[1, 2], [2, 4]]))
        assert R.tolist() == [[1, 2], [0, 0]] and r == 1

    def test_null_space_examples(self):
        assert null_space(Matrix(F5, [[1, 2], [3, 4]])).nrows == 0
        assert null_space(Matrix(F5, [[1, 2]])).tolist() == [[3, 1]]
        assert null_space(Matrix.zeros(F5, 1, 3)) == Matrix.identity(F5, 3)

    def test_mul_examples(self):
        M = Matrix(F5, [[1, 2], [3, 4]])
        assert (M @ Matrix(F5, [[1], [1]])).tolist() == [[3], [2]]
        assert M @ Matrix.identity(F5, 2) == M
        assert mat_transpose(M).tolist() == [[1, 3], [2, 4]]
        assert row_span_contains(M, (0, 0))

    def test_errors(self):
        M = Matrix(F5, [[1, 2], [3, 4]])
        with pytest.raises(DimensionMismatch):
            mat_mul(M, Matrix(F5, [[1, 2, 3]]))
        with pytest.raises(SpecMismatch):
            mat_mul(M, Matrix(F7, [[1], [1]]))
        with pytest.raises(DimensionMismatch):
            Matrix(F5, [[1, 2], [3]])
        with pytest.raises(DimensionMismatch):
            row_span_contains(M, (1, 2, 3))

    @pytest.mark.parametrize("pm", [(2, 1), (5, 1), (2, 3)])
    @given(seed=st.integers(0, 2**32), r=st.integers(1, 6), c=st.integers(1, 7), hint=st.integers(0, 6))
    def test_null_space_properties(self, pm, seed, r, c, hint):
        F = field_make(*pm)
        rng = random.Random(seed)
        M = random_matrix(F, rng, r, c, rank_hint=hint or None)
        N = null_space(M)
        assert rank(M) + N.nrows == c
        if N.nrows:
            assert mat_mul(M, N.T).is_zero()
            assert rank(N) == N.nrows

    @pytest.mark.parametrize("pm", [(3, 1), (2, 2), (7, 1)])
    @given(seed=st.integers(0, 2**32), r=st.integers(1, 6), c=st.integers(1, 6))
    def test_rref_idempotent(self, pm, seed, r, c):
        F = field_make(*pm)
        M = random_matrix(F, random.Random(seed), r, c)
        R, rk, piv = rref(M)
        R2, rk2, piv2 = rref(R)
        assert R2 == R and rk2 == rk and piv2 == piv
        assert same_row_span(M, R)

    @given(seed=st.integers(0, 2**32))
    def test_span_relations(self, seed):
        F = field_make(2, 3)
        rng = random.Random(seed)
        A = random_matrix(F, rng, 4, 6)
        C = Matrix(F, [[rng.randrange(F.q) for _ in range(4)] for _ in range(3)])
        B = C @ A  # rows of B are combinations of rows of A
        assert span_contains(A, B)
        for row in B.rows:
            assert row_span_contains(A, row)
        assert same_row_span(A, A.stack(B))
