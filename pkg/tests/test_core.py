from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import cofactor_char_poly, discriminant_nonzero, rank

from posalg.core import (Echelon, Mat, Poly, char_poly, commutator, entrywise_ge, has_distinct_eigenvalues,
                         mat_mul, minimal_poly, null_space, rref, solve_combination, span_rank)
from posalg.errors import ParseError, ShapeError
from posalg.matio import dumps_mat, loads_mat, parse_rat
from posalg.rng import SplitMix64


def square(n_max=4, lo=-3, hi=3):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n).map(lambda e: Mat(n, n, e)))


def sympy_of(M):
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(x.numerator, x.denominator) for x in M.entries])


def test_mat_mul_matches_sympy():
    A = Mat.from_rows([[1, 2, 0], [Fraction(1, 2), 0, -1]])
    B = Mat.from_rows([[3, 0], [1, 1], [0, 2]])
    assert sympy_of(mat_mul(A, B)) == sympy_of(A) * sympy_of(B)


def test_mat_mul_shape_mismatch():
    with pytest.raises(ShapeError):
        mat_mul(Mat.identity(2), Mat.identity(3))


def test_entrywise_ge_and_commutator_examples():
    A = Mat.from_rows([[1, 1], [0, 0]])
    B = Mat.from_rows([[1, 0], [1, 0]])
    assert commutator(A, B) == Mat.from_rows([[1, -1], [-1, -1]])
    assert entrywise_ge(A, Mat.zeros(2))
    assert not entrywise_ge(A, B) and not entrywise_ge(B, A)


def test_permuted_is_similarity():
    A = Mat.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    perm = [2, 0, 1]
    P = Mat(3, 3, [1 if i == perm[j] else 0 for i in range(3) for j in range(3)])
    assert A.permuted(perm) == P.T @ A @ P


@settings(max_examples=60, deadline=None)
@given(square(), st.data())
def test_commutator_antisymmetric_and_traceless(A, data):
    n = A.rows
    B = Mat(n, n, data.draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n)))
    assert commutator(A, B) == -commutator(B, A)
    assert commutator(A, B).trace() == 0


@settings(max_examples=60, deadline=None)
@given(square())
def test_char_poly_matches_cofactor_expansion(A):
    assert list(char_poly(A).coeffs) == cofactor_char_poly(A.tolist())


def test_char_poly_examples():
    assert str(char_poly(Mat.diag([1, 2]))) == "x^2 - 3x + 2"
    assert char_poly(Mat.zeros(3)).coeffs == (0, 0, 0, 1)


def test_distinct_eigenvalues_against_resultant_on_random_matrices():
    rng = SplitMix64(31)
    for _ in range(100):
        n = rng.randint(1, 4)
        A = Mat(n, n, [rng.randint(-2, 2) for _ in range(n * n)])
        assert has_distinct_eigenvalues(A) == discriminant_nonzero(A.tolist())


def test_distinct_eigenvalues_examples():
    assert has_distinct_eigenvalues(Mat.diag([3, 2, 1]))
    assert not has_distinct_eigenvalues(Mat.identity(2))
    # irreducible quadratic x^2 + 1 still has distinct (complex) roots
    assert has_distinct_eigenvalues(Mat.from_rows([[0, -1], [1, 0]]))


@settings(max_examples=60, deadline=None)
@given(square())
def test_minimal_poly_annihilates_and_divides_char_poly(A):
    m = minimal_poly(A)
    assert m(A).is_zero()
    assert (char_poly(A) % m).is_zero()
    assert m.coeffs[-1] == 1


def test_minimal_poly_examples():
    assert minimal_poly(Mat.identity(3)).coeffs == (-1, 1)
    J = Mat.from_rows([[0, 1], [0, 0]])
    assert minimal_poly(J).coeffs == (0, 0, 1)
    E = Mat.from_rows([[1, 1], [0, 0]])
    assert minimal_poly(E).coeffs == (0, -1, 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(square(3), min_size=1, max_size=5))
def test_rref_rank_and_idempotence(mats):
    mats = [m for m in mats if m.shape == mats[0].shape]
    res = rref(mats)
    assert res.rank == rank([m.entries for m in mats])
    again = rref(res.basis)
    assert again.basis == res.basis
    for m, c in zip(mats, res.coords):
        total = Mat.zeros(*m.shape)
        for ci, b in zip(c, res.basis):
            total = total + b.scale(ci)
        assert total == m


def test_null_space_is_kernel():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    ker = null_space(rows, 3)
    assert len(ker) == 2
    assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows for v in ker)


def test_solve_combination():
    vs = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    assert solve_combination(vs, [Fraction(3), Fraction(2)]) == [1, 2]
    assert solve_combination([[Fraction(1), Fraction(1)]], [Fraction(1), Fraction(0)]) is None


def test_echelon_add_reports_growth():
    ech = Echelon(2)
    assert ech.add([Fraction(1), Fraction(1)])
    assert not ech.add([Fraction(2), Fraction(2)])
    assert ech.add([Fraction(0), Fraction(1)])
    assert ech.rank == 2 and span_rank([Mat.identity(2), Mat.identity(2).scale(3)]) == 1


def test_poly_arithmetic():
    p = Poly([-1, 0, 1])
    q, r = divmod(p, Poly([-1, 1]))
    assert q.coeffs == (1, 1) and r.is_zero()
    assert p.derivative().coeffs == (0, 2)
    assert p(3) == 8


def test_json_round_trip():
    M = Mat.from_rows([[1, Fraction(-2, 3)], [0, 5]])
    assert loads_mat(dumps_mat(M)) == M


@pytest.mark.parametrize("text", [
    '{"rows": 1, "cols": 1, "entries": [[1.5]]}',
    '{"rows": 1, "cols": 1, "entries": [[NaN]]}',
    '{"rows": 1, "cols": 1, "entries": [["1e3"]]}',
    '{"rows": 1, "cols": 1, "entries": [["1/0"]]}',
    '{"rows": 1, "cols": 1, "entries": [[true]]}',
    '{"rows": 2, "cols": 2, "entries": [[1, 2], [3]]}',
    '{"rows": 1, "entries": [[1]]}',
    '[1, 2]',
    '{"rows": 1, "cols": 1, "entries": [[1]]',
])
def test_json_rejections(text):
    with pytest.raises(ParseError):
        loads_mat(text)


def test_parse_rat_accepts_strings_and_ints():
    assert parse_rat("-3/6") == Fraction(-1, 2)
    assert parse_rat(4) == 4
    assert parse_rat(" 7 ") == 7
