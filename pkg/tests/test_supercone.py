from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import extreme_ray_span_dim

from posalg.core import Mat
from posalg.errors import DomainError
from posalg.rng import SplitMix64
from posalg.simplex import Unbounded, maximize
from posalg.supercone import (LEFT, RIGHT, ConeSpan, cone_span, is_upper_triangular_span, lp_max,
                              supercomm_dimension_table, supercomm_spec, verify_lin_eq_alg)


def ones(n):
    return Mat(n, n, [1] * (n * n))


def entry_objective(n, i, j):
    g = [Fraction(0)] * (n * n)
    g[i * n + j] = Fraction(1)
    return g


def test_simplex_small_lp():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6
    res = maximize([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert res.value == Fraction(14, 5)
    assert res.x == [Fraction(8, 5), Fraction(6, 5)]


def test_simplex_unbounded():
    with pytest.raises(Unbounded):
        maximize([1, 0], [[0, 1]], [1])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=4), st.integers(0, 3), st.integers(0, 1),
       st.integers(1, 5))
def test_lp_max_is_zero_or_cap(a, i, j, cap):
    A = Mat(2, 2, a)
    spec = supercomm_spec(A)
    v = lp_max(entry_objective(2, i // 2, j), spec, Fraction(cap))
    assert v in (0, cap)
    assert (v == 0) == (lp_max(entry_objective(2, i // 2, j), spec, Fraction(1)) == 0)


def test_lp_max_examples():
    assert lp_max(entry_objective(2, 0, 0), supercomm_spec(Mat.identity(2))) == 1
    assert lp_max(entry_objective(2, 1, 0), supercomm_spec(Mat.diag([2, 1]))) == 0
    assert lp_max([0] * 4, supercomm_spec(Mat.identity(2))) == 0


def test_spec_membership_examples():
    spec = supercomm_spec(Mat.identity(2))
    assert all(not any(g) for g in spec.constraints[4:])
    ds = supercomm_spec(ones(3))
    assert ds.contains(ones(3).scale(Fraction(1, 3)))
    assert not ds.contains(Mat.unit(3, 0, 1))
    with pytest.raises(DomainError):
        supercomm_spec(Mat.from_rows([[1, -1], [0, 1]]))


def test_spec_membership_matches_direct_evaluation():
    rng = SplitMix64(5)
    for _ in range(50):
        A = Mat(3, 3, [rng.randint(0, 2) for _ in range(9)])
        B = Mat(3, 3, [rng.randint(-1, 2) for _ in range(9)])
        C = A @ B - B @ A
        assert supercomm_spec(A, LEFT).contains(B) == (B.is_nonnegative() and C.is_nonnegative())
        assert supercomm_spec(A, RIGHT).contains(B) == (B.is_nonnegative() and (-C).is_nonnegative())


def test_diag_span_is_upper_triangular():
    span = cone_span(supercomm_spec(Mat.diag([3, 2, 1])))
    assert span.dim == 6 and is_upper_triangular_span(span)
    assert verify_lin_eq_alg(span).passed
    assert cone_span(supercomm_spec(Mat.identity(3))).dim == 9


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_doubly_stochastic_dims(n):
    span = cone_span(supercomm_spec(ones(n)))
    assert span.dim == (n - 1) ** 2 + 1
    assert verify_lin_eq_alg(span).passed


def test_interior_point_is_relative_interior():
    for A in (Mat.diag([3, 2, 1]), ones(3), Mat.from_rows([[1, 1, 0], [0, 1, 0], [1, 0, 2]])):
        spec = supercomm_spec(A)
        span = cone_span(spec)
        vals = spec.values(span.interior_point)
        for k, v in enumerate(vals):
            assert (v == 0) if k in span.implicit_equalities else (v > 0)


def test_right_side_matches_direct_lps():
    A = Mat.from_rows([[1, 1, 0], [0, 2, 1], [0, 0, 1]])
    spec = supercomm_spec(A, RIGHT)
    via_transpose = cone_span(spec)
    direct = []
    for k, g in enumerate(spec.constraints):
        if lp_max(g, spec) == 0:
            direct.append(k)
    assert via_transpose.implicit_equalities == direct
    for k, v in enumerate(spec.values(via_transpose.interior_point)):
        assert (v == 0) == (k in direct)


def test_verify_lin_eq_alg_negative_control():
    span = ConeSpan(2, [], [Mat.unit(2, 0, 1), Mat.unit(2, 1, 0)], Mat.zeros(2))
    rep = verify_lin_eq_alg(span)
    assert not rep.passed
    assert rep["witness"] == [0, 1] and rep["product"] == Mat.unit(2, 0, 0)


def test_dimension_table_permuted_diagonal():
    rng = SplitMix64(12)
    for n in (3, 4):
        A = Mat.diag(list(range(1, n + 1))).permuted(rng.permutation(n))
        rep = supercomm_dimension_table(A)
        assert rep.passed and rep["dim"] == n * (n + 1) // 2 and rep["triangularizable"]
        assert rep["bound_check"] == "pass"


def test_dimension_table_doubly_stochastic():
    rep = supercomm_dimension_table(ones(5))
    assert rep["dim"] == 17 and rep["bound"] == 15
    assert not rep["triangularizable"] and not rep["distinct_eigenvalues"]
    assert rep["bound_check"] == "hypothesis not met"
    assert not supercomm_dimension_table(ones(3))["triangularizable"]


def test_random_distinct_eigenvalue_spans_are_triangularizable():
    rng = SplitMix64(99)
    checked = 0
    while checked < 8:
        n = rng.randint(2, 4)
        A = Mat(n, n, [rng.randint(0, 3) for _ in range(n * n)])
        rep = supercomm_dimension_table(A)
        if rep["distinct_eigenvalues"]:
            assert rep.passed and rep["dim"] <= rep["bound"]
            checked += 1


def test_cone_span_matches_extreme_rays_exhaustively_small_entries():
    for entries in [(0, 0, 0, 0), (1, 0, 0, 2), (1, 1, 1, 1), (0, 1, 0, 0), (2, 1, 0, 1), (0, 1, 1, 0)]:
        spec = supercomm_spec(Mat(2, 2, entries))
        assert cone_span(spec).dim == extreme_ray_span_dim(spec.constraints, 4)
