from itertools import permutations, product

import networkx as nx
import pytest

from oracles import invariant_coordinate_sets, triangular_by_permutation

from posalg.core import Mat
from posalg.errors import DomainError
from posalg.idempot import build_example, cycle_permutation, rank_one_idempotent
from posalg.lattice import (CoordSet, band_split, disjoint_complement, frobenius_form, ideal_chain,
                            ideal_triangularizable, is_ideal_reducible, is_invariant, null_ideal, range_ideal)
from posalg.randcheck import CheckConfig, random_check
from posalg.spanalg import is_triangularizable


def ones(n):
    return Mat(n, n, [1] * (n * n))


def test_disjoint_complement():
    assert disjoint_complement(CoordSet.of(3, [])) == CoordSet.full(3)
    assert disjoint_complement(CoordSet.of(4, [1, 3])) == CoordSet.of(4, [2, 4])
    S = CoordSet.of(7, [2, 5])
    assert disjoint_complement(disjoint_complement(S)) == S
    with pytest.raises(ValueError):
        CoordSet.of(3, [4])


def test_null_and_range_ideals_of_ks7():
    E, F = build_example("ks7")
    assert null_ideal(E).to_jsonable() == [1, 3, 5, 7]
    assert range_ideal(F).to_jsonable() == [2, 3, 4, 5]


def test_null_ideal_rejects_negative():
    with pytest.raises(DomainError):
        null_ideal(Mat.from_rows([[1, -1], [0, 1]]))


def test_band_split_identity():
    s = band_split(Mat.identity(4))
    assert s.L3 == CoordSet.full(4)
    assert s.L1.is_empty and s.L2.is_empty and s.L4.is_empty


def test_band_split_rank_one():
    E = rank_one_idempotent([1, 1, 0], [0, 1, 1])
    assert null_ideal(E).to_jsonable() == [1]
    assert range_ideal(E).to_jsonable() == [1, 2]
    s = band_split(E)
    assert [p.to_jsonable() for p in s.parts] == [[], [1], [2], [3]]
    # oracle: direct multiplication of the extracted blocks
    assert s.G @ s.G == s.G and s.X @ s.G == s.X and s.G @ s.Y == s.Y and s.X @ s.Y == s.Z


def test_band_split_ks7():
    for M in build_example("ks7"):
        s = band_split(M)
        assert s.G @ s.G == s.G and s.X @ s.Y == s.Z
        assert sum(len(p) for p in s.parts) == 7


def test_band_split_rejects_non_idempotent():
    with pytest.raises(DomainError):
        band_split(Mat.from_rows([[0, 1], [0, 0]]))


def _block_upper(M, sizes):
    starts, s = [], 0
    for k in sizes:
        starts.append(s)
        s += k
    block_of = [b for b, k in enumerate(sizes) for _ in range(k)]
    n = M.rows
    return all(M[i, j] == 0 for i in range(n) for j in range(n) if block_of[i] > block_of[j])


def test_frobenius_examples():
    f = frobenius_form(cycle_permutation(3))
    assert f.block_sizes == (3,)
    f = frobenius_form(Mat.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]]))
    assert f.block_sizes == (1, 1, 1)
    S = Mat.diag([3, 2, 1]) + Mat.unit(3, 0, 1)
    f = frobenius_form(S)
    assert f.block_sizes == (1, 1, 1)
    assert f.permutation.index(1) < f.permutation.index(2)
    # exhaustive oracle at n = 3: the chosen permutation is among those that triangularize
    good = [p for p in permutations(range(3)) if all(S.permuted(list(p))[i, j] == 0
                                                     for i in range(3) for j in range(i))]
    assert tuple(v - 1 for v in f.permutation) in good


def test_frobenius_properties_exhaustive_n3():
    for pattern in product([0, 1], repeat=9):
        S = Mat(3, 3, pattern)
        f = frobenius_form(S)
        assert _block_upper(f.permuted, f.block_sizes)
        assert len(f.block_sizes) == nx.number_strongly_connected_components(
            nx.DiGraph([(i, j) for i in range(3) for j in range(3) if S[i, j]] + [(i, i) for i in range(3)]))
        for B in f.blocks:
            assert B.rows == 1 or not invariant_coordinate_sets([B], B.rows)
        assert frobenius_form(f.permuted).permutation == tuple(range(1, 4))


def test_ideal_reducibility_examples():
    assert is_ideal_reducible([ones(3)]) is None
    assert is_ideal_reducible([Mat.unit(2, 0, 1)]) == CoordSet.of(2, [1])
    assert is_ideal_reducible([cycle_permutation(3)]) is None
    with pytest.raises(DomainError):
        is_ideal_reducible([Mat.from_rows([[0, -1], [0, 0]])])


def test_ideal_reducible_matches_invariant_set_oracle():
    for pattern in product([0, 1], repeat=9):
        M = Mat(3, 3, pattern)
        found = is_ideal_reducible([M])
        oracle = invariant_coordinate_sets([M], 3)
        assert (found is None) == (not oracle)
        if found is not None:
            assert set(found.zero_based()) in oracle and is_invariant(found, [M])


def test_ideal_triangularizable_examples():
    E, F = build_example("ks7")
    perm = ideal_triangularizable([E, F])
    assert perm is not None
    assert all(is_invariant(S, [E, F]) for S in ideal_chain(perm))
    assert ideal_triangularizable([ones(2)]) is None
    J2 = Mat.from_rows([[0, 1], [0, 0]])
    assert ideal_triangularizable([Mat.diag([1, 2]), J2]) == (1, 2)


def test_ideal_triangularizable_matches_oracle_and_implies_triangularizable():
    for pattern in product([0, 1], repeat=9):
        A = Mat(3, 3, pattern)
        B = Mat.unit(3, 0, 2)
        perm = ideal_triangularizable([A, B])
        assert (perm is not None) == triangular_by_permutation([A, B], 3)
        if perm is not None:
            P = [v - 1 for v in perm]
            for M in (A, B):
                Q = M.permuted(P)
                assert all(Q[i, j] == 0 for i in range(3) for j in range(i))
            assert is_triangularizable([A, B]).passed


def test_lemma_zero_random_search():
    rep = random_check(CheckConfig("lemma_zero_fd", 200, 3, (2, 6)))
    assert rep.passed and rep["failed"] == 0
