"""Structured random instances for the property harness.

Every generator draws only from a :class:`~posalg.rng.SplitMix64`, so a seed
fixes the instance stream.  Positive idempotents come from three families:
rank-one ``u v^T / (v^T u)``, 0/1 retractions, and general block forms
``sum_k x_k y_k^T`` whose cores are disjoint, conjugated by a permutation.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Mat
from .idempot import GE, LE, EQ, build_example, order_relation
from .rng import SplitMix64
from .supercone import cone_span, supercomm_spec


def permute(M: Mat, perm: list[int]) -> Mat:
    return M.permuted(perm)


def random_nonneg(rng: SplitMix64, n: int, hi: int = 2, density: tuple[int, int] = (1, 2)) -> Mat:
    return Mat(n, n, [rng.randint(1, hi) if rng.chance(*density) else 0 for _ in range(n * n)])


def rank_one_idempotent(rng: SplitMix64, n: int) -> Mat:
    while True:
        u = [rng.randint(0, 3) if rng.chance(2, 3) else 0 for _ in range(n)]
        v = [rng.randint(0, 3) if rng.chance(2, 3) else 0 for _ in range(n)]
        s = sum(a * b for a, b in zip(u, v))
        if s > 0:
            return Mat(n, n, [Fraction(a * b, s) for a in u for b in v])


def retraction_idempotent(rng: SplitMix64, n: int) -> Mat:
    """0/1 idempotent: each column is zero or e_s for a fixed point s."""
    fixed = [i for i in range(n) if rng.chance(1, 2)] or [rng.below(n)]
    entries = [0] * (n * n)
    for j in range(n):
        if j in fixed:
            entries[j * n + j] = 1
        elif rng.chance(2, 3):
            entries[rng.choice(fixed) * n + j] = 1
    return Mat(n, n, entries)


def block_idempotent(rng: SplitMix64, n: int) -> Mat:
    """General positive idempotent sum_k x_k y_k^T with y_k . x_l = delta_kl.

    Coordinates are dealt into disjoint cores S_k, a row-only set T and a
    column-only set U; x_k lives on S_k u T and y_k on S_k u U.
    """
    labels = [rng.below(4) for _ in range(n)]
    cores: dict[int, list[int]] = {}
    T, U = [], []
    for i, lab in enumerate(labels):
        if lab <= 1:
            cores.setdefault(rng.below(2), []).append(i)
        elif lab == 2:
            T.append(i)
        elif rng.chance(1, 2):
            U.append(i)
    if not cores:
        cores[0] = [rng.below(n)]
        T = [t for t in T if t not in cores[0]]
        U = [u for u in U if u not in cores[0]]
    E = [Fraction(0)] * (n * n)
    for S in cores.values():
        x = [0] * n
        y = [0] * n
        for i in S:
            x[i] = rng.randint(1, 2)
            y[i] = rng.randint(1, 2)
        for t in T:
            if rng.chance(1, 2):
                x[t] = rng.randint(1, 2)
        for u in U:
            if rng.chance(1, 2):
                y[u] = rng.randint(1, 2)
        s = sum(a * b for a, b in zip(x, y))
        for i in range(n):
            if x[i]:
                for j in range(n):
                    if y[j]:
                        E[i * n + j] += Fraction(x[i] * y[j], s)
    return Mat(n, n, E)


FAMILIES = (rank_one_idempotent, retraction_idempotent, block_idempotent)


def random_positive_idempotent(rng: SplitMix64, n: int) -> Mat:
    E = rng.choice(FAMILIES)(rng, n)
    return permute(E, rng.permutation(n))


def _embedded_example_pair(rng: SplitMix64, n: int) -> tuple[Mat, Mat] | None:
    name = "ks7" if n >= 7 else ("ks6" if n >= 6 else None)
    if name is None:
        return None
    E, F = build_example(name)
    m = E.rows
    if n > m:
        pad = n - m
        Z1, Z2 = Mat.zeros(m, pad), Mat.zeros(pad, m)
        E2, F2 = random_commuting_idempotents(rng, pad)
        E = Mat.block([[E, Z1], [Z2, E2]])
        F = Mat.block([[F, Z1], [Z2, F2]])
    perm = rng.permutation(n)
    return permute(E, perm), permute(F, perm)


def random_commuting_idempotents(rng: SplitMix64, n: int) -> tuple[Mat, Mat]:
    """Diagonal 0/1 projections; they always commute."""
    d1 = [rng.below(2) for _ in range(n)]
    d2 = [rng.below(2) for _ in range(n)]
    return Mat.diag(d1), Mat.diag(d2)


def comparable_idempotent_pair(rng: SplitMix64, n: int, budget: int) -> tuple[Mat, Mat] | None:
    """Positive idempotents with EF >= FE, or None once ``budget`` draws are spent.

    A drawn pair with EF <= FE is returned swapped.
    """
    if n >= 6 and rng.chance(1, 5):
        return _embedded_example_pair(rng, n)
    for _ in range(budget):
        E = random_positive_idempotent(rng, n)
        F = random_positive_idempotent(rng, n)
        rel = order_relation(E @ F, F @ E)
        if rel in (GE, EQ):
            return E, F
        if rel == LE:
            return F, E
    return None


def positive_commutator_pair(rng: SplitMix64, n: int, budget: int) -> tuple[Mat, Mat] | None:
    """Nonnegative A, B with AB - BA >= 0."""
    kind = rng.below(5)
    perm = rng.permutation(n)
    if kind == 0:
        # non-increasing diagonal A against upper triangular B
        vals = sorted((rng.randint(0, 4) for _ in range(n)), reverse=True)
        A = Mat.diag(vals)
        B = Mat(n, n, [rng.randint(0, 2) if i <= j else 0 for i in range(n) for j in range(n)])
    elif kind == 1:
        A = random_nonneg(rng, n)
        c = [rng.randint(0, 2) for _ in range(3)]
        B = Mat.identity(n).scale(c[0]) + A.scale(c[1]) + (A @ A).scale(c[2])
    elif kind == 2:
        pair = comparable_idempotent_pair(rng, n, budget)
        if pair is None:
            return None
        A, B = pair
    elif kind == 3:
        # nonnegative combination of points of the super left-commutant cone of A
        A = random_nonneg(rng, n, hi=3, density=(1, 3))
        B = Mat.zeros(n)
        for ray in cone_span(supercomm_spec(A)).maximizers:
            if rng.chance(1, 3):
                B = B + ray.scale(rng.randint(1, 2))
    else:
        for _ in range(budget):
            A = random_nonneg(rng, n, hi=2, density=(1, 3))
            B = random_nonneg(rng, n, hi=2, density=(1, 3))
            if (A @ B - B @ A).is_nonnegative():
                break
        else:
            return None
    if rng.chance(1, 2):
        A, B = B, A
        if not (A @ B - B @ A).is_nonnegative():
            A, B = B, A
    return permute(A, perm), permute(B, perm)


def distinct_eigenvalue_matrix(rng: SplitMix64, n: int) -> Mat:
    """Diagonally dominant nonnegative integer matrix; callers filter for distinct eigenvalues."""
    diag = rng.permutation(n)
    entries = []
    for i in range(n):
        for j in range(n):
            if i == j:
                entries.append(3 * n * (diag[i] + 1))
            else:
                entries.append(rng.randint(1, 2) if rng.chance(1, 3) else 0)
    return Mat(n, n, entries)
