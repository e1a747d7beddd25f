"""Brute-force oracles, deliberately independent of the code they check."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

import sympy


def cofactor_char_poly(rows):
    """Coefficients (lowest first) of det(xI - A) by sympy cofactor expansion."""
    x = sympy.Symbol("x")
    n = len(rows)
    M = sympy.Matrix(n, n, lambda i, j: (x if i == j else 0) - sympy.Rational(str(rows[i][j])))
    p = sympy.Poly(M.det(method="berkowitz") if n > 6 else _laplace(M), x)
    return [Fraction(str(c)) for c in reversed(p.all_coeffs())]


def _laplace(M):
    n = M.shape[0]
    if n == 0:
        return sympy.Integer(1)
    if n == 1:
        return M[0, 0]
    total = 0
    for j in range(n):
        if M[0, j] != 0:
            minor = M.minor_submatrix(0, j)
            total += (-1) ** j * M[0, j] * _laplace(minor)
    return sympy.expand(total)


def discriminant_nonzero(rows) -> bool:
    """Squarefreeness via the resultant of p and p'."""
    x = sympy.Symbol("x")
    coeffs = cofactor_char_poly(rows)
    p = sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(coeffs))
    if sympy.degree(p, x) <= 1:
        return True
    return sympy.resultant(p, sympy.diff(p, x), x) != 0


def rank(vectors) -> int:
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(str(v)) for v in vec] for vec in vectors]).rank()


def extreme_ray_span_dim(constraints, d: int) -> int:
    """Dimension of a pointed polyhedral cone {x : g.x >= 0} by extreme-ray enumeration.

    Every extreme ray is cut out by d - 1 linearly independent tight
    constraints; enumerate all such subsets, take the kernel direction and
    keep whichever sign is feasible.
    """
    G = [[sympy.Rational(str(c)) for c in g] for g in constraints]
    rays = []
    for subset in combinations(range(len(G)), d - 1):
        M = sympy.Matrix([G[k] for k in subset])
        ker = M.nullspace()
        if len(ker) != 1:
            continue
        r = list(ker[0])
        for s in (1, -1):
            cand = [s * v for v in r]
            if all(sum(a * b for a, b in zip(g, cand)) >= 0 for g in G):
                rays.append(cand)
    return rank(rays)


def triangular_by_permutation(mats, n) -> bool:
    """Exhaustive search for a permutation making all matrices upper triangular."""
    for perm in permutations(range(n)):
        if all(M[perm[i], perm[j]] == 0 for M in mats for i in range(n) for j in range(i)):
            return True
    return False


def block_triangular_orders(S, n):
    """All permutations making P^T S P block upper triangular along the given SCC partition."""
    out = []
    for perm in permutations(range(n)):
        out.append(perm)
    return out


def invariant_coordinate_sets(mats, n):
    """All nonempty proper coordinate subsets (0-based) invariant under every matrix."""
    out = []
    for r in range(1, n):
        for S in combinations(range(n), r):
            inside = set(S)
            if all(M[i, j] == 0 for M in mats for j in inside for i in range(n) if i not in inside):
                out.append(inside)
    return out


def is_nilpotent(M, n) -> bool:
    P = M
    for _ in range(n):
        P = P @ M
    return P.is_zero()


def products_nilpotent(span_mats, n) -> bool:
    """Every product of two elements of a subspace basis, and every basis element, is nilpotent."""
    return all(is_nilpotent(a, n) for a in span_mats)


def all_sign_patterns(n):
    return list(product((0, 1), repeat=n * n))
