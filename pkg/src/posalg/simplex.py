"""Exact primal simplex with Bland's rule.

Solves ``max c.x  s.t.  A x <= b, x >= 0`` for ``b >= 0``, so the slack basis
is feasible from the start and no phase one is needed.  Bland's lowest-index
rule for both the entering and the leaving variable rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)


class Unbounded(ArithmeticError):
    pass


@dataclass
class SimplexResult:
    value: Fraction
    x: list[Fraction]
    pivots: int


def maximize(c: Sequence[Fraction], A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> SimplexResult:
    m, nv = len(A), len(c)
    if any(x < 0 for x in b):
        raise ValueError("right-hand side must be nonnegative")
    width = nv + m
    rows = []
    for i, a in enumerate(A):
        row = [Fraction(x) for x in a] + [ZERO] * m
        row[nv + i] = Fraction(1)
        rows.append(row)
    rhs = [Fraction(x) for x in b]
    basis = list(range(nv, nv + m))
    # reduced costs: c_j - z_j
    red = [Fraction(x) for x in c] + [ZERO] * m
    value = ZERO
    pivots = 0
    while True:
        enter = next((j for j in range(width) if red[j] > 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded("objective unbounded")
        prow = rows[leave]
        piv = prow[enter]
        if piv != 1:
            prow = [x / piv for x in prow]
            rows[leave] = prow
            rhs[leave] /= piv
        nz = [j for j in range(width) if prow[j]]
        for i in range(m):
            if i == leave:
                continue
            f = rows[i][enter]
            if f:
                r = rows[i]
                for j in nz:
                    r[j] -= f * prow[j]
                rhs[i] -= f * rhs[leave]
        f = red[enter]
        for j in nz:
            red[j] -= f * prow[j]
        value += f * rhs[leave]
        basis[leave] = enter
        pivots += 1
    x = [ZERO] * nv
    for i, v in enumerate(basis):
        if v < nv:
            x[v] = rhs[i]
    return SimplexResult(value, x, pivots)
