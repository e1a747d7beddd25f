"""Super left-/right-commutants as polyhedral cones and their linear spans.

For a nonnegative A the super left-commutant is the cone of matrices B with
B >= 0 and AB - BA >= 0 entrywise; the right one flips the commutator sign.
Both are described by 2n^2 homogeneous functionals on row-major vectorized
matrices.  The span of the cone is recovered by finding its implicit
equalities, one exact LP per constraint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import ONE, ZERO, Echelon, Mat, has_distinct_eigenvalues, null_space
from .errors import ShapeError
from .lattice import require_nonnegative
from .report import Report
from .simplex import maximize
from .spanalg import is_triangularizable

LEFT, RIGHT = "left", "right"

Functional = tuple


@dataclass(frozen=True)
class ConeSpec:
    """Cone {x : g.x >= 0 for every g in constraints} on n x n matrices.

    Constraints 0..n^2-1 are entry nonnegativity, n^2..2n^2-1 are the signed
    commutator entries, both indexed row-major by (i, j).
    """

    n: int
    constraints: tuple[Functional, ...]
    A: Mat | None = None
    side: str = LEFT

    def contains(self, B: Mat) -> bool:
        v = B.entries
        return all(sum((g[k] * v[k] for k in range(len(v)) if g[k]), ZERO) >= 0 for g in self.constraints)

    def values(self, B: Mat) -> list[Fraction]:
        v = B.entries
        return [sum((g[k] * v[k] for k in range(len(v)) if g[k]), ZERO) for g in self.constraints]


def commutator_functional(A: Mat, i: int, j: int, sign: int = 1) -> Functional:
    """Coefficients of B -> sign * (AB - BA)_{ij} on the row-major vector of B."""
    n = A.rows
    g = [ZERO] * (n * n)
    for k in range(n):
        a = A[i, k]
        if a:
            g[k * n + j] += a  # (AB)_{ij} = sum_k A_ik B_kj
        a = A[k, j]
        if a:
            g[i * n + k] -= a  # (BA)_{ij} = sum_k B_ik A_kj
    if sign < 0:
        g = [-x for x in g]
    return tuple(g)


def supercomm_spec(A: Mat, side: str = LEFT) -> ConeSpec:
    if not A.is_square:
        raise ShapeError(f"A must be square, got {A.rows}x{A.cols}")
    require_nonnegative(A, "A")
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = A.rows
    cons = []
    for k in range(n * n):
        g = [ZERO] * (n * n)
        g[k] = ONE
        cons.append(tuple(g))
    sign = 1 if side == LEFT else -1
    for i in range(n):
        for j in range(n):
            cons.append(commutator_functional(A, i, j, sign))
    return ConeSpec(n, tuple(cons), A, side)


def _unit_index(g: Functional) -> int | None:
    nz = [k for k, x in enumerate(g) if x]
    if len(nz) == 1 and g[nz[0]] > 0:
        return nz[0]
    return None


def lp_argmax(objective: Sequence, spec: ConeSpec, cap=ONE) -> tuple[Fraction, list[Fraction]]:
    """Maximize ``objective`` over the cone intersected with {objective <= cap}.

    Returns the optimum and a maximizer.  By homogeneity the optimum is 0 or
    ``cap``.  Variables with an explicit nonnegativity constraint are kept as
    they are; any others are split into positive and negative parts.
    """
    cap = Fraction(cap)
    if cap <= 0:
        raise ValueError("cap must be positive")
    d = spec.n * spec.n
    obj = [Fraction(x) for x in objective]
    if len(obj) != d:
        raise ShapeError(f"objective has {len(obj)} coefficients, expected {d}")
    if not any(obj):
        return ZERO, [ZERO] * d
    signed = set()
    rest = []
    for g in spec.constraints:
        u = _unit_index(g)
        if u is None:
            rest.append(g)
        else:
            signed.add(u)
    free = [k for k in range(d) if k not in signed]
    # column layout: x_0..x_{d-1}, then the negative parts of free variables
    def expand(g):
        return list(g) + [-g[k] for k in free]
    A = [[-x for x in expand(g)] for g in rest]
    A.append(expand(obj))
    b = [ZERO] * len(rest) + [cap]
    res = maximize(expand(obj), A, b)
    x = res.x[:d]
    for t, k in enumerate(free):
        x[k] -= res.x[d + t]
    return res.value, x


def lp_max(objective: Sequence, spec: ConeSpec, cap=ONE) -> Fraction:
    return lp_argmax(objective, spec, cap)[0]


@dataclass
class ConeSpan:
    n: int
    implicit_equalities: list[int]
    span_basis: list[Mat]
    interior_point: Mat
    maximizers: list[Mat] = field(default_factory=list)
    side: str = LEFT

    @property
    def dim(self) -> int:
        return len(self.span_basis)

    def to_jsonable(self) -> dict:
        from .report import to_jsonable
        return {"dim": self.dim, "implicit_equalities": self.implicit_equalities,
                "basis": to_jsonable(self.span_basis), "interior_point": to_jsonable(self.interior_point)}


def _span_from_equalities(n: int, equalities: Sequence[Functional]) -> list[Mat]:
    return [Mat(n, n, v) for v in null_space(equalities, n * n)]


def cone_span(spec: ConeSpec) -> ConeSpan:
    """Implicit equalities, span and a relative-interior point of the cone."""
    if spec.side == RIGHT and spec.A is not None:
        return _right_via_transpose(spec)
    n = spec.n
    implicit, maximizers = [], []
    for k, g in enumerate(spec.constraints):
        value, x = lp_argmax(g, spec, ONE)
        if value == 0:
            implicit.append(k)
        else:
            maximizers.append(Mat(n, n, x))
    interior = Mat.zeros(n)
    for m in maximizers:
        interior = interior + m
    basis = _span_from_equalities(n, [spec.constraints[k] for k in implicit])
    return ConeSpan(n, implicit, basis, interior, maximizers, spec.side)


def _transpose_index(k: int, n: int) -> int:
    block, r = divmod(k, n * n)
    i, j = divmod(r, n)
    return block * n * n + j * n + i


def _right_via_transpose(spec: ConeSpec) -> ConeSpan:
    # B is in the right cone of A iff B^T is in the left cone of A^T.
    n = spec.n
    left = cone_span(supercomm_spec(spec.A.T, LEFT))
    implicit = sorted(_transpose_index(k, n) for k in left.implicit_equalities)
    basis = _span_from_equalities(n, [spec.constraints[k] for k in implicit])
    return ConeSpan(n, implicit, basis, left.interior_point.T,
                    [m.T for m in left.maximizers], RIGHT)


def verify_lin_eq_alg(span: ConeSpan) -> Report:
    """Is the span closed under multiplication?"""
    ech = Echelon(span.n * span.n)
    for b in span.span_basis:
        ech.add(b.entries)
    basis = span.span_basis
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            p = x @ y
            if not ech.contains(p.entries):
                return Report("lin_eq_alg", False, {"dim": span.dim, "witness": [i, j], "product": p})
    return Report("lin_eq_alg", True, {"dim": span.dim, "witness": None})


def supercomm_dimension_table(A: Mat, side: str = LEFT) -> Report:
    span = cone_span(supercomm_spec(A, side))
    n = A.rows
    distinct = has_distinct_eigenvalues(A)
    tri = is_triangularizable(span.span_basis, n=n)
    bound = n * (n + 1) // 2
    if distinct:
        ok = span.dim <= bound and tri.passed
        bound_check = "pass" if ok else "fail"
    else:
        ok = True
        bound_check = "hypothesis not met"
    return Report("supercone_dimension", ok,
                  {"n": n, "side": side, "dim": span.dim, "distinct_eigenvalues": distinct,
                   "triangularizable": tri.passed, "bound": bound, "bound_check": bound_check,
                   "radical_dim": tri["radical_dim"]})


def is_upper_triangular_span(span: ConeSpan) -> bool:
    """Does the span equal the algebra of all upper triangular matrices?"""
    n = span.n
    if span.dim != n * (n + 1) // 2:
        return False
    ech = Echelon(n * n)
    for b in span.span_basis:
        ech.add(b.entries)
    return all(ech.contains(Mat.unit(n, i, j).entries) for i in range(n) for j in range(i, n))

