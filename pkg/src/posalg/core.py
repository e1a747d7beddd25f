"""Exact rational matrices, polynomials and row reduction.

Scalars are :class:`fractions.Fraction`; nothing in this package ever touches a
float.  Matrices are immutable and vectorize row-major, which fixes the
coordinate order of every span certificate produced downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"cannot use {x!r} as an exact rational")
    return Fraction(x)


class Mat:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_rat(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "Mat":
        m = object.__new__(cls)
        m.rows, m.cols, m.entries, m._hash = rows, cols, entries, None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {ncols}")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        vals = [as_rat(v) for v in values]
        return cls._raw(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Mat":
        """Matrix unit E_ij with 0-based indices."""
        e = [ZERO] * (n * n)
        e[i * n + j] = ONE
        return cls._raw(n, n, tuple(e))

    @classmethod
    def from_vector(cls, vec: Sequence, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, vec)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Mat"]]) -> "Mat":
        heights = [row[0].rows for row in blocks]
        widths = [m.cols for m in blocks[0]]
        out = []
        for bi, row in enumerate(blocks):
            for m, w in zip(row, widths):
                if m.rows != heights[bi] or m.cols != w:
                    raise ShapeError("inconsistent block sizes")
            for r in range(heights[bi]):
                for m in row:
                    out.extend(m.entries[r * m.cols:(r + 1) * m.cols])
        return cls._raw(sum(heights), sum(widths), tuple(out))

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        c = self.cols
        return Mat._raw(len(rows), len(cols), tuple(self.entries[i * c + j] for i in rows for j in cols))

    def permuted(self, perm: Sequence[int]) -> "Mat":
        """Return P^T M P where column k of P is e_{perm[k]} (0-based)."""
        return self.submatrix(perm, perm)

    # -- arithmetic -------------------------------------------------------
    def _check_same(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Mat":
        c = as_rat(c)
        return Mat._raw(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    @property
    def T(self) -> "Mat":
        return Mat._raw(self.cols, self.rows, tuple(self.entries[i * self.cols + j]
                                                   for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), ZERO)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def first_negative(self) -> tuple[int, int] | None:
        for k, x in enumerate(self.entries):
            if x < 0:
                return divmod(k, self.cols)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Mat({self.rows}x{self.cols}: [{body}])"


def mat_mul(A: Mat, B: Mat) -> Mat:
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    cols = [B.entries[j::B.cols] for j in range(B.cols)]
    out = []
    for i in range(A.rows):
        r = A.entries[i * A.cols:(i + 1) * A.cols]
        nz = [(k, a) for k, a in enumerate(r) if a]
        for c in cols:
            s = ZERO
            for k, a in nz:
                b = c[k]
                if b:
                    s += a * b
            out.append(s)
    return Mat._raw(A.rows, B.cols, tuple(out))


def entrywise_ge(A: Mat, B: Mat) -> bool:
    A._check_same(B)
    return all(a >= b for a, b in zip(A.entries, B.entries))


def commutator(A: Mat, B: Mat) -> Mat:
    if not (A.is_square and A.shape == B.shape):
        raise ShapeError(f"commutator needs equal square shapes, got {A.shape} and {B.shape}")
    return A @ B - B @ A


def trace_of_product(A: Mat, B: Mat) -> Fraction:
    """trace(A @ B) without forming the product."""
    n, m = A.rows, A.cols
    if B.rows != m or B.cols != n:
        raise ShapeError("trace_of_product shape mismatch")
    a, b = A.entries, B.entries
    s = ZERO
    for i in range(n):
        for k in range(m):
            x = a[i * m + k]
            if x:
                y = b[k * n + i]
                if y:
                    s += x * y
    return s


# ---------------------------------------------------------------------------
# Row reduction on flat vectors


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace of Q^d.

    Rows are kept fully reduced, so reducing a vector only needs one pass
    over the pivot rows.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = list(vec)
        for p, row in self.rows.items():
            c = v[p]
            if c:
                for k in range(self.dim):
                    if row[k]:
                        v[k] -= c * row[k]
        return v

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert ``vec``; return True iff it enlarged the span."""
        v = self.reduce(vec)
        p = next((k for k, x in enumerate(v) if x), None)
        if p is None:
            return False
        lead = v[p]
        if lead != 1:
            v = [x / lead for x in v]
        for row in self.rows.values():
            c = row[p]
            if c:
                for k in range(p, self.dim):
                    if v[k]:
                        row[k] -= c * v[k]
        self.rows[p] = v
        return True

    def coords(self, vec: Sequence[Fraction]) -> list[Fraction] | None:
        """Coordinates of ``vec`` against :meth:`basis`, or None if outside the span."""
        if any(self.reduce(vec)):
            return None
        return [vec[p] for p in self.pivots()]

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[list[Fraction]]:
        return [list(self.rows[p]) for p in self.pivots()]


def rref_vectors(vectors: Iterable[Sequence]) -> Echelon:
    vectors = list(vectors)
    if not vectors:
        return Echelon(0)
    dim = len(vectors[0])
    ech = Echelon(dim)
    for v in vectors:
        if len(v) != dim:
            raise ShapeError("vectors of different lengths")
        ech.add([as_rat(x) for x in v])
    return ech


@dataclass(frozen=True)
class RrefResult:
    basis: list[Mat]
    rank: int
    coords: list[list[Fraction]]


def rref(vectors: Sequence[Mat]) -> RrefResult:
    """Reduced echelon basis of the span of matrices vectorized row-major.

    ``coords[i]`` expresses ``vectors[i]`` in the returned basis.
    """
    vectors = list(vectors)
    if not vectors:
        return RrefResult([], 0, [])
    r, c = vectors[0].shape
    for v in vectors:
        if v.shape != (r, c):
            raise ShapeError("rref needs matrices of one shape")
    ech = rref_vectors(v.entries for v in vectors)
    basis = [Mat._raw(r, c, tuple(b)) for b in ech.basis()]
    coords = [ech.coords(v.entries) for v in vectors]
    return RrefResult(basis, ech.rank, coords)


def span_rank(vectors: Sequence[Mat]) -> int:
    return rref_vectors(v.entries for v in vectors).rank if vectors else 0


def null_space(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    pivots = set(ech.rows)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for p, row in ech.rows.items():
            if row[f]:
                x[p] = -row[f]
        out.append(x)
    return out


def solve_combination(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Find c with sum_i c_i vectors[i] == target; free coefficients are set to 0."""
    m = len(vectors)
    d = len(target)
    # Rows of the augmented system [v_0 ... v_{m-1} | target], one per coordinate.
    system = Echelon(m + 1)
    for k in range(d):
        system.add([v[k] for v in vectors] + [target[k]])
    if m in system.rows:
        return None
    x = [ZERO] * m
    for p, row in system.rows.items():
        x[p] = row[m]
    return x


# ---------------------------------------------------------------------------
# Polynomials


class Poly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rat(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(as_rat(other) * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [ZERO] * max(len(rem) - dq, 1)
        while len(rem) - 1 >= dq and rem:
            c = rem[-1] / other.lead
            shift = len(rem) - 1 - dq
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return Poly(quot), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(x / self.lead for x in self.coeffs)

    def __call__(self, x):
        if isinstance(x, Mat):
            acc = Mat.zeros(x.rows)
            eye = Mat.identity(x.rows)
            for c in reversed(self.coeffs):
                acc = acc @ x + eye.scale(c)
            return acc
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            body = "" if (mag == 1 and k) else str(mag)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body + var))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _require_square(A: Mat) -> None:
    if not A.is_square:
        raise ShapeError(f"square matrix required, got {A.shape}")


def char_poly(A: Mat) -> Poly:
    """det(xI - A) by the division-free Samuelson-Berkowitz recurrence."""
    _require_square(A)
    n = A.rows
    p = [ONE]  # highest degree first
    for r in range(n):
        a = A[r, r]
        R = [A[r, j] for j in range(r)]
        C = [A[i, r] for i in range(r)]
        t = [ONE, -a]
        v = C
        for _ in range(r):
            t.append(-sum((x * y for x, y in zip(R, v)), ZERO))
            v = [sum((A[i, j] * v[j] for j in range(r) if v[j]), ZERO) for i in range(r)]
        p = [sum((t[i - j] * p[j] for j in range(len(p)) if 0 <= i - j < len(t)), ZERO)
             for i in range(r + 2)]
    return Poly(reversed(p))


def has_distinct_eigenvalues(A: Mat) -> bool:
    p = char_poly(A)
    return poly_gcd(p, p.derivative()).degree == 0


def minimal_poly(A: Mat) -> Poly:
    """Monic minimal polynomial from the first dependence among I, A, A^2, ..."""
    _require_square(A)
    n = A.rows
    powers = [Mat.identity(n).entries]
    current = Mat.identity(n)
    for d in range(1, n + 1):
        current = current @ A
        c = solve_combination(powers, current.entries)
        if c is not None:
            return Poly([-x for x in c] + [ONE])
        powers.append(current.entries)
    raise AssertionError("Cayley-Hamilton violated")  # unreachable for exact input
