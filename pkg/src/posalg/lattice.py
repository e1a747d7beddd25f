"""Coordinate ideals of R^n and the order structure of nonnegative matrices.

Every ideal (and band) of R^n is spanned by a set of standard basis vectors,
so ideals are stored as sets of 1-based coordinates.  Matrices act on column
vectors.  The support digraph has an edge i -> j whenever entry (i, j) is
positive; a coordinate set S is invariant under M exactly when no edge
enters S from outside, i.e. S is closed under taking predecessors.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .core import Mat
from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class CoordSet:
    n: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [m for m in members if not 1 <= m <= self.n]
        if bad:
            raise ValueError(f"coordinates {sorted(bad)} outside 1..{self.n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "CoordSet":
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n: int) -> "CoordSet":
        return cls(n, frozenset(range(1, n + 1)))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __and__(self, other: "CoordSet") -> "CoordSet":
        return CoordSet(self.n, self.members & other.members)

    def __or__(self, other: "CoordSet") -> "CoordSet":
        return CoordSet(self.n, self.members | other.members)

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.n

    def zero_based(self) -> list[int]:
        return [m - 1 for m in sorted(self.members)]

    def to_jsonable(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self) -> str:
        return f"CoordSet(n={self.n}, {sorted(self.members)})"


def require_nonnegative(A: Mat, what: str = "matrix") -> None:
    bad = A.first_negative()
    if bad is not None:
        i, j = bad
        raise DomainError(f"{what} has negative entry {A[i, j]} at ({i + 1},{j + 1})")


def _require_square(A: Mat, what: str = "matrix") -> None:
    if not A.is_square:
        raise ShapeError(f"{what} must be square, got {A.rows}x{A.cols}")


def null_ideal(A: Mat) -> CoordSet:
    """Coordinates j with A e_j = 0 (zero columns)."""
    require_nonnegative(A)
    return CoordSet(A.cols, frozenset(j + 1 for j in range(A.cols) if not any(A.col(j))))


def range_ideal(A: Mat) -> CoordSet:
    """Coordinates i reached by A on the positive cone (nonzero rows)."""
    require_nonnegative(A)
    return CoordSet(A.rows, frozenset(i + 1 for i in range(A.rows) if any(A.row(i))))


def disjoint_complement(S: CoordSet) -> CoordSet:
    return CoordSet(S.n, frozenset(range(1, S.n + 1)) - S.members)


# ---------------------------------------------------------------------------
# Four-band decomposition of a positive idempotent


@dataclass(frozen=True)
class BandSplit:
    L1: CoordSet
    L2: CoordSet
    L3: CoordSet
    L4: CoordSet
    G: Mat
    X: Mat
    Y: Mat
    Z: Mat

    @property
    def parts(self) -> tuple[CoordSet, CoordSet, CoordSet, CoordSet]:
        return (self.L1, self.L2, self.L3, self.L4)

    def blocks(self, M: Mat) -> dict[tuple[int, int], Mat]:
        """The 4x4 block partition of ``M`` with keys (1..4, 1..4)."""
        idx = [p.zero_based() for p in self.parts]
        return {(a + 1, b + 1): M.submatrix(idx[a], idx[b]) for a in range(4) for b in range(4)}

    def to_jsonable(self) -> dict:
        return {"L1": self.L1.to_jsonable(), "L2": self.L2.to_jsonable(),
                "L3": self.L3.to_jsonable(), "L4": self.L4.to_jsonable()}


class BandSplitSelfCheckError(AssertionError):
    """A block identity forced by idempotency failed; indicates a bug."""


def band_split(E: Mat) -> BandSplit:
    """Split coordinates by membership in the null ideal and the range ideal of ``E``.

    L1 = N n R^d, L2 = N n R, L3 = N^d n R, L4 = N^d n R^d.  The block
    identities implied by E^2 = E are verified before returning.
    """
    _require_square(E, "E")
    require_nonnegative(E, "E")
    if E @ E != E:
        raise DomainError("E is not idempotent")
    N, R = null_ideal(E), range_ideal(E)
    Nd, Rd = disjoint_complement(N), disjoint_complement(R)
    L1, L2, L3, L4 = N & Rd, N & R, Nd & R, Nd & Rd
    i1, i2, i3, i4 = (p.zero_based() for p in (L1, L2, L3, L4))
    n = E.rows

    def fail(msg: str):
        raise BandSplitSelfCheckError(f"band split self-check failed: {msg}")

    everything = list(range(n))
    if any(E.submatrix(i1 + i4, everything).entries):
        fail("rows indexed by L1 u L4 are not zero")
    if any(E.submatrix(everything, i1 + i2).entries):
        fail("columns indexed by L1 u L2 are not zero")
    G = E.submatrix(i3, i3)
    X = E.submatrix(i2, i3)
    Y = E.submatrix(i3, i4)
    Z = E.submatrix(i2, i4)
    if G @ G != G:
        fail("G^2 != G")
    if i3 and not null_ideal(G).is_empty:
        fail("N(G) is not trivial")
    if not range_ideal(G).is_full:
        fail("R(G) is not all of L3")
    if X @ G != X:
        fail("XG != X")
    if G @ Y != Y:
        fail("GY != Y")
    if X @ Y != Z:
        fail("Z != XY")
    return BandSplit(L1, L2, L3, L4, G, X, Y, Z)


# ---------------------------------------------------------------------------
# Support digraph, Frobenius normal form, ideal reducibility


def support_digraph(family: Sequence[Mat]) -> nx.DiGraph:
    n = family[0].rows
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    for M in family:
        for i in range(n):
            for j in range(n):
                if i != j and M[i, j] > 0:
                    g.add_edge(i, j)
    return g


def _check_family(family: Sequence[Mat]) -> int:
    family = list(family)
    if not family:
        raise ShapeError("empty family")
    n = family[0].rows
    for k, M in enumerate(family):
        if M.shape != (n, n):
            raise ShapeError(f"family member {k + 1} has shape {M.shape}, expected ({n}, {n})")
        require_nonnegative(M, f"family member {k + 1}")
    return n


@dataclass(frozen=True)
class FrobeniusForm:
    permutation: tuple[int, ...]  # 1-based one-line notation
    block_sizes: tuple[int, ...]
    blocks: tuple[Mat, ...]
    permuted: Mat

    def to_jsonable(self) -> dict:
        from .report import to_jsonable
        return {"permutation": list(self.permutation), "block_sizes": list(self.block_sizes),
                "blocks": to_jsonable(list(self.blocks))}


def _ordered_components(g: nx.DiGraph) -> list[list[int]]:
    """SCCs in topological order (edges point forward); ties go to the smallest index."""
    comps = [sorted(c) for c in nx.strongly_connected_components(g)]
    where = {v: k for k, c in enumerate(comps) for v in c}
    succ: list[set[int]] = [set() for _ in comps]
    indeg = [0] * len(comps)
    for u, v in g.edges:
        a, b = where[u], where[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(comps[k][0], k) for k in range(len(comps)) if indeg[k] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, k = heapq.heappop(heap)
        order.append(comps[k])
        for b in succ[k]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (comps[b][0], b))
    return order


def frobenius_form(S: Mat) -> FrobeniusForm:
    """Permutation making P^T S P block upper triangular with irreducible diagonal blocks."""
    _require_square(S, "S")
    require_nonnegative(S, "S")
    comps = _ordered_components(support_digraph([S]))
    perm = [v for c in comps for v in c]
    permuted = S.permuted(perm)
    blocks, start = [], 0
    for c in comps:
        idx = list(range(start, start + len(c)))
        blocks.append(permuted.submatrix(idx, idx))
        start += len(c)
    return FrobeniusForm(tuple(v + 1 for v in perm), tuple(len(c) for c in comps), tuple(blocks), permuted)


def is_invariant(S: CoordSet, family: Sequence[Mat]) -> bool:
    """Does every member map span{e_j : j in S} into itself?"""
    inside = S.zero_based()
    outside = disjoint_complement(S).zero_based()
    return all(not any(M.submatrix(outside, inside).entries) for M in family)


def is_ideal_reducible(family: Sequence[Mat]) -> CoordSet | None:
    """A nontrivial common invariant coordinate ideal, or None if the family is ideal-irreducible."""
    n = _check_family(family)
    comps = _ordered_components(support_digraph(list(family)))
    if len(comps) < 2:
        return None
    return CoordSet(n, frozenset(v + 1 for v in comps[0]))


def ideal_triangularizable(family: Sequence[Mat]) -> tuple[int, ...] | None:
    """A permutation (1-based, one-line) putting every member in upper triangular form, or None."""
    _check_family(family)
    comps = _ordered_components(support_digraph(list(family)))
    if any(len(c) > 1 for c in comps):
        return None
    return tuple(c[0] + 1 for c in comps)


def ideal_chain(perm: Sequence[int]) -> list[CoordSet]:
    """The chain of invariant coordinate ideals induced by a triangularizing permutation."""
    n = len(perm)
    return [CoordSet(n, frozenset(perm[:k])) for k in range(n + 1)]
