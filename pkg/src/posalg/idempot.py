"""Positive idempotents: hypothesis checks, identities, and the extremal examples.

Generator order is (E, F) throughout, so word ``(0, 1)`` is ``EF``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Echelon, Mat, entrywise_ge, minimal_poly
from .errors import DomainError, ShapeError
from .lattice import band_split, disjoint_complement, null_ideal, range_ideal, require_nonnegative
from .report import Report
from .spanalg import Word, algebra_closure, evaluate_word, spanning_word_check, word_to_str

NAMES = "EF"

GE, LE, EQ, INCOMPARABLE = "EF>=FE", "EF<=FE", "EF=FE", "incomparable"

E_, F_ = 0, 1
NINE_WORDS: list[Word] = [(), (E_,), (F_,), (E_, F_), (F_, E_), (E_, F_, E_), (F_, E_, F_),
                          (E_, F_, E_, F_), (F_, E_, F_, E_)]
SIX_WORDS: list[Word] = [(), (E_,), (F_,), (E_, F_), (F_, E_), (F_, E_, F_)]
FOUR_WORDS: list[Word] = [(), (E_,), (F_,), (E_, F_)]
BAND_WORDS: list[Word] = [(E_,), (F_,), (E_, F_), (F_, E_), (E_, F_, E_), (F_, E_, F_)]


def order_relation(X: Mat, Y: Mat) -> str:
    """Compare X and Y entrywise: GE if X >= Y, LE if X <= Y, EQ if equal."""
    ge, le = entrywise_ge(X, Y), entrywise_ge(Y, X)
    if ge and le:
        return EQ
    if ge:
        return GE
    if le:
        return LE
    return INCOMPARABLE


@dataclass(frozen=True)
class IdempotentPair:
    E: Mat
    F: Mat
    order: str

    @property
    def n(self) -> int:
        return self.E.rows

    @property
    def comparable(self) -> bool:
        return self.order != INCOMPARABLE


def require_positive_idempotent(E: Mat, name: str = "E") -> None:
    if not E.is_square:
        raise ShapeError(f"{name} must be square, got {E.rows}x{E.cols}")
    require_nonnegative(E, name)
    D = E @ E - E
    for k, x in enumerate(D.entries):
        if x:
            i, j = divmod(k, E.cols)
            raise DomainError(f"{name} is not idempotent: ({name}^2)[{i + 1},{j + 1}] = "
                              f"{(E @ E)[i, j]} but {name}[{i + 1},{j + 1}] = {E[i, j]}")


def validate_pair(E: Mat, F: Mat) -> IdempotentPair:
    if E.shape != F.shape:
        raise ShapeError(f"E is {E.rows}x{E.cols} but F is {F.rows}x{F.cols}")
    require_positive_idempotent(E, "E")
    require_positive_idempotent(F, "F")
    return IdempotentPair(E, F, order_relation(E @ F, F @ E))


def _require_comparable(AE: Mat, EA: Mat, what: str) -> str:
    rel = order_relation(AE, EA)
    if rel == INCOMPARABLE:
        raise DomainError(f"{what}: neither AE >= EA nor AE <= EA holds")
    return rel


def check_one_idem(E: Mat, A: Mat) -> Report:
    """Conclusions (a)-(c) for a positive idempotent E and an operator A comparable with it."""
    require_positive_idempotent(E, "E")
    if A.shape != E.shape:
        raise ShapeError(f"A is {A.rows}x{A.cols} but E is {E.rows}x{E.cols}")
    AE, EA = A @ E, E @ A
    rel = _require_comparable(AE, EA, "check_one_idem")
    EAE = EA @ E
    C = AE - EA
    C2_zero = (C @ C).is_zero()
    strictly_positive = null_ideal(E).is_empty
    full_range = range_ideal(E).is_full
    parts = {
        "a": {"applies": strictly_positive, "holds": AE == EAE and C2_zero},
        "b": {"applies": full_range, "holds": EA == EAE and C2_zero},
        "c": {"applies": strictly_positive and full_range, "holds": AE == EA},
    }
    ok = all(p["holds"] for p in parts.values() if p["applies"])
    return Report("one_idem", ok, {"order": rel.replace("EF", "AE").replace("FE", "EA"),
                                   "null_ideal_trivial": strictly_positive,
                                   "range_ideal_full": full_range, "parts": parts})


def check_key_identity(E: Mat, A: Mat) -> Report:
    """(AE - EA)^2 E = E (AE - EA)^2 = 0, equivalently (EA)^2 E = E A^2 E."""
    require_positive_idempotent(E, "E")
    if A.shape != E.shape:
        raise ShapeError(f"A is {A.rows}x{A.cols} but E is {E.rows}x{E.cols}")
    require_nonnegative(A, "A")
    AE, EA = A @ E, E @ A
    rel = _require_comparable(AE, EA, "check_key_identity")
    C = AE - EA
    C2 = C @ C
    right = (C2 @ E).is_zero()
    left = (E @ C2).is_zero()
    squared = EA @ EA @ E == E @ A @ A @ E
    split = band_split(E)
    return Report("key_identity", right and left and squared,
                  {"order": rel.replace("EF", "AE").replace("FE", "EA"),
                   "commutator_sq_E_zero": right, "E_commutator_sq_zero": left,
                   "EAEAE_eq_EAAE": squared, "band_split": split})


def nine_word_span(pair: IdempotentPair) -> Report:
    if not pair.comparable:
        raise DomainError("nine_word_span needs EF >= FE or EF <= FE")
    E, F = pair.E, pair.F
    gens = [E, F]
    res = spanning_word_check(gens, NINE_WORDS, unital=True, names=NAMES)
    EF, FE = E @ F, F @ E
    id_e = EF @ EF @ E == EF @ E
    id_f = FE @ FE @ F == FE @ F
    dim = res["dim"]
    return Report("nine_word_span", res.passed and dim <= 9 and id_e and id_f,
                  {"order": pair.order, "dim": dim, "word_span_dim": res["word_span_dim"],
                   "spans_algebra": res.passed, "EFEFE_eq_EFE": id_e, "FEFEF_eq_FEF": id_f})


def check_two_idem(pair: IdempotentPair) -> Report:
    """Reduced spanning sets when E has no zero column and/or no zero row."""
    if not pair.comparable:
        raise DomainError("two_idem needs EF >= FE or EF <= FE")
    strictly_positive = null_ideal(pair.E).is_empty
    full_range = range_ideal(pair.E).is_full
    gens = [pair.E, pair.F]
    parts = {}
    i_applies = strictly_positive or full_range
    r6 = spanning_word_check(gens, SIX_WORDS, names=NAMES)
    parts["i"] = {"applies": i_applies, "holds": r6.passed, "words": r6["words"]}
    ii_applies = strictly_positive and full_range
    r4 = spanning_word_check(gens, FOUR_WORDS, names=NAMES)
    parts["ii"] = {"applies": ii_applies, "holds": r4.passed, "words": r4["words"]}
    ok = all(p["holds"] for p in parts.values() if p["applies"])
    return Report("two_idem", ok, {"order": pair.order, "dim": r6["dim"],
                                   "null_ideal_trivial": strictly_positive,
                                   "range_ideal_full": full_range, "parts": parts})


def enumerate_semigroup(generators: Sequence[Mat], limit: int) -> tuple[dict[Mat, Word], bool]:
    """Distinct products of the generators, shortest word first.

    Stops when a word length adds nothing new (stabilized) or when more than
    ``limit`` distinct elements have appeared.
    """
    seen: dict[Mat, Word] = {}
    frontier = []
    for i, g in enumerate(generators):
        if g not in seen:
            seen[g] = (i,)
            frontier.append(g)
    while frontier:
        if len(seen) > limit:
            return seen, False
        nxt = []
        for m in frontier:
            w = seen[m]
            for i, g in enumerate(generators):
                p = m @ g
                if p not in seen:
                    seen[p] = w + (i,)
                    nxt.append(p)
        frontier = nxt
    return seen, True


def band_semigroup(pair: IdempotentPair) -> Report:
    if not pair.comparable:
        raise DomainError("band_semigroup needs EF >= FE or EF <= FE")
    n = pair.n
    limit = max(n * n, len(BAND_WORDS))
    elems, stabilized = enumerate_semigroup([pair.E, pair.F], limit)
    words = [word_to_str(w, NAMES) for w in elems.values()]
    non_idem = next((word_to_str(w, NAMES) for m, w in elems.items() if m @ m != m), None)
    is_band = stabilized and non_idem is None
    values = {"order": pair.order, "band": is_band, "stabilized": stabilized, "size": len(elems),
              "elements": words, "non_idempotent": non_idem}
    if not is_band:
        return Report("band_semigroup", True, values)
    listed = {evaluate_word(w, [pair.E, pair.F]) for w in BAND_WORDS}
    same = listed == set(elems)
    dim = algebra_closure([pair.E, pair.F], unital=True).dim
    values.update({"matches_six_words": same, "distinct_listed": len(listed), "dim": dim})
    return Report("band_semigroup", same and dim <= 7, values)


def quadratic_bound_check(E: Mat, F: Mat) -> Report:
    if E.shape != F.shape or not E.is_square:
        raise ShapeError("E and F must be square of one size")
    for name, M in (("E", E), ("F", F)):
        d = minimal_poly(M).degree
        if d > 2:
            raise DomainError(f"minimal polynomial of {name} has degree {d} > 2")
    n = E.rows
    dim = algebra_closure([E, F], unital=True).dim
    bound = 2 * n if n % 2 == 0 else 2 * n - 1
    return Report("quadratic_bound", dim <= bound,
                  {"n": n, "dim": dim, "bound": bound, "tight": dim == bound})


# ---------------------------------------------------------------------------
# Examples


KS7_E = ((0, 0, 0, 1, 0, 0, 0),
         (0, 1, 0, 0, 0, 0, 0),
         (0, 0, 0, 1, 0, 0, 0),
         (0, 0, 0, 1, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 1, 0),
         (0, 0, 0, 0, 0, 0, 0))

KS7_F = ((0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 1, 0, 0),
         (0, 0, 1, 0, 0, 0, 0),
         (0, 0, 0, 1, 0, 1, 1),
         (0, 0, 0, 0, 1, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0))


def cycle_permutation(k: int) -> Mat:
    """Full-cycle permutation matrix: P e_j = e_{j+1}, P e_k = e_1."""
    return Mat(k, k, [1 if i == (j + 1) % k else 0 for i in range(k) for j in range(k)])


def rank_one_idempotent(u: Sequence, v: Sequence) -> Mat:
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    if len(u) != len(v):
        raise DomainError("u and v must have the same length")
    if any(x < 0 for x in u + v):
        raise DomainError("u and v must be nonnegative")
    s = sum(a * b for a, b in zip(u, v))
    if s <= 0:
        raise DomainError("v^T u must be positive")
    return Mat(len(u), len(u), [a * b / s for a in u for b in v])


def _even(k: int) -> tuple[Mat, Mat]:
    if k == 1:
        return Mat.from_rows([[1, 1], [0, 0]]), Mat.from_rows([[1, 0], [1, 0]])
    I, Z, P = Mat.identity(k), Mat.zeros(k), cycle_permutation(k)
    E = Mat.block([[I, I.scale(2)], [Z, Z]])
    F = Mat.block([[I, Z], [P, Z]])
    return E, F


def _odd(k: int) -> tuple[Mat, Mat]:
    E, F = _even(k)
    one, zero = Mat.identity(1), Mat.zeros(1)
    row, col = Mat.zeros(1, 2 * k), Mat.zeros(2 * k, 1)
    return Mat.block([[one, row], [col, E]]), Mat.block([[zero, row], [col, F]])


EXAMPLE_NAMES = ("ks7", "ks6", "n2", "even", "odd", "rank_one")


def build_example(name: str, k: int | None = None, u: Sequence | None = None, v: Sequence | None = None,
                  u2: Sequence | None = None, v2: Sequence | None = None) -> tuple[Mat, Mat]:
    """Return the pair (E, F) of a named example.

    ``rank_one`` builds E = u v^T / (v^T u) and F from (u2, v2), defaulting to F = E.
    """
    if name == "ks7":
        return Mat.from_rows(KS7_E), Mat.from_rows(KS7_F)
    if name == "ks6":
        E, F = build_example("ks7")
        keep = list(range(6))
        return E.submatrix(keep, keep), F.submatrix(keep, keep)
    if name == "n2":
        return _even(1)
    if name in ("even", "odd"):
        if k is None or k < 1:
            raise DomainError(f"{name} needs k >= 1")
        return _even(k) if name == "even" else _odd(k)
    if name == "rank_one":
        if u is None or v is None:
            raise DomainError("rank_one needs u and v")
        E = rank_one_idempotent(u, v)
        if u2 is None and v2 is None:
            return E, E
        if u2 is None or v2 is None:
            raise DomainError("rank_one needs both u2 and v2 for F")
        F = rank_one_idempotent(u2, v2)
        if F.shape != E.shape:
            raise DomainError("E and F sizes differ")
        return E, F
    raise DomainError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")


def independence_system_check(k: int) -> Report:
    """Linear independence of C^{2j}, C^{2j+1}, C^{2j}E, C^{2j+1}E (j = 1..k), C = E - F."""
    if k < 2:
        raise DomainError("independence_system_check needs k >= 2")
    E, F = _even(k)
    C = E - F
    I, Z, P = Mat.identity(k), Mat.zeros(k), cycle_permutation(k)
    mats, closed_forms = [], True
    power = C @ C  # C^2
    for j in range(1, k + 1):
        Q = (P.scale(-2)) ** j  # (-2P)^j
        c2j = power
        c2j1 = power @ C
        forms = [
            (c2j, Mat.block([[Q, Z], [Z, Q]])),
            (c2j1, Mat.block([[Z, Q.scale(2)], [-(P @ Q), Z]])),
            (c2j @ E, Mat.block([[Q, Q.scale(2)], [Z, Z]])),
            (c2j1 @ E, Mat.block([[Z, Z], [-(P @ Q), Q @ P.scale(-2)]])),
        ]
        for got, want in forms:
            closed_forms &= got == want
            mats.append(got)
        power = power @ C @ C
    ech = Echelon(4 * k * k)
    for m in mats:
        ech.add(m.entries)
    rank = ech.rank
    with_identity = ech.add(Mat.identity(2 * k).entries)
    rank_with_identity = ech.rank
    return Report("independence_system", rank == 4 * k and closed_forms,
                  {"k": k, "n": 2 * k, "count": len(mats), "rank": rank, "closed_forms": closed_forms,
                   "rank_with_identity": rank_with_identity, "identity_independent": with_identity})
