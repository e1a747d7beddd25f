"""Fixed reproduction suite: every explicit example, recomputed exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .core import Mat
from .idempot import GE, band_semigroup, build_example, independence_system_check, nine_word_span, validate_pair
from .lattice import BandSplitSelfCheckError, band_split, ideal_triangularizable
from .matio import format_rat
from .spanalg import algebra_closure, is_triangularizable
from .supercone import cone_span, is_upper_triangular_span, supercomm_spec, verify_lin_eq_alg

Value = Union[int, bool, Fraction, str]


@dataclass(frozen=True)
class ReproRow:
    claim_id: str
    expected: Value
    computed: Value
    source: str

    @property
    def passed(self) -> bool:
        return type(self.expected) is type(self.computed) and self.expected == self.computed

    def to_dict(self) -> dict:
        def enc(v):
            return format_rat(v) if isinstance(v, Fraction) else v
        return {"claim_id": self.claim_id, "expected": enc(self.expected), "computed": enc(self.computed),
                "pass": self.passed, "source": self.source}


def _dim(name: str, k: int | None = None) -> int:
    E, F = build_example(name, k)
    return algebra_closure([E, F], unital=True).dim


def _ones(n: int) -> Mat:
    return Mat(n, n, [1] * (n * n))


def _band_split_ok(M: Mat) -> bool:
    try:
        band_split(M)
    except BandSplitSelfCheckError:
        return False
    return True


def _claims() -> list[tuple[str, Value, Callable[[], Value], str]]:
    ks7 = lambda: build_example("ks7")  # noqa: E731
    ks6 = lambda: build_example("ks6")  # noqa: E731
    rows = [
        ("ks7_order", GE, lambda: validate_pair(*ks7()).order, 'Example example_KS, "E F >= F E"'),
        ("ks7_nine_word_rank", 9, lambda: nine_word_span(validate_pair(*ks7()))["word_span_dim"],
         "Example example_KS, nine words linearly independent"),
        ("ks7_dim", 9, lambda: _dim("ks7"), "Corollary main_matrix, dimension at most 9 (attained)"),
        ("ks7_identities", True,
         lambda: (lambda r: r["EFEFE_eq_EFE"] and r["FEFEF_eq_FEF"])(nine_word_span(validate_pair(*ks7()))),
         "Theorem main, (EF)^2 E = EFE and (FE)^2 F = FEF"),
        ("ks7_ideal_triangularizable", True, lambda: ideal_triangularizable(list(ks7())) is not None,
         "Example example_KS, ideal-triangularizable pair"),
        ("ks7_triangularizable", True, lambda: is_triangularizable(list(ks7())).passed,
         "Example example_KS, ideal-triangularizable pair"),
        ("ks6_dim", 7, lambda: _dim("ks6"), "band corollary remark, bound 7 attained by the 6x6 truncation"),
        ("ks6_semigroup_size", 6, lambda: band_semigroup(validate_pair(*ks6()))["size"],
         "band corollary, S = {E, F, EF, FE, EFE, FEF}"),
        ("n2_dim", 4, lambda: _dim("n2"), 'Example even, dimension 4 when n = 2'),
    ]
    for k in range(1, 5):
        rows.append((f"even_k{k}_dim", 4 * k, lambda k=k: _dim("even", k),
                     f"Example even, dimension 2n = {4 * k} at n = {2 * k}"))
    for k in range(1, 5):
        rows.append((f"odd_k{k}_dim", 4 * k + 1, lambda k=k: _dim("odd", k),
                     f"odd example, dimension 2n - 1 = {4 * k + 1} at n = {2 * k + 1}"))
    for k in range(2, 5):
        rows.append((f"independence_k{k}_rank", 4 * k, lambda k=k: independence_system_check(k)["rank"],
                     "Example even, C^{2j}, C^{2j+1}, C^{2j}E, C^{2j+1}E independent"))
    for n in range(2, 7):
        A = Mat.diag(list(range(n, 0, -1)))
        rows.append((f"diag_supercone_n{n}", n * (n + 1) // 2,
                     lambda A=A: cone_span(supercomm_spec(A)).dim,
                     "Theorem distinct_diagonal, dimension n(n+1)/2"))
        rows.append((f"diag_supercone_upper_n{n}", True,
                     lambda A=A: is_upper_triangular_span(cone_span(supercomm_spec(A))),
                     "Proposition left-commutant, all upper triangular matrices"))
    for n in range(2, 6):
        rows.append((f"ds_span_n{n}", (n - 1) ** 2 + 1, lambda n=n: cone_span(supercomm_spec(_ones(n))).dim,
                     "doubly stochastic example, dimension (n-1)^2 + 1"))
    for n in range(3, 6):
        rows.append((f"ds_triangularizable_n{n}", False,
                     lambda n=n: is_triangularizable(cone_span(supercomm_spec(_ones(n))).span_basis, n=n).passed,
                     "doubly stochastic example, not triangularizable for n >= 3"))
    rows.append(("ds_lin_eq_alg_n3", True, lambda: verify_lin_eq_alg(cone_span(supercomm_spec(_ones(3)))).passed,
                 "lin of the super left-commutant is an algebra"))
    rows.append(("band_split_ks7_E", True, lambda: _band_split_ok(ks7()[0]), "Theorem key, four-band block form"))
    rows.append(("band_split_ks7_F", True, lambda: _band_split_ok(ks7()[1]), "Theorem key, four-band block form"))
    return rows


def repro_all() -> list[ReproRow]:
    out = []
    for claim_id, expected, compute, source in _claims():
        try:
            computed = compute()
        except Exception as exc:  # a crash is a failed row, not a crashed suite
            computed = f"error: {type(exc).__name__}: {exc}"
        out.append(ReproRow(claim_id, expected, computed, source))
    return out
