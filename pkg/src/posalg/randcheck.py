"""Seeded randomized checks of the theorems' conclusions on hypothesis-satisfying instances."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

from .core import Mat, has_distinct_eigenvalues
from .generate import (comparable_idempotent_pair, distinct_eigenvalue_matrix, positive_commutator_pair,
                       random_nonneg, random_positive_idempotent)
from .idempot import check_key_identity, nine_word_span, order_relation, validate_pair, INCOMPARABLE
from .lattice import band_split, range_ideal
from .report import Report
from .rng import SplitMix64, trial_rng
from .spanalg import is_triangularizable
from .supercone import cone_span, supercomm_spec

DEFAULT_BUDGET = 2000
MAX_N, MAX_N_SUPERCONE = 12, 8


def trial_budget() -> int:
    raw = os.environ.get("POSALG_TRIAL_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"POSALG_TRIAL_BUDGET must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("POSALG_TRIAL_BUDGET must be a positive integer")
    return value


@dataclass(frozen=True)
class CheckConfig:
    theorem: str
    trials: int
    seed: int
    n_range: tuple[int, int]

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}; choose from {', '.join(THEOREMS)}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad n range {self.n_range}")
        cap = MAX_N_SUPERCONE if self.theorem in SUPERCONE_THEOREMS else MAX_N
        if hi > cap:
            raise ValueError(f"n range for {self.theorem} is capped at {cap}, got {hi}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


# Each instance builder returns a dict of named matrices (or None when the
# budget ran out); each checker returns (conclusion holds, extra facts).


def _thm_one_instance(rng, n, budget):
    pair = positive_commutator_pair(rng, n, budget)
    return None if pair is None else {"A": pair[0], "B": pair[1]}


def _thm_one_check(inst):
    A, B = inst["A"], inst["B"]
    assert (A @ B - B @ A).is_nonnegative() and A.is_nonnegative() and B.is_nonnegative()
    rep = is_triangularizable([A, B])
    n = A.rows
    return rep.passed and rep["dim"] <= n * (n + 1) // 2, {"dim": rep["dim"]}


def _thm_finitely_instance(rng, n, budget):
    for _ in range(budget):
        A = distinct_eigenvalue_matrix(rng, n)
        if has_distinct_eigenvalues(A):
            break
    else:
        return None
    span = cone_span(supercomm_spec(A))
    rays = span.maximizers
    inst = {"A": A}
    for i in range(rng.randint(1, 3)):
        B = Mat.zeros(n)
        for r in rays:
            c = rng.below(3) if rng.chance(1, 2) else 0
            if c:
                B = B + r.scale(c)
        if B.is_zero():
            B = rng.choice(rays)
        inst[f"B{i + 1}"] = B
    return inst


def _thm_finitely_check(inst):
    A = inst["A"]
    Bs = [v for k, v in inst.items() if k != "A"]
    assert all((A @ B - B @ A).is_nonnegative() and B.is_nonnegative() for B in Bs)
    rep = is_triangularizable([A] + Bs)
    n = A.rows
    return rep.passed and rep["dim"] <= n * (n + 1) // 2, {"dim": rep["dim"], "k": len(Bs)}


def _thm_main_instance(rng, n, budget):
    pair = comparable_idempotent_pair(rng, n, budget)
    return None if pair is None else {"E": pair[0], "F": pair[1]}


def _thm_main_check(inst):
    rep = nine_word_span(validate_pair(inst["E"], inst["F"]))
    return rep.passed, {"dim": rep["dim"]}


def _thm_key_instance(rng, n, budget):
    for _ in range(budget):
        E = random_positive_idempotent(rng, n)
        kind = rng.below(3)
        if kind == 0:
            A = random_nonneg(rng, n, hi=2, density=(1, 3))
        elif kind == 1:
            pair = comparable_idempotent_pair(rng, n, budget)
            if pair is None:
                return None
            E, A = pair if rng.chance(1, 2) else pair[::-1]
        else:
            zero_cols = [j for j in range(n) if not any(E.col(j))]
            N = Mat(n, n, [rng.below(3) if j in zero_cols else 0 for i in range(n) for j in range(n)])
            A = E + N
        if order_relation(A @ E, E @ A) != INCOMPARABLE:
            return {"E": E, "A": A}
    return None


def _thm_key_check(inst):
    rep = check_key_identity(inst["E"], inst["A"])
    return rep.passed, {"order": rep["order"]}


def _lemma_zero_instance(rng, n, budget):
    A = Mat(n, n, [0 if zero_row else (rng.randint(1, 2) if rng.chance(1, 2) else 0)
                   for zero_row in [rng.chance(1, 3) for _ in range(n)] for _ in range(n)])
    zero_rows = [i for i in range(n) if not any(A.row(i))]
    # B may only use columns indexed by zero rows of A, which forces BA = 0
    B = Mat(n, n, [rng.randint(1, 2) if j in zero_rows and rng.chance(1, 2) else 0
                   for i in range(n) for j in range(n)])
    return {"A": A, "B": B}


def _lemma_zero_check(inst):
    A, B = inst["A"], inst["B"]
    assert (B @ A).is_zero()
    no_zero_rows = range_ideal(A).is_full
    return (not no_zero_rows) or B.is_zero(), {"hypothesis": no_zero_rows}


def _band_split_instance(rng, n, budget):
    return {"E": random_positive_idempotent(rng, n)}


def _band_split_check(inst):
    split = band_split(inst["E"])
    return True, {"sizes": [len(p) for p in split.parts]}


THEOREMS: dict[str, tuple[Callable, Callable, tuple[int, int]]] = {
    "thm_one": (_thm_one_instance, _thm_one_check, (2, 4)),
    "thm_finitely": (_thm_finitely_instance, _thm_finitely_check, (2, 4)),
    "thm_main": (_thm_main_instance, _thm_main_check, (2, 6)),
    "thm_key": (_thm_key_instance, _thm_key_check, (2, 6)),
    "lemma_zero_fd": (_lemma_zero_instance, _lemma_zero_check, (2, 6)),
    "band_split": (_band_split_instance, _band_split_check, (2, 8)),
}


# these build cone_span instances
SUPERCONE_THEOREMS = ("thm_one", "thm_finitely")


def default_n_range(theorem: str) -> tuple[int, int]:
    return THEOREMS[theorem][2]


def random_check(cfg: CheckConfig) -> Report:
    make, check, _ = THEOREMS[cfg.theorem]
    budget = trial_budget()
    lo, hi = cfg.n_range
    passed = failed = exhausted = 0
    counterexample = None
    for t in range(cfg.trials):
        rng: SplitMix64 = trial_rng(cfg.seed, t)
        n = rng.randint(lo, hi)
        inst = make(rng, n, budget)
        if inst is None:
            exhausted += 1
            continue
        try:
            ok, _ = check(inst)
        except AssertionError as exc:
            ok = False
            inst = dict(inst, error=str(exc) or "self-check failed")
        if ok:
            passed += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = {"trial": t, "n": n, **inst}
    status = "ok" if exhausted == 0 else "generation exhausted"
    return Report("random_check", failed == 0,
                  {"theorem": cfg.theorem, "seed": cfg.seed, "n_range": list(cfg.n_range),
                   "trials": cfg.trials, "passed": passed, "failed": failed, "exhausted": exhausted,
                   "status": status, "counterexample": counterexample})
