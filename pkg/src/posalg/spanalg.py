"""Algebras generated by matrices: word closure, membership, radical, triangularizability.

A word is a tuple of generator indices; the empty word is the identity.
Words evaluate left to right, so ``(0, 1)`` is ``G0 @ G1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Echelon, Mat, null_space, solve_combination, trace_of_product
from .errors import ParseError, ShapeError
from .report import Report

Word = tuple[int, ...]

DEFAULT_NAMES = "ABCDGHKMNQRSTUVWXYZ"


def word_to_str(word: Word, names: Sequence[str] | None = None) -> str:
    if not word:
        return "1"
    names = names or DEFAULT_NAMES
    return "".join(names[i] for i in word)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse ``"EFFE"`` against single-character generator names; ``"1"`` is the identity."""
    text = text.strip()
    if text == "1":
        return ()
    index = {name: i for i, name in enumerate(names)}
    try:
        return tuple(index[ch] for ch in text)
    except KeyError as exc:
        raise ParseError(f"unknown generator {exc.args[0]!r} in word {text!r}") from None


def evaluate_word(word: Word, generators: Sequence[Mat], n: int | None = None) -> Mat:
    if n is None:
        n = generators[0].rows
    out = Mat.identity(n)
    for i in word:
        if not 0 <= i < len(generators):
            raise ShapeError(f"word refers to generator {i} of {len(generators)}")
        out = out @ generators[i]
    return out


def _common_size(generators: Sequence[Mat], n: int | None) -> int:
    sizes = {g.shape for g in generators}
    if n is not None:
        sizes.add((n, n))
    if len(sizes) > 1 or any(r != c for r, c in sizes):
        raise ShapeError(f"generators must be square of one size, got {sorted(sizes)}")
    if not sizes:
        raise ShapeError("matrix size unknown: no generators and no n given")
    return next(iter(sizes))[0]


@dataclass
class AlgebraBasis:
    generators: list[Mat]
    unital: bool
    basis: list[Mat]
    words: list[Word]
    n: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def word_strings(self, names: Sequence[str] | None = None) -> list[str]:
        return [word_to_str(w, names) for w in self.words]


def algebra_closure(generators: Sequence[Mat], unital: bool = True, n: int | None = None) -> AlgebraBasis:
    """Breadth-first word closure of ``generators``.

    Basis elements are processed in insertion order and multiplied on the
    right by each generator in input order; a product is kept only when it
    enlarges the span.  Right multiplication suffices because every word is
    a prefix word times one generator.
    """
    generators = list(generators)
    n = _common_size(generators, n)
    ech = Echelon(n * n)
    basis: list[Mat] = []
    words: list[Word] = []

    def offer(m: Mat, w: Word) -> None:
        if ech.add(m.entries):
            basis.append(m)
            words.append(w)

    if unital:
        offer(Mat.identity(n), ())
    for i, g in enumerate(generators):
        offer(g, (i,))
    k = 0
    while k < len(basis):
        b, w = basis[k], words[k]
        for i, g in enumerate(generators):
            offer(b @ g, w + (i,))
        k += 1
    return AlgebraBasis(generators, unital, basis, words, n)


def membership(M: Mat, alg: AlgebraBasis):
    """Coordinates of ``M`` in ``alg.basis``, or None if ``M`` is outside the span."""
    if M.shape != (alg.n, alg.n):
        raise ShapeError(f"expected {alg.n}x{alg.n}, got {M.shape}")
    if not alg.basis:
        return [] if M.is_zero() else None
    return solve_combination([b.entries for b in alg.basis], M.entries)


def span_contains(vectors: Sequence[Mat], M: Mat) -> bool:
    if not vectors:
        return M.is_zero()
    ech = Echelon(len(M.entries))
    for v in vectors:
        ech.add(v.entries)
    return ech.contains(M.entries)


def trace_radical(alg: AlgebraBasis) -> list[Mat]:
    """Basis of the radical: kernel of the trace form restricted to the algebra."""
    b = alg.basis
    d = len(b)
    gram = [[trace_of_product(b[i], b[j]) for j in range(d)] for i in range(d)]
    out = []
    for c in null_space(gram, d):
        m = Mat.zeros(alg.n)
        for ci, bi in zip(c, b):
            if ci:
                m = m + bi.scale(ci)
        out.append(m)
    return out


def is_triangularizable(generators: Sequence[Mat], n: int | None = None,
                        names: Sequence[str] | None = None) -> Report:
    """Decide simultaneous triangularizability over the algebraic closure.

    In characteristic 0 an algebra is triangularizable iff it is commutative
    modulo its radical, so every commutator of basis elements must lie in the
    radical.
    """
    alg = algebra_closure(generators, unital=True, n=n)
    rad = trace_radical(alg)
    rad_span = Echelon(alg.n * alg.n)
    for r in rad:
        rad_span.add(r.entries)
    witness = None
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            x, y = alg.basis[i], alg.basis[j]
            c = x @ y - y @ x
            if not rad_span.contains(c.entries):
                witness = [word_to_str(alg.words[i], names), word_to_str(alg.words[j], names)]
                break
        if witness:
            break
    return Report("triangularizable", witness is None,
                  {"dim": alg.dim, "radical_dim": len(rad), "n": alg.n, "witness": witness})


def spanning_word_check(generators: Sequence[Mat], words: Sequence[Word], unital: bool = True,
                        names: Sequence[str] | None = None) -> Report:
    """Does the span of the given words equal the algebra the generators produce?"""
    alg = algebra_closure(generators, unital=unital)
    ech = Echelon(alg.n * alg.n)
    for w in words:
        ech.add(evaluate_word(w, generators, alg.n).entries)
    word_rank = ech.rank
    missing = next((k for k, b in enumerate(alg.basis) if not ech.contains(b.entries)), None)
    witness = None if missing is None else word_to_str(alg.words[missing], names)
    return Report("spanning_words", missing is None,
                  {"dim": alg.dim, "word_span_dim": word_rank, "witness": witness,
                   "words": [word_to_str(w, names) for w in words]})
