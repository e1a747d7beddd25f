"""Command-line interface.

Output is one JSON object per line on stdout; ``--pretty`` switches to a
human-readable rendering.  Exit status: 0 when every check passes, 1 when a
mathematical check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .core import Mat
from .errors import PosalgError
from .idempot import (EXAMPLE_NAMES, band_semigroup, build_example, check_key_identity, check_two_idem,
                      nine_word_span, validate_pair)
from .lattice import band_split, frobenius_form, require_nonnegative
from .matio import mat_to_obj, read_mat, write_mat
from .randcheck import THEOREMS, CheckConfig, default_n_range, random_check, trial_budget
from .repro import repro_all
from .report import to_jsonable
from .spanalg import algebra_closure, is_triangularizable
from .supercone import LEFT, RIGHT, cone_span, supercomm_spec, verify_lin_eq_alg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(to_jsonable(obj), separators=(",", ":")) + "\n")


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if set(obj) == {"rows", "cols", "entries"}:
            return "\n".join(pad + " ".join(f"{str(x):>5}" for x in r) for r in obj["entries"])
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if not isinstance(v, str) else v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(x, indent) if isinstance(x, (dict, list)) else f"{pad}- {x}" for x in obj)
    return f"{pad}{obj}"


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _square(M: Mat, source: str) -> Mat:
    if not M.is_square:
        raise UsageError(f"{source}: matrix must be square, got {M.rows}x{M.cols}")
    return M


def _check_names(names: str | None, count: int) -> None:
    if names is not None and len(names) < count:
        raise UsageError(f"--names needs one character per generator ({count}), got {names!r}")


def _load_square(paths: Sequence[str]) -> list[Mat]:
    mats = [_square(read_mat(p), p) for p in paths]
    sizes = {m.rows for m in mats}
    if len(sizes) > 1:
        raise UsageError(f"matrices have different sizes: {sorted(sizes)}")
    return mats


def _load_nonneg(path: str) -> Mat:
    M = _square(read_mat(path), path)
    try:
        require_nonnegative(M, path)
    except PosalgError as exc:
        raise UsageError(str(exc)) from None
    return M


# -- subcommands --------------------------------------------------------------


def cmd_algebra_dim(args, out) -> int:
    mats = _load_square(args.files)
    _check_names(args.names, len(mats))
    alg = algebra_closure(mats, unital=args.unital)
    _emit({"check": "algebra_dim", "pass": True, "dim": alg.dim, "unital": args.unital, "n": alg.n,
           "words": alg.word_strings(args.names)}, out)
    return EXIT_OK


def cmd_triangularizable(args, out) -> int:
    mats = _load_square(args.files)
    _check_names(args.names, len(mats))
    rep = is_triangularizable(mats, names=args.names)
    _emit(rep.to_dict(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_frobenius(args, out) -> int:
    S = _load_nonneg(args.file)
    form = frobenius_form(S)
    _emit({"check": "frobenius", "pass": True, **form.to_jsonable()}, out)
    return EXIT_OK


def cmd_supercone(args, out) -> int:
    path = args.matrix or args.file
    if path is None:
        raise UsageError("supercone: a matrix file is required")
    A = _load_nonneg(path)
    span = cone_span(supercomm_spec(A, args.side))
    closed = verify_lin_eq_alg(span)
    _emit({"check": "supercone", "pass": closed.passed, "side": args.side, **span.to_jsonable()}, out)
    return EXIT_OK if closed.passed else EXIT_FAIL


def cmd_idem_check(args, out) -> int:
    E, F = _load_square([args.file_e, args.file_f])
    pair = validate_pair(E, F)
    if args.what == "nine":
        rep = nine_word_span(pair)
    elif args.what == "band":
        rep = band_semigroup(pair)
    elif args.what == "key":
        rep = check_key_identity(E, F)
    else:
        rep = check_two_idem(pair)
    _emit(rep.to_dict(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_band_split(args, out) -> int:
    E = _square(read_mat(args.file), args.file)
    split = band_split(E)
    _emit({"check": "band_split", "pass": True, **split.to_jsonable(),
           "G": split.G, "X": split.X, "Y": split.Y, "Z": split.Z}, out)
    return EXIT_OK


def _int_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def cmd_build_example(args, out) -> int:
    u = _int_list(args.u) if args.u else None
    v = _int_list(args.v) if args.v else None
    E, F = build_example(args.name, args.k, u, v)
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        stem = args.name if args.k is None else f"{args.name}{args.k}"
        write_mat(E, d / f"{stem}_E.json")
        write_mat(F, d / f"{stem}_F.json")
    _emit({"name": args.name, "k": args.k, "E": mat_to_obj(E), "F": mat_to_obj(F)}, out)
    return EXIT_OK


def cmd_repro(args, out) -> int:
    rows = repro_all()
    ok = all(r.passed for r in rows)
    if args.pretty:
        width = max(len(r.claim_id) for r in rows)
        for r in rows:
            mark = "PASS" if r.passed else "FAIL"
            out.write(f"{mark}  {r.claim_id:<{width}}  expected={r.to_dict()['expected']!s:<8} "
                      f"computed={r.to_dict()['computed']!s:<8} {r.source}\n")
        out.write(f"{sum(r.passed for r in rows)}/{len(rows)} claims reproduced\n")
    else:
        for r in rows:
            _emit(r.to_dict(), out)
        _emit({"check": "repro", "pass": ok, "rows": len(rows), "passed": sum(r.passed for r in rows)}, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_random_check(args, out) -> int:
    n_range = default_n_range(args.theorem)
    if args.n_min is not None or args.n_max is not None:
        n_range = (args.n_min or n_range[0], args.n_max or n_range[1])
    try:
        cfg = CheckConfig(args.theorem, args.trials, args.seed, n_range)
        trial_budget()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = random_check(cfg)
    _emit(rep.to_dict(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output instead of JSON lines")
    p = _Parser(prog="posalg", description="Algebras generated by positive matrices, in exact arithmetic.")
    p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON lines")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("algebra-dim", parents=[common], help="dimension of the algebra generated by matrices")
    s.add_argument("files", nargs="+")
    s.add_argument("--unital", action="store_true")
    s.add_argument("--names", help="one character per generator for word output")
    s.set_defaults(func=cmd_algebra_dim)

    s = sub.add_parser("triangularizable", parents=[common], help="simultaneous triangularizability test")
    s.add_argument("files", nargs="+")
    s.add_argument("--names")
    s.set_defaults(func=cmd_triangularizable)

    s = sub.add_parser("frobenius", parents=[common], help="Frobenius normal form of a nonnegative matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_frobenius)

    s = sub.add_parser("supercone", parents=[common], help="span of the super left/right commutant")
    s.add_argument("file", nargs="?")
    s.add_argument("--matrix")
    s.add_argument("--side", choices=[LEFT, RIGHT], default=LEFT)
    s.set_defaults(func=cmd_supercone)

    s = sub.add_parser("idem-check", parents=[common], help="checks on a pair of positive idempotents")
    s.add_argument("file_e")
    s.add_argument("file_f")
    s.add_argument("--what", choices=["nine", "band", "key", "two-idem"], default="nine")
    s.set_defaults(func=cmd_idem_check)

    s = sub.add_parser("band-split", parents=[common], help="four-band decomposition of a positive idempotent")
    s.add_argument("file")
    s.set_defaults(func=cmd_band_split)

    s = sub.add_parser("build-example", parents=[common], help="emit a named example pair")
    s.add_argument("name", choices=EXAMPLE_NAMES)
    s.add_argument("--k", type=int)
    s.add_argument("--u", help="comma-separated entries of u (rank_one)")
    s.add_argument("--v", help="comma-separated entries of v (rank_one)")
    s.add_argument("--out-dir", help="also write <name>_E.json and <name>_F.json here")
    s.set_defaults(func=cmd_build_example)

    s = sub.add_parser("repro", parents=[common], help="recompute every explicit example")
    s.set_defaults(func=cmd_repro)

    s = sub.add_parser("random-check", parents=[common], help="seeded randomized theorem checks")
    s.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.set_defaults(func=cmd_random_check)
    return p


def cli_dispatch(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.pretty and args.command != "repro":
            buf = _Capture()
            code = args.func(args, buf)
            for line in buf.lines:
                out.write(_pretty(json.loads(line)) + "\n")
            return code
        return args.func(args, out)
    except (UsageError, PosalgError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


class _Capture:
    def __init__(self):
        self.lines: list[str] = []

    def write(self, text: str) -> None:
        self.lines.extend(line for line in text.splitlines() if line)


def main() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    main()
