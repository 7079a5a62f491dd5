"""The ``ybh`` command line.

Exit status: 0 when every asserted check passed, 1 when one failed,
2 for usage errors and the degree guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .differentials import METHODS, differential
from .homology import (
    CohomologyMismatch,
    HomologyGroup,
    check_chain_condition,
    cohomology,
    conjecture_report,
    groups_to_csv,
    homology,
)
from .laurent import LaurentPoly, pretty, serialize
from .linalg import RingMatrix, compose, dumps, load, snf
from .ybcore import all_checks, r_matrix

DEGREE_GUARD = 14
FORMAT_ENV = "YBH_FORMAT"
FORMATS = ("text", "json", "csv", "matrix")
ALLOWED_FORMATS = {
    "verify": ("text", "json"),
    "diff": ("text", "json", "csv", "matrix"),
    "homology": ("text", "json", "csv"),
    "cohomology": ("text", "json", "csv"),
    "conjecture": ("text", "json", "csv"),
    "snf": ("text", "json", "matrix"),
}
# degrees where the prediction is asserted; later rows are informational
ASSERTED_CONJECTURE = (2, 3)


class UsageError(Exception):
    pass


def corrupted_r() -> RingMatrix:
    """R with one entry perturbed; used as a negative control by ``verify``."""
    dense = r_matrix().to_dense()
    dense[1][2] = LaurentPoly.const(2)
    return RingMatrix.from_dense(dense)


# -- checks ---------------------------------------------------------------------------

def _methods(name: str) -> Tuple[str, ...]:
    return METHODS if name == "all" else (name,)


def _random_snf_check(rng: random.Random, trials: int = 20) -> bool:
    for _ in range(trials):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        entries = {
            (i, j): LaurentPoly.from_terms({rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(2)})
            for i in range(rows)
            for j in range(cols)
            if rng.random() < 0.7
        }
        a = RingMatrix.from_entries(rows, cols, entries)
        res = snf(a)
        if compose(compose(res.u, a), res.v) != res.diagonal_matrix():
            return False
    return True


def run_verify(max_n: int, r: Optional[RingMatrix] = None, seed: int = 0) -> List[Tuple[str, bool]]:
    results = list(all_checks(r))
    for n in range(1, max_n + 1):
        results.append((f"d_{n} o d_{n + 1} = 0", check_chain_condition(n)))
    for n in range(1, max_n + 1):
        mats = [differential(n, m) for m in METHODS]
        results.append((f"d_{n}: skein = curtain = psi", all(m == mats[0] for m in mats[1:])))
    results.append((f"SNF soundness on random matrices (seed {seed})", _random_snf_check(random.Random(seed))))
    return results


# -- rendering ----------------------------------------------------------------------------

def _render_checks(results: List[Tuple[str, bool]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{"check": name, "pass": ok} for name, ok in results], indent=2) + "\n"
    return "".join(f"{'PASS' if ok else 'FAIL'}  {name}\n" for name, ok in results)


def _render_matrix(n: int, method: str, m: RingMatrix, fmt: str) -> str:
    if fmt == "matrix":
        return dumps(m)
    if fmt == "json":
        entries = [[i, j, serialize(v)] for i, j, v in m.entries()]
        return json.dumps({"n": n, "method": method, "rows": m.rows, "cols": m.cols, "entries": entries}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col", "value"])
        w.writerows([i, j, serialize(v)] for i, j, v in m.entries())
        return buf.getvalue()
    head = f"d_{n} ({method}): {m.rows}x{m.cols}, {m.nnz()} nonzero entries\n"
    if m.cols <= 16:
        return head + str(m) + "\n"
    return head + "".join(f"  [{i},{j}] {pretty(v)}\n" for i, j, v in m.entries())


def _render_groups(groups: List[HomologyGroup], fmt: str, symbol: str, agree: Optional[Dict[int, bool]] = None) -> str:
    if fmt == "json":
        recs = [g.to_dict(agree.get(g.degree) if agree else None) for g in groups]
        return json.dumps(recs, indent=2) + "\n"
    if fmt == "csv":
        return groups_to_csv(groups)
    return "".join(f"{symbol}({g.degree}) = {g}\n" for g in groups)


def _render_conjecture(rows, fmt: str) -> str:
    recs = []
    for r in rows:
        recs.append(
            {
                "n": r.degree,
                "a_n": r.prediction.a,
                "s_n_minus_2": r.prediction.s,
                "predicted": r.prediction.predicted.to_dict(),
                "computed": r.computed.to_dict(),
                "agree": r.agree,
                "asserted": r.degree in ASSERTED_CONJECTURE,
                "dimension_identity": r.dimension_ok,
            }
        )
    if fmt == "json":
        return json.dumps(recs, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "a_n", "s_n_minus_2", "computed_free_rank", "computed_torsion", "agree", "asserted", "dimension_identity"])
        for r, rec in zip(rows, recs):
            w.writerow([r.degree, rec["a_n"], rec["s_n_minus_2"], r.computed.free_rank, ";".join(rec["computed"]["torsion"]),
                        rec["agree"], rec["asserted"], rec["dimension_identity"]])
        return buf.getvalue()
    lines = []
    for r in rows:
        tag = "asserted" if r.degree in ASSERTED_CONJECTURE else "informational"
        lines.append(
            f"n={r.degree}  a_n={r.prediction.a}  s_(n-2)={r.prediction.s}  "
            f"agree={r.agree} ({tag})  dimension identity={'ok' if r.dimension_ok else 'BROKEN'}\n"
            f"    predicted: {r.prediction.predicted}\n"
            f"    computed:  {r.computed}\n"
        )
    return "".join(lines)


# -- commands ----------------------------------------------------------------------------

def _same_over_methods(fn: Callable, methods: Sequence[str]):
    values = [fn(m) for m in methods]
    if any(v != values[0] for v in values[1:]):
        raise RuntimeError(f"methods {methods} disagree")
    return values[0]


def cmd_verify(args) -> Tuple[str, int]:
    r = corrupted_r() if args.corrupt_r else None
    results = run_verify(args.max_n if args.max_n is not None else 6, r, args.seed)
    failed = any(not ok for _, ok in results)
    return _render_checks(results, args.format), int(failed)


def cmd_diff(args) -> Tuple[str, int]:
    n = _need(args.n, "--n")
    if args.method == "all":
        mats = {m: differential(n, m) for m in METHODS}
        same = all(mats[m] == mats["skein"] for m in METHODS)
        if args.format == "text":
            verdict = "agree" if same else "DISAGREE"
            return _render_matrix(n, "skein", mats["skein"], "text") + f"methods {', '.join(METHODS)} {verdict}\n", int(not same)
        return _render_matrix(n, "skein", mats["skein"], args.format), int(not same)
    return _render_matrix(n, args.method, differential(n, args.method), args.format), 0


def cmd_homology(args) -> Tuple[str, int]:
    top = _need(args.max_n, "--max-n")
    methods = _methods(args.method)
    groups = [_same_over_methods(lambda m: homology(n, m), methods) for n in range(1, top + 1)]
    agree = {}
    if top >= 2:
        agree = {row.degree: row.agree for row in conjecture_report(top, min_n=2, method=methods[0])}
    return _render_groups(groups, args.format, "H", agree), 0


def cmd_cohomology(args) -> Tuple[str, int]:
    top = _need(args.max_n, "--max-n")
    methods = _methods(args.method)
    try:
        groups = [_same_over_methods(lambda m: cohomology(n, m), methods) for n in range(1, top + 1)]
    except CohomologyMismatch as exc:
        return f"error: {exc}\n", 1
    return _render_groups(groups, args.format, "H^"), 0


def cmd_conjecture(args) -> Tuple[str, int]:
    top = _need(args.max_n, "--max-n")
    if top < 2:
        raise UsageError("conjecture needs --max-n >= 2")
    rows = conjecture_report(top, method=_methods(args.method)[0])
    failed = any(not r.dimension_ok for r in rows) or any(not r.agree for r in rows if r.degree in ASSERTED_CONJECTURE)
    return _render_conjecture(rows, args.format), int(failed)


def cmd_snf(args) -> Tuple[str, int]:
    if args.input:
        with open(args.input) as fh:
            a = load(fh)
        label = args.input
    else:
        n = _need(args.n, "--n")
        a = differential(n, _methods(args.method)[0])
        label = f"d_{n}"
    res = snf(a, transforms=args.transforms or args.format == "matrix", strategy=args.strategy)
    if args.format == "matrix":
        return dumps(res.diagonal_matrix()), 0
    if args.format == "json":
        out = {
            "matrix": label,
            "shape": list(a.shape),
            "rank": res.rank,
            "unit_factors": res.unit_count,
            "torsion": [serialize(t) for t in res.torsion],
        }
        return json.dumps(out) + "\n", 0
    text = f"{label}: {a.rows}x{a.cols}, rank {res.rank}, {res.unit_count} unit factors\n"
    text += "".join(f"  {pretty(t)}\n" for t in res.torsion)
    return text, 0


COMMANDS = {
    "verify": cmd_verify,
    "diff": cmd_diff,
    "homology": cmd_homology,
    "cohomology": cmd_cohomology,
    "conjecture": cmd_conjecture,
    "snf": cmd_snf,
}


def _need(value: Optional[int], flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# -- argument parsing ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="single degree")
    common.add_argument("--max-n", type=int, help="highest degree")
    common.add_argument("--method", choices=METHODS + ("all",), default="skein")
    common.add_argument("--format", choices=FORMATS, default=None, help=f"output format (default: ${FORMAT_ENV} or text)")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--allow-large", action="store_true", help=f"lift the degree guard of {DEGREE_GUARD}")

    parser = argparse.ArgumentParser(prog="ybh", description="Yang-Baxter homology of the normalized Jones R-matrix.")
    parser.add_argument("--version", action="version", version=f"ybh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run every identity check")
    v.add_argument("--corrupt-r", action="store_true", help=argparse.SUPPRESS)
    sub.add_parser("diff", parents=[common], help="dump the differential d_n")
    sub.add_parser("homology", parents=[common], help="H_1 .. H_max")
    sub.add_parser("cohomology", parents=[common], help="H^1 .. H^max")
    sub.add_parser("conjecture", parents=[common], help="predicted vs computed homology")
    s = sub.add_parser("snf", parents=[common], help="Smith normal form of d_n or of a matrix file")
    s.add_argument("--input", help="matrix in the text format")
    s.add_argument("--transforms", action="store_true", help="also compute u, v")
    s.add_argument("--strategy", choices=("min_norm", "first"), default="min_norm")
    return parser


def _check_config(args) -> None:
    if args.format is None:
        args.format = os.environ.get(FORMAT_ENV, "text")
    if args.format not in ALLOWED_FORMATS[args.command]:
        raise UsageError(f"format {args.format!r} is not available for {args.command}; use one of {ALLOWED_FORMATS[args.command]}")
    for flag, value in (("--n", args.n), ("--max-n", args.max_n)):
        if value is None:
            continue
        if value < 1:
            raise UsageError(f"{flag} must be at least 1")
        if value > DEGREE_GUARD:
            if not args.allow_large:
                raise UsageError(f"{flag} {value} exceeds the degree guard {DEGREE_GUARD}; pass --allow-large to override")
            print(f"warning: {flag} {value} is beyond the degree guard; this may take very long", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_config(args)
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ybh {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
