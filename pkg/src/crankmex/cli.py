"""Command-line interface: emit count tables and run verification suites.

Data goes to stdout and is byte-identical across repeated runs with the
same flags; anything that can vary between runs (timings) goes to stderr.
Exit codes: 0 when everything passes, 1 when any check fails or errors,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import identities, partitions
from .verdict import Verdict

__all__ = ["main", "RunReport"]

DEFAULT_MAX_N = 40
DEFAULT_ZMAX = 60
DEFAULT_QMAX = 60
DEFAULT_ZN_MAX = 25
DEFAULT_MAX_M = 8
QMAX_ENV = "CRANKMEX_DEFAULT_QMAX"

SUITES = ("theorem2", "series", "lemma", "crank-gf", "zn", "qbinom", "ramanujan")


@dataclass
class RunReport:
    """One executed check: name, parameters, outcome, and elapsed time.

    The JSON emitted on stdout is stable-ordered and excludes the elapsed
    time, which is reported on stderr instead so repeated runs stay
    byte-identical.
    """

    check: str
    params: dict[str, object]
    status: str  # pass | fail | error
    counterexample: dict[str, object] | None
    elapsed_ms: int

    def json_line(self) -> str:
        payload = {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "counterexample": None
            if self.counterexample is None
            else {k: str(v) for k, v in self.counterexample.items()},
        }
        return json.dumps(payload, separators=(", ", ": "))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crankmex",
        description=(
            "Exact partition-statistic tables (odd mex vs nonnegative crank) "
            "and q-series identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser(
        "tables",
        help="emit the odd-mex and nonneg-crank count tables",
        description=(
            "For each (n, k) with 0 <= k <= n <= max-n, emit the number of "
            "partitions of n with k parts greater than 1 that have odd mex, "
            "and the number that have nonnegative crank.  Counts are decimal "
            "strings; rows are sorted by (n, k)."
        ),
    )
    tables.add_argument("--max-n", type=_positive_int, default=DEFAULT_MAX_N)
    tables.add_argument("--format", choices=("tsv", "json"), default="tsv")

    verify = sub.add_parser(
        "verify",
        help="run a verification suite and emit one JSON report per check",
        description=(
            "Suites: theorem2 (count tables agree), series (generating "
            "functions agree), lemma (Gaussian binomial sum), crank-gf "
            "(crank generating function forms and distribution), zn "
            "(coefficient-wise cancellation checks), qbinom (infinite "
            "product expansion), ramanujan (p(11m+6) divisibility), or all."
        ),
    )
    verify.add_argument("suite", choices=SUITES + ("all",))
    verify.add_argument(
        "--max-n",
        type=_positive_int,
        default=None,
        help="range bound for theorem2/lemma/crank-gf/zn (per-suite defaults)",
    )
    verify.add_argument("--zmax", type=_positive_int, default=None)
    verify.add_argument("--qmax", type=_positive_int, default=None)
    verify.add_argument(
        "--max-m", type=_positive_int, default=None, help="ramanujan range bound"
    )
    return parser


def _default_qmax() -> int:
    raw = os.environ.get(QMAX_ENV)
    if raw is None:
        return DEFAULT_QMAX
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(2)
    if value < 1:
        raise SystemExit(2)
    return value


@dataclass
class _Bounds:
    max_n: int | None
    zmax: int
    qmax: int
    max_m: int
    zn_max: int
    dist_max: int


def _resolve_bounds(args: argparse.Namespace) -> _Bounds:
    qmax = args.qmax if args.qmax is not None else _default_qmax()
    zmax = args.zmax if args.zmax is not None else DEFAULT_ZMAX
    max_n = args.max_n
    zn_max = max_n if max_n is not None else DEFAULT_ZN_MAX
    dist_max = min(max_n if max_n is not None else DEFAULT_MAX_N, qmax)
    return _Bounds(
        max_n=max_n,
        zmax=zmax,
        qmax=qmax,
        max_m=args.max_m if args.max_m is not None else DEFAULT_MAX_M,
        zn_max=zn_max,
        dist_max=dist_max,
    )


def _suite_theorem2(b: _Bounds) -> list:
    return [lambda: partitions.verify_theorem2(b.max_n or DEFAULT_MAX_N)]


def _suite_series(b: _Bounds) -> list:
    return [
        lambda: identities.verify_M_equals_K(b.zmax, b.qmax),
        lambda: identities.verify_cleared_form(b.zmax, b.qmax),
    ]


def _suite_lemma(b: _Bounds) -> list:
    return [lambda: identities.verify_lemma(b.max_n or DEFAULT_MAX_N)]


def _suite_crank_gf(b: _Bounds) -> list:
    return [
        lambda: identities.verify_crank_gf_forms(b.qmax),
        lambda: identities.verify_crank_q1_slice(b.qmax),
        lambda: identities.verify_crank_distribution(2, max(2, b.dist_max), b.qmax),
    ]


def _suite_zn(b: _Bounds) -> list:
    return [lambda: identities.verify_zn(b.zn_max)]


def _suite_qbinom(b: _Bounds) -> list:
    return [
        (lambda t=t: identities.qbinomial_expansion(t, b.zmax, b.qmax))
        for t in (1, 2, 5)
    ]


def _suite_ramanujan(b: _Bounds) -> list:
    return [
        lambda: partitions.verify_ramanujan(b.max_m),
        lambda: partitions.verify_pentagonal(30),
    ]


_RUNNERS = {
    "theorem2": _suite_theorem2,
    "series": _suite_series,
    "lemma": _suite_lemma,
    "crank-gf": _suite_crank_gf,
    "zn": _suite_zn,
    "qbinom": _suite_qbinom,
    "ramanujan": _suite_ramanujan,
}


def _run_suite(name: str, bounds: _Bounds) -> list[RunReport]:
    reports = []
    for thunk in _RUNNERS[name](bounds):
        start = time.perf_counter()
        try:
            v = thunk()
        except Exception as exc:  # surface misuse as an error report, exit 1
            elapsed = int((time.perf_counter() - start) * 1000)
            reports.append(
                RunReport(
                    check=name,
                    params={},
                    status="error",
                    counterexample={"exception": f"{type(exc).__name__}: {exc}"},
                    elapsed_ms=elapsed,
                )
            )
            continue
        elapsed = int((time.perf_counter() - start) * 1000)
        reports.append(
            RunReport(
                check=v.name,
                params=v.params,
                status=v.status,
                counterexample=v.counterexample,
                elapsed_ms=elapsed,
            )
        )
    return reports


def cmd_tables(max_n: int, fmt: str, out=None) -> int:
    out = out or sys.stdout
    mex_table, crank_table = partitions.count_tables_both(max_n)
    if fmt == "tsv":
        out.write("n\tk\todd_mex_count\tnonneg_crank_count\n")
        for n in range(max_n + 1):
            for k in range(n + 1):
                out.write(
                    f"{n}\t{k}\t{mex_table.entries[n][k]}\t{crank_table.entries[n][k]}\n"
                )
    else:
        rows = [
            {
                "n": n,
                "k": k,
                "odd_mex_count": str(mex_table.entries[n][k]),
                "nonneg_crank_count": str(crank_table.entries[n][k]),
            }
            for n in range(max_n + 1)
            for k in range(n + 1)
        ]
        out.write(json.dumps(rows, indent=1))
        out.write("\n")
    return 0


def cmd_verify(suite: str, bounds: _Bounds, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    names = list(SUITES) if suite == "all" else [suite]
    all_ok = True
    for name in names:
        for report in _run_suite(name, bounds):
            out.write(report.json_line())
            out.write("\n")
            err.write(f"{report.check}: {report.status} ({report.elapsed_ms} ms)\n")
            if report.status != "pass":
                all_ok = False
    return 0 if all_ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "tables":
        return cmd_tables(args.max_n, args.format)
    bounds = _resolve_bounds(args)
    return cmd_verify(args.suite, bounds)


if __name__ == "__main__":
    sys.exit(main())
