"""Command line entry point.

    lozenge count --n 6 --method dp --format csv
    lozenge verify --max-n 15 --suites table,formulas
    lozenge polyedges --k 4 --class fixed-forbidden
    lozenge formulas --max-n 15

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
errors.  Data goes to stdout (or --out), progress to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from . import closedforms, counting, polyedges, reference
from .closedforms import FormulaId
from .counting import CountVector
from .geometry import matchstick_number, tri_number

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
SUITES = ("table", "formulas", "conjectures", "polyedges", "identities")
MAX_VERIFY_N = 15
BRUTE_GUARD_ENV = "LOZENGE_BRUTE_GUARD"


class UsageError(ValueError):
    pass


# --- serialization --------------------------------------------------------

def to_csv(v: CountVector) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "l", "count"])
    for l, c in enumerate(v.trimmed()):
        writer.writerow([v.n, l, str(c)])
    return buf.getvalue()


def from_csv(text: str) -> CountVector:
    rows = list(csv.DictReader(io.StringIO(text)))
    ns = {int(r["n"]) for r in rows}
    if len(ns) != 1:
        raise ValueError(f"expected rows for a single n, got {sorted(ns)}")
    counts = {int(r["l"]): int(r["count"]) for r in rows}
    return CountVector(ns.pop(), tuple(counts.get(l, 0) for l in range(max(counts) + 1)))


def to_json(v: CountVector) -> str:
    return json.dumps({"n": v.n, "counts": [str(c) for c in v.trimmed()]}) + "\n"


def from_json(text: str) -> CountVector:
    data = json.loads(text)
    return CountVector(int(data["n"]), tuple(int(c) for c in data["counts"]))


def to_plain(v: CountVector) -> str:
    return "".join(f"L({v.n},{l}) = {c}\n" for l, c in enumerate(v.trimmed()))


FORMATS = {"csv": to_csv, "json": to_json, "plain": to_plain}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- count ----------------------------------------------------------------

def brute_guard() -> int:
    raw = os.environ.get(BRUTE_GUARD_ENV)
    if raw is None:
        return counting.DEFAULT_BRUTE_GUARD
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BRUTE_GUARD_ENV} must be an integer, got {raw!r}") from None


def formula_vector(n: int) -> CountVector:
    """L_{n,l} from the closed forms, for every l whose formula covers n."""
    counts = []
    for l, fid in sorted(closedforms.LOZENGE_FORMULAS.items()):
        if n < closedforms.MIN_N[fid]:
            break
        counts.append(closedforms.eval_formula(fid, n))
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return CountVector(n, tuple(counts[: n * n // 2 + 1]))


def compute(n: int, method: str) -> CountVector:
    if n < 1:
        raise UsageError(f"--n must be >= 1, got {n}")
    if method == "dp":
        return counting.count_dp(n)
    if method == "brute":
        return counting.count_brute_force(n, brute_guard())
    if method == "formula":
        return formula_vector(n)
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    v = compute(args.n, args.method)
    _emit(FORMATS[args.format](v), args.out)
    return EXIT_OK


def cmd_formulas(args) -> int:
    if args.min_n < 1 or args.max_n < args.min_n:
        raise UsageError("need 1 <= --min-n <= --max-n")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "l", "count"])
    for n in range(args.min_n, args.max_n + 1):
        for l, fid in sorted(closedforms.LOZENGE_FORMULAS.items()):
            if n >= closedforms.MIN_N[fid]:
                writer.writerow([n, l, str(closedforms.eval_formula(fid, n))])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


# --- polyedges --------------------------------------------------------------

def shape_list(k: int, kind: str):
    if kind == "free":
        return [s.canonical for s in polyedges.enumerate_free_polyedges(k)]
    if kind == "forbidden":
        return [s.canonical for s in polyedges.enumerate_forbidden_free(k)]
    if kind == "fixed-forbidden":
        return polyedges.forbidden_fixed(k)
    raise UsageError(f"unknown class {kind!r}")


def cmd_polyedges(args) -> int:
    shapes = shape_list(args.k, args.kind)
    if args.format == "json":
        doc = {"k": args.k, "class": args.kind, "count": len(shapes),
               "shapes": [[list(e) for e in s.edges] for s in shapes]}
        text = json.dumps(doc) + "\n"
    else:
        text = polyedges.export_shapes(shapes, f"k={args.k} class={args.kind} count={len(shapes)}")
    _emit(text, args.out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

@dataclass
class Check:
    suite: str
    name: str
    n: int
    l: int
    expected: object
    computed: object
    seconds: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f"n={self.n}" + (f" l={self.l}" if self.l >= 0 else "")
        text = f"{status} [{self.suite}] {self.name} {where}: "
        if self.passed:
            text += f"{self.computed}"
        else:
            text += f"expected {self.expected}, computed {self.computed}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass
class VerificationReport:
    checks: list[Check]
    seconds: float

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if self.failures else EXIT_OK


@lru_cache(maxsize=None)
def _dp(n: int) -> CountVector:
    return counting.count_dp(n)


def _timed_dp(n: int) -> tuple[CountVector, float]:
    start = time.perf_counter()
    v = _dp(n)
    return v, time.perf_counter() - start


def suite_table(max_n: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        v, secs = _timed_dp(n)
        for l, published in enumerate(reference.TABLE[n]):
            checks.append(Check("table", "L", n, l, published, v[l], secs))
        if n <= len(reference.ROW_SUMS):
            checks.append(Check("table", "row-sum", n, -1, reference.ROW_SUMS[n - 1],
                                counting.row_sum(v)))
        if n <= len(reference.MAXIMAL_TILINGS):
            top = counting.max_lozenge_count(v)
            checks.append(Check("table", "maximal-count", n, top,
                                reference.MAXIMAL_TILINGS[n - 1], v[top]))
            # the data puts the maximum at T_{n-1}; T_{n-2} is reported for comparison
            flag = "matches" if top == tri_number(n - 2) else "differs"
            checks.append(Check("table", "maximal-l", n, -1, tri_number(n - 1), top,
                                note=f"T_{{n-2}}={tri_number(n - 2)} {flag}"))
    return checks


def suite_formulas(max_n: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        v = _dp(n)
        for l in range(5):
            fid = closedforms.LOZENGE_FORMULAS[l]
            if n >= closedforms.MIN_N[fid]:
                checks.append(Check("formulas", fid.value, n, l, v[l],
                                    closedforms.eval_formula(fid, n)))
        dominated = all(v[l] <= closedforms.binomial_upper_bound(n, l) for l in range(len(v)))
        checks.append(Check("formulas", "binomial-bound", n, -1, True, dominated))
        if n >= closedforms.MIN_N[FormulaId.L4]:
            checks.append(Check("formulas", "L4-decomposition", n, 4, v[4],
                                closedforms.l4_decomposition(n)))
    return checks


def suite_conjectures(max_n: int) -> list[Check]:
    checks = []
    l6_values = {}
    for n in range(1, max_n + 1):
        v = _dp(n)
        for l, fid in ((5, FormulaId.L5conj), (6, FormulaId.L6conj)):
            if n >= closedforms.MIN_N[fid]:
                checks.append(Check("conjectures", fid.value, n, l, v[l],
                                    closedforms.eval_formula(fid, n)))
                checks.append(Check("conjectures", f"{fid.value}-bracket", n, l, v[l],
                                    closedforms.bracket_form(l, n)))
        if n >= closedforms.MIN_N[FormulaId.L6conj]:
            l6_values[n] = v[6]
    if l6_values:
        checks.append(Check("conjectures", "L6-linear-coefficient", max(l6_values), 6,
                            closedforms.L6_POLY[-2],
                            closedforms.solve_l6_linear_coefficient(l6_values)))
    return checks


CENSUS_FREE = {1: 1, 2: 3, 3: 12, 4: 60, 5: 375}
CENSUS_FORBIDDEN = {2: 1, 3: 3, 4: 12, 5: 39, 6: 209}
CENSUS_FIXED = {2: 6, 3: 14, 4: 36}
# offset c -> number of fixed blocks placed T_{n-c} times
PLACEMENT_OFFSETS = {2: {1: 3, 2: 3}, 3: {1: 1, 2: 12, 3: 1}, 4: {2: 21, 3: 15}}


def suite_polyedges(max_n: int) -> list[Check]:
    checks = []
    for k, want in CENSUS_FREE.items():
        checks.append(Check("polyedges", "free-census", -1, k, want,
                            len(polyedges.enumerate_free_polyedges(k))))
    for k, want in CENSUS_FORBIDDEN.items():
        checks.append(Check("polyedges", "forbidden-census", -1, k, want,
                            len(polyedges.enumerate_forbidden_free(k))))
    for k, want in CENSUS_FIXED.items():
        checks.append(Check("polyedges", "fixed-forbidden-census", -1, k, want,
                            len(polyedges.forbidden_fixed(k))))
        offsets = Counter(polyedges.triangular_offset(s) for s in polyedges.forbidden_fixed(k))
        checks.append(Check("polyedges", "placement-offsets", -1, k, PLACEMENT_OFFSETS[k],
                            dict(offsets)))
    vs = polyedges.fixed_v_shapes()
    for n in range(1, min(max_n, 12) + 1):
        checks.append(Check("polyedges", "V-total", n, 2, 3 * (n - 1) ** 2,
                            sum(polyedges.count_placements(s, n) for s in vs)))
    return checks


def suite_identities(max_n: int) -> list[Check]:
    checks = []
    for fid in (FormulaId.BinTrans_L2, FormulaId.BinTrans_L3):
        for row in closedforms.binomial_transform_check(fid, max_n):
            checks.append(Check("identities", fid.value, row.n, -1,
                                row.product_form, row.binomial_form))
    gf = closedforms.gf_L1_coefficients(max_n + 1)
    for n in range(1, max_n + 1):
        checks.append(Check("identities", "GF_L1", n, 1, matchstick_number(n - 1), gf[n]))
    rank_forms = {1: FormulaId.RankSum6, 2: FormulaId.RankSum35, 3: FormulaId.RankSum36}
    for n in range(2, min(max_n, 12) + 1):
        report = polyedges.rank_sum_report(n, 4)
        for rank, fid in rank_forms.items():
            checks.append(Check("identities", f"{fid.value}-pipeline", n, 4,
                                closedforms.eval_rank_sum(fid, n), report[rank]))
        checks.append(Check("identities", "RankSumV-pipeline", n, 2,
                            closedforms.eval_rank_sum(FormulaId.RankSumV, n),
                            polyedges.rank_sum_report(n, 2)[1]))
        v = _dp(n)
        for l in polyedges.LOZENGE_RANGE:
            checks.append(Check("identities", "reconstruct", n, l, v[l],
                                polyedges.reconstruct_L(n, l)))
    return checks


SUITE_FUNCS = {
    "table": suite_table,
    "formulas": suite_formulas,
    "conjectures": suite_conjectures,
    "polyedges": suite_polyedges,
    "identities": suite_identities,
}


def run_verification(max_n: int, suites=SUITES) -> VerificationReport:
    if not 1 <= max_n <= MAX_VERIFY_N:
        raise UsageError(f"--max-n must be in [1, {MAX_VERIFY_N}], got {max_n}")
    start = time.perf_counter()
    checks = []
    for name in SUITES:
        if name in suites:
            print(f"running {name} up to n={max_n}", file=sys.stderr)
            checks.extend(SUITE_FUNCS[name](max_n))
    return VerificationReport(checks, time.perf_counter() - start)


def parse_suites(values) -> tuple[str, ...]:
    chosen = []
    for value in values or []:
        for name in value.split(","):
            name = name.strip()
            if not name:
                continue
            if name not in SUITES:
                raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
            chosen.append(name)
    return tuple(chosen) or SUITES


def cmd_verify(args) -> int:
    report = run_verification(args.max_n, parse_suites(args.suites))
    lines = [c.line() for c in report.checks]
    lines.append(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed "
                 f"in {report.seconds:.2f}s")
    _emit("\n".join(lines) + "\n", args.out)
    return report.exit_code


# --- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lozenge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="tabulate L_{n,l} for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("dp", "brute", "formula"), default="dp")
    p.add_argument("--format", choices=tuple(FORMATS), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check results against published values")
    p.add_argument("--max-n", type=int, default=MAX_VERIFY_N)
    p.add_argument("--suites", nargs="+", help=f"comma separated subset of {','.join(SUITES)}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polyedges", help="list polyedge shapes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="kind", choices=("free", "forbidden", "fixed-forbidden"),
                   default="free")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_polyedges)

    p = sub.add_parser("formulas", help="tabulate the closed forms for l <= 6")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=MAX_VERIFY_N)
    p.add_argument("--out")
    p.set_defaults(func=cmd_formulas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"lozenge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
