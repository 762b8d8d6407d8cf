"""Command-line front end.

Exit codes: 0 success, 1 identity violation, 2 usage error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
import time
from fractions import Fraction

from . import analytic, arith, transform
from .arith import EPSILON, IDENTITY, MOBIUS, ONE, SIGMA, TAU, TWO_OMEGA, ArithFunction, divisor_tuple
from .errors import BoundError, EvenFourierError, PreconditionError
from .even import EvenFunction, completely_even, fourier_coefficients, rational_str
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
NAIVE_BENCH_LIMIT = 5000


class UsageError(Exception):
    pass


MINUS_ONE_POW = ArithFunction(lambda n: (-1) ** n, "minus-one-pow", multiplicative=False)

REGISTRY = {
    "eps": EPSILON,
    "one": ONE,
    "id": IDENTITY,
    "tau": TAU,
    "sigma": SIGMA,
    "mobius": MOBIUS,
    "two-omega": TWO_OMEGA,
    "minus-one-pow": MINUS_ONE_POW,
}
ALIASES = {"tau-gcd": "tau", "rho": "eps", "epsilon": "eps", "1": "one"}


def lookup_function(name: str) -> ArithFunction:
    """Resolve a registry name; ``const(c)`` builds a constant function."""
    m = re.fullmatch(r"const\((.+)\)", name.strip())
    if m:
        try:
            return arith.constant(Fraction(m.group(1)))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad constant in {name!r}")
    key = ALIASES.get(name, name)
    if key not in REGISTRY:
        raise UsageError(f"unknown function {name!r}; choose from {sorted(REGISTRY)} or const(c)")
    return REGISTRY[key]


def _even_member(name: str, r: int) -> EvenFunction:
    if ALIASES.get(name, name) == "minus-one-pow" and r % 2:
        raise UsageError("minus-one-pow is only r-even for even r")
    return completely_even(lookup_function(name), r)


# -- rendering ------------------------------------------------------------------


def _cell(value, fmt: str):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return rational_str(value, human=(fmt == "human"))
    if isinstance(value, int):
        return value if fmt == "json" else str(value)
    if value is None:
        return ""
    if isinstance(value, float) and fmt == "json":
        return value
    if isinstance(value, float):
        return repr(value)
    return value


def render(command: str, config: dict, rows: list, verdict: str, fmt: str) -> str:
    columns = list(rows[0].keys()) if rows else []
    cooked = [{k: _cell(row[k], fmt) for k in columns} for row in rows]
    if fmt == "json":
        doc = {"command": command, "config": config, "rows": cooked, "verdict": verdict}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in cooked:
            writer.writerow([row[c] for c in columns])
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(str(row[c])) for row in cooked]) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    for row in cooked:
        lines.append("  ".join(str(row[c]).rjust(widths[c]) for c in columns))
    lines.append(f"verdict: {verdict}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------


def cmd_table(args):
    r = args.r if args.r is not None else (args.rmax or 12)
    if r < 1:
        raise UsageError("r must be positive")
    config = {"kind": args.kind, "r": r}
    if args.kind == "ramanujan":
        lo = args.nmin if args.nmin is not None else 1
        hi = args.nmax if args.nmax is not None else r
        if hi < lo:
            raise UsageError("empty n range")
        config.update(nmin=lo, nmax=hi)
        rows = [{"n": n, "c": Fraction(arith.ramanujan_sum(r, n))} for n in range(lo, hi + 1)]
    else:
        f = _even_member(args.f, r)
        config["f"] = args.f
        if args.kind == "dft":
            fhat = transform.dft(f)
            rows = [{"d": d, "f": v, "fhat": w} for d, v, w in zip(f.divisors, f.values, fhat.values)]
        else:
            alpha = fourier_coefficients(f).alpha
            rows = [{"d": d, "alpha": a} for d, a in zip(f.divisors, alpha)]
    return "table", config, rows, "ok", EXIT_OK


def cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or all")
    rows = []
    for name in names:
        rows.extend(run_suite(name, rmax=args.rmax, seed=args.seed))
    rows.sort(key=lambda row: row.sort_key())
    ok = all(row.passed for row in rows)
    if not args.verbose:
        # keep failures and one summary line per suite
        summary = {}
        for row in rows:
            s = summary.setdefault(row.suite, [0, True])
            if row.n is None:
                s[0] += row.checked
            s[1] = s[1] and row.passed
        failures = [row for row in rows if not row.passed and row.n is not None]
        out = [
            {"suite": name, "r": "", "n": "", "checked": s[0], "lhs": "", "rhs": "", "passed": s[1]}
            for name, s in sorted(summary.items())
        ]
        out += [_row_dict(row) for row in failures]
    else:
        out = [_row_dict(row) for row in rows]
    config = {"suite": args.suite, "rmax": args.rmax, "seed": args.seed}
    return "verify", config, out, "pass" if ok else "fail", EXIT_OK if ok else EXIT_VIOLATION


def _row_dict(row):
    return {
        "suite": row.suite,
        "r": row.r,
        "n": "" if row.n is None else row.n,
        "checked": row.checked,
        "lhs": row.lhs,
        "rhs": row.rhs,
        "passed": row.passed,
    }


def cmd_count(args):
    if args.k < 1 or args.r < 1:
        raise UsageError("r and k must be positive")
    value = transform.count_congruence_solutions(args.r, args.k, args.n)
    row = {"r": args.r, "k": args.k, "n": args.n, "count": value}
    verdict = "ok"
    code = EXIT_OK
    if args.oracle:
        brute = transform.congruence_bruteforce(args.r, args.k, args.n)
        row["oracle"] = brute
        row["match"] = brute == value
        verdict = "pass" if brute == value else "fail"
        code = EXIT_OK if brute == value else EXIT_VIOLATION
    config = {"r": args.r, "k": args.k, "n": args.n, "oracle": args.oracle}
    return "count", config, [row], verdict, code


def _parse_int_list(text: str) -> list:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise UsageError("r-list entries must be positive")
    return values


def cmd_bench(args):
    rng = random.Random(args.seed)
    rows = []
    ok = True
    for r in _parse_int_list(args.r_list):
        f = EvenFunction(r, tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in divisor_tuple(r)))
        tau = len(f.divisors)
        best = float("inf")
        for _ in range(args.repetitions):
            arith.ramanujan_table.cache_clear()
            transform._columns.cache_clear()
            t0 = time.perf_counter()
            fhat = transform.dft(f)
            best = min(best, time.perf_counter() - t0)
        row = {"r": r, "tau": tau, "structured_ops": tau * tau, "structured_seconds": round(best, 6)}
        if r <= NAIVE_BENCH_LIMIT:
            best_naive = float("inf")
            for _ in range(args.repetitions):
                t0 = time.perf_counter()
                slow = transform.dft_naive(f.expand())
                best_naive = min(best_naive, time.perf_counter() - t0)
            fast = fhat.expand().residues
            tol = 1e-9 * float(f.norm1())
            match = max(abs(complex(a) - b) for a, b in zip(fast, slow.residues)) <= tol
            ok = ok and match
            row.update(naive_ops=r * r, naive_seconds=round(best_naive, 6), match="yes" if match else "no")
        else:
            row.update(naive_ops=r * r, naive_seconds="skipped", match="skipped")
        rows.append(row)
    config = {"r_list": args.r_list, "repetitions": args.repetitions, "seed": args.seed}
    return "bench", config, rows, "pass" if ok else "fail", EXIT_OK if ok else EXIT_VIOLATION


def cmd_series(args):
    F = lookup_function(args.F)
    try:
        reports = analytic.dirichlet_series_check(F, args.aF, args.n, args.r, args.s, args.t, args.truncation)
    except PreconditionError as exc:
        raise UsageError(str(exc))
    rows = []
    for rep in reports:
        rows.append(
            {
                "identity": rep.identity,
                "F": args.F,
                "n": rep.n,
                "r": rep.r,
                "s": rep.s,
                "t": rep.t if rep.t is not None else "",
                "truncation": rep.truncation,
                "lhs": rep.lhs_partial,
                "rhs": rep.rhs_closed_form,
                "discrepancy": rep.discrepancy,
                "tail_estimate": rep.tail_estimate,
                "verdict": "pass" if rep.passed else "fail",
            }
        )
    ok = all(rep.passed for rep in reports)
    config = {k: getattr(args, k) for k in ("F", "aF", "n", "r", "s", "t", "truncation")}
    return "series", config, rows, "pass" if ok else "fail", EXIT_OK if ok else EXIT_VIOLATION


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--rmax", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="evenfourier", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="tabulate c_r(n), a transform or coefficients")
    p.add_argument("kind", choices=("ramanujan", "dft", "coefficients"))
    p.add_argument("--r", type=int)
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--f", default="eps", help="registry name, e.g. tau, two-omega, const(3)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a named identity suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(sorted(SUITES))}")
    p.add_argument("--verbose", action="store_true", help="emit every per-modulus row")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="count restricted congruence solutions")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also enumerate tuples (r <= 30)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bench", parents=[common], help="structured vs naive transform timings")
    p.add_argument("--r-list", default="1,360,2000,720720")
    p.add_argument("--repetitions", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("series", parents=[common], help="truncated Dirichlet-series identities")
    p.add_argument("--F", default="eps")
    p.add_argument("--aF", type=float, default=1.0, help="declared convergence abscissa of F")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--t", type=float, default=2.0)
    p.add_argument("--truncation", type=int, default=10**5)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "human"), ("seed", 0), ("rmax", None), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        command, config, rows, verdict, code = args.func(args)
    except UsageError as exc:
        print(f"evenfourier: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundError as exc:
        print(f"evenfourier: resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except EvenFourierError as exc:
        print(f"evenfourier: identity violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    config = dict(config, format=args.format, seed=args.seed)
    text = render(command, config, rows, verdict, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
