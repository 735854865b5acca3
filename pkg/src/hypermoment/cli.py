"""Command-line interface: ``hypermoment {hp,check,moments}``.

Exit codes: 0 success, 1 usage error, 2 precision loss, 3 method
inapplicable, 4 identity violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import __version__
from .datum import parse_datum
from .engine import METHODS, evaluate_all, resolve_method
from .errors import HypermomentError, IdentityViolation, MethodInapplicable, PrecisionLoss
from .identities import run_suite
from .moments import eligible_primes, prime_reports
from .prime_field import build_context, is_prime

EXIT_OK, EXIT_USAGE, EXIT_PRECISION, EXIT_METHOD, EXIT_IDENTITY = 0, 1, 2, 3, 4
MOMENT_COLUMNS = ("p", "m", "raw_sum", "normalization_exponent", "normalized", "target", "abs_error")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_primes(text: str) -> list[int]:
    """``"5..97"``, ``"5-97"``, ``"5,7,11"`` or ``"13"`` to a list of odd primes."""
    text = text.strip()
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = (int(x) for x in text.split(sep, 1))
            return [n for n in range(max(lo, 3), hi + 1) if is_prime(n)]
    return [n for n in (int(x) for x in text.split(",")) if n > 2 and is_prime(n)]


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _width(jobs: int) -> int:
    env = os.environ.get("HYPERMOMENT_THREADS")
    if env:
        return max(1, int(env))
    return max(1, jobs)


def _fan_out(fn, items, jobs: int):
    """Ordered map, in worker processes when the width exceeds one."""
    width = _width(jobs)
    if width == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=width) as pool:
        return list(pool.map(fn, items))


def _emit(args, columns, rows, config: dict, t0: float) -> None:
    if args.format == "json":
        doc = {"metadata": {"version": __version__, "config": config,
                            "wall_time_s": round(time.perf_counter() - t0, 6)},
               "columns": list(columns), "rows": rows}
        text = json.dumps(doc, indent=2, default=str) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(r[c]) for c in columns])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out")}


# -- commands --------------------------------------------------------------------

def cmd_hp(args) -> int:
    t0 = time.perf_counter()
    datum = parse_datum(args.datum)
    ctx = build_context(args.prime)
    method = resolve_method(datum, ctx.p, args.method)
    values = evaluate_all(datum, ctx, method)
    rows = [{"lambda": lam, "value": int(v), "scale": datum.scale, "method": method}
            for lam, v in enumerate(values)]
    _emit(args, ("lambda", "value", "scale", "method"), rows, _config(args), t0)
    return EXIT_OK


def _suite_rows(p: int) -> list[dict]:
    return [asdict(r) for r in run_suite(p)]


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    primes = [p for p in parse_primes(args.primes) if p >= 5]
    if not primes:
        raise ValueError(f"no primes >= 5 in {args.primes!r}")
    rows = [r for batch in _fan_out(_suite_rows, primes, args.jobs) for r in batch]
    failed = [r for r in rows if not r["passed"]]
    if args.format == "json":
        _emit(args, ("p", "name", "passed", "checked", "witness"), rows, _config(args), t0)
    else:
        _emit(args, ("p", "name", "passed", "checked"), rows, _config(args), t0)
    print(f"{len(rows) - len(failed)}/{len(rows)} checks passed over {len(primes)} primes",
          file=sys.stderr)
    for r in failed:
        print(f"FAIL p={r['p']} {r['name']}: {r['witness']}", file=sys.stderr)
    return EXIT_IDENTITY if failed else EXIT_OK


def _moment_rows(job) -> list[dict]:
    text, p, m_max, square = job
    out = []
    for r in prime_reports(parse_datum(text), p, m_max, square):
        out.append({"p": r.p, "m": r.m, "raw_sum": r.raw_sum,
                    "normalization_exponent": float(r.normalization_exponent),
                    "normalized": r.normalized, "target": r.target, "abs_error": r.abs_error})
    return out


def cmd_moments(args) -> int:
    t0 = time.perf_counter()
    datum = parse_datum(args.datum)
    primes = [p for p in parse_primes(args.primes) if datum.M % p]
    primes = eligible_primes(datum, primes)
    if not primes:
        raise MethodInapplicable(f"no prime in {args.primes!r} has an exact evaluator "
                                 f"for {datum.label()}")
    if args.m_max < 1:
        raise ValueError("--m-max must be at least 1")
    jobs = [(args.datum, p, args.m_max, args.square) for p in primes]
    rows = [r for batch in _fan_out(_moment_rows, jobs, args.jobs) for r in batch]
    rows.sort(key=lambda r: (r["m"], r["p"]))
    _emit(args, MOMENT_COLUMNS, rows, _config(args), t0)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypermoment",
                     description="Finite-field hypergeometric values, identity checks and moments.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, jobs=True):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write here instead of stdout")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes (HYPERMOMENT_THREADS overrides)")

    p = sub.add_parser("hp", help="H_p at every lambda for one prime")
    p.add_argument("--datum", required=True, help='e.g. "HD(2,1)", "HD(2,3,1)" or "1/2,1/2;0,0"')
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--method", choices=("auto",) + METHODS, default="auto")
    common(p, jobs=False)
    p.set_defaults(func=cmd_hp)

    p = sub.add_parser("check", help="run the identity suite over a prime range")
    p.add_argument("--primes", default="5..97", help='"lo..hi" or a comma list')
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("moments", help="normalized moment sums over a prime range")
    p.add_argument("--datum", required=True)
    p.add_argument("--primes", required=True)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--square", action="store_true", help="use H(lambda^2)")
    common(p)
    p.set_defaults(func=cmd_moments)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionLoss as exc:
        print(f"precision loss: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except MethodInapplicable as exc:
        print(f"method inapplicable: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except IdentityViolation as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except (HypermomentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
