"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .decomp import UnitDecomposition, compose, decompose
from .errors import PowBandsError
from .sampler import SamplePoint, VerificationReport, figure_series, find_in_interval, verify_derived_set
from .zsets import all_zsets, beta_k, classify_x, counts, dichotomy, make_context

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FIGURE_HEADER = ("index", "p", "n", "residue", "value", "predicted_k", "exact_regime")


def rational(v: Fraction) -> dict:
    return {"num": v.numerator, "den": v.denominator}


def _dump(obj) -> str:
    return json.dumps(obj, allow_nan=False)


def format_zsets_table(b: int, q: int, sets) -> str:
    lines = [f"k | x in Z*[{q * (q - 1)}] belonging to Z_k"]
    lines += [f"{k} | {', '.join(map(str, s))}" for k, s in enumerate(sets)]
    return "\n".join(lines) + "\n"


def format_figure_csv(points: Sequence[SamplePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIGURE_HEADER)
    for pt in points:
        w.writerow(
            (
                pt.index,
                pt.p,
                pt.n,
                pt.residue,
                format(pt.value_float, ".17g"),
                "" if pt.predicted_k is None else pt.predicted_k,
                "true" if pt.exact_regime else "false",
            )
        )
    return buf.getvalue()


def figure_json(points: Sequence[SamplePoint]) -> list[dict]:
    return [
        {
            "index": pt.index,
            "p": pt.p,
            "n": pt.n,
            "residue": pt.residue,
            "value": rational(pt.value),
            "predicted_k": pt.predicted_k,
            "exact_regime": pt.exact_regime,
        }
        for pt in points
    ]


def report_json(r: VerificationReport) -> dict:
    return {
        "b": r.b,
        "q": r.q,
        "horizon": r.horizon,
        "tol": r.tol,
        "dichotomy": r.regime.value,
        "bands": [
            {
                "k": band.k,
                "target": rational(band.target),
                "samples_seen": band.samples_seen,
                # no samples in the band -> infinite distance, which JSON cannot carry
                "min_distance": band.min_distance if band.samples_seen else None,
                "attained": band.attained,
            }
            for band in r.bands
        ],
        "exact_regime_samples": r.exact_regime_samples,
        "stray_bound": None if r.stray_bound is None else rational(r.stray_bound),
        "strays": r.strays,
        "overall_pass": r.overall_pass,
    }


def report_text(r: VerificationReport) -> str:
    lines = [f"b={r.b} q={r.q} horizon={r.horizon} tol={r.tol} dichotomy={r.regime.value}"]
    for band in r.bands:
        mark = "ok " if band.attained else "MISS"
        lines.append(
            f"  [{mark}] k={band.k:>3} target={band.target} "
            f"seen={band.samples_seen} min_distance={band.min_distance:.6g}"
        )
    lines.append(f"  exact-regime samples={r.exact_regime_samples} strays={r.strays}")
    lines.append(
        f"{r.attained_count}/{len(r.bands)} bands attained; "
        f"{'PASS' if r.overall_pass else 'FAIL'}"
    )
    return "\n".join(lines) + "\n"


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_zsets(args) -> int:
    ctx = make_context(args.b, args.q)
    sets = all_zsets(ctx, args.method).sets
    if args.format == "table":
        text = format_zsets_table(args.b, args.q, sets)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("k", "elements"))
        for k, s in enumerate(sets):
            w.writerow((k, ",".join(map(str, s))))
        text = buf.getvalue()
    else:
        text = _dump(
            {"b": args.b, "q": args.q, "method": args.method, "sets": [list(s) for s in sets]}
        ) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    if args.count < 1:
        raise PowBandsError(f"--count must be >= 1, got {args.count}")
    points = figure_series(make_context(args.b, args.q), args.count)
    if args.format == "csv":
        text = format_figure_csv(points)
    else:
        text = _dump(figure_json(points)) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.tol > 0:
        raise PowBandsError(f"--tol must be positive, got {args.tol}")
    if args.horizon < 2:
        raise PowBandsError(f"--horizon must be >= 2, got {args.horizon}")
    report = verify_derived_set(make_context(args.b, args.q), args.horizon, args.tol)
    sys.stderr.write(report_text(report))
    _write(_dump(report_json(report)) + "\n", args.out)
    return EXIT_OK if report.overall_pass else EXIT_FAIL


def cmd_classify(args) -> int:
    print(_dump({"k": classify_x(make_context(args.b, args.q), args.x)}))
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = decompose(args.x, args.n)
    print(_dump({"alpha": d.alpha, "beta": d.beta}))
    return EXIT_OK


def cmd_compose(args) -> int:
    print(_dump({"x": compose(UnitDecomposition(args.n, args.alpha, args.beta))}))
    return EXIT_OK


def cmd_beta(args) -> int:
    print(_dump({"beta": beta_k(make_context(args.b, args.q), args.k, args.alpha)}))
    return EXIT_OK


def cmd_counts(args) -> int:
    z0, zk = counts(make_context(args.b, args.q))
    print(_dump({"z0": z0, "zk": zk}))
    return EXIT_OK


def cmd_dichotomy(args) -> int:
    print(_dump({"dichotomy": dichotomy(args.b, args.q).value}))
    return EXIT_OK


def cmd_find(args) -> int:
    w = find_in_interval(args.b, args.lo, args.hi)
    print(
        _dump(
            {
                "q": w.q,
                "k": w.k,
                "x": w.x,
                "p": w.p,
                "n": w.n,
                "residue": w.residue,
                "value": rational(w.value),
            }
        )
    )
    return EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powbands",
        description="Solution sets of b^x = kx + b (mod q) and the bands of b^(qp) mod qp / qp.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_bq(p):
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        return p

    p = with_bq(sub.add_parser("zsets", help="print the partition Z_0..Z_{q-1}"))
    p.add_argument("--method", choices=("structural", "bruteforce"), default="structural")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_zsets)

    p = with_bq(sub.add_parser("figure", help="sequence terms over the first COUNT primes"))
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    p = with_bq(sub.add_parser("verify", help="check the predicted limit points up to a horizon"))
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--tol", type=float, required=True)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = with_bq(sub.add_parser("classify", help="index k with x in Z_k"))
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="x -> (alpha, beta) modulo N(N-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compose", help="(alpha, beta) -> x modulo N(N-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.set_defaults(func=cmd_compose)

    p = with_bq(sub.add_parser("beta", help="the beta paired with alpha in Z_k"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_beta)

    p = with_bq(sub.add_parser("counts", help="|Z_0| and |Z_k| for k >= 1"))
    p.set_defaults(func=cmd_counts)

    p = with_bq(sub.add_parser("dichotomy", help="FullLadder or ZeroOnly"))
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("find-in-interval", help="a term of the sequence inside (lo, hi)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--lo", type=_fraction, required=True)
    p.add_argument("--hi", type=_fraction, required=True)
    p.set_defaults(func=cmd_find)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"powbands {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
