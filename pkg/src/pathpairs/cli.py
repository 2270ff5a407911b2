"""Command-line surface: tables, probabilities, the correspondence, and the
verification suites, with machine-readable output.

Every numeric result is rendered exactly, as a decimal integer string or a
``numerator/denominator`` rational; the only floating-point fields are the
explicitly ``*_float`` labeled ones. JSON output shares one shape across
commands: ``{"command", "params", "results", "consistency"?}`` where each
result row carries its value(s) and a ``provenance`` naming the computation
route. CSV output emits the same rows with a header line.

Probabilities are accepted only as rational strings like ``1/3`` (or an
integer); decimal notation is rejected so exactness survives end to end.
Exit codes: 0 success, 1 verification failure, 2 usage or range error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from math import comb

from . import bijection, formulas, oracle, series, verify

# Commands that enumerate pairs refuse n beyond this unless --unsafe-nmax
# raises it; chosen so the defaults stay interactive on desk hardware.
SAFE_ORACLE_N = {"nkr": 12, "mrs": 12, "fnk": 9, "pnk": 10}
SAFE_BIJECTION_TOTAL = 12

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    """Bad arguments or out-of-range requests; exits with status 2."""


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise UsageError(
            f"{text!r} is not an exact rational; write it as p/q (decimals are rejected)"
        )
    return Fraction(text.strip())


def parse_probability(text: str) -> Fraction:
    value = parse_rational(text)
    if not 0 <= value <= 1:
        raise UsageError(f"probability {text} outside [0, 1]")
    return value


def read_level_file(path: str) -> oracle.LevelRate:
    """One rational per line; line m holds the West rate on level m = 1, 2, ...
    Levels beyond the last line reuse its value."""
    values = []
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    values.append(parse_probability(line))
                except UsageError as exc:
                    raise UsageError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise UsageError(f"cannot read level file {path}: {exc}") from exc
    if not values:
        raise UsageError(f"level file {path} holds no rates")
    return oracle.LevelRate(tuple(values))


def fmt(value) -> str:
    """Exact decimal-integer or numerator/denominator rendering."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    return str(value)


def emit(record: dict, fmt_name: str, row_fields: list[str]) -> None:
    if fmt_name == "json":
        json.dump(record, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    writer = csv.writer(sys.stdout)
    writer.writerow(row_fields)
    for row in record["results"]:
        writer.writerow([row.get(field, "") for field in row_fields])


def _cap(command: str, n: int, unsafe: int | None) -> None:
    cap = max(SAFE_ORACLE_N[command], unsafe or 0)
    if n > cap:
        raise UsageError(
            f"{command}: n={n} exceeds the default bound {SAFE_ORACLE_N[command]}; "
            f"pass --unsafe-nmax {n} to allow it"
        )


def _record(command: str, params: dict, results: list[dict], consistency: bool | None = None) -> dict:
    shown = {k: fmt(v) for k, v in params.items() if v is not None}
    out = {"command": command, "params": shown, "results": results}
    if consistency is not None:
        out["consistency"] = consistency
    return out


# --- rectangle counts -------------------------------------------------------


def _nkr_routes(n: int, r: int, k: int, method: str, limit: int):
    """(route, value) pairs for one (n, r, k); formulas cover k <= n-2."""
    routes = []
    wants = ("formula-a", "formula-b", "series", "oracle") if method == "all" else (method,)
    for want in wants:
        if want == "formula-a" and k <= n - 2:
            routes.append(("formula-a", formulas.rect_pair_count_a(n, r, k)))
        elif want == "formula-b" and k <= n - 2:
            routes.append(("formula-b", formulas.rect_pair_count_b(n, r, k)))
        elif want == "series":
            routes.append(("series", series.rect_pair_power(k, n + r).coeff(n, r)))
        elif want == "oracle":
            routes.append(("oracle", oracle.rect_pair_table(n, r, limit=limit).get(k)))
    return routes


def cmd_nkr(args) -> int:
    n, r = args.n, args.r
    if not 0 <= r <= n or n < 1:
        raise UsageError(f"need n >= 1 and 0 <= r <= n, got n={n}, r={r}")
    ks = [args.k] if args.k is not None else list(range(n))
    if any(k < 0 or k > n - 1 for k in ks):
        raise UsageError(f"meeting count k must lie in [0, {n - 1}]")
    needs_oracle = args.method in ("oracle", "all") or (
        args.method in ("formula-a", "formula-b") and any(k > n - 2 for k in ks)
    )
    if needs_oracle or args.method == "series":
        _cap("nkr", n, args.unsafe_nmax)
    results = []
    consistent = True
    for k in ks:
        method = args.method
        if method in ("formula-a", "formula-b") and k > n - 2:
            method = "oracle"  # the top entry is outside the formulas' range
        routes = _nkr_routes(n, r, k, method, max(SAFE_ORACLE_N["nkr"], args.unsafe_nmax or 0))
        values = {v for _, v in routes}
        consistent = consistent and len(values) == 1
        for route, value in routes:
            results.append({"k": str(k), "value": fmt(value), "provenance": route})
    record = _record(
        "nkr", {"n": n, "r": r, "k": args.k, "method": args.method}, results,
        consistency=consistent if args.method == "all" else None,
    )
    emit(record, args.format, ["k", "value", "provenance"])
    return 0


def cmd_mrs(args) -> int:
    n, r, s = args.n, args.r, args.s
    if not 0 <= r <= s <= n or n < 1:
        raise UsageError(f"need n >= 1 and 0 <= r <= s <= n, got n={n}, r={r}, s={s}")
    top = n if r == s else n - 1
    ks = [args.k] if args.k is not None else list(range(top + 1))
    if any(k < 0 or k > top for k in ks):
        raise UsageError(f"meeting count k must lie in [0, {top}]")
    if args.method in ("oracle", "all"):
        if r == s:
            raise UsageError("the enumeration route needs r < s; equal endpoints reduce to nkr")
        _cap("mrs", n, args.unsafe_nmax)
    results = []
    consistent = True
    table = None
    if args.method in ("oracle", "all"):
        table = oracle.endpoint_pair_table(
            n, r, s, limit=max(SAFE_ORACLE_N["mrs"], args.unsafe_nmax or 0)
        )
    for k in ks:
        values = []
        if args.method in ("formula", "all"):
            values.append(("formula", formulas.endpoint_pair_count(n, r, s, k)))
        if table is not None:
            values.append(("oracle", table.get(k)))
        consistent = consistent and len({v for _, v in values}) == 1
        for route, value in values:
            results.append({"k": str(k), "value": fmt(value), "provenance": route})
    record = _record(
        "mrs", {"n": n, "r": r, "s": s, "k": args.k, "method": args.method}, results,
        consistency=consistent if args.method == "all" else None,
    )
    emit(record, args.format, ["k", "value", "provenance"])
    return 0


def cmd_fnk(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    ks = [args.k] if args.k is not None else list(range(n + 1))
    if any(k < 0 or k > n for k in ks):
        raise UsageError(f"meeting count k must lie in [0, {n}]")
    if args.method in ("oracle", "all"):
        _cap("fnk", n, args.unsafe_nmax)
    table = None
    if args.method in ("oracle", "all"):
        table = oracle.free_pair_table(n, limit=max(SAFE_ORACLE_N["fnk"], args.unsafe_nmax or 0))
    results = []
    consistent = True
    denom = 4 ** n
    for k in ks:
        values = []
        if args.method in ("formula", "all"):
            values.append(("formula", formulas.free_pair_count(n, k)))
        if table is not None:
            values.append(("oracle", table.get(k)))
        consistent = consistent and len({v for _, v in values}) == 1
        for route, value in values:
            results.append(
                {
                    "k": str(k),
                    "value": fmt(value),
                    "probability": fmt(Fraction(value, denom)),
                    "provenance": route,
                }
            )
    record = _record(
        "fnk", {"n": n, "k": args.k, "method": args.method}, results,
        consistency=consistent if args.method == "all" else None,
    )
    emit(record, args.format, ["k", "value", "probability", "provenance"])
    return 0


def cmd_pnk(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    ks = [args.k] if args.k is not None else list(range(n))
    if any(k < 0 or k > n - 1 for k in ks):
        raise UsageError(f"meeting count k must lie in [0, {n - 1}]")
    if args.method in ("oracle", "all"):
        _cap("pnk", n, args.unsafe_nmax)
    table = None
    if args.method in ("oracle", "all"):
        table = oracle.same_endpoint_pair_table(
            n, limit=max(SAFE_ORACLE_N["pnk"], args.unsafe_nmax or 0)
        )
    denom = comb(2 * n, n)
    results = []
    consistent = True
    for k in ks:
        values = []
        if args.method in ("formula", "all"):
            values.append(
                ("formula", formulas.same_endpoint_meet_prob(n, k), formulas.same_endpoint_pair_count(n, k))
            )
        if table is not None:
            values.append(("oracle", Fraction(table.get(k), denom), table.get(k)))
        consistent = consistent and len({v for _, v, _ in values}) == 1
        for route, prob, count in values:
            results.append(
                {"k": str(k), "probability": fmt(prob), "count": fmt(count), "provenance": route}
            )
    record = _record(
        "pnk", {"n": n, "k": args.k, "method": args.method}, results,
        consistency=consistent if args.method == "all" else None,
    )
    emit(record, args.format, ["k", "probability", "count", "provenance"])
    return 0


def cmd_diag(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("n must be at least 2")
    ks = [args.k] if args.k is not None else list(range(n - 1))
    if any(k < 0 or k > n - 2 for k in ks):
        raise UsageError(f"meeting count k must lie in [0, {n - 2}]")
    results = [
        {"k": str(k), "value": fmt(formulas.same_endpoint_pair_count(n, k)), "provenance": "formula"}
        for k in ks
    ]
    emit(_record("diag", {"n": n, "k": args.k}, results), args.format, ["k", "value", "provenance"])
    return 0


def cmd_avg(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    exact = formulas.average_crossings(n)
    results = [
        {
            "value": fmt(exact),
            "value_float": float(exact),
            "provenance": "formula",
        }
    ]
    emit(_record("avg", {"n": n}, results), args.format, ["value", "value_float", "provenance"])
    return 0


# --- walker probabilities ------------------------------------------------------


def cmd_barrier(args) -> int:
    if args.a < 0 or args.b < 0 or args.x < 0:
        raise UsageError("a, b, x must be nonnegative")
    if (args.p is None) == (args.level_file is None):
        raise UsageError("give exactly one of --p RATIONAL or --level-file PATH")
    if args.p is not None:
        rate = oracle.ConstantRate(parse_probability(args.p))
    else:
        rate = read_level_file(args.level_file)
    constant = isinstance(rate, oracle.ConstantRate)
    if args.method == "formula" and not constant:
        raise UsageError("the closed form needs a constant rate; use dp or single-walker")
    config = oracle.BarrierConfig(args.a, args.b, args.x, rate)
    routes = []
    wanted = ("dp", "single-walker", "formula") if args.method == "all" else (args.method,)
    for want in wanted:
        if want == "dp":
            routes.append(("dp", oracle.barrier_meet_prob(config)))
        elif want == "single-walker":
            routes.append(
                (
                    "single-walker",
                    oracle.endpoint_probability(
                        (args.a, args.b + args.x + 1),
                        args.a + args.b + args.x,
                        [(-t, 1 + t) for t in range(args.x + 1)],
                        rate,
                    ),
                )
            )
        elif want == "formula" and constant:
            routes.append(("formula", formulas.barrier_meet_formula(args.a, args.b, args.x, rate.p)))
    results = [{"value": fmt(v), "provenance": route} for route, v in routes]
    consistent = len({v for _, v in routes}) == 1
    record = _record(
        "barrier",
        {
            "a": args.a, "b": args.b, "x": args.x,
            "p": args.p, "level_file": args.level_file, "method": args.method,
        },
        results,
        consistency=consistent if args.method == "all" else None,
    )
    emit(record, args.format, ["value", "provenance"])
    return 0


# --- correspondence and verification ---------------------------------------------


def cmd_bijection(args) -> int:
    r, s = args.r, args.s
    if r < 1 or s < 1:
        raise UsageError("need r >= 1 and s >= 1")
    cap = max(SAFE_BIJECTION_TOTAL, args.unsafe_nmax or 0)
    if r + s > cap:
        raise UsageError(
            f"r + s = {r + s} exceeds the default bound {SAFE_BIJECTION_TOTAL}; "
            f"pass --unsafe-nmax {r + s} to allow it"
        )
    report = bijection.verify_correspondence(r, s)
    results = []
    for row in report.rows:
        tags = []
        for tag in row.tags:
            label = tag.group
            if tag.north_throughout is not None:
                label += ":aligned" if tag.north_throughout else ":crossed"
            tags.append(label)
        results.append(
            {
                "source": "|".join(row.source.words()),
                "image_1": "|".join(row.images[0].words()),
                "meeting_1": str(row.images[0].meeting_point),
                "tag_1": tags[0],
                "image_2": "|".join(row.images[1].words()),
                "meeting_2": str(row.images[1].meeting_point),
                "tag_2": tags[1],
                "case": row.case,
            }
        )
    record = _record(
        "bijection",
        {"r": r, "s": s},
        results,
        consistency=report.passed,
    )
    record["nonmeeting"] = report.nonmeeting_count
    record["one_meeting"] = report.one_meeting_count
    record["failures"] = list(report.failures)
    emit(
        record, args.format,
        ["source", "image_1", "meeting_1", "tag_1", "image_2", "meeting_2", "tag_2", "case"],
    )
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    if args.all or not args.suite:
        suites = None
    else:
        names = []
        for chunk in args.suite:
            names.extend(part.strip() for part in chunk.split(",") if part.strip())
        if names == ["none"]:
            names = []
        unknown = [name for name in names if name not in verify.SUITE_NAMES]
        if unknown:
            raise UsageError(f"unknown suites {unknown}; known: {', '.join(verify.SUITE_NAMES)}")
        suites = tuple(names)
    reports = verify.run_all(verify.VerifyConfig(suites=suites, n_max=args.nmax))
    results = []
    for rep in reports:
        row = {
            "check": rep.check_id,
            "status": "pass" if rep.passed else "FAIL",
            "instances": str(rep.instances),
            "first_failure": json.dumps(rep.first_failure) if rep.first_failure else "",
        }
        results.append(row)
    shown = "all" if suites is None else (",".join(suites) or "none")
    record = _record("verify", {"suites": shown, "nmax": args.nmax}, results)
    ok = all(rep.passed for rep in reports)
    record["consistency"] = ok
    if args.format == "json":
        emit(record, "json", [])
    else:
        emit(record, "csv", ["check", "status", "instances", "first_failure"])
    return 0 if ok else 1


# --- argument plumbing ------------------------------------------------------------


def _add_common(sub, oracle_cap: bool = False) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    if oracle_cap:
        sub.add_argument(
            "--unsafe-nmax", type=int, default=None,
            help="raise the built-in size bound (expect long runtimes)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathpairs",
        description="Exact counts and probabilities for pairs of lattice walks, by shared vertices.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("nkr", help="corner-to-corner pair counts on a rectangle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument(
        "--method", choices=("formula-a", "formula-b", "series", "oracle", "all"),
        default="formula-a",
    )
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_nkr)

    p = subs.add_parser("mrs", help="pair counts with two prescribed endpoints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--method", choices=("formula", "oracle", "all"), default="formula")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_mrs)

    p = subs.add_parser("fnk", help="free pair counts by post-origin meetings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--method", choices=("formula", "oracle", "all"), default="formula")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_fnk)

    p = subs.add_parser("pnk", help="same-endpoint meeting probabilities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--method", choices=("formula", "oracle", "all"), default="formula")
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_pnk)

    p = subs.add_parser("diag", help="same-endpoint pair counts (row sums over all splits)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_diag)

    p = subs.add_parser("avg", help="mean crossing count of free pair walks")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_avg)

    p = subs.add_parser("barrier", help="probability two walkers first meet at the origin")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--p", type=str, default=None, help="constant West rate, e.g. 1/3")
    p.add_argument("--level-file", type=str, default=None, help="one rate per line, level 1 first")
    p.add_argument("--method", choices=("dp", "single-walker", "formula", "all"), default="all")
    _add_common(p)
    p.set_defaults(func=cmd_barrier)

    p = subs.add_parser("bijection", help="replay the 2-to-1 correspondence on a rectangle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_common(p, oracle_cap=True)
    p.set_defaults(func=cmd_bijection)

    p = subs.add_parser("verify", help="run identity-check suites")
    p.add_argument("--all", action="store_true", help="run every suite (the default)")
    p.add_argument("--suite", action="append", default=None, help="suite name, repeatable; 'none' for an empty run")
    p.add_argument("--nmax", type=int, default=None, help="shrink sweep bounds for a quick run")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
