"""Command line interface.

Subcommands: ``table`` (exact step distributions), ``coeff`` (one
probability by DP or closed form), ``verify`` (cross-route verification
suites), ``simulate`` (seeded Monte Carlo against exact values) and
``series`` (named series expansions).  Output is CSV by default or JSON
with ``--format json``; exact values always appear as numerator and
denominator next to a rounded decimal.

Exit codes: 0 success, 1 verification failure, 2 usage error.  The
``table`` step cap defaults to 200 and can be overridden through the
``KNOEDEL_MAX_STEPS`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import closedforms, montecarlo, verification
from .models import (
    WalkModel,
    dp_distribution,
    dp_table,
    format_state,
    parse_state,
    residue_class,
)

DEFAULT_STEP_CAP = 200
SERIES_ORDER_CAP = 200

SERIES_TOKENS = {
    "t": closedforms.t_series,
    "inv1mt": closedforms.inv_one_minus_t_series,
    "u1": closedforms.bad_factor_root_series,
    "f0": closedforms.f0_series,
    "g0": closedforms.g0_series,
}


class UsageError(Exception):
    """Bad arguments or configuration; maps to exit code 2."""


def decimal_string(value: Fraction, digits: int) -> str:
    """Round an exact rational to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quotient)


def _step_cap() -> int:
    raw = os.environ.get("KNOEDEL_MAX_STEPS")
    if raw is None:
        return DEFAULT_STEP_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"KNOEDEL_MAX_STEPS must be an integer, got {raw!r}")
    if cap < 0:
        raise UsageError("KNOEDEL_MAX_STEPS must be non-negative")
    return cap


def _model_from(args: argparse.Namespace) -> WalkModel:
    p = None
    if getattr(args, "p", None) is not None:
        try:
            p = Fraction(args.p)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"invalid probability {args.p!r}")
    try:
        if args.model == "double-large":
            return WalkModel.double_large(p)
        return WalkModel.double_small(p)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def cmd_table(args: argparse.Namespace) -> int:
    cap = _step_cap()
    if args.steps > cap:
        raise UsageError(f"steps {args.steps} exceeds the safety cap {cap}")
    if args.steps < 0:
        raise UsageError("steps must be non-negative")
    model = _model_from(args)
    rows = []
    for dist in dp_table(model, args.steps):
        for state in dist.support():
            mass = dist.prob(state)
            rows.append(
                {
                    "model": model.name,
                    "step": dist.step,
                    "state": format_state(state),
                    "num": mass.numerator,
                    "den": mass.denominator,
                    "decimal": decimal_string(mass, args.digits),
                }
            )
    _emit(rows, args.format)
    return 0


def cmd_coeff(args: argparse.Namespace) -> int:
    if args.steps < 0:
        raise UsageError("steps must be non-negative")
    model = _model_from(args)
    try:
        state = parse_state(args.state)
    except ValueError:
        raise UsageError(f"invalid state {args.state!r}")
    if args.source == "dp":
        value = dp_distribution(model, args.steps).prob(state)
    else:
        try:
            value = closedforms.closed_form_probability(model, state, args.steps)
        except ValueError as exc:
            raise UsageError(str(exc))
    _emit(
        [
            {
                "model": model.name,
                "steps": args.steps,
                "state": format_state(state),
                "source": args.source,
                "num": value.numerator,
                "den": value.denominator,
                "decimal": decimal_string(value, args.digits),
                "note": "" if residue_class(model, state) == args.steps % 3 else "off-residue",
            }
        ],
        args.format,
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 2:
        raise UsageError("order must be at least 2")
    if args.max_steps < 0:
        raise UsageError("max-steps must be non-negative")
    if args.trials < 1:
        raise UsageError("trials must be positive")
    results = verification.run_verification(
        order=args.order,
        max_steps=args.max_steps,
        trials=args.trials,
        seed=args.seed,
    )
    failed = 0
    total_checks = 0
    for suite in results:
        total_checks += suite.checks
        if suite.passed:
            print(f"PASS {suite.name} ({suite.checks} checks)")
        else:
            failed += 1
            print(f"FAIL {suite.name} ({suite.checks} checks, {len(suite.failures)} failures)")
            for line in suite.failures[:5]:
                print(f"  {line}")
            if len(suite.failures) > 5:
                print(f"  ... and {len(suite.failures) - 5} more")
    if failed:
        print(f"overall: FAIL ({failed} of {len(results)} suites failed)")
        return 1
    print(f"overall: PASS ({len(results)} suites, {total_checks} checks)")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("trials must be positive")
    if args.steps < 0:
        raise UsageError("steps must be non-negative")
    model = _model_from(args)
    config = montecarlo.SimConfig(model, args.steps, args.trials, args.seed)
    empirical = montecarlo.simulate(config)
    exact = dp_distribution(model, args.steps)
    rows = []
    for cell in montecarlo.four_sigma_report(empirical, exact):
        rows.append(
            {
                "model": model.name,
                "steps": args.steps,
                "trials": args.trials,
                "seed": args.seed,
                "state": format_state(cell.state),
                "count": cell.count,
                "frequency": decimal_string(cell.frequency, args.digits),
                "num": cell.expected.numerator,
                "den": cell.expected.denominator,
                "exact_decimal": decimal_string(cell.expected, args.digits),
                "deviation": decimal_string(cell.deviation, args.digits),
                "four_sigma_bound": repr(cell.bound),
                "within": cell.within,
            }
        )
    _emit(rows, args.format)
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    if not 1 <= args.order <= SERIES_ORDER_CAP:
        raise UsageError(f"order must be between 1 and {SERIES_ORDER_CAP}")
    series = SERIES_TOKENS[args.which](args.order)
    rows = []
    for k in range(series.order):
        value = series.coeff(k)
        rows.append(
            {
                "series": args.which,
                "k": k,
                "num": value.numerator,
                "den": value.denominator,
                "decimal": decimal_string(value, args.digits),
            }
        )
    _emit(rows, args.format)
    return 0


def _add_common_output(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["csv", "json"], default="csv")
    sub.add_argument("--digits", type=int, default=12, help="significant digits shown")


def _add_model(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--model", choices=["double-large", "double-small"], required=True)
    sub.add_argument("--p", help="red probability as a fraction, default the balanced one")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knoedel",
        description="Exact tables, closed forms, series and simulation for the two "
        "ternary Knoedel bin-packing walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="exact step distributions 0..steps")
    _add_model(table)
    table.add_argument("--steps", type=int, required=True)
    _add_common_output(table)
    table.set_defaults(func=cmd_table)

    coeff = sub.add_parser("coeff", help="one probability by dp or closed form")
    _add_model(coeff)
    coeff.add_argument("--state", required=True, help="state index or 'beta'")
    coeff.add_argument("--steps", type=int, required=True)
    coeff.add_argument("--source", choices=["dp", "closed-form"], default="dp")
    _add_common_output(coeff)
    coeff.set_defaults(func=cmd_coeff)

    verify = sub.add_parser("verify", help="run the cross-route verification suites")
    verify.add_argument("--order", type=int, default=30)
    verify.add_argument("--max-steps", type=int, default=30)
    verify.add_argument("--trials", type=int, default=20000)
    verify.add_argument("--seed", type=int, default=montecarlo.DEFAULT_SEED)
    verify.set_defaults(func=cmd_verify)

    simulate = sub.add_parser("simulate", help="seeded Monte Carlo against exact values")
    _add_model(simulate)
    simulate.add_argument("--steps", type=int, required=True)
    simulate.add_argument("--trials", type=int, required=True)
    simulate.add_argument("--seed", type=int, default=montecarlo.DEFAULT_SEED)
    _add_common_output(simulate)
    simulate.set_defaults(func=cmd_simulate)

    series = sub.add_parser("series", help="coefficients of a named series")
    series.add_argument("--which", choices=sorted(SERIES_TOKENS), required=True)
    series.add_argument("--order", type=int, required=True)
    _add_common_output(series)
    series.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
