"""Command-line front end: single-point rates, scheme comparison, parameter
sweeps emitting CSV/JSON plot data, and the crossover-window report.

Exit status: 0 success, 2 usage error, 1 computation/IO error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .af import Phase, af_rate, crossover_window, noisy_interference_capacity
from .core import ChannelParams, Duplex, classify
from .df import SchemeResult, df_rate, half_duplex_rate, naive_strong_rate
from .optimize import OptimizerSpec

CSV_HEADER = "varied_param,value,scheme,rate_bits,alpha,beta,alpha2,share,switched,regime"

# Scheme id -> required duplex mode.
SCHEMES = {
    "df": Duplex.FULL,
    "df-dpc-only": Duplex.FULL,
    "df-mac-only": Duplex.FULL,
    "df-naive": Duplex.FULL,
    "df-halfduplex": Duplex.HALF,
    "af-in": Duplex.FULL,
    "af-out": Duplex.FULL,
    "cap-per-hop": Duplex.FULL,
}

VARY_CHOICES = ("a", "b", "p1", "p2", "p_joint")


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    """Fixed 12-significant-digit float formatting; '' for absent fields."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return format(float(x), ".12g")


def _spec_from_args(args) -> OptimizerSpec:
    return OptimizerSpec(
        coarse_points=args.grid_points, refine_rounds=args.refine_rounds
    )


def _result_row(scheme_id: str, params: ChannelParams, result: SchemeResult) -> dict:
    split = result.split
    return {
        "scheme": scheme_id,
        "rate_bits": result.rate,
        "alpha": None if split is None else split.alpha,
        "beta": None if split is None else split.beta,
        "alpha2": None if split is None else split.alpha2,
        "share": result.share,
        "switched": result.switched,
        "regime": classify(params).value,
    }


def evaluate_scheme(
    scheme_id: str, a: float, b: float, p1: float, p2: float, spec: OptimizerSpec
) -> dict | None:
    """One scheme at one operating point; None when not applicable there
    (naive scheme outside a,b > 1; per-hop capacity outside the
    noisy-interference condition)."""
    duplex = SCHEMES[scheme_id]
    params = ChannelParams(a=a, b=b, p1=p1, p2=p2, duplex=duplex)
    if scheme_id == "df":
        return _result_row(scheme_id, params, df_rate(params, spec))
    if scheme_id == "df-dpc-only":
        return _result_row(scheme_id, params, df_rate(params, spec, second_hop="dpc"))
    if scheme_id == "df-mac-only":
        return _result_row(scheme_id, params, df_rate(params, spec, second_hop="mac"))
    if scheme_id == "df-naive":
        if not (a > 1.0 and b > 1.0):
            return None
        return _result_row(scheme_id, params, naive_strong_rate(params))
    if scheme_id == "df-halfduplex":
        return _result_row(scheme_id, params, half_duplex_rate(params, spec))
    if scheme_id == "af-in":
        return _result_row(scheme_id, params, af_rate(params, Phase.IN_PHASE, spec))
    if scheme_id == "af-out":
        return _result_row(scheme_id, params, af_rate(params, Phase.OUT_OF_PHASE, spec))
    if scheme_id == "cap-per-hop":
        if not 0.0 < a < 1.0:
            return None
        cap = noisy_interference_capacity(a, p1)
        if cap is None:
            return None
        return {
            "scheme": scheme_id,
            "rate_bits": cap,
            "alpha": None,
            "beta": None,
            "alpha2": None,
            "share": None,
            "switched": None,
            "regime": classify(params).value,
        }
    raise UsageError(f"unknown scheme {scheme_id!r}")


def _check_duplex(args, scheme_ids) -> None:
    if args.duplex is None:
        return
    want = Duplex(args.duplex)
    for sid in scheme_ids:
        if SCHEMES[sid] is not want:
            raise UsageError(
                f"scheme {sid} runs {SCHEMES[sid].value} duplex, not {want.value}"
            )


def _print_report(row: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(row))
        return
    for key, value in row.items():
        if isinstance(value, float):
            text = _fmt(value)
        elif isinstance(value, bool):
            text = "true" if value else "false"
        elif value is None:
            text = "-"
        else:
            text = str(value)
        print(f"{key:<10} {text}")


def cmd_rate(args) -> int:
    _check_duplex(args, [args.scheme])
    spec = _spec_from_args(args)
    row = evaluate_scheme(args.scheme, args.a, args.b, args.p1, args.p2, spec)
    if row is None:
        raise UsageError(
            f"scheme {args.scheme} is not applicable at a={args.a}, b={args.b}, p1={args.p1}"
        )
    _print_report(row, args.json)
    return 0


def cmd_compare(args) -> int:
    spec = _spec_from_args(args)
    if args.duplex is None:
        ids = list(SCHEMES)
    else:
        want = Duplex(args.duplex)
        ids = [sid for sid in SCHEMES if SCHEMES[sid] is want]
    rows = []
    for sid in ids:
        row = evaluate_scheme(sid, args.a, args.b, args.p1, args.p2, spec)
        if row is not None:
            rows.append(row)
    if args.json:
        print(json.dumps(rows))
        return 0
    print(f"{'scheme':<14} {'rate_bits':>16} {'alpha':>10} {'beta':>10} "
          f"{'alpha2':>10} {'share':>10} {'switched':>9} regime")
    for row in rows:
        print(
            f"{row['scheme']:<14} {_fmt(row['rate_bits']):>16} {_fmt(row['alpha']):>10} "
            f"{_fmt(row['beta']):>10} {_fmt(row['alpha2']):>10} {_fmt(row['share']):>10} "
            f"{_fmt(row['switched']):>9} {row['regime']}"
        )
    return 0


def cmd_window(args) -> int:
    if not 0.0 < args.a < 1.0:
        raise UsageError("window needs 0 < a < 1")
    win = crossover_window(args.a)
    if args.json:
        print(
            json.dumps(
                {"lower": win.lower, "upper": win.upper, "nonempty": win.nonempty}
            )
        )
        return 0
    print(f"{'lower':<10} {_fmt(win.lower)}")
    print(f"{'upper':<10} {_fmt(win.upper)}")
    print(f"{'nonempty':<10} {'true' if win.nonempty else 'false'}")
    return 0


def _sweep_fixed(args) -> dict:
    """Fixed channel values for a sweep; the varied flag must stay unset."""
    fixed = {"a": args.a, "b": args.b, "p1": args.p1, "p2": args.p2}
    varied = ("p1", "p2") if args.vary == "p_joint" else (args.vary,)
    for name in varied:
        if fixed[name] is not None:
            raise UsageError(f"--{name} is being varied; do not fix it")
        fixed[name] = 0.0
    for name, value in fixed.items():
        if value is None:
            raise UsageError(f"--{name} is required for this sweep")
    return fixed


def cmd_sweep(args) -> int:
    scheme_ids = [s.strip() for s in args.scheme.split(",") if s.strip()]
    if not scheme_ids:
        raise UsageError("sweep needs at least one scheme")
    for sid in scheme_ids:
        if sid not in SCHEMES:
            raise UsageError(f"unknown scheme {sid!r}")
    _check_duplex(args, scheme_ids)
    if not args.start < args.stop:
        raise UsageError("--start must be < --stop")
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    fixed = _sweep_fixed(args)
    spec = _spec_from_args(args)

    grid = np.linspace(args.start, args.stop, args.points)
    rows = []
    for value in grid:
        value = float(value)
        point = dict(fixed)
        if args.vary == "p_joint":
            point["p1"] = point["p2"] = value
        else:
            point[args.vary] = value
        for sid in scheme_ids:
            row = evaluate_scheme(sid, point["a"], point["b"], point["p1"], point["p2"], spec)
            if row is None:
                continue
            rows.append({"varied_param": args.vary, "value": value, **row})
    rows.sort(key=lambda r: (r["value"], r["scheme"]))

    if args.json:
        text = json.dumps(rows, indent=None)
    else:
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                ",".join(
                    [
                        r["varied_param"],
                        _fmt(r["value"]),
                        r["scheme"],
                        _fmt(r["rate_bits"]),
                        _fmt(r["alpha"]),
                        _fmt(r["beta"]),
                        _fmt(r["alpha2"]),
                        _fmt(r["share"]),
                        _fmt(r["switched"]),
                        r["regime"],
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return 0


def _add_channel_args(parser, required: bool) -> None:
    parser.add_argument("--a", type=float, required=required)
    parser.add_argument("--b", type=float, required=required)
    parser.add_argument("--p1", type=float, required=required)
    parser.add_argument("--p2", type=float, required=required)


def _add_common_args(parser) -> None:
    parser.add_argument("--duplex", choices=("full", "half"), default=None)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--grid-points", type=int, default=101)
    parser.add_argument("--refine-rounds", type=int, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twohop",
        description="Achievable symmetric rates for two-hop Gaussian interference networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="one scheme at one operating point")
    _add_channel_args(p_rate, required=True)
    p_rate.add_argument("--scheme", choices=sorted(SCHEMES), required=True)
    _add_common_args(p_rate)
    p_rate.set_defaults(func=cmd_rate)

    p_cmp = sub.add_parser("compare", help="all applicable schemes at one point")
    _add_channel_args(p_cmp, required=True)
    _add_common_args(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_sweep = sub.add_parser("sweep", help="sweep one parameter, emit CSV/JSON")
    _add_channel_args(p_sweep, required=False)
    p_sweep.add_argument("--vary", choices=VARY_CHOICES, required=True)
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--stop", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--scheme", default=",".join(SCHEMES))
    p_sweep.add_argument("--out", default=None)
    _add_common_args(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_win = sub.add_parser("window", help="out-of-phase AF crossover window")
    p_win.add_argument("--a", type=float, required=True)
    p_win.add_argument("--json", action="store_true")
    p_win.set_defaults(func=cmd_window)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # computation failures
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
