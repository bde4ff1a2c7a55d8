"""Command-line front end.

Exit status: 0 on success, 1 when a ``check`` suite finds a counterexample,
2 for usage errors, 3 for domain errors (the error class is named on stderr).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import SUITES, run_suites
from .comparator import distinguish, rep_homotopy_equivalent
from .errors import OrbiringError
from .inertial import inertial_presentation, sector_unit_product
from .quotient import conjectural_integral_algebra, cr_algebra, multivariable_presentation
from .sectors import CircleWeightSystem, Mode, parse_weights

FORMATS = ("text", "json", "latex")


def _weights(text: str) -> tuple[int, ...]:
    try:
        return parse_weights(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weights {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    try:
        g, h = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected g,h, got {text!r}") from None
    return g, h


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbiring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    modes = [m.value for m in Mode]

    def system(p, suffix="", required=True):
        flag = f"--weights{suffix}"
        p.add_argument(flag, type=_weights, required=required, metavar="B0,B1,...")
        p.add_argument(f"--mode{suffix}", choices=modes, default="symplectic")

    p = sub.add_parser("inertial", help="inertial ring presentation or a single sector product")
    system(p)
    p.add_argument("--order", type=_positive)
    p.add_argument("--product", type=_pair, metavar="G,H")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("cr", help="rational Chen-Ruan ring of the quotient")
    system(p)
    p.add_argument("--order", type=_positive)
    p.add_argument("--integral", action="store_true", help="conjectural integral version")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("present", help="multivariable presentation with ideals I, J, K")
    system(p)
    p.add_argument("--order", type=_positive)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("compare", help="try to tell two Chen-Ruan rings apart")
    system(p)
    system(p, "-b")
    p.add_argument("--order", type=_positive)
    p.add_argument("--integral", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("rep-homotopy", help="representation homotopy of two weight systems")
    system(p)
    system(p, "-b")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="seeded property sweeps")
    p.add_argument("--suite", action="append", choices=SUITES + ("all",))
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", type=_positive, default=5, help="maximum number of weights")
    p.add_argument("--max-weight", type=_positive, default=12)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _system(parser, weights, mode, order=None) -> CircleWeightSystem:
    if not weights:
        parser.error("--weights needs at least one weight")
    return CircleWeightSystem(weights, Mode.parse(mode), order or 0)


def _render(obj, fmt: str) -> str:
    return getattr(obj, f"to_{fmt}")()


def _run(args, parser, out) -> int:
    verb = args.verb
    if verb == "inertial":
        ws = _system(parser, args.weights, args.mode, args.order)
        if args.product is not None:
            p = sector_unit_product(ws, *args.product)
            if args.format == "json":
                out.write(json.dumps({"target": p.target, "coefficient": p.coefficient,
                                      "u_exponent": p.u_exponent}) + "\n")
            else:
                out.write(f"{p}\n")
            return 0
        out.write(_render(inertial_presentation(ws), args.format))
    elif verb in ("cr", "present"):
        ws = _system(parser, args.weights, args.mode, args.order)
        if verb == "present":
            obj = multivariable_presentation(ws)
        else:
            obj = conjectural_integral_algebra(ws) if args.integral else cr_algebra(ws)
        out.write(_render(obj, args.format))
    elif verb == "compare":
        build = conjectural_integral_algebra if args.integral else cr_algebra
        a = build(_system(parser, args.weights, args.mode, args.order))
        b = build(_system(parser, args.weights_b, args.mode_b, args.order))
        out.write(_render(distinguish(a, b), args.format))
    elif verb == "rep-homotopy":
        same = rep_homotopy_equivalent(args.weights, args.weights_b)
        out.write(json.dumps({"equivalent": same}) + "\n" if args.format == "json"
                  else f"{str(same).lower()}\n")
    elif verb == "check":
        return _check(args, parser, out)
    return 0


def _check(args, parser, out) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("ORBIRING_SEED")
        if env is None:
            parser.error("check needs --seed or ORBIRING_SEED")
        try:
            seed = int(env)
        except ValueError:
            parser.error(f"ORBIRING_SEED is not an integer: {env!r}")
    names = args.suite or ["all"]
    names = list(SUITES) if "all" in names else list(dict.fromkeys(names))
    status = 0
    for res in run_suites(names, seed, args.trials, args.max_n, args.max_weight):
        if args.format == "json":
            out.write(json.dumps({"suite": res.name, "passed": res.passed, "checked": res.checked,
                                  "counterexample": res.counterexample, "notes": res.notes}) + "\n")
        else:
            out.write(res.line() + "\n")
            for note in res.notes:
                out.write(f"  note: {note}\n")
        if not res.passed:
            if args.format == "text":
                out.write("  counterexample: " + json.dumps(res.counterexample, default=str) + "\n")
            status = 1
            break
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, parser, sys.stdout)
    except OrbiringError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
