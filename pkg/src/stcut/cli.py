"""Command-line front end: ``stcut {gen,solve,bench,oracle}``.

Exit codes: 0 success, 2 bad input (arguments, unreadable or invalid graph
files, instance too large for the oracle), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .annealing import solve
from .barrier import BarrierConfig
from .bench import OBJU_MODES, SuiteConfig, records_to_csv, run_suite, summarize
from .errors import STCutError, TooLarge
from .graph import DEFAULT_ALPHA, generate_random, load_problem, save_problem
from .oracle import brute_force_cut

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    """Wraps anything that is the caller's fault."""


def _csv_ints(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_solver_flags(parser):
    parser.add_argument("--p", type=float, default=1.0, help="barrier slope p")
    parser.add_argument("--q", type=float, default=1.0, help="barrier offset q")
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="diagonal shift alpha")
    parser.add_argument("--theta", type=float, default=0.9, help="cooling factor")
    parser.add_argument("--beta1", type=float, default=None, help="initial beta (default: from spectrum)")
    parser.add_argument("--beta-min", type=float, default=1e-4)
    parser.add_argument("--eps", type=float, default=1e-6, help="inner tolerance, relative to q/p")
    parser.add_argument("--max-inner", type=int, default=500)


def _solver_config(args) -> BarrierConfig:
    try:
        return BarrierConfig(
            p=args.p,
            q=args.q,
            beta1=args.beta1,
            theta=args.theta,
            beta_min=args.beta_min,
            eps_inner=args.eps,
            max_inner=args.max_inner,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load(path, alpha=DEFAULT_ALPHA):
    try:
        return load_problem(path, alpha=alpha)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except STCutError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_gen(args, out):
    try:
        problem = generate_random(args.n, args.seed, args.weight_max, s=args.s - 1, t=args.t - 1)
    except STCutError as exc:
        raise InputError(str(exc)) from exc
    try:
        save_problem(problem, args.out)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    print(args.out, file=out)


def cmd_solve(args, out):
    config = _solver_config(args)
    problem = _load(args.input, alpha=args.alpha)
    report = solve(problem, config, args.seed)
    doc = report.to_dict(config, include_trace=args.trace)
    doc["config"]["alpha"] = problem.alpha
    doc["input"] = args.input
    doc["n"] = problem.n
    json.dump(doc, out, indent=2)
    out.write("\n")


def cmd_bench(args, out):
    solver = _solver_config(args)
    try:
        suite = SuiteConfig(
            sizes=args.sizes,
            seeds=args.seeds,
            weight_max=args.weight_max,
            solver=solver,
            obju_mode=args.obju,
            alpha=args.alpha,
        )
    except (ValueError, STCutError) as exc:
        raise InputError(str(exc)) from exc
    records = run_suite(suite)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(records_to_csv(records))
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    summary = summarize(records)
    summary["obju_mode"] = suite.obju_mode
    summary["out"] = args.out
    json.dump(summary, out, indent=2)
    out.write("\n")


def cmd_oracle(args, out):
    problem = _load(args.input)
    try:
        result = brute_force_cut(problem)
    except TooLarge as exc:
        raise InputError(f"TooLarge: {exc}") from exc
    json.dump(result.to_dict(), out, indent=2)
    out.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stcut", description="s-t max cut by log-barrier deterministic annealing")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random complete graph instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--weight-max", type=int, default=50)
    p.add_argument("--s", type=int, default=1, help="1-based source terminal")
    p.add_argument("--t", type=int, default=2, help="1-based sink terminal")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="anneal one instance and print a JSON report")
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_solver_flags(p)
    p.add_argument("--trace", action="store_true", help="include the per-stage trace")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a random-instance suite and write CSV")
    p.add_argument("--sizes", type=_csv_ints, required=True)
    p.add_argument("--seeds", type=int, required=True)
    p.add_argument("--obju", choices=OBJU_MODES, default="exact")
    p.add_argument("--weight-max", type=int, default=50)
    _add_solver_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="exact optimum by enumeration (n <= 24)")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"stcut {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"stcut {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
