"""Command-line front end.

Subcommands: enumerate, symmetrize, wasserstein, verify, render.  Every
path is a thin wrapper over the library; outputs are byte-deterministic.
Exit codes: 0 success, 2 bad input or size guard, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .errors import InstanceTooLargeError, PartitionOTError
from .measures import measure_of
from .partitions import (
    Permutation,
    all_permutations,
    enumerate_partitions,
    from_json,
    involutions,
    is_self_symmetric,
    symmetrize,
    to_json,
)
from .render import FORMATS, RenderSpec, UnsupportedRenderError, render
from .theorems import format_summary, verify_theorem_cor, verify_theorem_main
from .transport import (
    BRUTE_FORCE_MAX,
    COST_KINDS,
    EUCLIDEAN,
    SQUARED_EUCLIDEAN,
    cost_matrix,
    integer_cost_matrix,
    plan_of_matching,
    plan_to_json,
    solve_assignment,
    solve_bruteforce,
    wasserstein,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cost", choices=COST_KINDS, default=SQUARED_EUCLIDEAN,
        help="transport cost kind (default: sq)",
    )
    common.add_argument(
        "--seed", type=int, default=0,
        help="seed for the random-matrix solver check (verify --theorem solver)",
    )
    common.add_argument("--out", default=None, help="write primary output to this path")

    parser = argparse.ArgumentParser(
        prog="partition-ot",
        description="Exact optimal transport between integer-partition diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser(
        "enumerate", parents=[common], help="list or count partitions"
    )
    p_enum.add_argument("--m", type=int, required=True, help="partition dimension")
    p_enum.add_argument("--n", type=int, required=True, help="partition total")
    p_enum.add_argument("--count", action="store_true", help="print only the count")
    p_enum.add_argument(
        "--max-cells", type=int, default=None, help="override the enumeration guard"
    )

    p_sym = sub.add_parser(
        "symmetrize", parents=[common], help="apply a coordinate permutation"
    )
    p_sym.add_argument("input", help="partition JSON file, or '-' for stdin")
    p_sym.add_argument(
        "--sigma", required=True, help='one-line permutation, e.g. "2 1"'
    )
    p_sym.add_argument(
        "--check-self", action="store_true",
        help="print whether the partition is fixed instead of the image",
    )

    p_w = sub.add_parser(
        "wasserstein", parents=[common], help="exact transport distance"
    )
    p_w.add_argument("a", help="partition JSON file")
    p_w.add_argument("b", help="partition JSON file")
    p_w.add_argument("--plan", action="store_true", help="also emit the optimal plan JSON")
    p_w.add_argument(
        "--certify", action="store_true",
        help="cross-check the solver against the exhaustive oracle",
    )
    p_w.add_argument(
        "--oracle-max", type=int, default=BRUTE_FORCE_MAX,
        help="largest n the exhaustive oracle will accept",
    )

    p_v = sub.add_parser(
        "verify", parents=[common], help="exhaustive verification sweeps"
    )
    p_v.add_argument(
        "--theorem", choices=("main", "cor", "solver"), required=True,
        help="main: candidate-matching optimality; cor: zero-distance criterion; "
        "solver: random-matrix solver agreement",
    )
    p_v.add_argument("--m", type=int, help="partition dimension")
    p_v.add_argument("--n-max", type=int, help="largest partition total to sweep")
    p_v.add_argument(
        "--sigma", action="append", default=None,
        help='one-line permutation or a named set: identity, involutions, all '
        "(repeatable; default: all)",
    )
    p_v.add_argument(
        "--max-cells", type=int, default=None, help="override the enumeration guard"
    )
    p_v.add_argument(
        "--trials", type=int, default=100, help="random matrices for --theorem solver"
    )
    p_v.add_argument(
        "--size", type=int, default=6, help="matrix size for --theorem solver"
    )

    p_r = sub.add_parser("render", parents=[common], help="draw a diagram")
    p_r.add_argument("input", help="partition JSON file, or '-' for stdin")
    p_r.add_argument("--format", choices=FORMATS, default="ascii")
    p_r.add_argument(
        "--sigma", default=None,
        help="one-line permutation; highlights shared vs moved cells",
    )
    p_r.add_argument("--cell-size", type=float, default=24.0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {
        "enumerate": cmd_enumerate,
        "symmetrize": cmd_symmetrize,
        "wasserstein": cmd_wasserstein,
        "verify": cmd_verify,
        "render": cmd_render,
    }[args.command]
    try:
        return handler(args)
    except InstanceTooLargeError as exc:
        print(f"error: {exc} (see --max-cells / --oracle-max)", file=sys.stderr)
        return EXIT_INPUT
    except (PartitionOTError, UnsupportedRenderError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    raise SystemExit(main())


def cmd_enumerate(args):
    parts = enumerate_partitions(args.m, args.n, max_cells=args.max_cells)
    if args.count:
        text = f"{len(parts)}\n"
    else:
        text = "".join(_compact(to_json(p)) + "\n" for p in parts)
    _emit(text, args.out)
    return EXIT_OK


def cmd_symmetrize(args):
    p = _read_partition(args.input)
    sigma = Permutation.from_one_line(args.sigma)
    if args.check_self:
        _emit(json.dumps(is_self_symmetric(p, sigma)) + "\n", args.out)
    else:
        _emit(_compact(to_json(symmetrize(p, sigma))) + "\n", args.out)
    return EXIT_OK


def cmd_wasserstein(args):
    a = _read_partition(args.a)
    b = _read_partition(args.b)
    value = wasserstein(a, b, args.cost)
    if isinstance(value, Fraction):
        lines = [f"{value.numerator}/{value.denominator} ({float(value):.12g})"]
    else:
        lines = [f"{value:.12g}"]
    if args.certify:
        if a.n <= args.oracle_max:
            c = cost_matrix(measure_of(a), measure_of(b), args.cost)
            if solve_bruteforce(c).total != solve_assignment(c).total:
                print(
                    "certify: solver disagrees with the exhaustive oracle",
                    file=sys.stderr,
                )
                return EXIT_VERIFY
            lines.append("certified: exhaustive oracle agrees")
        else:
            print(
                f"certify skipped: n={a.n} above --oracle-max={args.oracle_max}",
                file=sys.stderr,
            )
    if args.plan:
        if args.cost == EUCLIDEAN:
            raise ValueError("--plan needs an exact cost kind (sq or l1)")
        res = solve_assignment(cost_matrix(measure_of(a), measure_of(b), args.cost))
        plan = plan_of_matching(res.matching, a.n)
        lines.append(_compact(plan_to_json(plan, Fraction(res.total, a.n))))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args):
    if args.theorem == "solver":
        return _verify_solver(args)
    if args.m is None or args.n_max is None:
        raise ValueError("verify needs --m and --n-max")
    sigmas = _sigma_set(args.sigma or ["all"], args.m + 1)
    sweep = verify_theorem_main if args.theorem == "main" else verify_theorem_cor
    report = sweep(args.m, args.n_max, sigmas, kind=args.cost, max_cells=args.max_cells)
    _emit(report.to_jsonl(), args.out)
    if args.out is not None:
        sys.stdout.write(format_summary(report))
    return EXIT_OK if report.violations == 0 else EXIT_VERIFY


def _verify_solver(args):
    if args.size > BRUTE_FORCE_MAX:
        raise InstanceTooLargeError(
            f"--size {args.size} exceeds the oracle guard {BRUTE_FORCE_MAX}"
        )
    rng = random.Random(args.seed)
    lines = []
    disagreements = 0
    for trial in range(args.trials):
        values = [
            [rng.randrange(100) for _ in range(args.size)] for _ in range(args.size)
        ]
        c = integer_cost_matrix(values)
        total = solve_assignment(c).total
        oracle = solve_bruteforce(c).total
        agree = total == oracle
        if not agree:
            disagreements += 1
        lines.append(
            json.dumps(
                {"trial": trial, "total": total, "oracle": oracle, "agree": agree},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    summary = {
        "theorem": "solver",
        "seed": args.seed,
        "size": args.size,
        "trials": args.trials,
        "violations": disagreements,
    }
    lines.append(json.dumps(summary, sort_keys=True, separators=(",", ":")))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if disagreements == 0 else EXIT_VERIFY


def cmd_render(args):
    p = _read_partition(args.input)
    sigma = Permutation.from_one_line(args.sigma) if args.sigma else None
    spec = RenderSpec(format=args.format, cell_size=args.cell_size)
    _emit(render(p, spec, sigma=sigma), args.out)
    return EXIT_OK


def _sigma_set(names, size):
    sigmas = []
    seen = set()
    for name in names:
        if name == "all":
            batch = all_permutations(size)
        elif name == "involutions":
            batch = involutions(size)
        elif name == "identity":
            batch = [Permutation.identity(size)]
        else:
            batch = [Permutation.from_one_line(name)]
        for sigma in batch:
            if sigma.images not in seen:
                seen.add(sigma.images)
                sigmas.append(sigma)
    return sigmas


def _read_partition(path):
    if path == "-":
        doc = json.load(sys.stdin)
    else:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    return from_json(doc)


def _compact(obj):
    return json.dumps(obj, separators=(",", ":"))


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "wb") as fh:
            fh.write(text.encode("utf-8"))


if __name__ == "__main__":
    run()
