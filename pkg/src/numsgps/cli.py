"""Command-line front end: semigroup summaries, factorization queries,
plot-data emission, and random-model estimators.

Data goes to stdout (JSON by default, CSV for plot data and scans);
diagnostics go to stderr.  Exit codes: 0 success, 2 generators with gcd > 1
(argparse usage errors also exit 2), 3 budget or overflow refusal,
4 non-member element, 5 invalid random-model parameters.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from .arithmetical import length_systems_equal  # noqa: F401  (re-export convenience)
from .errors import (
    BoundTooLarge,
    GcdNotOne,
    InvalidParams,
    NotMember,
    Overflow,
)
from .factorizations import (
    delta_sequence,
    delta_set,
    element_elasticity,
    factorizations,
    length_multiset,
    length_set,
    max_length,
    min_length,
    semigroup_delta_set,
    semigroup_elasticity,
)
from .randommodels import (
    ErParams,
    IntersectionParams,
    MultiplicityParams,
    monte_carlo,
    threshold_scan,
)
from .semigroup import NumericalSemigroup

EXIT_GCD = 2
EXIT_BUDGET = 3
EXIT_NOT_MEMBER = 4
EXIT_INVALID_PARAMS = 5


def _parse_generators(text):
    try:
        gens = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"generators must be comma-separated integers: {text!r}")
    if not gens or any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive integers: {text!r}")
    return gens


def _default_budget():
    value = os.environ.get("NUMSGPS_BUDGET")
    return int(value) if value else None


def _rational_obj(q):
    return {"num": q.numerator, "den": q.denominator, "float": float(q)}


def _emit_json(payload, out):
    json.dump(payload, out)
    out.write("\n")


def _emit_csv(header, rows, out):
    writer = csv.writer(out)
    writer.writerow(header)
    writer.writerows(rows)


def _nearest_members(S, n):
    below = next((v for v in range(n - 1, -1, -1) if S.contains(v)), None)
    above = next(v for v in range(n + 1, n + S.multiplicity + 1) if S.contains(v))
    return below, above


def cmd_info(args, out):
    S = NumericalSemigroup.from_generators(_parse_generators(args.generators))
    rho = semigroup_elasticity(S)
    try:
        delta = list(semigroup_delta_set(S, args.budget))
    except BoundTooLarge as exc:
        print(f"notice: delta set omitted: {exc}", file=sys.stderr)
        delta = None
    payload = {
        "generators": _parse_generators(args.generators),
        "min_gens": list(S.min_gens),
        "multiplicity": S.multiplicity,
        "embedding_dim": S.embedding_dim,
        "frobenius": S.frobenius,
        "genus": S.genus,
        "gaps": list(S.gaps),
        "elasticity": _rational_obj(rho),
        "delta": delta,
    }
    if args.format == "text":
        for key, value in payload.items():
            if key == "elasticity":
                value = f"{rho.numerator}/{rho.denominator}"
            out.write(f"{key:>14}: {value}\n")
    else:
        _emit_json(payload, out)
    return 0


def _element_command(args, out, compute):
    S = NumericalSemigroup.from_generators(_parse_generators(args.generators))
    try:
        payload = compute(S, args.element)
    except NotMember:
        below, above = _nearest_members(S, args.element)
        print(
            f"error: {args.element} is not in the semigroup "
            f"(nearest members: {below} below, {above} above)",
            file=sys.stderr,
        )
        return EXIT_NOT_MEMBER
    _emit_json(payload, out)
    return 0


def cmd_factorizations(args, out):
    return _element_command(
        args, out, lambda S, n: [list(f) for f in factorizations(S, n)]
    )


def cmd_lengthset(args, out):
    return _element_command(
        args, out, lambda S, n: list(length_set(S, n, args.budget).lengths)
    )


def cmd_delta(args, out):
    return _element_command(args, out, lambda S, n: list(delta_set(S, n, args.budget)))


def cmd_plotdata(args, out):
    S = NumericalSemigroup.from_generators(_parse_generators(args.generators))
    kind = args.kind
    if kind == "multiset":
        if args.element is None:
            raise ValueError("plotdata multiset needs --element")
        try:
            ms = length_multiset(S, args.element, args.budget)
        except NotMember:
            below, above = _nearest_members(S, args.element)
            print(
                f"error: {args.element} is not in the semigroup "
                f"(nearest members: {below} below, {above} above)",
                file=sys.stderr,
            )
            return EXIT_NOT_MEMBER
        rows = [(l, ms.counts[l]) for l in sorted(ms.counts)]
        _emit_csv(("length", "multiplicity"), rows, out)
        return 0
    if args.max is None:
        raise ValueError(f"plotdata {kind} needs --max")
    n_max = args.max
    if n_max + 1 > (args.budget or 10**8):
        raise BoundTooLarge(f"plot range {n_max} exceeds the budget")
    if kind == "elasticity":
        rows = []
        for n in range(1, n_max + 1):
            if S.contains(n):
                rho = element_elasticity(S, n).value
                rows.append((n, rho.numerator, rho.denominator, float(rho)))
        _emit_csv(("n", "rho_num", "rho_den", "rho_float"), rows, out)
    elif kind == "deltaseq":
        rows = [
            (n, d)
            for n, deltas in delta_sequence(S, n_max, args.budget)
            for d in deltas
        ]
        _emit_csv(("n", "d"), rows, out)
    elif kind == "lengths":
        rows = [
            (n, min_length(S, n), max_length(S, n))
            for n in range(1, n_max + 1)
            if S.contains(n)
        ]
        _emit_csv(("n", "min_len", "max_len"), rows, out)
    else:
        raise ValueError(f"unknown plotdata kind {kind!r}")
    return 0


def _stats_payload(stats):
    payload = {"model": stats.model}
    payload.update({name: value for name, value in stats.params})
    payload.update(
        {
            "trials": stats.trials,
            "seed": stats.seed,
            "p_cofinite": stats.p_cofinite,
            "mean_e": stats.mean_e,
            "mean_g": stats.mean_g,
            "ratio_lhs": stats.ratio_lhs,
            "ratio_rhs": stats.ratio_rhs,
        }
    )
    return payload


def cmd_random(args, out):
    if args.p_grid is not None:
        if args.model != "er":
            raise InvalidParams("--p-grid is only supported for the er model")
        grid = [float(p) for p in args.p_grid.split(",")]
        rows = threshold_scan(args.M, grid, args.trials, args.seed)
        header = (
            "model",
            "M",
            "p",
            "trials",
            "seed",
            "p_cofinite",
            "mean_e",
            "mean_g",
            "ratio_lhs",
            "ratio_rhs",
        )
        _emit_csv(
            header,
            [
                (
                    s.model,
                    dict(s.params)["M"],
                    dict(s.params)["p"],
                    s.trials,
                    s.seed,
                    s.p_cofinite,
                    s.mean_e,
                    s.mean_g,
                    s.ratio_lhs,
                    s.ratio_rhs,
                )
                for s in rows
            ],
            out,
        )
        return 0
    if args.model == "er":
        params = ErParams(args.M, args.p)
    elif args.model == "mult":
        if args.m is None:
            raise InvalidParams("mult model needs --m")
        params = MultiplicityParams(args.M, args.m, args.p)
    else:
        params = IntersectionParams(args.N, args.p)
    stats = monte_carlo(params, args.trials, args.seed)
    _emit_json(_stats_payload(stats), out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Numerical semigroup factorization invariants and random models",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=_default_budget(),
        help="candidate-element budget for scans (env NUMSGPS_BUDGET)",
    )
    parser.add_argument("-o", "--output", help="write data here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="semigroup summary")
    p_info.add_argument("generators")
    p_info.add_argument("--format", choices=("json", "text"), default="json")

    for name in ("factorizations", "lengthset", "delta"):
        p = sub.add_parser(name, help=f"{name} of one element")
        p.add_argument("generators")
        p.add_argument("element", type=int)

    p_plot = sub.add_parser("plotdata", help="CSV data behind the standard plots")
    p_plot.add_argument(
        "kind", choices=("elasticity", "deltaseq", "multiset", "lengths")
    )
    p_plot.add_argument("generators")
    p_plot.add_argument("--max", type=int, help="scan members up to this bound")
    p_plot.add_argument("--element", type=int, help="element for multiset data")

    p_rand = sub.add_parser("random", help="seeded random-model estimates")
    p_rand.add_argument("model", choices=("er", "mult", "inter"))
    p_rand.add_argument("--M", type=int, help="candidate ceiling (er, mult)")
    p_rand.add_argument("--m", type=int, help="pinned multiplicity (mult)")
    p_rand.add_argument("--N", type=int, help="pair ceiling (inter)")
    p_rand.add_argument("--p", type=float, help="inclusion probability")
    p_rand.add_argument("--p-grid", help="comma-separated p values for a CSV scan")
    p_rand.add_argument("--trials", type=int, required=True)
    p_rand.add_argument("--seed", type=int, required=True)
    return parser


_HANDLERS = {
    "info": cmd_info,
    "factorizations": cmd_factorizations,
    "lengthset": cmd_lengthset,
    "delta": cmd_delta,
    "plotdata": cmd_plotdata,
    "random": cmd_random,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    handler = _HANDLERS[args.command]

    def run(out):
        try:
            return handler(args, out)
        except GcdNotOne as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_GCD
        except (Overflow, BoundTooLarge) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        except NotMember as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NOT_MEMBER
        except InvalidParams as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID_PARAMS
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    if args.output:
        with open(args.output, "w", newline="") as handle:
            return run(handle)
    return run(sys.stdout)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
