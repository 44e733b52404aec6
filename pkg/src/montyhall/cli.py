"""Command-line interface tying the analytic, oracle, simulation, and
planning pieces together.

Subcommands::

    analytic   exact win probabilities and the eight-cell partition
    simulate   one seeded Monte Carlo batch at a single (n, p) point
    sweep      Monte Carlo across the switch-probability grid, CSV or table
    plan       minimum trial counts from the CLT / Chebyshev bounds
    verify     exhaustive oracle-vs-closed-form equality checks

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
The master seed defaults to ``$MONTY_SEED``, then 0; runs are reproducible
by default.  Decimals are rendered to 12 significant digits (half-even) so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import IO, Optional, Sequence

import numpy as np

from . import analytic, oracle, planner, simulate
from .analytic import GameParams, GameVariant, as_probability
from .planner import PlanMethod, PlanRequest
from .simulate import RNG_ALGORITHM, SimulationConfig, SweepResult

__all__ = ["main", "EXIT_OK", "EXIT_VERIFY_FAILED", "EXIT_USAGE", "EXIT_IO"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

VARIANTS = {
    "leave-two": GameVariant.LEAVE_TWO_CLOSED,
    "open-one": GameVariant.OPEN_ONE,
}

CSV_COLUMNS = "p,empirical,analytic,clt_halfwidth,chebyshev_halfwidth"

_SIG12 = Context(prec=12, rounding=ROUND_HALF_EVEN)


def fmt12(value) -> str:
    """Render a Fraction or float to 12 significant digits, half-even,
    plain notation with trailing zeros stripped."""
    if isinstance(value, Fraction):
        quantized = _SIG12.divide(Decimal(value.numerator), Decimal(value.denominator))
    else:
        quantized = _SIG12.plus(Decimal(float(value)))
    text = format(quantized, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _cell_label(cell: tuple[bool, bool, bool]) -> str:
    correct, switched, won = cell
    return "P({} pick, {}, {})".format(
        "correct" if correct else "wrong",
        "switch" if switched else "stay",
        "win" if won else "lose",
    )


def _rng_description() -> str:
    return (
        f"{RNG_ALGORITHM}; numpy {np.__version__}; "
        "substream=SeedSequence(seed, spawn_key=(grid_index, chunk_index))"
    )


def _resolve_seed(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("MONTY_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"MONTY_SEED must be an integer, got {env!r}") from None


def write_sweep_csv(result: SweepResult, epsilon: float, fh: IO[str]) -> None:
    """CSV with '#'-prefixed metadata, then the fixed five-column layout."""
    meta = (
        ("seed", result.master_seed),
        ("rng", _rng_description()),
        ("variant", result.variant.value),
        ("doors", result.n),
        ("trials", result.trials),
        ("epsilon", epsilon),
        ("delta", result.delta),
        ("chunk_size", result.chunk_size),
        ("grid_step", result.grid_step),
    )
    for key, value in meta:
        fh.write(f"# {key}={value}\n")
    fh.write(CSV_COLUMNS + "\n")
    for row in result.rows:
        fh.write(
            ",".join(
                (
                    fmt12(row.p_exact),
                    fmt12(row.result.empirical),
                    fmt12(row.analytic_exact),
                    fmt12(row.clt_halfwidth),
                    fmt12(row.chebyshev_halfwidth),
                )
            )
            + "\n"
        )


def _print_sweep_table(result: SweepResult, epsilon: float) -> None:
    print(
        f"sweep: variant={result.variant.value} doors={result.n} "
        f"trials={result.trials} seed={result.master_seed} "
        f"epsilon={epsilon} delta={result.delta}"
    )
    header = f"{'p':>6} {'empirical':>12} {'analytic':>14} {'clt_hw':>10} {'cheb_hw':>10}"
    print(header)
    for row in result.rows:
        print(
            f"{fmt12(row.p_exact):>6} {row.result.empirical:>12.6f} "
            f"{fmt12(row.analytic_exact):>14} {row.clt_halfwidth:>10.6f} "
            f"{row.chebyshev_halfwidth:>10.6f}"
        )


def cmd_analytic(args: argparse.Namespace) -> int:
    variant = VARIANTS[args.variant]
    params = GameParams(args.doors, as_probability(args.switch_prob))
    profile = analytic.winning_profile(variant, params)
    partition = analytic.partition_probabilities(variant, params)
    rows = [
        ("P(win | switch)", profile.p_win_switch),
        ("P(win | stay)", profile.p_win_stay),
        ("P(win)", profile.p_win_marginal),
        ("intercept", profile.intercept),
        ("slope", profile.slope),
    ] + [(_cell_label(cell), value) for cell, value in partition.cells.items()]
    if args.format == "csv":
        print("quantity,exact,decimal")
        for name, value in rows:
            print(f"{name},{value},{fmt12(value)}")
    else:
        print(f"variant={args.variant} doors={params.n} switch_prob={params.p}")
        for name, value in rows:
            print(f"{name:<32} {str(value):>12}  ({fmt12(value)})")
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    variant = VARIANTS[args.variant]
    p_exact = as_probability(args.switch_prob)
    seed = _resolve_seed(args.seed)
    config = SimulationConfig(
        variant=variant,
        n=args.doors,
        p=float(p_exact),
        trials=args.trials,
        master_seed=seed,
        chunk_size=args.chunk_size,
    )
    result = simulate.run_batch(config, workers=args.workers)
    exact = analytic.win_marginal(variant, GameParams(args.doors, p_exact))
    rows = [
        ("variant", args.variant),
        ("doors", args.doors),
        ("switch_prob", p_exact),
        ("trials", result.trials),
        ("seed", seed),
        ("chunk_size", args.chunk_size),
        ("rng", _rng_description()),
        ("wins", result.wins),
        ("empirical", fmt12(result.empirical)),
        ("std_error", fmt12(result.std_error)),
        ("analytic", f"{exact} = {fmt12(exact)}"),
        ("abs_error", fmt12(abs(result.empirical - float(exact)))),
    ]
    if args.format == "csv":
        print("quantity,value")
        for name, value in rows:
            print(f"{name},{value}")
    else:
        for name, value in rows:
            print(f"{name:<12} {value}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    variant = VARIANTS[args.variant]
    seed = _resolve_seed(args.seed)
    if args.plan_trials is not None:
        # Worst-case variance keeps the guarantee valid across the whole grid.
        plan = planner.sample_size(
            PlanRequest(0.5, args.epsilon, args.delta, PlanMethod(args.plan_trials))
        )
        trials = plan.l0
    else:
        trials = args.trials
    result = simulate.sweep(
        variant,
        args.doors,
        grid_step=Fraction(args.grid_step),
        trials=trials,
        master_seed=seed,
        delta=args.delta,
        chunk_size=args.chunk_size,
        workers=args.workers,
    )
    if args.format == "table":
        _print_sweep_table(result, args.epsilon)
        return EXIT_OK
    if args.out is None:
        write_sweep_csv(result, args.epsilon, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_sweep_csv(result, args.epsilon, fh)
    return EXIT_OK


def cmd_plan(args: argparse.Namespace) -> int:
    method = PlanMethod(args.method)
    if args.at == "worst-case":
        p_win = 0.5
        source = "worst-case"
    else:
        variant = VARIANTS[args.variant]
        params = GameParams(args.doors, as_probability(args.switch_prob))
        p_win = float(analytic.win_marginal(variant, params))
        source = (
            f"analytic({args.variant}, doors={args.doors}, "
            f"switch_prob={params.p})"
        )
    plan = planner.sample_size(PlanRequest(p_win, args.epsilon, args.delta, method))
    print(f"method      {method.value}")
    print(f"p_win       {fmt12(p_win)} ({source})")
    print(f"variance    {fmt12(p_win * (1.0 - p_win))}")
    print(f"epsilon     {args.epsilon}")
    print(f"delta       {args.delta}")
    if plan.z_x is not None:
        print(f"z_x         {fmt12(plan.z_x)} (x = 1 - delta/2)")
    print(f"l0          {plan.l0}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.doors_max < 3:
        raise ValueError(f"doors-max must be >= 3, got {args.doors_max}")
    if args.placement_checks < 0:
        raise ValueError("placement-checks must be >= 0")
    seed = _resolve_seed(args.seed)
    grid = simulate.switch_probability_grid()
    failures: list[str] = []

    analytic_checks = 0
    for variant in (GameVariant.LEAVE_TWO_CLOSED, GameVariant.OPEN_ONE):
        for n in range(3, args.doors_max + 1):
            uniform = oracle.CarDistribution.uniform(n)
            for p in grid:
                params = GameParams(n, p)
                want = analytic.win_marginal(variant, params)
                got = oracle.exact_win_probability(variant, params, uniform)
                analytic_checks += 1
                if got != want:
                    failures.append(
                        f"win probability mismatch at ({variant.value}, n={n}, "
                        f"p={p}): enumeration {got} vs closed form {want}"
                    )
                want_cells = analytic.partition_probabilities(variant, params)
                got_cells = oracle.exact_partition(variant, params, uniform)
                analytic_checks += 1
                if got_cells != want_cells:
                    failures.append(
                        f"partition mismatch at ({variant.value}, n={n}, p={p})"
                    )

    rng = np.random.default_rng(seed)
    for index in range(args.placement_checks):
        n = 3 + index % (args.doors_max - 2)
        cars = oracle.random_car_distribution(n, rng)
        got = oracle.exact_initial_correct(GameParams(n, Fraction(1, 2)), cars)
        if got != Fraction(1, n):
            failures.append(
                f"initial-pick probability mismatch at n={n}, cars={cars.alpha}: "
                f"{got} != 1/{n}"
            )

    if failures:
        print(
            f"{len(failures)} of {analytic_checks + args.placement_checks} "
            "checks FAILED:"
        )
        for line in failures:
            print(f"  {line}")
        return EXIT_VERIFY_FAILED
    print(
        f"{analytic_checks} analytic checks passed, "
        f"{args.placement_checks} placement checks passed"
    )
    return EXIT_OK


def _add_game_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--variant",
        choices=sorted(VARIANTS),
        default="leave-two",
        help="host strategy (default: leave-two)",
    )
    sub.add_argument("--doors", type=int, default=3, metavar="N", help="door count, >= 3")
    sub.add_argument(
        "--switch-prob",
        default="1/2",
        metavar="P",
        help="switch probability as a fraction '1/3' or exact decimal '0.05'",
    )


def _add_seed_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--seed",
        type=int,
        default=None,
        metavar="S",
        help="master seed (default: $MONTY_SEED, else 0)",
    )


def _add_format_flag(sub: argparse.ArgumentParser, default: str) -> None:
    sub.add_argument("--format", choices=["table", "csv"], default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montyhall",
        description="Exact, simulated, and planned win probabilities for "
        "generalized Monty Hall games.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("analytic", help="exact probabilities at one (n, p)")
    _add_game_flags(sub)
    _add_format_flag(sub, "table")
    sub.set_defaults(handler=cmd_analytic)

    sub = commands.add_parser("simulate", help="one Monte Carlo batch")
    _add_game_flags(sub)
    _add_seed_flag(sub)
    sub.add_argument("--trials", type=int, default=100000)
    sub.add_argument("--chunk-size", type=int, default=simulate.DEFAULT_CHUNK_SIZE)
    sub.add_argument("--workers", type=int, default=1)
    _add_format_flag(sub, "table")
    sub.set_defaults(handler=cmd_simulate)

    sub = commands.add_parser("sweep", help="Monte Carlo across the p grid")
    _add_game_flags(sub)
    _add_seed_flag(sub)
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--trials", type=int, default=20000)
    group.add_argument(
        "--plan-trials",
        choices=[m.value for m in PlanMethod],
        default=None,
        help="derive the trial count from the planner at worst-case variance",
    )
    sub.add_argument("--grid-step", default="1/20", metavar="STEP")
    sub.add_argument("--epsilon", type=float, default=0.01)
    sub.add_argument("--delta", type=float, default=0.01)
    sub.add_argument("--chunk-size", type=int, default=simulate.DEFAULT_CHUNK_SIZE)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--out", default=None, metavar="PATH")
    _add_format_flag(sub, "csv")
    sub.set_defaults(handler=cmd_sweep)

    sub = commands.add_parser("plan", help="minimum trial count for a target accuracy")
    _add_game_flags(sub)
    sub.add_argument("--epsilon", type=float, default=0.01)
    sub.add_argument("--delta", type=float, default=0.01)
    sub.add_argument("--method", choices=[m.value for m in PlanMethod], default="clt")
    sub.add_argument(
        "--at",
        choices=["worst-case", "analytic"],
        default="worst-case",
        help="plan at worst-case variance or at the analytic win probability",
    )
    sub.set_defaults(handler=cmd_plan)

    sub = commands.add_parser("verify", help="oracle vs closed-form equality checks")
    sub.add_argument("--doors-max", type=int, default=10)
    sub.add_argument("--placement-checks", type=int, default=50)
    _add_seed_flag(sub)
    sub.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
