"""Seeded Monte Carlo simulation of the two Monty Hall game variants.

Reproducibility contract
------------------------
All randomness flows from numpy's counter-based Philox generator.  The
substream for grid point ``k`` and chunk ``j`` of a run is
``Generator(Philox(SeedSequence(master_seed, spawn_key=(k, j))))``, a pure
function of ``(master_seed, k, j)``: results are bit-for-bit reproducible for
a fixed configuration regardless of how many workers execute the chunks.
Changing ``chunk_size`` changes the substream layout and therefore the draws,
so it is part of :class:`SimulationConfig`.

Batch draw order
----------------
Within a chunk the kernel draws whole columns in a fixed order: initial picks
first, then switch decisions, then (open-one only) the switcher's choice among
the remaining closed doors.  Host bookkeeping that cannot change a win --
which goat doors the host touches -- is collapsed out of the batch kernel;
:func:`run_trial` plays single games with the full door-by-door mechanics and
is what trajectory-level tests should sample.

Integer draws use ``Generator.integers`` (Lemire's bounded-rejection method,
no modulo bias); switch decisions compare one uniform double against ``p``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .analytic import GameParams, GameVariant, RationalLike, win_marginal
from .planner import PlanMethod, band_halfwidth

__all__ = [
    "RNG_ALGORITHM",
    "DEFAULT_CHUNK_SIZE",
    "GRID_STEP_DEFAULT",
    "SimulationConfig",
    "TrialOutcome",
    "TrialTrace",
    "SimulationResult",
    "SweepRow",
    "SweepResult",
    "switch_probability_grid",
    "substream",
    "run_trial",
    "trace_trial",
    "run_batch",
    "sweep",
]

#: Generator recorded in output metadata, with the substream derivation rule.
RNG_ALGORITHM = "Philox4x64-10 (numpy.random.Philox)"

DEFAULT_CHUNK_SIZE = 4096

#: Default grid step: 21 switch probabilities 0.00, 0.05, ..., 1.00.
GRID_STEP_DEFAULT = Fraction(1, 20)

_CAR_DOOR = 1  # car placement is fixed; arbitrary placement loses no generality


@dataclass(frozen=True)
class SimulationConfig:
    """Everything that determines a batch run, including its random stream."""

    variant: GameVariant
    n: int
    p: float
    trials: int
    master_seed: int = 0
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"doors must be >= 3, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"switch probability must be in [0, 1], got {self.p}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be >= 1, got {self.chunk_size}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class TrialOutcome:
    """One Bernoulli game outcome."""

    won: bool


class TrialTrace(NamedTuple):
    """Full history of one simulated game (the car is behind door 1)."""

    pick: int
    host_opens: frozenset[int]
    switched: bool
    final: int
    won: bool


@dataclass(frozen=True)
class SimulationResult:
    """Aggregate of a batch: win count, empirical frequency, standard error."""

    trials: int
    wins: int
    empirical: float
    std_error: float

    @classmethod
    def from_wins(cls, trials: int, wins: int) -> "SimulationResult":
        if not 0 <= wins <= trials:
            raise ValueError(f"wins {wins} outside [0, {trials}]")
        freq = wins / trials
        return cls(
            trials=trials,
            wins=wins,
            empirical=freq,
            std_error=math.sqrt(freq * (1.0 - freq) / trials),
        )


class SweepRow(NamedTuple):
    """One grid point of a sweep, with exact reference values kept alongside
    the float views for lossless reporting."""

    p: float
    p_exact: Fraction
    result: SimulationResult
    analytic: float
    analytic_exact: Fraction
    clt_halfwidth: float
    chebyshev_halfwidth: float


@dataclass(frozen=True)
class SweepResult:
    """All grid points of a sweep plus the metadata that reproduces it."""

    variant: GameVariant
    n: int
    trials: int
    master_seed: int
    chunk_size: int
    grid_step: Fraction
    delta: float
    rows: tuple[SweepRow, ...]


def switch_probability_grid(step: RationalLike = GRID_STEP_DEFAULT) -> list[Fraction]:
    """Exact grid {k * step : 0 <= k <= 1/step}; step must divide 1 evenly."""
    step = Fraction(step)
    if step <= 0 or step > 1 or (1 / step).denominator != 1:
        raise ValueError(f"grid step must evenly divide 1, got {step}")
    points = int(1 / step)
    return [k * step for k in range(points + 1)]


def substream(master_seed: int, stream: int, chunk: int) -> np.random.Generator:
    """The generator for chunk ``chunk`` of stream ``stream``; pure function
    of its arguments."""
    seq = np.random.SeedSequence(master_seed, spawn_key=(stream, chunk))
    return np.random.Generator(np.random.Philox(seq))


def trace_trial(variant: GameVariant, n: int, p: float, rng) -> TrialTrace:
    """Play one game and return its full trajectory.

    ``rng`` needs ``integers(low, high)`` returning a uniform integer in
    ``[low, high)`` and ``random()`` returning a uniform float in ``[0, 1)``;
    a ``numpy.random.Generator`` fits.
    """
    if n < 3:
        raise ValueError(f"doors must be >= 3, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"switch probability must be in [0, 1], got {p}")
    pick = int(rng.integers(1, n + 1))
    if variant is GameVariant.LEAVE_TWO_CLOSED:
        # Host leaves one other door closed: any other door if the pick is
        # the car, otherwise the car door itself.
        other_closed = int(rng.integers(2, n + 1)) if pick == _CAR_DOOR else _CAR_DOOR
        host_opens = frozenset(range(1, n + 1)) - {pick, other_closed}
    else:
        # Host opens one goat door that is not the pick.
        if pick == _CAR_DOOR:
            opened = int(rng.integers(2, n + 1))
        else:
            opened = 2 + int(rng.integers(0, n - 2))
            if opened >= pick:
                opened += 1
        host_opens = frozenset((opened,))
    switched = rng.random() < p
    if not switched:
        final = pick
    elif variant is GameVariant.LEAVE_TWO_CLOSED:
        final = other_closed
    else:
        # Uniform choice among the n-2 closed doors besides the pick.
        final = 1 + int(rng.integers(0, n - 2))
        lo, hi = sorted((pick, opened))
        if final >= lo:
            final += 1
        if final >= hi:
            final += 1
    return TrialTrace(pick, host_opens, switched, final, final == _CAR_DOOR)


def run_trial(variant: GameVariant, n: int, p: float, rng) -> TrialOutcome:
    """One simulated game; see :func:`trace_trial` for the mechanics."""
    return TrialOutcome(won=trace_trial(variant, n, p, rng).won)


def _chunk_wins(
    variant: GameVariant, n: int, p: float, rng: np.random.Generator, size: int
) -> int:
    picks = rng.integers(1, n + 1, size=size)
    hit = picks == _CAR_DOOR
    switch = rng.random(size) < p
    if variant is GameVariant.LEAVE_TWO_CLOSED:
        # Switching reaches the car exactly when the pick missed it.
        win_if_switch = ~hit
    else:
        # Door 1 is always the lowest-numbered closed door a switcher can
        # reach when the pick missed, so slot 0 of the remaining doors is
        # the car.
        slot = rng.integers(0, n - 2, size=size)
        win_if_switch = ~hit & (slot == 0)
    return int(np.count_nonzero(np.where(switch, win_if_switch, hit)))


def run_batch(
    config: SimulationConfig, *, stream: int = 0, workers: int = 1
) -> SimulationResult:
    """Run ``config.trials`` independent games and aggregate the wins.

    ``stream`` selects the substream family (sweeps pass the grid index);
    ``workers`` only controls execution, never the result.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    full, rest = divmod(config.trials, config.chunk_size)
    sizes = [config.chunk_size] * full + ([rest] if rest else [])

    def chunk_wins(job: tuple[int, int]) -> int:
        index, size = job
        rng = substream(config.master_seed, stream, index)
        return _chunk_wins(config.variant, config.n, config.p, rng, size)

    jobs = list(enumerate(sizes))
    if workers == 1 or len(jobs) == 1:
        wins = sum(map(chunk_wins, jobs))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            wins = sum(pool.map(chunk_wins, jobs))
    return SimulationResult.from_wins(config.trials, wins)


def sweep(
    variant: GameVariant,
    n: int,
    grid_step: RationalLike = GRID_STEP_DEFAULT,
    trials: int = 20000,
    master_seed: int = 0,
    *,
    delta: float = 0.01,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    workers: int = 1,
) -> SweepResult:
    """One batch per grid point, each on its own substream, with the exact
    reference value and CLT/Chebyshev confidence half-widths per row."""
    grid = switch_probability_grid(grid_step)
    rows = []
    for k, p_exact in enumerate(grid):
        config = SimulationConfig(
            variant=variant,
            n=n,
            p=float(p_exact),
            trials=trials,
            master_seed=master_seed,
            chunk_size=chunk_size,
        )
        result = run_batch(config, stream=k, workers=workers)
        exact = win_marginal(variant, GameParams(n, p_exact))
        p_win = float(exact)
        rows.append(
            SweepRow(
                p=float(p_exact),
                p_exact=p_exact,
                result=result,
                analytic=p_win,
                analytic_exact=exact,
                clt_halfwidth=band_halfwidth(p_win, trials, delta, PlanMethod.CLT),
                chebyshev_halfwidth=band_halfwidth(
                    p_win, trials, delta, PlanMethod.CHEBYSHEV
                ),
            )
        )
    return SweepResult(
        variant=variant,
        n=n,
        trials=trials,
        master_seed=master_seed,
        chunk_size=chunk_size,
        grid_step=Fraction(grid_step),
        delta=delta,
        rows=tuple(rows),
    )
