"""Exact brute-force enumeration of every Monty Hall game trajectory.

This module is the ground truth the closed forms in :mod:`montyhall.analytic`
are checked against.  It walks the full probability tree -- car placement x
initial pick x host action x switch decision x final pick -- with exact
rational branch weights, so equalities against the analytic formulas can be
asserted with zero tolerance.  Car placement may be any rational distribution,
not just uniform; the contestant's initial pick is always uniform.

The host ties are broken uniformly: when the contestant's pick is the car,
every admissible host action gets weight 1/(n-1).

Enumeration is O(n^3) states for the leave-two-closed strategy and O(n^4) for
open-one (the switcher's final pick adds a factor), fine for desk-scale n.
No randomness anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .analytic import (
    CELL_ORDER,
    Cell,
    GameParams,
    GameVariant,
    PartitionProbabilities,
    RationalLike,
)

__all__ = [
    "CarDistribution",
    "Trajectory",
    "enumerate_trajectories",
    "exact_win_probability",
    "exact_partition",
    "exact_initial_correct",
    "random_car_distribution",
]


@dataclass(frozen=True)
class CarDistribution:
    """Exact probabilities ``alpha[i]`` that the car sits behind door ``i + 1``."""

    alpha: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        alpha = tuple(Fraction(a) for a in self.alpha)
        if len(alpha) < 3:
            raise ValueError("car distribution needs at least 3 doors")
        if any(a < 0 for a in alpha):
            raise ValueError("car placement probabilities must be non-negative")
        if sum(alpha) != 1:
            raise ValueError(f"car placement probabilities sum to {sum(alpha)}, not 1")
        object.__setattr__(self, "alpha", alpha)

    def __len__(self) -> int:
        return len(self.alpha)

    @classmethod
    def uniform(cls, n: int) -> "CarDistribution":
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def from_weights(cls, weights: Sequence[RationalLike]) -> "CarDistribution":
        """Normalize non-negative rational weights into a distribution."""
        ws = [Fraction(w) for w in weights]
        total = sum(ws)
        if total <= 0:
            raise ValueError("weights must have a positive sum")
        return cls(tuple(w / total for w in ws))


class Trajectory(NamedTuple):
    """One complete game history with its exact probability weight."""

    car: int
    pick: int
    host_opens: frozenset[int]
    switched: bool
    final: int
    weight: Fraction


def _check_inputs(params: GameParams, cars: CarDistribution) -> None:
    if len(cars) != params.n:
        raise ValueError(
            f"car distribution covers {len(cars)} doors, game has {params.n}"
        )


def _raw_trajectories(
    variant: GameVariant, params: GameParams, cars: CarDistribution
) -> Iterator[tuple[int, int, int, bool, int, Fraction]]:
    """Yield (car, pick, host_door, switched, final, weight) tuples.

    ``host_door`` encodes the host action compactly: the single door left
    closed besides the pick (leave-two-closed) or the single door opened
    (open-one).  Zero-weight branches are skipped so every yielded weight is
    positive.
    """
    n, p = params.n, params.p
    q = 1 - p
    doors = range(1, n + 1)
    pick_w = Fraction(1, n)
    for car in doors:
        alpha = cars.alpha[car - 1]
        if alpha == 0:
            continue
        for pick in doors:
            base = alpha * pick_w
            if variant is GameVariant.LEAVE_TWO_CLOSED:
                # Host opens all but one other door; the car door must stay
                # closed, so the host only has a choice when pick == car.
                if pick == car:
                    closed_choices = [y for y in doors if y != pick]
                else:
                    closed_choices = [car]
                w0 = base * Fraction(1, len(closed_choices))
                stay_w = w0 * q
                switch_w = w0 * p
                for y in closed_choices:
                    if q:
                        yield car, pick, y, False, pick, stay_w
                    if p:
                        yield car, pick, y, True, y, switch_w
            else:
                # Host opens one goat door other than the pick.
                goat_choices = [y for y in doors if y != pick and y != car]
                w0 = base * Fraction(1, len(goat_choices))
                stay_w = w0 * q
                switch_each = w0 * p * Fraction(1, n - 2)
                for y in goat_choices:
                    if q:
                        yield car, pick, y, False, pick, stay_w
                    if p:
                        for final in doors:
                            if final != pick and final != y:
                                yield car, pick, y, True, final, switch_each


def enumerate_trajectories(
    variant: GameVariant, params: GameParams, cars: CarDistribution
) -> Iterator[Trajectory]:
    """Every game trajectory with positive weight; weights sum to exactly 1."""
    _check_inputs(params, cars)
    n = params.n
    all_doors = frozenset(range(1, n + 1))
    for car, pick, host_door, switched, final, weight in _raw_trajectories(
        variant, params, cars
    ):
        if variant is GameVariant.LEAVE_TWO_CLOSED:
            opens = all_doors - {pick, host_door}
        else:
            opens = frozenset((host_door,))
        yield Trajectory(car, pick, opens, switched, final, weight)


def _tally_to_fraction(tally: dict[tuple[int, int], int]) -> Fraction:
    return sum(
        (Fraction(num, den) * count for (num, den), count in tally.items()),
        Fraction(0),
    )


def exact_win_probability(
    variant: GameVariant, params: GameParams, cars: CarDistribution
) -> Fraction:
    """Total weight of trajectories whose final door hides the car.

    For a uniform car distribution this equals the closed-form marginal win
    probability exactly, for every n and p.
    """
    _check_inputs(params, cars)
    # Tally (numerator, denominator) counts instead of summing Fractions one
    # by one; trajectories share only a handful of distinct weights.
    tally: dict[tuple[int, int], int] = {}
    for car, _pick, _host, _switched, final, weight in _raw_trajectories(
        variant, params, cars
    ):
        if final == car:
            key = (weight.numerator, weight.denominator)
            tally[key] = tally.get(key, 0) + 1
    return _tally_to_fraction(tally)


def exact_partition(
    variant: GameVariant, params: GameParams, cars: CarDistribution
) -> PartitionProbabilities:
    """Accumulate trajectory weights into the eight (correct, switched, won)
    cells.  The cells sum to 1 by construction of the probability tree."""
    _check_inputs(params, cars)
    tallies: dict[Cell, dict[tuple[int, int], int]] = {cell: {} for cell in CELL_ORDER}
    for car, pick, _host, switched, final, weight in _raw_trajectories(
        variant, params, cars
    ):
        tally = tallies[(pick == car, switched, final == car)]
        key = (weight.numerator, weight.denominator)
        tally[key] = tally.get(key, 0) + 1
    return PartitionProbabilities(
        {cell: _tally_to_fraction(tally) for cell, tally in tallies.items()}
    )


def exact_initial_correct(params: GameParams, cars: CarDistribution) -> Fraction:
    """Probability that the uniform initial pick finds the car, by enumeration.

    Equals 1/n for every valid car distribution: the host strategy happens
    after the pick, so the cheaper leave-two-closed tree is enumerated.
    """
    _check_inputs(params, cars)
    tally: dict[tuple[int, int], int] = {}
    for car, pick, _host, _switched, _final, weight in _raw_trajectories(
        GameVariant.LEAVE_TWO_CLOSED, params, cars
    ):
        if pick == car:
            key = (weight.numerator, weight.denominator)
            tally[key] = tally.get(key, 0) + 1
    return _tally_to_fraction(tally)


def random_car_distribution(n: int, rng) -> CarDistribution:
    """Draw a random rational car distribution on ``n`` doors.

    ``rng`` is a ``numpy.random.Generator`` (or anything with a compatible
    ``integers`` method).  Integer weights in [0, 100] are normalized exactly,
    so individual doors may get probability zero.
    """
    while True:
        weights = [int(rng.integers(0, 101)) for _ in range(n)]
        if sum(weights) > 0:
            return CarDistribution.from_weights(weights)
