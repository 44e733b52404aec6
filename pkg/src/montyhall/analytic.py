"""Closed-form win probabilities for generalized Monty Hall games.

Two host strategies are modeled for a game with ``n >= 3`` doors, one car,
and a contestant who first picks a door uniformly at random and then switches
with probability ``p`` (independently of whether the pick was correct):

* ``LEAVE_TWO_CLOSED`` -- the host opens ``n - 2`` goat doors, so a switching
  contestant faces a single alternative door.
* ``OPEN_ONE`` -- the host opens exactly one goat door, and a switching
  contestant picks uniformly among the ``n - 2`` other closed doors.

At ``n = 3`` the two strategies are the same game.

Everything in this module is exact: probabilities are ``fractions.Fraction``
values and all identities (the eight-cell partition summing to one, the law of
total probability, affinity of the win probability in ``p``) hold as exact
rational equalities.  Convert to ``float`` only at the output boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Union

__all__ = [
    "GameVariant",
    "GameParams",
    "PartitionProbabilities",
    "WinningProfile",
    "CELL_ORDER",
    "as_probability",
    "win_given_switch",
    "win_given_stay",
    "win_marginal",
    "linear_coefficients",
    "partition_probabilities",
    "winning_profile",
]

RationalLike = Union[Fraction, int, str]

#: Partition cell key: (initially_correct, switched, won).
Cell = tuple[bool, bool, bool]

#: Canonical ordering of the eight partition cells, correct-pick cells first.
CELL_ORDER: tuple[Cell, ...] = tuple(
    (e, c, w) for e in (True, False) for c in (True, False) for w in (True, False)
)


class GameVariant(Enum):
    """Host behaviour after the contestant's initial pick."""

    LEAVE_TWO_CLOSED = "leave-two"
    OPEN_ONE = "open-one"


def as_probability(value: RationalLike) -> Fraction:
    """Parse ``value`` into an exact probability.

    Decimal strings are read exactly ("0.05" becomes 1/20, not the nearest
    binary float); "1/3"-style fraction strings are accepted as-is.
    """
    try:
        p = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"not a rational probability: {value!r}") from exc
    if not 0 <= p <= 1:
        raise ValueError(f"probability must be in [0, 1], got {value!r}")
    return p


def _require_doors(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"doors must be an integer, got {n!r}")
    if n < 3:
        raise ValueError(f"doors must be >= 3, got {n}")


@dataclass(frozen=True)
class GameParams:
    """Door count ``n`` and exact switch probability ``p``."""

    n: int
    p: Fraction

    def __post_init__(self) -> None:
        _require_doors(self.n)
        object.__setattr__(self, "p", as_probability(self.p))


@dataclass(frozen=True)
class PartitionProbabilities:
    """The eight exact probabilities of the events "initial pick correct"
    x "switched" x "won", keyed by a (bool, bool, bool) triple.

    The cells are mutually exclusive and cover the sample space, so they must
    sum to exactly one; the constructor enforces this.
    """

    cells: Mapping[Cell, Fraction]

    def __post_init__(self) -> None:
        if set(self.cells) != set(CELL_ORDER):
            raise ValueError("partition needs exactly the eight (e, c, w) cells")
        for key, value in self.cells.items():
            if not 0 <= value <= 1:
                raise ValueError(f"cell {key} out of [0, 1]: {value}")
        if sum(self.cells.values()) != 1:
            raise ValueError(f"partition cells sum to {sum(self.cells.values())}, not 1")
        ordered = {cell: Fraction(self.cells[cell]) for cell in CELL_ORDER}
        object.__setattr__(self, "cells", MappingProxyType(ordered))

    def __getitem__(self, key: Cell) -> Fraction:
        return self.cells[key]

    @property
    def p_win(self) -> Fraction:
        return sum((v for (_, _, w), v in self.cells.items() if w), Fraction(0))


@dataclass(frozen=True)
class WinningProfile:
    """Win probabilities at one (variant, n, p) point plus the affine form
    ``p_win_marginal = intercept + slope * p`` of the marginal."""

    p_win_switch: Fraction
    p_win_stay: Fraction
    p_win_marginal: Fraction
    intercept: Fraction
    slope: Fraction


def _win_given_events(variant: GameVariant, n: int) -> dict[tuple[bool, bool], Fraction]:
    """P(win | initial pick correct?, switched?) for each of the four combinations.

    A contestant who keeps the initial door wins exactly when the pick was
    correct.  A switcher who had the car loses for sure.  A switcher who had a
    goat reaches the car with certainty when only the car door remains closed,
    and with chance 1/(n-2) when picking among the other closed doors.
    """
    if variant is GameVariant.LEAVE_TWO_CLOSED:
        win_from_goat = Fraction(1)
    else:
        win_from_goat = Fraction(1, n - 2)
    return {
        (True, True): Fraction(0),
        (True, False): Fraction(1),
        (False, True): win_from_goat,
        (False, False): Fraction(0),
    }


def win_given_switch(variant: GameVariant, n: int) -> Fraction:
    """Probability of winning conditional on switching.

    ``(n-1)/n`` when the host leaves two doors closed, ``(n-1)/(n(n-2))``
    when the host opens a single door.  Independent of ``p``: the switch
    decision is independent of the pick, so ``p`` cancels in the conditional.
    """
    _require_doors(n)
    if variant is GameVariant.LEAVE_TWO_CLOSED:
        return Fraction(n - 1, n)
    return Fraction(n - 1, n * (n - 2))


def win_given_stay(variant: GameVariant, n: int) -> Fraction:
    """Probability of winning conditional on keeping the initial door: 1/n."""
    _require_doors(n)
    del variant  # staying wins iff the uniform initial pick was correct
    return Fraction(1, n)


def linear_coefficients(variant: GameVariant, n: int) -> tuple[Fraction, Fraction]:
    """Intercept and slope of the marginal win probability as a function of p."""
    stay = win_given_stay(variant, n)
    return stay, win_given_switch(variant, n) - stay


def win_marginal(variant: GameVariant, params: GameParams) -> Fraction:
    """Marginal probability of winning at (n, p), by total probability:
    ``p * P(win | switch) + (1 - p) * P(win | stay)``."""
    intercept, slope = linear_coefficients(variant, params.n)
    return intercept + slope * params.p


def partition_probabilities(variant: GameVariant, params: GameParams) -> PartitionProbabilities:
    """All eight cell probabilities via the chain rule:
    P(pick correct) * P(switch choice | pick) * P(win | pick, switch)."""
    n, p = params.n, params.p
    table = _win_given_events(variant, n)
    cells: dict[Cell, Fraction] = {}
    for correct in (True, False):
        p_pick = Fraction(1, n) if correct else Fraction(n - 1, n)
        for switched in (True, False):
            p_choice = p if switched else 1 - p
            p_win = table[(correct, switched)]
            base = p_pick * p_choice
            cells[(correct, switched, True)] = base * p_win
            cells[(correct, switched, False)] = base * (1 - p_win)
    return PartitionProbabilities(cells)


def winning_profile(variant: GameVariant, params: GameParams) -> WinningProfile:
    """Bundle the switch/stay/marginal probabilities and affine coefficients."""
    intercept, slope = linear_coefficients(variant, params.n)
    return WinningProfile(
        p_win_switch=win_given_switch(variant, params.n),
        p_win_stay=win_given_stay(variant, params.n),
        p_win_marginal=intercept + slope * params.p,
        intercept=intercept,
        slope=slope,
    )
