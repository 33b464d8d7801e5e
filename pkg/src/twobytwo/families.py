"""Equilibrium-based payoff families and symmetry censuses.

A strict game's family is determined entirely by the set of payoff pairs
at its pure Nash equilibria (plus Pareto structure inside the Prisoner's
Dilemma family): no equilibrium means Cyclic, a 4,4 equilibrium means
Win-win, a best pair of 4,3 means Biased, 3,3 Second Best, 4,2 Unfair,
and anything poorer falls into the Prisoner's Dilemma family.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import NotStrict
from .games import (
    CELLS,
    OrdinalGame,
    PRISONERS_DILEMMA,
    analyze_game,
    canonical_game,
    transpose_players,
)
from .atlas import StrictGameId, TopologyAtlas


class Family(Enum):
    WIN_WIN = "WinWin"
    BIASED = "Biased"
    SECOND_BEST = "SecondBest"
    UNFAIR = "Unfair"
    PD_FAMILY = "PdFamily"
    CYCLIC = "Cyclic"


class Subfamily(Enum):
    HARMONIOUS = "Harmonious"
    STAG_HUNT = "StagHunt"
    BATTLE_OF_SEXES = "BattleOfSexes"
    SAMARITAN = "Samaritan"
    SELF_SERVING = "SelfServing"
    ALIBI = "Alibi"
    TRAGIC = "Tragic"
    PRISONERS_DILEMMA = "PrisonersDilemma"
    IMPROPER = "Improper"


@dataclass(frozen=True)
class PayoffFamily:
    family: Family
    subfamily: Optional[Subfamily]


def _sorted_desc(pair: tuple[int, int]) -> tuple[int, int]:
    return tuple(sorted(pair, reverse=True))  # type: ignore[return-value]


def classify_family(game: OrdinalGame) -> PayoffFamily:
    """Family and subfamily of a strict game from its equilibrium payoffs."""
    if not game.is_strict:
        raise NotStrict(f"payoff families are defined for strict games: {game}")
    game = canonical_game(game)
    report = analyze_game(game)
    payoffs = report.nash_payoffs

    if not payoffs:
        return PayoffFamily(Family.CYCLIC, None)

    if (4, 4) in payoffs:
        sub = Subfamily.HARMONIOUS if payoffs == {(4, 4)} else Subfamily.STAG_HUNT
        return PayoffFamily(Family.WIN_WIN, sub)

    shapes = {_sorted_desc(p) for p in payoffs}
    best = max(shapes)
    if best == (4, 3):
        if payoffs == {(4, 3), (3, 4)}:
            return PayoffFamily(Family.BIASED, Subfamily.BATTLE_OF_SEXES)
        if shapes == {(4, 3), (4, 2)}:
            return PayoffFamily(Family.BIASED, Subfamily.IMPROPER)
        if len(payoffs) == 1:
            return PayoffFamily(Family.BIASED, Subfamily.SAMARITAN)
        return PayoffFamily(Family.BIASED, None)
    if best == (3, 3):
        one_dominant = (report.dominant_row is None) != (report.dominant_col is None)
        sub = Subfamily.SELF_SERVING if one_dominant else None
        return PayoffFamily(Family.SECOND_BEST, sub)
    if best == (4, 2):
        return PayoffFamily(Family.UNFAIR, None)

    # Equilibrium pairs within {(2,2), (3,2), (2,3)}.
    if game == PRISONERS_DILEMMA:
        return PayoffFamily(Family.PD_FAMILY, Subfamily.PRISONERS_DILEMMA)
    improvable = any(
        game.row_ranks[c] > game.row_ranks[e] and game.col_ranks[c] > game.col_ranks[e]
        for e in report.nash_profiles
        for c in CELLS
    )
    sub = Subfamily.ALIBI if improvable else Subfamily.TRAGIC
    return PayoffFamily(Family.PD_FAMILY, sub)


@dataclass(frozen=True)
class FamilyCensus:
    by_family: dict[Family, int]
    by_subfamily: dict[Subfamily, int]

    @property
    def total(self) -> int:
        return sum(self.by_family.values())

    def largest_subfamily(self) -> Subfamily:
        return max(self.by_subfamily, key=lambda s: (self.by_subfamily[s], s.value))


def family_census(atlas: TopologyAtlas) -> FamilyCensus:
    """Family and subfamily totals over all 144 games."""
    by_family: Counter = Counter()
    by_subfamily: Counter = Counter()
    for _, game in atlas.games:
        tag = classify_family(game)
        by_family[tag.family] += 1
        if tag.subfamily is not None:
            by_subfamily[tag.subfamily] += 1
    return FamilyCensus(dict(by_family), dict(by_subfamily))


def distinct_up_to_player_swap(
    atlas: TopologyAtlas,
) -> tuple[list[StrictGameId], list[StrictGameId]]:
    """Orbit representatives under player transposition plus the fixed points.

    Representatives are the smaller id of each orbit; symmetric games are
    their own partners.
    """
    representatives: list[StrictGameId] = []
    symmetric: list[StrictGameId] = []
    for gid, game in atlas.games:
        partner = atlas.locate(transpose_players(game))
        if gid == partner:
            symmetric.append(gid)
            representatives.append(gid)
        elif gid < partner:
            representatives.append(gid)
    return representatives, symmetric
