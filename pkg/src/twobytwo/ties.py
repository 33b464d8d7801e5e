"""Games with ties: half-swaps, preference classes, census, natural order.

Making a tie merges two adjacent rank values for one player; breaking a
tie splits a tied group into two adjacent groups.  Together these
half-swap moves form a connected lattice over all 1413 canonical games
(strict and tied), ordered naturally by each player's count of distinct
preferences from the null game up to the strict games.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .errors import RankAbsent, RankNotTied
from .games import (
    OrdinalGame,
    Ranks,
    apply_flips,
    canonical_game,
    make_game,
    transpose_players,
)
from .atlas import StrictGameId, TopologyAtlas, build_atlas


class PreferenceClass(Enum):
    """The eight tie patterns of a single player's dense ranking.

    Letters follow the standard A-H coding; labels count distinct values
    with a subscript for the tie position (e.g. 3_1 = 1=2<3<4).
    """

    A = ("1", 1)
    B = ("2_1", 2)
    C = ("2_2", 3)
    E = ("2_3", 4)
    D = ("3_1", 5)
    F = ("3_2", 6)
    G = ("3_3", 7)
    H = ("4", 8)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def display(self) -> str:
        sub = {"1": "₁", "2": "₂", "3": "₃"}
        base, _, suffix = self.label.partition("_")
        return base + (sub[suffix] if suffix else "")

    @property
    def index(self) -> int:
        """Position 1..8 on the natural-order axis."""
        return self.value[1]


CLASS_ORDER = (
    PreferenceClass.A,
    PreferenceClass.B,
    PreferenceClass.C,
    PreferenceClass.E,
    PreferenceClass.D,
    PreferenceClass.F,
    PreferenceClass.G,
    PreferenceClass.H,
)

_BY_LABEL = {c.label: c for c in PreferenceClass}


def class_by_label(label: str) -> PreferenceClass:
    return _BY_LABEL[label]


def preference_class(ranks: Ranks) -> PreferenceClass:
    """Classify one player's ranking by its tie pattern."""
    k = max(ranks)
    if k == 1:
        return PreferenceClass.A
    if k == 4:
        return PreferenceClass.H
    multiplicities = tuple(ranks.count(v) for v in range(1, k + 1))
    if k == 2:
        return {(3, 1): PreferenceClass.B, (2, 2): PreferenceClass.C,
                (1, 3): PreferenceClass.E}[multiplicities]
    return {(2, 1, 1): PreferenceClass.D, (1, 2, 1): PreferenceClass.F,
            (1, 1, 2): PreferenceClass.G}[multiplicities]


def all_dense_rankings() -> list[Ranks]:
    """All 75 dense rankings of the four cells."""
    out = []
    for vec in product((1, 2, 3, 4), repeat=4):
        values = set(vec)
        if values == set(range(1, len(values) + 1)):
            out.append(vec)
    return out


def _merge(vec: Ranks, rank: int) -> Ranks:
    """Merge value rank+1 into rank, keeping the ranking dense."""
    return tuple(v if v <= rank else v - 1 for v in vec)  # type: ignore[return-value]


def make_tie(game: OrdinalGame, player: str, rank: int) -> OrdinalGame:
    """Tie two adjoining payoffs (rank and rank+1) for one player.

    The result is canonical and sits between the input and the
    corresponding full swap in the lattice.
    """
    vec = game.row_ranks if player == "Row" else game.col_ranks
    if rank not in vec or rank + 1 not in vec:
        raise RankAbsent(
            f"{player} player holds no adjacent pair {rank},{rank + 1} in {vec}"
        )
    if player == "Row":
        tied = OrdinalGame(_merge(game.row_ranks, rank), game.col_ranks)
    else:
        tied = OrdinalGame(game.row_ranks, _merge(game.col_ranks, rank))
    return canonical_game(tied)


def break_tie(game: OrdinalGame, player: str, value: int) -> set[OrdinalGame]:
    """All one-step refinements of a tied value for one player.

    The tied group splits into a lower and an upper part (every
    non-trivial bipartition), after which ranks are re-densified; each
    result re-ties to the input via one make_tie.
    """
    vec = game.row_ranks if player == "Row" else game.col_ranks
    group = [i for i, v in enumerate(vec) if v == value]
    if len(group) < 2:
        raise RankNotTied(f"{player} value {value} is not tied in {vec}")
    results: set[OrdinalGame] = set()
    for mask in range(1, 2 ** len(group) - 1):
        raised = {group[i] for i in range(len(group)) if mask >> i & 1}
        refined = tuple(
            v + 1 if (v > value or i in raised) else v for i, v in enumerate(vec)
        )
        if player == "Row":
            split = OrdinalGame(refined, game.col_ranks)  # type: ignore[arg-type]
        else:
            split = OrdinalGame(game.row_ranks, refined)  # type: ignore[arg-type]
        results.add(canonical_game(split))
    return results


@dataclass(frozen=True)
class TiesCensus:
    """Counts of canonical games by (row class, column class)."""

    matrix: dict[tuple[PreferenceClass, PreferenceClass], int]
    total: int
    player_swap_total: int

    def row(self, row_class: PreferenceClass) -> tuple[int, ...]:
        return tuple(self.matrix.get((row_class, c), 0) for c in CLASS_ORDER)


@dataclass(frozen=True)
class HalfSwapStep:
    """One lattice move: 'make' merges ranks (rank, rank+1); 'break'
    splits the group holding ``rank`` in the source game."""

    action: str
    player: str
    rank: int
    target: OrdinalGame


@dataclass(frozen=True)
class NaturalOrderCoordinate:
    """Block on the 8x8 class grid plus a deterministic slot inside it.

    Class indices ascend toward the northeast: 1 (no preferences) up to
    8 (strict).  Within the strict block games sit in id order; other
    blocks order lexicographically by canonical matrix.
    """

    row_class_index: int
    col_class_index: int
    within_block: int


def _game_key(game: OrdinalGame) -> tuple[Ranks, Ranks]:
    return (game.row_ranks, game.col_ranks)


class TieLattice:
    """All 1413 canonical games joined by half-swap moves."""

    def __init__(self, atlas: Optional[TopologyAtlas] = None):
        self.atlas = atlas if atlas is not None else build_atlas()
        rankings = all_dense_rankings()
        nodes = {
            canonical_game(OrdinalGame(row, col))
            for row in rankings
            for col in rankings
        }
        self.nodes: list[OrdinalGame] = sorted(nodes, key=_game_key)
        self._adjacency: dict[OrdinalGame, list[OrdinalGame]] = {
            g: [] for g in self.nodes
        }
        for g in self.nodes:
            for neighbor in self._make_neighbors(g):
                if neighbor not in self._adjacency[g]:
                    self._adjacency[g].append(neighbor)
                if g not in self._adjacency[neighbor]:
                    self._adjacency[neighbor].append(g)
        for g in self.nodes:
            self._adjacency[g].sort(key=_game_key)
        self._blocks: dict[tuple[int, int], list[OrdinalGame]] = {}
        for g in self.nodes:
            pair = (
                preference_class(g.row_ranks).index,
                preference_class(g.col_ranks).index,
            )
            self._blocks.setdefault(pair, []).append(g)
        strict_block = self._blocks[(8, 8)]
        strict_block.sort(key=self.atlas.locate)
        for pair, members in self._blocks.items():
            if pair != (8, 8):
                members.sort(key=_game_key)

    def _make_neighbors(self, game: OrdinalGame) -> list[OrdinalGame]:
        out = []
        for player, vec in (("Row", game.row_ranks), ("Col", game.col_ranks)):
            for rank in range(1, max(vec)):
                out.append(make_tie(game, player, rank))
        return out

    def canonical(self, game: OrdinalGame) -> OrdinalGame:
        return canonical_game(game)

    def edges(self) -> list[tuple[OrdinalGame, OrdinalGame]]:
        out = []
        for g in self.nodes:
            for h in self._adjacency[g]:
                if _game_key(g) < _game_key(h):
                    out.append((g, h))
        return out

    def half_swap_path(
        self, start: OrdinalGame, goal: OrdinalGame
    ) -> list[HalfSwapStep]:
        """Minimum-length half-swap path, breadth-first, ties broken by
        canonical-game ordering of the expansion."""
        start = canonical_game(start)
        goal = canonical_game(goal)
        if start == goal:
            return []
        parents: dict[OrdinalGame, OrdinalGame] = {start: start}
        frontier = deque([start])
        while frontier:
            current = frontier.popleft()
            for neighbor in self._adjacency[current]:
                if neighbor in parents:
                    continue
                parents[neighbor] = current
                if neighbor == goal:
                    chain = [goal]
                    while chain[-1] != start:
                        chain.append(parents[chain[-1]])
                    chain.reverse()
                    return [
                        self._describe_step(a, b)
                        for a, b in zip(chain, chain[1:])
                    ]
                frontier.append(neighbor)
        raise AssertionError("half-swap lattice is connected")  # pragma: no cover

    def _describe_step(self, source: OrdinalGame, target: OrdinalGame) -> HalfSwapStep:
        for player, vec in (("Row", source.row_ranks), ("Col", source.col_ranks)):
            for rank in range(1, max(vec)):
                if make_tie(source, player, rank) == target:
                    return HalfSwapStep("make", player, rank, target)
        for player, vec in (("Row", source.row_ranks), ("Col", source.col_ranks)):
            for value in set(vec):
                if vec.count(value) < 2:
                    continue
                if target in break_tie(source, player, value):
                    return HalfSwapStep("break", player, value, target)
        raise AssertionError(f"no single half-swap from {source} to {target}")

    def natural_order_coordinate(self, game: OrdinalGame) -> NaturalOrderCoordinate:
        game = canonical_game(game)
        pair = (
            preference_class(game.row_ranks).index,
            preference_class(game.col_ranks).index,
        )
        return NaturalOrderCoordinate(
            pair[0], pair[1], self._blocks[pair].index(game) + 1
        )

    def block(self, row_class_index: int, col_class_index: int) -> list[OrdinalGame]:
        return list(self._blocks.get((row_class_index, col_class_index), []))


def enumerate_ties_census() -> TiesCensus:
    """Counts of canonical games per class pair, matching the published
    8x8 matrix (total 1413), plus the player-swap-reduced total (726)."""
    rankings = all_dense_rankings()
    matrix: dict[tuple[PreferenceClass, PreferenceClass], int] = {}
    seen: set[tuple[Ranks, Ranks]] = set()
    seen_swap: set[tuple[Ranks, Ranks]] = set()
    total = 0
    swap_total = 0
    for row in rankings:
        row_class = preference_class(row)
        for col in rankings:
            game = OrdinalGame(row, col)
            orbit = {
                _game_key(apply_flips(game, rf, cf))
                for rf in (False, True)
                for cf in (False, True)
            }
            key = _game_key(game)
            if key not in seen:
                seen.update(orbit)
                total += 1
                pair = (row_class, preference_class(col))
                matrix[pair] = matrix.get(pair, 0) + 1
            if key not in seen_swap:
                full_orbit = set(orbit)
                for member in orbit:
                    swapped = transpose_players(OrdinalGame(*member))
                    full_orbit.update(
                        _game_key(apply_flips(swapped, rf, cf))
                        for rf in (False, True)
                        for cf in (False, True)
                    )
                seen_swap.update(full_orbit)
                swap_total += 1
    return TiesCensus(matrix, total, swap_total)


@lru_cache(maxsize=1)
def default_lattice() -> TieLattice:
    """A shared lattice instance for callers that do not manage one."""
    return TieLattice()


def natural_order_coordinate(
    game: OrdinalGame, lattice: Optional[TieLattice] = None
) -> NaturalOrderCoordinate:
    return (lattice or default_lattice()).natural_order_coordinate(game)
