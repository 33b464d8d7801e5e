"""Mapping real-valued 2x2 games into the ordinal atlas.

Ranking uses gap chaining: after sorting a player's four values,
consecutive values whose gap is at most the tolerance join one tie
group.  Unit payoffs are per-player min-max rescalings, so the ordinal
class together with the unit values is invariant under positive affine
transformations of either player's payoffs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .games import Cell, CELLS, OrdinalGame, Quadrant, Ranks, canonicalize, make_game
from .atlas import StrictGameId, TopologyAtlas, build_atlas

Values = tuple[float, float, float, float]


def _validate_values(values) -> Values:
    vec = tuple(float(v) for v in values)
    if len(vec) != 4:
        raise ValueError(f"expected 4 cell values, got {len(vec)}")
    if not all(math.isfinite(v) for v in vec):
        raise ValueError(f"payoffs must be finite: {vec!r}")
    return vec  # type: ignore[return-value]


@dataclass(frozen=True)
class RealGame:
    """Four cells of (row value, column value) plus a tie tolerance."""

    row_values: Values
    col_values: Values
    tie_tolerance: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "row_values", _validate_values(self.row_values))
        object.__setattr__(self, "col_values", _validate_values(self.col_values))
        if not (math.isfinite(self.tie_tolerance) and self.tie_tolerance >= 0):
            raise ValueError(f"tie tolerance must be >= 0: {self.tie_tolerance}")


@dataclass(frozen=True)
class NormalizedGame:
    """Ordinal class of a real game plus unit-square payoffs.

    Per player the unit values are (v - min) / (max - min); a totally
    indifferent player maps to 0.5 everywhere.  Cell order matches the
    canonicalized ordinal game.
    """

    ordinal: OrdinalGame
    unit_payoffs: tuple[tuple[float, float], ...]
    quadrant: Quadrant


def rank_with_ties(values, tolerance: float = 0.0) -> Ranks:
    """Dense ranks (1 = worst) with gap-chained tie groups.

    Consecutive sorted values belong to one group when their gap is at
    most ``tolerance``; chaining makes the grouping transitive and
    monotone in the tolerance.
    """
    vec = _validate_values(values)
    if tolerance < 0:
        raise ValueError("tolerance must be >= 0")
    order = sorted(range(4), key=lambda i: vec[i])
    ranks = [0, 0, 0, 0]
    current = 1
    ranks[order[0]] = 1
    for prev, here in zip(order, order[1:]):
        if vec[here] - vec[prev] > tolerance:
            current += 1
        ranks[here] = current
    return tuple(ranks)  # type: ignore[return-value]


def _unit_scale(vec: Values) -> tuple[float, float, float, float]:
    lo, hi = min(vec), max(vec)
    if hi == lo:
        return (0.5, 0.5, 0.5, 0.5)
    return tuple((v - lo) / (hi - lo) for v in vec)  # type: ignore[return-value]


def normalize_game(game: RealGame) -> NormalizedGame:
    """Reduce a real-valued game to its canonical ordinal class with
    unit payoffs carried through the same reorientation."""
    row_ranks = rank_with_ties(game.row_values, game.tie_tolerance)
    col_ranks = rank_with_ties(game.col_values, game.tie_tolerance)
    form = canonicalize(make_game(row_ranks, col_ranks))
    row_units = _unit_scale(game.row_values)
    col_units = _unit_scale(game.col_values)
    unit_game_rows = _apply_cell_flips(row_units, form.row_flipped, form.col_flipped)
    unit_game_cols = _apply_cell_flips(col_units, form.row_flipped, form.col_flipped)
    units = tuple(zip(unit_game_rows, unit_game_cols))
    return NormalizedGame(form.game, units, form.quadrant)


def _apply_cell_flips(values: Values, row_flip: bool, col_flip: bool) -> Values:
    out = list(values)
    if row_flip:
        out = [out[2], out[3], out[0], out[1]]
    if col_flip:
        out = [out[1], out[0], out[3], out[2]]
    return tuple(out)  # type: ignore[return-value]


def order_graph_points(
    normalized: NormalizedGame,
) -> list[tuple[Cell, float, float]]:
    """The four outcomes as unit-square points (row payoff, col payoff).

    Symmetric games give point sets mirrored across the diagonal; games
    of pure common interest sit on it, fixed-sum games on the
    anti-diagonal.
    """
    return [
        (cell, normalized.unit_payoffs[cell][0], normalized.unit_payoffs[cell][1])
        for cell in CELLS
    ]


@dataclass(frozen=True)
class SampleCensus:
    counts: dict[StrictGameId, int]
    ties_hit: int
    n: int
    seed: int
    distribution: str


def sample_census(
    n: int,
    seed: int,
    distribution: str = "uniform",
    atlas: Optional[TopologyAtlas] = None,
) -> SampleCensus:
    """Locate ``n`` random real games in the atlas and count per id.

    Cell values are drawn i.i.d. (uniform on [0,1) or standard normal)
    and ranked with zero tolerance.  Samples where floating-point
    collisions produce a tie are tallied separately.  Deterministic for
    a given seed; sampling is a single sequential pass, so results do
    not depend on any worker pool.
    """
    if n <= 0:
        raise ValueError("sample count must be positive")
    if distribution not in ("uniform", "gaussian"):
        raise ValueError(f"unknown distribution: {distribution!r}")
    atlas = atlas if atlas is not None else build_atlas()

    from itertools import permutations

    id_by_vectors: dict[tuple[Ranks, Ranks], StrictGameId] = {}
    for row in permutations((1, 2, 3, 4)):
        for col in permutations((1, 2, 3, 4)):
            game = OrdinalGame(row, col)
            id_by_vectors[(row, col)] = atlas.locate(game)

    rng = np.random.default_rng(seed)
    if distribution == "uniform":
        draws = rng.random((n, 8))
    else:
        draws = rng.standard_normal((n, 8))
    rows, cols = draws[:, :4], draws[:, 4:]
    row_ranks = rows.argsort(axis=1).argsort(axis=1) + 1
    col_ranks = cols.argsort(axis=1).argsort(axis=1) + 1
    tie_mask = (
        (np.diff(np.sort(rows, axis=1), axis=1) == 0).any(axis=1)
        | (np.diff(np.sort(cols, axis=1), axis=1) == 0).any(axis=1)
    )

    counts: Counter = Counter()
    ties_hit = int(tie_mask.sum())
    for i in np.flatnonzero(~tie_mask):
        key = (tuple(row_ranks[i]), tuple(col_ranks[i]))
        counts[id_by_vectors[key]] += 1
    return SampleCensus(dict(counts), ties_hit, n, seed, distribution)
