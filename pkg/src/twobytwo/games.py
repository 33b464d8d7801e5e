"""2x2 ordinal games and their per-game solution concepts.

A game is a pair of rank vectors, one per player, indexed by the four
cells UL, UR, DL, DR (row move U/D, column move L/R).  Ranks are dense:
each player's values are exactly 1..k for some k between 1 (total
indifference) and 4 (strict preferences).  All values here are immutable
and every operation is a pure function, so concurrent use needs no
coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Optional

from .errors import InvalidRanking

Ranks = tuple[int, int, int, int]


class Cell(IntEnum):
    """A strategy profile, i.e. one cell of the 2x2 matrix."""

    UL = 0
    UR = 1
    DL = 2
    DR = 3

    @property
    def row_move(self) -> str:
        return "U" if self in (Cell.UL, Cell.UR) else "D"

    @property
    def col_move(self) -> str:
        return "L" if self in (Cell.UL, Cell.DL) else "R"

    @property
    def row_deviation(self) -> "Cell":
        """Cell reached when the row player unilaterally switches moves."""
        return Cell(self ^ 2)

    @property
    def col_deviation(self) -> "Cell":
        """Cell reached when the column player unilaterally switches moves."""
        return Cell(self ^ 1)


CELLS = (Cell.UL, Cell.UR, Cell.DL, Cell.DR)


class Alignment(Enum):
    PURE_COMMON = "PureCommon"
    PURE_CONFLICT = "PureConflict"
    MIXED = "Mixed"


class Quadrant(Enum):
    """Orientation of a game relative to the canonical convention.

    The canonical convention places the row player's best outcome in the
    right (east) column and the column player's best in the top (north)
    row; the quadrant letter pair records where the input had them.
    """

    NE = "NE"
    NW = "NW"
    SE = "SE"
    SW = "SW"


def validate_ranks(values: Iterable[int]) -> Ranks:
    """Check a four-cell dense ranking; raise InvalidRanking otherwise."""
    vec = tuple(values)
    if len(vec) != 4:
        raise InvalidRanking(f"expected 4 cell ranks, got {len(vec)}")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in vec):
        raise InvalidRanking(f"ranks must be integers: {vec!r}")
    distinct = set(vec)
    if distinct != set(range(1, len(distinct) + 1)):
        raise InvalidRanking(
            f"ranks must be dense (every value 1..k present): {vec!r}"
        )
    return vec  # type: ignore[return-value]


@dataclass(frozen=True, order=True)
class OrdinalGame:
    """Two dense rank vectors in cell order (UL, UR, DL, DR).

    Value semantics: two games are equal exactly when all eight cell
    ranks agree.
    """

    row_ranks: Ranks
    col_ranks: Ranks

    def rank_pair(self, cell: Cell) -> tuple[int, int]:
        return (self.row_ranks[cell], self.col_ranks[cell])

    @property
    def is_strict(self) -> bool:
        return set(self.row_ranks) == {1, 2, 3, 4} and set(self.col_ranks) == {1, 2, 3, 4}

    def __str__(self) -> str:
        r, c = self.row_ranks, self.col_ranks
        return (
            f"game({r[0]},{c[0]};{r[1]},{c[1]}/{r[2]},{c[2]};{r[3]},{c[3]})"
        )


def make_game(row_ranks: Iterable[int], col_ranks: Iterable[int]) -> OrdinalGame:
    """Build a game from two dense rankings, rejecting malformed input."""
    return OrdinalGame(validate_ranks(row_ranks), validate_ranks(col_ranks))


PRISONERS_DILEMMA = OrdinalGame((1, 3, 2, 4), (4, 3, 2, 1))

# Cell permutations for the strategy-relabeling flip group.
_ROW_FLIP = (2, 3, 0, 1)  # exchange rows U and D
_COL_FLIP = (1, 0, 3, 2)  # exchange columns L and R
_MIRROR = (0, 2, 1, 3)  # reflect across the main diagonal (UR <-> DL)


def _permute(vec: Ranks, perm: tuple[int, int, int, int]) -> Ranks:
    return (vec[perm[0]], vec[perm[1]], vec[perm[2]], vec[perm[3]])


def apply_flips(game: OrdinalGame, row_flip: bool, col_flip: bool) -> OrdinalGame:
    """Relabel strategies: swap rows and/or columns for both players."""
    row, col = game.row_ranks, game.col_ranks
    if row_flip:
        row, col = _permute(row, _ROW_FLIP), _permute(col, _ROW_FLIP)
    if col_flip:
        row, col = _permute(row, _COL_FLIP), _permute(col, _COL_FLIP)
    return OrdinalGame(row, col)


def transpose_players(game: OrdinalGame) -> OrdinalGame:
    """Exchange the roles of the row and column players.

    The new row player's rank at a cell is the old column player's rank
    at the mirrored cell (U<->L, D<->R across the main diagonal).  An
    involution; the result is generally not in canonical orientation.
    """
    return OrdinalGame(
        _permute(game.col_ranks, _MIRROR), _permute(game.row_ranks, _MIRROR)
    )


@dataclass(frozen=True)
class CanonicalForm:
    game: OrdinalGame
    quadrant: Quadrant
    row_flipped: bool
    col_flipped: bool


def canonicalize(game: OrdinalGame) -> CanonicalForm:
    """Orient a game canonically and report the flips that were needed.

    Strict games: flip columns until the row player's 4 sits in the east
    column and flip rows until the column player's 4 sits in the north
    row; the quadrant names where the input had them (no flips -> NE).
    Games with ties lack a unique 4 for some player, so the
    representative is instead the lexicographically least matrix over
    the four flips, comparing row ranks then column ranks in cell order;
    such games report quadrant NE.  Idempotent either way.
    """
    if game.is_strict:
        col_flip = game.row_ranks.index(4) in (Cell.UL, Cell.DL)
        row_flip = game.col_ranks.index(4) in (Cell.DL, Cell.DR)
        quadrant = Quadrant[("S" if row_flip else "N") + ("W" if col_flip else "E")]
        return CanonicalForm(
            apply_flips(game, row_flip, col_flip), quadrant, row_flip, col_flip
        )
    best: Optional[tuple[OrdinalGame, bool, bool]] = None
    for row_flip in (False, True):
        for col_flip in (False, True):
            candidate = apply_flips(game, row_flip, col_flip)
            if best is None or (candidate.row_ranks, candidate.col_ranks) < (
                best[0].row_ranks,
                best[0].col_ranks,
            ):
                best = (candidate, row_flip, col_flip)
    assert best is not None
    return CanonicalForm(best[0], Quadrant.NE, best[1], best[2])


def canonical_game(game: OrdinalGame) -> OrdinalGame:
    """Shorthand for the canonical representative alone."""
    return canonicalize(game).game


def pure_nash(game: OrdinalGame) -> frozenset[Cell]:
    """Profiles from which no player can strictly improve unilaterally.

    Weak equilibrium: with ties, an indifferent deviation does not
    disqualify a profile.
    """
    row, col = game.row_ranks, game.col_ranks
    return frozenset(
        c
        for c in CELLS
        if row[c] >= row[c.row_deviation] and col[c] >= col[c.col_deviation]
    )


@dataclass(frozen=True)
class Dominance:
    """A dominant strategy: weakly better against both opposing moves,
    strictly against at least one.  ``strict`` means strictly better
    against both."""

    move: str
    strict: bool


def _dominance(a_first: int, a_second: int, b_first: int, b_second: int,
               first_name: str, second_name: str) -> Optional[Dominance]:
    d1, d2 = a_first - b_first, a_second - b_second
    if d1 >= 0 and d2 >= 0 and (d1 > 0 or d2 > 0):
        return Dominance(first_name, d1 > 0 and d2 > 0)
    if d1 <= 0 and d2 <= 0 and (d1 < 0 or d2 < 0):
        return Dominance(second_name, d1 < 0 and d2 < 0)
    return None


def row_dominance(row_ranks: Ranks) -> Optional[Dominance]:
    """Row player's dominant move; depends on the row vector alone."""
    return _dominance(
        row_ranks[Cell.UL], row_ranks[Cell.UR],
        row_ranks[Cell.DL], row_ranks[Cell.DR], "U", "D",
    )


def col_dominance(col_ranks: Ranks) -> Optional[Dominance]:
    """Column player's dominant move; depends on the column vector alone."""
    return _dominance(
        col_ranks[Cell.UL], col_ranks[Cell.DL],
        col_ranks[Cell.UR], col_ranks[Cell.DR], "L", "R",
    )


def dominant_strategies(
    game: OrdinalGame,
) -> tuple[Optional[Dominance], Optional[Dominance]]:
    return row_dominance(game.row_ranks), col_dominance(game.col_ranks)


@dataclass(frozen=True)
class Maximin:
    """Each player's strategy maximizing their worst-case rank.

    Ties between the two strategies break toward U (row) and L (column)
    and are reported via the ``*_tied`` flags.
    """

    row_move: str
    col_move: str
    row_guarantee: int
    col_guarantee: int
    row_tied: bool
    col_tied: bool


def maximin(game: OrdinalGame) -> Maximin:
    row, col = game.row_ranks, game.col_ranks
    u = min(row[Cell.UL], row[Cell.UR])
    d = min(row[Cell.DL], row[Cell.DR])
    left = min(col[Cell.UL], col[Cell.DL])
    r = min(col[Cell.UR], col[Cell.DR])
    return Maximin(
        row_move="U" if u >= d else "D",
        col_move="L" if left >= r else "R",
        row_guarantee=max(u, d),
        col_guarantee=max(left, r),
        row_tied=u == d,
        col_tied=left == r,
    )


def pareto_optimal(game: OrdinalGame) -> frozenset[Cell]:
    """Cells not weakly dominated by another cell (at least as good for
    both players, strictly better for one)."""
    def dominated(c: Cell) -> bool:
        rc, cc = game.rank_pair(c)
        for other in CELLS:
            if other is c:
                continue
            ro, co = game.rank_pair(other)
            if ro >= rc and co >= cc and (ro > rc or co > cc):
                return True
        return False

    return frozenset(c for c in CELLS if not dominated(c))


def is_symmetric(game: OrdinalGame) -> bool:
    """True when the game equals its player transposition after
    canonical orientation."""
    return canonical_game(transpose_players(game)) == canonical_game(game)


def alignment(game: OrdinalGame) -> Alignment:
    if game.row_ranks == game.col_ranks:
        return Alignment.PURE_COMMON
    sums = {r + c for r, c in zip(game.row_ranks, game.col_ranks)}
    if len(sums) == 1:
        return Alignment.PURE_CONFLICT
    return Alignment.MIXED


@dataclass(frozen=True)
class AnalysisReport:
    nash_profiles: frozenset[Cell]
    nash_payoffs: frozenset[tuple[int, int]]
    dominant_row: Optional[Dominance]
    dominant_col: Optional[Dominance]
    pareto_optimal: frozenset[Cell]
    pareto_inferior_equilibria: frozenset[Cell]
    maximin: Maximin
    symmetric: bool
    alignment: Alignment


def analyze_game(game: OrdinalGame) -> AnalysisReport:
    """Full per-game report: equilibria, dominance, Pareto status,
    maximin, symmetry, and interest alignment."""
    nash = pure_nash(game)
    optimal = pareto_optimal(game)

    def inferior(c: Cell) -> bool:
        rc, cc = game.rank_pair(c)
        return any(
            ro >= rc and co >= cc and (ro > rc or co > cc)
            for ro, co in (game.rank_pair(o) for o in CELLS if o is not c)
        )

    return AnalysisReport(
        nash_profiles=nash,
        nash_payoffs=frozenset(game.rank_pair(c) for c in nash),
        dominant_row=row_dominance(game.row_ranks),
        dominant_col=col_dominance(game.col_ranks),
        pareto_optimal=optimal,
        pareto_inferior_equilibria=frozenset(c for c in nash if inferior(c)),
        maximin=maximin(game),
        symmetric=is_symmetric(game),
        alignment=alignment(game),
    )
