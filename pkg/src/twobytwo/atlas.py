"""The swap topology of the 144 canonical strict 2x2 ordinal games.

Adjacent-rank swaps connect games: 1<->2 (Low) swaps stay inside a tile
of four games, 2<->3 (Mid) swaps link tiles so each layer of 36 games is
a 6x6 torus, and 3<->4 (High) swaps move between the four layers.  Games
carry layer-row-column ids with Prisoner's Dilemma at 111.

The id assignment is derived, not tabulated.  Within a layer the six
row-player rank vectors form a hexagonal cycle under alternating Mid and
Low swaps; the numbering is pinned by three constraints that determine
it uniquely:

  * rows 1-3 are exactly the rows whose row player has a dominant
    strategy (likewise columns 1-3 for the column player),
  * consecutive rows r, r+1 differ by a single row-player swap,
    alternating Mid (1-2, 3-4, 5-6) and Low (2-3, 4-5, 6-1),
  * the row index depends only on the row player's rank vector, the
    column index only on the column player's.

Layer 1 holds the games whose two best outcomes are diagonally opposite
(Prisoner's Dilemma among them), layer 3 the games whose best outcomes
share a cell, and layers 2 and 4 the remaining mirror-image pair, with
layer 2 the one placing both best outcomes in the east column.  Tiles
are the Low-swap-closed blocks, which under this numbering are the
row/column index pairs {1,6}, {2,3}, {4,5}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Callable, Iterable, NamedTuple, Optional

from .errors import ConstructionInvariantViolation, NotStrict, Unreachable
from .games import (
    CELLS,
    Cell,
    OrdinalGame,
    PRISONERS_DILEMMA,
    Ranks,
    canonical_game,
    col_dominance,
    pure_nash,
    row_dominance,
    transpose_players,
)


class PlayerAxis(Enum):
    ROW = "Row"
    COL = "Col"


class SwapKind(Enum):
    LOW = "Low"
    MID = "Mid"
    HIGH = "High"

    @property
    def lower_rank(self) -> int:
        """The smaller of the two adjacent ranks this swap exchanges."""
        return {"Low": 1, "Mid": 2, "High": 3}[self.value]


_AXIS_ORDER = (PlayerAxis.ROW, PlayerAxis.COL)
_KIND_ORDER = (SwapKind.LOW, SwapKind.MID, SwapKind.HIGH)

# Deterministic edge expansion order: Row before Col, Low < Mid < High.
EDGE_ORDER = tuple((axis, kind) for axis in _AXIS_ORDER for kind in _KIND_ORDER)


@dataclass(frozen=True)
class SwapEdge:
    player: PlayerAxis
    kind: SwapKind

    def sort_key(self) -> tuple[int, int]:
        return (_AXIS_ORDER.index(self.player), _KIND_ORDER.index(self.kind))

    def __str__(self) -> str:
        return f"{self.player.value}-{self.kind.value}"


class StrictGameId(NamedTuple):
    layer: int
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.layer}{self.row}{self.col}"

    @classmethod
    def from_string(cls, text: str) -> "StrictGameId":
        if len(text) != 3 or not text.isdigit():
            raise ValueError(f"not a layer-row-column id: {text!r}")
        layer, row, col = (int(ch) for ch in text)
        if not (1 <= layer <= 4 and 1 <= row <= 6 and 1 <= col <= 6):
            raise ValueError(f"id out of range: {text!r}")
        return cls(layer, row, col)


class TileId(NamedTuple):
    layer: int
    tile_row: int
    tile_col: int

    def __str__(self) -> str:
        return f"t{self.layer}{self.tile_row}{self.tile_col}"


@dataclass(frozen=True)
class PathStep:
    edge: SwapEdge
    target: StrictGameId


def _swap_ranks(vec: Ranks, lower: int) -> Ranks:
    """Exchange the cells holding ranks ``lower`` and ``lower + 1``."""
    upper = lower + 1
    return tuple(
        upper if v == lower else lower if v == upper else v for v in vec
    )  # type: ignore[return-value]


def apply_swap(game: OrdinalGame, player: PlayerAxis, kind: SwapKind) -> OrdinalGame:
    """Swap two adjacent ranks for one player and re-canonicalize.

    An involution on canonical strict games.  Tie games are rejected;
    moving between tie games is the half-swap lattice's job.
    """
    if not game.is_strict:
        raise NotStrict(f"swaps require a strict game: {game}")
    r = kind.lower_rank
    if player is PlayerAxis.ROW:
        swapped = OrdinalGame(_swap_ranks(game.row_ranks, r), game.col_ranks)
    else:
        swapped = OrdinalGame(game.row_ranks, _swap_ranks(game.col_ranks, r))
    return canonical_game(swapped)


# Tile blocks: the Low-swap-closed index pairs.
_TILE_PAIRS = ((1, 6), (2, 3), (4, 5))


def _tile_index(row_or_col: int) -> int:
    return ((row_or_col % 6) // 2) + 1


def _hexagon_numbering(
    four_cell: Cell, dominant: Callable[[Ranks], bool]
) -> list[Ranks]:
    """Order the six rank vectors sharing a 4-position into index 1..6.

    The vectors form a cycle under alternating Mid/Low swaps; exactly one
    rotation/direction puts the three dominant-strategy vectors at 1-3
    with the required edge pattern (1-Mid-2-Low-3-...-6-Low-1).
    """
    others = [c for c in CELLS if c is not four_cell]
    vectors: list[Ranks] = []
    for perm in permutations((1, 2, 3)):
        vec = [0, 0, 0, 0]
        vec[four_cell] = 4
        for cell, value in zip(others, perm):
            vec[cell] = value
        vectors.append(tuple(vec))  # type: ignore[arg-type]

    def low(v: Ranks) -> Ranks:
        return _swap_ranks(v, 1)

    def mid(v: Ranks) -> Ranks:
        return _swap_ranks(v, 2)

    starts = [
        v for v in vectors if dominant(v) and dominant(mid(v)) and not dominant(low(v))
    ]
    if len(starts) != 1:
        raise ConstructionInvariantViolation(
            f"row/column numbering not uniquely pinned for 4@{four_cell.name}: {starts}"
        )
    sequence = [starts[0]]
    for op in (mid, low, mid, low, mid):
        sequence.append(op(sequence[-1]))
    if low(sequence[-1]) != sequence[0] or len(set(sequence)) != 6:
        raise ConstructionInvariantViolation("hexagon cycle failed to close")
    if [dominant(v) for v in sequence] != [True] * 3 + [False] * 3:
        raise ConstructionInvariantViolation("dominance block not at indices 1-3")
    return sequence


# Positions of the two 4s per layer: (row player's, column player's).
_LAYER_FOURS: dict[int, tuple[Cell, Cell]] = {
    1: (Cell.DR, Cell.UL),
    2: (Cell.DR, Cell.UR),
    3: (Cell.UR, Cell.UR),
    4: (Cell.UR, Cell.UL),
}

LAYERS = (1, 2, 3, 4)
INDICES = (1, 2, 3, 4, 5, 6)


class TopologyAtlas:
    """Immutable graph of the 144 canonical strict games.

    Built once by :func:`build_atlas`; all queries are read-only.
    """

    def __init__(
        self,
        games: dict[StrictGameId, OrdinalGame],
        neighbor_map: dict[StrictGameId, tuple[tuple[SwapEdge, StrictGameId], ...]],
        hotspots: list[tuple[TileId, TileId]],
        pipes: list[tuple[TileId, TileId, TileId, TileId]],
        row_vectors: dict[int, list[Ranks]],
        col_vectors: dict[int, list[Ranks]],
    ):
        self._games = games
        self._ids = {g: i for i, g in games.items()}
        self._neighbors = neighbor_map
        self.hotspots = hotspots
        self.pipes = pipes
        self.row_vectors = row_vectors  # layer -> six row-player vectors
        self.col_vectors = col_vectors

    @property
    def games(self) -> list[tuple[StrictGameId, OrdinalGame]]:
        return sorted(self._games.items())

    @property
    def ids(self) -> list[StrictGameId]:
        return sorted(self._games)

    @property
    def edges(self) -> list[tuple[StrictGameId, StrictGameId, SwapEdge]]:
        """Each undirected labeled edge exactly once."""
        out = []
        for gid in self.ids:
            for edge, target in self._neighbors[gid]:
                if gid < target:
                    out.append((gid, target, edge))
        return out

    def resolve(self, gid: StrictGameId) -> OrdinalGame:
        try:
            return self._games[StrictGameId(*gid)]
        except KeyError:
            raise KeyError(f"no such game id: {gid}") from None

    def locate(self, game: OrdinalGame) -> StrictGameId:
        """Id of a strict game, canonicalizing first."""
        if not game.is_strict:
            raise NotStrict(f"only strict games carry layer-row-column ids: {game}")
        return self._ids[canonical_game(game)]

    def neighbors(
        self, gid: StrictGameId
    ) -> tuple[tuple[SwapEdge, StrictGameId], ...]:
        """The six swap neighbors in deterministic edge order."""
        return self._neighbors[StrictGameId(*gid)]

    def tile_of(self, gid: StrictGameId) -> TileId:
        return TileId(gid.layer, _tile_index(gid.row), _tile_index(gid.col))

    def tile_games(self, tile: TileId) -> list[StrictGameId]:
        rows = _TILE_PAIRS[tile.tile_row - 1]
        cols = _TILE_PAIRS[tile.tile_col - 1]
        return sorted(
            StrictGameId(tile.layer, r, c) for r in rows for c in cols
        )

    def tiles(self) -> list[TileId]:
        return sorted(
            TileId(layer, tr, tc) for layer in LAYERS for tr in (1, 2, 3) for tc in (1, 2, 3)
        )

    def layer_games(self, layer: int) -> list[tuple[StrictGameId, OrdinalGame]]:
        return [(i, g) for i, g in self.games if i.layer == layer]

    def shortest_path(
        self,
        start: StrictGameId,
        goal: StrictGameId,
        kinds: Iterable[SwapKind] = _KIND_ORDER,
    ) -> list[PathStep]:
        """Minimum-length swap path using only the allowed kinds.

        Breadth-first with deterministic tie-breaking: neighbors expand
        in edge order (Row before Col, Low < Mid < High), first
        discovery wins.
        """
        allowed = frozenset(kinds)
        if not allowed:
            raise ValueError("allowed swap kinds must be non-empty")
        start, goal = StrictGameId(*start), StrictGameId(*goal)
        self.resolve(start), self.resolve(goal)
        if start == goal:
            return []
        parents: dict[StrictGameId, tuple[StrictGameId, SwapEdge]] = {}
        frontier = deque([start])
        seen = {start}
        while frontier:
            current = frontier.popleft()
            for edge, target in self._neighbors[current]:
                if edge.kind not in allowed or target in seen:
                    continue
                seen.add(target)
                parents[target] = (current, edge)
                if target == goal:
                    steps: list[PathStep] = []
                    node = goal
                    while node != start:
                        prev, via = parents[node]
                        steps.append(PathStep(via, node))
                        node = prev
                    return list(reversed(steps))
                frontier.append(target)
        raise Unreachable(
            f"no path from {start} to {goal} using kinds "
            f"{{{', '.join(sorted(k.value for k in allowed))}}}"
        )


def hotspots_and_pipes(
    atlas: TopologyAtlas,
) -> tuple[list[tuple[TileId, TileId]], list[tuple[TileId, TileId, TileId, TileId]]]:
    """The High-swap structure lifted to tile level."""
    return atlas.hotspots, atlas.pipes


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ConstructionInvariantViolation(message)


def _enumerate_canonical_strict() -> set[OrdinalGame]:
    out = set()
    for row in permutations((1, 2, 3, 4)):
        for col in permutations((1, 2, 3, 4)):
            out.add(canonical_game(OrdinalGame(row, col)))
    return out


def _detect_tile_structure(
    atlas_games: dict[StrictGameId, OrdinalGame],
    locate: Callable[[OrdinalGame], StrictGameId],
) -> tuple[list[tuple[TileId, TileId]], list[tuple[TileId, TileId, TileId, TileId]]]:
    def tile_of(gid: StrictGameId) -> TileId:
        return TileId(gid.layer, _tile_index(gid.row), _tile_index(gid.col))

    all_tiles = sorted({tile_of(gid) for gid in atlas_games})
    _check(len(all_tiles) == 36, "expected 36 tiles")

    high_target: dict[tuple[TileId, PlayerAxis], TileId] = {}
    members: dict[TileId, list[StrictGameId]] = {}
    for gid in atlas_games:
        members.setdefault(tile_of(gid), []).append(gid)
    for tile, gids in members.items():
        _check(len(gids) == 4, f"tile {tile} does not hold 4 games")
        for axis in _AXIS_ORDER:
            targets = {
                tile_of(locate(apply_swap(atlas_games[g], axis, SwapKind.HIGH)))
                for g in gids
            }
            _check(
                len(targets) == 1,
                f"tile slice {tile} scatters across layers under {axis.value}-High",
            )
            high_target[(tile, axis)] = targets.pop()

    hotspots = []
    hotspot_tiles = set()
    for tile in all_tiles:
        partner = high_target[(tile, PlayerAxis.ROW)]
        if partner == high_target[(tile, PlayerAxis.COL)]:
            hotspot_tiles.add(tile)
            if tile < partner:
                _check(
                    high_target[(partner, PlayerAxis.ROW)] == tile
                    and high_target[(partner, PlayerAxis.COL)] == tile,
                    f"hotspot {tile}<->{partner} not reciprocal",
                )
                hotspots.append((tile, partner))

    pipes = []
    seen: set[TileId] = set()
    for tile in all_tiles:
        if tile in hotspot_tiles or tile in seen:
            continue
        # Pipe edges alternate Row-High and Col-High tile links.
        cycle = [tile]
        axis = PlayerAxis.ROW
        current = tile
        while True:
            nxt = high_target[(current, axis)]
            if nxt == tile:
                break
            cycle.append(nxt)
            current = nxt
            axis = PlayerAxis.COL if axis is PlayerAxis.ROW else PlayerAxis.ROW
            _check(len(cycle) <= 4, "pipe cycle longer than 4 tiles")
        _check(len(cycle) == 4, f"pipe through {tile} has length {len(cycle)}")
        _check(
            sorted({t.layer for t in cycle}) == [1, 2, 3, 4],
            f"pipe {cycle} does not touch all four layers",
        )
        seen.update(cycle)
        pipes.append(tuple(cycle))

    _check(len(hotspots) == 6, f"expected 6 hotspots, found {len(hotspots)}")
    _check(len(pipes) == 6, f"expected 6 pipes, found {len(pipes)}")
    _check(
        2 * len(hotspots) + 4 * len(pipes) == 36,
        "hotspots and pipes do not partition the 36 tiles",
    )
    return hotspots, pipes  # type: ignore[return-value]


def build_atlas() -> TopologyAtlas:
    """Enumerate the canonical strict games, assign ids, and wire the
    swap graph, verifying every structural invariant along the way."""
    row_hex = {
        Cell.DR: _hexagon_numbering(Cell.DR, lambda v: row_dominance(v) is not None),
        Cell.UR: _hexagon_numbering(Cell.UR, lambda v: row_dominance(v) is not None),
    }
    col_hex = {
        Cell.UL: _hexagon_numbering(Cell.UL, lambda v: col_dominance(v) is not None),
        Cell.UR: _hexagon_numbering(Cell.UR, lambda v: col_dominance(v) is not None),
    }

    games: dict[StrictGameId, OrdinalGame] = {}
    row_vectors: dict[int, list[Ranks]] = {}
    col_vectors: dict[int, list[Ranks]] = {}
    for layer in LAYERS:
        row_four, col_four = _LAYER_FOURS[layer]
        row_vectors[layer] = row_hex[row_four]
        col_vectors[layer] = col_hex[col_four]
        for r in INDICES:
            for c in INDICES:
                games[StrictGameId(layer, r, c)] = OrdinalGame(
                    row_hex[row_four][r - 1], col_hex[col_four][c - 1]
                )

    ids = {g: i for i, g in games.items()}
    _check(len(ids) == 144, "atlas does not hold 144 distinct games")
    canonical_set = _enumerate_canonical_strict()
    _check(
        len(canonical_set) == 144 and set(ids) == canonical_set,
        "atlas games differ from the canonical strict enumeration",
    )
    _check(ids.get(PRISONERS_DILEMMA) == StrictGameId(1, 1, 1), "Pd is not 111")

    def locate(game: OrdinalGame) -> StrictGameId:
        return ids[game]

    neighbor_map: dict[StrictGameId, tuple[tuple[SwapEdge, StrictGameId], ...]] = {}
    for gid, game in games.items():
        entries = []
        for axis, kind in EDGE_ORDER:
            target = locate(apply_swap(game, axis, kind))
            _check(target != gid, f"swap fixed point at {gid}")
            entries.append((SwapEdge(axis, kind), target))
        _check(
            len({t for _, t in entries}) == 6, f"{gid} lacks 6 distinct neighbors"
        )
        neighbor_map[gid] = tuple(entries)

    # Involutions and within-layer torus structure.
    for gid, entries in neighbor_map.items():
        for edge, target in entries:
            back = dict((e, t) for e, t in neighbor_map[target])
            _check(back[edge] == gid, f"edge {edge} from {gid} not an involution")
            if edge.kind is not SwapKind.HIGH:
                _check(target.layer == gid.layer, "Low/Mid swap left its layer")
                if edge.player is PlayerAxis.ROW:
                    _check(target.col == gid.col, "row swap moved the column index")
                else:
                    _check(target.row == gid.row, "column swap moved the row index")
            else:
                _check(target.layer != gid.layer, "High swap stayed in its layer")
                if edge.player is PlayerAxis.ROW:
                    _check(target.col == gid.col, "row High swap moved the column index")
                else:
                    _check(target.row == gid.row, "column High swap moved the row index")

    # Dominance geography and the symmetric diagonal.
    for gid, game in games.items():
        _check(
            (row_dominance(game.row_ranks) is not None) == (gid.row <= 3),
            f"row dominance misplaced at {gid}",
        )
        _check(
            (col_dominance(game.col_ranks) is not None) == (gid.col <= 3),
            f"column dominance misplaced at {gid}",
        )
        if not pure_nash(game):
            _check(gid.layer in (2, 4), f"zero-equilibrium game off layers 2/4: {gid}")
        if gid.layer == 3:
            _check(Cell.UR in pure_nash(game), f"layer-3 game without win-win Nash: {gid}")
    symmetric_ids = sorted(
        gid for gid, g in games.items() if canonical_game(transpose_players(g)) == g
    )
    _check(
        symmetric_ids
        == sorted(StrictGameId(layer, i, i) for layer in (1, 3) for i in INDICES),
        "symmetric games off the layer-1/3 diagonals",
    )

    hotspots, pipes = _detect_tile_structure(games, locate)
    return TopologyAtlas(games, neighbor_map, hotspots, pipes, row_vectors, col_vectors)
