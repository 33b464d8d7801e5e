"""Game identifier strings: payoff strings, strict ids, tie coordinates.

Three interchangeable kinds identify a canonical game:

  * payoff string  ``game(1,4;3,3/2,2;4,1)`` -- universal; cells read
    left-to-right, top row then bottom row, row-player rank first
  * strict id      ``111`` -- layer-row-column in the atlas
  * tie coordinate ``3_23_2-5`` -- the two preference-class labels plus
    the game's slot within that natural-order block

Every parser round-trips its encoder for every canonical game.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import ParseError
from .games import OrdinalGame, canonical_game, make_game
from .atlas import StrictGameId, TopologyAtlas
from .ties import TieLattice, class_by_label, preference_class


def encode_game_string(game: OrdinalGame) -> str:
    """The payoff-string form of a game."""
    r, c = game.row_ranks, game.col_ranks
    return f"game({r[0]},{c[0]};{r[1]},{c[1]}/{r[2]},{c[2]};{r[3]},{c[3]})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def expect(self, literal: str) -> None:
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        match = re.match(r"\d+", self.text[self.pos:])
        if not match:
            raise ParseError("expected a rank value", self.pos)
        self.pos += match.end()
        return int(match.group())

    def done(self) -> None:
        if self.pos != len(self.text):
            raise ParseError("trailing characters", self.pos)


def parse_game_string(text: str) -> OrdinalGame:
    """Parse a payoff string; errors carry the failing position."""
    scanner = _Scanner(text.strip())
    scanner.expect("game(")
    pairs = []
    for separator in (";", "/", ";", ")"):
        row_rank = scanner.integer()
        scanner.expect(",")
        col_rank = scanner.integer()
        pairs.append((row_rank, col_rank))
        scanner.expect(separator)
    scanner.done()
    return make_game(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


_CLASS_TOKEN = r"[1-4](?:_[123])?"
_TIE_COORDINATE = re.compile(
    rf"^(?P<row>{_CLASS_TOKEN})(?P<col>{_CLASS_TOKEN})-(?P<pos>\d+)$"
)
_STRICT_ID = re.compile(r"^[1-4][1-6][1-6]$")


def encode_tie_coordinate(game: OrdinalGame, lattice: TieLattice) -> str:
    """Class-pair-and-slot coordinate, e.g. ``3_23_2-5``."""
    game = canonical_game(game)
    coordinate = lattice.natural_order_coordinate(game)
    row_label = preference_class(game.row_ranks).label
    col_label = preference_class(game.col_ranks).label
    return f"{row_label}{col_label}-{coordinate.within_block}"


def display_tie_coordinate(game: OrdinalGame, lattice: TieLattice) -> str:
    """Display alias with unicode subscripts, e.g. ``3₂3₂-5``."""
    game = canonical_game(game)
    coordinate = lattice.natural_order_coordinate(game)
    return (
        preference_class(game.row_ranks).display
        + preference_class(game.col_ranks).display
        + f"-{coordinate.within_block}"
    )


def parse_tie_coordinate(text: str, lattice: TieLattice) -> OrdinalGame:
    match = _TIE_COORDINATE.match(text.strip())
    if not match:
        raise ParseError("not a class-pair coordinate", 0)
    try:
        row_class = class_by_label(match.group("row"))
        col_class = class_by_label(match.group("col"))
    except KeyError as exc:
        raise ParseError(f"unknown preference class {exc}", 0) from exc
    block = lattice.block(row_class.index, col_class.index)
    position = int(match.group("pos"))
    if not (1 <= position <= len(block)):
        raise ParseError(
            f"block {row_class.label}x{col_class.label} holds {len(block)} games, "
            f"position {position} does not exist",
            len(text) - len(match.group("pos")),
        )
    return block[position - 1]


def parse_identifier(
    text: str,
    atlas: TopologyAtlas,
    lattice: Optional[TieLattice] = None,
) -> OrdinalGame:
    """Resolve any identifier kind to its canonical game."""
    stripped = text.strip()
    if stripped.startswith("game("):
        return canonical_game(parse_game_string(stripped))
    if _STRICT_ID.match(stripped):
        return atlas.resolve(StrictGameId.from_string(stripped))
    if _TIE_COORDINATE.match(stripped):
        from .ties import default_lattice

        return parse_tie_coordinate(stripped, lattice or default_lattice())
    raise ParseError(
        "unrecognized identifier (expected a payoff string, a layer-row-column "
        "id, or a class-pair coordinate)",
        0,
    )
