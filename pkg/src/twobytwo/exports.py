"""Deterministic export documents: JSON atlas, DOT graph, SVG chart.

Every export is a pure function of (atlas, options); JSON documents use
sorted keys and deterministic list orders so repeated exports are
byte-identical.  The interactive explorer consumes the ``ui-data``
variant and nothing else.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import IoFailure
from .games import CELLS, AnalysisReport, Cell, OrdinalGame, analyze_game
from .atlas import (
    EDGE_ORDER,
    StrictGameId,
    SwapKind,
    TileId,
    TopologyAtlas,
)
from .families import classify_family
from .identifiers import encode_game_string, encode_tie_coordinate
from .ties import TieLattice, preference_class

SCHEMA_VERSION = "1"

# One background color per payoff family, shared by the SVG chart and
# the explorer overlay so the two renderings always agree.
FAMILY_COLORS = {
    "WinWin": "#a8d5a2",
    "Biased": "#a9c4e8",
    "SecondBest": "#cbb6e3",
    "Unfair": "#f2c894",
    "PdFamily": "#eda1a1",
    "Cyclic": "#d9d9d9",
}

# Quadrant placement of the four layers in the 12x12 chart; the layer-1
# and layer-3 diagonals then join into the single southwest-northeast
# diagonal that carries the twelve symmetric games.
CHART_QUADRANTS = {2: (0, 0), 3: (1, 0), 1: (0, 1), 4: (1, 1)}

DEFAULT_SCROLL = (5, 5)


def _cell_names(cells) -> list[str]:
    return sorted(c.name for c in cells)


def _analysis_dict(game: OrdinalGame, report: AnalysisReport) -> dict:
    def dominance(d):
        return None if d is None else {"move": d.move, "strict": d.strict}

    return {
        "nash": [
            {"cell": c.name, "payoffs": list(game.rank_pair(c))}
            for c in sorted(report.nash_profiles)
        ],
        "nash_payoffs": sorted(list(p) for p in report.nash_payoffs),
        "dominant_row": dominance(report.dominant_row),
        "dominant_col": dominance(report.dominant_col),
        "pareto_optimal": _cell_names(report.pareto_optimal),
        "pareto_inferior_equilibria": _cell_names(report.pareto_inferior_equilibria),
        "maximin": {
            "row_move": report.maximin.row_move,
            "col_move": report.maximin.col_move,
            "row_guarantee": report.maximin.row_guarantee,
            "col_guarantee": report.maximin.col_guarantee,
            "row_tied": report.maximin.row_tied,
            "col_tied": report.maximin.col_tied,
        },
        "symmetric": report.symmetric,
        "alignment": report.alignment.value,
    }


def _game_record(
    gid: StrictGameId, game: OrdinalGame, lattice: Optional[TieLattice]
) -> dict:
    tag = classify_family(game)
    record = {
        "id": str(gid),
        "layer": gid.layer,
        "row": gid.row,
        "col": gid.col,
        "payoff_string": encode_game_string(game),
        "row_ranks": list(game.row_ranks),
        "col_ranks": list(game.col_ranks),
        "family": tag.family.value,
        "subfamily": tag.subfamily.value if tag.subfamily else None,
        "row_class": preference_class(game.row_ranks).name,
        "col_class": preference_class(game.col_ranks).name,
        "analysis": _analysis_dict(game, analyze_game(game)),
    }
    if lattice is not None:
        coordinate = lattice.natural_order_coordinate(game)
        record["natural_order"] = {
            "row_class_index": coordinate.row_class_index,
            "col_class_index": coordinate.col_class_index,
            "within_block": coordinate.within_block,
        }
        record["tie_coordinate"] = encode_tie_coordinate(game, lattice)
    return record


def _tie_record(game: OrdinalGame, lattice: TieLattice) -> dict:
    coordinate = lattice.natural_order_coordinate(game)
    record = {
        "payoff_string": encode_game_string(game),
        "tie_coordinate": encode_tie_coordinate(game, lattice),
        "row_ranks": list(game.row_ranks),
        "col_ranks": list(game.col_ranks),
        "row_class": preference_class(game.row_ranks).name,
        "col_class": preference_class(game.col_ranks).name,
        "natural_order": {
            "row_class_index": coordinate.row_class_index,
            "col_class_index": coordinate.col_class_index,
            "within_block": coordinate.within_block,
        },
        "strict_id": str(lattice.atlas.locate(game)) if game.is_strict else None,
    }
    return record


def atlas_document(
    atlas: TopologyAtlas,
    with_ties: bool = False,
    lattice: Optional[TieLattice] = None,
    kind: str = "atlas",
) -> dict:
    """The exportable dictionary form of the atlas."""
    if with_ties or kind == "ui-data":
        lattice = lattice if lattice is not None else TieLattice(atlas)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "meta": {
            "family_colors": FAMILY_COLORS,
            "class_order": ["A", "B", "C", "E", "D", "F", "G", "H"],
            "chart_quadrants": {str(l): list(q) for l, q in CHART_QUADRANTS.items()},
            "default_scroll": list(DEFAULT_SCROLL),
            "numbering": {
                "row_vectors": {
                    str(layer): [list(v) for v in atlas.row_vectors[layer]]
                    for layer in sorted(atlas.row_vectors)
                },
                "col_vectors": {
                    str(layer): [list(v) for v in atlas.col_vectors[layer]]
                    for layer in sorted(atlas.col_vectors)
                },
            },
        },
        "games": [_game_record(gid, game, lattice) for gid, game in atlas.games],
        "edges": [
            {
                "a": str(a),
                "b": str(b),
                "player": edge.player.value,
                "kind": edge.kind.value,
            }
            for a, b, edge in atlas.edges
        ],
        "hotspots": [[str(t) for t in pair] for pair in atlas.hotspots],
        "pipes": [[str(t) for t in cycle] for cycle in atlas.pipes],
    }
    if with_ties:
        assert lattice is not None
        doc["ties"] = {
            "nodes": [_tie_record(node, lattice) for node in lattice.nodes],
            "edges": [
                {
                    "a": encode_game_string(a),
                    "b": encode_game_string(b),
                }
                for a, b in lattice.edges()
            ],
        }
    return doc


def export_atlas_json(
    atlas: TopologyAtlas,
    with_ties: bool = False,
    lattice: Optional[TieLattice] = None,
    kind: str = "atlas",
) -> str:
    """Byte-reproducible JSON document for the atlas."""
    doc = atlas_document(atlas, with_ties=with_ties, lattice=lattice, kind=kind)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_text(path: str, content: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(content)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def export_dot(atlas: TopologyAtlas, filter: Optional[str] = None) -> str:
    """Graphviz description of the swap graph.

    ``filter`` restricts output: ``layer:N`` keeps one layer's games and
    the Low/Mid edges among them; ``tile:LRC`` keeps the four games of
    the tile containing that id and its internal Low edges.
    """
    if filter is None:
        keep = set(atlas.ids)
    elif filter.startswith("layer:"):
        layer = int(filter.split(":", 1)[1])
        keep = {gid for gid in atlas.ids if gid.layer == layer}
        if not keep:
            raise ValueError(f"no such layer: {layer}")
    elif filter.startswith("tile:"):
        gid = StrictGameId.from_string(filter.split(":", 1)[1])
        keep = set(atlas.tile_games(atlas.tile_of(gid)))
    else:
        raise ValueError(f"unknown filter: {filter!r}")

    lines = ["graph topology {", "  node [shape=box, style=filled];"]
    for gid in sorted(keep):
        family = classify_family(atlas.resolve(gid)).family.value
        lines.append(
            f'  "{gid}" [label="{gid}\\n{family}", fillcolor="{FAMILY_COLORS[family]}"];'
        )
    for a, b, edge in atlas.edges:
        if a in keep and b in keep:
            lines.append(
                f'  "{a}" -- "{b}" [label="{edge.kind.value}", '
                f'tooltip="{edge.player.value} {edge.kind.value}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def chart_positions(
    atlas: TopologyAtlas, scroll: tuple[int, int] = DEFAULT_SCROLL
) -> dict[StrictGameId, tuple[int, int]]:
    """Grid position (x from west, y from north) of each game on the
    12x12 chart: four 6x6 layers in quadrants, row 1 at the south edge
    and column 1 at the west edge of each layer, both axes scrolled
    torus-style by the given offsets."""
    scroll_rows, scroll_cols = scroll
    positions = {}
    for gid in atlas.ids:
        qx, qy = CHART_QUADRANTS[gid.layer]
        dx = (gid.col - 1 + scroll_cols) % 6
        dy = (gid.row - 1 + scroll_rows) % 6
        positions[gid] = (qx * 6 + dx, qy * 6 + (5 - dy))
    return positions


_CELL_SIZE = 58
_MARGIN = 20


def _svg_text(x: float, y: float, text: str, size: int, extra: str = "") -> str:
    return (
        f'<text x="{x:.1f}" y="{y:.1f}" font-size="{size}" '
        f'font-family="Helvetica,Arial,sans-serif" {extra}>{text}</text>'
    )


def export_chart_svg(
    atlas: TopologyAtlas,
    scroll: tuple[int, int] = DEFAULT_SCROLL,
    order_glyphs: bool = False,
) -> str:
    """SVG chart of all 144 games with payoff families.

    Each cell shows the four payoff pairs, dots mark Nash cells (or the
    maximin cell in cyclic games), bold marks Pareto-optimal payoffs,
    and the background carries the family color.  The default scroll
    puts Prisoner's Dilemma's tile at the chart center.
    """
    positions = chart_positions(atlas, scroll)
    grid = 12 * _CELL_SIZE
    legend_width = 230
    width = _MARGIN * 2 + grid + legend_width
    height = _MARGIN * 2 + grid + 30
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        _svg_text(_MARGIN, 14, "Topology of the 144 strict 2x2 ordinal games", 13,
                  'font-weight="bold"'),
    ]

    sub = _CELL_SIZE / 2
    for gid in atlas.ids:
        game = atlas.resolve(gid)
        report = analyze_game(game)
        tag = classify_family(game)
        x0 = _MARGIN + positions[gid][0] * _CELL_SIZE
        y0 = _MARGIN + 10 + positions[gid][1] * _CELL_SIZE
        parts.append(
            f'<rect x="{x0}" y="{y0}" width="{_CELL_SIZE}" height="{_CELL_SIZE}" '
            f'fill="{FAMILY_COLORS[tag.family.value]}" stroke="#888" stroke-width="0.5"/>'
        )
        marked = report.nash_profiles
        if not marked:
            maximin_cell = next(
                c
                for c in CELLS
                if c.row_move == report.maximin.row_move
                and c.col_move == report.maximin.col_move
            )
            marked = frozenset({maximin_cell})
        for cell in CELLS:
            cx = x0 + (0 if cell.col_move == "L" else sub)
            cy = y0 + (0 if cell.row_move == "U" else sub)
            bold = 'font-weight="bold"' if cell in report.pareto_optimal else ""
            r, c = game.rank_pair(cell)
            parts.append(_svg_text(cx + 7, cy + sub / 2 + 4, f"{r},{c}", 10, bold))
            if cell in marked:
                fill = "#000" if report.nash_profiles else "#555"
                parts.append(
                    f'<circle cx="{cx + sub - 7:.1f}" cy="{cy + 8:.1f}" r="2.6" fill="{fill}"/>'
                )
        parts.append(_svg_text(x0 + 2, y0 + _CELL_SIZE - 2, str(gid), 6, 'fill="#333"'))
        if order_glyphs:
            gx, gy = x0 + _CELL_SIZE - 15, y0 + _CELL_SIZE - 15
            parts.append(
                f'<rect x="{gx}" y="{gy}" width="12" height="12" fill="white" '
                f'stroke="#aaa" stroke-width="0.4"/>'
            )
            for cell in CELLS:
                px = gx + (game.row_ranks[cell] - 1) / 3 * 10 + 1
                py = gy + 11 - (game.col_ranks[cell] - 1) / 3 * 10
                parts.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="0.9" fill="#222"/>')

    # quadrant separators and layer labels
    mid = _MARGIN + 6 * _CELL_SIZE
    top, bottom = _MARGIN + 10, _MARGIN + 10 + grid
    parts.append(
        f'<line x1="{mid}" y1="{top}" x2="{mid}" y2="{bottom}" stroke="#000" stroke-width="1.5"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN}" y1="{(top + bottom) / 2}" x2="{_MARGIN + grid}" '
        f'y2="{(top + bottom) / 2}" stroke="#000" stroke-width="1.5"/>'
    )
    for layer, (qx, qy) in CHART_QUADRANTS.items():
        lx = _MARGIN + qx * 6 * _CELL_SIZE + 3
        ly = top + qy * 6 * _CELL_SIZE + 12
        parts.append(_svg_text(lx, ly, f"Layer {layer}", 10, 'font-weight="bold" fill="#222"'))

    # legend
    lx = _MARGIN + grid + 16
    ly = top + 6
    parts.append(_svg_text(lx, ly, "Payoff families", 11, 'font-weight="bold"'))
    for i, (family, color) in enumerate(sorted(FAMILY_COLORS.items())):
        y = ly + 14 + i * 18
        parts.append(
            f'<rect x="{lx}" y="{y - 9}" width="12" height="12" fill="{color}" stroke="#888"/>'
        )
        parts.append(_svg_text(lx + 18, y + 1, family, 10))
    my = ly + 14 + len(FAMILY_COLORS) * 18 + 10
    parts.append(_svg_text(lx, my, "dot = Nash (maximin if cyclic)", 9))
    parts.append(_svg_text(lx, my + 14, "bold = Pareto optimal", 9))
    parts.append(_svg_text(lx, my + 28, "row 1 south, column 1 west, torus", 9))
    parts.append(_svg_text(lx, my + 42, f"scroll = {scroll[0]},{scroll[1]}", 9))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
