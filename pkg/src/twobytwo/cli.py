"""Command-line driver over the library.

Exit codes: 0 success, 1 usage error, 2 invalid game input,
3 internal invariant violation.
"""

from __future__ import annotations

import json
import sys
from functools import lru_cache
from typing import Optional

import click

from . import __version__
from .errors import (
    ConstructionInvariantViolation,
    InvalidRanking,
    NotStrict,
    ParseError,
    RankAbsent,
    RankNotTied,
    TwoByTwoError,
    Unreachable,
)
from .games import OrdinalGame, analyze_game
from .atlas import SwapKind, TopologyAtlas, build_atlas
from .families import classify_family, family_census
from .identifiers import (
    display_tie_coordinate,
    encode_game_string,
    encode_tie_coordinate,
    parse_identifier,
)
from .normalize import RealGame, normalize_game, order_graph_points, sample_census
from .ties import (
    CLASS_ORDER,
    TieLattice,
    break_tie,
    enumerate_ties_census,
    make_tie,
    preference_class,
)
from .exports import (
    DEFAULT_SCROLL,
    export_atlas_json,
    export_chart_svg,
    export_dot,
    write_text,
)


@lru_cache(maxsize=1)
def _atlas() -> TopologyAtlas:
    return build_atlas()


@lru_cache(maxsize=1)
def _lattice() -> TieLattice:
    return TieLattice(_atlas())


def _resolve(identifier: str) -> OrdinalGame:
    return parse_identifier(identifier, _atlas(), _lattice())


def _identify(game: OrdinalGame) -> str:
    if game.is_strict:
        return str(_atlas().locate(game))
    return encode_tie_coordinate(game, _lattice())


@click.group()
@click.version_option(version=__version__, prog_name="twobytwo")
def cli() -> None:
    """Explore the swap topology of 2x2 ordinal games."""


@cli.command("enumerate")
@click.option("--ties", is_flag=True, help="Include games with ties (1413 total).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def enumerate_cmd(ties: bool, fmt: str) -> None:
    """List every canonical game."""
    rows = []
    if ties:
        lattice = _lattice()
        for game in lattice.nodes:
            rows.append(
                {
                    "identifier": _identify(game),
                    "payoff_string": encode_game_string(game),
                    "row_class": preference_class(game.row_ranks).name,
                    "col_class": preference_class(game.col_ranks).name,
                    "strict_id": str(_atlas().locate(game)) if game.is_strict else None,
                }
            )
    else:
        for gid, game in _atlas().games:
            tag = classify_family(game)
            rows.append(
                {
                    "identifier": str(gid),
                    "payoff_string": encode_game_string(game),
                    "family": tag.family.value,
                    "subfamily": tag.subfamily.value if tag.subfamily else None,
                }
            )
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2, sort_keys=True))
    else:
        columns = list(rows[0])
        click.echo(",".join(columns))
        for row in rows:
            click.echo(",".join("" if row[c] is None else str(row[c]) for c in columns))


@cli.command()
@click.argument("identifier")
def analyze(identifier: str) -> None:
    """Print the full analysis of one game."""
    game = _resolve(identifier)
    report = analyze_game(game)
    click.echo(f"game        {encode_game_string(game)}")
    click.echo(f"identifier  {_identify(game)}")
    click.echo(
        "classes     row %s (%s), column %s (%s)"
        % (
            preference_class(game.row_ranks).name,
            preference_class(game.row_ranks).display,
            preference_class(game.col_ranks).name,
            preference_class(game.col_ranks).display,
        )
    )
    if game.is_strict:
        tag = classify_family(game)
        family = tag.family.value + (f" / {tag.subfamily.value}" if tag.subfamily else "")
        click.echo(f"family      {family}")
    nash = sorted(report.nash_profiles)
    if nash:
        cells = ", ".join(f"{c.name}{game.rank_pair(c)}" for c in nash)
    else:
        cells = "none (cyclic)"
    click.echo(f"nash        {cells}")
    for label, dom in (("row", report.dominant_row), ("column", report.dominant_col)):
        if dom:
            click.echo(
                f"dominant    {label} {dom.move} ({'strict' if dom.strict else 'weak'})"
            )
    click.echo(f"pareto      {', '.join(c.name for c in sorted(report.pareto_optimal))}")
    inferior = sorted(report.pareto_inferior_equilibria)
    if inferior:
        click.echo(f"inferior eq {', '.join(c.name for c in inferior)}")
    mm = report.maximin
    click.echo(
        f"maximin     row {mm.row_move} (guarantee {mm.row_guarantee}"
        + (", tied" if mm.row_tied else "")
        + f"), column {mm.col_move} (guarantee {mm.col_guarantee}"
        + (", tied" if mm.col_tied else "")
        + ")"
    )
    click.echo(f"symmetric   {'yes' if report.symmetric else 'no'}")
    click.echo(f"alignment   {report.alignment.value}")


_KIND_NAMES = {"low": SwapKind.LOW, "mid": SwapKind.MID, "high": SwapKind.HIGH}


def _parse_kinds(text: str) -> list[str]:
    kinds = [k.strip().lower() for k in text.split(",") if k.strip()]
    unknown = [k for k in kinds if k not in (*_KIND_NAMES, "half")]
    if unknown:
        raise click.UsageError(f"unknown swap kinds: {', '.join(unknown)}")
    return kinds


@cli.command()
@click.argument("identifier")
@click.option("--kinds", default=None, help="Comma list of low,mid,high,half.")
def neighbors(identifier: str, kinds: Optional[str]) -> None:
    """List swap (and half-swap) neighbors of a game."""
    game = _resolve(identifier)
    if kinds is None:
        wanted = ["low", "mid", "high"] if game.is_strict else ["half"]
    else:
        wanted = _parse_kinds(kinds)
    swap_kinds = [
        _KIND_NAMES[k] for k in ("low", "mid", "high") if k in wanted
    ]
    if swap_kinds:
        gid = _atlas().locate(game)
        for edge, target in _atlas().neighbors(gid):
            if edge.kind in swap_kinds:
                click.echo(f"{edge.player.value:3} {edge.kind.value:4} -> {target}")
    if "half" in wanted:
        for player, vec in (("Row", game.row_ranks), ("Col", game.col_ranks)):
            for rank in range(1, max(vec)):
                target = make_tie(game, player, rank)
                click.echo(
                    f"{player:3} make {rank}={rank + 1} -> {_identify(target)}"
                )
            for value in sorted(set(vec)):
                if vec.count(value) < 2:
                    continue
                for target in sorted(
                    break_tie(game, player, value),
                    key=lambda g: (g.row_ranks, g.col_ranks),
                ):
                    click.echo(f"{player:3} break {value} -> {_identify(target)}")


@cli.command()
@click.argument("source")
@click.argument("target")
@click.option("--kinds", default="low,mid,high", help="Allowed swap kinds.")
def path(source: str, target: str, kinds: str) -> None:
    """Shortest swap path between two strict games."""
    wanted = _parse_kinds(kinds)
    if "half" in wanted:
        raise click.UsageError("use tiepath for half-swap routes")
    atlas = _atlas()
    start = atlas.locate(_resolve(source))
    goal = atlas.locate(_resolve(target))
    steps = atlas.shortest_path(
        start, goal, [_KIND_NAMES[k] for k in wanted]
    )
    click.echo(f"{len(steps)} step(s) from {start} to {goal}")
    for step in steps:
        click.echo(f"{step.edge.player.value:3} {step.edge.kind.value:4} -> {step.target}")


@cli.command()
@click.argument("source")
@click.argument("target")
def tiepath(source: str, target: str) -> None:
    """Shortest half-swap path between any two games."""
    lattice = _lattice()
    steps = lattice.half_swap_path(_resolve(source), _resolve(target))
    click.echo(f"{len(steps)} step(s)")
    for step in steps:
        if step.action == "make":
            detail = f"make {step.rank}={step.rank + 1}"
        else:
            detail = f"break {step.rank}"
        click.echo(f"{step.player:3} {detail} -> {_identify(step.target)}")


@cli.command()
@click.option("--ties", is_flag=True, help="Census of all games with ties.")
@click.option("--by", "group_by", type=click.Choice(["family", "class"]), default=None)
def census(ties: bool, group_by: Optional[str]) -> None:
    """Count games by family or by preference-class pair."""
    if group_by is None:
        group_by = "class" if ties else "family"
    if group_by == "family":
        if ties:
            raise click.UsageError("families are defined for strict games only")
        counts = family_census(_atlas())
        click.echo(f"total {counts.total}")
        for family in sorted(counts.by_family, key=lambda f: -counts.by_family[f]):
            click.echo(f"{family.value:12} {counts.by_family[family]:3}")
        click.echo("subfamilies:")
        for sub in sorted(counts.by_subfamily, key=lambda s: -counts.by_subfamily[s]):
            click.echo(f"  {sub.value:18} {counts.by_subfamily[sub]:3}")
        return
    if not ties:
        raise click.UsageError("--by class requires --ties")
    result = enumerate_ties_census()
    header = "      " + "".join(f"{c.name:>6}" for c in CLASS_ORDER)
    click.echo(header)
    for row_class in reversed(CLASS_ORDER):
        cells = "".join(f"{n:>6}" for n in result.row(row_class))
        click.echo(f"{row_class.display:>3} {row_class.name} {cells}")
    click.echo(f"total {result.total}")
    click.echo(f"player-swap-reduced total {result.player_swap_total}")


@cli.command()
@click.option(
    "--what",
    type=click.Choice(["atlas", "atlas-ties", "dot", "chart", "ui-data"]),
    required=True,
)
@click.option("--out", "out_path", default=None, help="Output file (default stdout).")
@click.option("--scroll", default=None, help="Chart scroll offsets dr,dc.")
@click.option("--filter", "dot_filter", default=None, help="DOT filter layer:N or tile:LRC.")
@click.option("--order-glyphs", is_flag=True, help="Add order-graph glyphs to the chart.")
def export(
    what: str,
    out_path: Optional[str],
    scroll: Optional[str],
    dot_filter: Optional[str],
    order_glyphs: bool,
) -> None:
    """Write an export document."""
    atlas = _atlas()
    offsets = DEFAULT_SCROLL
    if scroll is not None:
        try:
            dr, dc = (int(p) for p in scroll.split(","))
        except ValueError:
            raise click.UsageError("--scroll expects two integers like 5,5")
        offsets = (dr, dc)
    if what == "atlas":
        content = export_atlas_json(atlas)
    elif what == "atlas-ties":
        content = export_atlas_json(atlas, with_ties=True, lattice=_lattice())
    elif what == "ui-data":
        content = export_atlas_json(atlas, lattice=_lattice(), kind="ui-data")
    elif what == "dot":
        content = export_dot(atlas, dot_filter)
    else:
        content = export_chart_svg(atlas, scroll=offsets, order_glyphs=order_glyphs)
    if out_path:
        write_text(out_path, content)
        click.echo(f"wrote {out_path}")
    else:
        click.echo(content, nl=False)


@cli.command()
@click.option("--n", "count", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--dist", type=click.Choice(["uniform", "gaussian"]), default="uniform")
def sample(count: int, seed: int, dist: str) -> None:
    """Monte Carlo census of random real-valued games."""
    if count <= 0:
        raise click.UsageError("--n must be positive")
    result = sample_census(count, seed, dist, _atlas())
    payload = {str(gid): n for gid, n in sorted(result.counts.items())}
    payload["_ties"] = result.ties_hit
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


@cli.command()
@click.option(
    "--payoffs",
    required=True,
    help="Eight reals in grammar order: rUL,cUL,rUR,cUR,rDL,cDL,rDR,cDR",
)
@click.option("--tol", type=float, default=0.0, help="Tie tolerance (default 0).")
def normalize(payoffs: str, tol: float) -> None:
    """Map a real-valued game into the ordinal atlas."""
    try:
        values = [float(p) for p in payoffs.split(",")]
    except ValueError:
        raise click.UsageError("--payoffs expects eight comma-separated reals")
    if len(values) != 8:
        raise click.UsageError(f"--payoffs expects 8 values, got {len(values)}")
    real = RealGame(tuple(values[0::2]), tuple(values[1::2]), tol)
    normalized = normalize_game(real)
    game = normalized.ordinal
    click.echo(f"ordinal     {encode_game_string(game)}")
    click.echo(f"identifier  {_identify(game)}")
    click.echo(f"quadrant    {normalized.quadrant.value}")
    for cell, ru, cu in order_graph_points(normalized):
        click.echo(f"unit {cell.name}     ({ru:.4f}, {cu:.4f})")


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except (ParseError, InvalidRanking, NotStrict, RankAbsent, RankNotTied,
            Unreachable, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except TwoByTwoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
