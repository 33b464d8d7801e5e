"""Acceptance suite: one test per release criterion.

Each test prints a PASS line on success (run with ``pytest -s`` to see
them) and enforces its runtime budget.
"""

import json
import time
from itertools import permutations

import numpy as np

from twobytwo import (
    Cell,
    PRISONERS_DILEMMA,
    PreferenceClass,
    RealGame,
    StrictGameId,
    Subfamily,
    SwapKind,
    analyze_game,
    build_atlas,
    distinct_up_to_player_swap,
    encode_game_string,
    enumerate_ties_census,
    export_atlas_json,
    family_census,
    make_game,
    normalize_game,
    parse_game_string,
    pure_nash,
    rank_with_ties,
    sample_census,
)
from twobytwo.games import OrdinalGame, apply_flips, col_dominance, row_dominance
from twobytwo.ties import CLASS_ORDER, all_dense_rankings

PD_ID = StrictGameId(1, 1, 1)


def _report(name: str, elapsed: float, budget: float) -> None:
    print(f"PASS {name} ({elapsed:.2f}s < {budget:.0f}s)")
    assert elapsed < budget, f"{name} exceeded its {budget}s budget: {elapsed:.2f}s"


def test_enumeration_census():
    start = time.perf_counter()
    atlas = build_atlas()
    assert len(atlas.games) == 144
    representatives, symmetric = distinct_up_to_player_swap(atlas)
    assert len(representatives) == 78
    assert len(symmetric) == 12
    _report("enumeration census (144 games, 78 orbits, 12 symmetric)",
            time.perf_counter() - start, 1.0)


def test_structural_invariants(atlas):
    start = time.perf_counter()
    degree = {gid: 0 for gid in atlas.ids}
    for a, b, _ in atlas.edges:
        degree[a] += 1
        degree[b] += 1
    assert len(atlas.edges) == 432
    assert all(d == 6 for d in degree.values())
    for layer in (1, 2, 3, 4):
        members = {gid for gid, _ in atlas.layer_games(layer)}
        assert len(members) == 36
        tiles = {}
        for gid in members:
            tiles.setdefault(atlas.tile_of(gid), []).append(gid)
            in_layer = [
                t for e, t in atlas.neighbors(gid) if e.kind is not SwapKind.HIGH
            ]
            assert len(in_layer) == 4 and all(t in members for t in in_layer)
        assert len(tiles) == 9
        assert all(len(block) == 4 for block in tiles.values())
    _report("structural invariants (6-regular, 432 edges, 6x6 tori, 9x4 tiles)",
            time.perf_counter() - start, 1.0)


def test_interlayer_structure(atlas):
    start = time.perf_counter()
    assert len(atlas.hotspots) == 6
    assert len(atlas.pipes) == 6
    covered = [t for pair in atlas.hotspots for t in pair]
    covered += [t for cycle in atlas.pipes for t in cycle]
    assert sorted(covered) == atlas.tiles() and len(covered) == 36
    _report("inter-layer structure (6 hotspots, 6 pipes, all 36 tiles)",
            time.perf_counter() - start, 1.0)


def test_dominance_equilibrium_geography(atlas):
    start = time.perf_counter()
    for gid, game in atlas.games:
        assert (row_dominance(game.row_ranks) is not None) == (gid.row <= 3)
        assert (col_dominance(game.col_ranks) is not None) == (gid.col <= 3)
        profiles = pure_nash(game)
        if not profiles:
            assert gid.layer in (2, 4)
        if gid.layer == 3:
            assert Cell.UR in profiles and game.rank_pair(Cell.UR) == (4, 4)
    _report("dominance/equilibrium geography", time.perf_counter() - start, 1.0)


def test_named_game_anchors(atlas):
    start = time.perf_counter()
    pd = atlas.resolve(PD_ID)
    assert pd == PRISONERS_DILEMMA
    report = analyze_game(pd)
    assert report.nash_payoffs == {(2, 2)}
    assert report.pareto_inferior_equilibria == report.nash_profiles

    partner = atlas.locate(
        OrdinalGame(
            tuple(4 if v == 3 else 3 if v == 4 else v for v in pd.row_ranks),
            tuple(4 if v == 3 else 3 if v == 4 else v for v in pd.col_ranks),
        )
    )
    steps = atlas.shortest_path(PD_ID, partner)
    assert len(steps) == 2
    assert {s.edge.player.value for s in steps} == {"Row", "Col"}
    assert all(s.edge.kind is SwapKind.HIGH for s in steps)

    chicken = atlas.locate(make_game((2, 3, 1, 4), (4, 3, 1, 2)))
    low_steps = atlas.shortest_path(PD_ID, chicken, [SwapKind.LOW])
    assert len(low_steps) == 2
    _report("named-game anchors (Pd=111, stag-hunt partner, chicken tile)",
            time.perf_counter() - start, 1.0)


def test_ties_census_matches_oracle():
    start = time.perf_counter()
    census = enumerate_ties_census()

    # Independent brute-force oracle: mark whole flip orbits of the raw
    # 75x75 rank-vector pairs.
    rankings = all_dense_rankings()
    seen = set()
    oracle = {}
    oracle_total = 0
    for row in rankings:
        for col in rankings:
            if (row, col) in seen:
                continue
            orbit = {
                (g.row_ranks, g.col_ranks)
                for g in (
                    apply_flips(OrdinalGame(row, col), rf, cf)
                    for rf in (False, True)
                    for cf in (False, True)
                )
            }
            seen |= orbit
            oracle_total += 1
            key = (row, col)
            from twobytwo import preference_class

            pair = (preference_class(row), preference_class(col))
            oracle[pair] = oracle.get(pair, 0) + 1

    assert census.matrix == oracle
    assert census.total == oracle_total == 1413
    assert census.row(PreferenceClass.H) == (6, 24, 36, 24, 72, 72, 72, 144)
    for a in CLASS_ORDER:
        for b in CLASS_ORDER:
            assert census.matrix.get((a, b), 0) == census.matrix.get((b, a), 0)
    assert census.player_swap_total == 726
    _report("ties census (published 8x8 matrix, total 1413, player-swap 726)",
            time.perf_counter() - start, 10.0)


def test_family_properties(atlas):
    start = time.perf_counter()
    proper = [
        gid
        for gid, game in atlas.games
        if analyze_game(game).nash_payoffs == {(4, 4), (3, 3)}
    ]
    assert len(proper) == 4
    census = family_census(atlas)
    assert census.total == 144
    samaritan = census.by_subfamily[Subfamily.SAMARITAN]
    assert all(
        samaritan >= count
        for sub, count in census.by_subfamily.items()
        if sub is not Subfamily.SAMARITAN
    )
    _report("family properties (4 proper stag hunts, Samaritan largest, sum 144)",
            time.perf_counter() - start, 1.0)


def test_normalization_properties(atlas):
    start = time.perf_counter()
    rng = np.random.default_rng(20100322)

    for _ in range(1000):  # positive-affine invariance
        rows, cols = rng.normal(size=4), rng.normal(size=4)
        a1, a2 = rng.uniform(0.1, 10, size=2)
        b1, b2 = rng.uniform(-5, 5, size=2)
        plain = normalize_game(RealGame(tuple(rows), tuple(cols)))
        scaled = normalize_game(RealGame(tuple(a1 * rows + b1), tuple(a2 * cols + b2)))
        assert plain.ordinal == scaled.ordinal
        assert np.allclose(plain.unit_payoffs, scaled.unit_payoffs)

    for _ in range(1000):  # idempotence on own output
        game = RealGame(tuple(rng.random(4)), tuple(rng.random(4)))
        once = normalize_game(game)
        again = normalize_game(
            RealGame(
                tuple(p[0] for p in once.unit_payoffs),
                tuple(p[1] for p in once.unit_payoffs),
            )
        )
        assert once.ordinal == again.ordinal and once.unit_payoffs == again.unit_payoffs

    for _ in range(1000):  # tolerance monotonicity
        values = tuple(rng.normal(size=4))
        lo, hi = sorted(rng.uniform(0, 2, size=2))
        fine, coarse = rank_with_ties(values, lo), rank_with_ties(values, hi)
        for i in range(4):
            for j in range(4):
                if fine[i] == fine[j]:
                    assert coarse[i] == coarse[j]

    result = sample_census(144000, seed=20100322, distribution="uniform", atlas=atlas)
    assert len(result.counts) == 144
    assert all(870 <= count <= 1130 for count in result.counts.values())
    _report("normalization properties (3x1000 cases + 144k-sample census)",
            time.perf_counter() - start, 30.0)


def test_round_trips(atlas, lattice):
    start = time.perf_counter()
    for game in lattice.nodes:
        assert parse_game_string(encode_game_string(game)) == game
    assert len(lattice.nodes) == 1413
    first = export_atlas_json(atlas, with_ties=True, lattice=lattice)
    second = export_atlas_json(atlas, with_ties=True, lattice=lattice)
    assert first.encode() == second.encode()
    json.loads(first)
    _report("round-trips (1413 payoff strings, byte-stable JSON)",
            time.perf_counter() - start, 5.0)
