"""Atlas construction, indexing, and swap-graph structure."""

import pytest

from twobytwo import (
    Cell,
    NotStrict,
    PRISONERS_DILEMMA,
    PlayerAxis,
    StrictGameId,
    SwapKind,
    TileId,
    Unreachable,
    apply_swap,
    canonical_game,
    hotspots_and_pipes,
    make_game,
    pure_nash,
    transpose_players,
)
from twobytwo.games import row_dominance, col_dominance

PD = PRISONERS_DILEMMA
PD_ID = StrictGameId(1, 1, 1)
CHICKEN = make_game((2, 3, 1, 4), (4, 3, 1, 2))


class TestApplySwap:
    def test_row_high_moves_best_outcome_up(self):
        partner = apply_swap(PD, PlayerAxis.ROW, SwapKind.HIGH)
        assert partner.row_ranks[Cell.UR] == 4

    def test_two_low_swaps_reach_chicken(self):
        step = apply_swap(PD, PlayerAxis.ROW, SwapKind.LOW)
        assert apply_swap(step, PlayerAxis.COL, SwapKind.LOW) == CHICKEN

    def test_involution_on_all_canonical_games(self, atlas):
        for _, game in atlas.games:
            for axis in PlayerAxis:
                for kind in SwapKind:
                    once = apply_swap(game, axis, kind)
                    assert apply_swap(once, axis, kind) == game

    def test_rejects_ties(self):
        with pytest.raises(NotStrict):
            apply_swap(make_game((1, 1, 2, 3), (1, 2, 3, 4)), PlayerAxis.ROW, SwapKind.LOW)


class TestBuild:
    def test_144_games(self, atlas):
        assert len(atlas.games) == 144

    def test_pd_anchor(self, atlas):
        assert atlas.resolve(PD_ID) == PD
        assert atlas.locate(PD) == PD_ID

    def test_six_hotspots_six_pipes(self, atlas):
        hotspots, pipes = hotspots_and_pipes(atlas)
        assert len(hotspots) == 6
        assert len(pipes) == 6

    def test_hotspots_and_pipes_partition_tiles(self, atlas):
        touched = [t for pair in atlas.hotspots for t in pair]
        touched += [t for cycle in atlas.pipes for t in cycle]
        assert sorted(touched) == atlas.tiles()
        assert len(touched) == 36

    def test_each_pipe_touches_all_four_layers(self, atlas):
        for cycle in atlas.pipes:
            assert sorted(t.layer for t in cycle) == [1, 2, 3, 4]


class TestLocateResolve:
    def test_bijection(self, atlas):
        for gid, game in atlas.games:
            assert atlas.locate(game) == gid

    def test_locate_canonicalizes(self, atlas):
        from twobytwo.games import apply_flips

        assert atlas.locate(apply_flips(PD, True, True)) == PD_ID

    def test_locate_rejects_ties(self, atlas):
        with pytest.raises(NotStrict):
            atlas.locate(make_game((1, 1, 2, 3), (1, 2, 3, 4)))

    def test_transpose_exchanges_layers_two_and_four(self, atlas):
        for gid, game in atlas.layer_games(2):
            mirrored = atlas.locate(transpose_players(game))
            assert mirrored == StrictGameId(4, gid.col, gid.row)


class TestNeighbors:
    def test_pd_low_neighbors_share_the_chicken_tile(self, atlas):
        low = {
            target
            for edge, target in atlas.neighbors(PD_ID)
            if edge.kind is SwapKind.LOW
        }
        tile = set(atlas.tile_games(atlas.tile_of(PD_ID)))
        assert low < tile
        assert atlas.locate(CHICKEN) in tile

    def test_six_distinct_neighbors_everywhere(self, atlas):
        for gid in atlas.ids:
            targets = [t for _, t in atlas.neighbors(gid)]
            assert len(set(targets)) == 6

    def test_low_mid_stay_in_layer_and_move_one_index(self, atlas):
        for gid in atlas.ids:
            for edge, target in atlas.neighbors(gid):
                if edge.kind is SwapKind.HIGH:
                    assert target.layer != gid.layer
                else:
                    assert target.layer == gid.layer
                if edge.player is PlayerAxis.ROW:
                    assert target.col == gid.col
                else:
                    assert target.row == gid.row

    def test_high_swaps_send_slices_to_one_layer(self, atlas):
        for layer in (1, 2, 3, 4):
            for pair in ((1, 6), (2, 3), (4, 5)):
                targets = {
                    t.layer
                    for r in pair
                    for c in range(1, 7)
                    for e, t in atlas.neighbors(StrictGameId(layer, r, c))
                    if e.player is PlayerAxis.ROW and e.kind is SwapKind.HIGH
                }
                assert len(targets) == 1


class TestGeography:
    def test_dominance_rows_and_columns(self, atlas):
        for gid, game in atlas.games:
            assert (row_dominance(game.row_ranks) is not None) == (gid.row <= 3)
            assert (col_dominance(game.col_ranks) is not None) == (gid.col <= 3)

    def test_layer_membership_by_best_outcomes(self, atlas):
        for gid, game in atlas.games:
            row_four = game.row_ranks.index(4)
            col_four = game.col_ranks.index(4)
            if gid.layer == 3:
                assert row_four == col_four == Cell.UR
            elif gid.layer == 1:
                assert (row_four, col_four) == (Cell.DR, Cell.UL)
            else:
                assert row_four != col_four

    def test_zero_equilibrium_games_on_layers_two_and_four(self, atlas):
        for gid, game in atlas.games:
            if not pure_nash(game):
                assert gid.layer in (2, 4)

    def test_layer_three_win_win_equilibrium(self, atlas):
        for gid, game in atlas.layer_games(3):
            assert Cell.UR in pure_nash(game)
            assert game.rank_pair(Cell.UR) == (4, 4)

    def test_symmetric_games_on_diagonal(self, atlas):
        expected = {StrictGameId(l, i, i) for l in (1, 3) for i in range(1, 7)}
        actual = {
            gid
            for gid, game in atlas.games
            if canonical_game(transpose_players(game)) == game
        }
        assert actual == expected

    def test_row_index_is_function_of_row_vector(self, atlas):
        row_index, col_index = {}, {}
        for gid, game in atlas.games:
            assert row_index.setdefault(game.row_ranks, gid.row) == gid.row
            assert col_index.setdefault(game.col_ranks, gid.col) == gid.col


class TestStructure:
    def test_432_labeled_edges(self, atlas):
        assert len(atlas.edges) == 432

    def test_layers_are_4_regular_tori_under_low_mid(self, atlas):
        for layer in (1, 2, 3, 4):
            ids = {gid for gid, _ in atlas.layer_games(layer)}
            assert len(ids) == 36
            for gid in ids:
                in_layer = [
                    t
                    for e, t in atlas.neighbors(gid)
                    if e.kind is not SwapKind.HIGH
                ]
                assert len(in_layer) == 4
                assert all(t in ids for t in in_layer)

    def test_connected_under_all_kinds(self, atlas):
        for gid in atlas.ids:
            atlas.shortest_path(PD_ID, gid)

    def test_layers_connected_under_low_mid(self, atlas):
        for layer in (1, 2, 3, 4):
            ids = [gid for gid, _ in atlas.layer_games(layer)]
            for gid in ids[1:]:
                path = atlas.shortest_path(ids[0], gid, [SwapKind.LOW, SwapKind.MID])
                assert all(step.target.layer == layer for step in path)

    def test_tiles_partition_layers(self, atlas):
        for layer in (1, 2, 3, 4):
            tiles = {}
            for gid, _ in atlas.layer_games(layer):
                tiles.setdefault(atlas.tile_of(gid), set()).add(gid)
            assert len(tiles) == 9
            assert all(len(members) == 4 for members in tiles.values())

    def test_tiles_closed_under_low_swaps(self, atlas):
        for gid, game in atlas.games:
            tile = atlas.tile_of(gid)
            for axis in PlayerAxis:
                target = atlas.locate(apply_swap(game, axis, SwapKind.LOW))
                assert atlas.tile_of(target) == tile


class TestShortestPath:
    def test_pd_to_stag_hunt_partner(self, atlas):
        partner = apply_swap(
            apply_swap(PD, PlayerAxis.ROW, SwapKind.HIGH), PlayerAxis.COL, SwapKind.HIGH
        )
        steps = atlas.shortest_path(PD_ID, atlas.locate(partner))
        assert len(steps) == 2
        assert sorted(s.edge.player.value for s in steps) == ["Col", "Row"]
        assert all(s.edge.kind is SwapKind.HIGH for s in steps)

    def test_identity_path_empty(self, atlas):
        assert atlas.shortest_path(PD_ID, PD_ID) == []

    def test_pd_to_chicken_low_only(self, atlas):
        steps = atlas.shortest_path(PD_ID, atlas.locate(CHICKEN), [SwapKind.LOW])
        assert len(steps) == 2
        assert all(s.edge.kind is SwapKind.LOW for s in steps)

    def test_unreachable_without_high(self, atlas):
        with pytest.raises(Unreachable):
            atlas.shortest_path(
                PD_ID, StrictGameId(2, 1, 6), [SwapKind.LOW, SwapKind.MID]
            )

    def test_deterministic_tie_breaking(self, atlas):
        first = atlas.shortest_path(PD_ID, StrictGameId(1, 6, 6), [SwapKind.LOW])
        again = atlas.shortest_path(PD_ID, StrictGameId(1, 6, 6), [SwapKind.LOW])
        assert first == again
        # Row edges expand before Col edges.
        assert first[0].edge.player is PlayerAxis.ROW

    def test_empty_kind_set_rejected(self, atlas):
        with pytest.raises(ValueError):
            atlas.shortest_path(PD_ID, StrictGameId(1, 2, 2), [])


class TestTileIds:
    def test_tile_contains_its_index_pairs(self, atlas):
        tile = atlas.tile_of(PD_ID)
        games = atlas.tile_games(tile)
        rows = {g.row for g in games}
        cols = {g.col for g in games}
        assert rows == {1, 6} and cols == {1, 6}
        assert TileId(1, 1, 1) == tile
