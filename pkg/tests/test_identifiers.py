"""Identifier grammar round-trips."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twobytwo import (
    ParseError,
    PRISONERS_DILEMMA,
    StrictGameId,
    encode_game_string,
    encode_tie_coordinate,
    parse_game_string,
    parse_identifier,
    parse_tie_coordinate,
)
from twobytwo.identifiers import display_tie_coordinate
from twobytwo.ties import all_dense_rankings
from twobytwo.games import OrdinalGame, canonical_game


class TestPayoffStrings:
    def test_pd(self):
        assert encode_game_string(PRISONERS_DILEMMA) == "game(1,4;3,3/2,2;4,1)"

    def test_parse_round_trip_all_canonical_games(self, lattice):
        for game in lattice.nodes:
            assert parse_game_string(encode_game_string(game)) == game

    def test_parse_error_carries_position(self):
        with pytest.raises(ParseError) as info:
            parse_game_string("game(1,4;3,3/2,2;4,)")
        assert info.value.position == 19

    @pytest.mark.parametrize(
        "text",
        [
            "game",
            "game(1,4;3,3/2,2;4,1",
            "game(1,4;3,3/2,2;4,1)x",
            "game(1;4;3,3/2,2;4,1)",
            "(1,4;3,3/2,2;4,1)",
        ],
    )
    def test_malformed_strings(self, text):
        with pytest.raises(ParseError):
            parse_game_string(text)

    def test_non_dense_ranks_rejected(self):
        from twobytwo import InvalidRanking

        with pytest.raises(InvalidRanking):
            parse_game_string("game(1,4;3,3/3,2;4,1)")

    @given(st.integers(0, 74), st.integers(0, 74))
    def test_round_trip_random(self, i, j):
        rankings = all_dense_rankings()
        game = canonical_game(OrdinalGame(rankings[i], rankings[j]))
        assert parse_game_string(encode_game_string(game)) == game


class TestTieCoordinates:
    def test_pd_coordinate(self, lattice):
        assert encode_tie_coordinate(PRISONERS_DILEMMA, lattice) == "44-1"

    def test_display_alias_uses_subscripts(self, lattice):
        from twobytwo import make_game, make_tie

        rousseau = make_tie(
            make_tie(make_game((1, 4, 2, 3), (3, 4, 2, 1)), "Row", 2), "Col", 2
        )
        alias = display_tie_coordinate(rousseau, lattice)
        assert alias.startswith("3₂3₂-")

    def test_round_trip_all_games(self, lattice):
        for game in lattice.nodes:
            text = encode_tie_coordinate(game, lattice)
            assert parse_tie_coordinate(text, lattice) == game

    def test_position_out_of_range(self, lattice):
        with pytest.raises(ParseError):
            parse_tie_coordinate("44-145", lattice)

    def test_unknown_class_token(self, lattice):
        with pytest.raises(ParseError):
            parse_tie_coordinate("4_94-1", lattice)


class TestParseIdentifier:
    def test_strict_id(self, atlas, lattice):
        assert parse_identifier("111", atlas, lattice) == PRISONERS_DILEMMA

    def test_payoff_string(self, atlas, lattice):
        assert parse_identifier("game(1,4;3,3/2,2;4,1)", atlas, lattice) == PRISONERS_DILEMMA

    def test_tie_coordinate(self, atlas, lattice):
        assert parse_identifier("44-1", atlas, lattice) == PRISONERS_DILEMMA

    def test_all_strict_ids_resolve(self, atlas, lattice):
        for gid, game in atlas.games:
            assert parse_identifier(str(gid), atlas, lattice) == game

    def test_unknown_kind(self, atlas, lattice):
        with pytest.raises(ParseError):
            parse_identifier("prisoners-dilemma", atlas, lattice)

    def test_out_of_range_id(self, atlas, lattice):
        with pytest.raises(ParseError):
            parse_identifier("711", atlas, lattice)
