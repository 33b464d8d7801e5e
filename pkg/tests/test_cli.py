"""Command-line interface behavior and exit codes."""

import json

import pytest
from click.testing import CliRunner

from twobytwo.cli import cli, main


@pytest.fixture()
def runner():
    return CliRunner()


class TestAnalyze:
    def test_pd_by_id(self, runner):
        result = runner.invoke(cli, ["analyze", "111"])
        assert result.exit_code == 0
        assert "PdFamily / PrisonersDilemma" in result.output
        assert "nash        DL(2, 2)" in result.output
        assert "symmetric   yes" in result.output

    def test_tie_game(self, runner):
        result = runner.invoke(cli, ["analyze", "game(1,3;2,2/1,1;3,1)"])
        assert result.exit_code == 0
        assert "row D (3" in result.output


class TestEnumerate:
    def test_strict_json(self, runner):
        result = runner.invoke(cli, ["enumerate"])
        rows = json.loads(result.output)
        assert len(rows) == 144
        assert rows[0]["identifier"] == "111"

    def test_ties_csv(self, runner):
        result = runner.invoke(cli, ["enumerate", "--ties", "--format", "csv"])
        lines = result.output.strip().splitlines()
        assert len(lines) == 1414  # header + 1413 games


class TestNeighborsAndPaths:
    def test_neighbors_strict(self, runner):
        result = runner.invoke(cli, ["neighbors", "111"])
        assert result.exit_code == 0
        assert len(result.output.strip().splitlines()) == 6

    def test_neighbors_half(self, runner):
        result = runner.invoke(cli, ["neighbors", "111", "--kinds", "half"])
        assert "make 1=2" in result.output

    def test_path(self, runner):
        result = runner.invoke(cli, ["path", "111", "166", "--kinds", "low"])
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("2 step(s)")

    def test_tiepath(self, runner):
        result = runner.invoke(cli, ["tiepath", "111", "3_13_1-24"])
        assert result.output.strip().splitlines()[0] == "2 step(s)"


class TestCensus:
    def test_family_census(self, runner):
        result = runner.invoke(cli, ["census"])
        assert "total 144" in result.output
        assert "Samaritan" in result.output

    def test_ties_census(self, runner):
        result = runner.invoke(cli, ["census", "--ties", "--by", "class"])
        assert "total 1413" in result.output
        assert "player-swap-reduced total 726" in result.output


class TestExport:
    def test_atlas_to_stdout(self, runner):
        result = runner.invoke(cli, ["export", "--what", "atlas"])
        doc = json.loads(result.output)
        assert len(doc["games"]) == 144

    def test_chart_to_file(self, runner, tmp_path):
        out = tmp_path / "chart.svg"
        result = runner.invoke(cli, ["export", "--what", "chart", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text().startswith("<svg")

    def test_scroll_option(self, runner, tmp_path):
        out = tmp_path / "c.svg"
        result = runner.invoke(
            cli, ["export", "--what", "chart", "--out", str(out), "--scroll", "0,0"]
        )
        assert result.exit_code == 0
        assert "scroll = 0,0" in out.read_text()

    def test_ui_data(self, runner):
        result = runner.invoke(cli, ["export", "--what", "ui-data"])
        doc = json.loads(result.output)
        assert doc["kind"] == "ui-data"
        assert "family_colors" in doc["meta"]


class TestSampleAndNormalize:
    def test_sample(self, runner):
        result = runner.invoke(cli, ["sample", "--n", "1000", "--seed", "3"])
        payload = json.loads(result.output)
        ties = payload.pop("_ties")
        assert sum(payload.values()) + ties == 1000

    def test_normalize(self, runner):
        result = runner.invoke(
            cli, ["normalize", "--payoffs", "-1,3,2,2,0,0,3,-1"]
        )
        assert "identifier  111" in result.output
        assert "quadrant    NE" in result.output

    def test_normalize_with_tolerance(self, runner):
        result = runner.invoke(
            cli,
            ["normalize", "--payoffs", "0,0,0.05,1,1,2,2,3", "--tol", "0.1"],
        )
        assert result.exit_code == 0


class TestExitCodes:
    def test_success(self, capsys):
        assert main(["analyze", "111"]) == 0
        capsys.readouterr()

    def test_usage_error(self, capsys):
        assert main(["path", "111", "166", "--kinds", "sideways"]) == 1
        capsys.readouterr()

    def test_missing_subcommand_is_usage_error(self, capsys):
        assert main(["no-such-command"]) == 1
        capsys.readouterr()

    def test_invalid_game_input(self, capsys):
        assert main(["analyze", "game(1,4;3,3/2,2;4,)"]) == 2
        capsys.readouterr()

    def test_invalid_ranking(self, capsys):
        assert main(["analyze", "game(1,4;3,3/3,2;4,1)"]) == 2
        capsys.readouterr()

    def test_unreachable(self, capsys):
        assert main(["path", "111", "216", "--kinds", "low,mid"]) == 2
        capsys.readouterr()
