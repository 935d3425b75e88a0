"""Operator CLI: outputs and exit codes."""

import pytest
from click.testing import CliRunner

from cgtportal.service.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_gen_wheel_header(runner):
    result = runner.invoke(main, ["gen", "wheel", "5"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "5 8"
    assert len(lines) == 9


def test_gen_bad_parameter_exits_1(runner):
    result = runner.invoke(main, ["gen", "wheel", "2"])
    assert result.exit_code == 1
    assert "invalid-parameter" in result.output


def test_usage_error_exits_2(runner):
    result = runner.invoke(main, ["nosuchcommand"])
    assert result.exit_code == 2


def test_wiener_on_petersen_edge_list(runner, tmp_path):
    gen = runner.invoke(main, ["gen", "petersen"])
    edge_file = tmp_path / "petersen.txt"
    edge_file.write_text(gen.output, encoding="utf-8")
    result = runner.invoke(main, ["wiener", str(edge_file)])
    assert result.exit_code == 0
    assert result.output.strip() == "75"


def test_hosoya_polynomial_output(runner, tmp_path):
    gen = runner.invoke(main, ["gen", "petersen"])
    edge_file = tmp_path / "petersen.txt"
    edge_file.write_text(gen.output, encoding="utf-8")
    result = runner.invoke(main, ["hosoya", str(edge_file)])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "15 t + 30 t^2"
    assert "Wiener index): 75" in result.output


def test_wiener_on_disconnected_graph_exits_1(runner, tmp_path):
    edge_file = tmp_path / "disc.txt"
    edge_file.write_text("4 2\n0 1\n2 3\n", encoding="utf-8")
    result = runner.invoke(main, ["wiener", str(edge_file)])
    assert result.exit_code == 1
    assert "disconnected-graph" in result.output


def test_verify_a136328_table(runner):
    result = runner.invoke(main, ["verify-a136328", "--max-n", "17", "--brute-max", "4"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 19  # header + 17 rows + summary
    assert "all pass" in lines[-1]
    assert "9637351741503033075" in result.output


def test_census_complete4(runner):
    result = runner.invoke(main, ["census", "complete", "4"])
    assert result.exit_code == 0
    assert "classes: 2" in result.output
    assert "labeled trees: 16 (matrix-tree: 16)" in result.output


def test_census_guard_and_force(runner):
    result = runner.invoke(main, ["census", "complete", "8"])
    assert result.exit_code == 1
    assert "size-limit-exceeded" in result.output


def test_plan_table(runner):
    result = runner.invoke(main, ["plan", "--pcts", "0,0,1", "--total", "10"])
    assert result.exit_code == 0
    assert "a          6" in result.output
    result = runner.invoke(main, ["plan", "--pcts", "0.5,0.5", "--total", "10"])
    assert result.exit_code == 2  # usage error: needs three values


def test_seed_roster_export_import_cycle(runner, tmp_path):
    data = tmp_path / "data"
    result = runner.invoke(main, ["seed", "--data-dir", str(data)])
    assert result.exit_code == 0
    assert "seeded 6 pages" in result.output

    roster_file = tmp_path / "roster.tsv"
    roster_file.write_text("s7\tNew Student\tCGT=D\n", encoding="utf-8")
    result = runner.invoke(main, ["roster", str(roster_file), "--data-dir", str(data)])
    assert result.exit_code == 0 and "loaded 1 students" in result.output

    out_file = tmp_path / "wheel.page"
    result = runner.invoke(
        main, ["export", "ACGT-000001", "--data-dir", str(data), "-o", str(out_file)]
    )
    assert result.exit_code == 0
    text = out_file.read_text(encoding="utf-8")
    assert text.startswith("%ID ACGT-000001")

    # re-import under a fresh id
    new_page = text.replace("ACGT-000001", "ACGT-000042", 1)
    page_file = tmp_path / "copy.page"
    page_file.write_text(new_page, encoding="utf-8")
    result = runner.invoke(main, ["import", str(page_file), "--data-dir", str(data)])
    assert result.exit_code == 0 and "ACGT-000042" in result.output

    result = runner.invoke(main, ["export", "ACGT-000042", "--data-dir", str(data)])
    assert result.exit_code == 0 and "%TITLE Wheel graph" in result.output


def test_import_invalid_page_exits_1(runner, tmp_path):
    bad = tmp_path / "bad.page"
    bad.write_text(
        "%ID ACGT-000050\n%TITLE t\n%KIND special-graph\n%DEF d\n"
        "%REL ACGT-999999\n%STATUS Published\n",
        encoding="utf-8",
    )
    result = runner.invoke(main, ["import", str(bad), "--data-dir", str(tmp_path / "d2")])
    assert result.exit_code == 1
    assert "validation-failed" in result.output
