"""
Tests for the command-line driver.
"""

import json
import math
import xml.etree.ElementTree as ET

import pytest

from src.cli import run_cli
from src.formats.terrain_format import parse_terrain
from src.utils.error_handler import EXIT_INFEASIBLE, EXIT_OK, EXIT_VALIDATION
from src.utils.predicates import get_tolerance

T1_PERIMETER = 2 + 2 * math.sqrt(5)


@pytest.fixture
def t1_file(tmp_path):
    path = tmp_path / "t1.txt"
    path.write_text("3\n0 0\n1 2\n2 0\n")
    return str(path)


def stdout_record(capsys):
    return json.loads(capsys.readouterr().out)


class TestSolveCommands:
    """Tests for diameter, triangle and kgon."""

    def test_diameter(self, t1_file, capsys):
        """Test the diameter JSON on stdout."""
        assert run_cli(["diameter", t1_file]) == EXIT_OK
        record = stdout_record(capsys)
        assert record["value"] == pytest.approx(math.sqrt(5), abs=1e-9)

    def test_triangle(self, t1_file, capsys):
        """Test the triangle JSON on stdout."""
        assert run_cli(["triangle", t1_file]) == EXIT_OK
        assert stdout_record(capsys)["value"] == pytest.approx(T1_PERIMETER, abs=1e-9)

    def test_kgon(self, t1_file, capsys):
        """Test k = 4 stays within the guarantee."""
        assert run_cli(["kgon", t1_file, "-k", "4", "--epsilon", "0.25"]) == EXIT_OK
        record = stdout_record(capsys)
        assert 0.75 * T1_PERIMETER <= record["value"] <= T1_PERIMETER + 1e-9

    def test_kgon_two(self, t1_file, capsys):
        """Test k = 2 prints the diameter with a notice."""
        assert run_cli(["kgon", t1_file, "-k", "2"]) == EXIT_OK
        record = stdout_record(capsys)
        assert record["problem"] == "diameter"
        assert record["notice"]

    def test_oracle(self, t1_file, capsys):
        """Test --oracle adds the reference value."""
        assert run_cli(["diameter", t1_file, "--oracle", "--delta", "0.1"]) == EXIT_OK
        record = stdout_record(capsys)
        assert record["oracle_value"] is not None
        assert record["oracle_delta"] == 0.1

    def test_outputs(self, t1_file, tmp_path, capsys):
        """Test --json and --svg write their files."""
        out_json = tmp_path / "out.json"
        out_svg = tmp_path / "out.svg"
        code = run_cli(["triangle", t1_file, "--json", str(out_json), "--svg", str(out_svg)])
        assert code == EXIT_OK
        printed = stdout_record(capsys)
        assert json.loads(out_json.read_text()) == printed
        assert ET.parse(out_svg).getroot().tag.endswith("svg")

    def test_grid_overlay(self, t1_file, tmp_path):
        """Test --grid draws the grid for kgon."""
        out_svg = tmp_path / "grid.svg"
        code = run_cli(["kgon", t1_file, "-k", "3", "--epsilon", "0.5", "--svg", str(out_svg), "--grid"])
        assert code == EXIT_OK
        classes = [el.get("class") for el in ET.parse(out_svg).getroot()]
        assert "grid" in classes


class TestExitCodes:
    """Tests for error exit codes."""

    def test_k_one(self, t1_file):
        """Test k = 1 exits with the infeasible code."""
        assert run_cli(["kgon", t1_file, "-k", "1"]) == EXIT_INFEASIBLE

    def test_triangle_area(self, t1_file):
        """Test the unsupported triangle measure."""
        assert run_cli(["triangle", t1_file, "--measure", "area"]) == EXIT_INFEASIBLE

    def test_bad_epsilon(self, t1_file):
        """Test an invalid epsilon."""
        assert run_cli(["kgon", t1_file, "--epsilon", "0"]) == EXIT_INFEASIBLE

    def test_non_monotone(self, tmp_path, capsys):
        """Test a validation error exits 2 with a JSON error on stderr."""
        path = tmp_path / "bad.txt"
        path.write_text("4\n0 0\n1 2\n1 3\n2 0\n")
        assert run_cli(["diameter", str(path)]) == EXIT_VALIDATION
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["error"] == "NonMonotoneError"

    def test_missing_file(self, tmp_path):
        """Test an unreadable file."""
        assert run_cli(["diameter", str(tmp_path / "nope.txt")]) == EXIT_VALIDATION

    def test_tolerance_scoped_to_run(self, t1_file, capsys):
        """Test --tolerance reaches the record and is undone afterwards."""
        assert run_cli(["triangle", t1_file, "--tolerance", "1e-6"]) == EXIT_OK
        assert stdout_record(capsys)["config"]["tolerance"] == 1e-6
        assert get_tolerance() == 1e-9

    def test_bad_tolerance(self, t1_file):
        """Test a non-positive tolerance."""
        assert run_cli(["diameter", t1_file, "--tolerance", "0"]) == EXIT_VALIDATION

    def test_unknown_command(self):
        """Test argparse errors exit 2."""
        assert run_cli(["hexagon"]) == 2


class TestGenerate:
    """Tests for the generate command."""

    def test_reproducible(self, capsys):
        """Test the same seed prints the same terrain."""
        assert run_cli(["generate", "-n", "6", "--seed", "7"]) == EXIT_OK
        first = capsys.readouterr().out
        assert run_cli(["generate", "-n", "6", "--seed", "7"]) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_written_file_parses(self, tmp_path):
        """Test --out writes a valid terrain."""
        path = tmp_path / "gen.txt"
        assert run_cli(["generate", "-n", "6", "--seed", "3", "--out", str(path)]) == EXIT_OK
        assert parse_terrain(path).n == 6
