"""
Integration tests running the installed entry point on files and fixtures.
"""

import json
from unittest.mock import patch

import pytest

from src.ce_calabi.cli.commands import EXIT_OK, main
from src.ce_calabi.infrastructure.config_manager import BASIS_CAP_ENV
from src.ce_calabi.infrastructure.parser import print_presentation


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep the configuration directory inside the test's temporary path."""
    monkeypatch.delenv(BASIS_CAP_ENV, raising=False)
    with patch("pathlib.Path.home", return_value=tmp_path):
        yield tmp_path


@pytest.mark.integration
class TestCliRoundTrip:
    """End-to-end runs through ``main``."""

    def test_printed_presentation_validates(self, trefoil, tmp_path, capsys):
        """Test a printed presentation reads back and validates from a file."""
        path = tmp_path / "trefoil.leg"
        path.write_text(print_presentation(trefoil))

        assert main(["validate", str(path)]) == EXIT_OK
        assert "all checks passed" in capsys.readouterr().out

    def test_file_name_becomes_presentation_name(self, unknot, tmp_path, capsys):
        """Test JSON reports carry the stem of the input file."""
        path = tmp_path / "my_knot.leg"
        path.write_text(print_presentation(unknot))

        assert main(["validate", str(path), "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["presentation"] == "my_knot"

    def test_report_is_deterministic(self, capsys):
        """Test two report runs print byte-identical JSON."""
        argv = ["report", "--fixture", "unknot", "--k", "2", "--max-len", "2"]

        assert main(argv) == EXIT_OK
        first = capsys.readouterr().out
        assert main(argv) == EXIT_OK
        second = capsys.readouterr().out

        assert first == second
        report = json.loads(first)
        assert report["command"] == "report"
        assert report["tables"]["cy1"] == {"a_10": "y_01", "x_01": "a_01"}

    def test_config_init_feeds_defaults(self, isolated_home, capsys):
        """Test values written by ``config init`` are picked up by later runs."""
        assert main(["config", "init"]) == EXIT_OK
        config_file = isolated_home / ".ce-calabi" / "config.ini"
        assert config_file.exists()

        text = config_file.read_text().replace("output = text", "output = json")
        config_file.write_text(text)
        capsys.readouterr()

        assert main(["validate", "--fixture", "unknot"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["command"] == "validate"
