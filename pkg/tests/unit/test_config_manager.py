"""
Unit tests for configuration manager.
"""

import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from src.ce_calabi.domain.models import EngineConfig, OutputMode, parse_window
from src.ce_calabi.infrastructure.config_manager import BASIS_CAP_ENV, ConfigManager


class TestConfigManager:
    """Test cases for ConfigManager."""

    def test_init_default_config_dir(self):
        """Test initialization with default config directory."""
        with tempfile.TemporaryDirectory() as temp_dir:
            with patch("pathlib.Path.home") as mock_home:
                mock_home.return_value = Path(temp_dir)
                config_manager = ConfigManager()

                expected_config_dir = Path(temp_dir) / ".ce-calabi"
                assert config_manager.config_dir == expected_config_dir
                assert config_manager.config_file == expected_config_dir / "config.ini"

    def test_init_custom_config_dir(self):
        """Test initialization with custom config directory."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            assert config_manager.config_dir == Path(temp_dir)
            assert config_manager.config_file == Path(temp_dir) / "config.ini"

    def test_config_exists_false(self):
        """Test config_exists when file doesn't exist."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            assert not config_manager.config_exists()

    def test_load_config_file_not_exists(self):
        """Test load_config falls back to built-in defaults."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            config = config_manager.load_config()

            assert config == EngineConfig()
            assert config.limits.basis_cap == 200000
            assert config.defaults.window == "-6:6"

    def test_load_config_file_exists(self):
        """Test load_config when file exists."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            config_content = """
[limits]
basis_cap = 5000

[defaults]
window = -2:3
max_len = 4
output = json
"""
            config_file = Path(temp_dir) / "config.ini"
            config_file.write_text(config_content)

            config = config_manager.load_config()

            assert config.limits.basis_cap == 5000
            assert config.defaults.window == "-2:3"
            assert config.defaults.max_len == 4
            assert config.defaults.k_max == 3
            assert config.defaults.output == OutputMode.JSON

    def test_load_config_invalid_window(self):
        """Test an empty window in the file is rejected."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)
            (Path(temp_dir) / "config.ini").write_text("[defaults]\nwindow = 3:1\n")

            with pytest.raises(ValidationError):
                config_manager.load_config()

    def test_save_and_reload(self):
        """Test save_config writes every section and reloads the same values."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)
            config = EngineConfig()
            config.defaults.k_max = 2

            config_manager.save_config(config)

            content = config_manager.config_file.read_text()
            assert "[limits]" in content
            assert "[defaults]" in content
            assert config_manager.load_config() == config

    def test_create_default_config(self):
        """Test create_default_config method."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            config = config_manager.create_default_config()

            assert isinstance(config, EngineConfig)
            assert config_manager.config_file.exists()

    def test_get_config_path(self):
        """Test get_config_path method."""
        with tempfile.TemporaryDirectory() as temp_dir:
            config_manager = ConfigManager(temp_dir)

            config_path = config_manager.get_config_path()

            assert config_path == str(Path(temp_dir) / "config.ini")


class TestBasisCapOverride:
    """Test cases for the environment override of the basis cap."""

    def test_no_override(self, monkeypatch):
        """Test the configured cap is used without the variable."""
        monkeypatch.delenv(BASIS_CAP_ENV, raising=False)
        assert ConfigManager("unused").resolve_basis_cap(EngineConfig()) == 200000

    def test_override(self, monkeypatch):
        """Test the variable wins over the file."""
        monkeypatch.setenv(BASIS_CAP_ENV, "1234")
        assert ConfigManager("unused").resolve_basis_cap(EngineConfig()) == 1234

    @pytest.mark.parametrize("value", ["lots", "0", "-5"])
    def test_invalid_override(self, monkeypatch, value):
        """Test non-positive or non-integer overrides are rejected."""
        monkeypatch.setenv(BASIS_CAP_ENV, value)
        with pytest.raises(ValueError):
            ConfigManager("unused").resolve_basis_cap(EngineConfig())


class TestParseWindow:
    """Test cases for window parsing."""

    def test_valid(self):
        """Test negative bounds parse."""
        assert parse_window("-4:4") == (-4, 4)

    @pytest.mark.parametrize("text", ["4", "a:b", "3:1", "1:2:3"])
    def test_invalid(self, text):
        """Test malformed and empty windows."""
        with pytest.raises(ValueError):
            parse_window(text)
