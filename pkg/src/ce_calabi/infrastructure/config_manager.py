"""
INI-based configuration manager for ce-calabi.
"""

import configparser
import os
from pathlib import Path
from typing import Optional

from ..domain.models import DefaultsConfig, EngineConfig, LimitsConfig, OutputMode

BASIS_CAP_ENV = "CE_CALABI_BASIS_CAP"


class ConfigManager:
    """Configuration manager using INI format."""

    def __init__(self, config_dir: Optional[str] = None):
        """Initialize INI config manager."""
        if config_dir:
            self.config_dir = Path(config_dir)
        else:
            self.config_dir = Path.home() / ".ce-calabi"

        self.config_file = self.config_dir / "config.ini"

    def _ensure_config_dir(self) -> None:
        """Ensure configuration directory exists."""
        self.config_dir.mkdir(parents=True, exist_ok=True)

    def load_config(self) -> EngineConfig:
        """Load configuration from the INI file, or defaults if there is none."""
        if not self.config_file.exists():
            return EngineConfig()

        config_parser = configparser.ConfigParser()
        config_parser.read(self.config_file)

        limits = LimitsConfig(
            basis_cap=config_parser.getint("limits", "basis_cap", fallback=200000),
        )
        defaults = DefaultsConfig(
            window=config_parser.get("defaults", "window", fallback="-6:6"),
            max_len=config_parser.getint("defaults", "max_len", fallback=3),
            k_max=config_parser.getint("defaults", "k_max", fallback=3),
            output=OutputMode(config_parser.get("defaults", "output", fallback="text")),
            sample=config_parser.getint("defaults", "sample", fallback=0),
        )
        return EngineConfig(limits=limits, defaults=defaults)

    def save_config(self, config: EngineConfig) -> None:
        """Save configuration to INI format."""
        self._ensure_config_dir()
        config_parser = configparser.ConfigParser()

        config_parser["limits"] = {"basis_cap": str(config.limits.basis_cap)}
        config_parser["defaults"] = {
            "window": config.defaults.window,
            "max_len": str(config.defaults.max_len),
            "k_max": str(config.defaults.k_max),
            "output": config.defaults.output.value,
            "sample": str(config.defaults.sample),
        }

        with open(self.config_file, "w") as f:
            config_parser.write(f)

    def config_exists(self) -> bool:
        """Check if configuration file exists."""
        return self.config_file.exists()

    def create_default_config(self) -> EngineConfig:
        """Create and save default configuration."""
        default_config = EngineConfig()
        self.save_config(default_config)
        return default_config

    def get_config_path(self) -> str:
        """Get the path to the configuration file."""
        return str(self.config_file)

    def resolve_basis_cap(self, config: EngineConfig) -> int:
        """Basis cap from the environment override, else from the config.

        Raises:
            ValueError: if the environment value is not a positive integer
        """
        raw = os.environ.get(BASIS_CAP_ENV)
        if raw is None or raw.strip() == "":
            return config.limits.basis_cap
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(
                f"{BASIS_CAP_ENV} must be an integer, got {raw!r}"
            ) from None
        if value <= 0:
            raise ValueError(f"{BASIS_CAP_ENV} must be positive, got {value}")
        return value
