"""
Presentations shipped with the package.
"""

from pathlib import Path
from typing import List

from ...domain.presentation import DgaPresentation
from ..parser import parse_presentation

FIXTURE_DIR = Path(__file__).parent


def available_fixtures() -> List[str]:
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.leg"))


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / f"{name}.leg"
    if not path.exists():
        raise FileNotFoundError(
            f"no fixture named '{name}' (have {available_fixtures()})"
        )
    return path


def load_fixture(name: str) -> DgaPresentation:
    """Parse a shipped fixture by name."""
    return parse_presentation(fixture_path(name).read_bytes(), name=name)
