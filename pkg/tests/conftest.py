"""
Pytest configuration and shared fixtures.
"""

import random
from typing import Callable, List, Sequence, Tuple
from unittest.mock import Mock

import pytest

from src.ce_calabi.domain.presentation import DgaPresentation
from src.ce_calabi.infrastructure.fixtures import load_fixture
from src.ce_calabi.infrastructure.parser import parse_presentation
from src.ce_calabi.services import bimodules, cyclic


def build_random_presentation(seed: int, tier: int = 1) -> DgaPresentation:
    """Random graded presentation whose differential has degree +1 and d² = 0.

    Tier 0 has closed generators only. Tier 1 adds generators ``t_i`` whose
    differential is a sum of equal-degree words in the closed ones. Tier 2
    adds a twin ``u0`` of ``t0`` with the same differential and a generator
    ``s`` with ``d s = w t0 + w u0`` for a closed word ``w``.
    """
    rng = random.Random(seed)
    degrees = {f"c{i}": rng.randint(-1, 1) for i in range(rng.randint(1, 2))}
    closed = list(degrees)
    lines = ["legendrian v1", "dim 1"]
    lines += [f"gen {name} cz {1 - deg}" for name, deg in degrees.items()]

    def weight(letters: Sequence[str]) -> int:
        return sum(degrees[letter] for letter in letters)

    def text(letters: Sequence[str]) -> str:
        return " ".join(letters) or "1"

    tops: List[Tuple[str, int, str]] = []
    if tier >= 1:
        for i in range(rng.randint(1, 2)):
            first = tuple(rng.choices(closed, k=rng.randint(0, 3)))
            monomials = {first}
            for _ in range(rng.randint(0, 3)):
                candidate = tuple(rng.choices(closed, k=rng.randint(0, 3)))
                if weight(candidate) == weight(first):
                    monomials.add(candidate)
            body = " + ".join(text(m) for m in sorted(monomials))
            tops.append((f"t{i}", weight(first) - 1, body))
    if tier >= 2:
        name, deg, body = tops[0]
        tops.append(("u0", deg, body))
        w = tuple(rng.choices(closed, k=rng.randint(0, 1)))
        pair = f"{text(w + (name,))} + {text(w + ('u0',))}"
        tops.append(("s", weight(w) + deg - 1, pair))
    for name, deg, body in tops:
        lines.append(f"gen {name} cz {1 - deg}")
        lines.append(f"d {name} = {body}")
    return parse_presentation("\n".join(lines) + "\n", name=f"random-{seed}")


@pytest.fixture(autouse=True)
def _clear_operation_caches():
    """Drop memoised operation values between tests."""
    yield
    bimodules.clear_caches()
    cyclic.clear_caches()


@pytest.fixture
def unknot() -> DgaPresentation:
    """Provide the standard unknot with one chord."""
    return load_fixture("unknot")


@pytest.fixture
def trefoil() -> DgaPresentation:
    """Provide the right-handed trefoil."""
    return load_fixture("trefoil")


@pytest.fixture
def trefoil_pointed() -> DgaPresentation:
    """Provide the trefoil with discs through a basepoint."""
    return load_fixture("trefoil_pointed")


@pytest.fixture
def banana_presentation() -> DgaPresentation:
    """Provide a surface presentation whose single chord has rigid bananas."""
    return parse_presentation(
        "legendrian v1\ndim 2\ngen a cz 1\nd a = 0\n", name="rigid"
    )


@pytest.fixture
def random_presentation() -> Callable[..., DgaPresentation]:
    """Provide the factory of small graded presentations."""
    return build_random_presentation


@pytest.fixture
def mock_console() -> Mock:
    """Provide a mock console interface."""
    mock = Mock()
    mock.info = Mock()
    mock.error = Mock()
    mock.warning = Mock()
    mock.debug = Mock()
    return mock
