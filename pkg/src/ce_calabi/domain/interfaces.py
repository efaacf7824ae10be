"""
Domain interfaces for the engine.

Services depend on these contracts rather than on concrete classes, so tests
can swap in mocks (console) or fake oracles (negative controls).
"""

from abc import ABC, abstractmethod
from typing import Hashable, Iterable, List, Protocol, Tuple

from .algebra import Word, Z2Chain


class ConsoleInterface(ABC):
    """Interface for operational log output."""

    @abstractmethod
    def info(self, message: str) -> None:
        """Log an informational message."""
        pass

    @abstractmethod
    def error(self, message: str) -> None:
        """Log an error message."""
        pass

    @abstractmethod
    def warning(self, message: str) -> None:
        """Log a warning message."""
        pass

    @abstractmethod
    def debug(self, message: str) -> None:
        """Log a debug message."""
        pass


class BananaOracle(Protocol):
    """Source of rigid long banana counts with positive punctures at gamma_10.

    Returns one ``(left, beta, right)`` triple per disc; the engine places it
    as ``right . beta_01 . left``.
    """

    def __call__(
        self, presentation: object, generator: str
    ) -> List[Tuple[Word, str, Word]]:
        ...


class ChainComplex(Protocol):
    """A graded complex whose basis can be enumerated within a length cap."""

    name: str

    def basis(self, max_len: int) -> Iterable[Hashable]:
        """Every basis element with pure words of length at most ``max_len``."""
        ...

    def degree(self, element: Hashable) -> int:
        """Degree of a basis element."""
        ...

    def differential(self, element: Hashable) -> Z2Chain:
        """Differential of a basis element as a chain of basis elements."""
        ...
