"""
Exception hierarchy with stable codes.

The CLI maps every ``CeCalabiError`` to exit code 2 and prints its ``code``.
"""

from typing import List, Optional


class CeCalabiError(Exception):
    """Base class for all engine errors."""

    code = "error"


class PresentationParseError(CeCalabiError, ValueError):
    """Raised when a presentation text has one or more diagnostics."""

    code = "parse"

    def __init__(self, diagnostics: "Optional[List[object]]" = None):
        self.diagnostics = list(diagnostics or [])
        lines = [str(d) for d in self.diagnostics]
        details = "".join(f"\n  {line}" for line in lines)
        super().__init__(f"{len(lines)} parse diagnostic(s)" + details)


class UnknownGeneratorError(CeCalabiError, KeyError):
    """A generator name that the presentation does not declare."""

    code = "unknown-generator"

    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"unknown generator: {self.name}"


class GradingError(CeCalabiError, ValueError):
    code = "grading"


class CopyMismatchError(CeCalabiError, ValueError):
    code = "copy-mismatch"


class ArityError(CeCalabiError, ValueError):
    code = "arity"


class ChainMapError(CeCalabiError, RuntimeError):
    code = "chain-map"


class BasisCapExceededError(CeCalabiError, RuntimeError):
    """A slice would exceed the configured basis cap."""

    code = "basis-cap"

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"slice basis has {size} elements, cap is {cap}")


class PreconditionError(CeCalabiError, RuntimeError):
    code = "precondition"
