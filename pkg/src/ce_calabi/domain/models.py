"""
Domain models for reports, diagnostics and configuration.

All models use Pydantic for validation and serialization. Algebraic values
(words, polynomials, chords) live in ``domain.algebra`` as frozen dataclasses
because they sit on the hot path of every evaluation.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class Severity(str, Enum):
    """Diagnostic severity."""

    ERROR = "error"
    WARNING = "warning"


class DiagnosticCode(str, Enum):
    """Stable machine-readable parse diagnostic codes."""

    SYNTAX = "syntax"
    UNKNOWN_GENERATOR = "unknown-generator"
    DUPLICATE_GENERATOR = "duplicate-generator"
    MALFORMED_MARK = "malformed-mark"
    MISSING_HEADER = "missing-header"


class ParseDiagnostic(BaseModel):
    """One problem found while parsing a presentation."""

    severity: Severity = Field(default=Severity.ERROR, description="Severity level")
    code: DiagnosticCode = Field(description="Stable diagnostic code")
    line: int = Field(ge=0, description="1-based source line, 0 for whole-file issues")
    column: int = Field(default=0, ge=0, description="1-based column, 0 if unknown")
    message: str = Field(description="Human-readable explanation")

    def __str__(self) -> str:
        return (
            f"{self.line}:{self.column}: {self.severity.value} "
            f"[{self.code.value}] {self.message}"
        )


class CheckStatus(str, Enum):
    """Outcome of one verification check.

    Attributes:
        PASS: every tested element satisfied the identity
        FAIL: at least one counterexample was found
        SKIPPED: the check does not apply (e.g. no lengths for action checks)
    """

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    """Result of a single named check, in the report JSON schema."""

    check: str = Field(description="Check identifier")
    status: CheckStatus = Field(description="Outcome")
    tested: int = Field(
        default=0, ge=0, description="Number of elements or tuples tested"
    )
    window: Optional[Tuple[int, int]] = Field(
        default=None, description="Degree window for homology checks"
    )
    masked_degrees: List[int] = Field(
        default_factory=list, description="Degrees whose homology is unreliable"
    )
    counterexample: Optional[Dict[str, Any]] = Field(
        default=None, description="First failing input with its expansion"
    )
    advisory: bool = Field(
        default=False, description="Advisory checks never change the exit code"
    )
    detail: Optional[str] = Field(default=None, description="Free-form note")

    @property
    def passed(self) -> bool:
        return self.status != CheckStatus.FAIL


class Report(BaseModel):
    """Ordered collection of check results for one presentation."""

    presentation: str = Field(description="Presentation name")
    command: str = Field(description="Command that produced the report")
    checks: List[CheckResult] = Field(default_factory=list)
    tables: Dict[str, Any] = Field(
        default_factory=dict, description="Command-specific tables"
    )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.advisory)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def extend(self, results: List[CheckResult]) -> None:
        self.checks.extend(results)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.advisory]


class OutputMode(str, Enum):
    """Report output format."""

    TEXT = "text"
    JSON = "json"


class CommandName(str, Enum):
    """Batch commands of the CLI."""

    VALIDATE = "validate"
    TWOCOPY = "twocopy"
    CY = "cy"
    HOCHSCHILD = "hochschild"
    VERIFY = "verify"
    REPORT = "report"


class ComplexKind(str, Enum):
    """Complexes that can be sliced for homology.

    The first three are cyclic; the ``cone-*`` kinds are cones of the
    comparison maps F, G, H and nu on the 2-copy bimodules.
    """

    C_HAT_PLUS = "chat"
    C_CHECK_MINUS = "ccheck"
    CONE_CY = "cone"
    CONE_F = "cone-f"
    CONE_G = "cone-g"
    CONE_H = "cone-h"
    CONE_NU = "cone-nu"

    @property
    def is_cone(self) -> bool:
        return self.value.startswith("cone")


def parse_window(text: str) -> Tuple[int, int]:
    """Parse ``d0:d1`` into an ordered pair."""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise ValueError(f"window must look like d0:d1, got {text!r}") from None
    if lo > hi:
        raise ValueError(f"window {text!r} is empty")
    return lo, hi


class LimitsConfig(BaseModel):
    """Resource limits."""

    basis_cap: int = Field(default=200000, gt=0, description="Maximum slice basis size")


class DefaultsConfig(BaseModel):
    """Defaults for command flags."""

    window: str = Field(default="-6:6", description="Degree window d0:d1")
    max_len: int = Field(default=3, gt=0, description="Pure word length cap")
    k_max: int = Field(default=3, gt=0, description="Highest A-infinity arity checked")
    output: OutputMode = Field(default=OutputMode.TEXT, description="Report format")
    sample: int = Field(
        default=0, ge=0, description="Tuples sampled per arity, 0 = exhaustive"
    )

    @field_validator("window")
    @classmethod
    def _window_is_valid(cls, value: str) -> str:
        parse_window(value)
        return value


class EngineConfig(BaseModel):
    """Persistent engine configuration stored in ``config.ini``."""

    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    defaults: DefaultsConfig = Field(default_factory=DefaultsConfig)


class RunConfig(BaseModel):
    """Resolved configuration of one CLI invocation."""

    input_path: Optional[str] = Field(default=None, description="Presentation file")
    fixture: Optional[str] = Field(default=None, description="Shipped fixture name")
    command: CommandName = Field(description="Command to run")
    window: Tuple[int, int] = Field(default=(-6, 6), description="Degree window")
    max_len: int = Field(default=3, gt=0, description="Length cap L")
    k_max: int = Field(default=3, gt=0, description="A-infinity arity cap")
    output: OutputMode = Field(default=OutputMode.TEXT)
    complex: ComplexKind = Field(default=ComplexKind.CONE_CY)
    basis_cap: int = Field(default=200000, gt=0)
    sample: int = Field(default=0, ge=0)
    seed: int = Field(default=0)

    @model_validator(mode="after")
    def _check_source(self) -> "RunConfig":
        if self.window[0] > self.window[1]:
            raise ValueError("window is empty")
        if not self.input_path and not self.fixture:
            raise ValueError("either an input path or a fixture is required")
        return self
