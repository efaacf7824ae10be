"""
Engine service: runs each CLI command against a presentation and builds its report.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from ..domain.algebra import GradingConvention, MixedChord
from ..domain.errors import BasisCapExceededError
from ..domain.interfaces import BananaOracle, ConsoleInterface
from ..domain.models import CheckResult, CheckStatus, ComplexKind, Report, RunConfig
from ..domain.presentation import DgaPresentation
from ..infrastructure.fixtures import load_fixture
from ..infrastructure.parser import parse_presentation
from . import bimodules as bm
from . import cyclic as cy
from .homology import DEFAULT_BASIS_CAP, hochschild_homology
from .verification import (
    bimodule_suite,
    semifree_check,
    validate,
    verify_cy_self_duality,
    verify_presentation,
)

CONE_CHECKS: Dict[ComplexKind, Tuple[str, str]] = {
    ComplexKind.CONE_CY: ("cone-acyclic", "acyclic for displaceable Legendrians"),
    ComplexKind.CONE_F: ("cone-f-acyclic", "F is a quasi-isomorphism"),
    ComplexKind.CONE_G: ("cone-g-acyclic", "G is a quasi-isomorphism"),
    ComplexKind.CONE_H: ("cone-h-acyclic", "H is a quasi-isomorphism"),
    ComplexKind.CONE_NU: ("cone-nu-acyclic", "nu is a quasi-isomorphism"),
}


class EngineService:
    """Command layer between the CLI and the algebra."""

    def __init__(self, console: Optional[ConsoleInterface] = None):
        self.console = console
        self._suites: Dict[Tuple[DgaPresentation, int], List[CheckResult]] = {}

    def bimodule_checks(
        self,
        presentation: DgaPresentation,
        max_len: int,
        banana_oracle: Optional[BananaOracle] = None,
    ) -> List[CheckResult]:
        """The 2-copy suite, run once per presentation and length cap."""
        if banana_oracle is not None:
            return bimodule_suite(presentation, max_len, banana_oracle)
        key = (presentation, max_len)
        if key not in self._suites:
            self._suites[key] = bimodule_suite(presentation, max_len)
        elif self.console:
            self.console.debug(f"Reusing 2-copy checks for {presentation.name}")
        return [check.model_copy(deep=True) for check in self._suites[key]]

    def load(self, config: RunConfig) -> DgaPresentation:
        """Read the presentation named by ``config``.

        Raises:
            PresentationParseError: on any diagnostic
            OSError: if the file cannot be read
        """
        if config.fixture:
            presentation = load_fixture(config.fixture)
        else:
            path = Path(config.input_path or "")
            presentation = parse_presentation(path.read_bytes(), name=path.stem)
        if self.console:
            self.console.debug(
                f"Loaded {presentation.name}: n={presentation.n}, "
                f"{len(presentation.generators)} generator(s)"
            )
        return presentation

    def validate(self, presentation: DgaPresentation) -> Report:
        report = validate(presentation)
        if self.console:
            self.console.info(
                f"validate {presentation.name}: {len(report.failures())} failure(s)"
            )
        return report

    def twocopy(self, presentation: DgaPresentation, max_len: int) -> Report:
        """Generator tables of Ĉ₊ and Č₋, their differentials and the semifree order."""
        P = presentation
        report = Report(presentation=P.name, command="twocopy")
        report.tables["c_hat_plus"] = self._generator_table(
            P, bm.hat_generators(P), bm.mhat1, "c-hat-plus"
        )
        report.tables["c_check_minus"] = self._generator_table(
            P, bm.check_generators(P), bm.mcheck1, "c-minus"
        )
        order = bm.semifree_order(P)
        report.tables["semifree_order"] = [str(g) for g in order] if order else []
        checks = self.bimodule_checks(P, max_len)
        squares = ("mhat1-squared", "mcheck1-squared")
        report.extend([c for c in checks if c.check in squares])
        report.add(semifree_check(P))
        return report

    def _generator_table(
        self,
        presentation: DgaPresentation,
        generators: List[MixedChord],
        diff: Callable[[DgaPresentation, bm.BimoduleElement], bm.BimoduleElement],
        convention: str,
    ) -> Dict[str, Dict[str, object]]:
        table: Dict[str, Dict[str, object]] = {}
        grading = GradingConvention(convention)
        for g in generators:
            image = diff(presentation, bm.BimoduleElement.generator(g))
            table[str(g)] = {
                "degree": bm.bimodule_degree(presentation, ((), g, ()), grading),
                "differential": str(image),
            }
        return table

    def cy(self, presentation: DgaPresentation, max_len: int) -> Report:
        """CY tables with the chain-map, nu and self-duality checks."""
        P = presentation
        report = Report(presentation=P.name, command="cy")
        report.tables["cy_bimodule"] = {
            str(g): str(bm.cy_bimodule(P, bm.BimoduleElement.generator(g)))
            for g in bm.hat_generators(P)
        }
        report.tables["cy1"] = {
            str(g): str(cy.cy_d(P, [cy.CyclicElement.of(g)]))
            for g in bm.hat_generators(P)
        }
        checks = self.bimodule_checks(P, max_len)
        wanted = ("cy-chain-map", "nu-chain-map", "cy-degree")
        report.extend([c for c in checks if c.check in wanted])
        report.add(verify_cy_self_duality(P))
        return report

    def hochschild(
        self,
        presentation: DgaPresentation,
        kind: ComplexKind,
        window: Tuple[int, int],
        max_len: int,
        basis_cap: int = DEFAULT_BASIS_CAP,
    ) -> Report:
        """Homology dimensions of one cyclic complex on a window slice."""
        report = Report(presentation=presentation.name, command="hochschild")
        report.extend(
            self._homology_checks(
                presentation, kind, window, max_len, basis_cap, report
            )
        )
        return report

    def _homology_checks(
        self,
        presentation: DgaPresentation,
        kind: ComplexKind,
        window: Tuple[int, int],
        max_len: int,
        basis_cap: int,
        report: Report,
    ) -> List[CheckResult]:
        result = hochschild_homology(
            presentation, kind, window, max_len, basis_cap, self.console
        )
        dims = {str(k): v for k, v in result.dims.items()}
        report.tables[f"homology_{kind.value}"] = dims
        checks = [
            CheckResult(
                check=f"homology-{kind.value}",
                status=CheckStatus.PASS,
                tested=len(result.dims),
                window=window,
                masked_degrees=result.masked,
                detail=f"word length <= {max_len}",
            )
        ]
        if kind.is_cone:
            nonzero = {k: v for k, v in result.unmasked().items() if v}
            name, expectation = CONE_CHECKS[kind]
            checks.append(
                CheckResult(
                    check=name,
                    status=CheckStatus.FAIL if nonzero else CheckStatus.PASS,
                    tested=len(result.dims),
                    window=window,
                    masked_degrees=result.masked,
                    counterexample={"dims": {str(k): v for k, v in nonzero.items()}}
                    if nonzero
                    else None,
                    advisory=True,
                    detail=expectation,
                )
            )
        return checks

    def verify(
        self,
        presentation: DgaPresentation,
        k_max: int,
        max_len: int,
        sample: int = 0,
        seed: int = 0,
    ) -> Report:
        return verify_presentation(
            presentation,
            k_max,
            max_len,
            sample,
            seed,
            self.console,
            bimodule_checks=self.bimodule_checks,
        )

    def report(self, presentation: DgaPresentation, config: RunConfig) -> Report:
        """Verification, 2-copy and CY tables and the homology of every complex."""
        P = presentation
        full = self.verify(P, config.k_max, config.max_len, config.sample, config.seed)
        full.command = "report"
        if any(
            c.check == "verification" and c.status == CheckStatus.SKIPPED
            for c in full.checks
        ):
            return full
        for partial in (self.twocopy(P, config.max_len), self.cy(P, config.max_len)):
            full.tables.update(partial.tables)
        for kind in ComplexKind:
            try:
                full.extend(
                    self._homology_checks(
                        P, kind, config.window, config.max_len, config.basis_cap, full
                    )
                )
            except BasisCapExceededError as e:
                full.add(
                    CheckResult(
                        check=f"homology-{kind.value}",
                        status=CheckStatus.SKIPPED,
                        detail=str(e),
                    )
                )
        return full
