"""
CLI command handlers for ce-calabi.
"""

import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from ..domain.errors import CeCalabiError, PresentationParseError
from ..domain.models import (
    CheckStatus,
    CommandName,
    ComplexKind,
    EngineConfig,
    OutputMode,
    Report,
    RunConfig,
    parse_window,
)
from ..domain.presentation import DgaPresentation
from ..infrastructure.config_manager import ConfigManager
from ..infrastructure.fixtures import available_fixtures
from ..infrastructure.logging_adapter import LoggingAdapter
from ..services.engine_service import EngineService

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

MARKERS = {
    CheckStatus.PASS: "PASS",
    CheckStatus.FAIL: "FAIL",
    CheckStatus.SKIPPED: "SKIP",
}

VERSION = "ce-calabi 0.1.0"


class CLICommands:
    """Handle CLI commands and argument parsing"""

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        self.console = LoggingAdapter()
        self.config_manager = config_manager or ConfigManager()

    def create_parser(self) -> argparse.ArgumentParser:
        """Create the main argument parser"""
        parser = argparse.ArgumentParser(
            prog="ce-calabi",
            description="ce-calabi - exact Z2 engine for Chekanov-Eliashberg algebras "
            "and their 2-copy bimodules",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  ce-calabi validate knot.leg                   Check d^2 = 0, degrees and marks
  ce-calabi cy --fixture unknot --json          CY tables as JSON
  ce-calabi hochschild knot.leg --window=-4:4   Homology dims of Cone(CY)
  ce-calabi verify --fixture trefoil --k 2      Every registered identity
  ce-calabi config show                         Show current configuration

Exit codes: 0 all checks pass, 1 a check failed, 2 input or config error.
            """,
        )
        parser.add_argument("--version", action="version", version=VERSION)

        subparsers = parser.add_subparsers(dest="command", help="Available commands")

        for name, help_text in (
            (CommandName.VALIDATE, "Validate a presentation"),
            (CommandName.TWOCOPY, "Print the 2-copy bimodule tables"),
            (CommandName.CY, "Print the CY map with its chain-map and duality checks"),
            (CommandName.HOCHSCHILD, "Homology dimensions of a cyclic complex"),
            (CommandName.VERIFY, "Run every registered identity"),
            (CommandName.REPORT, "Everything, as one report"),
        ):
            sub = subparsers.add_parser(name.value, help=help_text)
            self._add_common_arguments(sub)
            if name == CommandName.HOCHSCHILD:
                sub.add_argument(
                    "--complex",
                    choices=[k.value for k in ComplexKind],
                    default=ComplexKind.CONE_CY.value,
                    help="Complex to slice (default: cone)",
                )

        config_parser = subparsers.add_parser("config", help="Configuration management")
        config_subparsers = config_parser.add_subparsers(dest="config_action")
        config_subparsers.add_parser("show", help="Show current configuration")
        config_subparsers.add_parser("path", help="Show configuration file path")
        init_parser = config_subparsers.add_parser(
            "init", help="Write the default configuration"
        )
        init_parser.add_argument(
            "--force",
            action="store_true",
            help="Overwrite an existing configuration",
        )

        return parser

    def _add_common_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("input", nargs="?", help="Presentation file (.leg)")
        parser.add_argument(
            "--fixture",
            choices=available_fixtures(),
            help="Use a shipped presentation instead of a file",
        )
        parser.add_argument("--window", help="Degree window d0:d1")
        parser.add_argument(
            "--max-len", type=int, dest="max_len", help="Pure word length cap"
        )
        parser.add_argument(
            "--k", type=int, dest="k_max", help="Highest A-infinity arity"
        )
        parser.add_argument(
            "--sample", type=int, help="Sample this many A-infinity tuples per check"
        )
        parser.add_argument("--seed", type=int, default=0, help="Seed for --sample")
        parser.add_argument(
            "--json", action="store_true", help="Print the report as JSON"
        )
        parser.add_argument("--verbose", action="store_true", help="Debug logging")

    def handle_command(self, args: argparse.Namespace) -> int:
        """Handle the parsed command"""
        try:
            if args.command == "config":
                return self._handle_config(args)
            if not args.command:
                self.console.error("A command is required (see --help)")
                return EXIT_INPUT_ERROR
            if getattr(args, "verbose", False):
                self.console.set_verbose(True)
            return self._handle_run(args)

        except KeyboardInterrupt:
            self.console.info("Operation cancelled by user")
            return EXIT_CHECK_FAILED
        except PresentationParseError as e:
            for diagnostic in e.diagnostics:
                print(str(diagnostic), file=sys.stderr)
            self.console.error(f"[{e.code}] {len(e.diagnostics)} parse diagnostic(s)")
            return EXIT_INPUT_ERROR
        except CeCalabiError as e:
            self.console.error(f"[{e.code}] {e}")
            return EXIT_INPUT_ERROR
        except (OSError, ValueError, ValidationError) as e:
            self.console.error(f"[config] {e}")
            return EXIT_INPUT_ERROR

    def build_run_config(self, args: argparse.Namespace) -> RunConfig:
        """Merge command-line flags over the stored defaults.

        Raises:
            ValueError: on a malformed window or an invalid basis cap override
        """
        engine: EngineConfig = self.config_manager.load_config()
        defaults = engine.defaults
        output = OutputMode.JSON if args.json else defaults.output
        if args.command == CommandName.REPORT.value:
            output = OutputMode.JSON
        return RunConfig(
            input_path=args.input,
            fixture=args.fixture,
            command=CommandName(args.command),
            window=parse_window(args.window or defaults.window),
            max_len=args.max_len if args.max_len is not None else defaults.max_len,
            k_max=args.k_max if args.k_max is not None else defaults.k_max,
            output=output,
            complex=ComplexKind(getattr(args, "complex", ComplexKind.CONE_CY.value)),
            basis_cap=self.config_manager.resolve_basis_cap(engine),
            sample=args.sample if args.sample is not None else defaults.sample,
            seed=args.seed,
        )

    def _handle_run(self, args: argparse.Namespace) -> int:
        config = self.build_run_config(args)
        service = EngineService(self.console)
        presentation = service.load(config)
        with self.console.timed(f"{config.command.value} {presentation.name}"):
            report = self._run_command(service, presentation, config)

        print(render_report(report, config.output))
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED

    def _run_command(
        self, service: EngineService, presentation: DgaPresentation, config: RunConfig
    ) -> Report:
        if config.command == CommandName.VALIDATE:
            report = service.validate(presentation)
        elif config.command == CommandName.TWOCOPY:
            report = service.twocopy(presentation, config.max_len)
        elif config.command == CommandName.CY:
            report = service.cy(presentation, config.max_len)
        elif config.command == CommandName.HOCHSCHILD:
            report = service.hochschild(
                presentation,
                config.complex,
                config.window,
                config.max_len,
                config.basis_cap,
            )
        elif config.command == CommandName.VERIFY:
            report = service.verify(
                presentation, config.k_max, config.max_len, config.sample, config.seed
            )
        else:
            report = service.report(presentation, config)
        return report

    def _handle_config(self, args: argparse.Namespace) -> int:
        """Handle config command"""
        if not args.config_action:
            self.console.error("Config command requires an action (show, path, init)")
            return EXIT_INPUT_ERROR

        if args.config_action == "show":
            return self._show_config()
        elif args.config_action == "path":
            print(self.config_manager.get_config_path())
            return EXIT_OK
        elif args.config_action == "init":
            return self._init_config(args.force)
        else:
            self.console.error(f"Unknown config action: {args.config_action}")
            return EXIT_INPUT_ERROR

    def _show_config(self) -> int:
        """Show current configuration"""
        config = self.config_manager.load_config()
        source = (
            self.config_manager.get_config_path()
            if self.config_manager.config_exists()
            else "built-in defaults"
        )
        print(f"Configuration ({source})")
        print(f"  basis_cap: {self.config_manager.resolve_basis_cap(config)}")
        print(f"  window:    {config.defaults.window}")
        print(f"  max_len:   {config.defaults.max_len}")
        print(f"  k_max:     {config.defaults.k_max}")
        print(f"  output:    {config.defaults.output.value}")
        print(f"  sample:    {config.defaults.sample}")
        return EXIT_OK

    def _init_config(self, force: bool) -> int:
        if self.config_manager.config_exists() and not force:
            self.console.error("Configuration already exists!")
            self.console.info(f"Location: {self.config_manager.get_config_path()}")
            self.console.info(
                "Use --force to overwrite or 'ce-calabi config show' to view"
            )
            return EXIT_CHECK_FAILED
        self.config_manager.create_default_config()
        self.console.info(f"Wrote {self.config_manager.get_config_path()}")
        return EXIT_OK


def render_report(report: Report, output: OutputMode) -> str:
    """Render a report; JSON output is byte-identical for identical reports."""
    if output == OutputMode.JSON:
        return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2)

    lines: List[str] = [f"{report.command} {report.presentation}"]
    for name, table in report.tables.items():
        lines.append(f"\n[{name}]")
        if isinstance(table, dict):
            for key, value in table.items():
                lines.append(f"  {key}: {value}")
        else:
            lines.append(f"  {' < '.join(str(v) for v in table) or '(none)'}")
    if report.checks:
        lines.append("")
    for check in report.checks:
        marker = MARKERS[check.status]
        suffix = " (advisory)" if check.advisory else ""
        line = f"{marker} {check.check} [{check.tested} tested]{suffix}"
        if check.masked_degrees:
            line += f" masked {check.masked_degrees}"
        if check.detail:
            line += f" - {check.detail}"
        lines.append(line)
        if check.counterexample:
            for key, value in sorted(check.counterexample.items()):
                lines.append(f"    {key}: {value}")
    if report.passed:
        verdict = "all checks passed"
    else:
        verdict = f"{len(report.failures())} failure(s)"
    lines.append(f"\n{verdict}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    cli = CLICommands()
    parser = cli.create_parser()
    args = parser.parse_args(argv)

    return cli.handle_command(args)


if __name__ == "__main__":
    sys.exit(main())
