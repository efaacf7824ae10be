"""
Reader and printer for the line-oriented presentation format.

Format::

    legendrian v1
    dim 1
    gen a cz 2 len 3/2
    d a = 0
    dpt a = ^

``#`` starts a comment. A sum is ``0`` or ``+``-separated monomials; a
monomial is whitespace-separated generator names or ``1``. Pointed monomials
carry exactly one ``^``. All problems are collected before reporting.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple, Union

from ..domain.algebra import MarkedWord, TensorPoly, Word, format_word, word
from ..domain.errors import PresentationParseError
from ..domain.models import DiagnosticCode, ParseDiagnostic
from ..domain.presentation import DgaPresentation, GeneratorSpec

HEADER = "legendrian v1"
MARK = "^"
NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
RATIONAL = re.compile(r"^[0-9]+(/[0-9]+)?$")
RESERVED = {"legendrian", "dim", "gen", "cz", "len", "d", "dpt", "x", "y"}


def _positive_rational(token: str) -> Optional[Fraction]:
    """``p`` or ``p/q`` with ``q > 0`` and a positive value, else None."""
    if not RATIONAL.match(token):
        return None
    try:
        value = Fraction(token)
    except ZeroDivisionError:
        return None
    return value if value > 0 else None


@dataclass
class _Reference:
    name: str
    line: int
    column: int


@dataclass
class _Draft:
    n: Optional[int] = None
    generators: List[GeneratorSpec] = field(default_factory=list)
    diff: Dict[str, TensorPoly] = field(default_factory=dict)
    pointed: Dict[str, frozenset] = field(default_factory=dict)
    references: List[_Reference] = field(default_factory=list)


class PresentationParser:
    """Parse presentation text, collecting every diagnostic."""

    def __init__(self) -> None:
        self.diagnostics: List[ParseDiagnostic] = []

    def parse(
        self, text: Union[str, bytes], name: str = "presentation"
    ) -> Tuple[Optional[DgaPresentation], List[ParseDiagnostic]]:
        """Parse ``text``; returns the presentation (or None) and all diagnostics."""
        self.diagnostics = []
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as e:
                self._syntax(0, 0, f"input is not UTF-8: {e}")
                return None, self.diagnostics

        draft = _Draft()
        seen_header = False
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if not seen_header:
                if " ".join(line.split()) != HEADER:
                    self._report(
                        DiagnosticCode.MISSING_HEADER,
                        lineno,
                        1,
                        f"expected '{HEADER}' as the first line",
                    )
                    seen_header = True
                    if line.split()[0] == "legendrian":
                        continue
                else:
                    seen_header = True
                    continue
            self._parse_line(line, lineno, draft)

        if not seen_header:
            self._report(
                DiagnosticCode.MISSING_HEADER, 0, 0, f"missing '{HEADER}' header"
            )
        if draft.n is None:
            self._report(DiagnosticCode.MISSING_HEADER, 0, 0, "missing 'dim <n>' line")

        declared = {g.name for g in draft.generators}
        for ref in draft.references:
            if ref.name not in declared:
                self._report(
                    DiagnosticCode.UNKNOWN_GENERATOR,
                    ref.line,
                    ref.column,
                    f"generator '{ref.name}' is not declared",
                )

        if self.diagnostics or draft.n is None:
            return None, self.diagnostics
        presentation = DgaPresentation(
            name=name,
            n=draft.n,
            generators=tuple(draft.generators),
            diff=draft.diff,
            pointed_diff=draft.pointed,
        )
        return presentation, self.diagnostics

    def _report(
        self, code: DiagnosticCode, line: int, column: int, message: str
    ) -> None:
        self.diagnostics.append(
            ParseDiagnostic(code=code, line=line, column=column, message=message)
        )

    def _syntax(self, line: int, column: int, message: str) -> None:
        self._report(DiagnosticCode.SYNTAX, line, column, message)

    def _parse_line(self, line: str, lineno: int, draft: _Draft) -> None:
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "dim":
            self._parse_dim(tokens, lineno, draft)
        elif keyword == "gen":
            self._parse_gen(tokens, lineno, draft)
        elif keyword in ("d", "dpt"):
            self._parse_table(line, lineno, draft, pointed=keyword == "dpt")
        else:
            self._syntax(lineno, 1, f"unknown directive '{keyword}'")

    def _parse_dim(self, tokens: List[str], lineno: int, draft: _Draft) -> None:
        if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
            self._syntax(lineno, 1, "expected 'dim <positive int>'")
            return
        if draft.n is not None:
            self._syntax(lineno, 1, "dimension declared twice")
            return
        draft.n = int(tokens[1])

    def _parse_gen(self, tokens: List[str], lineno: int, draft: _Draft) -> None:
        if len(tokens) not in (4, 6) or tokens[2] != "cz" or (
            len(tokens) == 6 and tokens[4] != "len"
        ):
            self._syntax(
                lineno,
                1,
                "expected 'gen <name> cz <int> [len <rational>]'",
            )
            return
        name = tokens[1]
        if not NAME.match(name) or name in RESERVED:
            self._syntax(lineno, 5, f"invalid generator name '{name}'")
            return
        try:
            cz = int(tokens[3])
        except ValueError:
            self._syntax(lineno, 1, f"cz must be an integer: '{tokens[3]}'")
            return
        length = None
        if len(tokens) == 6:
            length = _positive_rational(tokens[5])
            if length is None:
                self._syntax(
                    lineno,
                    1,
                    f"len must be a positive rational: '{tokens[5]}'",
                )
                return
        if any(g.name == name for g in draft.generators):
            self._report(
                DiagnosticCode.DUPLICATE_GENERATOR,
                lineno,
                5,
                f"generator '{name}' declared twice",
            )
            return
        draft.generators.append(GeneratorSpec(word(name)[0], cz, length))

    def _parse_table(
        self, line: str, lineno: int, draft: _Draft, pointed: bool
    ) -> None:
        head, sep, body = line.partition("=")
        head_tokens = head.split()
        if not sep or len(head_tokens) != 2:
            self._syntax(
                lineno,
                1,
                f"expected '{head_tokens[0]} <name> = <sum>'",
            )
            return
        target = head_tokens[1]
        target_column = line.find(target) + 1
        draft.references.append(_Reference(target, lineno, target_column))
        existing = draft.pointed if pointed else draft.diff
        if target in existing:
            self._syntax(
                lineno,
                1,
                f"{'dpt' if pointed else 'd'} {target} given twice",
            )
            return
        body_column = len(head) + 2
        monomials = self._parse_sum(body, lineno, body_column, draft, pointed)
        if monomials is None:
            return
        if pointed:
            draft.pointed[target] = frozenset(monomials)  # type: ignore[arg-type]
        else:
            draft.diff[target] = TensorPoly(monomials)  # type: ignore[arg-type]

    def _parse_sum(
        self, body: str, lineno: int, column: int, draft: _Draft, pointed: bool
    ) -> Optional[list]:
        text = body.strip()
        if not text:
            self._syntax(lineno, column, "empty right-hand side")
            return None
        if text == "0":
            return []
        out: list = []
        ok = True
        for part in text.split("+"):
            tokens = part.split()
            if not tokens:
                self._syntax(lineno, column, "empty monomial in sum")
                ok = False
                continue
            marks = tokens.count(MARK)
            if pointed and marks != 1:
                self._report(
                    DiagnosticCode.MALFORMED_MARK,
                    lineno,
                    column,
                    f"pointed monomial '{part.strip()}' needs exactly one '^'",
                )
                ok = False
                continue
            if not pointed and marks:
                self._report(
                    DiagnosticCode.MALFORMED_MARK,
                    lineno,
                    column,
                    "'^' is only allowed in dpt lines",
                )
                ok = False
                continue
            letters = [t for t in tokens if t != MARK]
            if letters == ["1"]:
                letters = []
            elif "1" in letters or "0" in letters:
                self._syntax(
                    lineno,
                    column,
                    f"'1' and '0' must stand alone, got '{part.strip()}'",
                )
                ok = False
                continue
            bad = [t for t in letters if not NAME.match(t)]
            if bad:
                self._syntax(lineno, column, f"invalid token '{bad[0]}'")
                ok = False
                continue
            for letter in letters:
                draft.references.append(_Reference(letter, lineno, column))
            w = word(*letters)
            if pointed:
                before = tokens[: tokens.index(MARK)]
                out.append(MarkedWord(w, sum(1 for t in before if t != "1")))
            else:
                out.append(w)
        if not ok:
            return None
        if pointed:
            return sorted(_collect_marked(out))
        return out


def _collect_marked(items: list) -> Set[MarkedWord]:
    acc: Set[MarkedWord] = set()
    for item in items:
        acc ^= {item}
    return acc


def parse_presentation(
    text: Union[str, bytes], name: str = "presentation"
) -> DgaPresentation:
    """Parse a presentation or raise with every diagnostic.

    Raises:
        PresentationParseError: if the text has any diagnostic
    """
    presentation, diagnostics = PresentationParser().parse(text, name)
    if presentation is None:
        raise PresentationParseError(diagnostics)
    return presentation


def _format_sum(words: List[Word]) -> str:
    return " + ".join(format_word(w) for w in words) if words else "0"


def print_presentation(presentation: DgaPresentation) -> str:
    """Canonical text of a presentation; ``parse(print(P)) == P``."""
    lines = [HEADER, f"dim {presentation.n}"]
    for g in presentation.generators:
        entry = f"gen {g.name} cz {g.cz}"
        if g.length is not None:
            entry += f" len {g.length}"
        lines.append(entry)
    for name in presentation.names:
        poly = presentation.diff_of(name)
        if poly:
            lines.append(f"d {name} = {_format_sum(poly.sorted_terms())}")
    for name in presentation.names:
        marked = presentation.pointed_of(name)
        if marked:
            lines.append(f"dpt {name} = {' + '.join(str(m) for m in sorted(marked))}")
    return "\n".join(lines) + "\n"
