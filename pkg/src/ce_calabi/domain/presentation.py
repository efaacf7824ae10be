"""
The C-E algebra presentation: generators, differential and pointed differential.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .algebra import (
    GradingContext,
    MarkedWord,
    TensorPoly,
    Word,
    apply_derivation,
)
from .errors import UnknownGeneratorError


@dataclass(frozen=True)
class GeneratorSpec:
    """A Reeb chord of the presentation."""

    name: str
    cz: int
    length: Optional[Fraction] = None


@dataclass(frozen=True, eq=False)
class DgaPresentation:
    """Finite generating data of a C-E algebra.

    Attributes:
        name: label used in reports
        n: dimension of the Legendrian
        generators: declared chords in declaration order
        diff: differential on generators; missing entries are zero
        pointed_diff: basepoint-marked differential; missing entries are empty

    Two presentations are equal when their generators and non-zero table
    entries agree; the name is a label only.
    """

    name: str
    n: int
    generators: Tuple[GeneratorSpec, ...] = ()
    diff: Mapping[str, TensorPoly] = field(default_factory=dict)
    pointed_diff: Mapping[str, FrozenSet[MarkedWord]] = field(default_factory=dict)
    _table: Dict[str, TensorPoly] = field(init=False, repr=False)
    _pointed: Dict[str, FrozenSet[MarkedWord]] = field(init=False, repr=False)
    _grading: GradingContext = field(init=False, repr=False)
    _names: Tuple[str, ...] = field(init=False, repr=False)
    _word_diffs: Dict[Word, TensorPoly] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for table in (self.diff, self.pointed_diff):
            for key in table:
                if key not in names:
                    raise UnknownGeneratorError(key)
        resolved = {name: self.diff.get(name, TensorPoly.zero()) for name in names}
        object.__setattr__(self, "_table", resolved)
        object.__setattr__(
            self,
            "_pointed",
            {name: frozenset(self.pointed_diff.get(name, ())) for name in names},
        )
        cz = {g.name: g.cz for g in self.generators}
        object.__setattr__(self, "_grading", GradingContext(self.n, cz))
        object.__setattr__(self, "_names", tuple(names))
        object.__setattr__(self, "_word_diffs", {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DgaPresentation):
            return NotImplemented
        return (
            self.n == other.n
            and self.generators == other.generators
            and self._table == other._table
            and self._pointed == other._pointed
        )

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def grading(self) -> GradingContext:
        return self._grading

    @property
    def lengths(self) -> Dict[str, Optional[Fraction]]:
        return {g.name: g.length for g in self.generators}

    @property
    def has_lengths(self) -> bool:
        if not self.generators:
            return False
        return all(g.length is not None for g in self.generators)

    def spec(self, name: str) -> GeneratorSpec:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGeneratorError(name)

    def diff_of(self, name: str) -> TensorPoly:
        try:
            return self._table[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def pointed_of(self, name: str) -> FrozenSet[MarkedWord]:
        try:
            return self._pointed[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def full_table(self) -> Dict[str, TensorPoly]:
        return dict(self._table)

    def base_diff(self, p: TensorPoly) -> TensorPoly:
        """Differential of an algebra element, extended by the Leibniz rule."""
        return apply_derivation(self._table, p)

    def diff_word(self, w: Word) -> TensorPoly:
        """Differential of one word, memoized per presentation."""
        image = self._word_diffs.get(w)
        if image is None:
            image = self.base_diff(TensorPoly([w]))
            self._word_diffs[w] = image
        return image

    def degree(self, w: Word) -> int:
        return self.grading.word_degree(w)

    def monomials(self, name: str) -> List[Word]:
        return self.diff_of(name).sorted_terms()


def base_diff(presentation: DgaPresentation, p: TensorPoly) -> TensorPoly:
    """``apply_derivation`` with the presentation's differential table."""
    return presentation.base_diff(p)
