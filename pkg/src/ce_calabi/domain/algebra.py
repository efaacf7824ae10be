"""
Exact noncommutative tensor algebra over the two-element field.

Words are tuples of interned generator names, the empty tuple being the unit.
Every linear combination in the package is a ``Z2Chain``: a frozen set of
terms in which presence means coefficient one, so ``p + p == 0`` holds by
construction. Mixed chords of multi-copy links are ``MixedChord`` values and
carry their copy labels explicitly.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import (
    Generic,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from .errors import CopyMismatchError, GradingError, UnknownGeneratorError

Word = Tuple[str, ...]
EMPTY: Word = ()

T = TypeVar("T")


def word(*letters: str) -> Word:
    """Build an interned word from generator names."""
    return tuple(sys.intern(letter) for letter in letters)


def z2_collect(terms: Iterable[T]) -> frozenset:
    """Sum terms over Z2: a term survives iff it occurs an odd number of times."""
    acc: set = set()
    for term in terms:
        if term in acc:
            acc.remove(term)
        else:
            acc.add(term)
    return frozenset(acc)


class Z2Chain(Generic[T]):
    """Finite Z2-linear combination of hashable, orderable terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[T] = ()):
        self._terms: frozenset = z2_collect(terms)

    @classmethod
    def _wrap(cls, terms: frozenset) -> "Z2Chain[T]":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> frozenset:
        return self._terms

    def sorted_terms(self) -> list:
        return sorted(self._terms)

    def __iter__(self) -> Iterator[T]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, term: object) -> bool:
        return term in self._terms

    def __add__(self, other: "Z2Chain[T]") -> "Z2Chain[T]":
        if type(other) is not type(self):
            return NotImplemented
        return self._wrap(self._terms ^ other._terms)

    def __radd__(self, other: object) -> "Z2Chain[T]":
        if other == 0:
            return self
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Z2Chain):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._terms))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.sorted_terms()!r})"


def format_word(w: Word) -> str:
    return " ".join(w) if w else "1"


class TensorPoly(Z2Chain[Word]):
    """Element of the tensor algebra: a set of words."""

    @classmethod
    def zero(cls) -> "TensorPoly":
        return cls()

    @classmethod
    def one(cls) -> "TensorPoly":
        return cls([EMPTY])

    @classmethod
    def of(cls, *words: Sequence[str]) -> "TensorPoly":
        return cls(tuple(w) for w in words)

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return TensorPoly(u + v for u in self._terms for v in other._terms)

    def letters(self) -> set:
        return {letter for w in self._terms for letter in w}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(format_word(w) for w in self.sorted_terms())


def add(p: TensorPoly, q: TensorPoly) -> TensorPoly:
    return p + q


def mul(p: TensorPoly, q: TensorPoly) -> TensorPoly:
    return p * q


def apply_derivation(table: Mapping[str, TensorPoly], p: TensorPoly) -> TensorPoly:
    """Extend a generator table to a derivation by the Leibniz rule.

    Raises:
        UnknownGeneratorError: if a letter of ``p`` has no table entry
    """
    out = []
    for w in p.terms:
        for i, letter in enumerate(w):
            try:
                image = table[letter]
            except KeyError:
                raise UnknownGeneratorError(letter) from None
            prefix, suffix = w[:i], w[i + 1 :]
            out.extend(prefix + m + suffix for m in image.terms)
    return TensorPoly(out)


@dataclass(frozen=True, order=True)
class MarkedWord:
    """A word with a basepoint slot ``mark`` in ``[0, len(word)]``."""

    word: Word
    mark: int

    def __post_init__(self) -> None:
        if not 0 <= self.mark <= len(self.word):
            raise ValueError(
                f"mark {self.mark} outside word of length {len(self.word)}"
            )

    @property
    def left(self) -> Word:
        return self.word[: self.mark]

    @property
    def right(self) -> Word:
        return self.word[self.mark :]

    def __str__(self) -> str:
        tokens = list(self.word[: self.mark]) + ["^"] + list(self.word[self.mark :])
        return " ".join(tokens)


class ChordKind(str, Enum):
    """Kind of a generator symbol.

    Attributes:
        PURE: chord of a single copy
        PLUS: long chord from the higher copy to the lower one, gamma_{high,low}
        MINUS: long chord from the lower copy to the higher one, gamma_{low,high}
        X: Morse chord at the maximum, x_{low,high}
        Y: Morse chord at the minimum, y_{low,high}
    """

    PURE = "pure"
    PLUS = "plus"
    MINUS = "minus"
    X = "x"
    Y = "y"


@dataclass(frozen=True, order=True)
class MixedChord:
    """Chord between two distinct copies of a multi-copy link."""

    base: str
    kind: ChordKind
    low: int
    high: int

    def __post_init__(self) -> None:
        if self.kind == ChordKind.PURE:
            raise CopyMismatchError("a mixed chord cannot be of pure kind")
        if not 0 <= self.low < self.high:
            raise CopyMismatchError(
                "copy labels must satisfy 0 <= low < high, "
                f"got ({self.low}, {self.high})"
            )
        if self.is_morse and self.base:
            raise CopyMismatchError("Morse chords carry no base generator")
        if not self.is_morse and not self.base:
            raise CopyMismatchError("long chords need a base generator")

    @classmethod
    def plus(cls, base: str, low: int = 0, high: int = 1) -> "MixedChord":
        return cls(sys.intern(base), ChordKind.PLUS, low, high)

    @classmethod
    def minus(cls, base: str, low: int = 0, high: int = 1) -> "MixedChord":
        return cls(sys.intern(base), ChordKind.MINUS, low, high)

    @classmethod
    def x(cls, low: int = 0, high: int = 1) -> "MixedChord":
        return cls("", ChordKind.X, low, high)

    @classmethod
    def y(cls, low: int = 0, high: int = 1) -> "MixedChord":
        return cls("", ChordKind.Y, low, high)

    @property
    def is_morse(self) -> bool:
        return self.kind in (ChordKind.X, ChordKind.Y)

    @property
    def is_long(self) -> bool:
        return self.kind in (ChordKind.PLUS, ChordKind.MINUS)

    def relabel(self, low: int, high: int) -> "MixedChord":
        return MixedChord(self.base, self.kind, low, high)

    def __str__(self) -> str:
        if self.kind == ChordKind.PLUS:
            return f"{self.base}_{self.high}{self.low}"
        if self.kind == ChordKind.MINUS:
            return f"{self.base}_{self.low}{self.high}"
        return f"{self.kind.value}_{self.low}{self.high}"


Letter = Union[str, MixedChord]


class GradingConvention(str, Enum):
    """Grading conventions for letters and words."""

    ALGEBRA = "algebra"
    C_PLUS = "c-plus"
    C_HAT_PLUS = "c-hat-plus"
    C_MINUS = "c-minus"


@dataclass(frozen=True)
class GradingContext:
    """Dimension and Conley-Zehnder indices of a presentation."""

    n: int
    cz: Mapping[str, int]

    def letter_degree(self, letter: str) -> int:
        try:
            return 1 - self.cz[letter]
        except KeyError:
            raise UnknownGeneratorError(letter) from None

    def word_degree(self, w: Word) -> int:
        return sum(self.letter_degree(letter) for letter in w)

    def chord_degree(self, chord: MixedChord, convention: GradingConvention) -> int:
        if convention == GradingConvention.ALGEBRA:
            raise GradingError(f"mixed chord {chord} has no algebra degree")
        kind = chord.kind
        if convention == GradingConvention.C_PLUS:
            if kind == ChordKind.PLUS:
                return self.n - self._cz(chord.base)
        elif convention == GradingConvention.C_HAT_PLUS:
            if kind == ChordKind.PLUS:
                return self.n - self._cz(chord.base) + 1
            if kind == ChordKind.X:
                return self.n + 1
        elif convention == GradingConvention.C_MINUS:
            if kind == ChordKind.MINUS:
                return self._cz(chord.base)
            if kind == ChordKind.X:
                return self.n
            if kind == ChordKind.Y:
                return 0
        raise GradingError(f"{chord} is not graded under {convention.value}")

    def _cz(self, name: str) -> int:
        try:
            return self.cz[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None


def degree(
    letters: Sequence[Letter],
    ctx: GradingContext,
    convention: GradingConvention,
    shift: int = 0,
) -> int:
    """Degree of a word under a convention; an element of ``B[d]`` gains ``+d``.

    Raises:
        GradingError: on a mixed letter under the algebra convention
    """
    total = shift
    for letter in letters:
        if isinstance(letter, MixedChord):
            total += ctx.chord_degree(letter, convention)
        else:
            total += ctx.letter_degree(letter)
    return total


@dataclass(frozen=True, order=True)
class Action:
    """Exact action value ``value + eps * epsilon`` with a symbolic infinitesimal."""

    value: Fraction
    eps: int = 0

    def __add__(self, other: "Action") -> "Action":
        return Action(self.value + other.value, self.eps + other.eps)

    def __str__(self) -> str:
        if not self.eps:
            return str(self.value)
        sign = "+" if self.eps > 0 else "-"
        count = abs(self.eps)
        return f"{self.value}{sign}{count if count > 1 else ''}eps"


def mixed_action(
    chord: MixedChord, lengths: Mapping[str, Optional[Fraction]]
) -> Optional[Action]:
    """Action of a mixed chord, or None when its length is unknown."""
    if chord.kind == ChordKind.X:
        return Action(Fraction(0), 1)
    if chord.kind == ChordKind.Y:
        return Action(Fraction(0), -1)
    length = lengths.get(chord.base)
    if length is None:
        return None
    return Action(length if chord.kind == ChordKind.PLUS else -length)


def enumerate_words(alphabet: Sequence[str], max_len: int) -> Iterator[Word]:
    """All words over ``alphabet`` of length at most ``max_len``, shortest first."""
    layer: list = [EMPTY]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (letter,) for w in layer for letter in alphabet]


__all__ = [
    "Action",
    "ChordKind",
    "EMPTY",
    "GradingContext",
    "GradingConvention",
    "Letter",
    "MarkedWord",
    "MixedChord",
    "TensorPoly",
    "Word",
    "Z2Chain",
    "add",
    "apply_derivation",
    "degree",
    "enumerate_words",
    "format_word",
    "mixed_action",
    "mul",
    "word",
    "z2_collect",
]

