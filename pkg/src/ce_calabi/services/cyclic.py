"""
Hochschild complexes Ĉ₊^cyc and Č₋^cyc with their A-infinity operations.

A cyclic term is ``(chord, word)``: one mixed chord in leading position
followed by a pure word. Operations take their inputs in the order
``(e_d, ..., e_1)``; ``e_1`` sits between the two lowest copies and each
later input starts on the copy where the previous one ends. The output lives
between ``e_1.low`` and ``e_d.high``.

Families:

* ``mcheck_d`` of degree 2-d on Č₋^cyc: substitution into d(beta) plus the
  unit rules of y
* ``mu_plus`` (left Č₋-module structure on Ĉ₊^cyc): the strip family D_j
  and the x family b_j^x
* ``f_j``: the CY family, from Ĉ₊^cyc to Č₋^cyc
* ``cy_d`` and ``mhat_d``: the recursions over compositions of d-1 that
  feed blocks through CY before applying ``f_j`` or ``mu_plus``
"""

from functools import lru_cache, wraps
from itertools import product
from typing import Any, Callable, Iterator, List, Sequence, Tuple

from ..domain.algebra import (
    ChordKind,
    GradingConvention,
    MixedChord,
    Word,
    Z2Chain,
    enumerate_words,
    format_word,
    z2_collect,
)
from ..domain.errors import ArityError, CopyMismatchError
from ..domain.presentation import DgaPresentation
from .bimodules import is_rigid_banana_degree
from .oracle import (
    ANY,
    MARK,
    bananas_b1_long,
    costrips_b1,
    multi_pattern_count,
    pointed_terms,
    strips_D1,
)

CyclicTerm = Tuple[MixedChord, Word]
TermFn = Callable[[DgaPresentation, Tuple[CyclicTerm, ...]], Sequence[CyclicTerm]]
TERM_CACHE_SIZE = 1 << 16

HAT_KINDS = (ChordKind.PLUS, ChordKind.X)
CHECK_KINDS = (ChordKind.MINUS, ChordKind.Y)


class CyclicElement(Z2Chain[CyclicTerm]):
    """Z2-set of ``(chord, word)`` pairs."""

    @classmethod
    def of(cls, chord: MixedChord, *letters: str) -> "CyclicElement":
        return cls([(chord, tuple(letters))])

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(format_cyclic(t) for t in self.sorted_terms())


def format_cyclic(term: CyclicTerm) -> str:
    chord, w = term
    return f"{chord} {format_word(w)}" if w else str(chord)


def cyclic_degree(
    presentation: DgaPresentation, term: CyclicTerm, convention: GradingConvention
) -> int:
    chord, w = term
    ctx = presentation.grading
    return ctx.chord_degree(chord, convention) + ctx.word_degree(w)


def hat_degree(presentation: DgaPresentation, term: CyclicTerm) -> int:
    return cyclic_degree(presentation, term, GradingConvention.C_HAT_PLUS)


def check_degree(presentation: DgaPresentation, term: CyclicTerm) -> int:
    return cyclic_degree(presentation, term, GradingConvention.C_MINUS)


def hat_basis(presentation: DgaPresentation, max_len: int) -> Iterator[CyclicTerm]:
    """Ĉ₊^cyc basis with words up to ``max_len``, x_01 first, shortest words first."""
    chords = [MixedChord.x()] + [MixedChord.plus(name) for name in presentation.names]
    for w in enumerate_words(presentation.names, max_len):
        for chord in chords:
            yield chord, w


def check_basis(presentation: DgaPresentation, max_len: int) -> Iterator[CyclicTerm]:
    """Č₋^cyc basis with words up to ``max_len``: y_01 then gamma_01."""
    chords = [MixedChord.y()] + [MixedChord.minus(name) for name in presentation.names]
    for w in enumerate_words(presentation.names, max_len):
        for chord in chords:
            yield chord, w


def chain_copies(terms: Sequence[CyclicTerm]) -> Tuple[int, int]:
    """Copies ``(e_1.low, e_d.high)`` of a composable tuple ``(e_d, ..., e_1)``.

    Raises:
        CopyMismatchError: if some input does not start where the next one ends
    """
    for later, earlier in zip(terms, terms[1:]):
        if later[0].low != earlier[0].high:
            raise CopyMismatchError(
                f"{later[0]} does not compose with {earlier[0]}: copies must chain"
            )
    return terms[-1][0].low, terms[0][0].high


def relabel_chain(terms: Sequence[CyclicTerm]) -> Tuple[CyclicTerm, ...]:
    """Put ``(e_d, ..., e_1)`` on copies ``(d-1, d), ..., (0, 1)``."""
    d = len(terms)
    return tuple(
        (chord.relabel(d - 1 - i, d - i), w) for i, (chord, w) in enumerate(terms)
    )


def _expect(
    terms: Sequence[CyclicTerm], kinds: Tuple[ChordKind, ...], where: str
) -> None:
    for chord, _ in terms:
        if chord.kind not in kinds:
            raise CopyMismatchError(f"{chord} is not a generator of {where}")


def _internal(presentation: DgaPresentation, term: CyclicTerm) -> List[CyclicTerm]:
    chord, w = term
    if not w:
        return []
    return [(chord, dw) for dw in presentation.diff_word(w).terms]


_MEMOIZED: List[Any] = []


def _memoized(
    fn: Callable[..., Sequence[CyclicTerm]]
) -> Callable[..., Tuple[CyclicTerm, ...]]:
    """Cache a term-level operation; the cached value is the Z2-reduced output."""

    @lru_cache(maxsize=TERM_CACHE_SIZE)
    @wraps(fn)
    def cached(*args: Any) -> Tuple[CyclicTerm, ...]:
        return tuple(z2_collect(fn(*args)))

    _MEMOIZED.append(cached)
    return cached


def _interleave(deltas: Tuple[Word, ...], words: Sequence[Word]) -> Word:
    """``deltas[0] words[0] deltas[1] words[1] ... deltas[-1]``."""
    out = deltas[0]
    for w, delta in zip(words, deltas[1:]):
        out = out + w + delta
    return out


def _multilinear(
    presentation: DgaPresentation, inputs: Sequence[Z2Chain], fn: TermFn
) -> "CyclicElement":
    if not inputs:
        raise ArityError("operations need at least one input")
    out: List[CyclicTerm] = []
    for combo in product(*(element.sorted_terms() for element in inputs)):
        out.extend(fn(presentation, combo))
    return CyclicElement(out)


# Differentials


@_memoized
def _mhat1_term(presentation: DgaPresentation, term: CyclicTerm) -> List[CyclicTerm]:
    _expect((term,), HAT_KINDS, "Ĉ₊^cyc")
    chord, w = term
    out = _internal(presentation, term)
    if chord.kind == ChordKind.PLUS:
        for u, beta, v in strips_D1(presentation, chord.base):
            out.append((MixedChord.plus(beta, chord.low, chord.high), v + w + u))
        x = MixedChord.x(chord.low, chord.high)
        out.append((x, (chord.base,) + w))
        out.append((x, w + (chord.base,)))
    return out


@_memoized
def _mcheck1_term(presentation: DgaPresentation, term: CyclicTerm) -> List[CyclicTerm]:
    _expect((term,), CHECK_KINDS, "Č₋^cyc")
    chord, w = term
    out = _internal(presentation, term)
    if chord.kind == ChordKind.MINUS:
        for u, beta, v in costrips_b1(presentation, chord.base):
            out.append((MixedChord.minus(beta, chord.low, chord.high), u + w + v))
    else:
        for name in presentation.names:
            mixed = MixedChord.minus(name, chord.low, chord.high)
            out.append((mixed, (name,) + w))
            out.append((mixed, w + (name,)))
    return out


def mhat1_cyc(presentation: DgaPresentation, element: CyclicElement) -> CyclicElement:
    """Differential of Ĉ₊^cyc."""
    return _multilinear(presentation, [element], lambda p, t: _mhat1_term(p, t[0]))


def mcheck1_cyc(presentation: DgaPresentation, element: CyclicElement) -> CyclicElement:
    """Differential of Č₋^cyc."""
    return _multilinear(presentation, [element], lambda p, t: _mcheck1_term(p, t[0]))


# Products on Č₋^cyc


@_memoized
def _mcheck_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Sequence[CyclicTerm]:
    d = len(terms)
    if d == 1:
        return _mcheck1_term(presentation, terms[0])
    _expect(terms, CHECK_KINDS, "Č₋^cyc")
    low, high = chain_copies(terms)
    if any(chord.kind == ChordKind.Y for chord, _ in terms):
        if d > 2:
            return []
        (c1, w1), (c0, w0) = terms
        # y is a strict two-sided unit
        survivor = c0 if c1.kind == ChordKind.Y else c1
        return [(survivor.relabel(low, high), w0 + w1)]
    ordered = terms[::-1]
    pattern = tuple(chord.base for chord, _ in ordered)
    out = []
    for beta in presentation.names:
        for hit in multi_pattern_count(presentation, beta, pattern):
            out.append(
                (
                    MixedChord.minus(beta, low, high),
                    _interleave(hit.words, [w for _, w in ordered]),
                )
            )
    return out


def mcheck_d(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """The product of arity ``len(inputs)`` on Č₋^cyc, degree ``2 - d``."""
    return _multilinear(presentation, inputs, _mcheck_terms)


# Left module structure of Ĉ₊^cyc over Č₋^cyc


@_memoized
def _mu_plus_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Sequence[CyclicTerm]:
    j = len(terms)
    if j == 1:
        return _mhat1_term(presentation, terms[0])
    psis, (chord, w0) = terms[:-1], terms[-1]
    _expect(psis, CHECK_KINDS, "Č₋^cyc")
    _expect(terms[-1:], HAT_KINDS, "Ĉ₊^cyc")
    low, high = chain_copies(terms)
    if any(psi.kind == ChordKind.Y for psi, _ in psis):
        if j > 2:
            return []
        w1 = psis[0][1]
        return [(chord.relabel(low, high), w0 + w1)]
    if chord.kind == ChordKind.X:
        return []
    ordered = psis[::-1]
    pattern = tuple(psi.base for psi, _ in ordered) + (ANY,)
    out = []
    for hit in multi_pattern_count(presentation, chord.base, pattern):
        deltas = hit.words
        word = deltas[j] + w0 + _interleave(deltas[:j], [w for _, w in ordered])
        out.append((MixedChord.plus(hit.matched[-1], low, high), word))
    if j == 2 and ordered[0][0].base == chord.base:
        out.append((MixedChord.x(low, high), w0 + ordered[0][1]))
    return out


def mu_plus(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """``D_j + b_j^x`` on ``(psi_j, ..., psi_2, e)``, psi in Č₋^cyc, e in Ĉ₊^cyc."""
    return _multilinear(presentation, inputs, _mu_plus_terms)


# The CY family


def _cy1_term(presentation: DgaPresentation, term: CyclicTerm) -> List[CyclicTerm]:
    _expect((term,), HAT_KINDS, "Ĉ₊^cyc")
    chord, w = term
    low, high = chord.low, chord.high
    out = []
    if chord.kind == ChordKind.PLUS:
        if is_rigid_banana_degree(presentation, chord.base):
            for u, beta, v in bananas_b1_long(presentation, chord.base):
                out.append((MixedChord.minus(beta, low, high), u + w + v))
        for u, v in pointed_terms(presentation, chord.base):
            out.append((MixedChord.y(low, high), v + w + u))
    else:
        for beta in presentation.names:
            for u, v in pointed_terms(presentation, beta):
                out.append((MixedChord.minus(beta, low, high), u + w + v))
    return out


@_memoized
def _f_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Sequence[CyclicTerm]:
    j = len(terms)
    if j == 1:
        return _cy1_term(presentation, terms[0])
    psis, (chord, w0) = terms[:-1], terms[-1]
    _expect(psis, CHECK_KINDS, "Č₋^cyc")
    _expect(terms[-1:], HAT_KINDS, "Ĉ₊^cyc")
    low, high = chain_copies(terms)
    # higher pointed discs never end on y
    if any(psi.kind == ChordKind.Y for psi, _ in psis):
        return []
    ordered = psis[::-1]
    bases = tuple(psi.base for psi, _ in ordered)
    words = [w for _, w in ordered]
    out = []
    if chord.kind == ChordKind.PLUS:
        pattern = bases + (MARK,)
        hits = multi_pattern_count(presentation, chord.base, pattern, use_point=True)
        for hit in hits:
            deltas = hit.words
            word = deltas[j] + w0 + _interleave(deltas[:j], words)
            out.append((MixedChord.y(low, high), word))
        return out
    for beta in presentation.names:
        pattern = (MARK,) + bases
        for hit in multi_pattern_count(presentation, beta, pattern, use_point=True):
            deltas = hit.words
            out.append(
                (
                    MixedChord.minus(beta, low, high),
                    deltas[0] + w0 + _interleave(deltas[1:], words),
                )
            )
    return out


def f_j(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """CY family component on ``(psi_j, ..., psi_2, e)``; ``f_1`` is CY_1."""
    return _multilinear(presentation, inputs, _f_terms)


# Recursions over compositions


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _split(
    terms: Tuple[CyclicTerm, ...], sizes: Tuple[int, ...]
) -> List[Tuple[CyclicTerm, ...]]:
    blocks, start = [], 0
    for size in sizes:
        blocks.append(terms[start : start + size])
        start += size
    return blocks


def _through_cy(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...], outer: TermFn
) -> List[CyclicTerm]:
    d = len(terms)
    rest, first = terms[:-1], terms[-1]
    out: List[CyclicTerm] = []
    for j in range(2, d + 1):
        for sizes in compositions(d - 1, j - 1):
            images = [_cy_cached(presentation, block) for block in _split(rest, sizes)]
            for combo in product(*images):
                out.extend(outer(presentation, combo + (first,)))
    return out


@lru_cache(maxsize=65536)
def _cy_cached(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Tuple[CyclicTerm, ...]:
    chain_copies(terms)
    if len(terms) == 1:
        found = _cy1_term(presentation, terms[0])
    else:
        found = _through_cy(presentation, terms, _f_terms)
    return tuple(sorted(z2_collect(found)))


def _cy_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> List[CyclicTerm]:
    return list(_cy_cached(presentation, terms))


@_memoized
def _mhat_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Sequence[CyclicTerm]:
    if len(terms) == 1:
        return _mhat1_term(presentation, terms[0])
    _expect(terms, HAT_KINDS, "Ĉ₊^cyc")
    chain_copies(terms)
    return _through_cy(presentation, terms, _mu_plus_terms)


def cy_d(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """CY_d: Ĉ₊^cyc^{⊗d} → Č₋^cyc, degree ``1 - d``."""
    return _multilinear(presentation, inputs, _cy_terms)


def mhat_d(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """The product of arity ``len(inputs)`` on Ĉ₊^cyc, degree ``2 - d``."""
    return _multilinear(presentation, inputs, _mhat_terms)


# The alternative product and its homotopy


def _is_x_on_long(terms: Tuple[CyclicTerm, ...]) -> bool:
    return terms[0][0].kind == ChordKind.X and terms[1][0].kind == ChordKind.PLUS


def _dhat2_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> Sequence[CyclicTerm]:
    if not _is_x_on_long(terms):
        return _mhat_terms(presentation, terms)
    low, high = chain_copies(terms)
    (_, w1), (chord, w0) = terms
    return [
        (MixedChord.x(low, high), v + w0 + u + w1)
        for u, v in pointed_terms(presentation, chord.base)
    ]


def _h2_terms(
    presentation: DgaPresentation, terms: Tuple[CyclicTerm, ...]
) -> List[CyclicTerm]:
    if not _is_x_on_long(terms):
        return []
    low, high = chain_copies(terms)
    (_, w1), (chord, w0) = terms
    out = []
    for hit in multi_pattern_count(
        presentation, chord.base, (MARK, ANY), use_point=True
    ):
        d0, d1, d2 = hit.words
        target = MixedChord.plus(hit.matched[-1], low, high)
        out.append((target, d2 + w0 + d0 + w1 + d1))
    return out


def _require_pair(inputs: Sequence[CyclicElement]) -> None:
    if len(inputs) != 2:
        raise ArityError(f"expected two inputs, got {len(inputs)}")


def dhat2_alt(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """Product on Ĉ₊^cyc that counts x-outputs through the basepoint only."""
    _require_pair(inputs)
    return _multilinear(presentation, inputs, _dhat2_terms)


def h2_homotopy(
    presentation: DgaPresentation, inputs: Sequence[CyclicElement]
) -> CyclicElement:
    """Degree -1 homotopy between ``dhat2_alt`` and ``mhat_d`` in arity two."""
    _require_pair(inputs)
    return _multilinear(presentation, inputs, _h2_terms)


def clear_caches() -> None:
    _cy_cached.cache_clear()
    for cached in _MEMOIZED:
        cached.cache_clear()
