"""
Combinatorial disc counts of multi-copy links.

Every count is read off the differential and the pointed differential of the
presentation by occurrence selection: choosing letters of a monomial, in
order, and returning the complementary subwords. Word placement, used by
every caller in the package:

* strips of gamma_10: ``d gamma = u beta v`` gives ``u . beta_10 . v``
* costrips of gamma_01: ``d beta = u gamma v`` gives ``v . beta_01 . u``
* pointed discs: ``u ^ v`` in ``dpt gamma`` gives ``u . y . v`` for CY(gamma_10)
  and ``v . gamma_01 . u`` for CY(x)
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from ..domain.algebra import EMPTY, MixedChord, Word
from ..domain.presentation import DgaPresentation

ANY = "*"
MARK = "^"

Triple = Tuple[Word, str, Word]
BimoduleTerm = Tuple[Word, MixedChord, Word]


@dataclass(frozen=True, order=True)
class OracleTerm:
    """One rigid disc: its top chord, the matched punctures and the words between them.

    ``words`` has one more entry than ``matched``: ``words[0]`` precedes the
    first matched puncture and ``words[-1]`` follows the last.
    """

    top: str
    matched: Tuple[str, ...]
    words: Tuple[Word, ...]


def strips_D1(presentation: DgaPresentation, generator: str) -> List[Triple]:
    """One ``(u, beta, v)`` per letter ``beta`` of a monomial of d(gamma)."""
    return list(_strips(presentation, generator))


@lru_cache(maxsize=4096)
def _strips(presentation: DgaPresentation, generator: str) -> Tuple[Triple, ...]:
    out = []
    for m in presentation.monomials(generator):
        for p, letter in enumerate(m):
            out.append((m[:p], letter, m[p + 1 :]))
    return tuple(out)


def costrips_b1(presentation: DgaPresentation, generator: str) -> List[Triple]:
    """One ``(u, beta, v)`` per monomial ``u gamma v`` of d(beta)."""
    return list(_costrips(presentation, generator))


@lru_cache(maxsize=4096)
def _costrips(presentation: DgaPresentation, generator: str) -> Tuple[Triple, ...]:
    presentation.diff_of(generator)
    out = []
    for beta in presentation.names:
        for m in presentation.monomials(beta):
            for p, letter in enumerate(m):
                if letter == generator:
                    out.append((m[:p], beta, m[p + 1 :]))
    return tuple(out)


def bananas_b1_long(presentation: DgaPresentation, generator: str) -> List[Triple]:
    """Long bananas with positive punctures gamma_10 and beta_01.

    Identified with the costrips of gamma; this identification is the
    duality the self-duality check exercises.
    """
    return costrips_b1(presentation, generator)


def morse_banana_terms(
    generator: str, copies: Tuple[int, int] = (0, 1)
) -> Tuple[BimoduleTerm, BimoduleTerm]:
    """The two bananas through x: ``gamma . x_ij`` and ``x_ij . gamma``."""
    x = MixedChord.x(*copies)
    return ((generator,), x, EMPTY), (EMPTY, x, (generator,))


def morse_y_strip_terms(
    generator: str, copies: Tuple[int, int] = (0, 1)
) -> Tuple[BimoduleTerm, BimoduleTerm]:
    """The two strips out of y: ``gamma . gamma_ij`` and ``gamma_ij . gamma``."""
    chord = MixedChord.minus(generator, *copies)
    return ((generator,), chord, EMPTY), (EMPTY, chord, (generator,))


def pointed_terms(
    presentation: DgaPresentation, generator: str
) -> List[Tuple[Word, Word]]:
    """One ``(u, v)`` per marked word ``u ^ v`` of the pointed differential."""
    return [(m.left, m.right) for m in sorted(presentation.pointed_of(generator))]


def multi_pattern_count(
    presentation: DgaPresentation,
    top: str,
    pattern: Sequence[str],
    use_point: bool = False,
) -> List[OracleTerm]:
    """Order-preserving embeddings of ``pattern`` into the monomials of ``top``.

    Pattern items are generator names, ``"*"`` (any letter) or ``"^"`` (the
    basepoint mark, only with ``use_point``, and then exactly once). Monomials
    come from d(top), or from the pointed differential when ``use_point``.

    Raises:
        ValueError: on a misplaced or missing ``"^"``
    """
    pattern = tuple(pattern)
    if use_point and pattern.count(MARK) != 1:
        raise ValueError("a pointed pattern needs exactly one '^'")
    if not use_point and MARK in pattern:
        raise ValueError("'^' is only meaningful with use_point")
    return list(_pattern_count(presentation, top, pattern, use_point))


@lru_cache(maxsize=65536)
def _pattern_count(
    presentation: DgaPresentation, top: str, pattern: Tuple[str, ...], use_point: bool
) -> Tuple[OracleTerm, ...]:
    if use_point:
        sources = [
            m.word[: m.mark] + (MARK,) + m.word[m.mark :]
            for m in sorted(presentation.pointed_of(top))
        ]
    else:
        sources = presentation.monomials(top)
    out = []
    for tokens in sources:
        for positions in _embeddings(tokens, pattern, 0, 0):
            bounds = (-1,) + positions + (len(tokens),)
            words = tuple(
                tokens[lo + 1 : hi] for lo, hi in zip(bounds, bounds[1:])
            )
            out.append(OracleTerm(top, tuple(tokens[p] for p in positions), words))
    return tuple(out)


def _matches(item: str, token: str) -> bool:
    if item == MARK or token == MARK:
        return item == token
    return item == ANY or item == token


def _embeddings(
    tokens: Tuple[str, ...], pattern: Tuple[str, ...], start: int, index: int
) -> Iterator[Tuple[int, ...]]:
    if index == len(pattern):
        yield ()
        return
    remaining = len(pattern) - index
    for p in range(start, len(tokens) - remaining + 1):
        if _matches(pattern[index], tokens[p]):
            for rest in _embeddings(tokens, pattern, p + 1, index + 1):
                yield (p,) + rest
