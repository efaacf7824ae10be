"""
DG-bimodules of the 2-copy: Ĉ₊, Č₋, RFC, the CY map, cones and the maps F, h, G, H.

Elements are Z2-sets of triples ``(v1, c, v0)``: a left word read in copy 1,
one mixed chord, a right word read in copy 0. Ĉ₊ is generated by gamma_10
(``ChordKind.PLUS``) and x_01, Č₋ by gamma_01 (``ChordKind.MINUS``) and y_01.
Shifts are metadata: elements are stored ungraded and the degree of a map is
asserted by the checks in ``services.verification``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..domain.algebra import (
    EMPTY,
    ChordKind,
    GradingConvention,
    MixedChord,
    TensorPoly,
    Word,
    Z2Chain,
    enumerate_words,
    mixed_action,
    z2_collect,
)
from ..domain.errors import ChainMapError, CopyMismatchError
from ..domain.interfaces import BananaOracle
from ..domain.presentation import DgaPresentation
from .oracle import (
    bananas_b1_long,
    costrips_b1,
    morse_banana_terms,
    morse_y_strip_terms,
    pointed_terms,
    strips_D1,
)

BimoduleTerm = Tuple[Word, MixedChord, Word]
X01 = MixedChord.x(0, 1)
Y01 = MixedChord.y(0, 1)
TERM_CACHE_SIZE = 1 << 17


class BimoduleElement(Z2Chain[BimoduleTerm]):
    """Z2-set of ``(v1, chord, v0)`` triples."""

    @classmethod
    def generator(cls, chord: MixedChord) -> "BimoduleElement":
        return cls([(EMPTY, chord, EMPTY)])

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(format_term(t) for t in self.sorted_terms())


def format_term(term: BimoduleTerm) -> str:
    left, chord, right = term
    return " ".join(list(left) + [str(chord)] + list(right))


class TensorSquare(Z2Chain[Tuple[Word, Word]]):
    """Element of A ⊗ A: Z2-set of word pairs."""

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(
            f"{' '.join(a) or '1'}⊗{' '.join(b) or '1'}"
            for a, b in self.sorted_terms()
        )


def hat_generators(presentation: DgaPresentation) -> List[MixedChord]:
    """Free generators of Ĉ₊: x_01 first, then gamma_10 in declaration order."""
    return [X01] + [MixedChord.plus(name) for name in presentation.names]


def check_generators(presentation: DgaPresentation) -> List[MixedChord]:
    """Free generators of Č₋: y_01 first, then gamma_01 in declaration order."""
    return [Y01] + [MixedChord.minus(name) for name in presentation.names]


def _leibniz(presentation: DgaPresentation, term: BimoduleTerm) -> List[BimoduleTerm]:
    left, chord, right = term
    out: List[BimoduleTerm] = []
    if left:
        out.extend((w, chord, right) for w in presentation.diff_word(left).terms)
    if right:
        out.extend((left, chord, w) for w in presentation.diff_word(right).terms)
    return out


def _expect(chord: MixedChord, kinds: Tuple[ChordKind, ...], where: str) -> None:
    if chord.kind not in kinds:
        raise CopyMismatchError(f"{chord} is not a generator of {where}")


def _per_term(
    presentation: DgaPresentation,
    element: BimoduleElement,
    fn: Callable[..., Tuple[BimoduleTerm, ...]],
    *extra: object,
) -> BimoduleElement:
    out: List[BimoduleTerm] = []
    for term in element.terms:
        out.extend(fn(presentation, term, *extra))
    return BimoduleElement(out)


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _mhat1_term(
    presentation: DgaPresentation, term: BimoduleTerm
) -> Tuple[BimoduleTerm, ...]:
    left, chord, right = term
    _expect(chord, (ChordKind.PLUS, ChordKind.X), "Ĉ₊")
    out: List[BimoduleTerm] = []
    if chord.kind == ChordKind.PLUS:
        for u, beta, v in strips_D1(presentation, chord.base):
            out.append((left + u, MixedChord.plus(beta), v + right))
        for bl, x, br in morse_banana_terms(chord.base):
            out.append((left + bl, x, br + right))
    out.extend(_leibniz(presentation, term))
    return tuple(z2_collect(out))


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _mcheck1_term(
    presentation: DgaPresentation, term: BimoduleTerm
) -> Tuple[BimoduleTerm, ...]:
    left, chord, right = term
    _expect(chord, (ChordKind.MINUS, ChordKind.Y), "Č₋")
    out: List[BimoduleTerm] = []
    if chord.kind == ChordKind.MINUS:
        for u, beta, v in costrips_b1(presentation, chord.base):
            out.append((left + v, MixedChord.minus(beta), u + right))
    else:
        for name in presentation.names:
            for sl, c, sr in morse_y_strip_terms(name):
                out.append((left + sl, c, sr + right))
    out.extend(_leibniz(presentation, term))
    return tuple(z2_collect(out))


def mhat1(presentation: DgaPresentation, element: BimoduleElement) -> BimoduleElement:
    """Differential of Ĉ₊: strips of d(gamma), the x bananas, Leibniz on words."""
    return _per_term(presentation, element, _mhat1_term)


def mcheck1(presentation: DgaPresentation, element: BimoduleElement) -> BimoduleElement:
    """Differential of Č₋: costrips of gamma_01, the y strips, Leibniz on words."""
    return _per_term(presentation, element, _mcheck1_term)


def is_rigid_banana_degree(presentation: DgaPresentation, generator: str) -> bool:
    """Long bananas are rigid only when ``2|gamma| = 2 - n``."""
    return 2 * presentation.grading.letter_degree(generator) == 2 - presentation.n


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _cy_term(
    presentation: DgaPresentation,
    term: BimoduleTerm,
    banana_oracle: Optional[BananaOracle],
) -> Tuple[BimoduleTerm, ...]:
    oracle = banana_oracle or bananas_b1_long
    left, chord, right = term
    _expect(chord, (ChordKind.PLUS, ChordKind.X), "Ĉ₊")
    out: List[BimoduleTerm] = []
    if chord.kind == ChordKind.PLUS:
        if is_rigid_banana_degree(presentation, chord.base):
            for u, beta, v in oracle(presentation, chord.base):
                out.append((left + v, MixedChord.minus(beta), u + right))
        for u, v in pointed_terms(presentation, chord.base):
            out.append((left + u, Y01, v + right))
    else:
        for beta in presentation.names:
            for u, v in pointed_terms(presentation, beta):
                out.append((left + v, MixedChord.minus(beta), u + right))
    return tuple(z2_collect(out))


def cy_bimodule(
    presentation: DgaPresentation,
    element: BimoduleElement,
    banana_oracle: Optional[BananaOracle] = None,
) -> BimoduleElement:
    """The degree-0 bimodule map CY: Ĉ₊ → Č₋.

    gamma_10 goes to its long bananas plus ``u . y . v`` for each ``u ^ v`` in
    its pointed differential; x goes to ``v . beta_01 . u`` over every pointed
    disc of every beta.
    """
    return _per_term(presentation, element, _cy_term, banana_oracle)


@lru_cache(maxsize=TERM_CACHE_SIZE)
def _rfc_term(
    presentation: DgaPresentation,
    term: BimoduleTerm,
    banana_oracle: Optional[BananaOracle],
) -> Tuple[BimoduleTerm, ...]:
    left, chord, right = term
    out: List[BimoduleTerm] = []
    if chord.kind == ChordKind.PLUS:
        out.extend(
            (left + u, MixedChord.plus(beta), v + right)
            for u, beta, v in strips_D1(presentation, chord.base)
        )
        out.extend(
            (left + bl, x, br + right) for bl, x, br in morse_banana_terms(chord.base)
        )
        out.extend(_leibniz(presentation, term))
        out.extend(_cy_term(presentation, term, banana_oracle))
    elif chord.kind == ChordKind.X:
        out.extend(_leibniz(presentation, term))
        out.extend(_cy_term(presentation, term, banana_oracle))
    else:
        out.extend(_mcheck1_term(presentation, term))
    return tuple(z2_collect(out))


def rfc_diff(
    presentation: DgaPresentation,
    element: BimoduleElement,
    banana_oracle: Optional[BananaOracle] = None,
) -> BimoduleElement:
    """Lower triangular differential of RFC = C₊ ⊕ C₋, with x_01 and y_01 in C₋.

    The diagonal blocks are the strip differential on C₊ and the costrip
    differential on C₋; the off-diagonal block sends gamma_10 to its x
    bananas plus CY(gamma_10), and the x_01 row of C₋ is CY(x_01).
    """
    return _per_term(presentation, element, _rfc_term, banana_oracle)


def clear_caches() -> None:
    for cached in (_mhat1_term, _mcheck1_term, _cy_term, _rfc_term):
        cached.cache_clear()


def bimodule_degree(
    presentation: DgaPresentation, term: BimoduleTerm, convention: GradingConvention
) -> int:
    """Mixed-chord degree under ``convention`` plus the degrees of both words."""
    left, chord, right = term
    ctx = presentation.grading
    words = ctx.word_degree(left) + ctx.word_degree(right)
    return ctx.chord_degree(chord, convention) + words


def rfc_degree(presentation: DgaPresentation, term: BimoduleTerm) -> int:
    chord = term[1]
    if chord.kind == ChordKind.PLUS:
        convention = GradingConvention.C_PLUS
    else:
        convention = GradingConvention.C_MINUS
    return bimodule_degree(presentation, term, convention)


def bimodule_basis(
    presentation: DgaPresentation, generators: Iterable[MixedChord], max_len: int
) -> Iterator[BimoduleTerm]:
    """Every ``(v1, g, v0)`` with ``|v1| + |v0| <= max_len``, shortest first."""
    words = list(enumerate_words(presentation.names, max_len))
    for total in range(max_len + 1):
        for g in generators:
            for left in words:
                if len(left) > total:
                    break
                for right in words:
                    if len(left) + len(right) == total:
                        yield (left, g, right)
                    elif len(left) + len(right) > total:
                        break


# Cones


ConeElement = Tuple[Z2Chain, Z2Chain]


@dataclass(frozen=True)
class ConeComplex:
    """Cone of a chain map: source (shifted) ⊕ target, lower triangular differential."""

    source_diff: Callable[[Z2Chain], Z2Chain]
    target_diff: Callable[[Z2Chain], Z2Chain]
    connecting: Callable[[Z2Chain], Z2Chain]

    def differential(self, element: ConeElement) -> ConeElement:
        source, target = element
        image = self.connecting(source) + self.target_diff(target)
        return self.source_diff(source), image


def cone(
    connecting: Callable[[Z2Chain], Z2Chain],
    source_diff: Callable[[Z2Chain], Z2Chain],
    target_diff: Callable[[Z2Chain], Z2Chain],
    test_elements: Iterable[Z2Chain],
) -> ConeComplex:
    """Cone of ``connecting``, after checking it is a chain map on ``test_elements``.

    Raises:
        ChainMapError: with the first element where ``f d + d f != 0``
    """
    for element in test_elements:
        defect = connecting(source_diff(element)) + target_diff(connecting(element))
        if defect:
            raise ChainMapError(
                f"connecting map is not a chain map at {element}: {defect}"
            )
    return ConeComplex(source_diff, target_diff, connecting)


def cy_cone(
    presentation: DgaPresentation,
    max_len: int = 2,
    banana_oracle: Optional[BananaOracle] = None,
) -> ConeComplex:
    """Cone(CY) = Ĉ₊[-1] ⊕ Č₋, verified on the Ĉ₊ basis up to ``max_len``."""
    basis = [
        BimoduleElement([t])
        for t in bimodule_basis(presentation, hat_generators(presentation), max_len)
    ]
    return cone(
        lambda e: cy_bimodule(presentation, e, banana_oracle),  # type: ignore[arg-type]
        lambda e: mhat1(presentation, e),  # type: ignore[arg-type]
        lambda e: mcheck1(presentation, e),  # type: ignore[arg-type]
        basis,
    )


def nu_map(element: ConeElement) -> BimoduleElement:
    """Cone(CY) → RFC, the identity on every mixed chord."""
    hat, check = element
    return BimoduleElement(list(hat.terms) + list(check.terms))


# F and its homotopy


def F_map(presentation: DgaPresentation, element: BimoduleElement) -> TensorPoly:
    """Ĉ₊ → A: ``v1 . x . v0 -> v1 v0``, zero on long chords."""
    return TensorPoly(
        left + right
        for left, chord, right in element.terms
        if chord.kind == ChordKind.X
    )


def cone_f_diff(
    presentation: DgaPresentation, element: Tuple[BimoduleElement, TensorPoly]
) -> Tuple[BimoduleElement, TensorPoly]:
    """Differential of Cone(F): ``(e, p) -> (mhat1 e, F e + d p)``."""
    hat, poly = element
    image = F_map(presentation, hat) + presentation.base_diff(poly)
    return mhat1(presentation, hat), image


def bar(left: Word, right: Word) -> List[BimoduleTerm]:
    """Each letter of ``left`` in turn made the mixed chord, ``right`` appended."""
    return [
        (left[:j], MixedChord.plus(left[j]), left[j + 1 :] + right)
        for j in range(len(left))
    ]


def h_homotopy(
    presentation: DgaPresentation, element: Tuple[BimoduleElement, TensorPoly]
) -> Tuple[BimoduleElement, TensorPoly]:
    """Contracting homotopy of Cone(F): ``d h + h d = id``."""
    hat, poly = element
    out: List[BimoduleTerm] = []
    for left, chord, right in hat.terms:
        if chord.kind == ChordKind.X:
            out.extend(bar(left, right))
    out.extend((EMPTY, X01, w) for w in poly.terms)
    return BimoduleElement(out), TensorPoly.zero()


# Morphism tables and the maps G, G^-1, H


class MorphismTable:
    """Bimodule map into A ⊗ A, stored by its values on free generators.

    Applying it to ``v1 . g . v0`` uses the outer structure,
    ``v1 a ⊗ b v0`` for each ``a ⊗ b`` in the value at ``g``; acting on the
    table by ``v1 . (-) . v0`` uses the inner structure, ``a v0 ⊗ v1 b``.
    """

    def __init__(self, values: Optional[Mapping[MixedChord, TensorSquare]] = None):
        self.values: Dict[MixedChord, TensorSquare] = {
            g: v for g, v in (values or {}).items() if v
        }

    def __call__(self, element: BimoduleElement) -> TensorSquare:
        out = []
        for left, chord, right in element.terms:
            value = self.values.get(chord)
            if value is None:
                continue
            out.extend((left + a, b + right) for a, b in value.terms)
        return TensorSquare(out)

    def at(self, generator: MixedChord) -> TensorSquare:
        return self.values.get(generator, TensorSquare())

    def __add__(self, other: "MorphismTable") -> "MorphismTable":
        keys = set(self.values) | set(other.values)
        return MorphismTable({k: self.at(k) + other.at(k) for k in keys})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MorphismTable):
            return NotImplemented
        return self.values == other.values

    def __bool__(self) -> bool:
        return bool(self.values)

    def __repr__(self) -> str:
        items = ", ".join(f"{g}: {self.values[g]}" for g in sorted(self.values))
        return f"MorphismTable({{{items}}})"

    @classmethod
    def sum(cls, tables: Iterable["MorphismTable"]) -> "MorphismTable":
        total = cls()
        for table in tables:
            total = total + table
        return total


def tensor_diff(presentation: DgaPresentation, value: TensorSquare) -> TensorSquare:
    """``d(a ⊗ b) = da ⊗ b + a ⊗ db``."""
    out = []
    for a, b in value.terms:
        if a:
            out.extend((w, b) for w in presentation.diff_word(a).terms)
        if b:
            out.extend((a, w) for w in presentation.diff_word(b).terms)
    return TensorSquare(out)


def morphism_diff(
    presentation: DgaPresentation,
    table: MorphismTable,
    generators: List[MixedChord],
    source_diff: Callable[[DgaPresentation, BimoduleElement], BimoduleElement],
) -> MorphismTable:
    """``D(phi) = phi ∘ d_source + d_{A⊗A} ∘ phi`` on every free generator."""
    return MorphismTable(
        {
            g: table(source_diff(presentation, BimoduleElement.generator(g)))
            + tensor_diff(presentation, table.at(g))
            for g in generators
        }
    )


def D_hat(presentation: DgaPresentation, table: MorphismTable) -> MorphismTable:
    """Differential of Hom(Ĉ₊, A⊗A)."""
    return morphism_diff(presentation, table, hat_generators(presentation), mhat1)


def D_check(presentation: DgaPresentation, table: MorphismTable) -> MorphismTable:
    """Differential of Hom(Č₋, A⊗A)."""
    return morphism_diff(presentation, table, check_generators(presentation), mcheck1)


def G_map(presentation: DgaPresentation, element: BimoduleElement) -> MorphismTable:
    """Č₋ → Hom(Ĉ₊, A⊗A): gamma_01 ↦ phi_gamma, y_01 ↦ phi_y."""
    values: Dict[MixedChord, list] = {}
    for left, chord, right in element.terms:
        _expect(chord, (ChordKind.MINUS, ChordKind.Y), "Č₋")
        target = MixedChord.plus(chord.base) if chord.kind == ChordKind.MINUS else X01
        values.setdefault(target, []).append((right, left))
    return MorphismTable({g: TensorSquare(v) for g, v in values.items()})


def G_inv(table: MorphismTable) -> BimoduleElement:
    """Inverse of G on tables over Ĉ₊."""
    out: List[BimoduleTerm] = []
    for g, value in table.values.items():
        chord = MixedChord.minus(g.base) if g.kind == ChordKind.PLUS else Y01
        out.extend((b, chord, a) for a, b in value.terms)
    return BimoduleElement(out)


def H_map(presentation: DgaPresentation, element: BimoduleElement) -> MorphismTable:
    """Ĉ₊ → Hom(Č₋, A⊗A): gamma_10 ↦ (gamma_01 ↦ 1⊗1), x_01 ↦ (y_01 ↦ 1⊗1)."""
    values: Dict[MixedChord, list] = {}
    for left, chord, right in element.terms:
        _expect(chord, (ChordKind.PLUS, ChordKind.X), "Ĉ₊")
        target = MixedChord.minus(chord.base) if chord.kind == ChordKind.PLUS else Y01
        values.setdefault(target, []).append((right, left))
    return MorphismTable({g: TensorSquare(v) for g, v in values.items()})


def cy_dual(
    presentation: DgaPresentation,
    table: MorphismTable,
    banana_oracle: Optional[BananaOracle] = None,
) -> MorphismTable:
    """CY^!(phi) = phi ∘ CY, a table over Ĉ₊."""
    return MorphismTable(
        {
            g: table(
                cy_bimodule(
                    presentation, BimoduleElement.generator(g), banana_oracle
                )
            )
            for g in hat_generators(presentation)
        }
    )


# Semifree filtration


def semifree_order(presentation: DgaPresentation) -> Optional[List[MixedChord]]:
    """Order of Ĉ₊ generators in which mhat1 is strictly lower triangular.

    By action when every chord has a length, else a topological order of the
    strip relation. None when the strip relation has a cycle.
    """
    gens = hat_generators(presentation)
    if presentation.has_lengths:
        lengths = presentation.lengths
        return sorted(gens, key=lambda g: (mixed_action(g, lengths), g))
    order: List[MixedChord] = [X01]
    placed = {X01}
    pending = list(gens[1:])
    while pending:
        progressed = False
        for g in list(pending):
            strips = strips_D1(presentation, g.base)
            below = {MixedChord.plus(beta) for _, beta, _ in strips}
            if below <= placed:
                order.append(g)
                placed.add(g)
                pending.remove(g)
                progressed = True
        if not progressed:
            return None
    return order


def lower_triangular_defects(
    presentation: DgaPresentation, order: List[MixedChord]
) -> List[str]:
    """Generators whose mhat1 reaches a generator not strictly below them."""
    rank = {g: i for i, g in enumerate(order)}
    defects = []
    for g in order:
        image = mhat1(presentation, BimoduleElement.generator(g))
        if any(rank[chord] >= rank[g] for _, chord, _ in image.terms):
            defects.append(str(g))
    return defects
