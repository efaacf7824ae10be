"""
Exact GF(2) linear algebra on finite slices of the cyclic complexes.

Slices are cut by a degree window and a cap on the pure word length. A basis
element whose differential leaves the slice is flagged as leaking, and every
degree whose rank computation touches a leaking element is masked instead of
reported.
"""

from dataclasses import dataclass, field
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from ..domain.algebra import (
    EMPTY,
    GradingConvention,
    MixedChord,
    Word,
    Z2Chain,
    enumerate_words,
)
from ..domain.errors import BasisCapExceededError, GradingError
from ..domain.interfaces import ChainComplex, ConsoleInterface
from ..domain.models import ComplexKind
from ..domain.presentation import DgaPresentation
from . import bimodules as bm
from .cyclic import (
    CyclicTerm,
    _cy_terms,
    _mcheck1_term,
    _mhat1_term,
    check_basis,
    check_degree,
    hat_basis,
    hat_degree,
)

DEFAULT_BASIS_CAP = 200000


def _low(column: int) -> int:
    return (column & -column).bit_length() - 1


class SparseGf2Matrix:
    """Column-major GF(2) matrix; each column is an int bitset over row indices."""

    def __init__(self, n_rows: int, columns: Optional[Sequence[int]] = None):
        self.n_rows = n_rows
        self.columns: List[int] = list(columns or [])
        for column in self.columns:
            if column >> n_rows:
                raise ValueError("column has entries beyond the row count")

    @classmethod
    def from_entries(
        cls, n_rows: int, n_cols: int, entries: Iterable[Tuple[int, int]]
    ) -> "SparseGf2Matrix":
        columns = [0] * n_cols
        for row, col in entries:
            columns[col] ^= 1 << row
        return cls(n_rows, columns)

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def entry(self, row: int, col: int) -> int:
        return (self.columns[col] >> row) & 1

    def rank(self) -> int:
        """Rank by column reduction with lowest-row pivots."""
        pivots: Dict[int, int] = {}
        for column in self.columns:
            while column:
                low = _low(column)
                pivot = pivots.get(low)
                if pivot is None:
                    pivots[low] = column
                    break
                column ^= pivot
        return len(pivots)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for j, column in enumerate(self.columns):
            while column:
                low = _low(column)
                dense[low, j] = 1
                column &= column - 1
        return dense


def dense_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by row reduction of a dense 0/1 array."""
    mat = np.array(matrix, dtype=np.uint8) % 2
    m, n = mat.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        rows = np.nonzero(mat[rank:, col])[0]
        if rows.size == 0:
            continue
        pivot = rank + int(rows[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        hits = np.nonzero(mat[:, col])[0]
        for r in hits:
            if r != rank:
                mat[r, :] ^= mat[rank, :]
        rank += 1
    return rank


# Cyclic complexes


ConeTerm = Tuple[str, MixedChord, Word]
HomTerm = Tuple[MixedChord, Word, Word]
SOURCE = "s"
TARGET = "t"


class HatCyclicComplex:
    """Ĉ₊^cyc as a chain complex of basis terms."""

    def __init__(self, presentation: DgaPresentation):
        self.presentation = presentation
        self.name = ComplexKind.C_HAT_PLUS.value

    def basis(self, max_len: int) -> Iterable[Hashable]:
        return hat_basis(self.presentation, max_len)

    def degree(self, element: Hashable) -> int:
        return hat_degree(self.presentation, element)  # type: ignore[arg-type]

    def differential(self, element: Hashable) -> Z2Chain:
        terms = _mhat1_term(self.presentation, element)
        return Z2Chain(terms)


class CheckCyclicComplex:
    """Č₋^cyc as a chain complex of basis terms."""

    def __init__(self, presentation: DgaPresentation):
        self.presentation = presentation
        self.name = ComplexKind.C_CHECK_MINUS.value

    def basis(self, max_len: int) -> Iterable[Hashable]:
        return check_basis(self.presentation, max_len)

    def degree(self, element: Hashable) -> int:
        return check_degree(self.presentation, element)  # type: ignore[arg-type]

    def differential(self, element: Hashable) -> Z2Chain:
        terms = _mcheck1_term(self.presentation, element)
        return Z2Chain(terms)


class ConeCyComplex:
    """Cone(CY_1) = Ĉ₊^cyc[-1] ⊕ Č₋^cyc, tagged ``s`` (source) and ``t`` (target).

    Under the identity on chords this is the cyclic RFC complex.
    """

    def __init__(self, presentation: DgaPresentation):
        self.presentation = presentation
        self.name = ComplexKind.CONE_CY.value

    def basis(self, max_len: int) -> Iterable[Hashable]:
        for chord, w in hat_basis(self.presentation, max_len):
            yield SOURCE, chord, w
        for chord, w in check_basis(self.presentation, max_len):
            yield TARGET, chord, w

    def degree(self, element: Hashable) -> int:
        tag, chord, w = element  # type: ignore[misc]
        if tag == SOURCE:
            return hat_degree(self.presentation, (chord, w)) - 1
        return check_degree(self.presentation, (chord, w))

    def differential(self, element: Hashable) -> Z2Chain:
        tag, chord, w = element  # type: ignore[misc]
        term: CyclicTerm = (chord, w)
        if tag == TARGET:
            check = _mcheck1_term(self.presentation, term)
            return Z2Chain((TARGET, c, v) for c, v in check)
        hat = _mhat1_term(self.presentation, term)
        out: List[ConeTerm] = [(SOURCE, c, v) for c, v in hat]
        out.extend((TARGET, c, v) for c, v in _cy_terms(self.presentation, (term,)))
        return Z2Chain(out)


# Bimodule complexes and the cones of the comparison maps


@dataclass
class TermComplex:
    """Chain complex given by a basis enumerator, a degree and a term differential."""

    name: str
    enumerate_basis: Callable[[int], Iterable[Hashable]]
    degree_of: Callable[[Hashable], int]
    differential_of: Callable[[Hashable], Iterable[Hashable]]

    def basis(self, max_len: int) -> Iterable[Hashable]:
        return self.enumerate_basis(max_len)

    def degree(self, element: Hashable) -> int:
        return self.degree_of(element)

    def differential(self, element: Hashable) -> Z2Chain:
        return Z2Chain(self.differential_of(element))


class MappingCone:
    """Cone of a chain map of degree ``map_degree``: source ⊕ target.

    Source elements are tagged ``s`` and sit in degree
    ``source.degree(e) + map_degree - 1``; target elements are tagged ``t``.
    """

    def __init__(
        self,
        name: str,
        source: ChainComplex,
        target: ChainComplex,
        connecting: Callable[[Hashable], Iterable[Hashable]],
        map_degree: int = 0,
    ):
        self.name = name
        self.source = source
        self.target = target
        self.connecting = connecting
        self.map_degree = map_degree

    def basis(self, max_len: int) -> Iterable[Hashable]:
        for element in self.source.basis(max_len):
            yield SOURCE, element
        for element in self.target.basis(max_len):
            yield TARGET, element

    def degree(self, element: Hashable) -> int:
        tag, inner = element  # type: ignore[misc]
        if tag == SOURCE:
            return self.source.degree(inner) + self.map_degree - 1
        return self.target.degree(inner)

    def differential(self, element: Hashable) -> Z2Chain:
        tag, inner = element  # type: ignore[misc]
        if tag == TARGET:
            return Z2Chain((TARGET, t) for t in self.target.differential(inner).terms)
        out = [(SOURCE, t) for t in self.source.differential(inner).terms]
        out.extend((TARGET, t) for t in self.connecting(inner))
        return Z2Chain(out)


def _single(term: Hashable) -> bm.BimoduleElement:
    return bm.BimoduleElement([term])


def _graded(
    presentation: DgaPresentation, convention: GradingConvention
) -> Callable[[Hashable], int]:
    def degree(term: Hashable) -> int:
        return bm.bimodule_degree(presentation, term, convention)  # type: ignore

    return degree


def _table_terms(table: bm.MorphismTable) -> List[HomTerm]:
    return [(g, a, b) for g, value in table.values.items() for a, b in value.terms]


def hat_bimodule_complex(presentation: DgaPresentation) -> TermComplex:
    """Ĉ₊ with its ``c-hat-plus`` grading."""
    P = presentation
    return TermComplex(
        "hat-bimodule",
        lambda L: bm.bimodule_basis(P, bm.hat_generators(P), L),
        _graded(P, GradingConvention.C_HAT_PLUS),
        lambda t: bm.mhat1(P, _single(t)).terms,
    )


def check_bimodule_complex(presentation: DgaPresentation) -> TermComplex:
    """Č₋ with its ``c-minus`` grading."""
    P = presentation
    return TermComplex(
        "check-bimodule",
        lambda L: bm.bimodule_basis(P, bm.check_generators(P), L),
        _graded(P, GradingConvention.C_MINUS),
        lambda t: bm.mcheck1(P, _single(t)).terms,
    )


def rfc_complex(presentation: DgaPresentation) -> TermComplex:
    """RFC = C₊ ⊕ C₋ with x_01 and y_01 in C₋."""
    P = presentation
    generators = bm.hat_generators(P) + bm.check_generators(P)
    return TermComplex(
        "rfc",
        lambda L: bm.bimodule_basis(P, generators, L),
        lambda t: bm.rfc_degree(P, t),  # type: ignore[arg-type]
        lambda t: bm.rfc_diff(P, _single(t)).terms,
    )


def algebra_complex(presentation: DgaPresentation) -> TermComplex:
    """The algebra A on words."""
    P = presentation
    return TermComplex(
        "algebra",
        lambda L: enumerate_words(P.names, L),
        lambda w: P.degree(w),  # type: ignore[arg-type]
        lambda w: P.diff_word(w).terms,  # type: ignore[arg-type]
    )


def hom_complex(
    presentation: DgaPresentation,
    generators: List[MixedChord],
    source_diff: Callable[[DgaPresentation, bm.BimoduleElement], bm.BimoduleElement],
    convention: GradingConvention,
) -> TermComplex:
    """Hom(M, A⊗A) on elements ``(g, a, b)``, the map sending ``g`` to ``a⊗b``.

    ``(g, a, b)`` has degree ``|a| + |b| - |g|``.
    """
    P = presentation
    generator_degree = _graded(P, convention)

    def basis(max_len: int) -> Iterator[HomTerm]:
        for a, g, b in bm.bimodule_basis(P, generators, max_len):
            yield g, a, b

    def degree(term: Hashable) -> int:
        g, a, b = term  # type: ignore[misc]
        return P.degree(a) + P.degree(b) - generator_degree((EMPTY, g, EMPTY))

    def differential(term: Hashable) -> List[HomTerm]:
        g, a, b = term  # type: ignore[misc]
        table = bm.MorphismTable({g: bm.TensorSquare([(a, b)])})
        return _table_terms(bm.morphism_diff(P, table, generators, source_diff))

    return TermComplex("hom", basis, degree, differential)


def cone_f_complex(presentation: DgaPresentation) -> MappingCone:
    """Cone(F: Ĉ₊ → A), F of degree ``-(n+1)``."""
    P = presentation
    return MappingCone(
        ComplexKind.CONE_F.value,
        hat_bimodule_complex(P),
        algebra_complex(P),
        lambda t: bm.F_map(P, _single(t)).terms,
        -(P.n + 1),
    )


def cone_g_complex(presentation: DgaPresentation) -> MappingCone:
    """Cone(G: Č₋ → Hom(Ĉ₊, A⊗A)), G of degree ``-(n+1)``."""
    P = presentation
    target = hom_complex(
        P, bm.hat_generators(P), bm.mhat1, GradingConvention.C_HAT_PLUS
    )
    return MappingCone(
        ComplexKind.CONE_G.value,
        check_bimodule_complex(P),
        target,
        lambda t: _table_terms(bm.G_map(P, _single(t))),
        -(P.n + 1),
    )


def cone_h_complex(presentation: DgaPresentation) -> MappingCone:
    """Cone(H: Ĉ₊ → Hom(Č₋, A⊗A)), H of degree ``-(n+1)``."""
    P = presentation
    target = hom_complex(
        P, bm.check_generators(P), bm.mcheck1, GradingConvention.C_MINUS
    )
    return MappingCone(
        ComplexKind.CONE_H.value,
        hat_bimodule_complex(P),
        target,
        lambda t: _table_terms(bm.H_map(P, _single(t))),
        -(P.n + 1),
    )


def cone_nu_complex(presentation: DgaPresentation) -> MappingCone:
    """Cone(nu: Cone(CY) → RFC), both built on the 2-copy bimodules."""
    P = presentation
    cone_cy = MappingCone(
        "cone-cy-bimodule",
        hat_bimodule_complex(P),
        check_bimodule_complex(P),
        lambda t: bm.cy_bimodule(P, _single(t)).terms,
    )
    return MappingCone(
        ComplexKind.CONE_NU.value,
        cone_cy,
        rfc_complex(P),
        lambda element: [element[1]],  # type: ignore[index]
    )


def build_complex(presentation: DgaPresentation, kind: ComplexKind) -> ChainComplex:
    if kind == ComplexKind.C_HAT_PLUS:
        return HatCyclicComplex(presentation)
    if kind == ComplexKind.C_CHECK_MINUS:
        return CheckCyclicComplex(presentation)
    if kind == ComplexKind.CONE_F:
        return cone_f_complex(presentation)
    if kind == ComplexKind.CONE_G:
        return cone_g_complex(presentation)
    if kind == ComplexKind.CONE_H:
        return cone_h_complex(presentation)
    if kind == ComplexKind.CONE_NU:
        return cone_nu_complex(presentation)
    return ConeCyComplex(presentation)

# Slices


@dataclass
class ComplexSlice:
    """Basis of a complex between degrees ``window[0]-1`` and ``window[1]+1``.

    ``columns[j]`` is the bitset of slice indices in the differential of
    ``basis[j]``; ``leaking[j]`` is set when that differential has support
    outside the slice.
    """

    name: str
    window: Tuple[int, int]
    max_len: int
    basis: List[Hashable] = field(default_factory=list)
    degrees: List[int] = field(default_factory=list)
    columns: List[int] = field(default_factory=list)
    leaking: List[bool] = field(default_factory=list)

    def indices_of_degree(self, k: int) -> List[int]:
        return [i for i, d in enumerate(self.degrees) if d == k]

    def count(self, k: int) -> int:
        return len(self.indices_of_degree(k))

    def matrix(self) -> SparseGf2Matrix:
        return SparseGf2Matrix(len(self.basis), self.columns)

    def block(self, k: int) -> SparseGf2Matrix:
        """The differential from degree ``k`` to degree ``k + 1`` inside the slice."""
        sources = self.indices_of_degree(k)
        targets = {i: r for r, i in enumerate(self.indices_of_degree(k + 1))}
        entries = []
        for c, j in enumerate(sources):
            column = self.columns[j]
            while column:
                i = _low(column)
                column &= column - 1
                if i in targets:
                    entries.append((targets[i], c))
        return SparseGf2Matrix.from_entries(len(targets), len(sources), entries)


def assemble_slice(
    complex_: ChainComplex,
    window: Tuple[int, int],
    max_len: int,
    basis_cap: int = DEFAULT_BASIS_CAP,
    console: Optional[ConsoleInterface] = None,
) -> ComplexSlice:
    """Enumerate the slice basis and its differential matrix.

    Raises:
        BasisCapExceededError: if the slice would hold more than ``basis_cap`` elements
        GradingError: if the differential does not raise degree by one
    """
    lo, hi = window
    result = ComplexSlice(complex_.name, window, max_len)
    for element in complex_.basis(max_len):
        k = complex_.degree(element)
        if lo - 1 <= k <= hi + 1:
            result.basis.append(element)
            result.degrees.append(k)
            if len(result.basis) > basis_cap:
                raise BasisCapExceededError(len(result.basis), basis_cap)
    if console:
        console.debug(
            f"{complex_.name} slice {window} L={max_len}: "
            f"{len(result.basis)} elements"
        )

    index = {element: i for i, element in enumerate(result.basis)}
    for j, element in enumerate(result.basis):
        column, leaks = 0, False
        for term in complex_.differential(element).terms:
            i = index.get(term)
            if i is None:
                leaks = True
                continue
            if result.degrees[i] != result.degrees[j] + 1:
                raise GradingError(
                    f"differential of {element} reaches {term} outside degree "
                    f"{result.degrees[j] + 1}"
                )
            column |= 1 << i
        result.columns.append(column)
        result.leaking.append(leaks)
    return result


@dataclass
class HomologyResult:
    """Homology dimensions per degree, with the degrees that could not be trusted."""

    dims: Dict[int, int]
    masked: List[int]

    def unmasked(self) -> Dict[int, int]:
        return {k: v for k, v in self.dims.items() if k not in self.masked}


def homology_dims(slice_: ComplexSlice) -> HomologyResult:
    """``dim ker - rank im`` for every degree of the window.

    Degree k is masked when an element of degree k or k-1 leaks.
    """
    lo, hi = slice_.window
    dims: Dict[int, int] = {}
    masked: List[int] = []
    ranks = {k: slice_.block(k).rank() for k in range(lo - 1, hi + 1)}
    for k in range(lo, hi + 1):
        dims[k] = slice_.count(k) - ranks[k] - ranks[k - 1]
        if any(slice_.leaking[i] for i in slice_.indices_of_degree(k)) or any(
            slice_.leaking[i] for i in slice_.indices_of_degree(k - 1)
        ):
            masked.append(k)
    return HomologyResult(dims, masked)


def hochschild_homology(
    presentation: DgaPresentation,
    kind: ComplexKind,
    window: Tuple[int, int],
    max_len: int,
    basis_cap: int = DEFAULT_BASIS_CAP,
    console: Optional[ConsoleInterface] = None,
) -> HomologyResult:
    """Homology of one of the cyclic complexes on a window slice."""
    slice_ = assemble_slice(
        build_complex(presentation, kind), window, max_len, basis_cap, console
    )
    result = homology_dims(slice_)
    if console:
        console.info(
            f"{kind.value}: dims {result.dims}, masked {result.masked or 'none'}"
        )
    return result
