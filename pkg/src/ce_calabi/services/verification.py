"""
Exact identity checks: validation, bimodule suites and the A-infinity relations.

Every check evaluates both sides of an identity on a finite set of inputs and
compares Z2-sets exactly; the first failing input is kept as the
counterexample together with both expansions.
"""

import random
from functools import lru_cache, partial
from itertools import islice
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..domain.algebra import (
    EMPTY,
    GradingConvention as GC,
    MixedChord,
    TensorPoly,
    Word,
    Z2Chain,
    enumerate_words,
    format_word,
)
from ..domain.errors import CeCalabiError, PreconditionError
from ..domain.interfaces import BananaOracle, ConsoleInterface
from ..domain.models import CheckResult, CheckStatus, Report
from ..domain.presentation import DgaPresentation
from . import bimodules as bm
from . import cyclic as cy
from .oracle import pointed_terms

Op = Callable[[DgaPresentation, Sequence[cy.CyclicElement]], cy.CyclicElement]
Suite = Callable[[DgaPresentation, int, Optional[BananaOracle]], List[CheckResult]]
Part = Tuple[str, Z2Chain]


def _describe(value: Any) -> str:
    if isinstance(value, tuple) and value and isinstance(value[0], Z2Chain):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def _expansion(value: Any) -> List[str]:
    """One string per term of a Z2 sum, in sorted term order."""
    if not isinstance(value, Z2Chain):
        return [str(value)]
    if type(value) is Z2Chain:
        return [repr(term) for term in value.sorted_terms()]
    return [str(type(value)([term])) for term in value.sorted_terms()]


def verify_identity(
    name: str,
    lhs: Callable[[Any], Any],
    rhs: Optional[Callable[[Any], Any]],
    elements: Iterable[Any],
    advisory: bool = False,
    expand: Optional[Callable[[Any], Sequence[Part]]] = None,
) -> CheckResult:
    """Compare ``lhs(e)`` with ``rhs(e)`` on every element; ``rhs=None`` means zero.

    Elements are tried in the given order, so a shortest-first enumeration
    yields a shortest counterexample. The counterexample carries the term
    expansion of both sides and, when ``expand`` is given, every nonzero
    summand of the left side by label.
    """
    tested = 0
    for element in elements:
        tested += 1
        try:
            left = lhs(element)
            right = rhs(element) if rhs is not None else None
        except CeCalabiError as e:
            return CheckResult(
                check=name,
                status=CheckStatus.FAIL,
                tested=tested,
                advisory=advisory,
                counterexample={"input": _describe(element), "error": str(e)},
            )
        same = not left if right is None else left == right
        if not same:
            counterexample: Dict[str, Any] = {
                "input": _describe(element),
                "lhs": str(left),
                "lhs_terms": _expansion(left),
                "rhs": "0" if right is None else str(right),
                "rhs_terms": [] if right is None else _expansion(right),
            }
            if expand is not None:
                counterexample["summands"] = {
                    label: str(part) for label, part in expand(element) if part
                }
            return CheckResult(
                check=name,
                status=CheckStatus.FAIL,
                tested=tested,
                advisory=advisory,
                counterexample=counterexample,
            )
    return CheckResult(
        check=name, status=CheckStatus.PASS, tested=tested, advisory=advisory
    )


def _skipped(name: str, reason: str, advisory: bool = False) -> CheckResult:
    return CheckResult(
        check=name, status=CheckStatus.SKIPPED, detail=reason, advisory=advisory
    )


def _failed(
    name: str, tested: int, counterexample: Dict[str, Any], advisory: bool = False
) -> CheckResult:
    return CheckResult(
        check=name,
        status=CheckStatus.FAIL,
        tested=tested,
        counterexample=counterexample,
        advisory=advisory,
    )


# Presentation validation


def _check_differential_degree(presentation: DgaPresentation) -> CheckResult:
    name = "degree-of-differential"
    tested = 0
    try:
        for gen in presentation.names:
            target = presentation.degree((gen,)) + 1
            for m in presentation.monomials(gen):
                tested += 1
                if presentation.degree(m) != target:
                    return _failed(
                        name,
                        tested,
                        {
                            "generator": gen,
                            "monomial": format_word(m),
                            "expected": target,
                            "actual": presentation.degree(m),
                        },
                    )
    except CeCalabiError as e:
        return _failed(name, tested, {"error": str(e)})
    return CheckResult(check=name, status=CheckStatus.PASS, tested=tested)


def _check_d_squared(presentation: DgaPresentation) -> CheckResult:
    return verify_identity(
        "d-squared",
        lambda gen: presentation.base_diff(presentation.diff_of(gen)),
        None,
        presentation.names,
    )


def _check_action(presentation: DgaPresentation) -> CheckResult:
    name = "action-decrease"
    if not presentation.has_lengths:
        return _skipped(name, "no chord lengths given")
    lengths = presentation.lengths
    tested = 0
    for gen in presentation.names:
        for m in presentation.monomials(gen):
            tested += 1
            total = sum(lengths[letter] for letter in m)  # type: ignore[misc]
            if not total < lengths[gen]:  # type: ignore[operator]
                return _failed(
                    name,
                    tested,
                    {
                        "generator": gen,
                        "monomial": format_word(m),
                        "action": str(total),
                    },
                )
    return CheckResult(check=name, status=CheckStatus.PASS, tested=tested)


def _check_marks(presentation: DgaPresentation) -> CheckResult:
    name = "pointed-marks"
    declared = set(presentation.names)
    tested = 0
    for gen in presentation.names:
        for marked in presentation.pointed_of(gen):
            tested += 1
            unknown = [letter for letter in marked.word if letter not in declared]
            if unknown or not 0 <= marked.mark <= len(marked.word):
                return _failed(name, tested, {"generator": gen, "marked": str(marked)})
    return CheckResult(check=name, status=CheckStatus.PASS, tested=tested)


def pointed_degree_check(presentation: DgaPresentation) -> CheckResult:
    """Advisory: each ``u ^ v`` in the pointed d(gamma) has ``|u|+|v| = n+|gamma|``."""
    name = "pointed-degree"
    tested = 0
    for gen in presentation.names:
        target = presentation.n + presentation.degree((gen,))
        for u, v in pointed_terms(presentation, gen):
            tested += 1
            if presentation.degree(u) + presentation.degree(v) != target:
                return _failed(
                    name,
                    tested,
                    {
                        "generator": gen,
                        "marked": f"{format_word(u)} ^ {format_word(v)}",
                    },
                    advisory=True,
                )
    return CheckResult(
        check=name, status=CheckStatus.PASS, tested=tested, advisory=True
    )


def pointed_compatibility_check(
    presentation: DgaPresentation, banana_oracle: Optional[BananaOracle] = None
) -> CheckResult:
    """Advisory: the bimodule map CY commutes with the differentials."""
    return verify_identity(
        "pointed-compatibility",
        lambda e: bm.cy_bimodule(presentation, bm.mhat1(presentation, e), banana_oracle)
        + bm.mcheck1(presentation, bm.cy_bimodule(presentation, e, banana_oracle)),
        None,
        [bm.BimoduleElement.generator(g) for g in bm.hat_generators(presentation)],
        advisory=True,
    )


def validate(presentation: DgaPresentation) -> Report:
    """Structural checks of a presentation; advisory entries never fail the report."""
    report = Report(presentation=presentation.name, command="validate")
    report.add(_check_differential_degree(presentation))
    report.add(_check_d_squared(presentation))
    report.add(_check_action(presentation))
    report.add(_check_marks(presentation))
    report.add(pointed_degree_check(presentation))
    report.add(pointed_compatibility_check(presentation))
    return report


# Bimodule suites


def _bimodule_basis(
    presentation: DgaPresentation, generators: List[MixedChord], max_len: int
) -> List[bm.BimoduleElement]:
    basis = bm.bimodule_basis(presentation, generators, max_len)
    return [bm.BimoduleElement([t]) for t in basis]


def _degree_contract(
    name: str,
    fn: Callable[[Any], Z2Chain],
    elements: Iterable[Any],
    degree_in: Callable[[Any], int],
    degree_out: Callable[[Any], int],
    shift: int,
) -> CheckResult:
    tested = 0
    for element in elements:
        tested += 1
        expected = degree_in(element) + shift
        for term in fn(element).terms:
            if degree_out(term) != expected:
                return _failed(
                    name,
                    tested,
                    {
                        "input": _describe(element),
                        "output": str(term),
                        "expected": expected,
                    },
                )
    return CheckResult(check=name, status=CheckStatus.PASS, tested=tested)


def _bimodule_term_degree(
    presentation: DgaPresentation, convention: Any
) -> Callable[[Any], int]:
    return lambda term: bm.bimodule_degree(presentation, term, convention)


def bimodule_suite(
    presentation: DgaPresentation,
    max_len: int,
    banana_oracle: Optional[BananaOracle] = None,
) -> List[CheckResult]:
    """Square-zero, chain-map, homotopy and degree checks of the 2-copy layer."""
    P = presentation
    hat = _bimodule_basis(P, bm.hat_generators(P), max_len)
    check = _bimodule_basis(P, bm.check_generators(P), max_len)
    rfc = hat + check
    words = [TensorPoly([w]) for w in enumerate_words(P.names, max_len)]
    results = [
        verify_identity(
            "mhat1-squared", lambda e: bm.mhat1(P, bm.mhat1(P, e)), None, hat
        ),
        verify_identity(
            "mcheck1-squared", lambda e: bm.mcheck1(P, bm.mcheck1(P, e)), None, check
        ),
        verify_identity(
            "rfc-squared",
            lambda e: bm.rfc_diff(P, bm.rfc_diff(P, e, banana_oracle), banana_oracle),
            None,
            rfc,
        ),
        verify_identity(
            "cy-chain-map",
            lambda e: bm.cy_bimodule(P, bm.mhat1(P, e), banana_oracle)
            + bm.mcheck1(P, bm.cy_bimodule(P, e, banana_oracle)),
            None,
            hat,
        ),
        verify_identity(
            "nu-chain-map",
            lambda e: bm.nu_map(
                (bm.mhat1(P, e), bm.cy_bimodule(P, e, banana_oracle))
            )
            + bm.rfc_diff(P, bm.nu_map((e, bm.BimoduleElement())), banana_oracle),
            None,
            hat,
        ),
        verify_identity(
            "G-chain-map",
            lambda e: bm.G_map(P, bm.mcheck1(P, e)) + bm.D_hat(P, bm.G_map(P, e)),
            None,
            check,
        ),
        verify_identity(
            "H-chain-map",
            lambda e: bm.H_map(P, bm.mhat1(P, e)) + bm.D_check(P, bm.H_map(P, e)),
            None,
            hat,
        ),
        verify_identity(
            "F-chain-map",
            lambda e: bm.F_map(P, bm.mhat1(P, e)) + P.base_diff(bm.F_map(P, e)),
            None,
            hat,
        ),
        _homotopy_check(P, hat, words),
        _degree_contract(
            "mhat1-degree",
            lambda e: bm.mhat1(P, e),
            hat,
            lambda e: bm.bimodule_degree(P, next(iter(e.terms)), GC.C_HAT_PLUS),
            _bimodule_term_degree(P, GC.C_HAT_PLUS),
            1,
        ),
        _degree_contract(
            "mcheck1-degree",
            lambda e: bm.mcheck1(P, e),
            check,
            lambda e: bm.bimodule_degree(P, next(iter(e.terms)), GC.C_MINUS),
            _bimodule_term_degree(P, GC.C_MINUS),
            1,
        ),
        _degree_contract(
            "rfc-degree",
            lambda e: bm.rfc_diff(P, e, banana_oracle),
            rfc,
            lambda e: bm.rfc_degree(P, next(iter(e.terms))),
            lambda t: bm.rfc_degree(P, t),
            1,
        ),
        _degree_contract(
            "cy-degree",
            lambda e: bm.cy_bimodule(P, e, banana_oracle),
            hat,
            lambda e: bm.bimodule_degree(P, next(iter(e.terms)), GC.C_HAT_PLUS),
            _bimodule_term_degree(P, GC.C_MINUS),
            0,
        ),
        semifree_check(P),
    ]
    return results


def _homotopy_check(
    presentation: DgaPresentation,
    hat: List[bm.BimoduleElement],
    words: List[TensorPoly],
) -> CheckResult:
    P = presentation
    zero_poly, zero_hat = TensorPoly.zero(), bm.BimoduleElement()
    elements = [(e, zero_poly) for e in hat] + [(zero_hat, p) for p in words]

    def defect(element: Tuple[bm.BimoduleElement, TensorPoly]) -> Z2Chain:
        dh = bm.cone_f_diff(P, bm.h_homotopy(P, element))
        hd = bm.h_homotopy(P, bm.cone_f_diff(P, element))
        hat_part = dh[0] + hd[0] + element[0]
        poly_part = dh[1] + hd[1] + element[1]
        return Z2Chain(
            [("bimodule", t) for t in hat_part.terms]
            + [("algebra", w) for w in poly_part.terms]
        )

    return verify_identity("cone-F-homotopy", defect, None, elements)


def semifree_check(presentation: DgaPresentation) -> CheckResult:
    """mhat1 is strictly lower triangular in the semifree order of the generators."""
    order = bm.semifree_order(presentation)
    if order is None:
        return _failed("semifree-order", 0, {"reason": "strip relation has a cycle"})
    defects = bm.lower_triangular_defects(presentation, order)
    result = CheckResult(
        check="semifree-order",
        status=CheckStatus.FAIL if defects else CheckStatus.PASS,
        tested=len(order),
        detail=" < ".join(str(g) for g in order),
    )
    if defects:
        result.counterexample = {"generators": defects}
    return result


def verify_cy_self_duality(
    presentation: DgaPresentation, banana_oracle: Optional[BananaOracle] = None
) -> CheckResult:
    """``G^-1 ∘ CY^! ∘ H == CY`` on every Ĉ₊ generator.

    The pointed part of each generator is always exercised; the long banana
    part only where bananas are rigid. The detail lists which parts each
    generator exercised.
    """
    P = presentation
    exercised = []
    for g in bm.hat_generators(P):
        element = bm.BimoduleElement.generator(g)
        lhs = bm.G_inv(bm.cy_dual(P, bm.H_map(P, element), banana_oracle))
        rhs = bm.cy_bimodule(P, element, banana_oracle)
        parts = ["pointed"]
        if g.is_long and bm.is_rigid_banana_degree(P, g.base):
            parts.append("banana")
        exercised.append(f"{g}: {'+'.join(parts)}")
        if lhs != rhs:
            return CheckResult(
                check="cy-self-duality",
                status=CheckStatus.FAIL,
                tested=len(exercised),
                counterexample={"generator": str(g), "dual": str(lhs), "cy": str(rhs)},
                detail="; ".join(exercised),
            )
    return CheckResult(
        check="cy-self-duality",
        status=CheckStatus.PASS,
        tested=len(exercised),
        detail="; ".join(exercised),
    )


# A-infinity relations


@lru_cache(maxsize=32)
def _words_by_length(
    presentation: DgaPresentation, max_len: int
) -> Dict[int, Tuple[Word, ...]]:
    table: Dict[int, List[Word]] = {k: [] for k in range(max_len + 1)}
    for w in enumerate_words(presentation.names, max_len):
        table[len(w)].append(w)
    return {k: tuple(words) for k, words in table.items()}


def input_tuples(
    presentation: DgaPresentation, pools: Sequence[Sequence[MixedChord]], max_len: int
) -> Iterator[Tuple[cy.CyclicElement, ...]]:
    """Composable tuples ``(e_k, ..., e_1)`` with total word length at most ``max_len``.

    Tuples come in order of increasing total word length. ``pools[i]`` lists
    the chords allowed in position ``i`` (leftmost first); copies are
    assigned so that position ``i`` sits on ``(k-1-i, k-i)``.
    """
    k = len(pools)
    words = _words_by_length(presentation, max_len)

    def rec(pos: int, remaining: int) -> Iterator[Tuple[cy.CyclicTerm, ...]]:
        if pos == k:
            if remaining == 0:
                yield ()
            return
        lengths = [remaining] if pos == k - 1 else range(remaining + 1)
        for chord in pools[pos]:
            placed = chord.relabel(k - 1 - pos, k - pos)
            for length in lengths:
                for w in words[length]:
                    for rest in rec(pos + 1, remaining - length):
                        yield ((placed, w),) + rest

    for total in range(max_len + 1):
        for terms in rec(0, total):
            yield tuple(cy.CyclicElement([t]) for t in terms)


def _sampled(items: Iterator[Any], sample: int, seed: int) -> Iterable[Any]:
    """Everything when ``sample`` is 0, else a reservoir sample of that size."""
    if sample <= 0:
        return items
    rng = random.Random(seed)
    reservoir: List[Any] = list(islice(items, sample))
    for i, item in enumerate(items, start=sample):
        j = rng.randint(0, i)
        if j < sample:
            reservoir[j] = item
    return reservoir


OP_NAMES: Dict[Op, str] = {
    cy.mhat_d: "mhat",
    cy.mcheck_d: "mcheck",
    cy.mu_plus: "mu",
    cy.f_j: "f",
    cy.cy_d: "CY",
}


def _label(outer: Op, inner: Op, k: int, start: int, size: int) -> str:
    """``outer_r(id, ..., inner_size, ..., id)`` for a block of ``k`` inputs."""
    slots = ["id"] * (k - size + 1)
    slots[start] = f"{OP_NAMES[inner]}_{size}"
    return f"{OP_NAMES[outer]}_{k - size + 1}({', '.join(slots)})"


def _total(parts: Iterable[Part]) -> cy.CyclicElement:
    total = cy.CyclicElement()
    for _, value in parts:
        total = total + value
    return total


def _insert(
    presentation: DgaPresentation,
    outer: Op,
    inputs: Sequence[cy.CyclicElement],
    inner: Op,
    start: int,
    size: int,
) -> Part:
    label = _label(outer, inner, len(inputs), start, size)
    middle = inner(presentation, inputs[start : start + size])
    if not middle:
        return label, cy.CyclicElement()
    spliced = list(inputs[:start]) + [middle] + list(inputs[start + size :])
    return label, outer(presentation, spliced)


def prod_inf_parts(
    presentation: DgaPresentation, op: Op, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    """Every ``op(id, ..., op_m, ..., id)`` of an inner block, by label."""
    k = len(inputs)
    return [
        _insert(presentation, op, inputs, op, s, m)
        for m in range(1, k + 1)
        for s in range(0, k - m + 1)
    ]


def prod_inf(
    presentation: DgaPresentation, op: Op, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """Sum over ``op(id, ..., op_m, ..., id)`` of all inner blocks."""
    return _total(prod_inf_parts(presentation, op, inputs))


def fun_inf_parts(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    P = presentation
    k = len(inputs)
    parts: List[Part] = []
    for r in range(1, k + 1):
        for sizes in cy.compositions(k, r):
            images, start = [], 0
            for size in sizes:
                images.append(cy.cy_d(P, inputs[start : start + size]))
                start += size
            label = f"mcheck_{r}({', '.join(f'CY_{size}' for size in sizes)})"
            value = cy.mcheck_d(P, images) if all(images) else cy.CyclicElement()
            parts.append((label, value))
    for m in range(1, k + 1):
        for s in range(0, k - m + 1):
            parts.append(_insert(P, cy.cy_d, inputs, cy.mhat_d, s, m))
    return parts


def fun_inf(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """A-infinity functor relation of the CY family against (mhat, mcheck)."""
    return _total(fun_inf_parts(presentation, inputs))


def module_relation_parts(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    P = presentation
    k = len(inputs)
    parts = [
        _insert(P, cy.mu_plus, inputs, cy.mcheck_d, s, m)
        for m in range(1, k)
        for s in range(0, k - m)
    ]
    parts.extend(
        _insert(P, cy.mu_plus, inputs, cy.mu_plus, k - m, m) for m in range(1, k + 1)
    )
    return parts


def module_relation(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """Left A-infinity module relation of ``mu_plus`` on ``(psi_k, ..., psi_2, e)``."""
    return _total(module_relation_parts(presentation, inputs))


def morphism_relation_parts(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    P = presentation
    k = len(inputs)
    parts = [
        _insert(P, cy.f_j, inputs, cy.mcheck_d, s, m)
        for m in range(1, k)
        for s in range(0, k - m)
    ]
    for m in range(1, k + 1):
        parts.append(_insert(P, cy.f_j, inputs, cy.mu_plus, k - m, m))
        parts.append(_insert(P, cy.mcheck_d, inputs, cy.f_j, k - m, m))
    return parts


def morphism_relation(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """A-infinity module morphism relation of the CY family ``f_j``."""
    return _total(morphism_relation_parts(presentation, inputs))


def cy2_relation_parts(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    P = presentation
    e2, e1 = inputs
    return [
        ("CY_1(mhat_2)", cy.cy_d(P, [cy.mhat_d(P, [e2, e1])])),
        ("mcheck_2(CY_1, CY_1)", cy.mcheck_d(P, [cy.cy_d(P, [e2]), cy.cy_d(P, [e1])])),
        ("mcheck_1(CY_2)", cy.mcheck1_cyc(P, cy.cy_d(P, [e2, e1]))),
        ("CY_2(id, mhat_1)", cy.cy_d(P, [e2, cy.mhat1_cyc(P, e1)])),
        ("CY_2(mhat_1, id)", cy.cy_d(P, [cy.mhat1_cyc(P, e2), e1])),
    ]


def cy2_relation(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """Degree-two CY relation.

    ``CY_1 mhat_2 + mcheck_2(CY_1, CY_1) + mcheck_1 CY_2``
    ``+ CY_2(id, mhat_1) + CY_2(mhat_1, id)``
    """
    return _total(cy2_relation_parts(presentation, inputs))


def homotopy_relation_parts(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> List[Part]:
    P = presentation
    e2, e1 = inputs
    return [
        ("mhat_2", cy.mhat_d(P, [e2, e1])),
        ("dhat_2", cy.dhat2_alt(P, [e2, e1])),
        ("h(id, mhat_1)", cy.h2_homotopy(P, [e2, cy.mhat1_cyc(P, e1)])),
        ("h(mhat_1, id)", cy.h2_homotopy(P, [cy.mhat1_cyc(P, e2), e1])),
        ("mhat_1(h)", cy.mhat1_cyc(P, cy.h2_homotopy(P, [e2, e1]))),
    ]


def homotopy_relation(
    presentation: DgaPresentation, inputs: Sequence[cy.CyclicElement]
) -> cy.CyclicElement:
    """``mhat_2 + dhat_2 + h(id, mhat_1) + h(mhat_1, id) + mhat_1 h``."""
    return _total(homotopy_relation_parts(presentation, inputs))


def _unit_check(presentation: DgaPresentation, max_len: int) -> CheckResult:
    P = presentation
    y01, y12 = MixedChord.y(0, 1), MixedChord.y(1, 2)

    def defect(term: cy.CyclicTerm) -> cy.CyclicElement:
        chord, w = term
        expected = cy.CyclicElement([(chord.relabel(0, 2), w)])
        unit_left = cy.CyclicElement([(y12, EMPTY)])
        unit_right = cy.CyclicElement([(y01, EMPTY)])
        shifted = cy.CyclicElement([(chord.relabel(1, 2), w)])
        left = cy.mcheck_d(P, [unit_left, cy.CyclicElement([term])])
        right = cy.mcheck_d(P, [shifted, unit_right])
        return (left + expected) + (right + expected)

    basis = list(cy.check_basis(P, max_len))
    return verify_identity("mcheck2-unit", defect, None, basis)


def _hat_pool(presentation: DgaPresentation) -> List[MixedChord]:
    return [MixedChord.x()] + [MixedChord.plus(name) for name in presentation.names]


def _check_pool(presentation: DgaPresentation) -> List[MixedChord]:
    return [MixedChord.y()] + [MixedChord.minus(name) for name in presentation.names]


def _family_degree_check(
    presentation: DgaPresentation,
    name: str,
    op: Op,
    tuples: Iterable[Tuple[cy.CyclicElement, ...]],
    degree_in: Callable[[DgaPresentation, cy.CyclicTerm], int],
    degree_out: Callable[[DgaPresentation, cy.CyclicTerm], int],
    shift: int,
) -> CheckResult:
    def total_in(inputs: Tuple[cy.CyclicElement, ...]) -> int:
        return sum(degree_in(presentation, next(iter(e.terms))) for e in inputs)

    return _degree_contract(
        name,
        lambda inputs: op(presentation, inputs),
        tuples,
        total_in,
        lambda term: degree_out(presentation, term),
        shift,
    )


def verify_ainfty(
    presentation: DgaPresentation,
    k_max: int,
    max_len: int,
    sample: int = 0,
    seed: int = 0,
    console: Optional[ConsoleInterface] = None,
) -> List[CheckResult]:
    """A-infinity relations for arities up to ``k_max`` on composable tuples.

    Raises:
        PreconditionError: if the presentation does not validate
    """
    P = presentation
    if not validate(P).passed:
        raise PreconditionError(f"{P.name} does not validate; refusing to verify")
    hat, check = _hat_pool(P), _check_pool(P)
    results: List[CheckResult] = []

    def run(
        name: str,
        parts: Callable[[Any], List[Part]],
        pools: List[List[MixedChord]],
    ) -> None:
        items = _sampled(input_tuples(P, pools, max_len), sample, seed)
        result = verify_identity(
            name, lambda t: _total(parts(t)), None, items, expand=parts
        )
        if sample:
            result.detail = f"sampled {sample} tuples with seed {seed}"
        if console:
            console.debug(f"{name}: {result.status.value} ({result.tested} tuples)")
        results.append(result)

    for k in range(1, k_max + 1):
        run(f"ainfty-mhat-k{k}", partial(prod_inf_parts, P, cy.mhat_d), [hat] * k)
        mcheck_parts = partial(prod_inf_parts, P, cy.mcheck_d)
        run(f"ainfty-mcheck-k{k}", mcheck_parts, [check] * k)
        run(f"ainfty-cy-k{k}", partial(fun_inf_parts, P), [hat] * k)
        module_pools = [check] * (k - 1) + [hat]
        run(f"module-mu-plus-k{k}", partial(module_relation_parts, P), module_pools)
        run(f"module-cy-k{k}", partial(morphism_relation_parts, P), module_pools)
        for name, op, pool, degree_in, degree_out, shift in (
            ("mhat", cy.mhat_d, hat, cy.hat_degree, cy.hat_degree, 2 - k),
            ("mcheck", cy.mcheck_d, check, cy.check_degree, cy.check_degree, 2 - k),
            ("cy", cy.cy_d, hat, cy.hat_degree, cy.check_degree, 1 - k),
        ):
            results.append(
                _family_degree_check(
                    P,
                    f"{name}-degree-k{k}",
                    op,
                    _sampled(input_tuples(P, [pool] * k, max_len), sample, seed),
                    degree_in,
                    degree_out,
                    shift,
                )
            )
    if k_max >= 2:
        run("cy2-relation", partial(cy2_relation_parts, P), [hat, hat])
        run("dhat2-homotopy", partial(homotopy_relation_parts, P), [hat, hat])
        results.append(_unit_check(P, max_len))
    return results


def cyclic_suite(presentation: DgaPresentation, max_len: int) -> List[CheckResult]:
    """Square-zero checks of the cyclic differentials."""
    P = presentation
    hat = [cy.CyclicElement([t]) for t in cy.hat_basis(P, max_len)]
    check = [cy.CyclicElement([t]) for t in cy.check_basis(P, max_len)]
    return [
        verify_identity(
            "mhat1-cyc-squared",
            lambda e: cy.mhat1_cyc(P, cy.mhat1_cyc(P, e)),
            None,
            hat,
        ),
        verify_identity(
            "mcheck1-cyc-squared",
            lambda e: cy.mcheck1_cyc(P, cy.mcheck1_cyc(P, e)),
            None,
            check,
        ),
    ]


def verify_presentation(
    presentation: DgaPresentation,
    k_max: int = 3,
    max_len: int = 3,
    sample: int = 0,
    seed: int = 0,
    console: Optional[ConsoleInterface] = None,
    banana_oracle: Optional[BananaOracle] = None,
    bimodule_checks: Optional[Suite] = None,
) -> Report:
    """Run every registered identity and collect the results in one report.

    ``bimodule_checks`` replaces ``bimodule_suite``, so a caller can reuse
    2-copy results it already holds.
    """
    P = presentation
    report = validate(P)
    report.command = "verify"
    if not report.passed:
        report.add(_skipped("verification", "presentation does not validate"))
        return report
    if console:
        console.info(f"Verifying {P.name}: k <= {k_max}, words <= {max_len}")
    base_words = [TensorPoly([w]) for w in enumerate_words(P.names, max_len)]
    report.add(
        verify_identity(
            "base-d-squared", lambda p: P.base_diff(P.base_diff(p)), None, base_words
        )
    )
    suite = bimodule_checks or bimodule_suite
    report.extend(suite(P, max_len, banana_oracle))
    report.add(verify_cy_self_duality(P, banana_oracle))
    report.extend(cyclic_suite(P, max_len))
    report.extend(verify_ainfty(P, k_max, max_len, sample, seed, console))
    if console:
        failures = report.failures()
        if failures:
            names = [c.check for c in failures]
            console.warning(f"{len(failures)} check(s) failed: {names}")
        else:
            console.info(f"All {len(report.checks)} checks passed")
    return report
