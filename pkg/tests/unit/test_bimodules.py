"""
Unit tests for the 2-copy bimodules and the maps between them.
"""

import pytest

from src.ce_calabi.domain.algebra import MixedChord, TensorPoly
from src.ce_calabi.domain.errors import ChainMapError, CopyMismatchError
from src.ce_calabi.domain.models import CheckStatus
from src.ce_calabi.infrastructure.parser import parse_presentation
from src.ce_calabi.services import bimodules as bm
from src.ce_calabi.services.verification import (
    bimodule_suite,
    semifree_check,
    verify_cy_self_duality,
)

A10 = MixedChord.plus("a")
A01 = MixedChord.minus("a")


def element(*terms):
    return bm.BimoduleElement(terms)


class TestDifferentials:
    """Test cases for the differentials of Ĉ₊ and Č₋."""

    def test_unknot_mhat1(self, unknot):
        """Test the x bananas of the unknot chord."""
        result = bm.mhat1(unknot, bm.BimoduleElement.generator(A10))
        assert result == element((("a",), bm.X01, ()), ((), bm.X01, ("a",)))
        assert not bm.mhat1(unknot, bm.BimoduleElement.generator(bm.X01))

    def test_unknot_mcheck1(self, unknot):
        """Test the y strips of the unknot."""
        result = bm.mcheck1(unknot, bm.BimoduleElement.generator(bm.Y01))
        assert result == element((("a",), A01, ()), ((), A01, ("a",)))

    def test_trefoil_mhat1_strips(self, trefoil):
        """Test strips of a1 place the prefix left and the suffix right."""
        result = bm.mhat1(trefoil, bm.BimoduleElement.generator(MixedChord.plus("a1")))
        assert (("b1",), MixedChord.plus("b2"), ("b3",)) in result
        assert ((), MixedChord.plus("b1"), ()) in result

    def test_trefoil_mcheck1_costrips(self, trefoil):
        """Test costrips of b2 swap the outer words."""
        generator = bm.BimoduleElement.generator(MixedChord.minus("b2"))
        result = bm.mcheck1(trefoil, generator)
        assert result == element(
            (("b3",), MixedChord.minus("a1"), ("b1",)),
            (("b1",), MixedChord.minus("a2"), ("b3",)),
        )

    def test_wrong_generator(self, unknot):
        """Test that a Č₋ generator is rejected by mhat1."""
        with pytest.raises(CopyMismatchError):
            bm.mhat1(unknot, bm.BimoduleElement.generator(bm.Y01))

    @pytest.mark.parametrize("seed", range(6))
    def test_squares_vanish(self, random_presentation, seed):
        """Test mhat1², mcheck1² and the RFC square on random presentations."""
        presentation = random_presentation(seed, tier=2)
        checks = {c.check: c for c in bimodule_suite(presentation, max_len=2)}

        for name in ("mhat1-squared", "mcheck1-squared", "rfc-squared"):
            assert checks[name].status == CheckStatus.PASS, checks[name].counterexample


class TestCyMap:
    """Test cases for the CY bimodule map."""

    def test_unknot(self, unknot):
        """Test CY(a_10) = y_01 and CY(x_01) = a_01."""
        assert bm.cy_bimodule(unknot, bm.BimoduleElement.generator(A10)) == element(
            ((), bm.Y01, ())
        )
        assert bm.cy_bimodule(unknot, bm.BimoduleElement.generator(bm.X01)) == element(
            ((), A01, ())
        )

    def test_trefoil_vanishes(self, trefoil):
        """Test CY = 0 without pointed discs in dimension one."""
        for g in bm.hat_generators(trefoil):
            assert not bm.cy_bimodule(trefoil, bm.BimoduleElement.generator(g))

    def test_pointed_trefoil(self, trefoil_pointed):
        """Test CY reads the pointed table on a1, a2 and x and vanishes on b1."""
        P = trefoil_pointed
        a1, a2 = MixedChord.minus("a1"), MixedChord.minus("a2")

        assert bm.cy_bimodule(
            P, bm.BimoduleElement.generator(MixedChord.plus("a1"))
        ) == element(((), bm.Y01, ()), (("b1",), bm.Y01, ("b2", "b3")))
        assert bm.cy_bimodule(
            P, bm.BimoduleElement.generator(MixedChord.plus("a2"))
        ) == element(((), bm.Y01, ()))
        assert bm.cy_bimodule(P, bm.BimoduleElement.generator(bm.X01)) == element(
            ((), a1, ()), (("b2", "b3"), a1, ("b1",)), ((), a2, ())
        )
        assert not bm.cy_bimodule(
            P, bm.BimoduleElement.generator(MixedChord.plus("b1"))
        )

    def test_pointed_trefoil_not_a_chain_map(self, trefoil_pointed):
        """Test the chain-map check fails on b1, whose x bananas map to CY(x)."""
        checks = {c.check: c for c in bimodule_suite(trefoil_pointed, max_len=1)}
        result = checks["cy-chain-map"]
        a1, a2 = MixedChord.minus("a1"), MixedChord.minus("a2")
        expected = [
            (("b1",), a1, ()),
            (("b1", "b2", "b3"), a1, ("b1",)),
            (("b1",), a2, ()),
            ((), a1, ("b1",)),
            (("b2", "b3"), a1, ("b1", "b1")),
            ((), a2, ("b1",)),
        ]

        assert result.status == CheckStatus.FAIL
        assert result.tested == 2
        assert result.counterexample["input"] == "b1_10"
        assert sorted(result.counterexample["lhs_terms"]) == sorted(
            bm.format_term(t) for t in expected
        )
        assert result.counterexample["rhs"] == "0"
        assert checks["mhat1-squared"].status == CheckStatus.PASS
        assert checks["mcheck1-squared"].status == CheckStatus.PASS

    def test_rigid_bananas(self, banana_presentation):
        """Test bananas only count when 2|gamma| = 2 - n."""
        assert bm.is_rigid_banana_degree(banana_presentation, "a")

    def test_fake_oracle(self, banana_presentation):
        """Test a supplied banana oracle is placed as right . beta_01 . left."""

        def oracle(presentation, generator):
            return [(("a",), "a", ())]

        result = bm.cy_bimodule(
            banana_presentation, bm.BimoduleElement.generator(A10), oracle
        )
        assert result == element(((), A01, ("a",)))

    def test_cone_requires_chain_map(self, unknot):
        """Test that the cone constructor rejects a non chain map."""
        generator = bm.BimoduleElement.generator(A10)
        with pytest.raises(ChainMapError):
            bm.cone(
                lambda e: bm.BimoduleElement.generator(bm.Y01) if e else e,
                lambda e: bm.mhat1(unknot, e),
                lambda e: bm.mcheck1(unknot, e),
                [generator],
            )

    def test_cy_cone(self, unknot):
        """Test Cone(CY) squares to zero on the unknot."""
        cone = bm.cy_cone(unknot, max_len=2)
        start = (bm.BimoduleElement.generator(A10), bm.BimoduleElement())

        first = cone.differential(start)
        assert first == (
            element((("a",), bm.X01, ()), ((), bm.X01, ("a",))),
            element(((), bm.Y01, ())),
        )
        second = cone.differential(first)
        assert not second[0] and not second[1]

    def test_nu_is_identity_on_chords(self):
        """Test ν sends both summands to the same chords."""
        hat = element(((), A10, ()))
        check = element(((), A01, ("a",)))
        assert bm.nu_map((hat, check)) == hat + check


class TestChainMaps:
    """Test cases for F, h, G and H."""

    def test_F(self, unknot):
        """Test F kills long chords and strips x."""
        value = bm.F_map(unknot, element((("a",), bm.X01, ("a",)), ((), A10, ())))
        assert value == TensorPoly.of(("a", "a"))

    def test_h_contracts_cone(self, unknot):
        """Test d h + h d = id on a sample of Cone(F)."""
        for start in (
            (element((("a",), bm.X01, ()),), TensorPoly.zero()),
            (bm.BimoduleElement(), TensorPoly.of(("a",))),
        ):
            dh = bm.cone_f_diff(unknot, bm.h_homotopy(unknot, start))
            hd = bm.h_homotopy(unknot, bm.cone_f_diff(unknot, start))
            assert dh[0] + hd[0] == start[0]
            assert dh[1] + hd[1] == start[1]

    def test_G_inverse(self, trefoil):
        """Test G^-1 ∘ G = id on Č₋ terms."""
        sample = element(
            (("b1",), MixedChord.minus("a1"), ("b2", "b3")), (("b1",), bm.Y01, ())
        )
        assert bm.G_inv(bm.G_map(trefoil, sample)) == sample

    @pytest.mark.parametrize("seed", range(4))
    def test_suite_on_random(self, random_presentation, seed):
        """Test every bimodule check on random presentations."""
        presentation = random_presentation(seed, tier=2)
        failures = [c for c in bimodule_suite(presentation, max_len=2) if not c.passed]
        assert failures == []

    @pytest.mark.slow
    @pytest.mark.parametrize("fixture", ["unknot", "trefoil"])
    def test_suite_at_length_four(self, request, fixture):
        """Test every bimodule check on the shipped knots with words up to length 4."""
        presentation = request.getfixturevalue(fixture)
        failures = [c for c in bimodule_suite(presentation, max_len=4) if not c.passed]
        assert failures == []


class TestSelfDuality:
    """Test cases for G^-1 ∘ CY^! ∘ H = CY."""

    def test_unknot(self, unknot):
        """Test the pointed parts agree on the unknot."""
        result = verify_cy_self_duality(unknot)
        assert result.status == CheckStatus.PASS
        assert result.detail == "x_01: pointed; a_10: pointed"

    def test_pointed_trefoil(self, trefoil_pointed):
        """Test the pointed table is self-dual, with words on both sides."""
        result = verify_cy_self_duality(trefoil_pointed)
        assert result.status == CheckStatus.PASS
        assert result.tested == 6

    def test_rigid_bananas(self, banana_presentation):
        """Test the banana part is exercised and agrees with costrips."""
        result = verify_cy_self_duality(banana_presentation)
        assert result.status == CheckStatus.PASS
        assert "a_10: pointed+banana" in result.detail

    def test_asymmetric_oracle_fails(self, banana_presentation):
        """Test a banana count that is not self-dual is caught."""

        def oracle(presentation, generator):
            return [(("a",), "a", ())]

        result = verify_cy_self_duality(banana_presentation, oracle)
        assert result.status == CheckStatus.FAIL
        assert result.counterexample == {
            "generator": "a_10",
            "dual": "a a_01",
            "cy": "a_01 a",
        }


class TestSemifree:
    """Test cases for the semifree filtration of Ĉ₊."""

    def test_trefoil_order(self, trefoil):
        """Test x first, then the closed chords, then a1 and a2."""
        order = [str(g) for g in bm.semifree_order(trefoil)]
        assert order[0] == "x_01"
        assert order.index("a1_10") > order.index("b3_10")
        assert semifree_check(trefoil).status == CheckStatus.PASS

    def test_by_action(self):
        """Test the order follows action when every length is known."""
        presentation = parse_presentation(
            "legendrian v1\ndim 1\ngen a cz 2 len 2\ngen b cz 1 len 1\nd a = b\n"
        )
        order = bm.semifree_order(presentation)
        assert order == [bm.X01, MixedChord.plus("b"), MixedChord.plus("a")]
