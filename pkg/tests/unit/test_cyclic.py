"""
Unit tests for the cyclic complexes and their A-infinity operations.
"""

import pytest

from src.ce_calabi.domain.algebra import MixedChord
from src.ce_calabi.domain.errors import ArityError, CopyMismatchError
from src.ce_calabi.services import cyclic as cy

A = "a"


def term(chord, *letters):
    return cy.CyclicElement.of(chord, *letters)


def a10(low=0, high=1):
    return MixedChord.plus(A, low, high)


def a01(low=0, high=1):
    return MixedChord.minus(A, low, high)


class TestDifferentials:
    """Test cases for the cyclic differentials."""

    def test_unknot_cancels(self, unknot):
        """Test both x terms of a power of a coincide and cancel."""
        for letters in ((), ("a",), ("a", "a")):
            assert not cy.mhat1_cyc(unknot, term(a10(), *letters))
            assert not cy.mcheck1_cyc(unknot, term(MixedChord.y(), *letters))

    def test_trefoil_mhat1(self, trefoil):
        """Test strips of a1 rotate the outer words behind the new chord."""
        result = cy.mhat1_cyc(trefoil, term(MixedChord.plus("a1")))
        expected = (
            term(MixedChord.plus("b1"))
            + term(MixedChord.plus("b3"))
            + term(MixedChord.plus("b1"), "b2", "b3")
            + term(MixedChord.plus("b2"), "b3", "b1")
            + term(MixedChord.plus("b3"), "b1", "b2")
        )
        assert result == expected

    def test_trefoil_mcheck1(self, trefoil):
        """Test costrips of b1 into both degree -1 chords."""
        result = cy.mcheck1_cyc(trefoil, term(MixedChord.minus("b1")))
        assert str(result) == "a1_01 + a1_01 b2 b3 + a2_01 + a2_01 b3 b2"

    def test_internal_differential(self, trefoil):
        """Test the pure word is differentiated in place."""
        result = cy.mcheck1_cyc(trefoil, term(MixedChord.minus("a1"), "a2"))
        assert (MixedChord.minus("a1"), ()) in result
        assert (MixedChord.minus("a1"), ("b3", "b2", "b1")) in result
        assert len(result) == 4

    def test_x_terms_without_cancellation(self, trefoil):
        """Test gamma w and w gamma both appear when they differ."""
        result = cy.mhat1_cyc(trefoil, term(MixedChord.plus("b1"), "b2"))
        x = MixedChord.x()
        assert result == term(x, "b1", "b2") + term(x, "b2", "b1")


class TestCyFamily:
    """Test cases for CY_d and f_j."""

    def test_unknot_cy1(self, unknot):
        """Test CY_1(a) = y and CY_1(x) = a_01, keeping the word."""
        assert cy.cy_d(unknot, [term(a10(), "a")]) == term(MixedChord.y(), "a")
        assert cy.cy_d(unknot, [term(MixedChord.x(), "a")]) == term(a01(), "a")

    def test_unknot_cy2_vanishes(self, unknot):
        """Test CY_2 = 0 on every pair of unknot generators."""
        for first in (a10(1, 2), MixedChord.x(1, 2)):
            for second in (a10(), MixedChord.x()):
                assert not cy.cy_d(unknot, [term(first), term(second, "a")])

    def test_trefoil_cy_vanishes(self, trefoil):
        """Test CY_1 = 0 without pointed discs."""
        for chord, w in cy.hat_basis(trefoil, 1):
            assert not cy.cy_d(trefoil, [term(chord, *w)])

    def test_f_with_y_vanishes(self, unknot):
        """Test f_2 is zero whenever its module input is y."""
        assert not cy.f_j(unknot, [term(MixedChord.y(1, 2)), term(a10())])


class TestProducts:
    """Test cases for mhat_d, mcheck_d and mu_plus."""

    @pytest.mark.parametrize(
        "left, right, expected",
        [
            (a10(1, 2), a10(), a10(0, 2)),
            (MixedChord.x(1, 2), a10(), MixedChord.x(0, 2)),
            (a10(1, 2), MixedChord.x(), MixedChord.x(0, 2)),
            (MixedChord.x(1, 2), MixedChord.x(), None),
        ],
    )
    def test_unknot_mhat2(self, unknot, left, right, expected):
        """Test a_10 acts as a unit and x squares to zero."""
        result = cy.mhat_d(unknot, [term(left), term(right, "a")])
        if expected is None:
            assert not result
        else:
            assert result == term(expected, "a")

    def test_unknot_higher_products_vanish(self, unknot):
        """Test mhat_3 and mcheck_3 vanish on the unknot."""
        hats = [term(a10(2, 3)), term(MixedChord.x(1, 2)), term(a10(), "a")]
        checks = [term(a01(2, 3)), term(a01(1, 2)), term(a01())]
        assert not cy.mhat_d(unknot, hats)
        assert not cy.mcheck_d(unknot, checks)

    def test_mcheck2_unit(self, trefoil):
        """Test y is a two-sided unit for mcheck_2."""
        b = MixedChord.minus("b1")
        y01, y12 = MixedChord.y(), MixedChord.y(1, 2)
        left = cy.mcheck_d(trefoil, [term(y12, "a1"), term(b, "b2")])
        right = cy.mcheck_d(trefoil, [term(b.relabel(1, 2), "a1"), term(y01, "b2")])
        assert left == term(b.relabel(0, 2), "b2", "a1")
        assert right == term(b.relabel(0, 2), "b2", "a1")

    def test_mcheck3_with_y_vanishes(self, trefoil):
        """Test y kills products of arity three."""
        inputs = [
            term(MixedChord.minus("b3", 2, 3)),
            term(MixedChord.y(1, 2)),
            term(MixedChord.minus("b1")),
        ]
        assert not cy.mcheck_d(trefoil, inputs)

    def test_trefoil_mcheck2(self, trefoil):
        """Test substitution of b1 then b2 into d(a1)."""
        result = cy.mcheck_d(
            trefoil, [term(MixedChord.minus("b2", 1, 2)), term(MixedChord.minus("b1"))]
        )
        assert result == term(MixedChord.minus("a1", 0, 2), "b3")

    def test_trefoil_mu_plus(self, trefoil):
        """Test D_2 reads the remaining letters around the new chord."""
        result = cy.mu_plus(
            trefoil,
            [term(MixedChord.minus("b1", 1, 2)), term(MixedChord.plus("a1"))],
        )
        assert result == term(MixedChord.plus("b2", 0, 2), "b3") + term(
            MixedChord.plus("b3", 0, 2), "b2"
        )

    def test_mu_plus_x_term(self, unknot):
        """Test b_2^x when the module chord matches the algebra chord."""
        result = cy.mu_plus(unknot, [term(a01(1, 2), "a"), term(a10())])
        assert result == term(MixedChord.x(0, 2), "a")


class TestAlternativeProduct:
    """Test cases for dhat_2 and its homotopy."""

    def test_agrees_on_unknot(self, unknot):
        """Test dhat_2 equals mhat_2 on the unknot and h_2 vanishes."""
        inputs = [term(MixedChord.x(1, 2)), term(a10(), "a")]
        assert cy.dhat2_alt(unknot, inputs) == cy.mhat_d(unknot, inputs)
        assert not cy.h2_homotopy(unknot, inputs)

    def test_arity(self, unknot):
        """Test dhat_2 and h_2 take exactly two inputs."""
        with pytest.raises(ArityError):
            cy.h2_homotopy(unknot, [term(a10())])
        with pytest.raises(ArityError):
            cy.dhat2_alt(unknot, [])


class TestComposability:
    """Test cases for copy bookkeeping."""

    def test_copies_must_chain(self, unknot):
        """Test inputs on the same pair of copies are rejected."""
        with pytest.raises(CopyMismatchError):
            cy.mhat_d(unknot, [term(a10()), term(a10())])

    def test_empty_input(self, unknot):
        """Test operations refuse an empty input list."""
        with pytest.raises(ArityError):
            cy.mcheck_d(unknot, [])

    def test_relabel_chain(self):
        """Test relabelling puts e_1 on (0, 1) and e_d on (d-1, d)."""
        terms = ((a10(5, 6), ()), (MixedChord.x(3, 4), ("a",)))
        relabelled = cy.relabel_chain(terms)
        assert relabelled == ((a10(1, 2), ()), (MixedChord.x(0, 1), ("a",)))
        assert cy.chain_copies(relabelled) == (0, 2)

    def test_compositions(self):
        """Test compositions of 3 into two parts."""
        assert list(cy.compositions(3, 2)) == [(1, 2), (2, 1)]
        assert list(cy.compositions(2, 3)) == []

    def test_degrees(self, unknot):
        """Test the unknot degrees of the cyclic generators."""
        assert cy.hat_degree(unknot, (a10(), ("a",))) == -1
        assert cy.hat_degree(unknot, (MixedChord.x(), ())) == 2
        assert cy.check_degree(unknot, (a01(), ())) == 2
        assert cy.check_degree(unknot, (MixedChord.y(), ("a", "a"))) == -2
