"""
Unit tests for combinatorial disc counts.
"""

import pytest

from src.ce_calabi.domain.algebra import MixedChord
from src.ce_calabi.services.oracle import (
    ANY,
    MARK,
    bananas_b1_long,
    costrips_b1,
    morse_banana_terms,
    morse_y_strip_terms,
    multi_pattern_count,
    pointed_terms,
    strips_D1,
)


class TestStrips:
    """Test cases for strips and costrips."""

    def test_strips_of_trefoil(self, trefoil):
        """Test one strip per letter occurrence; the constant term gives none."""
        strips = strips_D1(trefoil, "a1")

        assert len(strips) == 5
        assert ((), "b1", ("b2", "b3")) in strips
        assert (("b1",), "b2", ("b3",)) in strips
        assert (("b1", "b2"), "b3", ()) in strips

    def test_costrips_of_trefoil(self, trefoil):
        """Test costrips list the monomials containing the chord."""
        costrips = costrips_b1(trefoil, "b2")

        assert sorted(costrips) == [(("b1",), "a1", ("b3",)), (("b3",), "a2", ("b1",))]
        assert costrips_b1(trefoil, "a1") == []

    def test_bananas_are_costrips(self, trefoil, unknot):
        """Test long bananas coincide with costrips."""
        for presentation in (trefoil, unknot):
            for name in presentation.names:
                expected = costrips_b1(presentation, name)
                assert bananas_b1_long(presentation, name) == expected

    @pytest.mark.parametrize("seed", range(100))
    def test_costrips_agree_with_strips(self, random_presentation, seed):
        """Test costrips, bananas, transposed strips and patterns coincide."""
        presentation = random_presentation(seed, tier=2)
        names = presentation.names

        for gamma in names:
            from_strips = sorted(
                (u, beta, v)
                for beta in names
                for u, letter, v in strips_D1(presentation, beta)
                if letter == gamma
            )
            from_patterns = sorted(
                (term.words[0], beta, term.words[1])
                for beta in names
                for term in multi_pattern_count(presentation, beta, [gamma])
            )
            costrips = sorted(costrips_b1(presentation, gamma))

            assert costrips == from_strips == from_patterns
            assert sorted(bananas_b1_long(presentation, gamma)) == costrips


class TestMorseTerms:
    """Test cases for the discs through x and y."""

    def test_x_bananas(self):
        """Test gamma . x and x . gamma."""
        x = MixedChord.x()
        assert morse_banana_terms("a") == ((("a",), x, ()), ((), x, ("a",)))

    def test_y_strips(self):
        """Test gamma . gamma_01 and gamma_01 . gamma on given copies."""
        chord = MixedChord.minus("a", 1, 2)
        expected = ((("a",), chord, ()), ((), chord, ("a",)))
        assert morse_y_strip_terms("a", (1, 2)) == expected


class TestPatternCount:
    """Test cases for order-preserving pattern embeddings."""

    def test_any(self, trefoil):
        """Test b1 followed by any letter in d(a1)."""
        hits = multi_pattern_count(trefoil, "a1", ["b1", ANY])

        assert len(hits) == 2
        assert {hit.matched for hit in hits} == {("b1", "b2"), ("b1", "b3")}
        for hit in hits:
            assert len(hit.words) == 3

    def test_words_between_matches(self, trefoil):
        """Test the complementary subwords of a match."""
        (hit,) = multi_pattern_count(trefoil, "a1", ["b1", "b3"])
        assert hit.words == ((), ("b2",), ())

    def test_pointed(self, unknot):
        """Test the mark of the unknot."""
        (hit,) = multi_pattern_count(unknot, "a", [MARK], use_point=True)
        assert hit.words == ((), ())
        assert pointed_terms(unknot, "a") == [((), ())]

    def test_mark_rules(self, unknot):
        """Test that a pointed pattern needs exactly one mark."""
        with pytest.raises(ValueError):
            multi_pattern_count(unknot, "a", [MARK])
        with pytest.raises(ValueError):
            multi_pattern_count(unknot, "a", [ANY], use_point=True)
