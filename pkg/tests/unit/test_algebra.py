"""
Unit tests for the Z2 tensor algebra and grading.
"""

import random
from fractions import Fraction

import pytest

from src.ce_calabi.domain.algebra import (
    EMPTY,
    Action,
    ChordKind,
    GradingContext,
    GradingConvention,
    MarkedWord,
    MixedChord,
    TensorPoly,
    Z2Chain,
    add,
    apply_derivation,
    degree,
    enumerate_words,
    mixed_action,
    mul,
    word,
    z2_collect,
)
from src.ce_calabi.domain.errors import (
    CopyMismatchError,
    GradingError,
    UnknownGeneratorError,
)


class TestZ2Chain:
    """Test cases for Z2 linear combinations."""

    def test_collect_cancels_pairs(self):
        """Test that terms occurring an even number of times vanish."""
        assert z2_collect(["a", "b", "a", "c", "c", "c"]) == frozenset({"b", "c"})

    def test_addition_is_symmetric_difference(self):
        """Test p + p == 0 and sum() over chains."""
        p = Z2Chain(["u", "v"])
        q = Z2Chain(["v", "w"])
        assert p + p == Z2Chain()
        assert p + q == Z2Chain(["u", "w"])
        assert sum([p, q, q]) == p

    def test_iteration_is_sorted(self):
        """Test deterministic iteration order."""
        assert list(Z2Chain(["c", "a", "b"])) == ["a", "b", "c"]


class TestTensorPoly:
    """Test cases for noncommutative polynomials."""

    def test_product_concatenates(self):
        """Test that products concatenate words and cancel mod 2."""
        p = TensorPoly.of(("a",), ("b",))
        q = TensorPoly.of(("c",))
        assert p * q == TensorPoly.of(("a", "c"), ("b", "c"))
        assert (p * p) == TensorPoly.of(("a", "a"), ("a", "b"), ("b", "a"), ("b", "b"))

    def test_unit(self):
        """Test the empty word is the unit."""
        p = TensorPoly.of(("a", "b"))
        assert TensorPoly.one() * p == p
        assert str(TensorPoly.one()) == "1"
        assert str(TensorPoly.zero()) == "0"

    @pytest.mark.parametrize("seed", range(5))
    def test_ring_axioms(self, seed):
        """Test associativity, distributivity and cancellation on random polynomials."""
        rng = random.Random(seed)

        def poly():
            words = list(enumerate_words(["a", "b"], 2))
            return TensorPoly(rng.sample(words, rng.randint(0, 4)))

        p, q, r = poly(), poly(), poly()
        assert add(p, q) == add(q, p)
        assert add(p, p) == TensorPoly.zero()
        assert mul(mul(p, q), r) == mul(p, mul(q, r))
        assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
        assert mul(add(p, q), r) == add(mul(p, r), mul(q, r))
        assert mul(TensorPoly.one(), p) == p == mul(p, TensorPoly.one())

    def test_derivation_leibniz(self):
        """Test d(ab) = d(a) b + a d(b)."""
        table = {
            "a": TensorPoly.of(("c",)),
            "b": TensorPoly.one(),
            "c": TensorPoly.zero(),
        }
        result = apply_derivation(table, TensorPoly.of(("a", "b")))
        assert result == TensorPoly.of(("c", "b"), ("a",))

    def test_derivation_unknown_letter(self):
        """Test that a letter without a table entry raises."""
        with pytest.raises(UnknownGeneratorError):
            apply_derivation({}, TensorPoly.of(("z",)))


class TestMarkedWord:
    """Test cases for basepoint-marked words."""

    def test_split(self):
        """Test left and right parts around the mark."""
        marked = MarkedWord(word("a", "b", "c"), 1)
        assert marked.left == ("a",)
        assert marked.right == ("b", "c")
        assert str(marked) == "a ^ b c"

    def test_mark_out_of_range(self):
        """Test that a mark outside the word is rejected."""
        with pytest.raises(ValueError):
            MarkedWord(("a",), 2)


class TestMixedChord:
    """Test cases for mixed chords of the 2-copy."""

    def test_names(self):
        """Test the printed copy labels."""
        assert str(MixedChord.plus("a")) == "a_10"
        assert str(MixedChord.minus("a")) == "a_01"
        assert str(MixedChord.x()) == "x_01"
        assert str(MixedChord.y(1, 2)) == "y_12"

    def test_invalid_copies(self):
        """Test that copy labels must increase."""
        with pytest.raises(CopyMismatchError):
            MixedChord.plus("a", 1, 1)

    def test_morse_without_base(self):
        """Test Morse chords carry no base and long chords need one."""
        with pytest.raises(CopyMismatchError):
            MixedChord("a", ChordKind.X, 0, 1)
        with pytest.raises(CopyMismatchError):
            MixedChord("", ChordKind.PLUS, 0, 1)

    def test_relabel(self):
        """Test relabelling keeps kind and base."""
        chord = MixedChord.minus("b").relabel(2, 3)
        assert chord == MixedChord.minus("b", 2, 3)


class TestGrading:
    """Test cases for the grading conventions."""

    @pytest.fixture
    def ctx(self) -> GradingContext:
        return GradingContext(1, {"a": 2, "b": 1})

    def test_algebra_degree(self, ctx):
        """Test |a| = 1 - cz(a)."""
        assert ctx.word_degree(("a", "b")) == -1

    def test_mixed_degrees(self, ctx):
        """Test each convention on each chord kind."""
        assert ctx.chord_degree(MixedChord.plus("a"), GradingConvention.C_PLUS) == -1
        assert ctx.chord_degree(MixedChord.plus("a"), GradingConvention.C_HAT_PLUS) == 0
        assert ctx.chord_degree(MixedChord.x(), GradingConvention.C_HAT_PLUS) == 2
        assert ctx.chord_degree(MixedChord.minus("a"), GradingConvention.C_MINUS) == 2
        assert ctx.chord_degree(MixedChord.x(), GradingConvention.C_MINUS) == 1
        assert ctx.chord_degree(MixedChord.y(), GradingConvention.C_MINUS) == 0

    def test_ungraded_combinations(self, ctx):
        """Test that chords outside a convention raise."""
        with pytest.raises(GradingError):
            ctx.chord_degree(MixedChord.y(), GradingConvention.C_HAT_PLUS)
        with pytest.raises(GradingError):
            degree([MixedChord.x()], ctx, GradingConvention.ALGEBRA)

    def test_shift(self, ctx):
        """Test that a shift adds to the degree."""
        letters = [MixedChord.minus("b"), "a"]
        assert degree(letters, ctx, GradingConvention.C_MINUS, shift=1) == 1


class TestAction:
    """Test cases for exact actions."""

    def test_morse_chords(self):
        """Test x sits just above zero and y just below."""
        x = mixed_action(MixedChord.x(), {})
        y = mixed_action(MixedChord.y(), {})
        assert y < Action(Fraction(0)) < x

    def test_long_chords(self):
        """Test long chords carry plus or minus the length."""
        lengths = {"a": Fraction(3, 2)}
        assert mixed_action(MixedChord.plus("a"), lengths) == Action(Fraction(3, 2))
        assert mixed_action(MixedChord.minus("a"), lengths) == Action(Fraction(-3, 2))
        assert mixed_action(MixedChord.plus("b"), lengths) is None


class TestEnumerateWords:
    """Test cases for word enumeration."""

    def test_counts(self):
        """Test 1 + 2 + 4 words up to length two over two letters."""
        words = list(enumerate_words(["a", "b"], 2))
        assert len(words) == 7
        assert words[0] == EMPTY
        assert words[-1] == ("b", "b")
