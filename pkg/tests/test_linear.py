import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from postlie.linear import (
    LinComb,
    TensorPair,
    TensorWord,
    bilinear,
    concat,
    coproduct,
    counit,
    iterated_reduced,
    lincomb_json,
    lincomb_text,
    reduced_coproduct,
    unshuffle,
)


def W(s):
    return TensorWord(tuple(s))


UNIT = W("")


class TestLinComb:
    def test_cancellation(self):
        assert LinComb.of("x", 2) + LinComb.of("x", -2) == LinComb()
        assert not (LinComb.of("x", 2) + LinComb.of("x", -2))

    def test_zero_annihilates(self):
        x = LinComb.of("x") + LinComb.of("y")
        assert x.scale(0) == LinComb()

    def test_exact_rational_addition(self):
        got = LinComb.of("x", Fraction(1, 2)) + LinComb.of("x", Fraction(1, 3))
        assert got == LinComb.of("x", Fraction(5, 6))

    def test_no_stored_zeros(self):
        x = LinComb((("a", 1), ("b", 0), ("a", -1)))
        assert len(x) == 0

    @given(
        st.dictionaries(st.sampled_from("abcd"), st.fractions(), max_size=4),
        st.dictionaries(st.sampled_from("abcd"), st.fractions(), max_size=4),
        st.fractions(),
    )
    def test_module_laws(self, a, b, c):
        x, y = LinComb(a), LinComb(b)
        assert x + y == y + x
        assert (x + y).scale(c) == x.scale(c) + y.scale(c)
        assert x - x == LinComb()

    def test_text_zero_and_order(self):
        assert lincomb_text(LinComb()) == "0"
        x = LinComb.of("b", -1) + LinComb.of("a", Fraction(5, 6))
        assert lincomb_text(x) == "+5/6 a -1 b"

    def test_json_serialization(self):
        x = LinComb.of("a", Fraction(5, 6)) + LinComb.of("b", -2)
        assert lincomb_json(x) == [
            {"coefficient": "5/6", "term": "a"},
            {"coefficient": "-2", "term": "b"},
        ]


class TestBilinear:
    def test_scalars_multiply(self):
        graft = bilinear(lambda s, t: LinComb.of(s + t))
        got = graft(LinComb.of("a", 3), LinComb.of("b", Fraction(1, 2)))
        assert got == LinComb.of("ab", Fraction(3, 2))

    def test_zero_absorbs(self):
        f = bilinear(lambda s, t: LinComb.of(s + t))
        assert f(LinComb(), LinComb.of("b")) == LinComb()

    def test_distributivity(self):
        f = bilinear(lambda s, t: LinComb.of(s + t))
        got = f(LinComb.of("a") + LinComb.of("b"), LinComb.of("c"))
        assert got == LinComb.of("ac") + LinComb.of("bc")


class TestConcat:
    def test_unit(self):
        assert concat(UNIT, W("ab")) == W("ab")

    def test_definition(self):
        assert concat(W("ab"), W("c")) == W("abc")

    def test_length_additive(self):
        assert len(concat(W("ab"), W("cde")).letters) == 5


class TestUnshuffle:
    def test_unit_grouplike(self):
        assert unshuffle(UNIT) == LinComb.of(TensorPair(UNIT, UNIT))

    def test_letter_primitive(self):
        v = W("v")
        want = LinComb.of(TensorPair(UNIT, v)) + LinComb.of(TensorPair(v, UNIT))
        assert unshuffle(v) == want

    def test_two_letters_all_subsets(self):
        # All 4 position subsets of v1 v2, each subword in original order.
        w = W("xy")
        want = LinComb(
            [
                (TensorPair(UNIT, W("xy")), 1),
                (TensorPair(W("x"), W("y")), 1),
                (TensorPair(W("y"), W("x")), 1),
                (TensorPair(W("xy"), UNIT), 1),
            ]
        )
        assert unshuffle(w) == want

    def test_repeated_letters_get_multiplicities(self):
        got = unshuffle(W("aa"))
        assert got.coeff(TensorPair(W("a"), W("a"))) == 2

    def _words(self, max_len):
        for n in range(max_len + 1):
            for w in itertools.product("ab", repeat=n):
                yield W(w)

    def test_cocommutative(self):
        for w in self._words(6):
            d = unshuffle(w)
            assert d == d.map_terms(lambda p: p.swap())

    def test_coassociative(self):
        for w in self._words(6):
            left = LinComb()
            right = LinComb()
            for p, c in unshuffle(w).items():
                for q, cq in unshuffle(p.left).items():
                    left += LinComb.of((q.left, q.right, p.right), c * cq)
                for q, cq in unshuffle(p.right).items():
                    right += LinComb.of((p.left, q.left, q.right), c * cq)
            assert left == right

    def test_counit_law(self):
        for w in self._words(4):
            lhs = LinComb()
            rhs = LinComb()
            for p, c in unshuffle(w).items():
                if len(p.left.letters) == 0:
                    lhs += LinComb.of(p.right, c)
                if len(p.right.letters) == 0:
                    rhs += LinComb.of(p.left, c)
            assert lhs == LinComb.of(w)
            assert rhs == LinComb.of(w)


class TestCounit:
    def test_unit(self):
        assert counit(LinComb.of(UNIT)) == 1

    def test_nonempty_word(self):
        assert counit(LinComb.of(W("ab"))) == 0

    def test_projection(self):
        x = LinComb.of(UNIT, 3) + LinComb.of(W("ab"), 2)
        assert counit(x) == 3


class TestReducedCoproduct:
    def test_letter_killed(self):
        assert reduced_coproduct(LinComb.of(W("v"))) == LinComb()

    def test_unit_killed(self):
        assert reduced_coproduct(LinComb.of(UNIT)) == LinComb()

    def test_two_letters(self):
        got = reduced_coproduct(LinComb.of(W("xy")))
        want = LinComb.of(TensorPair(W("x"), W("y"))) + LinComb.of(
            TensorPair(W("y"), W("x"))
        )
        assert got == want

    def test_lands_in_augmentation_ideal(self):
        for w in (W("ab"), W("aab"), W("abab")):
            for p in reduced_coproduct(LinComb.of(w)):
                assert p.left.letters and p.right.letters


class TestIteratedReduced:
    def test_depth_zero_is_augmentation_projection(self):
        x = LinComb.of(UNIT, 5) + LinComb.of(W("ab"), 2)
        assert iterated_reduced(0, x) == LinComb.of((W("ab"),), 2)

    def test_symmetrization_of_distinct_letters(self):
        # Full symmetrization for words in distinct primitive letters.
        for n in range(2, 5):
            letters = "wxyz"[:n]
            w = W(letters)
            want = LinComb(
                (tuple(W(letters[i]) for i in perm), 1)
                for perm in itertools.permutations(range(n))
            )
            assert iterated_reduced(n - 1, LinComb.of(w)) == want

    def test_vanishing_at_word_length(self):
        for word in ("a", "ab", "aab", "abab"):
            n = len(word)
            for k in (n, n + 1):
                assert iterated_reduced(k, LinComb.of(W(word))) == LinComb()

    def test_rejects_negative_depth(self):
        with pytest.raises(ValueError):
            iterated_reduced(-1, LinComb.of(W("a")))


def test_coproduct_linear_extension():
    x = LinComb.of(W("a"), 2)
    got = coproduct(x)
    assert got.coeff(TensorPair(UNIT, W("a"))) == 2
