import itertools
import random

import pytest

from postlie.linear import LinComb, ParseError
from postlie.trees import (
    Forest,
    Leaf,
    PRTree,
    Vee,
    butcher,
    contract_rightmost,
    degree,
    enumerate_forests,
    enumerate_prtrees,
    enumerate_trees,
    expand_leftmost,
    leaf,
    left_graft_sum,
    parse_forest,
    parse_prtree,
    parse_tree,
    random_tree,
    vee,
)

DOT = ("•",)

CATALAN = [1, 1, 2, 5, 14, 42, 132]


class TestVee:
    def test_definition(self):
        assert vee(leaf("a"), leaf("b")) == Vee(Leaf("a"), Leaf("b"))

    def test_left_comb(self):
        t = vee(vee(leaf("a"), leaf("b")), leaf("c"))
        assert str(t) == "((a^b)^c)"

    def test_right_comb(self):
        t = vee(leaf("c"), vee(leaf("a"), leaf("b")))
        assert str(t) == "(c^(a^b))"

    def test_degree_additive(self):
        a = parse_tree("((a^b)^c)")
        b = parse_tree("(a^b)")
        assert degree(vee(a, b)) == degree(a) + degree(b)

    def test_injective_on_pairs(self):
        trees = enumerate_trees(2, ("a", "b"))
        seen = {}
        for t1, t2 in itertools.product(trees, trees):
            assert (t1, t2) not in seen
            seen[(t1, t2)] = vee(t1, t2)
        assert len(set(seen.values())) == len(seen)


class TestEnumeration:
    def test_single_leaf(self):
        assert enumerate_trees(1, DOT) == (Leaf("•"),)

    def test_three_leaves_two_shapes(self):
        assert len(enumerate_trees(3, DOT)) == 2

    def test_five_leaves_catalan(self):
        assert len(enumerate_trees(5, DOT)) == 14

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            enumerate_trees(0, DOT)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_decorated_counts(self, n):
        alphabet = ("a", "b")
        assert len(enumerate_trees(n, alphabet)) == CATALAN[n - 1] * 2**n

    def test_forest_counts_are_catalan(self):
        for d in range(5):
            assert len(enumerate_forests(d, DOT)) == CATALAN[d]

    def test_prtree_counts_are_catalan(self):
        for n in range(1, 8):
            assert len(enumerate_prtrees(n)) == CATALAN[n - 1]


class TestContraction:
    def test_single_leaf(self):
        assert contract_rightmost(Leaf("•")) == PRTree(())

    def test_single_graft_gives_chain(self):
        got = contract_rightmost(parse_tree("(•^•)"))
        assert got == PRTree((PRTree(()),))

    def test_magmatic_morphism_to_degree_six(self):
        for total in range(2, 7):
            for d1 in range(1, total):
                for t1 in enumerate_trees(d1, DOT):
                    for t2 in enumerate_trees(total - d1, DOT):
                        assert contract_rightmost(Vee(t1, t2)) == butcher(
                            contract_rightmost(t1), contract_rightmost(t2)
                        )

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_degreewise_bijection(self, n):
        images = [contract_rightmost(t) for t in enumerate_trees(n, DOT)]
        assert len(set(images)) == len(images) == CATALAN[n - 1]
        assert set(images) == set(enumerate_prtrees(n))

    def test_round_trip_both_ways_degree_six(self):
        for t in enumerate_trees(6, DOT):
            assert expand_leftmost(contract_rightmost(t)) == t
        for tau in enumerate_prtrees(6):
            assert contract_rightmost(expand_leftmost(tau)) == tau

    def test_expand_smallest_cases(self):
        assert expand_leftmost(PRTree(())) == Leaf("•")
        assert expand_leftmost(PRTree((PRTree(()),))) == parse_tree("(•^•)")


class TestButcher:
    def test_smallest(self):
        dot = PRTree(())
        assert butcher(dot, dot) == PRTree((dot,))

    def test_morphism_instance(self):
        t1 = parse_tree("(a^b)")
        t2 = parse_tree("c")
        assert contract_rightmost(Vee(t1, t2)) == butcher(
            contract_rightmost(t1), contract_rightmost(t2)
        )

    def test_seven_node_decomposition(self):
        dot = PRTree(())
        bp = butcher
        got = bp(bp(dot, dot), bp(bp(dot, bp(dot, bp(dot, dot))), dot))
        assert got == parse_prtree("•(•(•) •(• • •))")


class TestLeftGraftSum:
    def test_single_node(self):
        dot = PRTree(())
        assert left_graft_sum(dot, dot) == LinComb.of(PRTree((dot,)))

    def test_single_node_matches_butcher(self):
        dot = PRTree(())
        for tau in enumerate_prtrees(3):
            assert left_graft_sum(dot, tau) == LinComb.of(butcher(tau, dot))

    def test_one_term_per_node(self):
        for n in range(1, 5):
            for tau in enumerate_prtrees(n):
                got = left_graft_sum(tau, PRTree(()))
                assert sum(c for _, c in got.items()) == tau.nodes

    def test_chain_gets_two_terms(self):
        chain = parse_prtree("•(•)")
        got = left_graft_sum(chain, PRTree(()))
        assert got == LinComb.of(parse_prtree("•(• •)")) + LinComb.of(
            parse_prtree("•(•(•))")
        )


class TestParsing:
    @pytest.mark.parametrize(
        "text",
        ["a", "(a^b)", "((a^b)^(c^d))", "(•^(•^•))"],
    )
    def test_tree_round_trip(self, text):
        assert str(parse_tree(text)) == text

    @pytest.mark.parametrize("text", ["1", "[a]", "[a (b^c) d]"])
    def test_forest_round_trip(self, text):
        assert str(parse_forest(text)) == text

    @pytest.mark.parametrize("text", ["•", "•(•)", "•(• •(•))", "•(•(•) •(• • •))"])
    def test_prtree_round_trip(self, text):
        assert str(parse_prtree(text)) == text

    def test_ascii_star_accepted_for_node(self):
        assert parse_prtree("*(* *)") == parse_prtree("•(• •)")

    def test_random_round_trips(self):
        rng = random.Random(7)
        for _ in range(50):
            t = random_tree(rng, rng.randint(1, 6), ("a", "b", "cc"))
            assert parse_tree(str(t)) == t

    @pytest.mark.parametrize("text", ["(a^b", "[a", "(a b)", "", "[a]]", "•()"])
    def test_malformed_rejected(self, text):
        with pytest.raises(ParseError):
            if text.startswith("[") or text == "":
                parse_forest(text)
            elif text.startswith("•"):
                parse_prtree(text)
            else:
                parse_tree(text)

    def test_unknown_symbol_rejected_with_alphabet(self):
        with pytest.raises(ParseError):
            parse_forest("[a z]", alphabet=("a", "b"))

    def test_forest_degree_and_length(self):
        f = parse_forest("[a (b^c) d]")
        assert f.length == 3
        assert f.degree == 4
