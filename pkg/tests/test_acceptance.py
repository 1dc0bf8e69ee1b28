"""Acceptance suite.

One test per criterion; each prints a PASS line once its assertions went
through, so running ``pytest tests/test_acceptance.py -s`` gives one
status line per criterion.  Every comparison is exact.
"""

import itertools
import math
import random

from postlie import forests as forest_ops
from postlie import words as word_ops
from postlie.forests import (
    LEVELLED_LEAF,
    consecutive_right_grafts,
    forest_from_permutation,
    graft_forest,
    grafting_multiset,
    levelled_from_word,
    parse_levelled,
    star,
    star_by_multiset,
    star_by_symmetric_group,
)
from postlie.linear import LinComb, iterated_reduced
from postlie.perms import Permutation, sentence_to_perm
from postlie.trees import (
    Forest,
    Leaf,
    Vee,
    butcher,
    contract_rightmost,
    enumerate_forests,
    enumerate_prtrees,
    enumerate_trees,
    expand_leftmost,
    parse_forest,
    random_forest,
    random_tree,
)
from postlie.verify import (
    check_left_postlie,
    check_right_postlie,
    convolution_inverse,
    enumerate_sentences,
    forest_counts,
    hopf_relation_suite,
    opposite,
    pbw_dims,
    primitive_kernel,
    primitive_postlie_constants,
    prtree_left_graft_constants,
    symmetrization_check,
    tree_span_constants,
    trees_engine,
    words_engine,
)
from postlie.words import Sentence, parse_sentence, random_sentence

DOT = ("•",)


def F(text):
    return parse_forest(text)


def lc(*texts):
    out = LinComb()
    for t in texts:
        out += LinComb.of(F(t))
    return out


def _report(number, message):
    print(f"criterion {number}: PASS  {message}")


def test_criterion_1_worked_examples():
    # The four product expansions, with the corrected middle term in the
    # third one.
    assert star(F("[v1 v2]"), F("[v3]")) == lc("[(v1^v3) v2]", "[v1 (v2^v3)]")
    assert star(F("[v1]"), F("[v2 v3]")) == LinComb.of(
        F("[((v1^v2)^v3)]")
    ) - LinComb.of(F("[(v1^(v2^v3))]"))
    assert star(F("[v1 v2 v3]"), F("[v4]")) == lc(
        "[(v1^v4) v2 v3]", "[v1 (v2^v4) v3]", "[v1 v2 (v3^v4)]"
    )
    a, b, c, d = (Leaf(x) for x in "abcd")
    six_terms = (
        LinComb.of(Forest((Vee(Vee(Vee(a, b), c), d),)))
        - LinComb.of(Forest((Vee(Vee(a, Vee(b, c)), d),)))
        - LinComb.of(Forest((Vee(Vee(a, Vee(b, d)), c),)))
        + LinComb.of(Forest((Vee(a, Vee(Vee(b, d), c)),)))
        - LinComb.of(Forest((Vee(Vee(a, b), Vee(c, d)),)))
        + LinComb.of(Forest((Vee(a, Vee(b, Vee(c, d))),)))
    )
    assert star(F("[a]"), F("[b c d]")) == six_terms

    # Grafting multisets of two and three trees.
    assert dict(grafting_multiset(F("[t1 t2]"))) == {
        F("[t1 t2]"): 1,
        F("[(t1^t2)]"): 1,
    }
    assert dict(grafting_multiset(F("[t1 t2 t3]"))) == {
        F("[t1 t2 t3]"): 1,
        F("[(t1^t2) t3]"): 1,
        F("[t1 (t2^t3)]"): 1,
        F("[(t1^t3) t2]"): 1,
        F("[((t1^t3)^t2)]"): 1,
        F("[(t1^(t2^t3))]"): 1,
    }

    # The levelled tree of the word 1 2 4 5 3.
    assert (
        str(levelled_from_word((1, 2, 4, 5, 3)))
        == "N1(|,N2(|,N3(N4(|,N5(|,|)),|)))"
    )

    # The four values of the forest-along-levelled-tree graft.
    T1, T2, T3 = F("[t1]").trees[0], F("[(x^y)]").trees[0], F("[t3]").trees[0]
    lev = parse_levelled
    assert graft_forest(Forest((T1,)), LEVELLED_LEAF) == T1
    assert graft_forest(Forest((T1, T2)), lev("N2(|,|)")) == Vee(T1, T2)
    assert graft_forest(Forest((T1, T2, T3)), lev("N2(|,N3(|,|))")) == Vee(
        T1, Vee(T2, T3)
    )
    assert graft_forest(Forest((T1, T2, T3)), lev("N2(N3(|,|),|)")) == Vee(
        Vee(T1, T3), T2
    )

    # The permutation described by the cycle word 1 2 5 6.
    sigma = sentence_to_perm([(1, 2, 5, 6)])
    assert [sigma(i) for i in range(1, 7)] == [2, 5, 3, 4, 6, 1]

    # The worked consecutive-graft example with leaves a..j.
    f = F("[(a^b) (c^(d^e))]")
    s = F("[((f^g)^h) (i^j)]")
    assert consecutive_right_grafts(f, s) == lc(
        "[(((a^b)^((f^g)^h))^(i^j)) (c^(d^e))]",
        "[((a^b)^((f^g)^h)) ((c^(d^e))^(i^j))]",
        "[((a^b)^(i^j)) ((c^(d^e))^((f^g)^h))]",
        "[(a^b) (((c^(d^e))^((f^g)^h))^(i^j))]",
    )
    _report(1, "all worked examples reproduce exactly")


def test_criterion_2_triple_product_agreement():
    checked = 0
    for total in range(2, 7):
        for df in range(1, total):
            for f in enumerate_forests(df, DOT):
                for g in enumerate_forests(total - df, DOT):
                    if f.length == 0 or g.length == 0 or g.length > 4:
                        continue
                    expected = star(f, g)
                    assert star_by_multiset(f, g) == expected
                    assert star_by_symmetric_group(f, g) == expected
                    checked += 1
    rng = random.Random(2024)
    randoms = 0
    while randoms < 500:
        total = rng.randint(2, 7)
        df = rng.randint(1, total - 1)
        f = random_forest(rng, df, ("a", "b"))
        g = random_forest(rng, total - df, ("a", "b"))
        expected = star(f, g)
        assert star_by_multiset(f, g) == expected
        assert star_by_symmetric_group(f, g) == expected
        randoms += 1
    _report(2, f"recursion = both closed formulas on {checked} exhaustive "
               f"and {randoms} random pairs")


def test_criterion_3_multiset_cardinality_and_surjection():
    rng = random.Random(5)
    for length in range(1, 7):
        forest = Forest(
            tuple(random_tree(rng, rng.randint(1, 2), ("a", "b")) for _ in range(length))
        )
        assert grafting_multiset(forest).total() == math.factorial(length)
    for n in range(1, 6):
        forest = Forest(tuple(Leaf("abcde"[i]) for i in range(n)))
        image = {}
        for images in itertools.permutations(range(1, n + 1)):
            out = forest_from_permutation(forest, Permutation(images))
            image[out] = image.get(out, 0) + 1
        assert image == dict(grafting_multiset(forest))
    # A decorated case where multiplicities exceed one.
    special = F("[(a^a) a a]")
    image = {}
    for images in itertools.permutations((1, 2, 3)):
        out = forest_from_permutation(special, Permutation(images))
        image[out] = image.get(out, 0) + 1
    assert image == dict(grafting_multiset(special))
    assert image[F("[((a^a)^a) a]")] == 2
    _report(3, "multiset cardinality l! and symmetric-group surjection hold")


def test_criterion_4_post_hopf_suites_budget_five():
    trees_report = hopf_relation_suite(trees_engine(DOT), 5)
    assert trees_report.ok, trees_report.pretty()
    words_report = hopf_relation_suite(words_engine(("a", "b")), 5)
    assert words_report.ok, words_report.pretty()
    names = {c.name for c in trees_report.checks}
    assert {"opposed-product-rule", "opposed-iterated-rule"} <= names
    _report(4, "Post-Hopf relation suites pass to degree 5 on trees and words")


def test_criterion_5_post_lie_axioms_and_transport():
    def concat_mul(x, y):
        out = LinComb()
        for u, cu in x.items():
            for v, cv in y.items():
                out += LinComb.of(u.concat(v), cu * cv)
        return out

    def bracket(x, y):
        return concat_mul(x, y) - concat_mul(y, x)

    def assoc(x, y, z):
        return star(star(x, y), z) - star(x, star(y, z))

    trees = [t for d in (1, 2, 3) for t in enumerate_trees(d, DOT)]
    for x, y, z in itertools.product(trees, repeat=3):
        fx, fy, fz = (LinComb.of(Forest((t,))) for t in (x, y, z))
        assert star(fx, bracket(fy, fz)) == assoc(fx, fy, fz) - assoc(fx, fz, fy)
        assert star(bracket(fx, fy), fz) == bracket(star(fx, fz), fy) + bracket(
            fx, star(fy, fz)
        )

    fixtures = [
        tree_span_constants(3),
        prtree_left_graft_constants(3),
        primitive_postlie_constants(4),
    ]
    for alg in fixtures:
        right = check_right_postlie(alg)
        assert right.ok == check_left_postlie(opposite(alg)).ok
        left = check_left_postlie(alg)
        assert left.ok == check_right_postlie(opposite(alg)).ok
        assert opposite(opposite(alg)) == alg
    _report(5, "Post-Lie axioms hold on tree triples; opposite transport "
               "holds on all fixtures")


def test_criterion_6_convolution_inverse():
    result = convolution_inverse(4)
    assert result.report.ok, result.report.pretty()
    _report(6, "convolution inverse built through degree 4, residuals zero")


def test_criterion_7_desk_scale_cqmm():
    kernel = [primitive_kernel(n)[1] for n in (1, 2, 3, 4)]
    series = pbw_dims([1, 1, 2, 5], 4)
    assert kernel == [1, 1, 3, 8]
    assert series == [1, 1, 3, 8]
    assert forest_counts(4) == [1, 1, 2, 5, 14]
    _report(7, "primitive dimensions 1,1,3,8 from two oracles; forest "
               "counts 1,1,2,5,14")


def test_criterion_8_contraction_isomorphism():
    catalan = [1, 1, 2, 5, 14, 42]
    for total in range(2, 7):
        for d1 in range(1, total):
            for t1 in enumerate_trees(d1, DOT):
                for t2 in enumerate_trees(total - d1, DOT):
                    assert contract_rightmost(Vee(t1, t2)) == butcher(
                        contract_rightmost(t1), contract_rightmost(t2)
                    )
    for n in range(1, 7):
        trees = enumerate_trees(n, DOT)
        images = {contract_rightmost(t) for t in trees}
        assert len(trees) == catalan[n - 1]
        assert len(images) == len(trees)
        assert images == set(enumerate_prtrees(n))
        for t in trees:
            assert expand_leftmost(contract_rightmost(t)) == t
        for tau in enumerate_prtrees(n):
            assert contract_rightmost(expand_leftmost(tau)) == tau
    _report(8, "contraction is a magmatic isomorphism with Catalan counts "
               "through degree 6")


def test_criterion_9_word_case():
    alpha = ("a", "b")
    checked = 0
    for total in range(2, 7):
        for d1 in range(1, total):
            for s in enumerate_sentences(d1, alpha):
                for w in enumerate_sentences(total - d1, alpha):
                    assert word_ops.star(s, w) == word_ops.star_by_injections(s, w)
                    checked += 1
    # More right components than left ones gives exactly zero.
    assert word_ops.star(parse_sentence("ab"), parse_sentence("c|d")) == LinComb()
    for s, w in ((("ab",), ("c", "d", "e")), (("a", "b"), ("c", "d", "e"))):
        assert word_ops.star_by_injections(Sentence(s), Sentence(w)) == LinComb()
    rng = random.Random(99)
    for _ in range(200):
        total = rng.randint(2, 6)
        d1 = rng.randint(1, total - 1)
        s = random_sentence(rng, d1, alpha)
        w = random_sentence(rng, total - d1, alpha)
        base = word_ops.star(s, w)
        shuffled = list(w.words)
        rng.shuffle(shuffled)
        assert word_ops.star(s, Sentence(tuple(shuffled))) == base
    _report(9, f"closed formula = recursion on {checked} sentence pairs; "
               "vanishing and permutation invariance hold")


def test_criterion_10_symmetrization():
    for n in (1, 2, 3, 4):
        report = symmetrization_check(n)
        assert report.ok, report.pretty()
    # Direct spot check at n = 2 over the tree engine.
    v1, v2 = Forest((Leaf("a"),)), Forest((Leaf("b"),))
    product = Forest((Leaf("a"), Leaf("b")))
    got = iterated_reduced(1, LinComb.of(product))
    assert got == LinComb.of((v1, v2)) + LinComb.of((v2, v1))
    _report(10, "symmetrization identities exact for n <= 4 with vanishing "
                "beyond depth")
