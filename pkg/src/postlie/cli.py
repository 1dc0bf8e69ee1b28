"""Command-line front end.

Subcommands parse forests, trees, sentences and permutations in the text
syntax of the library, dispatch the corresponding computation and print
the result either as deterministic text (canonical term order) or as
JSON.  Exit codes: 0 success, 1 usage or parse error, 2 a verification
suite found a nonzero residual.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import forests as forest_ops
from . import words as word_ops
from .linear import LinComb, ParseError, lincomb_json, lincomb_text
from .perms import parse_permutation
from .trees import (
    Forest,
    contract_rightmost,
    enumerate_forests,
    expand_leftmost,
    parse_forest,
    parse_prtree,
    parse_tree,
    random_forest,
)
from .verify import (
    check_left_postlie,
    check_right_postlie,
    convolution_inverse,
    forest_counts,
    hopf_relation_suite,
    load_structure_constants,
    opposite,
    pbw_dims,
    primitive_kernel,
    prtree_left_graft_constants,
    symmetrization_check,
    tree_span_constants,
    trees_engine,
    words_engine,
)
from .words import Sentence, parse_sentence, random_sentence


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _alphabet(args) -> tuple | None:
    if getattr(args, "alphabet", None) is None:
        return None
    symbols = tuple(s.strip() for s in args.alphabet.split(",") if s.strip())
    if not symbols:
        raise ParseError("empty alphabet")
    return symbols


def _emit_lincomb(args, value: LinComb) -> int:
    if args.format == "json":
        print(json.dumps({"terms": lincomb_json(value)}))
    else:
        print(lincomb_text(value))
    return 0


def _emit_report(args, report) -> int:
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.pretty())
    return 0 if report.ok else 2


def _cmd_star(args) -> int:
    alpha = _alphabet(args)
    f = parse_forest(args.left, alpha)
    g = parse_forest(args.right, alpha)
    if args.method == "recursive":
        value = forest_ops.star(f, g)
    elif args.method == "multiset":
        value = forest_ops.star_by_multiset(f, g)
    else:
        value = forest_ops.star_by_symmetric_group(f, g)
    return _emit_lincomb(args, value)


def _cmd_multiset(args) -> int:
    f = parse_forest(args.forest, _alphabet(args))
    if f.length == 0:
        raise ParseError("the multiset needs a nonempty forest")
    counts = forest_ops.grafting_multiset(f)
    entries = sorted(counts.items(), key=lambda kv: kv[0].sort_key())
    if args.format == "json":
        print(
            json.dumps(
                {
                    "entries": [
                        {"multiplicity": m, "forest": str(s)} for s, m in entries
                    ]
                }
            )
        )
    else:
        for s, m in entries:
            print(f"{m} x {s}")
    return 0


def _parse_int_word(text: str) -> tuple:
    text = text.strip()
    if not text or text == "0":
        return ()
    if any(ch in text for ch in " ,"):
        parts = [p for p in text.replace(",", " ").split() if p]
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad letter in word {text!r}") from None


def _cmd_levelled(args) -> int:
    tree = forest_ops.levelled_from_word(_parse_int_word(args.word))
    if args.format == "json":
        print(json.dumps({"levelled": str(tree)}))
    else:
        print(tree)
    return 0


def _cmd_bmap(args) -> int:
    f = parse_forest(args.forest, _alphabet(args))
    t = forest_ops.parse_levelled(args.levelled)
    result = forest_ops.graft_forest(f, t)
    if args.format == "json":
        print(json.dumps({"tree": str(result)}))
    else:
        print(result)
    return 0


def _cmd_phin(args) -> int:
    f = parse_forest(args.forest, _alphabet(args))
    sigma = parse_permutation(args.permutation, size=f.length)
    result = forest_ops.forest_from_permutation(f, sigma)
    if args.format == "json":
        print(json.dumps({"forest": str(result)}))
    else:
        print(result)
    return 0


def _cmd_contract(args) -> int:
    t = parse_tree(args.tree, _alphabet(args))
    result = contract_rightmost(t)
    if args.format == "json":
        print(json.dumps({"prtree": str(result)}))
    else:
        print(result)
    return 0


def _cmd_butcher(args) -> int:
    from .trees import butcher

    t1 = parse_prtree(args.left)
    t2 = parse_prtree(args.right)
    result = butcher(t1, t2)
    if args.format == "json":
        print(json.dumps({"prtree": str(result)}))
    else:
        print(result)
    return 0


def _cmd_words_star(args) -> int:
    alpha = _alphabet(args)
    s = parse_sentence(args.left, alpha)
    w = parse_sentence(args.right, alpha)
    if args.method == "closed":
        value = word_ops.star_by_injections(s, w)
    else:
        value = word_ops.star(s, w)
    return _emit_lincomb(args, value)


def _cmd_check_axioms(args) -> int:
    alg = load_structure_constants(args.file)
    if args.side == "left":
        report = check_left_postlie(alg)
    else:
        report = check_right_postlie(alg)
    return _emit_report(args, report)


def _cmd_hopf_suite(args) -> int:
    alpha = _alphabet(args)
    if args.engine == "words":
        engine = words_engine(alpha or ("a", "b"))
    else:
        engine = trees_engine(alpha or ("•",))
    report = hopf_relation_suite(engine, args.budget)
    return _emit_report(args, report)


def _cmd_conv_inverse(args) -> int:
    result = convolution_inverse(args.budget)
    return _emit_report(args, result.report)


def _cmd_prim_dims(args) -> int:
    cutoff = args.max
    kernel = [primitive_kernel(n)[1] for n in range(1, cutoff + 1)]
    catalan = [1]
    for n in range(1, cutoff + 1):
        catalan.append(catalan[-1] * 2 * (2 * n - 1) // (n + 1))
    series = pbw_dims(catalan[:cutoff], cutoff)
    counts = forest_counts(cutoff)
    ok = kernel == series
    if args.format == "json":
        print(
            json.dumps(
                {
                    "kernel_dims": kernel,
                    "pbw_dims": series,
                    "forest_counts": counts,
                    "ok": ok,
                }
            )
        )
    else:
        for n in range(1, cutoff + 1):
            mark = "ok" if kernel[n - 1] == series[n - 1] else "MISMATCH"
            print(f"degree {n}: kernel={kernel[n - 1]} series={series[n - 1]} {mark}")
        print("forest counts: " + " ".join(str(c) for c in counts))
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# Self test


def _selftest_checks(budget: int, seed: int):
    one = ("•",)
    pair_bound = budget + 1

    def star_agreement_exhaustive():
        for total in range(2, pair_bound + 1):
            for df in range(1, total):
                for f in enumerate_forests(df, one):
                    for g in enumerate_forests(total - df, one):
                        if g.length == 0 or g.length > 4 or f.length == 0:
                            continue
                        a = forest_ops.star(f, g)
                        if a != forest_ops.star_by_multiset(f, g):
                            return f"multiset formula differs on {f} * {g}"
                        if a != forest_ops.star_by_symmetric_group(f, g):
                            return f"symmetric-group formula differs on {f} * {g}"
        return None

    def star_agreement_random():
        rng = random.Random(seed)
        alpha = ("a", "b")
        for _ in range(100):
            total = rng.randint(2, 7)
            df = rng.randint(1, total - 1)
            f = random_forest(rng, df, alpha)
            g = random_forest(rng, total - df, alpha)
            a = forest_ops.star(f, g)
            if a != forest_ops.star_by_multiset(f, g) or a != forest_ops.star_by_symmetric_group(f, g):
                return f"disagreement on {f} * {g}"
        return None

    def multiset_cardinality():
        import math

        from .trees import random_tree

        rng = random.Random(seed + 1)
        for length in range(1, 7):
            forest = Forest(
                tuple(random_tree(rng, rng.randint(1, 2), ("a", "b")) for _ in range(length))
            )
            counts = forest_ops.grafting_multiset(forest)
            if counts.total() != math.factorial(length):
                return f"|multiset({forest})| != {length}!"
        return None

    def multiset_surjection():
        import itertools

        from .perms import Permutation

        for d in range(1, min(budget, 5) + 1):
            for f in enumerate_forests(d, one):
                if f.length == 0 or f.length > 5:
                    continue
                k = f.length
                image = forest_ops.grafting_multiset(f).copy()
                for images in itertools.permutations(range(1, k + 1)):
                    image.subtract(
                        {forest_ops.forest_from_permutation(f, Permutation(images)): 1}
                    )
                if any(v != 0 for v in image.values()):
                    return f"surjection mismatch on {f}"
        return None

    def hopf_trees():
        report = hopf_relation_suite(trees_engine(one), budget)
        return None if report.ok else report.pretty()

    def hopf_words():
        report = hopf_relation_suite(words_engine(("a", "b")), budget)
        return None if report.ok else report.pretty()

    def postlie_on_trees():
        from .trees import enumerate_trees

        def bracket(a, b):
            return _concat_mul(a, b) - _concat_mul(b, a)

        triples = [
            (x, y, z)
            for d1 in range(1, 4)
            for d2 in range(1, 4)
            for d3 in range(1, 4)
            for x in enumerate_trees(d1, one)
            for y in enumerate_trees(d2, one)
            for z in enumerate_trees(d3, one)
        ]
        for x, y, z in triples:
            fx, fy, fz = (LinComb.of(Forest((t,))) for t in (x, y, z))
            lhs = forest_ops.star(fx, bracket(fy, fz))
            rhs = _assoc(fx, fy, fz) - _assoc(fx, fz, fy)
            if lhs != rhs:
                return f"action-on-bracket fails on {x}, {y}, {z}"
            lhs = forest_ops.star(bracket(fx, fy), fz)
            rhs = bracket(forest_ops.star(fx, fz), fy) + bracket(fx, forest_ops.star(fy, fz))
            if lhs != rhs:
                return f"product-on-bracket fails on {x}, {y}, {z}"
        return None

    def opposite_transport():
        fixtures = [
            tree_span_constants(3),
            prtree_left_graft_constants(3),
        ]
        for alg in fixtures:
            right = check_right_postlie(alg)
            left_of_op = check_left_postlie(opposite(alg))
            if right.ok != left_of_op.ok:
                return "opposite transport mismatch"
        return None

    def conv_inverse():
        result = convolution_inverse(min(4, budget - 1))
        return None if result.report.ok else result.report.pretty()

    def prim_dims():
        cutoff = min(4, budget - 1)
        kernel = [primitive_kernel(n)[1] for n in range(1, cutoff + 1)]
        catalan = [1, 1, 2, 5, 14, 42][:cutoff]
        series = pbw_dims(catalan, cutoff)
        return None if kernel == series else f"kernel {kernel} != series {series}"

    def contraction():
        from .trees import Vee, butcher, enumerate_prtrees, enumerate_trees

        for total in range(2, pair_bound + 1):
            for d1 in range(1, total):
                for t1 in enumerate_trees(d1, one):
                    for t2 in enumerate_trees(total - d1, one):
                        if contract_rightmost(Vee(t1, t2)) != butcher(
                            contract_rightmost(t1), contract_rightmost(t2)
                        ):
                            return f"morphism fails on {t1}, {t2}"
        for n in range(1, pair_bound + 1):
            trees = enumerate_trees(n, one)
            images = {contract_rightmost(t) for t in trees}
            if len(images) != len(trees) or images != set(enumerate_prtrees(n)):
                return f"bijection fails in degree {n}"
            for t in trees:
                if expand_leftmost(contract_rightmost(t)) != t:
                    return f"round trip fails on {t}"
        return None

    def words_oracle():
        from .verify import enumerate_sentences

        alpha = ("a", "b")
        for total in range(2, pair_bound + 1):
            for d1 in range(1, total):
                for s in enumerate_sentences(d1, alpha):
                    for w in enumerate_sentences(total - d1, alpha):
                        if word_ops.star(s, w) != word_ops.star_by_injections(s, w):
                            return f"word oracle differs on {s} * {w}"
        rng = random.Random(seed + 2)
        for _ in range(50):
            total = rng.randint(2, 6)
            d1 = rng.randint(1, total - 1)
            s = random_sentence(rng, d1, alpha)
            w = random_sentence(rng, total - d1, alpha)
            base = word_ops.star(s, w)
            shuffled = list(w.words)
            rng.shuffle(shuffled)
            if word_ops.star(s, Sentence(tuple(shuffled))) != base:
                return f"right-factor permutation changes {s} * {w}"
        return None

    def symmetrization():
        for n in range(1, 5):
            report = symmetrization_check(n)
            if not report.ok:
                return report.pretty()
        return None

    return [
        ("star-agreement-exhaustive", star_agreement_exhaustive),
        ("star-agreement-random", star_agreement_random),
        ("multiset-cardinality", multiset_cardinality),
        ("multiset-surjection", multiset_surjection),
        ("hopf-suite-trees", hopf_trees),
        ("hopf-suite-words", hopf_words),
        ("postlie-on-trees", postlie_on_trees),
        ("opposite-transport", opposite_transport),
        ("convolution-inverse", conv_inverse),
        ("primitive-dimensions", prim_dims),
        ("contraction-isomorphism", contraction),
        ("words-oracle", words_oracle),
        ("symmetrization", symmetrization),
    ]


def _concat_mul(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb()
    for f, cf in x.items():
        for g, cg in y.items():
            out += LinComb.of(f.concat(g), cf * cg)
    return out


def _assoc(x: LinComb, y: LinComb, z: LinComb) -> LinComb:
    return forest_ops.star(forest_ops.star(x, y), z) - forest_ops.star(
        x, forest_ops.star(y, z)
    )


def _cmd_selftest(args) -> int:
    failures = 0
    results = []
    for name, check in _selftest_checks(args.budget, args.seed):
        detail = check()
        ok = detail is None
        failures += 0 if ok else 1
        results.append({"name": name, "passed": ok, "detail": detail})
        if args.format != "json":
            print(f"PASS {name}" if ok else f"FAIL {name}: {detail}")
    if args.format == "json":
        print(json.dumps({"ok": failures == 0, "checks": results}))
    else:
        total = len(results)
        print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 2


# ---------------------------------------------------------------------------
# Parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="postlie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, alphabet=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if alphabet:
            p.add_argument(
                "--alphabet",
                help="comma-separated decoration symbols; unrestricted if omitted",
            )

    p = sub.add_parser("star", help="Post-Hopf product of two forests")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument(
        "--method", choices=("recursive", "multiset", "perm"), default="recursive"
    )
    common(p)
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("multiset", help="grafting multiset of a forest")
    p.add_argument("forest")
    common(p)
    p.set_defaults(func=_cmd_multiset)

    p = sub.add_parser("levelled", help="levelled tree of a word of integers")
    p.add_argument("word")
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_levelled)

    p = sub.add_parser("bmap", help="graft a forest along a levelled tree")
    p.add_argument("forest")
    p.add_argument("levelled")
    common(p)
    p.set_defaults(func=_cmd_bmap)

    p = sub.add_parser("phin", help="forest assembled from a permutation")
    p.add_argument("forest")
    p.add_argument("permutation")
    common(p)
    p.set_defaults(func=_cmd_phin)

    p = sub.add_parser("contract", help="contract rightmost edges of a binary tree")
    p.add_argument("tree")
    common(p)
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("butcher", help="Butcher product of two planar rooted trees")
    p.add_argument("left")
    p.add_argument("right")
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_butcher)

    p = sub.add_parser("words-star", help="Post-Hopf product of two sentences")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    common(p)
    p.set_defaults(func=_cmd_words_star)

    p = sub.add_parser("check-axioms", help="check structure constants from a file")
    p.add_argument("file")
    p.add_argument("--side", choices=("right", "left"), default="right")
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_check_axioms)

    p = sub.add_parser("hopf-suite", help="Post-Hopf relation suite on a free engine")
    p.add_argument("--engine", choices=("trees", "words"), default="trees")
    p.add_argument("--budget", type=int, default=5)
    common(p)
    p.set_defaults(func=_cmd_hopf_suite)

    p = sub.add_parser("conv-inverse", help="convolution inverse of right multiplication")
    p.add_argument("--budget", type=int, default=4)
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_conv_inverse)

    p = sub.add_parser("prim-dims", help="primitive dimensions against the series oracle")
    p.add_argument("--max", type=int, default=4)
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_prim_dims)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--budget", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    common(p, alphabet=False)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
