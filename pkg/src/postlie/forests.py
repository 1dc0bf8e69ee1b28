"""The free Post-Lie and Post-Hopf products on decorated binary forests.

The product of a forest with a single tree grafts the tree on the right
of each component in turn.  It extends to arbitrary right factors by a
recursion that peels off the last tree,

    f * (g y) = (f * g) * y - f * (g * y),

whose right length strictly decreases, together with the unit rules
``f * 1 = f`` and ``1 * f = counit(f) 1``.

Two closed combinatorial formulas compute the same product: one sums over
a multiset of grafted forests built from the right factor, the other over
the symmetric group by way of levelled trees, cycle words and an
assembling map that grafts a forest along a levelled tree.  The three
routes agree term by term and the test suite leans on that agreement.

Levelled-tree syntax: leaf ``|``; node ``Nk(L,R)`` with label ``k``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .linear import LinComb, ParseError, aslincomb
from .perms import Permutation
from .trees import Forest, Tree, Vee, degree

# ---------------------------------------------------------------------------
# The product: recursion and consecutive grafts


def right_graft_sum(forest: Forest, tree: Tree) -> LinComb:
    """Sum of all single right grafts of ``tree`` on the forest.

    Each term keeps the forest's length; the empty forest gives zero,
    matching ``1 * t = counit(t) 1``.
    """
    out = []
    trees = forest.trees
    for i in range(len(trees)):
        grafted = trees[:i] + (Vee(trees[i], tree),) + trees[i + 1 :]
        out.append((Forest(grafted), 1))
    return LinComb(out)


def _graft_linear(x: LinComb, tree: Tree) -> LinComb:
    return x.apply(lambda f: right_graft_sum(f, tree))


@lru_cache(maxsize=None)
def _star_basis(f: Forest, g: Forest) -> LinComb:
    if g.length == 0:
        return LinComb.of(f)
    if f.length == 0:
        return LinComb()
    if g.length == 1:
        return right_graft_sum(f, g.trees[0])
    head, last = Forest(g.trees[:-1]), g.trees[-1]
    left = _graft_linear(_star_basis(f, head), last)
    right = LinComb()
    for h, c in _star_basis(head, Forest((last,))).items():
        right += c * _star_basis(f, h)
    return left - right


def star(x, y) -> LinComb:
    """The Post-Hopf product on linear combinations of forests."""
    out = LinComb()
    for f, cf in aslincomb(x).items():
        for g, cg in aslincomb(y).items():
            out += (cf * cg) * _star_basis(f, g)
    return out


def consecutive_right_grafts(f: Forest, s: Forest) -> LinComb:
    """Graft the trees of ``s`` on ``f`` consecutively, left to right."""
    acc = LinComb.of(f)
    for tree in s.trees:
        acc = _graft_linear(acc, tree)
    return acc


# ---------------------------------------------------------------------------
# The grafting multiset and the first closed formula


def grafting_multiset(f: Forest) -> Counter:
    """Multiset of forests produced by repeatedly either appending the last
    tree or grafting it on an earlier component; cardinality ``l(f)!``."""
    if f.length == 0:
        raise ValueError("the grafting multiset needs a nonempty forest")
    if f.length == 1:
        return Counter({f: 1})
    head, last = f.trees[:-1], f.trees[-1]
    out: Counter = Counter()
    for s, mult in grafting_multiset(Forest(head)).items():
        out[Forest(s.trees + (last,))] += mult
    for i in range(len(head)):
        grafted = head[:i] + (Vee(head[i], last),) + head[i + 1 :]
        out += grafting_multiset(Forest(grafted))
    return out


def star_by_multiset(f: Forest, g: Forest) -> LinComb:
    """Closed form of ``star`` as a signed sum over the grafting multiset
    of the right factor."""
    if g.length == 0:
        return LinComb.of(f)
    out = LinComb()
    k = g.length
    for s, mult in grafting_multiset(g).items():
        sign = -1 if (s.length + k) % 2 else 1
        out += (sign * mult) * consecutive_right_grafts(f, s)
    return out


# ---------------------------------------------------------------------------
# Levelled trees and the symmetric-group formula


@dataclass(frozen=True, slots=True)
class LevelledLeaf:
    def __str__(self) -> str:
        return "|"

    def sort_key(self):
        return (0, "|")


@dataclass(frozen=True, slots=True)
class LevelledNode:
    label: int
    left: "LevelledTree"
    right: "LevelledTree"

    def __str__(self) -> str:
        return f"N{self.label}({self.left},{self.right})"

    def sort_key(self):
        return (leaf_count(self), str(self))


LevelledTree = Union[LevelledLeaf, LevelledNode]

LEVELLED_LEAF = LevelledLeaf()


def leaf_count(t: LevelledTree) -> int:
    if isinstance(t, LevelledLeaf):
        return 1
    return leaf_count(t.left) + leaf_count(t.right)


def labels(t: LevelledTree) -> frozenset:
    if isinstance(t, LevelledLeaf):
        return frozenset()
    return labels(t.left) | {t.label} | labels(t.right)


def is_levelled(t: LevelledTree) -> bool:
    """Labels distinct and strictly increasing away from the root."""

    def check(node, floor) -> bool:
        if isinstance(node, LevelledLeaf):
            return True
        return node.label > floor and check(node.left, node.label) and check(
            node.right, node.label
        )

    return len(labels(t)) == leaf_count(t) - 1 and check(t, 0)


def levelled_from_word(word) -> LevelledTree:
    """Map a word of distinct positive integers to a levelled tree: the
    minimum labels the root, the flanking subwords recurse."""
    word = tuple(int(v) for v in word)
    if len(set(word)) != len(word):
        raise ValueError(f"word {word} has repeated letters")
    if any(v < 1 for v in word):
        raise ValueError("letters must be positive integers")
    return _levelled_from_word(word)


def _levelled_from_word(word: tuple) -> LevelledTree:
    if not word:
        return LEVELLED_LEAF
    m = min(word)
    i = word.index(m)
    return LevelledNode(m, _levelled_from_word(word[:i]), _levelled_from_word(word[i + 1 :]))


def _leftmost_leaf_path(t: LevelledTree, prefix: tuple) -> tuple:
    while isinstance(t, LevelledNode):
        prefix += (0,)
        t = t.left
    return prefix


def graft_forest(forest: Forest, t: LevelledTree) -> Tree:
    """Assemble one binary tree by grafting the forest along a levelled
    tree with labels ``{2..n}``, ``n`` the forest length.

    The first tree replaces the leftmost leaf; for every label ``i`` the
    i-th tree replaces the leftmost leaf of the right subtree of the node
    labelled ``i`` (the closest leaf to its right).
    """
    n = forest.length
    if n < 1:
        raise ValueError("the grafted forest must be nonempty")
    if labels(t) != frozenset(range(2, n + 1)):
        raise ValueError(
            f"levelled tree labels {sorted(labels(t))} are not {{2..{n}}}"
        )
    if not is_levelled(t):
        raise ValueError(f"{t} is not a levelled tree")

    assignment = {_leftmost_leaf_path(t, ()): forest.trees[0]}

    def visit(node, path):
        if isinstance(node, LevelledLeaf):
            return
        target = _leftmost_leaf_path(node.right, path + (1,))
        assignment[target] = forest.trees[node.label - 1]
        visit(node.left, path + (0,))
        visit(node.right, path + (1,))

    visit(t, ())
    if len(assignment) != leaf_count(t):
        raise AssertionError("leaf assignment is not a bijection")

    def build(node, path) -> Tree:
        if isinstance(node, LevelledLeaf):
            return assignment[path]
        return Vee(build(node.left, path + (0,)), build(node.right, path + (1,)))

    return build(t, ())


def forest_from_permutation(f: Forest, sigma: Permutation) -> Forest:
    """Assemble a forest from a permutation of the component positions.

    Each orbit contributes one tree: its min-first cycle word, minimum
    dropped and letters renumbered order-preservingly into ``{2..m}``,
    gives a levelled tree along which the trees at the orbit's positions
    are grafted.  Orbits are laid out by increasing minimum.  Over the
    whole symmetric group this reproduces the grafting multiset of ``f``.
    """
    n = f.length
    if sigma.size != n:
        raise ValueError(f"need a permutation of 1..{n}, got size {sigma.size}")
    parts = []
    for word in sigma.orbit_words():
        elems = sorted(word)
        rank = {e: i + 1 for i, e in enumerate(elems)}
        tau = tuple(rank[v] for v in word[1:])
        sub = Forest(tuple(f.trees[i - 1] for i in elems))
        parts.append(graft_forest(sub, _levelled_from_word(tau)))
    return Forest(tuple(parts))


def star_by_symmetric_group(f: Forest, g: Forest) -> LinComb:
    """Closed form of ``star`` as a signed sum over the symmetric group on
    the components of the right factor; the sign is ``(-1)**(orbits + k)``."""
    k = g.length
    if k == 0:
        return LinComb.of(f)
    out = LinComb()
    for images in itertools.permutations(range(1, k + 1)):
        sigma = Permutation(images)
        sign = -1 if (sigma.num_orbits + k) % 2 else 1
        out += sign * consecutive_right_grafts(f, forest_from_permutation(g, sigma))
    return out


# ---------------------------------------------------------------------------
# Levelled-tree parsing


def parse_levelled(text: str) -> LevelledTree:
    pos = 0
    text = text.strip()

    def skip_ws(i: int) -> int:
        while i < len(text) and text[i] in " \t":
            i += 1
        return i

    def parse(i: int):
        i = skip_ws(i)
        if i < len(text) and text[i] == "|":
            return LEVELLED_LEAF, i + 1
        if i < len(text) and text[i] in "Nn":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"missing label after 'N' in {text!r}")
            label = int(text[i + 1 : j])
            j = skip_ws(j)
            if j >= len(text) or text[j] != "(":
                raise ParseError(f"expected '(' after N{label} in {text!r}")
            left, j = parse(j + 1)
            j = skip_ws(j)
            if j >= len(text) or text[j] != ",":
                raise ParseError(f"expected ',' in {text!r}")
            right, j = parse(j + 1)
            j = skip_ws(j)
            if j >= len(text) or text[j] != ")":
                raise ParseError(f"expected ')' in {text!r}")
            return LevelledNode(label, left, right), j + 1
        raise ParseError(f"expected '|' or 'Nk(...)' at position {i} in {text!r}")

    tree, pos = parse(pos)
    pos = skip_ws(pos)
    if pos != len(text):
        raise ParseError(f"trailing input in {text!r}")
    if not is_levelled(tree):
        raise ParseError(f"{text!r} violates the level condition")
    return tree
