"""Decorated planar binary trees, forests and planar rooted trees.

A binary tree is either a leaf carrying a decoration symbol or the graft
``vee`` of two trees under a new root; its degree is its number of
leaves.  A forest is an ordered sequence of such trees and doubles as a
word whose letters are trees, so the generic coalgebra operations apply
to it directly.

Contracting the rightmost outgoing edge of every interior node turns a
binary tree into a planar (non-binary) rooted tree and turns grafting
into the Butcher product; both directions of that bijection are
implemented, together with the sum of left grafts onto every node.

Text syntax: leaf ``a``; graft ``(a^b)``; forest ``[t1 t2]`` with unit
``1``; planar rooted tree ``•(• •(•))`` (``*`` is accepted for ``•``).
Parsers and printers round-trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .linear import LinComb, ParseError


@dataclass(frozen=True, slots=True)
class Leaf:
    decoration: str

    def __str__(self) -> str:
        return self.decoration

    def sort_key(self):
        return (1, self.decoration)


@dataclass(frozen=True, slots=True)
class Vee:
    left: "Tree"
    right: "Tree"

    def __str__(self) -> str:
        return f"({self.left}^{self.right})"

    def sort_key(self):
        return (degree(self), str(self))


Tree = Union[Leaf, Vee]


def leaf(decoration: str) -> Leaf:
    return Leaf(str(decoration))


def vee(t1: Tree, t2: Tree) -> Vee:
    """Graft ``t1`` on the left and ``t2`` on the right of a new root."""
    return Vee(t1, t2)


def degree(t: Tree) -> int:
    """Number of leaves."""
    if isinstance(t, Leaf):
        return 1
    return degree(t.left) + degree(t.right)


@dataclass(frozen=True, slots=True)
class Forest:
    trees: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))

    @classmethod
    def of_letters(cls, letters) -> "Forest":
        return cls(tuple(letters))

    @property
    def letters(self) -> tuple:
        return self.trees

    @property
    def length(self) -> int:
        return len(self.trees)

    @property
    def degree(self) -> int:
        return sum(degree(t) for t in self.trees)

    def concat(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def sort_key(self):
        # Within a degree, longer (less grafted) forests come first.
        return (self.degree, -len(self.trees), tuple(t.sort_key() for t in self.trees))

    def __str__(self) -> str:
        if not self.trees:
            return "1"
        return "[" + " ".join(str(t) for t in self.trees) + "]"


@dataclass(frozen=True, slots=True)
class PRTree:
    """Planar rooted tree: a root with an ordered sequence of subtrees."""

    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    @property
    def nodes(self) -> int:
        return 1 + sum(c.nodes for c in self.children)

    def sort_key(self):
        return (self.nodes, str(self))

    def __str__(self) -> str:
        if not self.children:
            return "•"
        return "•(" + " ".join(str(c) for c in self.children) + ")"


def contract_rightmost(t: Tree) -> PRTree:
    """Contract the rightmost outgoing edge of every interior node.

    The nodes of the result are the classes of the right spines of ``t``;
    the subtrees hanging off a spine become the children of its class, in
    planar order.  Leaf decorations are forgotten.
    """
    spine_lefts = []
    while isinstance(t, Vee):
        spine_lefts.append(t.left)
        t = t.right
    return PRTree(tuple(contract_rightmost(l) for l in spine_lefts))


def expand_leftmost(tau: PRTree, decoration: str = "•") -> Tree:
    """Inverse of ``contract_rightmost`` over a one-symbol alphabet."""
    out: Tree = Leaf(decoration)
    for child in reversed(tau.children):
        out = Vee(expand_leftmost(child, decoration), out)
    return out


def butcher(tau1: PRTree, tau2: PRTree) -> PRTree:
    """Attach the root of ``tau1`` as the new leftmost child of ``tau2``."""
    return PRTree((tau1,) + tau2.children)


def left_graft_sum(tau1: PRTree, tau2: PRTree) -> LinComb:
    """Sum over all nodes of ``tau1`` of attaching ``tau2`` as the new
    leftmost child of that node; one term per node of ``tau1``."""
    return LinComb((t, 1) for t in _left_grafts(tau1, tau2))


def _left_grafts(t: PRTree, g: PRTree) -> Iterator[PRTree]:
    yield PRTree((g,) + t.children)
    for i, c in enumerate(t.children):
        for cg in _left_grafts(c, g):
            yield PRTree(t.children[:i] + (cg,) + t.children[i + 1 :])


@lru_cache(maxsize=None)
def enumerate_trees(n: int, alphabet: tuple) -> tuple:
    """All decorated binary trees with exactly ``n`` leaves.

    There are ``catalan(n-1) * len(alphabet)**n`` of them.
    """
    if n < 1:
        raise ValueError("a binary tree has at least one leaf")
    if n == 1:
        return tuple(Leaf(a) for a in alphabet)
    out = []
    for k in range(1, n):
        for l in enumerate_trees(k, alphabet):
            for r in enumerate_trees(n - k, alphabet):
                out.append(Vee(l, r))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_forests(d: int, alphabet: tuple) -> tuple:
    """All forests of total degree ``d`` (the unit alone for ``d = 0``)."""
    if d == 0:
        return (Forest(()),)
    out = []
    for first in range(1, d + 1):
        for t in enumerate_trees(first, alphabet):
            for rest in enumerate_forests(d - first, alphabet):
                out.append(Forest((t,) + rest.trees))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_prtrees(n: int) -> tuple:
    """All planar rooted trees with exactly ``n`` nodes."""
    if n < 1:
        raise ValueError("a planar rooted tree has at least one node")
    if n == 1:
        return (PRTree(()),)
    out = []
    for first in range(1, n):
        for c in enumerate_prtrees(first):
            for rest in enumerate_prtrees(n - first):
                out.append(PRTree((c,) + rest.children))
    return tuple(out)


def random_tree(rng, n: int, alphabet: tuple) -> Tree:
    """A uniformly split random tree with ``n`` leaves, random decorations."""
    if n == 1:
        return Leaf(rng.choice(alphabet))
    k = rng.randint(1, n - 1)
    return Vee(random_tree(rng, k, alphabet), random_tree(rng, n - k, alphabet))


def random_forest(rng, d: int, alphabet: tuple) -> Forest:
    """A random forest of total degree ``d`` (random composition of d)."""
    trees = []
    while d > 0:
        part = rng.randint(1, d)
        trees.append(random_tree(rng, part, alphabet))
        d -= part
    return Forest(tuple(trees))


_TOKEN = re.compile(r"[()\[\]^]|[A-Za-z0-9_•*]+|\S")


def _tokenize(text: str) -> list:
    return _TOKEN.findall(text)


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")


_IDENT = re.compile(r"[A-Za-z0-9_•]+\Z")


def _parse_tree(toks: _Tokens, alphabet=None) -> Tree:
    tok = toks.next()
    if tok == "(":
        left = _parse_tree(toks, alphabet)
        toks.expect("^")
        right = _parse_tree(toks, alphabet)
        toks.expect(")")
        return Vee(left, right)
    if tok == "*":
        tok = "•"
    if not _IDENT.match(tok):
        raise ParseError(f"bad leaf symbol {tok!r} in {toks.text!r}")
    if alphabet is not None and tok not in alphabet:
        raise ParseError(f"unknown symbol {tok!r}; alphabet is {sorted(alphabet)}")
    return Leaf(tok)


def parse_tree(text: str, alphabet: Iterable | None = None) -> Tree:
    toks = _Tokens(text)
    out = _parse_tree(toks, set(alphabet) if alphabet is not None else None)
    toks.done()
    return out


def parse_forest(text: str, alphabet: Iterable | None = None) -> Forest:
    toks = _Tokens(text)
    alpha = set(alphabet) if alphabet is not None else None
    if toks.peek() == "1":
        toks.next()
        toks.done()
        return Forest(())
    toks.expect("[")
    trees = []
    while toks.peek() != "]":
        trees.append(_parse_tree(toks, alpha))
    toks.expect("]")
    toks.done()
    return Forest(tuple(trees))


def _parse_prtree(toks: _Tokens) -> PRTree:
    tok = toks.next()
    if tok not in ("•", "*"):
        raise ParseError(f"expected a node '•', got {tok!r} in {toks.text!r}")
    children = []
    if toks.peek() == "(":
        toks.next()
        while toks.peek() != ")":
            children.append(_parse_prtree(toks))
        toks.expect(")")
        if not children:
            raise ParseError(f"empty child list in {toks.text!r}")
    return PRTree(tuple(children))


def parse_prtree(text: str) -> PRTree:
    toks = _Tokens(text)
    out = _parse_prtree(toks)
    toks.done()
    return out
