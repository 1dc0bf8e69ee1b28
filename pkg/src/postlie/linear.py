"""Exact scalars, sparse linear combinations and tensor-coalgebra operations.

Everything is computed over the rationals: coefficients are
``fractions.Fraction`` and every identity is checked exactly, never up to
a tolerance.  A linear combination is a finite map from hashable basis
terms to nonzero coefficients; zero coefficients are purged on
construction, so equality of combinations is term-wise equality of
coefficients.

The coalgebra operations (concatenation, unshuffle coproduct, counit,
reduced and iterated reduced coproducts) are generic over any "word-like"
basis term: a term exposing a tuple ``letters`` and a classmethod
``of_letters``.  ``TensorWord`` is the plain instance; forests of trees
and sentences of words reuse the same operations with their own letter
types.

All values are immutable and all operations are pure functions, so
concurrent use on shared inputs is safe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator

Scalar = Fraction


class ParseError(ValueError):
    """Raised when a textual expression cannot be parsed."""


def term_key(term):
    """Canonical sort key of a basis term, used for deterministic printing."""
    key = getattr(term, "sort_key", None)
    if key is not None:
        return key()
    if isinstance(term, tuple):
        return tuple(term_key(t) for t in term)
    return term


class LinComb:
    """A finite formal linear combination with exact rational coefficients.

    Instances are immutable; arithmetic returns new combinations.  Terms
    may be any hashable values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for term, coeff in items:
            c = data.get(term, 0) + Fraction(coeff)
            if c == 0:
                data.pop(term, None)
            else:
                data[term] = c
        self._terms = data

    @classmethod
    def of(cls, term, coeff=1) -> "LinComb":
        """The combination ``coeff * term``."""
        return cls(((term, coeff),))

    def items(self):
        return self._terms.items()

    def terms(self):
        return self._terms.keys()

    def coeff(self, term) -> Fraction:
        return self._terms.get(term, Fraction(0))

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: term_key(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self._terms)
        for term, c in other._terms.items():
            s = out.get(term, 0) + c
            if s == 0:
                out.pop(term, None)
            else:
                out[term] = s
        res = LinComb.__new__(LinComb)
        res._terms = out
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def __rmul__(self, scalar) -> "LinComb":
        return self.scale(scalar)

    def scale(self, scalar) -> "LinComb":
        s = Fraction(scalar)
        if s == 0:
            return LinComb()
        res = LinComb.__new__(LinComb)
        res._terms = {t: s * c for t, c in self._terms.items()}
        return res

    def apply(self, f: Callable) -> "LinComb":
        """Linear extension of ``f``, which maps a term to a LinComb or term."""
        out = []
        for term, c in self._terms.items():
            for u, cu in aslincomb(f(term)).items():
                out.append((u, c * cu))
        return LinComb(out)

    def map_terms(self, f: Callable) -> "LinComb":
        """Relabel terms through ``f``; coefficients of collisions add up."""
        return LinComb((f(t), c) for t, c in self._terms.items())

    def __str__(self) -> str:
        return lincomb_text(self)

    def __repr__(self) -> str:
        return f"LinComb({dict(self._terms)!r})"


def aslincomb(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.of(x)


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lincomb_scale(s, a: LinComb) -> LinComb:
    return a.scale(s)


def bilinear(f: Callable) -> Callable:
    """Extend a basis-level binary operation to linear combinations."""

    def lifted(x, y) -> LinComb:
        out = []
        for s, cs in aslincomb(x).items():
            for t, ct in aslincomb(y).items():
                for u, cu in aslincomb(f(s, t)).items():
                    out.append((u, cs * ct * cu))
        return LinComb(out)

    return lifted


def lincomb_text(x: LinComb, term_str: Callable = str) -> str:
    """Deterministic text form, e.g. ``+1 [a b] -2/3 [(a^b)]``; zero is ``0``."""
    if not x:
        return "0"
    parts = []
    for term, c in x.sorted_items():
        sign = "+" if c > 0 else "-"
        parts.append(f"{sign}{abs(c)} {term_str(term)}")
    return " ".join(parts)


def lincomb_json(x: LinComb, term_enc: Callable = str) -> list:
    """Serialization as a coefficient/term list, sorted by canonical order."""
    return [
        {"coefficient": str(c), "term": term_enc(t)} for t, c in x.sorted_items()
    ]


class TensorWord:
    """A word of the tensor algebra over an arbitrary letter type."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable = ()):
        object.__setattr__(self, "letters", tuple(letters))

    @classmethod
    def of_letters(cls, letters) -> "TensorWord":
        return cls(letters)

    def __setattr__(self, name, value):
        raise AttributeError("TensorWord is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("TensorWord", self.letters))

    def sort_key(self):
        return (len(self.letters), tuple(term_key(l) for l in self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(str(l) for l in self.letters)

    def __repr__(self) -> str:
        return f"TensorWord({self.letters!r})"


class TensorPair:
    """An elementary two-fold tensor with word-like components."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("TensorPair is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return hash(("TensorPair", self.left, self.right))

    def sort_key(self):
        return (term_key(self.left), term_key(self.right))

    def swap(self) -> "TensorPair":
        return TensorPair(self.right, self.left)

    def __str__(self) -> str:
        return f"{self.left} (x) {self.right}"

    def __repr__(self) -> str:
        return f"TensorPair({self.left!r}, {self.right!r})"


def concat(u, v):
    """Concatenation product of two word-like terms of the same type."""
    return type(u).of_letters(u.letters + v.letters)


def is_unit_term(w) -> bool:
    return len(w.letters) == 0


def unshuffle(word) -> LinComb:
    """Unshuffle coproduct of one word: sum over position subsets ``I`` of
    ``w_I (x) w_{I^c}``, both subwords keeping the original relative order."""
    make = type(word).of_letters
    letters = word.letters
    n = len(letters)
    out: dict = {}
    for mask in range(1 << n):
        left = tuple(letters[i] for i in range(n) if mask >> i & 1)
        right = tuple(letters[i] for i in range(n) if not mask >> i & 1)
        pair = TensorPair(make(left), make(right))
        out[pair] = out.get(pair, 0) + 1
    return LinComb(out.items())


def coproduct(x) -> LinComb:
    """The unshuffle coproduct extended linearly; returns pairs."""
    return aslincomb(x).apply(unshuffle)


def counit(x) -> Fraction:
    """Coefficient of the empty word."""
    return sum(
        (c for t, c in aslincomb(x).items() if is_unit_term(t)), Fraction(0)
    )


def reduced_coproduct(x) -> LinComb:
    """``Delta(x) - 1 (x) x - x (x) 1`` on nonunit words; kills the unit."""

    def on_word(w):
        n = len(w.letters)
        if n == 0:
            return LinComb()
        full = unshuffle(w)
        make = type(w).of_letters
        unit = make(())
        return full - LinComb.of(TensorPair(unit, w)) - LinComb.of(TensorPair(w, unit))

    return aslincomb(x).apply(on_word)


def iterated_reduced(k: int, x) -> LinComb:
    """k-fold iterated reduced coproduct, over (k+1)-tuples of words.

    ``k = 0`` is the augmentation projection ``x - counit(x) * 1``; each
    further step applies the reduced coproduct to the first tensor factor.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = aslincomb(x)
    if k == 0:
        return LinComb(((t,), c) for t, c in x.items() if not is_unit_term(t))
    prev = iterated_reduced(k - 1, x)
    out = []
    for tup, c in prev.items():
        for pair, cp in reduced_coproduct(LinComb.of(tup[0])).items():
            out.append(((pair.left, pair.right) + tup[1:], c * cp))
    return LinComb(out)
