"""The Post-Hopf product on sentences of nonempty words.

A sentence is an ordered sequence of nonempty words over an alphabet of
single-character symbols; the empty sentence is the unit.  The product of
a sentence with one word inserts the word at the end of each component in
turn; it extends to sentences by the same peel-off-the-last-word
recursion as the forest product.  The closed form sums over injections
from the right factor's components into the left factor's components and
agrees with the recursion exactly; in particular the product vanishes
whenever the right factor has more components than the left.

Sentence syntax: components joined by ``|``, e.g. ``ab|c``; unit ``1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .linear import LinComb, ParseError, aslincomb


@dataclass(frozen=True, slots=True)
class Sentence:
    words: tuple = ()

    def __post_init__(self):
        words = tuple(str(w) for w in self.words)
        if any(not w for w in words):
            raise ValueError("sentence components must be nonempty words")
        object.__setattr__(self, "words", words)

    @classmethod
    def of_letters(cls, letters) -> "Sentence":
        return cls(tuple(letters))

    @property
    def letters(self) -> tuple:
        return self.words

    @property
    def length(self) -> int:
        return len(self.words)

    @property
    def total_letters(self) -> int:
        return sum(len(w) for w in self.words)

    def sort_key(self):
        return (self.total_letters, -len(self.words), self.words)

    def __str__(self) -> str:
        if not self.words:
            return "1"
        return "|".join(self.words)


def word_insertion_sum(s: Sentence, w: str) -> LinComb:
    """Concatenate ``w`` at the end of each component in turn, summed."""
    out = []
    for i in range(s.length):
        words = s.words[:i] + (s.words[i] + w,) + s.words[i + 1 :]
        out.append((Sentence(words), 1))
    return LinComb(out)


@lru_cache(maxsize=None)
def _star_basis(s: Sentence, w: Sentence) -> LinComb:
    if w.length == 0:
        return LinComb.of(s)
    if s.length == 0:
        return LinComb()
    if w.length == 1:
        return word_insertion_sum(s, w.words[0])
    head, last = Sentence(w.words[:-1]), w.words[-1]
    left = _star_basis(s, head).apply(lambda t: word_insertion_sum(t, last))
    right = LinComb()
    for h, c in _star_basis(head, Sentence((last,))).items():
        right += c * _star_basis(s, h)
    return left - right


def star(x, y) -> LinComb:
    """The Post-Hopf product on linear combinations of sentences."""
    out = LinComb()
    for s, cs in aslincomb(x).items():
        for w, cw in aslincomb(y).items():
            out += (cs * cw) * _star_basis(s, w)
    return out


def star_by_injections(s: Sentence, w: Sentence) -> LinComb:
    """Closed form: sum over injections of the right components into the
    left components; each component receives at most one word, appended.

    There are ``n (n-1) ... (n-k+1)`` terms, none when ``k > n``.
    """
    n, k = s.length, w.length
    if k == 0:
        return LinComb.of(s)
    if n == 0:
        return LinComb()
    out = []
    # itertools.permutations yields image tuples in lexicographic order.
    for targets in itertools.permutations(range(n), k):
        words = list(s.words)
        for j, i in enumerate(targets):
            words[i] = words[i] + w.words[j]
        out.append((Sentence(tuple(words)), 1))
    return LinComb(out)


def random_sentence(rng, total: int, alphabet: tuple) -> Sentence:
    """A random sentence with ``total`` letters (random composition)."""
    words = []
    while total > 0:
        part = rng.randint(1, total)
        words.append("".join(rng.choice(alphabet) for _ in range(part)))
        total -= part
    return Sentence(tuple(words))


def parse_sentence(text: str, alphabet: Iterable | None = None) -> Sentence:
    text = text.strip()
    if text == "1":
        return Sentence(())
    if not text:
        raise ParseError("empty sentence expression")
    alpha = set(alphabet) if alphabet is not None else None
    words = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty component word in {text!r}")
        if not chunk.isalnum():
            raise ParseError(f"bad word {chunk!r} in {text!r}")
        if alpha is not None:
            for ch in chunk:
                if ch not in alpha:
                    raise ParseError(
                        f"unknown symbol {ch!r}; alphabet is {sorted(alpha)}"
                    )
        words.append(chunk)
    return Sentence(tuple(words))
