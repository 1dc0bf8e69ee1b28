"""Permutations, cycle decompositions and their sentence normal forms.

A permutation is stored as the image tuple of ``{1..n}`` and acts as the
identity beyond ``n``.  Its normal form lists the nontrivial cycles, each
written as a word with its minimum first, sorted by increasing minimum;
such words have no repeated letters and assemble into packed sentences.
Conversely a sentence of cycle words composes back into a permutation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .linear import ParseError


@dataclass(frozen=True, slots=True)
class Permutation:
    image: tuple = ()

    def __post_init__(self):
        img = tuple(int(v) for v in self.image)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"{img} is not a permutation of 1..{len(img)}")
        object.__setattr__(self, "image", img)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable, size: int | None = None) -> "Permutation":
        """Build from disjoint cycle words; repeated letters are rejected."""
        cycles = [tuple(int(v) for v in c) for c in cycles]
        seen = set()
        for c in cycles:
            for v in c:
                if v < 1:
                    raise ValueError("letters must be positive integers")
                if v in seen:
                    raise ValueError(f"letter {v} appears twice")
                seen.add(v)
        n = max(seen, default=0)
        if size is not None:
            if size < n:
                raise ValueError(f"size {size} is below the largest moved point {n}")
            n = size
        img = list(range(1, n + 1))
        for c in cycles:
            for i, v in enumerate(c):
                img[v - 1] = c[(i + 1) % len(c)]
        return cls(tuple(img))

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.image):
            return self.image[i - 1]
        return i

    def extend(self, n: int) -> "Permutation":
        """The same permutation viewed in the larger symmetric group S_n."""
        if n < self.size:
            raise ValueError(f"cannot shrink a permutation of size {self.size} to {n}")
        return Permutation(self.image + tuple(range(self.size + 1, n + 1)))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: ``(self * other)(i) = self(other(i))``."""
        n = max(self.size, other.size)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def orbit_words(self) -> list:
        """All orbits on ``{1..n}`` as min-first cycle words, sorted by minimum.

        Fixed points appear as one-letter words.
        """
        seen = set()
        words = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            word = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                word.append(v)
                seen.add(v)
                v = self(v)
            words.append(tuple(word))
        return words

    @property
    def num_orbits(self) -> int:
        return len(self.orbit_words())

    def support(self) -> frozenset:
        return frozenset(i for i in range(1, self.size + 1) if self(i) != i)

    def __str__(self) -> str:
        cycles = [w for w in self.orbit_words() if len(w) > 1]
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in w) + ")" for w in cycles)


def normal_form(sigma: Permutation) -> tuple:
    """Sentence of the nontrivial cycles of ``sigma``, min-first, sorted by
    minimum.  The identity has the empty sentence as normal form."""
    return tuple(w for w in sigma.orbit_words() if len(w) > 1)


def sentence_to_perm(sentence: Iterable, size: int | None = None) -> Permutation:
    """Compose the cycles described by a sentence of words.

    Accepts any sentence without repeated letters; it need not be packed
    or in normal form.
    """
    return Permutation.from_cycles(sentence, size=size)


def is_packed(sentence: Iterable) -> bool:
    """Whether the letters of the sentence form ``{1..m}`` for some m."""
    letters = [v for w in sentence for v in w]
    return sorted(letters) == list(range(1, len(letters) + 1)) or not letters


def sentence_text(sentence) -> str:
    """Cycle words joined by ``|``; digits are concatenated when all letters
    are below ten, otherwise space-separated.  The empty sentence is ``0``."""
    words = [tuple(w) for w in sentence]
    if not words:
        return "0"
    if all(v <= 9 for w in words for v in w):
        return "|".join("".join(str(v) for v in w) for w in words)
    return "|".join(" ".join(str(v) for v in w) for w in words)


def parse_sentence(text: str) -> tuple:
    """Parse ``15|346`` (single digits) or ``1 5|3 4 6`` (space-separated)."""
    text = text.strip()
    if text == "0":
        return ()
    words = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty word in sentence {text!r}")
        if " " in chunk or "," in chunk:
            letters = [p for p in re.split(r"[\s,]+", chunk) if p]
        else:
            letters = list(chunk)
        try:
            words.append(tuple(int(v) for v in letters))
        except ValueError:
            raise ParseError(f"bad letter in sentence {text!r}") from None
    return tuple(words)


def parse_permutation(text: str, size: int | None = None) -> Permutation:
    """Parse cycle notation ``(1 2)(3 6 4)`` or one-line ``[2,1,3]``."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    try:
        if text.startswith("["):
            if not text.endswith("]"):
                raise ParseError(f"unbalanced brackets in {text!r}")
            body = text[1:-1].strip()
            img = [int(p) for p in re.split(r"[\s,]+", body) if p] if body else []
            perm = Permutation(tuple(img))
        else:
            cycles = []
            for m in re.finditer(r"\(([^()]*)\)|(\S)", text):
                if m.group(2) is not None:
                    raise ParseError(f"unexpected {m.group(2)!r} in {text!r}")
                body = m.group(1).strip()
                if body:
                    cycles.append(tuple(int(p) for p in re.split(r"[\s,]+", body)))
            perm = Permutation.from_cycles(cycles)
        if size is not None:
            perm = perm.extend(size)
        return perm
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
