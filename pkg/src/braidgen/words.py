"""Artin words over the generators sigma_1, ..., sigma_{n-1}.

Generator indices are 1-based at every interface. A word is serialized as
space-separated decimal indices; the empty word serializes to "".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BraidError(ValueError):
    """Raised for invalid input to any braidgen operation."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def check_strands(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise BraidError(f"strand count must be an integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True)
class ArtinWord:
    """A positive word sigma_{i_1} ... sigma_{i_k} in the braid monoid on n strands."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        check_strands(self.n)
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for i in letters:
            if not 1 <= i <= self.n - 1:
                raise BraidError(f"generator out of range: {i} (n={self.n})")

    @classmethod
    def of(cls, n: int, letters: Iterable[int] = ()) -> ArtinWord:
        return cls(tuple(letters), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return ArtinWord(self.letters[index], self.n)
        return self.letters[index]

    def __add__(self, other: ArtinWord) -> ArtinWord:
        if not isinstance(other, ArtinWord):
            return NotImplemented
        if other.n != self.n:
            raise BraidError("alphabet mismatch")
        return ArtinWord(self.letters + other.letters, self.n)

    def append(self, letter: int) -> ArtinWord:
        return ArtinWord(self.letters + (letter,), self.n)

    @property
    def last(self) -> int:
        """Index of the last letter, or 0 for the empty word."""
        return self.letters[-1] if self.letters else 0

    def __str__(self) -> str:
        return format_word(self)


def lex_compare(u: ArtinWord, v: ArtinWord) -> Ordering:
    if u.n != v.n:
        raise BraidError("alphabet mismatch")
    if u.letters < v.letters:
        return Ordering.LESS
    if u.letters > v.letters:
        return Ordering.GREATER
    return Ordering.EQUAL


def parse_word(text: str, n: int) -> ArtinWord:
    check_strands(n)
    letters = []
    for token in text.replace(",", " ").split():
        try:
            letters.append(int(token))
        except ValueError:
            raise BraidError(f"cannot parse generator index {token!r}") from None
    return ArtinWord(tuple(letters), n)


def format_word(w: ArtinWord | Sequence[int]) -> str:
    letters = w.letters if isinstance(w, ArtinWord) else w
    return " ".join(str(i) for i in letters)


def run(i: int, j: int, n: int) -> ArtinWord:
    """The monotone run sigma_i sigma_{i+-1} ... sigma_j (ascending or descending)."""
    step = 1 if j >= i else -1
    return ArtinWord(tuple(range(i, j + step, step)), n)
