"""Brute-force ground truth, straight from the definitions.

Nothing here uses admissible functions, the automaton or the counting
machinery: lex-representatives are found by exploring the full class of a word
under the braid relations.  Everything is exponential and refuses inputs past
its bounds instead of running for hours.  ``BRAIDGEN_ORACLE_MAX`` overrides
the default maximum word length.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from functools import lru_cache
from typing import Iterator

from .words import ArtinWord, BraidError, check_strands

DEFAULT_MAX_LENGTH = 12
DEFAULT_MAX_STRANDS = 5
DEFAULT_MAX_ENUM_LENGTH = 9


def max_length() -> int:
    value = os.environ.get("BRAIDGEN_ORACLE_MAX")
    if not value:
        return DEFAULT_MAX_LENGTH
    try:
        return int(value)
    except ValueError:
        raise BraidError(f"BRAIDGEN_ORACLE_MAX must be an integer, got {value!r}") from None


def _neighbours(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for p in range(len(word) - 1):
        i, j = word[p], word[p + 1]
        if abs(i - j) >= 2:
            yield word[:p] + (j, i) + word[p + 2:]
        elif p + 2 < len(word) and abs(i - j) == 1 and word[p + 2] == i:
            yield word[:p] + (j, i, j) + word[p + 3:]


def closure(w: ArtinWord) -> frozenset[tuple[int, ...]]:
    """Every word representing the same positive braid as ``w``."""
    if len(w) > max_length():
        raise BraidError("word too long for oracle")
    return _closure(w.letters)


@lru_cache(maxsize=1 << 16)
def _closure(start: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    seen = {start}
    frontier = deque([start])
    while frontier:
        for nxt in _neighbours(frontier.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def normalize(w: ArtinWord) -> ArtinWord:
    """The lex-representative of the braid represented by ``w``."""
    return ArtinWord(min(closure(w)), w.n)


@lru_cache(maxsize=1 << 18)
def _is_lex_rep(start: tuple[int, ...]) -> bool:
    seen = {start}
    frontier = deque([start])
    while frontier:
        for nxt in _neighbours(frontier.popleft()):
            if nxt < start:
                return False
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return True


def is_lex_rep(w: ArtinWord) -> bool:
    if len(w) > max_length():
        raise BraidError("word too long for oracle")
    return _is_lex_rep(w.letters)


def _check_enum_bounds(n: int, k: int, max_n: int | None, max_k: int | None) -> None:
    check_strands(n)
    max_n = DEFAULT_MAX_STRANDS if max_n is None else max_n
    if max_k is None:
        max_k = max_length() if os.environ.get("BRAIDGEN_ORACLE_MAX") else DEFAULT_MAX_ENUM_LENGTH
    if n > max_n or k > max_k:
        raise BraidError(f"oracle bounds exceeded: n={n} > {max_n} or k={k} > {max_k}")


def enumerate_lex_reps(
    n: int, k: int, *, max_n: int | None = None, max_k: int | None = None
) -> list[ArtinWord]:
    """All lex-representatives of length ``k`` in lexicographic order."""
    _check_enum_bounds(n, k, max_n, max_k)
    return [ArtinWord(t, n) for t in _lex_levels(n, k)[k]]


@lru_cache(maxsize=None)
def _lex_levels(n: int, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    levels = [((),)]
    for _ in range(k):
        level = [
            w + (i,) for w in levels[-1] for i in range(1, n) if _is_lex_rep(w + (i,))
        ]
        levels.append(tuple(level))
    return tuple(levels)


def lex_reps_up_to(n: int, k: int, **bounds) -> list[ArtinWord]:
    _check_enum_bounds(n, k, bounds.get("max_n"), bounds.get("max_k"))
    return [ArtinWord(t, n) for level in _lex_levels(n, k) for t in level]


def count_with_prefix(n: int, k: int, w: ArtinWord, m: int, **bounds) -> int:
    """Number of length-k lex-representatives w w' whose w' does not start with sigma_1..sigma_m."""
    if len(w) > k:
        return 0
    p = len(w)
    return sum(
        1
        for u in enumerate_lex_reps(n, k, **bounds)
        if u.letters[:p] == w.letters and (p == k or u.letters[p] > m)
    )


@lru_cache(maxsize=None)
def _prefix_braids(n: int, word: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Lex-representatives of all proper left divisors of the braid ``word``."""
    out = set()
    for u in _closure(word):
        for p in range(len(word)):
            out.add(min(_closure(u[:p])))
    return frozenset(out)


def brute_forbidden_min(w: ArtinWord, length_bound: int | None = None) -> frozenset[tuple[int, ...]]:
    """Minimal forbidden prefixes after the lex-representative ``w``.

    alpha is forbidden when w . lexrep(alpha) is not a lex-representative; it
    is minimal when no proper left divisor of alpha is forbidden.  Braids are
    scanned by increasing length up to ``length_bound`` (default ``n``).
    """
    n = w.n
    bound = n if length_bound is None else length_bound
    if not is_lex_rep(w):
        raise BraidError("not a lex-representative")
    if bound > DEFAULT_MAX_ENUM_LENGTH or n > DEFAULT_MAX_STRANDS + 1:
        raise BraidError("oracle bounds exceeded")
    if len(w) + bound > max_length():
        raise BraidError("word too long for oracle")
    found: set[tuple[int, ...]] = set()
    for length, level in enumerate(_lex_levels(n, bound)):
        if length == 0:
            continue
        for alpha in level:
            if found & _prefix_braids(n, alpha):
                continue
            if not _is_lex_rep(w.letters + alpha):
                found.add(alpha)
    return frozenset(found)


def permutation_braid_words(n: int) -> list[ArtinWord]:
    """One reduced word for every permutation braid, via bubble sort of each permutation."""
    check_strands(n)
    if n > 8:
        raise BraidError("oracle bounds exceeded")
    words = []
    for target in itertools.permutations(range(n)):
        # target[s] = final position of strand s; sort positions by applying adjacent swaps
        at = sorted(range(n), key=lambda s: target[s])  # strand at each final position
        letters = []
        current = list(range(n))
        for p in range(n):
            want = at[p]
            q = current.index(want)
            while q > p:
                letters.append(q)  # sigma_q swaps positions q, q+1 (1-based)
                current[q - 1], current[q] = current[q], current[q - 1]
                q -= 1
        words.append(ArtinWord(tuple(letters), n))
    return words
