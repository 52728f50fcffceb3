"""Uniform random positive braids by unranking lex-representatives.

Lex-representatives of length ``k`` are ranked ``1..x_{n,k}`` in
lexicographic order.  ``unrank`` finds the word with a given rank letter by
letter: with ``nu`` words still lexicographically after the target, the next
letter is the least ``m`` with ``count_with_prefix(w, m) <= nu``, found by
binary search (the counts decrease in ``m``).
"""

from __future__ import annotations

import hashlib
import random
import secrets
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .counting import count_with_prefix
from .growth import GrowthTables
from .prefixes import AdmissibleFunction, initial_f, step_f
from .words import ArtinWord, BraidError, check_strands


class RandomSource:
    """Seedable supplier of uniform integers of any size.

    ``uniform_below`` draws ``(N-1).bit_length()`` fresh bits and rejects values
    ``>= N``, so every outcome is exactly equally likely given uniform bits.
    """

    def __init__(self, seed: Optional[int] = None):
        self.seed = secrets.randbits(64) if seed is None else int(seed)
        self._rng = random.Random(self.seed)

    def bits(self, count: int) -> int:
        return self._rng.getrandbits(count) if count > 0 else 0

    def uniform_below(self, N: int) -> int:
        if N < 1:
            raise BraidError("uniform_below needs N >= 1")
        width = (N - 1).bit_length()
        while True:
            v = self.bits(width)
            if v < N:
                return v

    def spawn(self, index: int) -> RandomSource:
        """Independent child stream: seeded by sha256 of "<seed>:<index>"."""
        digest = hashlib.sha256(f"{self.seed}:{index}".encode()).digest()
        return RandomSource(int.from_bytes(digest[:16], "big"))


@dataclass(frozen=True)
class SampleRequest:
    n: int
    k: int
    count: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        check_strands(self.n)
        if self.k < 0:
            raise BraidError("k must be >= 0")
        if self.count < 1:
            raise BraidError("count must be >= 1")


CountFn = Callable[..., int]


class PrefixCounter:
    """``count_with_prefix`` with a bounded memo, shared by the draws of one
    request.  Small (n, k) revisit the same prefixes constantly; large ones
    almost never do, and the bound keeps memory flat for them."""

    def __init__(self, g: GrowthTables, max_entries: int = 1 << 16):
        self.g = g
        self.max_entries = max_entries
        self.memo: dict[tuple[int, tuple[int, ...], int], int] = {}

    def __call__(self, n: int, k: int, w: ArtinWord, m: int, f: Optional[AdmissibleFunction] = None) -> int:
        key = (k, w.letters, m)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        value = count_with_prefix(n, k, w, m, self.g, f=f)
        if len(self.memo) < self.max_entries:
            self.memo[key] = value
        return value


def _counter(g: GrowthTables, count: Optional[CountFn]) -> CountFn:
    if count is not None:
        return count
    return lambda n, k, w, m, f: count_with_prefix(n, k, w, m, g, f=f)


def unrank(n: int, k: int, r: int, g: GrowthTables, *, count: Optional[CountFn] = None) -> ArtinWord:
    """The ``r``-th (1-based) lex-representative of length ``k``.

    ``count(n, k, w, m, f)`` overrides the prefix counter, e.g. with a slower
    reference implementation; ``f`` is the admissible function of ``w``.
    """
    check_strands(n)
    g.extend(k)
    total = g.count(k)
    if not 1 <= r <= total:
        raise BraidError("rank out of range")
    count = _counter(g, count)
    nu = total - r
    letters: list[int] = []
    f: AdmissibleFunction = initial_f(n)
    for _ in range(k):
        w = ArtinWord(tuple(letters), n)
        lo, hi = max(w.last - 1, 1), n - 1
        seen = {n - 1: 0}  # every completion of w starts with some letter <= n-1
        while lo < hi:
            mid = (lo + hi) // 2
            c = seen[mid] = count(n, k, w, mid, f)
            if c <= nu:
                hi = mid
            else:
                lo = mid + 1
        if lo not in seen:
            seen[lo] = count(n, k, w, lo, f)
        nu -= seen[lo]
        letters.append(lo)
        f = step_f(f, lo)
        if f is None:
            raise BraidError(f"internal error: unranking produced a non lex-representative {letters}")
    return ArtinWord(tuple(letters), n)


def rank(w: ArtinWord, g: GrowthTables, *, count: Optional[CountFn] = None) -> int:
    """Inverse of ``unrank``."""
    n, k = w.n, len(w)
    g.extend(k)
    count = _counter(g, count)
    f: Optional[AdmissibleFunction] = initial_f(n)
    after = 0
    for p, letter in enumerate(w):
        nxt = step_f(f, letter)
        if nxt is None:
            raise BraidError("not a lex-representative")
        after += count(n, k, w[:p], letter, f)
        f = nxt
    return g.count(k) - after


def sample_one(
    n: int, k: int, g: GrowthTables, rng: RandomSource, *, count: Optional[CountFn] = None
) -> ArtinWord:
    g.extend(k)
    return unrank(n, k, 1 + rng.uniform_below(g.count(k)), g, count=count)


def sample(req: SampleRequest, g: GrowthTables, rng: Optional[RandomSource] = None) -> list[ArtinWord]:
    """``req.count`` independent uniform draws from one stream."""
    if g.n != req.n:
        raise BraidError("alphabet mismatch")
    rng = rng if rng is not None else RandomSource(req.seed)
    counter = PrefixCounter(g)
    return [sample_one(req.n, req.k, g, rng, count=counter) for _ in range(req.count)]


def _draw_split(args: tuple[int, int, int, int]) -> ArtinWord:
    n, k, seed, index = args
    return sample_one(n, k, GrowthTables.build(n, k), RandomSource(seed).spawn(index))


def sample_batch(req: SampleRequest, g: GrowthTables, *, workers: int = 1) -> list[ArtinWord]:
    """Draw ``i`` uses the child stream ``RandomSource(seed).spawn(i)``, so the
    output is the same for any number of workers."""
    if g.n != req.n:
        raise BraidError("alphabet mismatch")
    seed = RandomSource(req.seed).seed
    if workers <= 1:
        root = RandomSource(seed)
        counter = PrefixCounter(g)
        return [sample_one(req.n, req.k, g, root.spawn(i), count=counter) for i in range(req.count)]
    jobs = [(req.n, req.k, seed, i) for i in range(req.count)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_draw_split, jobs, chunksize=max(1, req.count // (4 * workers))))


def naive_sample(n: int, k: int, rng: RandomSource) -> ArtinWord:
    """k independent uniform letters: uniform on words, biased on braids."""
    check_strands(n)
    return ArtinWord(tuple(1 + rng.uniform_below(n - 1) for _ in range(k)), n)
