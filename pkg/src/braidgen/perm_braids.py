"""Permutation braids, identified with the permutation they induce on the strands.

A permutation braid is a positive braid in which any two strands cross at most
once, so it is determined by ``pi`` where ``pi[i-1]`` is the final position of
the strand that starts at position ``i`` (both 1-based).  Words are read left
to right; ``sigma_i`` crosses the strands currently at positions ``i`` and
``i+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .words import ArtinWord, BraidError, check_strands


@dataclass(frozen=True)
class PermBraid:
    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        check_strands(len(self.pi))
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise BraidError(f"not a permutation of 1..{len(self.pi)}: {self.pi}")

    @property
    def n(self) -> int:
        return len(self.pi)

    def __len__(self) -> int:
        return self.length

    @cached_property
    def length(self) -> int:
        pi = self.pi
        return sum(1 for s in range(len(pi)) for t in range(s + 1, len(pi)) if pi[s] > pi[t])

    def image(self, strand: int) -> int:
        return self.pi[strand - 1]

    def crossings(self) -> frozenset[tuple[int, int]]:
        """Pairs of strands (s, t), s < t, that cross."""
        pi = self.pi
        n = len(pi)
        return frozenset(
            (s + 1, t + 1) for s in range(n) for t in range(s + 1, n) if pi[s] > pi[t]
        )

    def inverse_pi(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for s, p in enumerate(self.pi):
            inv[p - 1] = s + 1
        return tuple(inv)

    def to_word(self) -> ArtinWord:
        """The lexicographically least word for this braid (smallest atom prefix first)."""
        letters = []
        pi = list(self.pi)
        n = len(pi)
        while True:
            for i in range(1, n):
                if pi[i - 1] > pi[i]:
                    break
            else:
                return ArtinWord(tuple(letters), n)
            letters.append(i)
            # peel sigma_i off the front: strands i and i+1 are swapped at the start
            pi[i - 1], pi[i] = pi[i], pi[i - 1]


def identity(n: int) -> PermBraid:
    return PermBraid(tuple(range(1, check_strands(n) + 1)))


def delta(n: int) -> PermBraid:
    """The half twist: every pair of strands crosses once."""
    return PermBraid(tuple(range(check_strands(n), 0, -1)))


def from_word(w: ArtinWord) -> PermBraid:
    n = w.n
    at = list(range(1, n + 1))  # at[p-1] = strand currently at position p
    for i in w.letters:
        left, right = at[i - 1], at[i]
        if left > right:
            raise BraidError("not a permutation braid")
        at[i - 1], at[i] = right, left
    pi = [0] * n
    for p, strand in enumerate(at, start=1):
        pi[strand - 1] = p
    return PermBraid(tuple(pi))


def atom_prefixes(x: PermBraid) -> frozenset[int]:
    pi = x.pi
    return frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def _same_n(x: PermBraid, y: PermBraid) -> None:
    if x.n != y.n:
        raise BraidError("alphabet mismatch")


def multiply(x: PermBraid, y: PermBraid) -> PermBraid:
    """The product x*y; raises unless it is again a permutation braid."""
    _same_n(x, y)
    z = PermBraid(tuple(y.pi[p - 1] for p in x.pi))
    if z.length != x.length + y.length:
        raise BraidError("not a permutation braid")
    return z


def is_prefix(x: PermBraid, y: PermBraid) -> bool:
    """x is a left divisor of y: y = x*c for a positive c."""
    _same_n(x, y)
    inv_x = x.inverse_pi()
    c = PermBraid(tuple(y.pi[s - 1] for s in inv_x))
    return c.length == y.length - x.length


def lcm(x: PermBraid, y: PermBraid) -> PermBraid:
    """Least common multiple for the prefix order.

    The crossing set of the join is the transitive closure of the union of the
    crossing sets, read as the relation "t ends left of s" for crossing s < t.
    """
    _same_n(x, y)
    n = x.n
    ahead = [0] * n  # bit u of ahead[v]: strand v ends left of strand u
    for s, t in x.crossings() | y.crossings():
        ahead[t - 1] |= 1 << (s - 1)
    for k in range(n):
        bit = 1 << k
        reach = ahead[k]
        for v in range(n):
            if ahead[v] & bit:
                ahead[v] |= reach
    pi = []
    for s in range(n):
        before = sum(1 for u in range(s) if not (ahead[s] >> u) & 1)
        before += sum(1 for u in range(s + 1, n) if (ahead[u] >> s) & 1)
        pi.append(before + 1)
    return PermBraid(tuple(pi))


def brute_complement(a: PermBraid, b: PermBraid) -> PermBraid:
    """a\\b: the z with a*z = lcm(a, b)."""
    join = lcm(a, b)
    inv_a = a.inverse_pi()
    return PermBraid(tuple(join.pi[s - 1] for s in inv_a))


def atom_complement(j: int, beta: ArtinWord) -> ArtinWord:
    """sigma_j\\beta for the shapes that occur in minimal forbidden prefix sets.

    ``beta`` is an ascending pair sigma_{i-1} sigma_i or a descending run
    sigma_i sigma_{i-1} ... sigma_m (a single atom is the run with m = i).
    """
    n = beta.n
    if not 1 <= j <= n - 1:
        raise BraidError(f"generator out of range: {j} (n={n})")
    L = beta.letters
    if len(L) == 2 and L[1] == L[0] + 1:
        i = L[1]
        if j == i - 2:
            out = (i - 1, i, i - 2, i - 1)
        elif j == i - 1:
            out = (i,)
        elif j == i + 1:
            out = (i - 1, i, i + 1)
        else:
            out = L
        return ArtinWord(out, n)
    if L and all(L[p + 1] == L[p] - 1 for p in range(len(L) - 1)):
        i, m = L[0], L[-1]
        if j == m - 1:
            out = L + (m - 1,)
        elif j == i:
            out = L[1:]
        elif j == i + 1:
            out = tuple(q for p in range(i, m - 1, -1) for q in (p, p + 1))
        else:
            out = L
        return ArtinWord(out, n)
    raise BraidError("unsupported complement shape")
