"""Counting lex-representatives with a given prefix.

``count_with_prefix(n, k, w, m, g)`` is the number of length-``k``
lex-representatives ``w w'`` where ``w'`` does not start with any of
``sigma_1 .. sigma_m``.  By inclusion-exclusion over the minimal forbidden
prefixes ``F`` (with the atoms ``sigma_1..sigma_m`` added) this is

    sum over S subset of F of (-1)^|S| * x[k - |w| - |lcm(S)|].

``reference_count`` evaluates that sum subset by subset.  ``count_with_prefix``
never enumerates subsets: it sweeps a window ``[a, b]`` of strands from the
last letter of ``w`` out to ``[1, n]`` and keeps, for every subset of the
elements inside the window, only the lcm length and the displacement of the
two boundary strands, aggregated with signs in a 3-D table ``T[l, r, s]``.
"""

from __future__ import annotations

from collections import defaultdict
from math import comb
from typing import Iterator, Optional

import numpy as np
from numpy.lib.stride_tricks import as_strided

from .growth import GrowthTables
from .perm_braids import PermBraid, from_word, identity, lcm
from .prefixes import AdmissibleFunction, f_for_word, restrict_m, restrict_m_f
from .words import ArtinWord, BraidError

REFERENCE_SUBSET_BOUND = 20

# |T| <= 2^(|F|-1) <= 2^(n-2): every entry is a signed count over a family of
# subsets of F, so it is bounded by the larger of its even/odd parts.
INT64_MAX_STRANDS = 64

NEW_NONE, NEW_ATOM, NEW_RUN = 0, 1, 2


def _sheared(T: np.ndarray) -> np.ndarray:
    """Read-only view ``W[l, i, s] = T[l - i - 1, i, s]``, zero where ``l <= i``.

    Adding an element whose lcm contribution grows the length by ``i + 1``
    shifts row ``i`` down the length axis by ``i + 1``; the padded strided view
    does that for every ``i`` at once.
    """
    L1, R1, S1 = T.shape
    P = np.zeros((R1 + L1, R1, S1), dtype=T.dtype)
    P[R1:] = T
    st0, st1, st2 = P.strides
    return as_strided(P[R1 - 1:], shape=(L1, R1, S1), strides=(st0, st1 - st0, st2), writeable=False)


class CountCube:
    """Signed table ``T[l, r, s]`` over the current window ``[a, b]``.

    ``T[l, r, s]`` sums ``(-1)^|S|`` over subsets ``S`` of the forbidden
    prefixes inside the window whose lcm has length ``l`` and moves strand
    ``a`` to ``a + r`` and strand ``b`` to ``b - s``.

    The ``r`` and ``s`` axes cover ``0..R`` and ``0..S``.  In sparse mode the
    box is grown only as far as an update needs and trailing all-zero planes
    are trimmed after every step; dense mode keeps all ``n`` values.
    """

    def __init__(self, n: int, length_cap: int, start: int, *, sparse: bool = True, check_bounds: bool = False):
        self.n = n
        self.L = length_cap
        self.a = self.b = start
        self.alpha = 0
        self.sparse = sparse
        self.check_bounds = check_bounds
        self.dtype = np.int64 if n <= INT64_MAX_STRANDS else object
        size = 1 if sparse else n
        self.T = np.zeros((length_cap + 1, size, size), dtype=self.dtype)
        self.T[0, 0, 0] = 1

    @property
    def rv(self) -> range:
        return range(self.T.shape[1])

    @property
    def sv(self) -> range:
        return range(self.T.shape[2])

    @property
    def occupied_r(self) -> frozenset[int]:
        return frozenset(int(r) for r in np.nonzero(np.any(self.T != 0, axis=(0, 2)))[0])

    @property
    def occupied_s(self) -> frozenset[int]:
        return frozenset(int(s) for s in np.nonzero(np.any(self.T != 0, axis=(0, 1)))[0])

    def entry(self, l: int, r: int, s: int) -> int:
        if r not in self.rv or s not in self.sv or not 0 <= l <= self.L:
            return 0
        return int(self.T[l, r, s])

    def entries(self) -> dict[tuple[int, int, int], int]:
        return {(int(l), int(r), int(s)): int(self.T[l, r, s]) for l, r, s in zip(*np.nonzero(self.T))}

    def totals(self) -> list[int]:
        """``T_l`` for each length ``l``: the sum over all ``r`` and ``s``."""
        return [int(v) for v in self.T.sum(axis=(1, 2))]

    def _finish(self, T: np.ndarray) -> None:
        if self.sparse:
            R, S = T.shape[1], T.shape[2]
            while R > 1 and not T[:, R - 1, :S].any():
                R -= 1
            while S > 1 and not T[:, :R, S - 1].any():
                S -= 1
            if (R, S) != T.shape[1:]:
                T = T[:, :R, :S]
        self.T = T
        if self.check_bounds and T.size:
            peak = int(np.max(np.abs(T)))
            if peak >= 2 ** self.n:
                raise AssertionError(f"T entry {peak} exceeds 2^{self.n}")

    def _atom_update(self, T: np.ndarray, old_alpha: int) -> np.ndarray:
        """Add the atom on the side of axis 1 (transpose for the other side).

        Subsets without the atom collapse axis 1 to 0.  With it the lcm gains
        ``i + 1`` letters, axis 1 moves from ``i`` to ``i + 1`` and the far
        boundary strand is pushed one further iff ``i + s >= old_alpha``.
        """
        L1, R1, S1 = T.shape
        # wide window: no subset pushes the far boundary strand
        wide = old_alpha >= R1 + S1 - 1
        if self.sparse:
            R2, S2 = R1 + 1, S1 if wide else S1 + 1
        else:
            R2, S2 = R1, S1
        T2 = np.zeros((L1, R2, S2), dtype=self.dtype)
        T2[:, 0, :S1] = T.sum(axis=1)
        W = _sheared(T)
        rt = min(R1, R2 - 1)
        if wide:
            T2[:, 1:rt + 1, :S1] -= W[:, :rt]
            return T2
        low = np.arange(S1)[None, :] < old_alpha - np.arange(R1)[:, None]
        st = min(S1, S2 - 1)
        zero = self.dtype(0) if self.dtype is np.int64 else 0
        T2[:, 1:rt + 1, :S1] -= np.where(low[:rt], W[:, :rt], zero)
        T2[:, 1:rt + 1, 1:st + 1] -= np.where(low[:rt, :st], zero, W[:, :rt, :st])
        return T2

    def extend_left(self, add_atom: bool) -> None:
        """Window ``[a, b] -> [a-1, b]``, optionally adding the atom sigma_{a-1}."""
        if self.a <= 1:
            raise BraidError("window cannot extend left of strand 1")
        old_alpha = self.alpha
        self.a -= 1
        self.alpha += 1
        T = self.T
        if add_atom:
            self._finish(self._atom_update(T, old_alpha))
        elif not (self.sparse and T.shape[1] == 1):
            T2 = np.zeros((T.shape[0], 1 if self.sparse else T.shape[1], T.shape[2]), dtype=self.dtype)
            T2[:, 0, :] = T.sum(axis=1)
            self._finish(T2)

    def extend_right(self, new: int) -> None:
        """Window ``[a, b] -> [a, b+1]``, optionally adding sigma_b (NEW_ATOM)
        or the run sigma_b ... sigma_a (NEW_RUN)."""
        if self.b >= self.n:
            raise BraidError("window cannot extend right of strand n")
        old_alpha = self.alpha
        self.b += 1
        self.alpha += 1
        T = self.T
        L1, R1, S1 = T.shape
        if new == NEW_ATOM:
            flipped = self._atom_update(T.transpose(0, 2, 1), old_alpha)
            self._finish(np.ascontiguousarray(flipped.transpose(0, 2, 1)))
        elif new == NEW_RUN:
            # lcm with sigma_b...sigma_a: length += b-a+1, r -> r+1, strand b+1 lands on a
            shift = self.alpha
            R2, S2 = (R1 + 1, shift + 1) if self.sparse else (R1, S1)
            T2 = np.zeros((L1, R2, S2), dtype=self.dtype)
            collapsed = T.sum(axis=2)
            T2[:, :R1, 0] = collapsed
            if shift < L1:
                rt = min(R1, R2 - 1)
                T2[shift:, 1:rt + 1, shift] -= collapsed[: L1 - shift, :rt]
            self._finish(T2)
        elif not (self.sparse and S1 == 1):
            T2 = np.zeros((L1, R1, 1 if self.sparse else S1), dtype=self.dtype)
            T2[:, :, 0] = T.sum(axis=2)
            self._finish(T2)


def advance_window(cube: CountCube, direction: str, new_element: Optional[ArtinWord] = None) -> CountCube:
    """One scan step; ``new_element`` is the forbidden prefix entering the window."""
    a, b = cube.a, cube.b
    letters = None if new_element is None else new_element.letters
    if direction == "left":
        if letters is not None and letters != (a - 1,):
            raise BraidError("malformed forbidden set")
        cube.extend_left(letters is not None)
    elif direction == "right":
        if letters is None:
            kind = NEW_NONE
        elif letters == (b,):
            kind = NEW_ATOM
        elif letters == tuple(range(b, a - 1, -1)):
            kind = NEW_RUN
        else:
            raise BraidError("malformed forbidden set")
        cube.extend_right(kind)
    else:
        raise BraidError(f"unknown scan direction {direction!r}")
    return cube


def _check_m(n: int, w: ArtinWord, m: int) -> None:
    if not max(w.last - 1, 1) <= m <= n - 1:
        raise BraidError("m out of supported range")


def scan_plan(n: int, j: int, fm: AdmissibleFunction) -> Iterator[tuple[str, int, int, int]]:
    """Steps ``(direction, kind, a, b)`` taking the window from ``[j, j]`` to
    ``[1, n]``; ``a, b`` is the window before the step.

    ``fm[i-1] = v > 0`` encodes the run sigma_i ... sigma_v.  The window grows
    left when it already reaches strand ``n`` or when the run starting at
    ``b`` reaches left of ``a``; otherwise it grows right.
    """
    by_tail: dict[int, list[int]] = defaultdict(list)
    for i, v in enumerate(fm, start=1):
        if v > 0:
            by_tail[v].append(i)
    a = b = j
    while a != 1 or b != n:
        if b == n or 0 < fm[b - 1] < a:
            entering = [i for i in by_tail.get(a - 1, ()) if i <= b - 1]
            if entering and entering != [a - 1]:
                raise BraidError("malformed forbidden set")
            yield "left", NEW_ATOM if entering else NEW_NONE, a, b
            a -= 1
        else:
            v = fm[b - 1]
            if v == 0:
                kind = NEW_NONE
            elif v == b:
                kind = NEW_ATOM
            elif v == a:
                kind = NEW_RUN
            else:
                raise BraidError("malformed forbidden set")
            yield "right", kind, a, b
            b += 1


def element_for(direction: str, kind: int, a: int, b: int, n: int) -> Optional[ArtinWord]:
    """The forbidden prefix entering the window ``[a, b]`` in a step."""
    if kind == NEW_NONE:
        return None
    if direction == "left":
        return ArtinWord((a - 1,), n)
    if kind == NEW_ATOM:
        return ArtinWord((b,), n)
    return ArtinWord(tuple(range(b, a - 1, -1)), n)


def update_rule(direction: str, kind: int, a: int, b: int, l: int, r: int, s: int) -> tuple[int, int, int]:
    """``(l, r, s)`` after joining an lcm with the entering element.

    Scalar form of the update the cube applies in bulk; ``a, b`` is the
    window before the step.
    """
    alpha = b - a
    if direction == "left":
        if kind == NEW_NONE:
            return l, 0, s
        return l + r + 1, r + 1, s if r + s < alpha else s + 1
    if kind == NEW_NONE:
        return l, r, 0
    if kind == NEW_ATOM:
        return l + s + 1, r if r + s < alpha else r + 1, s + 1
    return l + alpha + 1, r + 1, alpha + 1


def scan(n: int, length_cap: int, j: int, fm: AdmissibleFunction, *, sparse: bool = True,
         check_bounds: bool = False) -> CountCube:
    """Run the window sweep for the restricted forbidden set ``fm``; ``j`` is
    the last letter of the prefix word, or 1 for the empty word."""
    cube = CountCube(n, length_cap, j, sparse=sparse, check_bounds=check_bounds)
    for direction, kind, _, _ in scan_plan(n, j, fm):
        if direction == "left":
            cube.extend_left(kind == NEW_ATOM)
        else:
            cube.extend_right(kind)
    return cube


def count_with_prefix(
    n: int,
    k: int,
    w: ArtinWord,
    m: int,
    g: GrowthTables,
    *,
    f: Optional[AdmissibleFunction] = None,
    sparse: bool = True,
    check_bounds: bool = False,
) -> int:
    """x_{n,k}(w, m).  ``f`` may carry a precomputed f_w to skip recomputing it."""
    if w.n != n or g.n != n:
        raise BraidError("alphabet mismatch")
    _check_m(n, w, m)
    t = len(w)
    if t > k:
        return 0
    if f is None:
        f = f_for_word(w)
        if f is None:
            return 0
    j = w.last
    fm = restrict_m_f(f, j, m)
    cap = min(k - t, comb(n, 2))
    cube = scan(n, cap, j if t else 1, fm, sparse=sparse, check_bounds=check_bounds)
    totals = cube.totals()
    return sum(tl * g.count(k - t - l) for l, tl in enumerate(totals) if tl)


def reference_count(
    n: int, k: int, w: ArtinWord, m: int, g: GrowthTables, *, bound: int = REFERENCE_SUBSET_BOUND
) -> int:
    """The same count by explicit enumeration of subsets of the forbidden set."""
    if w.n != n or g.n != n:
        raise BraidError("alphabet mismatch")
    _check_m(n, w, m)
    t = len(w)
    if t > k:
        return 0
    f = f_for_word(w)
    if f is None:
        return 0
    F = [from_word(x) for x in restrict_m(f, w.last, m)]
    if len(F) > bound:
        raise BraidError("too many forbidden prefixes for reference path")
    total = 0

    def walk(start: int, join: PermBraid, sign: int) -> None:
        nonlocal total
        total += sign * g.count(k - t - join.length)
        for i in range(start, len(F)):
            walk(i + 1, lcm(join, F[i]), -sign)

    walk(0, identity(n), 1)
    return total
