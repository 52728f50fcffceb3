"""Minimal forbidden prefixes, encoded by admissible functions.

An admissible function is stored as a plain tuple ``f`` of length ``n-1`` with
``f[i-1]`` holding the value at generator index ``i``.  A value ``v >= 1``
stands for the descending run ``sigma_i ... sigma_v``, ``-1`` for the
ascending pair ``sigma_{i-1} sigma_i`` and ``0`` for nothing.

Functions that can hit a non lex-representative return ``None`` ("blocked");
that is an ordinary outcome, not an error.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .words import ArtinWord, BraidError, check_strands, run

AdmissibleFunction = tuple[int, ...]


def initial_f(n: int) -> AdmissibleFunction:
    return (0,) * (check_strands(n) - 1)


def is_admissible(f: AdmissibleFunction) -> bool:
    if not f or f[0] == -1:
        return False
    return all(-1 <= v <= i for i, v in enumerate(f, start=1)) and sum(v == -1 for v in f) <= 1


def step_f(f: AdmissibleFunction, j: int) -> Optional[AdmissibleFunction]:
    """The function after appending sigma_j, or None if sigma_j is forbidden."""
    fj = f[j - 1]
    if fj == j:
        return None
    g = list(range(1, j - 1))
    if j >= 2:
        g.append(fj if fj > 0 else 0)
        g.append(0 if fj == j - 1 else -1)
    else:
        g.append(0)
    for i in range(j + 1, len(f) + 1):
        fi = f[i - 1]
        if fi == -1:
            g.append(i)
        elif fi == j + 1:
            g.append(j)
        else:
            g.append(fi)
    return tuple(g)


def f_for_word(w: ArtinWord | Iterable[int], n: int | None = None) -> Optional[AdmissibleFunction]:
    """f_w, or None when ``w`` is not a lex-representative."""
    if isinstance(w, ArtinWord):
        n = w.n
    elif n is None:
        raise BraidError("strand count required for a bare letter sequence")
    f: Optional[AdmissibleFunction] = initial_f(n)
    for j in w:
        f = step_f(f, j)
        if f is None:
            return None
    return f


def f_to_set(f: AdmissibleFunction) -> tuple[ArtinWord, ...]:
    """The forbidden prefixes encoded by ``f``, ordered by generator index."""
    n = len(f) + 1
    out = []
    for i, v in enumerate(f, start=1):
        if v > 0:
            out.append(run(i, v, n))
        elif v == -1:
            out.append(ArtinWord((i - 1, i), n))
    return tuple(out)


def restrict_m_f(f: AdmissibleFunction, j: int, m: int) -> AdmissibleFunction:
    """Admissible function of the minimal elements of {sigma_1..sigma_m} plus F_f.

    ``j`` is the last letter of the word (0 for the empty word).  Only the
    range ``m >= max(j-1, 1)`` is supported; there every surviving element
    is a descending run.
    """
    n = len(f) + 1
    if not (max(j - 1, 1) <= m <= n - 1):
        raise BraidError("m out of supported range")
    return tuple(range(1, m + 1)) + tuple(max(v, 0) for v in f[m:])


def restrict_m(f: AdmissibleFunction, j: int, m: int) -> tuple[ArtinWord, ...]:
    # An element sigma_i...sigma_v (resp. sigma_{i-1}sigma_i) has exactly one
    # atom prefix, sigma_i (resp. sigma_{i-1}); the (m >= j-1) precondition puts
    # any ascending pair at or below m, so dropping f < 0 is exact.
    return f_to_set(restrict_m_f(f, j, m))


def _interval(i: int, j: int) -> list[int]:
    step = 1 if j >= i else -1
    return list(range(i, j + step, step))


def build_witness(S: Iterable[int], n: int) -> ArtinWord:
    """The word [n-1,1][1,i_1][i_1,1]...[1,i_r][i_r,1] for S = {i_1 > ... > i_r}.

    Distinct subsets of {1..n-2} give distinct forbidden prefix sets.
    """
    check_strands(n)
    indices = sorted(set(S), reverse=True)
    if any(not 1 <= i <= n - 2 for i in indices):
        raise BraidError(f"witness indices must lie in 1..{n - 2}")
    letters = _interval(n - 1, 1)
    for i in indices:
        letters += _interval(1, i) + _interval(i, 1)
    return ArtinWord(tuple(letters), n)


def witness_f(S: Iterable[int], n: int) -> AdmissibleFunction:
    """The admissible function predicted for ``build_witness(S, n)``."""
    S = set(S)
    return tuple(0 if j == 1 else 1 if j - 1 in S else j for j in range(1, n))
