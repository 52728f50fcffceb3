from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidgen import oracle
from braidgen.growth import GrowthTables
from braidgen.words import ArtinWord, BraidError


def W(n, *letters):
    return ArtinWord(tuple(letters), n)


def test_normalize_examples():
    assert oracle.normalize(W(3, 2, 1, 2)).letters == (1, 2, 1)
    assert oracle.normalize(W(4, 3, 1)).letters == (1, 3)


def test_enumerate_examples():
    reps = oracle.enumerate_lex_reps(4, 3)
    assert len(reps) == 19
    assert reps[0].letters == (1, 1, 1) and reps[-1].letters == (3, 3, 3)
    assert len(oracle.enumerate_lex_reps(4, 2)) == 8
    assert [w.letters for w in oracle.enumerate_lex_reps(2, 6)] == [(1,) * 6]


def test_enumeration_is_sorted_and_counts_match_growth():
    for n in (2, 3, 4, 5):
        g = GrowthTables.build(n, 7)
        for k in range(8):
            reps = oracle.enumerate_lex_reps(n, k)
            assert len(reps) == g.count(k)
            assert [w.letters for w in reps] == sorted(w.letters for w in reps)


def test_forbidden_examples():
    assert oracle.brute_forbidden_min(W(5, 4, 3)) == {(1,), (2, 3), (4,)}
    assert oracle.brute_forbidden_min(W(5, 4)) == {(1,), (2,), (3, 4)}
    assert oracle.brute_forbidden_min(W(5)) == frozenset()
    with pytest.raises(BraidError, match="not a lex-representative"):
        oracle.brute_forbidden_min(W(4, 2, 1, 2))


def test_closure_sizes_for_bias_claim():
    assert len(oracle.closure(W(4, 1, 2, 1, 3, 2, 1))) == 16
    assert len(oracle.closure(W(4, *(1,) * 6))) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.lists(st.integers(1, n - 1), max_size=8).map(lambda xs: ArtinWord(tuple(xs), n))))
def test_normalize_idempotent_and_length_preserving(w):
    nf = oracle.normalize(w)
    assert len(nf) == len(w)
    assert oracle.normalize(nf) == nf
    assert oracle.is_lex_rep(nf)
    assert all(len(u) == len(w) for u in oracle.closure(w))


def test_permutation_braid_words():
    words = oracle.permutation_braid_words(4)
    assert len(words) == 24
    assert max(len(w) for w in words) == 6


def test_bounds():
    with pytest.raises(BraidError, match="word too long for oracle"):
        oracle.normalize(W(3, *(1,) * 13))
    with pytest.raises(BraidError, match="oracle bounds exceeded"):
        oracle.enumerate_lex_reps(6, 3)
    assert len(oracle.enumerate_lex_reps(6, 2, max_n=6)) == GrowthTables.build(6, 2).count(2)


def test_env_override(monkeypatch):
    monkeypatch.setenv("BRAIDGEN_ORACLE_MAX", "3")
    with pytest.raises(BraidError, match="word too long for oracle"):
        oracle.normalize(W(3, 1, 1, 1, 1))
    monkeypatch.setenv("BRAIDGEN_ORACLE_MAX", "many")
    with pytest.raises(BraidError, match="must be an integer"):
        oracle.normalize(W(3, 1))
