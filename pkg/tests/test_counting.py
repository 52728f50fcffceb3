from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidgen import oracle
from braidgen.counting import (
    NEW_ATOM,
    NEW_NONE,
    NEW_RUN,
    CountCube,
    advance_window,
    count_with_prefix,
    reference_count,
    scan,
    scan_plan,
    update_rule,
)
from braidgen.growth import GrowthTables
from braidgen.perm_braids import from_word, identity, lcm
from braidgen.prefixes import f_for_word, initial_f, restrict_m_f, step_f
from braidgen.words import ArtinWord, BraidError


def W(n, *letters):
    return ArtinWord(tuple(letters), n)


G4 = GrowthTables.build(4, 40)


@pytest.mark.parametrize(
    "w, m, expected",
    [((), 2, 4), ((3,), 2, 2), ((3, 2), 2, 0), ((3, 2), 1, 1), ((), 3, 0)],
)
def test_worked_example(w, m, expected):
    assert count_with_prefix(4, 3, W(4, *w), m, G4) == expected
    assert reference_count(4, 3, W(4, *w), m, G4) == expected


def test_degenerate_inputs():
    assert count_with_prefix(4, 2, W(4, 3, 2, 1), 1, G4) == 0
    assert count_with_prefix(4, 3, W(4, 3, 2, 1), 3, G4) == 1
    assert count_with_prefix(4, 3, W(4, 2, 1, 2), 3, G4) == 0
    with pytest.raises(BraidError, match="m out of supported range"):
        count_with_prefix(4, 3, W(4, 3), 1, G4)
    with pytest.raises(BraidError, match="m out of supported range"):
        count_with_prefix(4, 3, W(4), 4, G4)


def test_example_word_in_b5():
    g = GrowthTables.build(5, 6)
    w = W(5, 4, 3, 2, 2, 1)
    value = count_with_prefix(5, 6, w, 1, g)
    assert value == reference_count(5, 6, w, 1, g) == oracle.count_with_prefix(5, 6, w, 1)


def test_empty_scan_keeps_unit_entry():
    cube = CountCube(4, 3, 1)
    advance_window(cube, "right")
    assert cube.entries() == {(0, 0, 0): 1}


def test_scan_for_worked_example_totals():
    f = restrict_m_f(f_for_word(W(4, 3)), 3, 2)
    cube = scan(4, 2, 3, f)
    totals = cube.totals()
    assert sum(t * G4.count(2 - l) for l, t in enumerate(totals)) == 2


def test_advance_window_rejects_malformed_elements():
    cube = CountCube(5, 4, 3)
    with pytest.raises(BraidError, match="malformed forbidden set"):
        advance_window(cube, "left", W(5, 1))
    with pytest.raises(BraidError, match="malformed forbidden set"):
        advance_window(cube, "right", W(5, 2))


def test_scan_plan_rejects_malformed_set():
    # the run sigma_3 sigma_2 meets the window [1, 3] ending strictly inside it
    with pytest.raises(BraidError, match="malformed forbidden set"):
        list(scan_plan(5, 1, (0, 0, 2, 0)))
    assert [step[:2] for step in scan_plan(5, 3, (0, 0, 2, 0))][:2] == [("left", NEW_NONE), ("right", NEW_RUN)]


def displacement(beta, a, b):
    return beta.image(a) - a, b - beta.image(b)


@pytest.mark.parametrize(
    "direction, kind, a, b, subset, element",
    [
        ("left", NEW_ATOM, 3, 4, (), (2,)),  # r + s < alpha
        ("left", NEW_ATOM, 3, 4, ((3,),), (2,)),  # r + s > alpha
        ("left", NEW_ATOM, 2, 2, (), (1,)),  # one-strand window: r + s = alpha = 0
        ("right", NEW_ATOM, 2, 3, (), (3,)),
        ("right", NEW_ATOM, 2, 3, ((2,),), (3,)),
        ("right", NEW_ATOM, 3, 3, (), (3,)),
        ("right", NEW_RUN, 2, 3, ((2,),), (3, 2)),
        ("right", NEW_RUN, 2, 4, ((2,), (3,)), (4, 3, 2)),
    ],
)
def test_update_rule_cases(direction, kind, a, b, subset, element):
    n = 6
    beta = identity(n)
    for x in subset:
        beta = lcm(beta, from_word(W(n, *x)))
    r, s = displacement(beta, a, b)
    joined = lcm(beta, from_word(W(n, *element)))
    na, nb = (a - 1, b) if direction == "left" else (a, b + 1)
    assert update_rule(direction, kind, a, b, beta.length, r, s) == (joined.length, *displacement(joined, na, nb))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_agrees_with_oracle_exhaustive(n):
    g = GrowthTables.build(n, 7)
    for k in range(8):
        for w in oracle.lex_reps_up_to(n, k):
            for m in range(max(w.last - 1, 1), n):
                expected = oracle.count_with_prefix(n, k, w, m)
                assert count_with_prefix(n, k, w, m, g) == expected
                assert count_with_prefix(n, k, w, m, g, sparse=False, check_bounds=True) == expected
                assert reference_count(n, k, w, m, g) == expected


def prefix_classes(n, max_length):
    """One representative word per (f_w, last letter), with its minimal length.

    Both counters see a word only through f_w, its last letter and k - |w|.
    """
    reps = {}
    frontier = {(initial_f(n), 0): ()}
    for length in range(max_length + 1):
        nxt = {}
        for (f, j), letters in frontier.items():
            reps.setdefault((f, j), letters)
            for letter in range(1, n):
                g = step_f(f, letter)
                if g is not None and (g, letter) not in reps:
                    nxt.setdefault((g, letter), letters + (letter,))
        frontier = nxt
    return reps.values()


@pytest.mark.parametrize("n", [5, 6])
def test_agrees_with_reference_exhaustive(n):
    g = GrowthTables.build(n, 10)
    for letters in prefix_classes(n, 10):
        w = ArtinWord(letters, n)
        f = f_for_word(w)
        for k in range(len(w), 11):
            for m in range(max(w.last - 1, 1), n):
                assert count_with_prefix(n, k, w, m, g, f=f) == reference_count(n, k, w, m, g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_boundary_identity(n):
    g = GrowthTables.build(n, 7)
    for k in range(8):
        reps = oracle.enumerate_lex_reps(n, k)
        for m in range(1, n):
            head = sum(1 for w in reps if k and w.letters[0] <= m)
            assert count_with_prefix(n, k, W(n), m, g) + head == g.count(k)


def random_rep(n, length, draw):
    f, letters = initial_f(n), []
    while len(letters) < length:
        j = draw(st.integers(1, n - 1))
        g = step_f(f, j)
        if g is not None:
            f, letters = g, letters + [j]
    return ArtinWord(tuple(letters), n), f


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.integers(0, 30), st.data())
def test_monotone_in_m_and_dense_agrees(n, k, data):
    g = GrowthTables.build(n, 30)
    w, f = random_rep(n, data.draw(st.integers(0, k)), data.draw)
    values = [count_with_prefix(n, k, w, m, g, f=f) for m in range(max(w.last - 1, 1), n)]
    assert values == sorted(values, reverse=True)
    dense = [count_with_prefix(n, k, w, m, g, f=f, sparse=False, check_bounds=True) for m in range(max(w.last - 1, 1), n)]
    assert dense == values


def test_entry_bound_on_long_scans():
    import random

    rng = random.Random(11)
    n = 24
    g = GrowthTables.build(n, 80)
    f, letters = initial_f(n), []
    while len(letters) < 40:
        j = rng.randint(1, n - 1)
        nxt = step_f(f, j)
        if nxt is not None:
            f, letters = nxt, letters + [j]
    for t in (0, 10, 25, 40):
        w = ArtinWord(tuple(letters[:t]), n)
        assert f_for_word(w) is not None
        for m in range(max(w.last - 1, 1), n):
            count_with_prefix(n, 80, w, m, g, check_bounds=True)
            count_with_prefix(n, 80, w, m, g, sparse=False, check_bounds=True)


def test_arbitrary_precision_cube_for_many_strands():
    n, k = 70, 12
    g = GrowthTables.build(n, k)
    cube = CountCube(n, 3, 1)
    assert cube.T.dtype == object
    assert CountCube(64, 3, 1).T.dtype == np.int64
    # completions avoiding sigma_1 = all braids minus the ones with sigma_1 as a prefix
    assert count_with_prefix(n, k, W(n), 1, g) == g.count(k) - g.count(k - 1)
    w = W(n, 69, 40, 39, 38)
    assert count_with_prefix(n, k, w, 38, g) == count_with_prefix(n, k, w, 38, g, sparse=False)
