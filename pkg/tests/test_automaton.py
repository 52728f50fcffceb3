from __future__ import annotations

import itertools
import json
import random

import pytest

from braidgen import oracle
from braidgen.automaton import (
    LexAutomaton,
    accepts,
    build_automaton,
    check_minimality,
    export,
    minimize_partition,
    path_count,
    witness_distinctness,
    witness_states,
)
from braidgen.prefixes import f_for_word, f_to_set
from braidgen.words import ArtinWord, BraidError

TABLE = {3: 5, 4: 18, 5: 56, 6: 161, 7: 443, 8: 1190, 9: 3156, 10: 8315}


@pytest.mark.parametrize("n, states", TABLE.items())
def test_state_counts(n, states):
    A = build_automaton(n)
    assert A.accepted_count == states >= 2 ** (n - 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_minimal(n):
    assert check_minimality(build_automaton(n))


def test_duplicated_state_is_not_minimal():
    A = build_automaton(4)
    # copy state 1 as a new state and route one edge into the copy
    copy = len(A.delta)
    delta = [list(row) for row in A.delta] + [list(A.delta[1])]
    delta[0][delta[0].index(1)] = copy
    accepting = [q != A.fail for q in range(len(delta))]
    assert len(set(minimize_partition(delta, accepting))) == len(A.delta)
    B = LexAutomaton(4, A.states + (A.states[1],), tuple(map(tuple, delta)), A.initial, A.fail)
    assert not check_minimality(B)


def test_accepts_examples():
    A = build_automaton(3)
    assert accepts(A, ArtinWord((1, 2, 1), 3))
    assert not accepts(A, ArtinWord((2, 1, 2), 3))
    assert accepts(A, ArtinWord((), 3))


def test_fail_exactly_on_forbidden_atoms():
    A = build_automaton(6)
    for q, f in enumerate(A.states):
        if f is None:
            continue
        atoms = {x.letters[0] for x in f_to_set(f) if len(x) == 1}
        assert {i for i in range(1, 6) if A.delta[q][i - 1] == A.fail} == atoms


@pytest.mark.parametrize("n", [2, 3, 4])
def test_acceptance_matches_oracle_on_all_words(n):
    A = build_automaton(n)
    for k in range(8):
        reps = {w.letters for w in oracle.enumerate_lex_reps(n, k)}
        for u in itertools.product(range(1, n), repeat=k):
            assert accepts(A, u) == (u in reps)


def test_acceptance_matches_prefix_functions_on_random_words():
    rng = random.Random(3)
    automata = {n: build_automaton(n) for n in range(2, 9)}
    for _ in range(100_000):
        n = rng.randint(2, 8)
        u = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 50))]
        assert accepts(automata[n], u) == (f_for_word(u, n) is not None)


def test_path_counts():
    A = build_automaton(4)
    assert path_count(A, 3) == 19 and path_count(A, 2) == 8 and path_count(A, 0) == 1


def test_export_dot_n3():
    dot = export(build_automaton(3))
    assert dot.count("shape=box") == 5
    assert 's0 -> s1 [label="2"]' in dot and 's1 [shape=box, style=rounded, label="{1 2}"]' in dot
    assert "{1, 2}" not in dot
    assert "{1, 2}" in export(build_automaton(3), include_fail=True)


def test_export_json_n2():
    payload = json.loads(export(build_automaton(2), "json"))
    accepted = [s for s in payload["states"] if s["f"] is not None]
    assert len(accepted) == 1
    assert [0, 1, 0] in payload["transitions"]
    assert set(payload) == {"n", "states", "transitions", "initial", "fail"}


def test_export_rejects_unknown_format():
    with pytest.raises(BraidError):
        export(build_automaton(3), "xml")


def test_refuses_large_n():
    with pytest.raises(BraidError, match="exponential"):
        build_automaton(17)


def test_witnesses():
    assert len(witness_states(4)) == 4
    assert witness_distinctness(2)
    assert len(witness_states(10)) == 256
    with pytest.raises(BraidError, match="witness bound exceeded"):
        witness_states(13)
