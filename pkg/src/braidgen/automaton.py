"""The minimal finite state acceptor of lex-representatives.

States are admissible functions reachable from the all-zero function, plus an
explicit fail state.  The number of states grows exponentially with ``n``, so
building refuses ``n`` above a ceiling unless it is raised explicitly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .prefixes import AdmissibleFunction, build_witness, f_to_set, initial_f, step_f
from .words import ArtinWord, BraidError, check_strands, format_word

DEFAULT_MAX_STRANDS = 16
DEFAULT_WITNESS_BOUND = 12


@dataclass(frozen=True)
class LexAutomaton:
    """``delta[state][letter - 1]`` is the successor state id; ``fail`` is absorbing."""

    n: int
    states: tuple[AdmissibleFunction | None, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    fail: int

    @property
    def accepted_count(self) -> int:
        return len(self.states) - 1

    def run(self, w: ArtinWord | Sequence[int]) -> int:
        state = self.initial
        for i in w:
            state = self.delta[state][i - 1]
        return state


def build_automaton(n: int, max_strands: int = DEFAULT_MAX_STRANDS) -> LexAutomaton:
    check_strands(n)
    if n > max_strands:
        raise BraidError(
            f"refusing to build the automaton for n={n} > {max_strands}: "
            "its state count grows exponentially in n (raise max_strands to override)"
        )
    start = initial_f(n)
    index: dict[AdmissibleFunction, int] = {start: 0}
    states: list[AdmissibleFunction | None] = [start]
    raw: list[list[AdmissibleFunction | None]] = []
    queue = deque([start])
    while queue:
        f = queue.popleft()
        row = []
        for j in range(1, n):
            g = step_f(f, j)
            row.append(g)
            if g is not None and g not in index:
                index[g] = len(states)
                states.append(g)
                queue.append(g)
        raw.append(row)
    fail = len(states)
    delta = [tuple(fail if g is None else index[g] for g in row) for row in raw]
    delta.append((fail,) * (n - 1))
    states.append(None)
    return LexAutomaton(n, tuple(states), tuple(delta), 0, fail)


def accepts(A: LexAutomaton, w: ArtinWord | Sequence[int]) -> bool:
    return A.run(w) != A.fail


def path_count(A: LexAutomaton, k: int) -> int:
    """Number of accepted words of length ``k``."""
    if k < 0:
        raise BraidError("k must be >= 0")
    vec = [0] * len(A.states)
    vec[A.initial] = 1
    for _ in range(k):
        nxt = [0] * len(vec)
        for state, c in enumerate(vec):
            if c and state != A.fail:
                for target in A.delta[state]:
                    nxt[target] += c
        vec = nxt
    return sum(c for state, c in enumerate(vec) if state != A.fail)


def minimize_partition(delta: Sequence[Sequence[int]], accepting: Sequence[bool]) -> list[int]:
    """Moore partition refinement of a complete DFA.

    Returns a class id per state; equal ids mean indistinguishable states.
    Unreachable states are kept, so an always-present fail state counts even
    when no word reaches it (n = 2).
    """
    block = [int(a) for a in accepting]
    count = len(set(block))
    while True:
        signatures: dict[tuple, int] = {}
        new_block = [
            signatures.setdefault((block[q], tuple(block[t] for t in row)), len(signatures))
            for q, row in enumerate(delta)
        ]
        if len(signatures) == count:
            return new_block
        block, count = new_block, len(signatures)


def check_minimality(A: LexAutomaton) -> bool:
    accepting = [q != A.fail for q in range(len(A.delta))]
    return len(set(minimize_partition(A.delta, accepting))) == len(A.delta)


def _label(f: AdmissibleFunction | None, n: int) -> str:
    if f is None:
        return "{" + ", ".join(str(i) for i in range(1, n)) + "}"
    return "{" + ", ".join(format_word(x) for x in f_to_set(f)) + "}"


def export(A: LexAutomaton, format: str = "dot", include_fail: bool = False) -> str:
    """Render as graphviz dot or json; dot omits the fail state unless asked."""
    if format == "json":
        payload = {
            "n": A.n,
            "states": [
                {
                    "id": q,
                    "f": None if f is None else list(f),
                    "forbidden": None if f is None else [format_word(x) for x in f_to_set(f)],
                }
                for q, f in enumerate(A.states)
            ],
            "transitions": [
                [q, letter, t] for q, row in enumerate(A.delta) for letter, t in enumerate(row, start=1)
            ],
            "initial": A.initial,
            "fail": A.fail,
        }
        return json.dumps(payload, indent=1)
    if format != "dot":
        raise BraidError(f"unsupported export format: {format!r}")
    lines = [f"digraph Gamma{A.n} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q, f in enumerate(A.states):
        if q == A.fail and not include_fail:
            continue
        lines.append(f'  s{q} [shape=box, style=rounded, label="{_label(f, A.n)}"];')
    lines.append(f"  __start -> s{A.initial};")
    for q, row in enumerate(A.delta):
        for letter, t in enumerate(row, start=1):
            if (t == A.fail or q == A.fail) and not include_fail:
                continue
            lines.append(f'  s{q} -> s{t} [label="{letter}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def witness_states(n: int, bound: int = DEFAULT_WITNESS_BOUND) -> set[AdmissibleFunction]:
    """States reached by the 2^(n-2) witness words."""
    check_strands(n)
    if n > bound:
        raise BraidError("witness bound exceeded")
    reached = set()
    base = range(1, n - 1)
    for r in range(len(base) + 1):
        for S in combinations(base, r):
            f = initial_f(n)
            for j in build_witness(S, n):
                f = step_f(f, j)
                if f is None:
                    raise BraidError(f"witness word for {S} is not a lex-representative")
            reached.add(f)
    return reached


def witness_distinctness(n: int, bound: int = DEFAULT_WITNESS_BOUND) -> bool:
    return len(witness_states(n, bound)) == 2 ** (n - 2)
