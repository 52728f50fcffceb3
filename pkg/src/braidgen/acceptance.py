"""The acceptance checks, shared by ``braidgen verify`` and the test suite.

Each check returns a ``CheckResult``; it passes only when its values are
right and it finished inside its time budget.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import oracle
from .automaton import build_automaton, check_minimality, witness_distinctness
from .counting import count_with_prefix, element_for, reference_count, scan_plan, update_rule
from .growth import GrowthTables
from .perm_braids import PermBraid, atom_complement, brute_complement, from_word, identity, lcm
from .prefixes import f_for_word, f_to_set, initial_f, restrict_m_f, step_f
from .sampler import RandomSource, SampleRequest, naive_sample, rank, sample, sample_one, unrank
from .words import ArtinWord, run

CHI2_CRITICAL_DF18_P001 = 42.31
AUTOMATON_STATES = {3: 5, 4: 18, 5: 56, 6: 161, 7: 443, 8: 1190, 9: 3156, 10: 8315}


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    values_ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.values_ok and self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.title}: {self.detail} ({self.seconds:.2f}s of {self.budget:g}s)"


def _timed(number: int, title: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    ok, detail = body()
    return CheckResult(number, title, ok, detail, time.perf_counter() - start, budget)


def _w(n: int, *letters: int) -> ArtinWord:
    return ArtinWord(tuple(letters), n)


def check_known_values() -> CheckResult:
    def body():
        g = GrowthTables.build(4, 3)
        failures = []
        if g.count(3) != 19:
            failures.append(f"x(4,3)={g.count(3)}")
        sizes = [len(oracle.enumerate_lex_reps(4, k)) for k in range(4)]
        if sizes != [1, 3, 8, 19] or g.x[:4] != [1, 3, 8, 19]:
            failures.append(f"|L(4,0..3)|={sizes}, x={g.x[:4]}")
        for w, m, want in [((), 2, 4), ((3,), 2, 2), ((3, 2), 2, 0), ((3, 2), 1, 1)]:
            got = count_with_prefix(4, 3, _w(4, *w), m, g)
            if got != want:
                failures.append(f"x(4,3)({w},{m})={got}")
        got = unrank(4, 3, 16, g)
        if got.letters != (3, 2, 1):
            failures.append(f"unrank(4,3,16)={got}")
        return not failures, "; ".join(failures) or "x=19, sizes 1,3,8,19, prefix counts 4,2,0,1, w16 = 3 2 1"

    return _timed(1, "known values", 1.0, body)


EXAMPLE_WORD = (4, 3, 2, 2, 1)
EXAMPLE_FUNCTIONS = [(1, 2, 0, -1), (1, 0, -1, 4), (0, -1, 3, 4), (0, -1, 2, 4), (0, 2, 1, 4)]
EXAMPLE_SETS = [
    {(1,), (2,), (3, 4)},
    {(1,), (2, 3), (4,)},
    {(1, 2), (3,), (4,)},
    {(1, 2), (3, 2), (4,)},
    {(2,), (3, 2, 1), (4,)},
]


def check_example_chain() -> CheckResult:
    def body():
        f = initial_f(5)
        failures = []
        for p, letter in enumerate(EXAMPLE_WORD):
            f = step_f(f, letter)
            prefix = f_to_set(f)
            if f != EXAMPLE_FUNCTIONS[p] or {x.letters for x in prefix} != EXAMPLE_SETS[p]:
                failures.append(f"step {p + 1}: f={list(f)}")
        return not failures, "; ".join(failures) or "5 functions and 5 prefix sets reproduced"

    return _timed(2, "example chain in B_5", 1.0, body)


def check_automaton_table() -> CheckResult:
    def body():
        counts = {n: build_automaton(n).accepted_count for n in AUTOMATON_STATES}
        minimal = {n: check_minimality(build_automaton(n)) for n in range(2, 9)}
        witnesses = {n: witness_distinctness(n) for n in range(3, 11)}
        failures = [f"n={n}: {counts[n]} states" for n in counts if counts[n] != AUTOMATON_STATES[n]]
        failures += [f"n={n} not minimal" for n, ok in minimal.items() if not ok]
        failures += [f"n={n} witnesses collide" for n, ok in witnesses.items() if not ok]
        detail = "states " + ",".join(str(counts[n]) for n in sorted(counts)) + "; minimal n=2..8; witnesses n=3..10"
        return not failures, "; ".join(failures) or detail

    return _timed(3, "automaton table", 60.0, body)


def _accepted_words(n: int, k: int) -> set[tuple[int, ...]]:
    A = build_automaton(n)
    out = set()

    def walk(state: int, prefix: tuple[int, ...]) -> None:
        if len(prefix) == k:
            out.add(prefix)
            return
        for letter, target in enumerate(A.delta[state], start=1):
            if target != A.fail:
                walk(target, prefix + (letter,))

    walk(A.initial, ())
    return out


def check_oracle_equivalence() -> CheckResult:
    def body():
        failures = []
        cases = 0
        for n in (2, 3, 4, 5):
            g = GrowthTables.build(n, 8)
            for k in range(9):
                reps = oracle.enumerate_lex_reps(n, k)
                if len(reps) != g.count(k):
                    failures.append(f"|L({n},{k})|={len(reps)} vs x={g.count(k)}")
                if {w.letters for w in reps} != _accepted_words(n, k):
                    failures.append(f"automaton language differs at n={n}, k={k}")
            for w in oracle.lex_reps_up_to(n, 6):
                cases += 1
                got = frozenset(x.letters for x in f_to_set(f_for_word(w)))
                if got != oracle.brute_forbidden_min(w):
                    failures.append(f"forbidden set of {w} (n={n})")
        for n in (2, 3, 4):
            g = GrowthTables.build(n, 7)
            for k in range(8):
                for w in oracle.lex_reps_up_to(n, k):
                    for m in range(max(w.last - 1, 1), n):
                        cases += 1
                        values = (
                            count_with_prefix(n, k, w, m, g),
                            reference_count(n, k, w, m, g),
                            oracle.count_with_prefix(n, k, w, m),
                        )
                        if len(set(values)) != 1:
                            failures.append(f"x({n},{k})({w},{m}): dp/reference/oracle = {values}")
        return not failures, "; ".join(failures[:5]) or f"{cases} forbidden-set and prefix-count cases agree"

    return _timed(4, "oracle equivalence", 600.0, body)


def chi_square(counts: Iterable[int], expected: float) -> float:
    return sum((c - expected) ** 2 / expected for c in counts)


def check_uniformity(draws: int = 190_000, seed: int = 20240) -> CheckResult:
    def body():
        g = GrowthTables.build(4, 6)
        words = sample(SampleRequest(4, 3, draws, seed), g)
        tally = Counter(w.letters for w in words)
        classes = [w.letters for w in oracle.enumerate_lex_reps(4, 3)]
        stat = chi_square([tally[c] for c in classes], draws / len(classes))
        stray = set(tally) - set(classes)
        failures = []
        if stray or stat >= CHI2_CRITICAL_DF18_P001:
            failures.append(f"chi2={stat:.2f}, stray outcomes {len(stray)}")
        for n in range(2, 5):
            for k in range(7):
                reps = oracle.enumerate_lex_reps(n, k)
                for r, w in enumerate(reps, start=1):
                    if unrank(n, k, r, g if n == 4 else GrowthTables.build(n, k)) != w or rank(
                        w, g if n == 4 else GrowthTables.build(n, k)
                    ) != r:
                        failures.append(f"round trip n={n} k={k} r={r}")
                        break
        return not failures, "; ".join(failures) or f"chi2={stat:.2f} < {CHI2_CRITICAL_DF18_P001}; round trips exact"

    return _timed(5, "uniformity", 120.0, body)


def check_bias(draws: int = 729_000, seed: int = 729) -> CheckResult:
    def body():
        rng = RandomSource(seed)
        tally = Counter(naive_sample(4, 6, rng).letters for _ in range(draws))
        braids = Counter()
        for letters, c in tally.items():
            braids[oracle.normalize(ArtinWord(letters, 4)).letters] += c
        delta_rep = oracle.normalize(_w(4, 1, 2, 1, 3, 2, 1)).letters
        hits_delta, hits_power = braids[delta_rep], braids[(1,) * 6]
        ratio = hits_delta / hits_power if hits_power else math.inf
        return 13 <= ratio <= 19, f"Delta/(sigma_1)^6 = {hits_delta}/{hits_power} = {ratio:.2f}"

    return _timed(6, "naive sampler bias", 300.0, body)


def scaling_exponent(ks: Iterable[int], seconds: Iterable[float]) -> float:
    """Least-squares slope of log(time) against log(k)."""
    xs = [math.log(k) for k in ks]
    ys = [math.log(t) for t in seconds]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def _draw_time(n: int, k: int, g: GrowthTables, rng: RandomSource, repeats: int = 1) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        sample_one(n, k, g, rng)
    return (time.perf_counter() - start) / repeats


def check_performance() -> CheckResult:
    def body():
        rng = RandomSource(64)
        g64 = GrowthTables.build(64, 128)
        g16 = GrowthTables.build(16, 256)
        g4 = GrowthTables.build(4, 256)
        sample_one(4, 8, g4, rng)  # warm-up
        t64 = _draw_time(64, 128, g64, rng)
        t16 = _draw_time(16, 256, g16, rng)
        ks = (32, 64, 128, 256)
        times = [_draw_time(4, k, g4, rng, repeats=5) for k in ks]
        e = scaling_exponent(ks, times)
        ok = t64 < 5 and t16 < 10 and e < 3.2
        return ok, f"(64,128) {t64:.2f}s, (16,256) {t16:.2f}s, k-exponent at n=4 {e:.2f}"

    return _timed(7, "performance", 60.0, body)


def _displacement(beta: PermBraid, a: int, b: int) -> tuple[int, int]:
    return beta.image(a) - a, b - beta.image(b)


def scan_configurations(n: int, max_length: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Distinct ``(start, restricted f)`` pairs met by scans for words of length <= max_length."""
    seen = set()
    frontier = {(0, initial_f(n))}
    for depth in range(max_length + 1):
        nxt = set()
        for j, f in frontier:
            for m in range(max(j - 1, 1), n):
                key = (max(j, 1), restrict_m_f(f, j, m))
                if key not in seen:
                    seen.add(key)
                    yield key
            if depth < max_length:
                for letter in range(1, n):
                    g = step_f(f, letter)
                    if g is not None:
                        nxt.add((letter, g))
        frontier = nxt


def check_scan_updates(n: int, max_length: int) -> tuple[int, list[str]]:
    """Compare the window update rule against explicit lcms for every subset
    of entered elements, over every scan configuration for ``n`` strands."""
    checked = 0
    failures = []
    for start, fm in scan_configurations(n, max_length):
        betas = {identity(n)}
        for direction, kind, a, b in scan_plan(n, start, fm):
            e = element_for(direction, kind, a, b, n)
            na, nb = (a - 1, b) if direction == "left" else (a, b + 1)
            joined = set()
            for beta in betas:
                r, s = _displacement(beta, a, b)
                # the subsets that skip the new element
                if (beta.length, *_displacement(beta, na, nb)) != update_rule(
                    direction, 0, a, b, beta.length, r, s
                ):
                    failures.append(f"n={n} skip {direction} at [{a},{b}] for {beta.to_word()}")
                if e is None:
                    continue
                checked += 1
                j = lcm(beta, from_word(e))
                got = (j.length, *_displacement(j, na, nb))
                want = update_rule(direction, kind, a, b, beta.length, r, s)
                if got != want:
                    failures.append(f"n={n} {direction} [{a},{b}] {beta.to_word()} v {e}: {got} != {want}")
                joined.add(j)
            betas |= joined
    return checked, failures


def check_update_rules() -> CheckResult:
    def body():
        failures = []
        cases = 0
        for n in range(2, 9):
            shapes = [ArtinWord((i - 1, i), n) for i in range(2, n)]
            shapes += [run(i, m, n) for i in range(1, n) for m in range(1, i + 1)]
            for beta in shapes:
                for j in range(1, n):
                    cases += 1
                    atom = from_word(ArtinWord((j,), n))
                    if from_word(atom_complement(j, beta)) != brute_complement(atom, from_word(beta)):
                        failures.append(f"sigma_{j} \\ {beta} (n={n})")
        updates = 0
        for n in range(2, 7):
            checked, bad = check_scan_updates(n, 10)
            updates += checked
            failures += bad
        detail = f"{cases} complements, {updates} scan lcm updates agree"
        return not failures, "; ".join(failures[:5]) or detail

    return _timed(8, "complement and lcm-update rules", 600.0, body)


CHECKS: dict[int, Callable[[], CheckResult]] = {
    1: check_known_values,
    2: check_example_chain,
    3: check_automaton_table,
    4: check_oracle_equivalence,
    5: check_uniformity,
    6: check_bias,
    7: check_performance,
    8: check_update_rules,
}


def run_checks(numbers: Iterable[int] | None = None) -> list[CheckResult]:
    return [CHECKS[i]() for i in (sorted(CHECKS) if numbers is None else numbers)]
