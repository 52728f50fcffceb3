"""Growth series of the positive braid monoid.

``H_m(t) = sum_{i=1..m} (-1)^(i+1) t^C(i,2) H_{m-i}(t)`` with ``H_0 = H_1 = 1``,
and the number ``x[j]`` of positive braids of length ``j`` on ``n`` strands is
the coefficient sequence of ``1/H_n(t)``.  Everything is exact integer
arithmetic; tables only ever grow, since entries never change once computed.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .words import BraidError, check_strands

log = logging.getLogger(__name__)

CACHE_MAGIC = "braidgen-growth v1"


class CacheError(BraidError):
    pass


def _h_entry(h: list[list[int]], m: int, j: int) -> int:
    total = 0
    for i in range(1, m + 1):
        jj = j - comb(i, 2)
        if jj < 0:
            break
        row = h[m - i]
        if jj < len(row):
            total += row[jj] if i % 2 else -row[jj]
    return total


def build_h(n: int, k_max: int, *, trim: bool = True) -> list[list[int]]:
    """Rows ``h[m]`` for ``0 <= m <= n``.

    With ``trim`` each row stops at ``min(k_max, C(m, 2))``; without it every
    row runs to ``k_max`` (entries beyond the degree come out as zeros).
    """
    check_strands(n)
    if k_max < 0:
        raise BraidError("k_max must be >= 0")
    h: list[list[int]] = []
    for m in range(n + 1):
        top = min(k_max, comb(m, 2)) if trim else k_max
        h.append([_h_entry(h, m, j) if m >= 2 else int(j == 0) for j in range(top + 1)])
    return h


def build_x(n: int, k_max: int, h: list[list[int]]) -> list[int]:
    hn = h[n]
    x = [1]
    for j in range(1, k_max + 1):
        terms = min(j, len(hn) - 1)
        x.append(-sum(x[j - t] * hn[t] for t in range(1, terms + 1)))
    return x


@dataclass
class GrowthTables:
    n: int
    k_max: int
    h: list[list[int]] = field(repr=False)
    x: list[int] = field(repr=False)

    @classmethod
    def build(cls, n: int, k_max: int) -> GrowthTables:
        h = build_h(n, k_max)
        return cls(n, k_max, h, build_x(n, k_max, h))

    def count(self, k: int) -> int:
        """x_{n,k}; zero for negative k."""
        if k < 0:
            return 0
        if k > self.k_max:
            raise BraidError(f"growth tables cover k <= {self.k_max}, asked for {k}")
        return self.x[k]

    def extend(self, k_max: int) -> GrowthTables:
        """Grow the tables in place up to ``k_max``; existing entries are reused."""
        if k_max <= self.k_max:
            return self
        h = self.h
        for m in range(2, self.n + 1):
            row = h[m]
            top = min(k_max, comb(m, 2))
            for j in range(len(row), top + 1):
                row.append(_h_entry(h, m, j))
        hn = h[self.n]
        x = self.x
        for j in range(self.k_max + 1, k_max + 1):
            terms = min(j, len(hn) - 1)
            x.append(-sum(x[j - t] * hn[t] for t in range(1, terms + 1)))
        self.k_max = k_max
        return self


def save_cache(tables: GrowthTables, path: str | os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{CACHE_MAGIC} n={tables.n} kmax={tables.k_max}"]
    lines += [" ".join(map(str, row)) for row in tables.h]
    lines.append(" ".join(map(str, tables.x)))
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_cache(path: str | os.PathLike, k_max: int | None = None) -> GrowthTables:
    """Read a cache file, extending it incrementally if ``k_max`` asks for more."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CacheError(f"cache invalid: {exc}") from None
    lines = text.splitlines()
    try:
        header = lines[0].split()
        if " ".join(header[:2]) != CACHE_MAGIC or len(header) != 4:
            raise ValueError("bad header")
        n = int(header[2].removeprefix("n="))
        stored = int(header[3].removeprefix("kmax="))
        h = [[int(v) for v in lines[1 + m].split()] for m in range(n + 1)]
        x = [int(v) for v in lines[n + 2].split()]
    except (IndexError, ValueError):
        raise CacheError("cache invalid") from None
    tables = GrowthTables(n, stored, h, x)
    if not _consistent(tables):
        raise CacheError("cache invalid")
    if k_max is not None:
        tables.extend(k_max)
    return tables


def _consistent(t: GrowthTables) -> bool:
    if t.n < 2 or len(t.h) != t.n + 1 or len(t.x) != t.k_max + 1:
        return False
    if any(len(row) != min(t.k_max, comb(m, 2)) + 1 for m, row in enumerate(t.h)):
        return False
    return t.x[0] == 1 and all(row[0] == 1 for row in t.h)


def default_cache_path(n: int) -> Path:
    root = os.environ.get("BRAIDGEN_CACHE_DIR")
    base = Path(root) if root else Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "braidgen"
    return base / f"growth-n{n}.txt"


def get_tables(n: int, k_max: int, cache: str | os.PathLike | None = None) -> GrowthTables:
    """Load tables from ``cache`` (rebuilding if the file is missing or invalid),
    extend them to ``k_max`` and write them back when anything changed."""
    if cache is None:
        return GrowthTables.build(n, k_max)
    path = Path(cache)
    tables = None
    if path.exists():
        try:
            tables = load_cache(path)
        except CacheError:
            log.warning("growth cache %s is invalid; recomputing", path)
        if tables is not None and tables.n != n:
            log.warning("growth cache %s is for n=%d, not n=%d; recomputing", path, tables.n, n)
            tables = None
    if tables is None:
        tables = GrowthTables.build(n, k_max)
    elif tables.k_max >= k_max:
        return tables
    else:
        tables.extend(k_max)
    try:
        save_cache(tables, path)
    except OSError as exc:
        log.warning("could not write growth cache %s: %s", path, exc)
    return tables
