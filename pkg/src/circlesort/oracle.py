"""Exact distance tables by breadth-first search.

States are arrangements; edges depend on the mode.  Adjacent and AllSwap
work on rotation classes (label 1 pinned at vertex 0, (n-1)! states):
Adjacent joins classes that differ by one adjacent swap, AllSwap by a swap
of any two vertices.  Affine works on raw arrangements (n! states) with
the n wraparound-adjacent swaps and the sorted arrangement as the target.

Each state is ranked into a flat byte table by the factorial number
system, so a full table for feasible n fits comfortably in memory and on
disk.  Applying a generator to a canonical state, including the
re-canonicalization when label 1 moves, is a fixed permutation of the
label row, which keeps the search fully vectorized.
"""

import math
import os
import struct
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .core import Arrangement, canonicalize, trivial

_UNSEEN = 0xFF
_MAGIC = b"CSRT"
_FORMAT_VERSION = 1


class Mode(Enum):
    ADJACENT = "adjacent"
    ALLSWAP = "allswap"
    AFFINE = "affine"

    @property
    def code(self):
        return {Mode.ADJACENT: 0, Mode.ALLSWAP: 1, Mode.AFFINE: 2}[self]


class BudgetError(Exception):
    """The requested search exceeds the configured state budget."""

    def __init__(self, n, mode, required, allowed):
        self.n = n
        self.mode = mode
        self.required = required
        self.allowed = allowed
        super().__init__(
            f"{mode.value} search for n={n} needs {required} states, "
            f"budget allows {allowed}"
        )


@dataclass(frozen=True)
class SearchConfig:
    max_states: int = 500_000_000
    cache_dir: "Path | None" = None


def state_count(n, mode):
    return math.factorial(n if mode is Mode.AFFINE else n - 1)


@dataclass(frozen=True)
class DistanceTable:
    """Distances from the sorted state to every state, indexed by rank."""

    n: int
    mode: Mode
    dist: np.ndarray = field(compare=False)

    def __len__(self):
        return len(self.dist)

    def diameter(self):
        return int(self.dist.max())

    def histogram(self):
        counts = np.bincount(self.dist)
        return {d: int(c) for d, c in enumerate(counts) if c}

    def lookup(self, a):
        """Distance of an arrangement (of its rotation class, outside affine mode)."""
        if a.n != self.n:
            raise ValueError("arrangement size does not match the table")
        if self.mode is Mode.AFFINE:
            row = a.as_array() - 1
        else:
            row = canonicalize(a).as_array()[1:] - 2
        return int(self.dist[_rank_rows(row[None, :].astype(np.int8))[0]])


_FACT = [math.factorial(i) for i in range(22)]


def _rank_rows(rows):
    """Factorial-system rank of each row (rows are permutations of 0..k-1)."""
    nrows, k = rows.shape
    out = np.zeros(nrows, dtype=np.int64)
    for i in range(k - 1):
        smaller_later = (rows[:, i + 1 :] < rows[:, i : i + 1]).sum(axis=1, dtype=np.int64)
        out += smaller_later * _FACT[k - 1 - i]
    return out


def _swap_map(n, i, j):
    s = np.arange(n, dtype=np.int64)
    s[i], s[j] = s[j], s[i]
    return s


def _generator_maps(n, mode):
    """Each generator as a column permutation of the label row.

    For the class modes the map folds in the rotation that re-pins label 1
    at vertex 0 whenever the swap touched vertex 0.
    """
    maps = []
    if mode is Mode.ADJACENT or mode is Mode.AFFINE:
        pairs = [(p, (p + 1) % n) for p in range(n)] if n > 2 else [(0, 1)] if n == 2 else []
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in pairs:
        s = _swap_map(n, i, j)
        if mode is Mode.AFFINE:
            maps.append(s)
            continue
        if i == 0:
            r = j
        elif j == 0:
            r = i
        else:
            r = 0
        v = np.arange(n, dtype=np.int64)
        maps.append(s[(v + r) % n])
    return maps


def _row_keys(rows, mode):
    if mode is Mode.AFFINE:
        return _rank_rows(rows - 1)
    return _rank_rows(rows[:, 1:] - 2)


def _search(n, mode):
    size = state_count(n, mode)
    dist = np.full(size, _UNSEEN, dtype=np.uint8)
    start = np.array(trivial(n).labels, dtype=np.int8)[None, :]
    dist[_row_keys(start, mode)[0]] = 0
    maps = _generator_maps(n, mode)
    frontier = start
    d = 0
    while frontier.size:
        level_parts = []
        for cm in maps:
            children = frontier[:, cm]
            keys = _row_keys(children, mode)
            fresh = dist[keys] == _UNSEEN
            if fresh.any():
                dist[keys[fresh]] = d + 1
                level_parts.append(children[fresh])
        d += 1
        if level_parts:
            frontier = np.concatenate(level_parts)
        else:
            frontier = np.empty((0, n), dtype=np.int8)
    if (dist == _UNSEEN).any():
        raise RuntimeError("search did not reach every state; unreachable")
    return dist


def _cache_file(cache_dir, n, mode):
    return Path(cache_dir) / f"{mode.value}_{n}.csrt"


def save_table(table, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = struct.pack("<4sHHB", _MAGIC, _FORMAT_VERSION, table.n, table.mode.code)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(header + table.dist.tobytes())
    os.replace(tmp, path)


def load_table(path, n=None, mode=None):
    """Read a table back, optionally insisting on a particular n and mode."""
    raw = Path(path).read_bytes()
    head = struct.calcsize("<4sHHB")
    if len(raw) < head:
        raise ValueError(f"{path}: not a distance table file")
    magic, version, file_n, mode_code = struct.unpack("<4sHHB", raw[:head])
    if magic != _MAGIC or version != _FORMAT_VERSION:
        raise ValueError(f"{path}: not a distance table file")
    if (n is not None and file_n != n) or (mode is not None and mode_code != mode.code):
        raise ValueError(f"{path}: table is for n={file_n} mode code {mode_code}")
    by_code = {m.code: m for m in Mode}
    if mode_code not in by_code:
        raise ValueError(f"{path}: unknown mode code {mode_code}")
    mode = by_code[mode_code]
    dist = np.frombuffer(raw[head:], dtype=np.uint8)
    expected = state_count(file_n, mode)
    if len(dist) != expected:
        raise ValueError(f"{path}: expected {expected} entries, found {len(dist)}")
    if dist[0] != 0 or int(dist.max()) == _UNSEEN:
        raise ValueError(f"{path}: table failed revalidation")
    return DistanceTable(n=file_n, mode=mode, dist=dist)


_memo = {}


def distance_table(n, mode, config=None):
    """The full distance table for (n, mode), computed or loaded from cache."""
    if n < 1:
        raise ValueError("n must be positive")
    config = config or SearchConfig()
    required = state_count(n, mode)
    if required > config.max_states:
        raise BudgetError(n, mode, required, config.max_states)
    key = (n, mode)
    if key in _memo:
        return _memo[key]
    table = None
    cache_path = _cache_file(config.cache_dir, n, mode) if config.cache_dir else None
    if cache_path and cache_path.exists():
        table = load_table(cache_path, n, mode)
    if table is None:
        dist = _search(n, mode)
        dist.setflags(write=False)
        table = DistanceTable(n=n, mode=mode, dist=dist)
        if cache_path:
            save_table(table, cache_path)
    _memo[key] = table
    return table


def distance(a, mode, config=None):
    """Exact swap distance of `a` (of its class, outside affine mode)."""
    return distance_table(a.n, mode, config).lookup(a)


def diameter(n, mode, config=None):
    """Largest distance in the (n, mode) table."""
    return distance_table(n, mode, config).diameter()


def reflection_affine_distance(n, k, config=None):
    """Wraparound-adjacent-swap distance of the reflection arrangement."""
    from .adjsort import reflection_perm

    return distance(reflection_perm(n, k), Mode.AFFINE, config)
