"""Labeled circles and swap moves.

Conventions used throughout the package: a circle on n vertices has its
vertices numbered 0..n-1 clockwise, and each vertex carries one of the
labels 1..n.  Rotating an arrangement does not change the object we study,
so arrangements are grouped into rotation classes; the canonical
representative of a class is the rotation that puts label 1 on vertex 0.
The sorted circle is the one reading 1, 2, ..., n clockwise from vertex 0.

All value types here are immutable; operations return new objects.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class Arrangement:
    """Labels around the circle, clockwise from vertex 0."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        n = len(labels)
        if n == 0:
            raise ValueError("empty arrangement")
        if sorted(labels) != list(range(1, n + 1)):
            raise ValueError(f"labels must be a permutation of 1..{n}: {labels}")

    @property
    def n(self):
        return len(self.labels)

    def as_array(self):
        return np.array(self.labels, dtype=np.int64)

    def __str__(self):
        return format_arrangement(self)


@dataclass(frozen=True)
class CyclicPerm(Arrangement):
    """Rotation class representative: label 1 pinned at vertex 0."""

    def __post_init__(self):
        super().__post_init__()
        if self.labels[0] != 1:
            raise ValueError("canonical representative must start with label 1")


def trivial(n):
    """The sorted circle 1, 2, ..., n."""
    return CyclicPerm(tuple(range(1, n + 1)))


def rotate(a, r):
    """Rotate so that the old vertex r becomes vertex 0."""
    n = a.n
    r %= n
    return Arrangement(a.labels[r:] + a.labels[:r])


def canonicalize(a):
    """Canonical representative of a's rotation class."""
    rotated = rotate(a, a.labels.index(1))
    return CyclicPerm(rotated.labels)


def same_class(a, b):
    """True if a and b are rotations of each other."""
    return a.n == b.n and canonicalize(a).labels == canonicalize(b).labels


@dataclass(frozen=True)
class AdjSwap:
    """Exchange the labels at vertices pos and pos+1 (mod n)."""

    pos: int

    def __post_init__(self):
        if self.pos < 0:
            raise ValueError("swap position must be nonnegative")

    def indices(self, n):
        if self.pos >= n:
            raise ValueError(f"swap position {self.pos} out of range for n={n}")
        return self.pos, (self.pos + 1) % n


@dataclass(frozen=True)
class GenSwap:
    """Exchange the labels at two arbitrary vertices."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("swap endpoints must differ")
        if self.a < 0 or self.b < 0:
            raise ValueError("swap positions must be nonnegative")

    def indices(self, n):
        if self.a >= n or self.b >= n:
            raise ValueError(f"swap ({self.a}, {self.b}) out of range for n={n}")
        return self.a, self.b


def apply_swap(a, move):
    """Apply one swap move, returning the new arrangement."""
    i, j = move.indices(a.n)
    labels = list(a.labels)
    labels[i], labels[j] = labels[j], labels[i]
    return Arrangement(tuple(labels))


class MoveKind(Enum):
    ADJACENT = "adjacent"
    GENERAL = "general"


class SwapSequence:
    """An ordered list of swap moves on an n-circle.

    Moves are stored compactly: one vertex index per adjacent swap, or an
    index pair per general swap.  Replay applies them strictly left to
    right.
    """

    def __init__(self, n, kind, data):
        data = np.asarray(data, dtype=np.int64)
        if kind is MoveKind.ADJACENT:
            data = data.reshape(-1)
            if data.size and (data.min() < 0 or data.max() >= n):
                raise ValueError("adjacent swap position out of range")
        else:
            data = data.reshape(-1, 2)
            if data.size:
                if data.min() < 0 or data.max() >= n:
                    raise ValueError("swap position out of range")
                if (data[:, 0] == data[:, 1]).any():
                    raise ValueError("swap endpoints must differ")
        data.setflags(write=False)
        self.n = n
        self.kind = kind
        self.data = data

    @classmethod
    def adjacent(cls, n, positions=()):
        return cls(n, MoveKind.ADJACENT, list(positions))

    @classmethod
    def general(cls, n, pairs=()):
        return cls(n, MoveKind.GENERAL, list(pairs))

    def moves(self):
        if self.kind is MoveKind.ADJACENT:
            return [AdjSwap(int(p)) for p in self.data]
        return [GenSwap(int(a), int(b)) for a, b in self.data]

    def __len__(self):
        return len(self.data)

    def __iter__(self):
        return iter(self.moves())

    def __add__(self, other):
        if not isinstance(other, SwapSequence):
            return NotImplemented
        if other.n != self.n or other.kind is not self.kind:
            raise ValueError("can only concatenate sequences of the same kind and size")
        if self.kind is MoveKind.ADJACENT:
            return SwapSequence(self.n, self.kind, np.concatenate([self.data, other.data]))
        return SwapSequence(self.n, self.kind, np.concatenate([self.data, other.data], axis=0))

    def __eq__(self, other):
        return (
            isinstance(other, SwapSequence)
            and self.n == other.n
            and self.kind is other.kind
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self):
        return f"SwapSequence(n={self.n}, kind={self.kind.value}, len={len(self)})"


def replay(a, seq):
    """Apply every move of seq to a, left to right."""
    if seq.n != a.n:
        raise ValueError("sequence size does not match arrangement")
    labels = a.as_array()
    if seq.kind is MoveKind.ADJACENT:
        _kernels.apply_adjacent(labels, seq.data)
    else:
        _kernels.apply_pairs(labels, seq.data)
    return Arrangement(tuple(int(x) for x in labels))


def inversions(observed, target):
    """Count pairs of `observed` that appear in the opposite order in `target`.

    Both sequences must hold the same distinct values.  The result is the
    minimum number of adjacent exchanges needed to rearrange `observed`
    into `target` on a line.
    """
    if sorted(observed) != sorted(target):
        raise ValueError("sequences must hold the same values")
    rank = {v: i for i, v in enumerate(target)}
    if len(rank) != len(target):
        raise ValueError("values must be distinct")
    ranked = np.array([rank[v] for v in observed], dtype=np.int64)
    return int(_kernels.inversion_count(ranked))


def parse_arrangement(text):
    """Read space-separated labels, vertex 0 first."""
    parts = text.split()
    if not parts:
        raise ValueError("empty arrangement text")
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"arrangement text must be integers: {text!r}") from None
    return Arrangement(labels)


def format_arrangement(a):
    return " ".join(str(x) for x in a.labels)
