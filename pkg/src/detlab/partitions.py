"""Partitions, GL(m) weights, and partitions-in-a-box enumeration.

Conventions: partitions are weakly decreasing tuples of nonnegative integers,
canonical form has no trailing zeros.  Weights are arbitrary integer tuples;
a weight is dominant when weakly decreasing.  The canonical total order on
partitions is lexicographic on the part tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence


def canonical_parts(seq: Sequence[int]) -> tuple[int, ...]:
    """Validate weak decrease / nonnegativity and strip trailing zeros."""
    parts = tuple(int(x) for x in seq)
    for i, x in enumerate(parts):
        if x < 0:
            raise ValueError(f"negative part {x} in {parts}")
        if i > 0 and parts[i - 1] < x:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", canonical_parts(self.parts))

    @staticmethod
    def of(seq) -> "Partition":
        if isinstance(seq, Partition):
            return seq
        return Partition(tuple(seq))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """i-th part, zero beyond the last row."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"cannot pad {self.parts} to length {length}")
        return self.parts + (0,) * (length - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    # lexicographic order (the canonical total order here); () is minimal
    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def dominant(self) -> bool:
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class BoxSet:
    """All partitions with at most u rows and at most v columns, lex sorted."""

    u: int
    v: int
    members: tuple[Partition, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)


def conjugate(p) -> Partition:
    """Transpose of the Young diagram; an involution."""
    parts = Partition.of(p).parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def _box_parts(u: int, v: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    yield ()
    if u <= 0:
        return
    for first in range(1, maxpart + 1):
        for rest in _box_parts(u - 1, v, first):
            yield (first,) + rest


def enumerate_box(u: int, v: int) -> BoxSet:
    """All partitions inside the u x v box; cardinality binomial(u+v, u)."""
    if u < 1 or v < 1:
        raise ValueError("box dimensions must be positive")
    members = sorted(Partition(t) for t in _box_parts(u, v, v))
    assert len(members) == math.comb(u + v, u)
    return BoxSet(u, v, tuple(members))


def weyl_dim(w, length: int | None = None) -> int:
    """Dimension of the irreducible GL module with dominant weight w.

    Product formula prod_{i<j} (w_i - w_j + j - i)/(j - i), evaluated with the
    division done last so every intermediate stays an exact integer.
    Invariant under adding a constant to all entries.
    """
    entries = tuple(w.entries) if isinstance(w, WeightVector) else tuple(int(x) for x in w)
    if length is not None:
        if length < len(entries):
            raise ValueError("length smaller than the weight")
        entries = entries + (0,) * (length - len(entries))
        for i in range(len(entries) - 1):
            if entries[i] < entries[i + 1]:
                raise ValueError(f"padding {w} to length {length} is not dominant")
    m = len(entries)
    if any(entries[i] < entries[i + 1] for i in range(m - 1)):
        raise ValueError(f"weight {entries} is not dominant")
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= entries[i] - entries[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def lex_compare(a, b) -> int:
    """-1 / 0 / +1 in the lexicographic order on part tuples."""
    pa, pb = Partition.of(a).parts, Partition.of(b).parts
    if pa < pb:
        return -1
    if pa > pb:
        return 1
    return 0


def all_partitions(max_size: int, max_rows: int | None = None) -> list[Partition]:
    """Every partition of size at most max_size (optionally bounded rows)."""
    out = [Partition()]
    for total in range(1, max_size + 1):

        def rec(row, prev, remaining, acc):
            if remaining == 0:
                out.append(Partition(tuple(acc)))
                return
            if max_rows is not None and row >= max_rows:
                return
            for p in range(min(prev, remaining), 0, -1):
                acc.append(p)
                rec(row + 1, p, remaining - p, acc)
                acc.pop()

        rec(0, total, total, [])
    return out
