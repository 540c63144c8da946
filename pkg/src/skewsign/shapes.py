"""Partitions, skew shapes and the enumerations built on top of them.

Cells are ``(row, col)`` pairs, 1-indexed, row 1 at the top (English
notation).  A :class:`Partition` is an immutable, normalized value object, so
structural equality is the same as mathematical equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

Cell = tuple[int, int]


class MalformedPartition(ValueError):
    """Raised when text or parts do not describe a partition."""


class BoundTooSmall(ValueError):
    """Raised when a row bound cannot even hold the starting partition."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise MalformedPartition(f"parts must be positive: {list(self.parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise MalformedPartition(f"parts must be weakly decreasing: {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-indexed); 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


EMPTY = Partition()


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise MalformedPartition(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Cells of the shape in row-major order."""
        return tuple(
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.row(i) + 1, self.outer.row(i) + 1)
        )

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return self.inner.row(i) < j <= self.outer.row(i)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


_PARTITION_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def parse_partition(text: str) -> Partition:
    """Parse the canonical ``[a,b,c]`` form."""
    text = text.strip()
    if not _PARTITION_RE.match(text):
        raise MalformedPartition(f"expected a bracketed list like [3,2,1], got {text!r}")
    body = text[1:-1].strip()
    parts = tuple(int(tok) for tok in body.split(",")) if body else ()
    if any(p == 0 for p in parts):
        raise MalformedPartition(f"parts must be positive: {text!r}")
    return Partition(parts)


def parse_shape(text: str) -> SkewShape:
    """Parse ``OUTER/INNER``; a bare partition means a straight shape."""
    outer, sep, inner = text.strip().partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner) if sep else EMPTY)


def v_statistic(p: Partition) -> int:
    """Sum of the even-indexed parts, p_2 + p_4 + ..."""
    return sum(p.parts[1::2])


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner.parts, outer.parts))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def _fill(lower: tuple[int, ...], upper_first: int, total: int, rows: int) -> Iterator[tuple[int, ...]]:
    # Weakly decreasing sequences of length ``rows`` with entrywise lower bound
    # ``lower`` (padded with zeros), first entry at most ``upper_first`` and the
    # given sum; largest-first so results come out in reverse lex order.
    def rec(i, cap, remaining):
        if i == rows:
            if remaining == 0:
                yield ()
            return
        lo = lower[i] if i < len(lower) else 0
        # the remaining rows can absorb at most cap each
        for part in range(min(cap, remaining), lo - 1, -1):
            if remaining - part > part * (rows - i - 1):
                break
            for rest in rec(i + 1, part, remaining - part):
                yield (part,) + rest

    yield from rec(0, upper_first, total)


def enumerate_outer_extensions(alpha: Partition, n: int, row_bound: int) -> list[Partition]:
    """All lambda containing ``alpha`` with ``n`` more cells and at most ``row_bound`` rows."""
    if row_bound < len(alpha):
        raise BoundTooSmall(f"row_bound {row_bound} < {len(alpha)} rows of {alpha}")
    total = alpha.size + n
    return [Partition(p) for p in _fill(alpha.parts, total, total, row_bound)]


def enumerate_inner_restrictions(alpha: Partition, n: int) -> list[Partition]:
    """All mu inside ``alpha`` with ``n`` fewer cells."""
    if n > alpha.size:
        return []
    out = []

    def rec(i, cap, remaining, acc):
        if i == len(alpha):
            if remaining == 0:
                out.append(Partition(acc))
            return
        room = sum(min(a, cap) for a in alpha.parts[i:])
        if remaining > room:
            return
        for part in range(min(cap, alpha.parts[i], remaining), -1, -1):
            rec(i + 1, part, remaining - part, acc + (part,))

    rec(0, alpha.row(1), alpha.size - n, ())
    return out


def skew_shapes(max_outer: int, max_cells: int | None = None, parity: int | None = None) -> Iterator[SkewShape]:
    """Every skew shape with ``|outer| <= max_outer``.

    Optionally restricted to at most ``max_cells`` cells and to a given parity
    of the cell count.  Order is deterministic: by outer size, then outer in
    reverse lex, then inner.
    """
    for size in range(max_outer + 1):
        for outer in partitions_of(size):
            for k in range(size + 1):
                if max_cells is not None and k > max_cells:
                    break
                if parity is not None and k % 2 != parity:
                    continue
                for inner in enumerate_inner_restrictions(outer, k):
                    yield SkewShape(outer, inner)
