"""Standard Young tableaux of skew shape, reading words and sign-imbalance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .shapes import Cell, SkewShape


class NotAPermutation(ValueError):
    pass


@dataclass(frozen=True)
class StandardYoungTableau:
    shape: SkewShape
    entries: dict[Cell, int] = field(hash=False)

    def __post_init__(self):
        n = self.shape.size
        if set(self.entries) != self.shape.cell_set:
            raise ValueError("entries must cover exactly the cells of the shape")
        if sorted(self.entries.values()) != list(range(1, n + 1)):
            raise ValueError("labels must be 1..n, each used once")
        for (i, j), label in self.entries.items():
            for nb in ((i, j + 1), (i + 1, j)):
                if nb in self.entries and self.entries[nb] <= label:
                    raise ValueError(f"not increasing at {(i, j)} -> {nb}")

    def rows(self) -> list[list[int | None]]:
        """Row lists with ``None`` in the inner (removed) cells."""
        return [
            [self.entries.get((i, j)) for j in range(1, self.shape.outer.row(i) + 1)]
            for i in range(1, len(self.shape.outer) + 1)
        ]


def enumerate_syt(shape: SkewShape, reverse: bool = False) -> Iterator[StandardYoungTableau]:
    """Yield every SYT of ``shape`` exactly once.

    Label k goes into any empty cell whose left and upper neighbours inside
    the shape are already filled.  Candidate cells are tried in row-major
    order, or reverse row-major when ``reverse`` is set.
    """
    cells = list(reversed(shape.cells)) if reverse else list(shape.cells)
    n = len(cells)
    preds = {
        c: [nb for nb in ((c[0], c[1] - 1), (c[0] - 1, c[1])) if nb in shape]
        for c in cells
    }
    filled: dict[Cell, int] = {}

    def rec(k):
        if k > n:
            yield StandardYoungTableau(shape, dict(filled))
            return
        for c in cells:
            if c not in filled and all(p in filled for p in preds[c]):
                filled[c] = k
                yield from rec(k + 1)
                del filled[c]

    yield from rec(1)


def reading_word(t: StandardYoungTableau) -> tuple[int, ...]:
    # shape.cells is already row-major: top row first, left to right
    return tuple(t.entries[c] for c in t.shape.cells)


def permutation_sign(w: Sequence[int]) -> int:
    """(-1) to the number of inversions of ``w``; the empty word has sign +1."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise NotAPermutation(f"{tuple(w)} is not a permutation of 1..{n}")
    inversions = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
    return -1 if inversions % 2 else 1


def imbalance(shape: SkewShape) -> int:
    return sum(permutation_sign(reading_word(t)) for t in enumerate_syt(shape))
