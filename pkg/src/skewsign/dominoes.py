"""Domino tableaux, domino tilings and their sign/spin statistics.

A domino is stored by its anchor (top-left cell) and orientation.  Spin is
never stored as a fraction: ``vertical_count`` (twice the spin) is the integer
statistic, and powers of -1 to a half-integer are handled as powers of the
imaginary unit in :class:`GaussianInteger`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .shapes import Cell, SkewShape, v_statistic
from .tableaux import StandardYoungTableau, permutation_sign, reading_word


class NoTiling(ValueError):
    """Raised when a shape admits no domino tiling."""


class Orientation(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


@dataclass(frozen=True)
class Domino:
    row: int
    col: int
    orientation: Orientation

    @property
    def vertical(self) -> bool:
        return self.orientation is Orientation.VERTICAL

    @property
    def cells(self) -> tuple[Cell, Cell]:
        if self.vertical:
            return (self.row, self.col), (self.row + 1, self.col)
        return (self.row, self.col), (self.row, self.col + 1)

    def __lt__(self, other):
        # Enum members are not orderable; H sorts before V
        return (self.row, self.col, self.orientation.value) < (other.row, other.col, other.orientation.value)


def horizontal(row: int, col: int) -> Domino:
    return Domino(row, col, Orientation.HORIZONTAL)


def vertical(row: int, col: int) -> Domino:
    return Domino(row, col, Orientation.VERTICAL)


@dataclass(frozen=True)
class GaussianInteger:
    re: int = 0
    im: int = 0

    def __add__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    @staticmethod
    def i_power(k: int) -> GaussianInteger:
        """The imaginary unit raised to ``k``."""
        return _I_POWERS[k % 4]

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


_I_POWERS = (GaussianInteger(1, 0), GaussianInteger(0, 1), GaussianInteger(-1, 0), GaussianInteger(0, -1))


def _check_tiles(shape: SkewShape, dominoes: Iterable[Domino]) -> None:
    seen: set[Cell] = set()
    for d in dominoes:
        for c in d.cells:
            if c not in shape:
                raise ValueError(f"domino {d} leaves the shape {shape}")
            if c in seen:
                raise ValueError(f"domino {d} overlaps another domino")
            seen.add(c)
    if len(seen) != shape.size:
        raise ValueError("dominoes do not cover the shape")


@dataclass(frozen=True)
class DominoTiling:
    shape: SkewShape
    dominoes: frozenset[Domino]

    def __post_init__(self):
        _check_tiles(self.shape, self.dominoes)

    def sorted_dominoes(self) -> list[Domino]:
        return sorted(self.dominoes)


@dataclass(frozen=True)
class StandardDominoTableau:
    shape: SkewShape
    dominoes: tuple[tuple[Domino, int], ...]

    def __post_init__(self):
        labels = [label for _, label in self.dominoes]
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError("labels must be 1..k")
        _check_tiles(self.shape, (d for d, _ in self.dominoes))
        if not is_domino_chain(self.shape, self.dominoes):
            raise ValueError("labelled dominoes do not form a chain of partitions")

    @property
    def tiling(self) -> DominoTiling:
        return DominoTiling(self.shape, frozenset(d for d, _ in self.dominoes))


def is_domino_chain(shape: SkewShape, labelled: Iterable[tuple[Domino, int]]) -> bool:
    """True iff adding the dominoes in label order keeps a partition shape at each step."""
    rows = {i: shape.inner.row(i) for i in range(1, len(shape.outer) + 2)}
    rows[0] = float("inf")
    for d, _ in sorted(labelled, key=lambda p: p[1]):
        r, c = d.row, d.col
        if d.vertical:
            if not (rows[r] == rows[r + 1] == c - 1 and rows[r - 1] >= c):
                return False
            rows[r] = rows[r + 1] = c
        else:
            if not (rows[r] == c - 1 and rows[r - 1] >= c + 1):
                return False
            rows[r] = c + 1
    return True


def _addable(shape: SkewShape, rows: list[int]) -> Iterator[Domino]:
    # rows[i] is the current length of row i (index 0 is a sentinel)
    outer = shape.outer
    for r in range(1, len(outer) + 1):
        c = rows[r] + 1
        above = rows[r - 1]
        if c + 1 <= outer.row(r) and c + 1 <= above:
            yield horizontal(r, c)
        if rows[r + 1] == rows[r] and c <= outer.row(r + 1) and c <= above:
            yield vertical(r, c)


def enumerate_sdt(shape: SkewShape) -> Iterator[StandardDominoTableau]:
    """Every standard domino tableau of ``shape``, each exactly once.

    Backtracks over chains of partitions from the inner shape, adding one
    domino per step in (row, col, orientation) order.
    """
    if shape.size % 2:
        return
    k = shape.size // 2
    rows = [10**9] + [shape.inner.row(i) for i in range(1, len(shape.outer) + 2)]
    placed: list[tuple[Domino, int]] = []

    def rec(label):
        if label > k:
            yield StandardDominoTableau(shape, tuple(placed))
            return
        for d in list(_addable(shape, rows)):
            saved = rows[d.row], rows[d.row + 1]
            if d.vertical:
                rows[d.row] = rows[d.row + 1] = d.col
            else:
                rows[d.row] = d.col + 1
            placed.append((d, label))
            yield from rec(label + 1)
            placed.pop()
            rows[d.row], rows[d.row + 1] = saved

    yield from rec(1)


def expand_to_syt(d: StandardDominoTableau) -> StandardYoungTableau:
    """Replace domino i by 2i-1 (left or top cell) and 2i (right or bottom cell)."""
    entries = {}
    for dom, label in d.dominoes:
        first, second = dom.cells
        entries[first] = 2 * label - 1
        entries[second] = 2 * label
    return StandardYoungTableau(d.shape, entries)


def sign_domino(d: StandardDominoTableau) -> int:
    return permutation_sign(reading_word(expand_to_syt(d)))


def _dominoes_of(obj) -> list[Domino]:
    if isinstance(obj, StandardDominoTableau):
        return [dom for dom, _ in obj.dominoes]
    return list(obj.dominoes)


def vertical_count(d) -> int:
    """Number of vertical dominoes, i.e. twice the spin."""
    return sum(1 for dom in _dominoes_of(d) if dom.vertical)


def is_nice(shape: SkewShape, dom: Domino) -> bool:
    """A vertical domino is nice when its column minus the inner row length
    of its lower row is even (odd number of shape cells to its left there)."""
    if not dom.vertical:
        return False
    lower = dom.row + 1
    return (dom.col - shape.inner.row(lower)) % 2 == 0


def nice_and_bad_counts(d) -> tuple[int, int]:
    """``(nv, bv)`` for a domino tableau or an unlabelled tiling."""
    doms = _dominoes_of(d)
    nv = sum(1 for dom in doms if is_nice(d.shape, dom))
    return nv, vertical_count(d) - nv


def spin_sum(shape: SkewShape) -> GaussianInteger:
    """Sum over standard domino tableaux of i ** vertical_count."""
    total = GaussianInteger()
    for d in enumerate_sdt(shape):
        total = total + GaussianInteger.i_power(vertical_count(d))
    return total


def enumerate_tilings(shape: SkewShape) -> Iterator[DominoTiling]:
    """All domino tilings, covering the first free cell in row-major order."""
    if shape.size % 2:
        return
    cells = shape.cells
    covered: set[Cell] = set()
    chosen: list[Domino] = []

    def rec(idx):
        while idx < len(cells) and cells[idx] in covered:
            idx += 1
        if idx == len(cells):
            yield DominoTiling(shape, frozenset(chosen))
            return
        r, c = cells[idx]
        for dom in (horizontal(r, c), vertical(r, c)):
            a, b = dom.cells
            if b in shape and b not in covered:
                covered.update((a, b))
                chosen.append(dom)
                yield from rec(idx + 1)
                chosen.pop()
                covered.difference_update((a, b))

    yield from rec(0)


def flip_neighbors(t: DominoTiling) -> list[DominoTiling]:
    """Tilings reachable by one 2x2 flip (two verticals <-> two horizontals)."""
    out = []
    doms = t.dominoes
    for d in sorted(doms):
        if d.vertical:
            partner = vertical(d.row, d.col + 1)
            swap = (horizontal(d.row, d.col), horizontal(d.row + 1, d.col))
        else:
            partner = horizontal(d.row + 1, d.col)
            swap = (vertical(d.row, d.col), vertical(d.row, d.col + 1))
        if partner in doms:
            out.append(DominoTiling(t.shape, (doms - {d, partner}) | frozenset(swap)))
    return out


class FlipGraph(NamedTuple):
    connected: bool
    components: int
    tilings: int
    edges: int


def flip_graph(shape: SkewShape) -> FlipGraph:
    """Connectivity summary of the flip graph, by breadth-first search."""
    nodes = [t.dominoes for t in enumerate_tilings(shape)]
    if not nodes:
        raise NoTiling(f"{shape} has no domino tiling")
    index = set(nodes)
    seen: set[frozenset[Domino]] = set()
    components = 0
    edges = 0
    for start in nodes:
        if start in seen:
            continue
        components += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nb in flip_neighbors(DominoTiling(shape, cur)):
                if nb.dominoes not in index:
                    raise AssertionError(f"flip produced a non-tiling of {shape}")
                edges += 1
                if nb.dominoes not in seen:
                    seen.add(nb.dominoes)
                    queue.append(nb.dominoes)
    return FlipGraph(components == 1, components, len(nodes), edges // 2)


def flip_graph_connected(shape: SkewShape) -> bool:
    return flip_graph(shape).connected


@dataclass(frozen=True)
class ShapeInvariants:
    v_outer: int
    v_inner: int
    v_prime: int
    vertical_parity: int

    def __post_init__(self):
        if (self.v_prime - self.v_outer - self.v_inner) % 2:
            raise ValueError(
                f"v' = {self.v_prime} is not congruent to v(outer) + v(inner) = "
                f"{self.v_outer} + {self.v_inner} mod 2"
            )


def nv_minus_bv(t) -> int:
    nv, bv = nice_and_bad_counts(t)
    return nv - bv


def shape_invariants(shape: SkewShape) -> ShapeInvariants:
    """v(outer), v(inner) and v' = nv - bv read off the first tiling."""
    first = next(enumerate_tilings(shape), None)
    if first is None:
        raise NoTiling(f"{shape} has no domino tiling")
    return ShapeInvariants(
        v_outer=v_statistic(shape.outer),
        v_inner=v_statistic(shape.inner),
        v_prime=nv_minus_bv(first),
        vertical_parity=vertical_count(first) % 2,
    )
