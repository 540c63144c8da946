"""Independent brute-force oracles.

Nothing here calls into the enumeration code under test; shapes are handled
as plain tuples and cell sets.
"""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product


def brute_partitions(n):
    """All partitions of n as descending tuples, found by filtering multisets."""
    out = set()
    for length in range(n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), length):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def brute_contains(outer, inner):
    padded = tuple(outer) + (0,) * len(inner)
    return all(i <= o for i, o in zip(inner, padded))


def cells_of(outer, inner=()):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return {(i + 1, j + 1) for i, row in enumerate(outer) for j in range(inner[i], row)}


@lru_cache(maxsize=None)
def syt_count_by_corners(outer, inner):
    """Number of SYT of outer/inner: sum over removable corners of outer that
    stay outside inner, of the count for the smaller shape."""
    if outer == inner:
        return 1
    total = 0
    padded_inner = inner + (0,) * (len(outer) - len(inner))
    for i, row in enumerate(outer):
        nxt = outer[i + 1] if i + 1 < len(outer) else 0
        if row > nxt and row - 1 >= padded_inner[i]:
            smaller = list(outer)
            smaller[i] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            total += syt_count_by_corners(tuple(smaller), inner)
    return total


def sign_by_cycles(word):
    """(-1)^(n - number of cycles)."""
    n = len(word)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if not seen[start]:
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = word[k] - 1
    return -1 if (n - cycles) % 2 else 1


def all_dominoes(cells):
    """Every horizontal ('H') and vertical ('V') domino inside a cell set."""
    out = []
    for (r, c) in sorted(cells):
        if (r, c + 1) in cells:
            out.append((r, c, "H"))
        if (r + 1, c) in cells:
            out.append((r, c, "V"))
    return out


def domino_cells(d):
    r, c, o = d
    return ((r, c), (r, c + 1)) if o == "H" else ((r, c), (r + 1, c))


def brute_tilings(cells):
    """All exact domino covers, by trying every subset of the right size."""
    if len(cells) % 2:
        return []
    k = len(cells) // 2
    found = []
    for subset in combinations(all_dominoes(cells), k):
        covered = [c for d in subset for c in domino_cells(d)]
        if len(set(covered)) == len(cells):
            found.append(frozenset(subset))
    return found


def is_syt_filling(cells, filling):
    for (r, c), v in filling.items():
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in cells and filling[nb] <= v:
                return False
    return True


def brute_sdt(outer, inner=()):
    """Standard domino tableaux as labelled tilings whose 2i-1, 2i expansion is a SYT."""
    cells = cells_of(outer, inner)
    out = []
    for tiling in brute_tilings(cells):
        doms = sorted(tiling)
        for labels in permutations(range(1, len(doms) + 1)):
            filling = {}
            for d, lab in zip(doms, labels):
                a, b = domino_cells(d)
                filling[a], filling[b] = 2 * lab - 1, 2 * lab
            if is_syt_filling(cells, filling):
                out.append(tuple(sorted(zip(labels, doms))))
    return out


def brute_ssdt_weights(outer, inner, max_entry):
    """Multiset of (weight, vertical count) over semistandard domino tableaux,
    by trying every entry assignment and checking cell-level conditions."""
    cells = cells_of(outer, inner)
    result = {}
    for tiling in brute_tilings(cells):
        doms = sorted(tiling)
        owner = {c: k for k, d in enumerate(doms) for c in domino_cells(d)}
        for entries in product(range(1, max_entry + 1), repeat=len(doms)):
            ok = True
            for (r, c), k in owner.items():
                left, up = owner.get((r, c - 1)), owner.get((r - 1, c))
                if left is not None and left != k and entries[left] > entries[k]:
                    ok = False
                if up is not None and up != k and entries[up] >= entries[k]:
                    ok = False
            if ok:
                weight = tuple(entries.count(e) for e in range(1, max_entry + 1))
                vd = sum(1 for d in doms if d[2] == "V")
                result[(weight, vd)] = result.get((weight, vd), 0) + 1
    return result
