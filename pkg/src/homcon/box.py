"""Plane partitions in an r x c x t box, indexed by rectangular SSYT.

A tableau is an r-tuple of c-tuples with weakly increasing rows, strictly
increasing columns and entries in [0, r+t-1].  Rows are 0-indexed here;
the "row above" the first row and the "row below" the last one do not
exist, and every condition that mentions them holds vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .chain import GradedComplex
from .errors import DEFAULT_LIMITS, Limits
from .gf2 import F2Matrix
from .morse import SupportedComplex
from .qpoly import QPolynomial, macmahon

Tableau = tuple[tuple[int, ...], ...]


def max_entry(r: int, t: int) -> int:
    return r + t - 1


def enumerate_ssyt(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> list[Tableau]:
    """All of SSYT(r, c, t) in row-major lexicographic order."""
    if r < 1 or c < 1 or t < 0:
        raise ValueError("need r, c >= 1 and t >= 0")
    limits.check_cells(macmahon(r, c, t)(1), "tableaux")
    top = max_entry(r, t)
    grid = [[0] * c for _ in range(r)]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == r * c:
            out.append(tuple(tuple(row) for row in grid))
            return
        i, j = divmod(pos, c)
        lo = grid[i][j - 1] if j else 0
        if i:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing column below
        hi = top - (r - 1 - i)
        for v in range(lo, hi + 1):
            grid[i][j] = v
            fill(pos + 1)

    fill(0)
    return out


def is_ssyt(T: Tableau, t: int) -> bool:
    r = len(T)
    top = max_entry(r, t)
    for i, row in enumerate(T):
        for j, v in enumerate(row):
            if not 0 <= v <= top:
                return False
            if j and row[j - 1] > v:
                return False
            if i and T[i - 1][j] >= v:
                return False
    return True


def rank(T: Tableau) -> int:
    return sum(map(sum, T)) - len(T[0]) * comb(len(T), 2)


def _replace(T: Tableau, i: int, j: int, v: int) -> Tableau:
    row = T[i][:j] + (v,) + T[i][j + 1 :]
    return T[:i] + (row,) + T[i + 1 :]


def _lacking_above(T: Tableau, i: int, v: int) -> int:
    """Copies of v in row i without v-1 directly above them."""
    return sum(1 for j, x in enumerate(T[i]) if x == v and (i == 0 or T[i - 1][j] != v - 1))


def _decrementable(T: Tableau, i: int, v: int) -> bool:
    """Condition (1): v odd with an odd number of copies lacking v-1 above."""
    return v % 2 == 1 and v in T[i] and _lacking_above(T, i, v) % 2 == 1


def _incrementable(T: Tableau, i: int, v: int, t: int) -> bool:
    """Condition (2): v even, v < r+t-1, its rightmost copy has no v+1 below,
    and an even number of v+1's in the row lack v above."""
    if v % 2 or v not in T[i] or v >= max_entry(len(T), t):
        return False
    j = len(T[i]) - 1 - T[i][::-1].index(v)
    if i + 1 < len(T) and T[i + 1][j] == v + 1:
        return False
    return _lacking_above(T, i, v + 1) % 2 == 0


def decrement_leftmost(T: Tableau, i: int, v: int) -> Tableau:
    return _replace(T, i, T[i].index(v), v - 1)


def increment_rightmost(T: Tableau, i: int, v: int) -> Tableau:
    j = len(T[i]) - 1 - T[i][::-1].index(v)
    return _replace(T, i, j, v + 1)


def boundary(T: Tableau, t: int) -> list[Tableau]:
    """Tableaux appearing with coefficient 1 in dT."""
    out = []
    for i, row in enumerate(T):
        for v in sorted(set(row)):
            if v % 2 == 1 and _lacking_above(T, i, v) % 2 == 1:
                S = decrement_leftmost(T, i, v)
                if is_ssyt(S, t):
                    out.append(S)
    return out


def decrement_set(T: Tableau, t: int) -> set[tuple[int, int]]:
    """D(T): (row, value) pairs that condition (1) allows to decrement."""
    return {(i, v) for i, row in enumerate(T) for v in set(row) if _decrementable(T, i, v)}


def increment_set(T: Tableau, t: int) -> set[tuple[int, int]]:
    """E(T): (row, value) pairs that condition (2) allows to increment."""
    return {(i, v) for i, row in enumerate(T) for v in set(row) if _incrementable(T, i, v, t)}


def matching(T: Tableau, t: int) -> Tableau | None:
    for i, row in enumerate(T):
        for v in sorted(set(row)):
            if _decrementable(T, i, v):
                return decrement_leftmost(T, i, v)
            if _incrementable(T, i, v, t):
                return increment_rightmost(T, i, v)
    return None


def critical_cells(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> list[Tableau]:
    return [T for T in enumerate_ssyt(r, c, t, limits) if matching(T, t) is None]


def satisfies_critical_description(T: Tableau, t: int) -> bool:
    """Every even 2i < r+t-1 has 2i+1 directly below; in each row, the odd
    values lacking their predecessor above come in even number."""
    r = len(T)
    top = max_entry(r, t)
    for i, row in enumerate(T):
        for j, v in enumerate(row):
            if v % 2 == 0 and v < top and not (i + 1 < r and T[i + 1][j] == v + 1):
                return False
        for v in set(row):
            if v % 2 == 1 and _lacking_above(T, i, v) % 2:
                return False
    return True


# -- the complex ------------------------------------------------------------


def _less(S: Tableau, T: Tableau) -> bool:
    return S != T and all(a <= b for ra, rb in zip(S, T) for a, b in zip(ra, rb))


def covered_by(T: Tableau, t: int) -> list[Tableau]:
    out = []
    for i, row in enumerate(T):
        for j, v in enumerate(row):
            if v:
                S = _replace(T, i, j, v - 1)
                if is_ssyt(S, t):
                    out.append(S)
    return out


def build_box_complex(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> SupportedComplex:
    cells = enumerate_ssyt(r, c, t, limits)
    levels: list[list[Tableau]] = [[] for _ in range(r * c * t + 1)]
    for T in cells:
        levels[rank(T)].append(T)
    index = [{T: j for j, T in enumerate(level)} for level in levels]
    maps = []
    for i in range(1, r * c * t + 1):
        rows: list[list[int]] = [[] for _ in levels[i - 1]]
        for j, T in enumerate(levels[i]):
            for S in boundary(T, t):
                rows[index[i - 1][S]].append(j)
        maps.append(F2Matrix.from_rows(rows, len(levels[i])))
    cx = GradedComplex.from_maps(levels, maps, name=f"box:{r},{c},{t}", meta={"r": r, "c": c, "t": t})
    return SupportedComplex(cx, less=_less, covered_by=lambda T: covered_by(T, t))


def box_matching(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> dict[Tableau, Tableau]:
    out = {}
    for T in enumerate_ssyt(r, c, t, limits):
        m = matching(T, t)
        if m is not None:
            out[T] = m
    return out


# -- domino tableaux --------------------------------------------------------


@dataclass(frozen=True)
class DominoTableau:
    """Tiles are (cells, label) with cells a tuple of (row, col) pairs."""

    r: int
    c: int
    tiles: tuple[tuple[tuple[tuple[int, int], ...], int], ...]

    def label_grid(self) -> list[list[int]]:
        grid = [[0] * self.c for _ in range(self.r)]
        for cells, label in self.tiles:
            for i, j in cells:
                grid[i][j] = label
        return grid

    def tile_of(self) -> dict[tuple[int, int], int]:
        return {cell: n for n, (cells, _) in enumerate(self.tiles) for cell in cells}

    def is_semistandard(self, t: int) -> bool:
        """Odd labels on dominoes, monominoes only in the last row labelled
        r+t-1 when that is even; rows weakly increase and columns strictly
        increase between distinct tiles."""
        top = max_entry(self.r, t)
        covered = sorted(cell for cells, _ in self.tiles for cell in cells)
        if covered != [(i, j) for i in range(self.r) for j in range(self.c)]:
            return False
        for cells, label in self.tiles:
            if len(cells) == 1:
                (i, _), = cells
                if top % 2 or label != top or i != self.r - 1:
                    return False
            elif len(cells) == 2:
                (a, b), (x, y) = sorted(cells)
                if abs(a - x) + abs(b - y) != 1 or label % 2 == 0 or not 0 < label <= top:
                    return False
            else:
                return False
        grid, tile = self.label_grid(), self.tile_of()
        for i in range(self.r):
            for j in range(self.c):
                if j and grid[i][j - 1] > grid[i][j]:
                    return False
                if i and tile[(i - 1, j)] != tile[(i, j)] and grid[i - 1][j] >= grid[i][j]:
                    return False
        return True


def to_domino(T: Tableau, t: int) -> DominoTableau:
    """Tile a critical tableau: 2i over 2i+1 makes a vertical domino, equal
    odd neighbours in a row pair into horizontal dominoes, leftover even
    maxima in the last row are monominoes.  Labels become the odd value."""
    if not satisfies_critical_description(T, t) or matching(T, t) is not None:
        raise ValueError("tableau is not critical")
    r, c = len(T), len(T[0])
    top = max_entry(r, t)
    used = [[False] * c for _ in range(r)]
    tiles = []
    for i in range(r):
        for j in range(c):
            v = T[i][j]
            if v % 2 == 0 and v < top:
                tiles.append((((i, j), (i + 1, j)), v + 1))
                used[i][j] = used[i + 1][j] = True
    for i in range(r):
        j = 0
        while j < c:
            if used[i][j]:
                j += 1
                continue
            v = T[i][j]
            if v % 2 == 0:
                tiles.append((((i, j),), v))
                used[i][j] = True
                j += 1
                continue
            if j + 1 < c and not used[i][j + 1] and T[i][j + 1] == v:
                tiles.append((((i, j), (i, j + 1)), v))
                used[i][j] = used[i][j + 1] = True
                j += 2
                continue
            raise AssertionError(f"unpaired odd entry at {(i, j)} in {T}")
    return DominoTableau(r, c, tuple(sorted(tiles)))


def enumerate_domino_tableaux(r: int, c: int, t: int) -> list[DominoTableau]:
    """Brute-force the target set: every tiling by dominoes (and, when
    r+t-1 is even, last-row monominoes) with admissible labels that is
    semistandard."""
    top = max_entry(r, t)
    odd_labels = list(range(1, top + 1, 2))
    shapes: list[list[tuple[tuple[int, int], ...]]] = []

    def tile(filled: frozenset, acc: list):
        free = [(i, j) for i in range(r) for j in range(c) if (i, j) not in filled]
        if not free:
            shapes.append(list(acc))
            return
        i, j = free[0]
        if j + 1 < c and (i, j + 1) not in filled:
            tile(filled | {(i, j), (i, j + 1)}, acc + [((i, j), (i, j + 1))])
        if i + 1 < r and (i + 1, j) not in filled:
            tile(filled | {(i, j), (i + 1, j)}, acc + [((i, j), (i + 1, j))])
        if top % 2 == 0 and i == r - 1:
            tile(filled | {(i, j)}, acc + [((i, j),)])

    tile(frozenset(), [])
    out = []
    for shape in shapes:
        choices = [[top] if len(cells) == 1 else odd_labels for cells in shape]
        for labels in product(*choices):
            d = DominoTableau(r, c, tuple(sorted(zip(shape, labels))))
            if d.is_semistandard(t):
                out.append(d)
    return sorted(set(out), key=lambda d: d.tiles)


# -- Boolean decomposition --------------------------------------------------


@dataclass(frozen=True)
class BooleanInterval:
    bottom: Tableau
    top: Tableau
    free_positions: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return 2 ** len(self.free_positions)

    def members(self) -> list[Tableau]:
        out = []
        for choice in product((0, 1), repeat=len(self.free_positions)):
            T = self.bottom
            for bit, (i, v) in zip(choice, self.free_positions):
                if bit:
                    T = increment_rightmost(T, i, v)
            out.append(T)
        return out


def to_bottom(T: Tableau, t: int) -> Tableau:
    """Decrement along D until it is empty."""
    while True:
        d = decrement_set(T, t)
        if not d:
            return T
        i, v = min(d)
        T = decrement_leftmost(T, i, v)


def to_top(T: Tableau, t: int) -> Tableau:
    while True:
        e = increment_set(T, t)
        if not e:
            return T
        i, v = min(e)
        T = increment_rightmost(T, i, v)


def boolean_decomposition(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> list[BooleanInterval]:
    out = []
    for T in enumerate_ssyt(r, c, t, limits):
        if not decrement_set(T, t):
            free = tuple(sorted(increment_set(T, t)))
            out.append(BooleanInterval(T, to_top(T, t), free))
    return out


def schur_sum(intervals: list[BooleanInterval]) -> QPolynomial:
    """Sum over bottoms of q^||T|| (1+q)^|E(T)|."""
    total = QPolynomial()
    one_plus_q = QPolynomial([1, 1])
    for iv in intervals:
        total = total + QPolynomial.monomial(sum(map(sum, iv.bottom))) * one_plus_q ** len(iv.free_positions)
    return total


# -- plane partitions -------------------------------------------------------


def to_plane_partition(T: Tableau) -> tuple[tuple[int, ...], ...]:
    """Subtract i from row i (0-indexed): rows/columns weakly increasing, entries in [0, t]."""
    return tuple(tuple(v - i for v in row) for i, row in enumerate(T))


def pp_complement(pp, t: int):
    return tuple(tuple(t - v for v in reversed(row)) for row in reversed(pp))


def self_complementary_plane_partitions(r: int, c: int, t: int, limits: Limits = DEFAULT_LIMITS) -> list:
    out = []
    for T in enumerate_ssyt(r, c, t, limits):
        pp = to_plane_partition(T)
        if pp_complement(pp, t) == pp:
            out.append(pp)
    return out
