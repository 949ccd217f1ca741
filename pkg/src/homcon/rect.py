"""Partitions in a k x l rectangle: the wreath-product orbit complex and its Morse matching.

A partition is a weakly decreasing k-tuple with entries in [0, l]; zeros
are kept because the multiplicity of 0 matters when l is odd.  Part
indices are 0-based throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .chain import GradedComplex
from .errors import DEFAULT_LIMITS, Limits
from .gf2 import F2Matrix
from .morse import SupportedComplex
from .orbit_complex import ComplexKind, build
from .permgroup import wreath_group

Partition = tuple[int, ...]


def partitions_in_box(k: int, l: int) -> list[Partition]:
    """All of P(k, l), sorted by size and then in decreasing lexicographic order."""
    parts = [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(l + 1), k)]
    return sorted(parts, key=lambda p: (sum(p), tuple(-x for x in p)))


def complement(lam: Partition, l: int) -> Partition:
    return tuple(l - x for x in reversed(lam))


def is_self_complementary(lam: Partition, l: int) -> bool:
    return complement(lam, l) == lam


def _can_reduce(lam: Partition, i: int) -> bool:
    return lam[i] >= 1 and (i + 1 == len(lam) or lam[i + 1] < lam[i])


def boundary_coefficient(lam: Partition, i: int, l: int) -> int:
    """Coefficient mod 2 of lam with part i lowered by one in D(lam)."""
    if not _can_reduce(lam, i):
        raise ValueError(f"lowering part {i} of {lam} does not give a partition")
    mult = Counter(lam)[lam[i] - 1]
    return (l - lam[i] + 1) * (mult + 1) % 2


def reductions(lam: Partition) -> list[tuple[int, Partition]]:
    """(part index, result) for every partition covered by lam."""
    out = []
    for i in range(len(lam)):
        if _can_reduce(lam, i):
            out.append((i, lam[:i] + (lam[i] - 1,) + lam[i + 1 :]))
    return out


def a_part(lam: Partition, l: int) -> tuple[int, int] | None:
    """(value, index) of the last nonzero part with the parity of l."""
    for i in range(len(lam) - 1, -1, -1):
        if lam[i] and lam[i] % 2 == l % 2:
            return lam[i], i
    return None


def b_part(lam: Partition, l: int) -> tuple[int, int] | None:
    """(value, index of first occurrence) of the smallest part with odd
    multiplicity and parity opposite to l; zero parts count."""
    mult = Counter(lam)
    best = None
    for v, m in mult.items():
        if m % 2 and v % 2 != l % 2 and (best is None or v < best):
            best = v
    if best is None:
        return None
    return best, lam.index(best)


def matching(lam: Partition, l: int) -> Partition | None:
    a, b = a_part(lam, l), b_part(lam, l)
    if a is None and b is None:
        return None
    if b is None or (a is not None and a[0] < b[0]):
        v, i = a
        return lam[:i] + (v - 1,) + lam[i + 1 :]
    v, i = b
    return lam[:i] + (v + 1,) + lam[i + 1 :]


def is_critical(lam: Partition, l: int) -> bool:
    """Every nonzero part has even multiplicity and parity opposite to l,
    and for odd l the zero parts also come in even number."""
    mult = Counter(lam)
    for v, m in mult.items():
        if v == 0:
            if l % 2 and m % 2:
                return False
        elif m % 2 or v % 2 == l % 2:
            return False
    return True


def critical_cells(k: int, l: int) -> list[Partition]:
    return [lam for lam in partitions_in_box(k, l) if is_critical(lam, l)]


# -- N/E words and the bijection phi ----------------------------------------


def word(lam: Partition, l: int) -> str:
    """Boundary path from the SW to the NE corner; the empty partition gives N^k E^l."""
    steps = []
    prev = 0
    for x in reversed(lam):
        steps.append("E" * (x - prev))
        steps.append("N")
        prev = x
    steps.append("E" * (l - prev))
    return "".join(steps)


def from_word(w: str) -> Partition:
    parts = []
    x = 0
    for ch in w:
        if ch == "E":
            x += 1
        elif ch == "N":
            parts.append(x)
        else:
            raise ValueError(f"bad letter {ch!r}")
    return tuple(reversed(parts))


def _blocks(w: str) -> list[tuple[int, int]]:
    """Write w = N^k1 E^l1 ... N^kt E^lt with k1, lt >= 0 and all else positive."""
    blocks = []
    i = 0
    while i < len(w):
        kn = 0
        while i < len(w) and w[i] == "N":
            kn += 1
            i += 1
        le = 0
        while i < len(w) and w[i] == "E":
            le += 1
            i += 1
        blocks.append((kn, le))
    return blocks or [(0, 0)]


def _assemble(blocks: list[tuple[int, int]]) -> str:
    return "".join("N" * a + "E" * b for a, b in blocks)


def phi(lam: Partition, k: int, l: int) -> Partition:
    """Self-complementary partition attached to a critical cell."""
    if k % 2 and l % 2:
        raise ValueError("no critical cells when k and l are both odd")
    if len(lam) != k or not is_critical(lam, l):
        raise ValueError(f"{lam} is not a critical cell of P({k},{l})")
    w = word(lam, l)
    bl = _blocks(w)
    empty = not any(lam)
    if k % 2 == 0 and l % 2:
        half = [(a // 2, b // 2) for a, b in bl[:-1]] + [(bl[-1][0] // 2, (bl[-1][1] - 1) // 2)]
        h = _assemble(half)
        out = h + "E" + h[::-1]
    elif k % 2 == 0:
        if empty:
            out = "N" * (k // 2) + "E" * l + "N" * (k // 2)
        else:
            half = [(bl[0][0] // 2, (bl[0][1] + 1) // 2)]
            half += [(a // 2, b // 2) for a, b in bl[1:-1]]
            half.append((bl[-1][0] // 2, (bl[-1][1] - 1) // 2))
            h = _assemble(half)
            out = h + h[::-1]
    else:
        if empty:
            out = "N" * ((k - 1) // 2) + "E" * (l // 2) + "N" + "E" * (l // 2) + "N" * ((k - 1) // 2)
        else:
            half = [((bl[0][0] - 1) // 2, (bl[0][1] + 1) // 2)]
            half += [(a // 2, b // 2) for a, b in bl[1:-1]]
            half.append((bl[-1][0] // 2, (bl[-1][1] - 1) // 2))
            h = _assemble(half)
            out = h + "N" + h[::-1]
    if out.count("N") != k or out.count("E") != l:
        raise AssertionError(f"phi produced a word of the wrong content: {w} -> {out}")
    return from_word(out)


# -- the complex ------------------------------------------------------------


def _less(mu: Partition, lam: Partition) -> bool:
    return mu != lam and all(a <= b for a, b in zip(mu, lam))


def build_rect_complex(k: int, l: int, limits: Limits = DEFAULT_LIMITS) -> SupportedComplex:
    """P(k, l) graded by size, boundary entries from the closed-form coefficients."""
    limits.check_cells(comb(k + l, k), "partitions")
    levels: list[list[Partition]] = [[] for _ in range(k * l + 1)]
    for lam in partitions_in_box(k, l):
        levels[sum(lam)].append(lam)
    index = [{lam: j for j, lam in enumerate(level)} for level in levels]
    maps = []
    for i in range(1, k * l + 1):
        rows: list[list[int]] = [[] for _ in levels[i - 1]]
        for j, lam in enumerate(levels[i]):
            for part, mu in reductions(lam):
                if boundary_coefficient(lam, part, l):
                    rows[index[i - 1][mu]].append(j)
        maps.append(F2Matrix.from_rows(rows, len(levels[i])))
    cx = GradedComplex.from_maps(levels, maps, name=f"rect:{k},{l}", meta={"k": k, "l": l})
    return SupportedComplex(cx, less=_less, covered_by=lambda lam: [mu for _, mu in reductions(lam)])


def rect_matching(k: int, l: int) -> dict[Partition, Partition]:
    out = {}
    for lam in partitions_in_box(k, l):
        m = matching(lam, l)
        if m is not None:
            out[lam] = m
    return out


def mask_to_partition(mask: int, k: int, l: int) -> Partition:
    """Row counts of a set of boxes (numbered row-major), sorted decreasingly."""
    rows = [bin((mask >> (a * l)) & ((1 << l) - 1)).count("1") for a in range(k)]
    return tuple(sorted(rows, reverse=True))


@dataclass(frozen=True)
class WreathComparison:
    matches: dict[str, bool]

    @property
    def matching_kinds(self) -> list[str]:
        return [kind for kind, ok in self.matches.items() if ok]


def compare_with_wreath(k: int, l: int, limits: Limits = DEFAULT_LIMITS) -> WreathComparison:
    """Compare the closed-form boundary with the two down-map orbit complexes
    of the row stabilizer, after relabelling orbits by partitions."""
    rect = build_rect_complex(k, l, limits).complex
    group = wreath_group(k, l)
    result = {}
    for kind in (ComplexKind.INV_D, ComplexKind.COINV_D):
        orb = build(group, kind, limits)
        same = orb.dims() == rect.dims()
        for i in range(1, k * l + 1) if same else ():
            col_labels = [mask_to_partition(m, k, l) for m in orb.labels[i]]
            row_labels = [mask_to_partition(m, k, l) for m in orb.labels[i - 1]]
            ri, ci = rect.index(i - 1), rect.index(i)
            dense = rect.boundary[i].to_dense()
            permuted = dense[[ri[p] for p in row_labels]][:, [ci[p] for p in col_labels]]
            if F2Matrix.from_dense(permuted, shape=dense.shape) != orb.boundary[i]:
                same = False
                break
        result[kind.value] = same
    return WreathComparison(result)


def self_complementary_partitions(k: int, l: int) -> list[Partition]:
    return [lam for lam in partitions_in_box(k, l) if is_self_complementary(lam, l)]
