"""Invariant and coinvariant complexes of a permutation group over GF(2).

For G acting on subsets of [n], each of the four complexes has one cell per
G-orbit of i-subsets in rank i.  With S a fixed representative of an orbit
of (i-1)-subsets and T a fixed representative of an orbit of i-subsets,
two incidence counts describe every map, mod 2:

    up(S-orbit, T-orbit)   = #{j not in S : S + j lies in the T-orbit}
    down(S-orbit, T-orbit) = #{j in T     : T - j lies in the S-orbit}

The down map on invariants uses ``up``, the down map on coinvariants uses
``down``; the up maps use the transposes the other way round.  The two up
complexes are stored reindexed by rank i -> n - i so one homology routine
handles all four kinds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .chain import GradedComplex, euler_characteristic, homology_ranks
from .errors import DEFAULT_LIMITS, Limits
from .gf2 import WORD, F2Matrix, multiply
from .permgroup import PermGroup, SubsetOrbitTable, is_stable, mask_images, mask_to_points


class ComplexKind(str, enum.Enum):
    INV_D = "inv-d"
    COINV_D = "coinv-d"
    INV_U = "inv-u"
    COINV_U = "coinv-u"

    @property
    def reindexed(self) -> bool:
        return self in (ComplexKind.INV_U, ComplexKind.COINV_U)


def _packed(rows: int, cols: int, pairs_r: list[np.ndarray], pairs_c: list[np.ndarray]) -> F2Matrix:
    words = np.zeros((rows, (cols + WORD - 1) // WORD), dtype=np.uint64)
    if pairs_r:
        r = np.concatenate(pairs_r)
        c = np.concatenate(pairs_c)
        np.bitwise_xor.at(words, (r, c // WORD), np.left_shift(np.uint64(1), (c % WORD).astype(np.uint64)))
    return F2Matrix(rows, cols, words)


class _OrbitData:
    def __init__(self, group: PermGroup, limits: Limits):
        self.group = group
        self.table = SubsetOrbitTable(group, limits)
        n = group.n
        self.reps = [np.array([o.canonical for o in level], dtype=np.int64) for level in self.table.by_size()]
        self.index = np.full(1 << n, -1, dtype=np.int64)
        for level in self.reps:
            self.index[level] = np.arange(len(level))

    def up_counts(self, i: int) -> F2Matrix:
        """Rows: orbits of (i-1)-subsets, columns: orbits of i-subsets."""
        lo = self.reps[i - 1]
        rr, cc = [], []
        for j in range(self.group.n):
            bit = 1 << j
            free = np.flatnonzero((lo & bit) == 0)
            targets = self.table.rep[lo[free] | bit]
            rr.append(free)
            cc.append(self.index[targets])
        return _packed(len(lo), len(self.reps[i]), rr, cc)

    def down_counts(self, i: int) -> F2Matrix:
        hi = self.reps[i]
        rr, cc = [], []
        for j in range(self.group.n):
            bit = 1 << j
            has = np.flatnonzero(hi & bit)
            targets = self.table.rep[hi[has] ^ bit]
            rr.append(self.index[targets])
            cc.append(has)
        return _packed(len(self.reps[i - 1]), len(hi), rr, cc)


def build(group: PermGroup, kind: ComplexKind | str, limits: Limits = DEFAULT_LIMITS, _data=None) -> GradedComplex:
    """One of the four orbit complexes; labels are canonical orbit bitmasks."""
    kind = ComplexKind(kind)
    data = _data or _OrbitData(group, limits)
    n = group.n
    labels = [tuple(int(m) for m in level) for level in data.reps]
    if kind is ComplexKind.INV_D:
        maps = [data.up_counts(i) for i in range(1, n + 1)]
    elif kind is ComplexKind.COINV_D:
        maps = [data.down_counts(i) for i in range(1, n + 1)]
    else:
        counts = data.down_counts if kind is ComplexKind.INV_U else data.up_counts
        # storage rank j holds cardinality n - j; d_j is U from n-j to n-j+1
        maps = [counts(n - j + 1).transpose() for j in range(1, n + 1)]
        labels = labels[::-1]
    return GradedComplex.from_maps(labels, maps, name=kind.value, meta={"n": n, "kind": kind.value})


def homology(group: PermGroup, kind: ComplexKind | str = ComplexKind.INV_D, limits: Limits = DEFAULT_LIMITS, threads: int = 1) -> list[int]:
    """Homology ranks indexed by subset cardinality.

    For the up complexes this is the cohomology of the cochain complex in
    its native degree, i.e. the reindexed homology read backwards.
    """
    kind = ComplexKind(kind)
    ranks = homology_ranks(build(group, kind, limits), threads)
    return ranks[::-1] if kind.reindexed else ranks


@dataclass(frozen=True)
class FourComplexReport:
    dims: list[int]
    homology: dict[str, list[int]]
    euler: dict[str, int]
    squares_to_zero: dict[str, bool]

    def duality_holds(self) -> bool:
        h = self.homology
        return (
            h["inv-u"] == h["inv-d"][::-1]
            and h["coinv-d"] == h["inv-u"]
            and h["coinv-u"] == h["coinv-d"][::-1]
        )


def all_kinds(group: PermGroup, limits: Limits = DEFAULT_LIMITS, threads: int = 1) -> FourComplexReport:
    data = _OrbitData(group, limits)
    hom, eul, sq = {}, {}, {}
    dims = None
    for kind in ComplexKind:
        c = build(group, kind, limits, _data=data)
        ranks = homology_ranks(c, threads)
        hom[kind.value] = ranks[::-1] if kind.reindexed else ranks
        eul[kind.value] = euler_characteristic(c) * ((-1) ** group.n if kind.reindexed else 1)
        sq[kind.value] = c.squares_to_zero()
        if kind is ComplexKind.INV_D:
            dims = c.dims()
    return FourComplexReport(dims, hom, eul, sq)


def render_label(mask: int) -> str:
    return "{" + ",".join(str(p) for p in mask_to_points(mask)) + "}"


# -- the S-masked up map ----------------------------------------------------


def _full_down(n: int) -> F2Matrix:
    size = 1 << n
    masks = np.arange(size)
    rr, cc = [], []
    for j in range(n):
        has = masks[(masks >> j) & 1 == 1]
        rr.append(has ^ (1 << j))
        cc.append(has)
    return _packed(size, size, rr, cc)


def _full_masked_up(n: int, s: int) -> F2Matrix:
    size = 1 << n
    masks = np.arange(size)
    rr, cc = [], []
    for j in range(n):
        if not s >> j & 1:
            continue
        lacks = masks[(masks >> j) & 1 == 0]
        rr.append(lacks | (1 << j))
        cc.append(lacks)
    return _packed(size, size, rr, cc)


def _permutation_matrix(n: int, perm) -> F2Matrix:
    size = 1 << n
    img = mask_images(perm).astype(np.int64)
    return _packed(size, size, [img], [np.arange(size)])


def masked_homotopy_check(group: PermGroup, s: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Check D U_S + U_S D = |S| I, where U_S only adds points of S.

    Verified on the full 2**n-dimensional complex, together with the
    G-equivariance of U_S, and again for the induced maps on the invariant
    complex.  ``s`` is a bitmask and must be a union of point orbits.
    """
    if not is_stable(group, s):
        raise ValueError(f"{render_label(s)} is not G-stable")
    limits.check_points(group.n)
    n = group.n
    weight = bin(s).count("1") % 2
    size = 1 << n

    d = _full_down(n)
    u = _full_masked_up(n, s)
    ident = F2Matrix.identity(size) if weight else F2Matrix.zeros(size, size)
    ok = multiply(d, u) + multiply(u, d) == ident
    for g in group.generators:
        p = _permutation_matrix(n, g)
        ok = ok and multiply(p, u) == multiply(u, p)

    # induced maps on invariants, assembled into one square matrix over all ranks
    data = _OrbitData(group, limits)
    offsets = np.cumsum([0] + [len(level) for level in data.reps])
    total = int(offsets[-1])
    rr, cc = [], []
    for i in range(1, n + 1):
        dm = data.up_counts(i).to_dense()
        r, c = np.nonzero(dm)
        rr.append(r + offsets[i - 1])
        cc.append(c + offsets[i])
    inv_d = _packed(total, total, rr, cc)
    rr, cc = [], []
    for i in range(1, n + 1):
        # coefficient of the i-orbit of R in U_S(e_T) for T an (i-1)-orbit: #{j in R & S : R - j in T-orbit}
        hi = data.reps[i]
        for j in range(n):
            bit = 1 << j
            if not s & bit:
                continue
            has = np.flatnonzero(hi & bit)
            rr.append(has + offsets[i])
            cc.append(data.index[data.table.rep[hi[has] ^ bit]] + offsets[i - 1])
    inv_u = _packed(total, total, rr, cc)
    ident = F2Matrix.identity(total) if weight else F2Matrix.zeros(total, total)
    ok = ok and multiply(inv_d, inv_u) + multiply(inv_u, inv_d) == ident
    return bool(ok)


__all__ = [
    "ComplexKind",
    "FourComplexReport",
    "all_kinds",
    "build",
    "euler_characteristic",
    "homology",
    "homology_ranks",
    "masked_homotopy_check",
    "render_label",
]
