"""Permutation groups acting on [n] and on its power set.

Points are 0-indexed internally and 1-indexed in every piece of text the
module reads or writes.  Subsets of [n] are bitmasks: bit ``i`` set means
point ``i + 1`` is in the subset.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DEFAULT_LIMITS, GroupSpecError, LimitExceeded, Limits
from .qpoly import QPolynomial


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}; ``image[i]`` is where point i goes."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"{self.image} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-indexed disjoint cycles."""
        image = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if a in seen:
                    raise ValueError(f"point {a + 1} appears in two cycles")
                seen.add(a)
                image[a] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``p * q`` applies p first, then q."""
        return Permutation(tuple(other.image[j] for j in self.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_derangement(self) -> bool:
        return all(i != j for i, j in enumerate(self.image))

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.image):
            if mask >> i & 1:
                out |= 1 << j
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "(1)"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)


@dataclass(frozen=True)
class PermGroup:
    """The subgroup of S_n generated by ``generators``.

    ``spec`` remembers the canonical spec string for named families so
    ``format_group`` can round-trip them.
    """

    n: int
    generators: tuple[Permutation, ...]
    spec: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator on {g.n} points in a group on {self.n} points")

    def point_orbits(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g.image):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        orbits: dict[int, list[int]] = {}
        for i in range(self.n):
            orbits.setdefault(find(i), []).append(i)
        return sorted(orbits.values())

    def is_transitive(self) -> bool:
        return len(self.point_orbits()) <= 1

    def elements(self, limits: Limits = DEFAULT_LIMITS) -> list[Permutation]:
        """All group elements by breadth-first closure, identity first."""
        ident = Permutation.identity(self.n)
        found = {ident.image: ident}
        queue = deque([ident])
        gens = [g for g in self.generators if not g.is_identity()]
        while queue:
            p = queue.popleft()
            for g in gens:
                h = p * g
                if h.image not in found:
                    found[h.image] = h
                    if len(found) > limits.max_group_order:
                        raise LimitExceeded(
                            f"group order exceeds the closure limit {limits.max_group_order}"
                        )
                    queue.append(h)
        return list(found.values())

    def order(self, limits: Limits = DEFAULT_LIMITS) -> int:
        return len(self.elements(limits))


# -- group spec parsing -----------------------------------------------------


class _Cursor:
    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str):
        raise GroupSpecError(message, self.text, self.pos)

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected an integer, found {found}")
        return int(self.text[start : self.pos])

    def done(self):
        if self.pos != len(self.text):
            self.fail(f"unexpected {self.peek()!r}")


def _parse_generator(cur: _Cursor, n: int) -> Permutation:
    cycles: list[list[int]] = []
    used: set[int] = set()
    if cur.peek() != "(":
        cur.fail("expected '(' to start a cycle")
    while cur.peek() == "(":
        cur.expect("(")
        cyc: list[int] = []
        while True:
            at = cur.pos
            p = cur.integer()
            if not 1 <= p <= n:
                raise GroupSpecError(f"point {p} outside [1, {n}]", cur.text, at)
            if p in cyc:
                raise GroupSpecError(f"point {p} repeated within a cycle", cur.text, at)
            if p in used:
                raise GroupSpecError(
                    f"point {p} already used in another cycle of this generator", cur.text, at
                )
            cyc.append(p)
            if cur.peek() == " ":
                cur.pos += 1
                continue
            cur.expect(")")
            break
        used.update(cyc)
        cycles.append([p - 1 for p in cyc])
    return Permutation.from_cycles(n, cycles)


def cyclic_group(n: int) -> PermGroup:
    gen = Permutation(tuple((i + 1) % n for i in range(n))) if n else Permutation(())
    return PermGroup(n, (gen,), spec=f"cyclic:{n}")


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    if n >= 3:
        gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
    if not gens:
        gens.append(Permutation.identity(n))
    return PermGroup(n, tuple(gens), spec=f"symmetric:{n}")


def wreath_group(k: int, l: int) -> PermGroup:
    """Stabilizer of the row partition of a k x l box, boxes numbered row-major.

    Row ``a`` holds points ``a*l, ..., a*l + l - 1`` (0-indexed).
    """
    n = k * l
    gens: list[Permutation] = []
    if l >= 2:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    if l >= 3:
        gens.append(Permutation.from_cycles(n, [list(range(l))]))
    if k >= 2 and l >= 1:
        gens.append(Permutation.from_cycles(n, [[b, l + b] for b in range(l)]))
    if k >= 3 and l >= 1:
        image = [((i // l + 1) % k) * l + i % l for i in range(n)]
        gens.append(Permutation(tuple(image)))
    if not gens:
        gens.append(Permutation.identity(n))
    return PermGroup(n, tuple(gens), spec=f"wreath:{k},{l}")


def parse_group(spec: str) -> PermGroup:
    """Parse ``cyclic:n``, ``symmetric:n``, ``wreath:k,l`` or ``gens:n:(..)(..),(..)``."""
    spec = spec.strip()
    kind, sep, _ = spec.partition(":")
    if not sep:
        raise GroupSpecError("missing ':' after the group kind", spec, len(spec))
    cur = _Cursor(spec, len(kind) + 1)
    if kind == "cyclic":
        n = cur.integer()
        cur.done()
        if n < 1:
            raise GroupSpecError("cyclic group needs n >= 1", spec, len(kind) + 1)
        return cyclic_group(n)
    if kind == "symmetric":
        n = cur.integer()
        cur.done()
        return symmetric_group(n)
    if kind == "wreath":
        k = cur.integer()
        cur.expect(",")
        l = cur.integer()
        cur.done()
        return wreath_group(k, l)
    if kind == "gens":
        n = cur.integer()
        cur.expect(":")
        gens = [_parse_generator(cur, n)]
        while cur.peek() == ",":
            cur.pos += 1
            gens.append(_parse_generator(cur, n))
        cur.done()
        return PermGroup(n, tuple(gens))
    raise GroupSpecError(f"unknown group kind {kind!r}", spec, 0)


def format_group(group: PermGroup) -> str:
    if group.spec is not None:
        return group.spec
    return f"gens:{group.n}:" + ",".join(g.cycle_string() for g in group.generators)


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, (Permutation.identity(n),))


# -- orbits on subsets ------------------------------------------------------


@dataclass(frozen=True)
class SubsetOrbit:
    canonical: int
    orbit_size: int
    member_size: int

    def members(self, group: PermGroup) -> list[int]:
        seen = {self.canonical}
        queue = [self.canonical]
        while queue:
            m = queue.pop()
            for g in group.generators:
                h = g.apply_mask(m)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return sorted(seen)


def mask_to_points(mask: int) -> list[int]:
    """1-indexed points of a bitmask, ascending."""
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return out


def points_to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << (p - 1)
    return mask


def popcounts(n: int) -> np.ndarray:
    """Cardinality of every subset of [n], indexed by bitmask."""
    pc = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        pc[1 << i : 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


def mask_images(perm: Permutation) -> np.ndarray:
    """Image of every bitmask under ``perm``."""
    n = perm.n
    dtype = np.uint32 if n <= 32 else np.uint64
    masks = np.arange(1 << n, dtype=dtype)
    out = np.zeros(1 << n, dtype=dtype)
    for i, j in enumerate(perm.image):
        out |= ((masks >> dtype(i)) & dtype(1)) << dtype(j)
    return out


class SubsetOrbitTable:
    """Orbit representatives for every subset of [n] under a group.

    ``rep[m]`` is the numerically least mask in the orbit of ``m``.
    """

    def __init__(self, group: PermGroup, limits: Limits = DEFAULT_LIMITS):
        limits.check_points(group.n)
        self.group = group
        n = group.n
        size = 1 << n
        rep = np.arange(size, dtype=np.int64)
        tables = []
        for g in group.generators:
            if g.is_identity():
                continue
            img = mask_images(g).astype(np.int64)
            inv = np.empty_like(img)
            inv[img] = np.arange(size, dtype=np.int64)
            tables.append((img, inv))
        # min-label propagation with pointer jumping; labels stay inside the orbit
        while tables:
            new = rep
            for img, inv in tables:
                new = np.minimum(new, rep[img])
                new = np.minimum(new, rep[inv])
            new = new[new]
            if np.array_equal(new, rep):
                break
            rep = new
        self.rep = rep
        self.popcount = popcounts(n)
        canon = np.flatnonzero(rep == np.arange(size))
        counts = np.bincount(rep, minlength=size)
        self.orbits = [
            SubsetOrbit(int(m), int(counts[m]), int(self.popcount[m])) for m in canon
        ]

    def by_size(self) -> list[list[SubsetOrbit]]:
        out: list[list[SubsetOrbit]] = [[] for _ in range(self.group.n + 1)]
        for o in self.orbits:
            out[o.member_size].append(o)
        return out


def subset_orbits(group: PermGroup, limits: Limits = DEFAULT_LIMITS) -> list[SubsetOrbit]:
    return SubsetOrbitTable(group, limits).orbits


def orbit_polynomial(group: PermGroup, limits: Limits = DEFAULT_LIMITS) -> QPolynomial:
    """X(G, q): orbits on subsets counted by cardinality."""
    return QPolynomial.from_counts(o.member_size for o in subset_orbits(group, limits))


def self_complementary_orbit_count(group: PermGroup, limits: Limits = DEFAULT_LIMITS) -> int:
    table = SubsetOrbitTable(group, limits)
    full = (1 << group.n) - 1
    return sum(1 for o in table.orbits if table.rep[full ^ o.canonical] == o.canonical)


def has_odd_orbit(group: PermGroup) -> bool:
    return any(len(o) % 2 for o in group.point_orbits())


def has_two_power_derangement(group: PermGroup, limits: Limits = DEFAULT_LIMITS) -> bool:
    for g in group.elements(limits):
        o = g.order()
        if o >= 2 and o & (o - 1) == 0 and g.is_derangement():
            return True
    return False


def stable_subsets(group: PermGroup) -> list[int]:
    """Every G-stable subset of [n] (unions of point orbits), as bitmasks."""
    orbit_masks = [sum(1 << p for p in o) for o in group.point_orbits()]
    out = []
    for choice in range(1 << len(orbit_masks)):
        out.append(sum(m for b, m in enumerate(orbit_masks) if choice >> b & 1))
    return sorted(out)


def is_stable(group: PermGroup, mask: int) -> bool:
    return all(g.apply_mask(mask) == mask for g in group.generators)
