"""Graded chain complexes over GF(2) and their homology ranks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .gf2 import F2Matrix, multiply, rank


@dataclass(frozen=True)
class GradedComplex:
    """Basis labels per rank plus boundary maps d_i : C_i -> C_{i-1}.

    ``boundary[i]`` has ``len(labels[i-1])`` rows and ``len(labels[i])``
    columns; ``boundary[0]`` is the zero map out of rank 0 and is stored as
    a ``0 x len(labels[0])`` matrix.
    """

    labels: tuple[tuple[Hashable, ...], ...]
    boundary: tuple[F2Matrix, ...]
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.boundary):
            raise ValueError("need one boundary map per rank")
        for i, d in enumerate(self.boundary):
            rows = len(self.labels[i - 1]) if i else 0
            if d.shape != (rows, len(self.labels[i])):
                raise ValueError(f"d_{i} has shape {d.shape}, expected {(rows, len(self.labels[i]))}")

    @classmethod
    def from_maps(cls, labels: Sequence[Sequence[Hashable]], maps: Sequence[F2Matrix], name: str = "", meta=None):
        """``maps[i-1]`` is d_i for i = 1..top; d_0 is filled in."""
        labels = tuple(tuple(l) for l in labels)
        d0 = F2Matrix.zeros(0, len(labels[0])) if labels else None
        bd = ((d0,) if labels else ()) + tuple(maps)
        return cls(labels, bd, name, dict(meta or {}))

    @property
    def top(self) -> int:
        return len(self.labels) - 1

    def dims(self) -> list[int]:
        return [len(l) for l in self.labels]

    def d(self, i: int) -> F2Matrix:
        """d_i, with zero maps outside the stored range."""
        if 0 <= i <= self.top:
            return self.boundary[i]
        if i == self.top + 1:
            return F2Matrix.zeros(len(self.labels[self.top]) if self.labels else 0, 0)
        raise IndexError(i)

    def index(self, i: int) -> dict[Hashable, int]:
        return {lab: j for j, lab in enumerate(self.labels[i])}

    def coefficient(self, p: Hashable, q: Hashable, i: int) -> int:
        """Coefficient of the rank i-1 cell q in d_i(p)."""
        return self.boundary[i][self.index(i - 1)[q], self.index(i)[p]]

    def squares_to_zero(self) -> bool:
        return all(multiply(self.boundary[i - 1], self.boundary[i]).is_zero() for i in range(2, self.top + 1))


def boundary_ranks(c: GradedComplex, threads: int = 1) -> list[int]:
    """rank d_i for i = 0..top+1 (the ends are zero)."""
    maps = list(c.boundary[1:])
    if threads > 1 and len(maps) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            inner = list(pool.map(rank, maps))
    else:
        inner = [rank(d) for d in maps]
    return [0] + inner + [0]


def homology_ranks(c: GradedComplex, threads: int = 1) -> list[int]:
    """dim H_i = dim C_i - rank d_i - rank d_{i+1}."""
    r = boundary_ranks(c, threads)
    return [dim - r[i] - r[i + 1] for i, dim in enumerate(c.dims())]


def euler_characteristic(c: GradedComplex) -> int:
    return sum((-1) ** i * dim for i, dim in enumerate(c.dims()))
