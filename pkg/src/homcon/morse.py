"""Certification of algebraic Morse matchings on graded complexes over GF(2).

A matching pairs cells in adjacent ranks.  The digraph D(P, M) points every
Hasse edge downward except matched edges, which point upward.  Since a
matched cell has exactly one partner, two upward steps can never follow
each other, so every directed cycle lives between two consecutive ranks and
alternates up/down.  Acyclicity is therefore decided one rank pair at a
time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping

import numpy as np

from .chain import GradedComplex, boundary_ranks
from .errors import HomconError

Label = Hashable


class MatchingError(HomconError, ValueError):
    """The matching is not a partial involution between adjacent ranks."""


@dataclass(frozen=True)
class SupportedComplex:
    """A complex whose basis is a graded poset.

    ``less(q, p)`` decides q < p in the poset.  When it is omitted the
    poset is the one generated by the nonzero boundary entries, and the
    Hasse edges between adjacent ranks are exactly those entries.
    ``covered_by(p)``, if given, lists the elements p covers and spares
    the quadratic scan over ``less``.
    """

    complex: GradedComplex
    less: Callable[[Label, Label], bool] | None = None
    covered_by: Callable[[Label], Iterable[Label]] | None = None

    def rank_of(self) -> dict[Label, int]:
        return {lab: i for i, labels in enumerate(self.complex.labels) for lab in labels}

    def covers(self, i: int) -> list[tuple[int, int]]:
        """Hasse edges between ranks i and i-1 as (index in rank i, index in rank i-1)."""
        if self.covered_by is not None:
            lo_index = self.complex.index(i - 1)
            return [(a, lo_index[q]) for a, p in enumerate(self.complex.labels[i]) for q in self.covered_by(p)]
        if self.less is None:
            dense = self.complex.boundary[i].to_dense()
            rows, cols = np.nonzero(dense)
            return sorted(zip(cols.tolist(), rows.tolist()))
        lo, hi = self.complex.labels[i - 1], self.complex.labels[i]
        return [(a, b) for a, p in enumerate(hi) for b, q in enumerate(lo) if self.less(q, p)]

    def support_violations(self) -> list[tuple[Label, Label]]:
        """Nonzero boundary entries d_{p,q} with q not below p."""
        if self.less is None:
            return []
        bad = []
        for i in range(1, self.complex.top + 1):
            rows, cols = np.nonzero(self.complex.boundary[i].to_dense())
            lo, hi = self.complex.labels[i - 1], self.complex.labels[i]
            for r, c in zip(rows.tolist(), cols.tolist()):
                if not self.less(lo[r], hi[c]):
                    bad.append((hi[c], lo[r]))
        return bad


@dataclass
class MorseReport:
    acyclic: bool
    cycle: list[Label] | None
    unit_coefficients: bool
    critical: list[list[Label]]
    parity_condition: bool
    vanishing_condition: bool
    rank_condition: bool | None = None
    concluded_homology: list[int] | None = None
    homology_basis: list[list[Label]] | None = None
    matched_pairs: int = 0
    zero_coefficient_pairs: list[tuple[Label, Label]] = field(default_factory=list)

    @property
    def critical_counts(self) -> list[int]:
        return [len(c) for c in self.critical]

    @property
    def critical_ranks(self) -> list[int]:
        return [i for i, c in enumerate(self.critical) if c]


def matching_from_function(labels: Iterable[Label], partner: Callable[[Label], Label | None]) -> dict[Label, Label]:
    """Tabulate a matching given as a function returning the partner or None."""
    out = {}
    for lab in labels:
        m = partner(lab)
        if m is not None:
            out[lab] = m
    return out


def _validate(c: SupportedComplex, matching: Mapping[Label, Label]) -> dict[Label, int]:
    rank = c.rank_of()
    for p, q in matching.items():
        if p not in rank or q not in rank:
            raise MatchingError(f"matched label {p if p not in rank else q!r} is not a cell")
        if matching.get(q) != p:
            raise MatchingError(f"matching is not an involution at {p!r} -> {q!r}")
        if abs(rank[p] - rank[q]) != 1:
            raise MatchingError(f"pair {p!r}, {q!r} does not span adjacent ranks")
        if p == q:
            raise MatchingError(f"{p!r} matched to itself")
    return rank


def _find_cycle(n_hi: int, n_lo: int, down: list[list[int]], up: dict[int, int]) -> list[tuple[str, int]] | None:
    """Directed cycle in the bipartite graph hi -down-> lo -up-> hi, or None.

    Vertices are ('hi', a) / ('lo', b); returns the cycle as a vertex list.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * n_hi
    for start in range(n_hi):
        if color[start] != WHITE:
            continue
        path = [start]
        iters = [iter(down[start])]
        color[start] = GREY
        while path:
            try:
                b = next(iters[-1])
            except StopIteration:
                color[path.pop()] = BLACK
                iters.pop()
                continue
            a = up.get(b)
            if a is None:
                continue
            if color[a] == GREY:
                k = path.index(a)
                cyc: list[tuple[str, int]] = []
                for x, y in zip(path[k:], path[k + 1 :] + [a]):
                    cyc.append(("hi", x))
                    # the lo vertex between x and its successor
                    cyc.append(("lo", next(lo for lo in down[x] if up.get(lo) == y)))
                return cyc
            if color[a] == WHITE:
                color[a] = GREY
                path.append(a)
                iters.append(iter(down[a]))
    return None


def certify(c: SupportedComplex, matching: Mapping[Label, Label], use_rank_condition: bool = False) -> MorseReport:
    """Check the hypotheses of the Morse matching lemma and conclude what they give.

    Raises MatchingError for structural problems.  A matched edge with zero
    boundary coefficient is reported, not raised.
    """
    rank = _validate(c, matching)
    cx = c.complex
    top = cx.top

    # unit coefficients on matched edges q = M(p) < p
    zero_pairs = []
    matched_down = 0
    index = [cx.index(i) for i in range(top + 1)]
    for p, q in matching.items():
        if rank[q] == rank[p] - 1:
            matched_down += 1
            i = rank[p]
            if not cx.boundary[i][index[i - 1][q], index[i][p]]:
                zero_pairs.append((p, q))
            if c.less is not None and not c.less(q, p):
                raise MatchingError(f"matched pair {q!r} < {p!r} is not comparable in the poset")

    # acyclicity, rank pair by rank pair
    cycle = None
    for i in range(1, top + 1):
        hi, lo = cx.labels[i], cx.labels[i - 1]
        down: list[list[int]] = [[] for _ in hi]
        matched_edges = set()
        for a, p in enumerate(hi):
            q = matching.get(p)
            if q is not None and rank[q] == i - 1:
                matched_edges.add((a, index[i - 1][q]))
        for a, b in c.covers(i):
            if (a, b) not in matched_edges:
                down[a].append(b)
        up = {b: a for a, b in matched_edges}
        found = _find_cycle(len(hi), len(lo), down, up)
        if found is not None:
            cycle = [hi[x] if side == "hi" else lo[x] for side, x in found]
            break

    critical = [[lab for lab in labels if lab not in matching] for labels in cx.labels]
    crit_ranks = [i for i, cs in enumerate(critical) if cs]
    parity = len({i % 2 for i in crit_ranks}) <= 1

    vanishing = True
    for i, cs in enumerate(critical):
        for p in cs:
            j = index[i][p]
            if i >= 1 and cx.boundary[i].column(j).any():
                vanishing = False
            if i < top and cx.boundary[i + 1].to_dense_row(j).any():
                vanishing = False
        if not vanishing:
            break

    rank_cond = None
    if use_rank_condition:
        q_sizes = [0] * (top + 2)
        for p, q in matching.items():
            if rank[q] == rank[p] - 1:
                q_sizes[rank[p]] += 1
        rank_cond = q_sizes == boundary_ranks(cx)

    report = MorseReport(
        acyclic=cycle is None,
        cycle=cycle,
        unit_coefficients=not zero_pairs,
        critical=critical,
        parity_condition=parity,
        vanishing_condition=vanishing,
        rank_condition=rank_cond,
        matched_pairs=matched_down,
        zero_coefficient_pairs=zero_pairs,
    )
    if report.acyclic and report.unit_coefficients and (parity or vanishing or rank_cond):
        report.concluded_homology = report.critical_counts
        if vanishing:
            report.homology_basis = [list(cs) for cs in critical]
    return report


def replay_cycle(c: SupportedComplex, matching: Mapping[Label, Label], cycle: list[Label]) -> bool:
    """Confirm that ``cycle`` is a directed cycle of D(P, M)."""
    rank = c.rank_of()
    if len(cycle) < 2:
        return False
    for x, y in zip(cycle, cycle[1:] + cycle[:1]):
        if rank[y] == rank[x] + 1:
            if matching.get(x) != y:
                return False
        elif rank[y] == rank[x] - 1:
            if matching.get(x) == y:
                return False
            i = rank[x]
            a = c.complex.index(i)[x]
            b = c.complex.index(i - 1)[y]
            if (a, b) not in set(c.covers(i)):
                return False
        else:
            return False
    return True
