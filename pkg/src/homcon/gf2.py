"""Bit-packed matrices over GF(2).

Rows are stored as little-endian arrays of 64-bit words, so bit ``j`` of a
row lives in word ``j // 64`` at position ``j % 64``.  Elimination and
products are word-parallel XORs over whole rows.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

WORD = 64
_ONE = np.uint64(1)


def _nwords(cols: int) -> int:
    return (cols + WORD - 1) // WORD


class F2Matrix:
    """Immutable ``rows x cols`` matrix over GF(2)."""

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape ({rows}, {cols})")
        nw = _nwords(cols)
        if words is None:
            words = np.zeros((rows, nw), dtype=np.uint64)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            if words.shape != (rows, nw):
                raise ValueError(f"word array has shape {words.shape}, expected {(rows, nw)}")
            tail = cols % WORD
            if tail and rows and np.any(words[:, -1] >> np.uint64(tail)):
                raise ValueError("bits set beyond the last column")
        words.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self.words = words

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, array, shape: tuple[int, int] | None = None) -> "F2Matrix":
        """Build from anything numpy can turn into a 2-D integer array; entries are taken mod 2."""
        a = np.asarray(array)
        if a.size == 0 and shape is not None:
            return cls(*shape)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got ndim={a.ndim}")
        rows, cols = a.shape
        bits = (a.astype(np.int64, copy=False) & 1).astype(np.uint8)
        nw = _nwords(cols)
        padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
        padded[:, :cols] = bits
        packed = np.packbits(padded, axis=1, bitorder="little")
        words = packed.view("<u8").astype(np.uint64, copy=False).reshape(rows, nw)
        return cls(rows, cols, words)

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]], cols: int) -> "F2Matrix":
        """Build from a list of rows, each given as the column indices holding a 1.

        Repeated indices cancel in pairs, matching GF(2) addition.
        """
        dense = np.zeros((len(rows), cols), dtype=np.uint8)
        for i, support in enumerate(rows):
            for j in support:
                dense[i, j] ^= 1
        return cls.from_dense(dense, shape=(len(rows), cols))

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_dense(self) -> np.ndarray:
        if self.rows == 0 or self.cols == 0:
            return np.zeros((self.rows, self.cols), dtype=np.uint8)
        raw = self.words.astype("<u8").view(np.uint8).reshape(self.rows, -1)
        bits = np.unpackbits(raw, axis=1, bitorder="little")
        return bits[:, : self.cols].copy()

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside shape {self.shape}")
        return int((self.words[i, j // WORD] >> np.uint64(j % WORD)) & _ONE)

    def row_support(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.to_dense_row(i))]

    def to_dense_row(self, i: int) -> np.ndarray:
        raw = self.words[i].astype("<u8").view(np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.cols]

    def column(self, j: int) -> np.ndarray:
        return ((self.words[:, j // WORD] >> np.uint64(j % WORD)) & _ONE).astype(np.uint8)

    def nnz(self) -> int:
        return int(np.unpackbits(self.words.astype("<u8").view(np.uint8)).sum()) if self.words.size else 0

    def is_zero(self) -> bool:
        return not self.words.any()

    # algebra ------------------------------------------------------------

    def transpose(self) -> "F2Matrix":
        return F2Matrix.from_dense(self.to_dense().T, shape=(self.cols, self.rows))

    @property
    def T(self) -> "F2Matrix":
        return self.transpose()

    def __add__(self, other: "F2Matrix") -> "F2Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return F2Matrix(self.rows, self.cols, self.words ^ other.words)

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"F2Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def rank(self) -> int:
        return rank(self)


def multiply(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Exact product ``a @ b`` over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    out = np.zeros((a.rows, _nwords(b.cols)), dtype=np.uint64)
    if a.rows and b.cols:
        dense_a = a.to_dense()
        for k in np.flatnonzero(dense_a.any(axis=0)):
            hit = np.flatnonzero(dense_a[:, k])
            out[hit] ^= b.words[k]
    return F2Matrix(a.rows, b.cols, out)


def _eliminate(words: np.ndarray, cols: int, full: bool) -> list[int]:
    """Row-reduce ``words`` in place; return pivot columns.

    With ``full`` the result is reduced row echelon form, otherwise only
    entries below each pivot are cleared.
    """
    m = words.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == m:
            break
        wi = col // WORD
        shift = np.uint64(col % WORD)
        hits = np.flatnonzero((words[r:, wi] >> shift) & _ONE)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        lo = 0 if full else r + 1
        others = lo + np.flatnonzero((words[lo:, wi] >> shift) & _ONE)
        if full:
            others = others[others != r]
        if others.size:
            words[others, wi:] ^= words[r, wi:]
        pivots.append(col)
        r += 1
    return pivots


def rank(a: F2Matrix) -> int:
    """GF(2) rank of ``a``; ``a`` is left untouched."""
    if a.rows == 0 or a.cols == 0:
        return 0
    # eliminate along the shorter side
    if a.rows > a.cols:
        a = a.transpose()
    work = np.array(a.words, copy=True)
    return len(_eliminate(work, a.cols, full=False))


def kernel(a: F2Matrix) -> F2Matrix:
    """Basis of the right null space ``{x : a x = 0}``, one basis vector per row."""
    work = np.array(a.words, copy=True)
    pivots = _eliminate(work, a.cols, full=True)
    reduced = F2Matrix(a.rows, a.cols, work).to_dense()
    pivot_set = set(pivots)
    free = [j for j in range(a.cols) if j not in pivot_set]
    basis = np.zeros((len(free), a.cols), dtype=np.uint8)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for row, pc in enumerate(pivots):
            if reduced[row, f]:
                basis[b, pc] = 1
    return F2Matrix.from_dense(basis, shape=(len(free), a.cols))


def hstack(blocks: Sequence[F2Matrix]) -> F2Matrix:
    rows = {b.rows for b in blocks}
    if len(rows) > 1:
        raise ValueError(f"row counts differ: {sorted(rows)}")
    n = rows.pop() if rows else 0
    dense = np.hstack([b.to_dense() for b in blocks]) if blocks else np.zeros((0, 0), np.uint8)
    return F2Matrix.from_dense(dense, shape=(n, sum(b.cols for b in blocks)))


def vstack(blocks: Sequence[F2Matrix]) -> F2Matrix:
    cols = {b.cols for b in blocks}
    if len(cols) > 1:
        raise ValueError(f"column counts differ: {sorted(cols)}")
    c = cols.pop() if cols else 0
    words = np.vstack([b.words for b in blocks]) if blocks else np.zeros((0, _nwords(c)), np.uint64)
    return F2Matrix(words.shape[0], c, words)
