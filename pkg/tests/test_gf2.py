import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homcon.gf2 import F2Matrix, hstack, kernel, multiply, rank, vstack


def dense(rows, cols, seed):
    return np.random.default_rng(seed).integers(0, 2, size=(rows, cols), dtype=np.uint8)


matrices = st.builds(
    lambda r, c, s: F2Matrix.from_dense(dense(r, c, s), shape=(r, c)),
    st.integers(0, 64),
    st.integers(0, 70),
    st.integers(0, 2**32 - 1),
)


def test_rank_examples():
    assert rank(F2Matrix.zeros(3, 3)) == 0
    assert rank(F2Matrix.identity(4)) == 4
    assert rank(F2Matrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2


def test_multiply_examples():
    a = F2Matrix.from_dense(dense(5, 7, 1))
    assert multiply(F2Matrix.identity(5), a) == a
    j = F2Matrix.from_dense([[1, 1], [1, 1]])
    assert multiply(j, j).is_zero()
    with pytest.raises(ValueError):
        multiply(a, a)


def test_rank_leaves_input_untouched():
    a = F2Matrix.from_dense(dense(20, 90, 3))
    before = a.words.copy()
    rank(a)
    assert np.array_equal(a.words, before)


def test_words_straddle_boundaries():
    a = F2Matrix.from_dense(dense(3, 130, 7))
    assert np.array_equal(a.to_dense(), dense(3, 130, 7))
    assert a[2, 129] == dense(3, 130, 7)[2, 129]
    assert np.array_equal(a.T.to_dense(), dense(3, 130, 7).T)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_equals_transpose_rank(a):
    assert rank(a) == rank(a.transpose()) <= min(a.shape)


@settings(max_examples=60, deadline=None)
@given(matrices, st.integers(0, 2**32 - 1))
def test_rank_invariant_under_row_operations(a, seed):
    if a.rows < 2:
        return
    rng = np.random.default_rng(seed)
    d = a.to_dense()
    perm = rng.permutation(a.rows)
    i, j = rng.choice(a.rows, size=2, replace=False)
    e = d[perm].copy()
    e[i] ^= e[j]
    assert rank(F2Matrix.from_dense(e, shape=a.shape)) == rank(a)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40), st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_multiply_associative_and_matches_numpy(p, q, r, s, seed):
    a, b, c = dense(p, q, seed), dense(q, r, seed + 1), dense(r, s, seed + 2)
    A, B, C = (F2Matrix.from_dense(x) for x in (a, b, c))
    assert multiply(multiply(A, B), C) == multiply(A, multiply(B, C))
    assert np.array_equal(multiply(A, B).to_dense(), (a.astype(int) @ b) % 2)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_kernel_is_null_space(a):
    k = kernel(a)
    assert k.shape[1] == a.cols
    assert k.rows == a.cols - rank(a)
    assert rank(k) == k.rows
    assert multiply(a, k.transpose()).is_zero()


def test_stacking():
    a, b = F2Matrix.from_dense(dense(3, 4, 1)), F2Matrix.from_dense(dense(3, 70, 2))
    assert np.array_equal(hstack([a, b]).to_dense(), np.hstack([dense(3, 4, 1), dense(3, 70, 2)]))
    c = F2Matrix.from_dense(dense(2, 4, 5))
    assert np.array_equal(vstack([a, c]).to_dense(), np.vstack([dense(3, 4, 1), dense(2, 4, 5)]))
