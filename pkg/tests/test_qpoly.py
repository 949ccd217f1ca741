from collections import Counter
from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from homcon.permgroup import cyclic_group, orbit_polynomial
from homcon.qpoly import (
    ONE,
    Q,
    QPolynomial,
    cyclic_orbit_polynomial,
    cyclic_self_complementary_count,
    is_symmetric_unimodal,
    macmahon,
    q_binomial,
    totient,
)

polys = st.lists(st.integers(-50, 50), max_size=8).map(QPolynomial)


def plane_partitions(r, c, t):
    """Brute force: r x c arrays with entries in [0, t], weakly decreasing along rows and columns."""
    out = []
    for flat in product(range(t + 1), repeat=r * c):
        a = [flat[i * c : (i + 1) * c] for i in range(r)]
        if all(a[i][j] >= a[i][j + 1] for i in range(r) for j in range(c - 1)) and all(
            a[i][j] >= a[i + 1][j] for i in range(r - 1) for j in range(c)
        ):
            out.append(a)
    return out


def test_canonical_form():
    assert QPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPolynomial([0, 0]).coeffs == ()
    assert str(QPolynomial([1, 1, 2])) == "1 + q + 2q^2"


def test_q_binomial_examples():
    assert q_binomial(0, 5) == ONE
    assert q_binomial(2, 2) == QPolynomial([1, 1, 2, 1, 1])
    assert q_binomial(2, 2)(-1) == 2


@pytest.mark.parametrize("k,l", [(a, b) for a in range(6) for b in range(6)])
def test_q_binomial_counts_partitions(k, l):
    sizes = Counter(sum(p) for p in combinations_with_replacement(range(l + 1), k))
    p = q_binomial(k, l)
    assert p == q_binomial(l, k)
    assert list(p.coeffs) == [sizes[i] for i in range(k * l + 1)]
    assert p.coeffs == p.coeffs[::-1]


def test_macmahon_examples():
    assert macmahon(1, 1, 1) == ONE + Q
    assert macmahon(2, 2, 2)(1) == 20
    assert macmahon(2, 2, 2)(-1) == 4


@pytest.mark.parametrize("r,c,t", [(r, c, t) for r in range(1, 4) for c in range(1, 4) for t in range(4)])
def test_macmahon_counts_plane_partitions(r, c, t):
    pps = plane_partitions(r, c, t)
    sizes = Counter(sum(map(sum, a)) for a in pps)
    assert list(macmahon(r, c, t).coeffs) == [sizes[i] for i in range(r * c * t + 1)]
    sc = [a for a in pps if all(a[i][j] == t - a[r - 1 - i][c - 1 - j] for i in range(r) for j in range(c))]
    assert macmahon(r, c, t)(-1) == len(sc)


def test_cyclic_orbit_polynomial_examples():
    assert cyclic_orbit_polynomial(1) == ONE + Q
    assert cyclic_orbit_polynomial(4) == QPolynomial([1, 1, 2, 1, 1])
    assert cyclic_orbit_polynomial(4)(-1) == 2


@pytest.mark.parametrize("n", range(1, 17))
def test_cyclic_orbit_polynomial_matches_orbit_sweep(n):
    assert cyclic_orbit_polynomial(n) == orbit_polynomial(cyclic_group(n))


@pytest.mark.parametrize("n", range(3, 19))
def test_self_complementary_closed_form(n):
    assert cyclic_self_complementary_count(n) == cyclic_orbit_polynomial(n)(-1)


def test_closed_form_refuses_small_n():
    with pytest.raises(ValueError):
        cyclic_self_complementary_count(2)


def test_unimodality():
    assert is_symmetric_unimodal(QPolynomial([1, 1, 2, 1, 1]))
    assert not is_symmetric_unimodal(ONE + Q**3)
    assert is_symmetric_unimodal(ONE)
    assert not is_symmetric_unimodal([1, 2, 1, 2, 1])


def test_exact_division():
    p = (ONE + Q) * (ONE + Q + Q**2)
    assert p.exact_div(ONE + Q) == ONE + Q + Q**2
    with pytest.raises(ArithmeticError):
        (ONE + Q**2).exact_div(ONE + Q)
    with pytest.raises(ArithmeticError):
        QPolynomial([3, 4]).scalar_div(2)


def test_totient():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == QPolynomial()
    assert (a * b)(-1) == a(-1) * b(-1)


@given(polys, st.lists(st.integers(-9, 9), min_size=1, max_size=5).filter(lambda cs: cs[-1] in (1, -1)))
def test_divmod_reconstructs(a, cs):
    b = QPolynomial(cs)
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


def test_substitute_and_root_power():
    p = QPolynomial([1, 2, 3])
    assert p.substitute_power(2) == QPolynomial([1, 0, 2, 0, 3])
    assert p.substitute_power(2).root_power(2) == p
