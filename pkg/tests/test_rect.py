import pytest
from hypothesis import given, strategies as st

from homcon import rect
from homcon.chain import homology_ranks
from homcon.morse import certify
from homcon.qpoly import q_binomial

SHAPES = [(k, l) for k in range(1, 7) for l in range(1, 7)]


def test_boundary_coefficient_examples():
    # (l - lam_i + 1)(m + 1) mod 2, m the multiplicity of lam_i - 1
    assert rect.boundary_coefficient((2, 2), 1, 2) == 1
    assert rect.boundary_coefficient((2, 1), 0, 2) == 0
    assert rect.boundary_coefficient((2, 1), 1, 2) == 0
    assert rect.boundary_coefficient((1, 0), 0, 2) == 0
    assert rect.boundary_coefficient((1, 1), 1, 2) == 0
    assert rect.boundary_coefficient((1, 1), 1, 3) == 1
    with pytest.raises(ValueError):
        rect.boundary_coefficient((2, 2), 0, 2)


def test_matching_examples():
    assert rect.matching((2, 1), 2) == (2, 2)
    assert rect.matching((2, 2), 2) == (2, 1)
    assert rect.matching((1, 1), 2) is None
    assert rect.critical_cells(2, 2) == [(0, 0), (1, 1)]
    assert rect.critical_cells(3, 3) == []


def test_phi_example():
    assert [rect.phi(lam, 2, 2) for lam in rect.critical_cells(2, 2)] == [(2, 0), (1, 1)]


@given(st.integers(0, 6).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, 6))).flatmap(
    lambda kl: st.tuples(st.just(kl[1]), st.lists(st.integers(0, kl[1]), min_size=kl[0], max_size=kl[0]))))
def test_word_round_trip(data):
    l, parts = data
    lam = tuple(sorted(parts, reverse=True))
    w = rect.word(lam, l)
    assert w.count("E") == l and w.count("N") == len(lam)
    assert rect.from_word(w) == lam


@pytest.mark.parametrize("k,l", SHAPES)
def test_rectangle(k, l):
    sc = rect.build_rect_complex(k, l)
    assert sc.complex.squares_to_zero()
    assert not sc.support_violations()
    m = rect.rect_matching(k, l)
    assert all(m[m[p]] == p for p in m)
    rep = certify(sc, m)
    assert rep.acyclic and rep.unit_coefficients and rep.parity_condition
    assert rep.concluded_homology == homology_ranks(sc.complex)
    crit = [lam for level in rep.critical for lam in level]
    assert crit == rect.critical_cells(k, l)
    assert all(sum(lam) % 2 == 0 for lam in crit)
    target = rect.self_complementary_partitions(k, l)
    assert len(crit) == q_binomial(k, l)(-1) == len(target)
    if k % 2 == 0 or l % 2 == 0:
        images = [rect.phi(lam, k, l) for lam in crit]
        assert sorted(images) == sorted(target)


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 9) for l in range(1, 9) if k * l <= 16])
def test_wreath_cross_check(k, l):
    assert rect.compare_with_wreath(k, l).matches["inv-d"]
