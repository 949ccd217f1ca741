"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per
criterion is printed in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from battery import battery, closure_orbits  # noqa: E402
from homcon import box, families, rect  # noqa: E402
from homcon.chain import homology_ranks  # noqa: E402
from homcon.morse import certify  # noqa: E402
from homcon.orbit_complex import ComplexKind, all_kinds, build, homology, masked_homotopy_check  # noqa: E402
from homcon.permgroup import (  # noqa: E402
    has_odd_orbit,
    has_two_power_derangement,
    orbit_polynomial,
    parse_group,
    stable_subsets,
)
from homcon.qpoly import QPolynomial, is_symmetric_unimodal, macmahon, q_binomial  # noqa: E402

NECKLACE_TABLE = {
    2: [1, 0, 0],
    4: [1, 0, 1, 0, 0],
    6: [1, 0, 0, 0, 1, 0, 0],
    8: [1, 0, 1, 0, 1, 0, 1, 0, 0],
    10: [1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0],
    12: [1, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1, 0, 0],
    14: [1, 0, 0, 0, 3, 0, 2, 0, 3, 0, 0, 0, 1, 0, 0],
    16: [1, 0, 1, 0, 3, 0, 5, 0, 5, 0, 3, 0, 1, 0, 1, 0, 0],
    18: [1, 0, 0, 0, 4, 0, 6, 0, 8, 0, 6, 0, 4, 0, 0, 0, 1, 0, 0],
}


def T(*rows):
    return tuple(tuple(r) for r in rows)


EXAMPLE_PAIRS = [
    (T([0, 2], [3, 3]), T([1, 2], [3, 3])),
    (T([0, 2], [2, 3]), T([1, 2], [2, 3])),
    (T([1, 1], [2, 2]), T([1, 1], [2, 3])),
    (T([0, 0], [3, 3]), T([0, 1], [3, 3])),
    (T([0, 0], [2, 3]), T([0, 1], [2, 3])),
    (T([0, 0], [1, 3]), T([0, 1], [1, 3])),
    (T([0, 0], [2, 2]), T([0, 1], [2, 2])),
    (T([0, 0], [1, 2]), T([0, 1], [1, 2])),
]
EXAMPLE_UNMATCHED = [T([2, 2], [3, 3]), T([1, 1], [3, 3]), T([0, 2], [1, 3]), T([0, 0], [1, 1])]


def groups_up_to_ten():
    gs = battery(max_n=10)
    gs += [(f"wreath:{k},{l}", parse_group(f"wreath:{k},{l}")) for k, l in [(3, 4), (4, 3), (2, 6), (6, 2), (11, 1), (1, 11), (12, 1), (1, 12)]]
    return gs


def brute_self_complementary(group) -> int:
    orbit_of = closure_orbits(group)
    full = frozenset(range(group.n))
    return sum(1 for o in set(orbit_of.values()) if full - next(iter(o)) in o)


def test_criterion_01_necklace_table():
    """Necklace homology table for even n <= 18, exact; n <= 14 under 1 s, n = 18 under 60 s."""
    start = time.perf_counter()
    for n in range(2, 15, 2):
        assert homology(parse_group(f"cyclic:{n}")) == NECKLACE_TABLE[n], n
    assert time.perf_counter() - start < 1.0
    for n in (16, 18):
        start = time.perf_counter()
        assert homology(parse_group(f"cyclic:{n}")) == NECKLACE_TABLE[n], n
        assert time.perf_counter() - start < 60.0


def test_criterion_02_box_example():
    """Matching on SSYT(2,2,2): the 8 pairs and 4 unmatched tableaux, under 1 s."""
    start = time.perf_counter()
    m = box.box_matching(2, 2, 2)
    assert {frozenset(p) for p in m.items()} == {frozenset(p) for p in EXAMPLE_PAIRS}
    assert sorted(box.critical_cells(2, 2, 2)) == sorted(EXAMPLE_UNMATCHED)
    assert time.perf_counter() - start < 1.0


def test_criterion_03_euler_equals_self_complementary():
    """Euler characteristic of all four complexes = X(G,-1) = brute-force self-complementary count."""
    start = time.perf_counter()
    for name, g in groups_up_to_ten():
        x = orbit_polynomial(g)(-1)
        rep = all_kinds(g)
        assert set(rep.euler.values()) == {x}, name
        assert brute_self_complementary(g) == x, name
    assert time.perf_counter() - start < 10.0


def test_criterion_04_d_squared():
    """d^2 = 0 for the four orbit complexes (n <= 10) and the box complex (rct <= 27)."""
    for name, g in battery(max_n=10):
        for kind in ComplexKind:
            assert build(g, kind).squares_to_zero(), (name, kind)
    for r in range(1, 28):
        for c in range(1, 28):
            for t in range(0, 28):
                if r * c * max(t, 1) <= 27:
                    assert box.build_box_complex(r, c, t).complex.squares_to_zero(), (r, c, t)


def test_criterion_05_odd_orbit_rules():
    """Odd point orbit gives zero homology, otherwise H_0 = 1 and H_1 = 0; masked homotopy for n <= 8."""
    for name, g in battery(max_n=10):
        h = homology(g)
        if has_odd_orbit(g):
            assert not any(h), name
        else:
            assert h[0] == 1 and h[1] == 0, name
    for name, g in battery(max_n=8):
        for s in stable_subsets(g):
            assert masked_homotopy_check(g, s), (name, s)


def test_criterion_06_duality():
    """inv-U = reverse(inv-D), coinv-D = inv-U, coinv-U = reverse(coinv-D), n <= 10."""
    for name, g in battery(max_n=10):
        h = all_kinds(g).homology
        assert h["inv-u"] == h["inv-d"][::-1], name
        assert h["coinv-d"] == h["inv-u"], name
        assert h["coinv-u"] == h["coinv-d"][::-1], name


def test_criterion_07_rectangle():
    """Rectangle complexes for 2 <= k,l <= 6: certification, oracle, counts, phi, wreath comparison."""
    start = time.perf_counter()
    for k in range(2, 7):
        for l in range(2, 7):
            sc = rect.build_rect_complex(k, l)
            rep = certify(sc, rect.rect_matching(k, l))
            assert rep.acyclic and rep.unit_coefficients and rep.parity_condition, (k, l)
            assert rep.concluded_homology == homology_ranks(sc.complex), (k, l)
            crit = [lam for level in rep.critical for lam in level]
            target = rect.self_complementary_partitions(k, l)
            assert len(crit) == q_binomial(k, l)(-1) == len(target), (k, l)
            images = [rect.phi(lam, k, l) for lam in crit]
            assert len(set(images)) == len(images) and set(images) == set(target), (k, l)
            if k * l <= 16:
                assert rect.compare_with_wreath(k, l).matches["inv-d"], (k, l)
    assert time.perf_counter() - start < 30.0


def test_criterion_08_box():
    """Box complexes for r,c,t <= 3: certification, even concentration, dominoes, Boolean intervals, Schur identity."""
    start = time.perf_counter()
    for r in range(1, 4):
        for c in range(1, 4):
            for t in range(0, 4):
                sc = box.build_box_complex(r, c, t)
                rep = certify(sc, box.box_matching(r, c, t))
                h = homology_ranks(sc.complex)
                assert rep.acyclic and rep.unit_coefficients and rep.parity_condition
                assert rep.concluded_homology == h and not any(h[1::2])
                crit = box.critical_cells(r, c, t)
                x = macmahon(r, c, t)
                assert len(crit) == x(-1)
                doms = [box.to_domino(S, t) for S in crit]
                assert len(set(doms)) == len(doms) == len(box.enumerate_domino_tableaux(r, c, t))
                ivs = box.boolean_decomposition(r, c, t)
                assert sorted(S for iv in ivs for S in iv.members()) == box.enumerate_ssyt(r, c, t)
                assert box.schur_sum(ivs) == QPolynomial.monomial(c * comb(r, 2)) * x
    assert time.perf_counter() - start < 60.0


def test_criterion_09_necklace_recursion():
    """Doubling recursion and even concentration for all even n <= 18 with exact division."""
    for n in range(2, 19, 2):
        rep = families.necklace_report(n, check_conjecture=True)
        assert rep.odd_ranks_vanish and rep.conjecture_holds, (n, rep.detail)


def test_criterion_10_isbell():
    """b in {3,5,7}: transitive of order b 2^d, no 2-power derangement, odd homology; b = 7 under 60 s."""
    for b in (3, 5, 7):
        start = time.perf_counter()
        ib = families.isbell_group(b)
        g = ib.group
        assert g.is_transitive() and g.order() == b * 2**ib.d
        assert not has_two_power_derangement(g)
        assert any(homology(g)[1::2])
        assert time.perf_counter() - start < 60.0


def test_criterion_11_symmetric_unimodal():
    """X(G,q) symmetric and unimodal for every test group with n <= 12."""
    for name, g in battery(max_n=12, max_wreath=12):
        assert is_symmetric_unimodal(orbit_polynomial(g)), name


CRITERIA = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]

if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        start = time.perf_counter()
        try:
            fn()
            status = "PASS"
        except Exception as e:  # report and continue
            status = f"FAIL ({type(e).__name__}: {e})"
            failed += 1
        number = fn.__name__.split("_")[2]
        print(f"criterion {number}: {status} [{time.perf_counter() - start:.2f}s] {fn.__doc__.splitlines()[0]}")
    sys.exit(1 if failed else 0)
