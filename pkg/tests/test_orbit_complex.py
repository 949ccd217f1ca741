from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from battery import battery, oracle_orbit_complex
from homcon.chain import euler_characteristic, homology_ranks
from homcon.orbit_complex import ComplexKind, all_kinds, build, homology, masked_homotopy_check, render_label
from homcon.permgroup import (
    PermGroup,
    Permutation,
    cyclic_group,
    has_odd_orbit,
    orbit_polynomial,
    parse_group,
    self_complementary_orbit_count,
    stable_subsets,
    symmetric_group,
    trivial_group,
)

SMALL = battery(max_n=7)
MEDIUM = battery(max_n=10)
KINDS = [k.value for k in ComplexKind]


def test_c4_dims_and_homology():
    c = build(cyclic_group(4), "inv-d")
    assert c.dims() == [1, 1, 2, 1, 1]
    assert homology_ranks(c) == [1, 0, 1, 0, 0]
    assert euler_characteristic(c) == 2
    assert homology(cyclic_group(6)) == [1, 0, 0, 0, 1, 0, 0]
    assert homology(cyclic_group(3)) == [0, 0, 0, 0]


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_group_is_a_simplex(kind, n):
    c = build(trivial_group(n), kind)
    assert sorted(c.dims()) == sorted(comb(n, i) for i in range(n + 1))
    # the empty set sits in rank 0, so this is the augmented chain complex
    # of a simplex, which is acyclic; fixed points are odd orbits
    assert homology(trivial_group(n), kind) == [0] * (n + 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_symmetric_group_coefficients(n):
    # a fixed (i-1)-set lies in n-i+1 of the i-sets; a fixed i-set contains i of the (i-1)-sets
    inv = build(symmetric_group(n), "inv-d")
    coinv = build(symmetric_group(n), "coinv-d")
    assert inv.dims() == [1] * (n + 1)
    assert [inv.boundary[i][0, 0] for i in range(1, n + 1)] == [(n - i + 1) % 2 for i in range(1, n + 1)]
    assert [coinv.boundary[i][0, 0] for i in range(1, n + 1)] == [i % 2 for i in range(1, n + 1)]
    assert euler_characteristic(inv) == (1 if n % 2 == 0 else 0)


def test_symmetric_4_euler():
    assert euler_characteristic(build(symmetric_group(4), "inv-d")) == 1


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("name,group", SMALL)
def test_matches_full_space_oracle(name, group, kind):
    c = build(group, kind)
    oracle = oracle_orbit_complex(group, kind)
    for i, m in enumerate(oracle, start=1):
        assert np.array_equal(c.boundary[i].to_dense(), m), (name, kind, i)


@pytest.mark.parametrize("name,group", MEDIUM)
def test_four_complexes(name, group):
    rep = all_kinds(group)
    x = orbit_polynomial(group)
    assert all(rep.squares_to_zero.values())
    assert set(rep.euler.values()) == {x(-1)}
    assert x(-1) == self_complementary_orbit_count(group)
    assert rep.duality_holds()
    for h in rep.homology.values():
        assert sum((-1) ** i * r for i, r in enumerate(h)) == x(-1)


@pytest.mark.parametrize("name,group", MEDIUM)
def test_odd_orbit_rule(name, group):
    h = homology(group)
    if has_odd_orbit(group):
        assert not any(h)
    else:
        assert h[0] == 1 and h[1] == 0


def test_masked_examples():
    assert masked_homotopy_check(cyclic_group(3), 0b111)
    assert masked_homotopy_check(cyclic_group(4), 0)
    assert masked_homotopy_check(cyclic_group(4), 0b1111)
    with pytest.raises(ValueError):
        masked_homotopy_check(cyclic_group(4), 0b0001)


@pytest.mark.parametrize("name,group", battery(max_n=6))
def test_masked_homotopy_all_stable_sets(name, group):
    assert all(masked_homotopy_check(group, s) for s in stable_subsets(group))


def test_isbell_style_group_has_odd_homology():
    g = parse_group("gens:6:(1 3 5)(2 4 6),(1 2)(5 6)")
    assert g.is_transitive()
    assert any(homology(g)[1::2])


def test_render_label():
    assert render_label(0b101) == "{1,3}"
    assert render_label(0) == "{}"


def test_threads_do_not_change_results():
    g = cyclic_group(12)
    assert homology(g, threads=4) == homology(g) == [1, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1, 0, 0]



random_groups = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3).map(
        lambda ps: PermGroup(len(ps[0]), tuple(Permutation(tuple(p)) for p in ps))
    )
)


@settings(max_examples=60, deadline=None)
@given(random_groups)
def test_random_group_properties(group):
    rep = all_kinds(group)
    x = orbit_polynomial(group)
    assert all(rep.squares_to_zero.values())
    assert set(rep.euler.values()) == {x(-1)}
    assert rep.duality_holds()
    h = rep.homology["inv-d"]
    if has_odd_orbit(group):
        assert not any(h)
    else:
        assert h[0] == 1 and h[1] == 0
    for s in stable_subsets(group)[:8]:
        assert masked_homotopy_check(group, s)
