"""Torsion group elements: orders, census, covers, determinant twists."""

import itertools
from math import gcd

import pytest

from parorb.errors import IdentityElement, ModulusMismatch, NotADivisor
from parorb.torsion import (
    DetTwist,
    TorsionElement,
    canonical_element_of_order,
    count_elements_of_order,
    cyclic_subgroup_elements,
    cyclic_subgroup_equal,
    element_order,
    pushforward_det_twist,
    spectral_cover_data,
)


def naive_order(modulus, exponents):
    """Smallest k >= 1 killing every exponent, by direct search."""
    for k in range(1, modulus + 1):
        if all((k * e) % modulus == 0 for e in exponents):
            return k
    raise AssertionError("unreachable for a finite group")


def test_element_order_matches_naive_search():
    for exps in itertools.product(range(6), repeat=4):
        eta = TorsionElement(6, exps)
        assert element_order(eta) == naive_order(6, exps), exps


def test_exponents_are_reduced_modulo_r():
    eta = TorsionElement(4, (5, -1, 8, 3))
    assert eta.exponents == (1, 3, 0, 3)


def test_identity_scale_inverse():
    eta = TorsionElement(6, (2, 0, 3, 0))
    assert not eta.is_identity
    assert eta.scale(0).is_identity
    assert eta.scale(element_order(eta)).is_identity
    combined = tuple(
        (a + b) % 6 for a, b in zip(eta.exponents, eta.inverse().exponents)
    )
    assert combined == (0, 0, 0, 0)


def test_genus_property():
    assert TorsionElement(2, (1, 0, 0, 0, 1, 1)).genus == 3


def test_mapping_round_trip():
    eta = TorsionElement(6, (1, 2, 3, 4))
    assert TorsionElement.from_mapping(eta.to_mapping()) == eta


CENSUS_CASES = {
    # (r, g) -> {order: count}; every value recomputed below by brute force
    (2, 2): {1: 1, 2: 15},
    (2, 3): {1: 1, 2: 63},
    (3, 2): {1: 1, 3: 80},
    (6, 2): {1: 1, 2: 15, 3: 80, 6: 1200},
}


@pytest.mark.parametrize("key", sorted(CENSUS_CASES))
def test_count_elements_of_order_frozen_values(key):
    r, g = key
    for m, expected in CENSUS_CASES[key].items():
        assert count_elements_of_order(r, g, m) == expected


@pytest.mark.parametrize("r,g", [(2, 2), (3, 2), (4, 2), (6, 2), (2, 3)])
def test_census_against_exhaustive_enumeration(r, g):
    seen = {}
    for exps in itertools.product(range(r), repeat=2 * g):
        order = naive_order(r, exps)
        seen[order] = seen.get(order, 0) + 1
    for m, count in seen.items():
        assert count_elements_of_order(r, g, m) == count, (r, g, m)
    assert sum(seen.values()) == r ** (2 * g)


def test_census_divisor_sum_is_group_size():
    for r in (2, 3, 4, 5, 6, 12):
        for g in (2, 3):
            total = sum(
                count_elements_of_order(r, g, m)
                for m in range(1, r + 1)
                if r % m == 0
            )
            assert total == r ** (2 * g)


def test_census_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        count_elements_of_order(6, 2, 4)


def test_spectral_cover_genus_riemann_hurwitz():
    # cover is etale of degree m: 2 g_Y - 2 = m (2g - 2)
    for g in range(2, 7):
        for m in range(1, 13):
            data = spectral_cover_data(g, m)
            assert 2 * data.cover_genus - 2 == m * (2 * g - 2)
            assert data.prym_dimension == (m - 1) * (g - 1)


def test_spectral_cover_small_values():
    assert spectral_cover_data(2, 2).cover_genus == 3
    assert spectral_cover_data(2, 3).cover_genus == 4
    assert spectral_cover_data(3, 2).cover_genus == 5


def test_pushforward_det_twist_parity():
    # trivial exactly for odd m; otherwise the half-point of Z/r
    for r in (2, 3, 4, 6, 10, 12):
        for m in (d for d in range(1, r + 1) if r % d == 0):
            twist = pushforward_det_twist(m, r)
            if m % 2 == 1:
                assert twist.is_trivial, (m, r)
            else:
                assert not twist.is_trivial and twist.eta_exponent == r // 2, (m, r)
    with pytest.raises(NotADivisor):
        pushforward_det_twist(4, 6)


def test_det_twist_mapping():
    assert DetTwist(0).to_mapping() == {"twist": "trivial"}
    assert pushforward_det_twist(2, 6).to_mapping() == {
        "twist": "eta_power",
        "power": 3,
    }


def test_cyclic_subgroup_elements():
    eta = TorsionElement(6, (2, 0, 0, 0))
    subgroup = cyclic_subgroup_elements(eta)
    assert len(subgroup) == element_order(eta) == 3
    assert TorsionElement(6, (4, 0, 0, 0)) in subgroup
    assert TorsionElement(6, (0, 0, 0, 0)) in subgroup


def test_cyclic_subgroup_equal_detects_shared_generator():
    a = TorsionElement(5, (1, 2, 0, 0))
    b = a.scale(3)  # 3 is a unit mod 5, so b generates the same subgroup
    assert cyclic_subgroup_equal(a, b)
    c = TorsionElement(5, (0, 1, 0, 0))
    assert not cyclic_subgroup_equal(a, c)
    with pytest.raises(ModulusMismatch):
        cyclic_subgroup_equal(a, TorsionElement(6, (1, 0, 0, 0)))


def test_canonical_element_has_requested_order():
    for r in (2, 3, 4, 6, 12):
        for g in (2, 3):
            for m in (d for d in range(2, r + 1) if r % d == 0):
                eta = canonical_element_of_order(r, g, m)
                assert eta.modulus == r and eta.genus == g
                assert element_order(eta) == m
                assert eta.exponents[0] == r // m
                assert all(e == 0 for e in eta.exponents[1:])


def test_order_of_scaled_element():
    eta = TorsionElement(12, (1, 0, 0, 0))
    for k in range(12):
        assert element_order(eta.scale(k)) == 12 // gcd(k, 12)
