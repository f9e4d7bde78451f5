"""Duality, coefficient policy and the puncture splittings."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidhom import ZZ, GradedAbelianGroup
from braidhom.braid import (
    CohomologyTable,
    SpaceDescriptor,
    braid_orientable,
    coefficient_allowed,
    compositions,
    dualize,
    les_consistency,
    split_closed,
    split_punctures,
)
from braidhom.errors import CoefficientPolicyError, HypothesisError


def table(k, dims):
    return CohomologyTable.from_dims(k, dims)


# -- compositions ---------------------------------------------------------------------

def test_composition_values():
    assert compositions(2, 5) == 6
    assert compositions(4, 1) == 4
    assert compositions(3, 2) == 6
    assert compositions(0, 0) == 1


def test_composition_rejects_empty_parts():
    with pytest.raises(ValueError):
        compositions(0, 3)


@pytest.mark.parametrize("r", range(1, 7))
def test_compositions_match_enumeration(r):
    for s in range(13):
        brute = sum(1 for t in product(range(s + 1), repeat=r) if sum(t) == s)
        assert compositions(r, s) == brute


def test_vandermonde_convolution():
    for a, b, s in product(range(1, 6), range(1, 6), range(13)):
        conv = sum(compositions(a, j) * compositions(b, s - j) for j in range(s + 1))
        assert conv == compositions(a + b, s)


def test_stated_shifted_convolution_is_false():
    # p(1,.)*p(1,.) at s = 1 is 2, while p(1,1) = 1
    conv = sum(compositions(1, j) * compositions(1, 1 - j) for j in range(2))
    assert conv == 2 != compositions(1, 1)


# -- orientability ---------------------------------------------------------------------

def test_braid_orientable_examples():
    assert braid_orientable(SpaceDescriptor(2, True), 5)
    assert not braid_orientable(SpaceDescriptor(3, True), 2)
    assert not braid_orientable(SpaceDescriptor(4, False), 2)


@pytest.mark.parametrize("d,k", [(1, 3), (2, 1)])
def test_braid_orientable_out_of_scope(d, k):
    with pytest.raises(HypothesisError):
        braid_orientable(SpaceDescriptor(d, True), k)


def test_coefficient_policy():
    assert coefficient_allowed("f2", 3, False)
    assert coefficient_allowed("z", 2, True)
    assert not coefficient_allowed("z", 3, True)
    assert not coefficient_allowed("z", 2, False)
    assert not coefficient_allowed("pmz", 2, True)


# -- duality ---------------------------------------------------------------------------

def test_dualize_circle_k3():
    rel = GradedAbelianGroup.from_ranks([0, 0, 1, 1])
    assert dualize(rel, 3, 1, "closed").dims() == [1, 1]


def test_dualize_line_k4():
    assert dualize(GradedAbelianGroup.sphere(4, reduced=True), 4, 1).dims() == [1]


def test_dualize_rejects_z_when_not_allowed():
    with pytest.raises(CoefficientPolicyError):
        dualize(GradedAbelianGroup.sphere(4, reduced=True), 2, 3, coeff=ZZ, orientable=True)
    with pytest.raises(CoefficientPolicyError):
        dualize(GradedAbelianGroup.sphere(4, reduced=True), 2, 2, coeff=ZZ, orientable=False)


def test_dualize_rejects_degrees_above_kd():
    with pytest.raises(ValueError):
        dualize(GradedAbelianGroup.sphere(5, reduced=True), 2, 2)


@given(st.integers(1, 5), st.integers(1, 4), st.lists(st.integers(0, 3), max_size=20))
@settings(max_examples=100, deadline=None)
def test_dualize_is_an_involution(k, d, ranks):
    ranks = ranks[:k * d + 1]
    g = GradedAbelianGroup.from_ranks(ranks)
    once = dualize(g, k, d)
    assert dualize(once.groups, k, d).groups == g
    assert once.groups.top_degree <= k * d


# -- closed splitting ---------------------------------------------------------------

def test_split_closed_sphere():
    out = split_closed(table(2, [1, 1]), table(1, [1]), 2)
    assert out.dims() == [1, 1, 1]
    assert les_consistency(table(1, [1]), table(2, [1, 1]), out, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_split_closed_circle(n):
    assert split_closed(table(n, [1]), table(n - 1, [1]), 1).dims() == [1, 1]


def test_split_closed_is_mod2_only():
    with pytest.raises(CoefficientPolicyError):
        split_closed(CohomologyTable.from_dims(2, [1, 1], ZZ), CohomologyTable.from_dims(1, [1], ZZ), 2)


@given(st.integers(1, 4), st.integers(1, 4), st.lists(st.integers(0, 3), max_size=8),
       st.lists(st.integers(0, 3), max_size=8))
@settings(max_examples=100, deadline=None)
def test_split_closed_satisfies_les(n, d, a, b):
    pn, pnm1 = table(n, a), table(n - 1, b)
    assert les_consistency(pnm1, pn, split_closed(pn, pnm1, d), d)


# -- puncture splitting --------------------------------------------------------------

PLANE = [table(0, [1]), table(1, [1]), table(2, [1, 1])]


def test_split_punctures_twice_punctured_sphere():
    assert split_punctures(PLANE, 2, 2).dims() == [1, 2, 1]


def test_split_punctures_k1_is_identity():
    for n in range(3):
        assert split_punctures(PLANE[:n + 1], 1, 2).groups == PLANE[n].groups


def test_split_punctures_n0():
    assert split_punctures(PLANE[:1], 3, 2).dims() == [1]


def test_split_punctures_needs_field():
    with pytest.raises(CoefficientPolicyError):
        split_punctures(PLANE, 2, 2, ZZ)
    with pytest.raises(CoefficientPolicyError):
        split_punctures(PLANE, 2, 3, "f3")


def test_split_punctures_twice_equals_splitting_by_sum():
    # a punctures, then b more split off the same way, is a + b punctures:
    # the multiplicities compose as p(a-1) * p(b) = p(a+b-1)
    base = [table(0, [1]), table(1, [1]), table(2, [1, 1]), table(3, [1, 1, 1])]
    for a, b in product(range(1, 4), repeat=2):
        for n in range(4):
            lhs = GradedAbelianGroup.zero()
            for r in range(n + 1):
                mid = split_punctures(base[:r + 1], a, 2)
                lhs = lhs.direct_sum(mid.groups.shift(n - r).scale(compositions(b, n - r)))
            rhs = split_punctures(base[:n + 1], a + b, 2)
            assert lhs == rhs.groups


def test_les_consistency_examples():
    assert les_consistency(table(1, [1]), table(2, [1, 1]), table(2, [1, 1, 1]), 2)
    zero = table(0, [])
    assert les_consistency(zero, zero, zero, 2)
    assert not les_consistency(table(1, [1]), table(2, [1, 1]), table(2, [1, 1, 1, 1]), 2)


def test_tables_stay_below_kd():
    for k in range(1, 4):
        assert split_punctures(PLANE, k, 2).groups.top_degree <= 2 * 2
    assert split_closed(table(2, [1, 1]), table(1, [1]), 2).groups.top_degree <= 2 * 2


def test_table_json_roundtrip():
    t = table(3, [1, 1, 0, 2])
    assert CohomologyTable.from_json(t.to_json()) == t


def test_descriptor_flavor():
    assert SpaceDescriptor.sphere(2).flavor == "closed"
    assert SpaceDescriptor.sphere(2, 1).flavor == "punctured"
    with pytest.raises(ValueError):
        SpaceDescriptor(0)
