"""Truncated products: the circle family, wedges and the mod 2 splitting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidhom import F2, ZZ, GradedAbelianGroup, homology, relative_homology
from braidhom.braid import compositions
from braidhom.errors import CoefficientPolicyError
from braidhom.tp import (
    ReducedTpTable,
    bcm_e1_connectivity,
    lm_split_check,
    reduced_tp_wedge,
    tp_circle_complex,
    weak_compositions,
)

Z, Z2 = (1, ()), (0, (2,))


def test_tp2_circle():
    assert homology(tp_circle_complex(2), ZZ) == GradedAbelianGroup({0: Z, 1: Z2})


def test_tp0_is_point():
    assert homology(tp_circle_complex(0), ZZ) == GradedAbelianGroup.point()


def test_tp4_circle_mod2():
    assert homology(tp_circle_complex(4), F2).ranks() == [1] * 5


@pytest.mark.parametrize("n", range(0, 13))
def test_rp_n_pattern(n):
    g = homology(tp_circle_complex(n), ZZ)
    for q in range(1, n):
        assert g[q] == (Z2 if q % 2 else (0, ()))
    if n:
        assert g[n] == (Z if n % 2 else (0, ()))
    assert homology(tp_circle_complex(n), F2).ranks() == [1] * (n + 1)


@pytest.mark.parametrize("k", range(1, 8))
def test_relative_stage_is_sphere(k):
    rel = relative_homology(tp_circle_complex(k), lambda name: int(name[5:]) < k, ZZ)
    assert rel == GradedAbelianGroup({k: Z})


def test_mod2_stabilizes_to_dold_thom():
    # dim H_q(TP^n S^1; F2) = dim H~_q(S^1; F2) + δ_{q,0} once n >= q, for q <= 1
    for n in range(1, 8):
        g = homology(tp_circle_complex(n), F2)
        assert g.free(0) == 1 and g.free(1) == 1


# -- wedges -------------------------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_wedge_of_circles(m, n):
    g = reduced_tp_wedge([ReducedTpTable.circle(n)] * m, n)
    assert g == GradedAbelianGroup({n: (compositions(m, n), ())})


def test_wedge_with_point_is_identity():
    x = ReducedTpTable("X", {1: GradedAbelianGroup({1: 1, 2: 1}), 2: GradedAbelianGroup({3: 2})})
    for n in (1, 2):
        assert reduced_tp_wedge([x, ReducedTpTable.point(2)], n) == x[n]


def test_wedge_n1_is_direct_sum():
    a = ReducedTpTable("A", {1: GradedAbelianGroup({1: 1})})
    b = ReducedTpTable("B", {1: GradedAbelianGroup({2: 3})})
    assert reduced_tp_wedge([a, b], 1) == a[1].direct_sum(b[1])


def _table(ranks):
    return ReducedTpTable("X", {s + 1: GradedAbelianGroup({q: r for q, r in enumerate(row) if r})
                                for s, row in enumerate(ranks)})


tables = st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=4), min_size=3, max_size=3).map(_table)


@given(st.lists(tables, min_size=1, max_size=3), st.randoms(use_true_random=False), st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_wedge_commutative_and_associative(ts, rnd, n):
    base = reduced_tp_wedge(ts, n)
    shuffled = ts[:]
    rnd.shuffle(shuffled)
    assert reduced_tp_wedge(shuffled, n) == base
    if len(ts) == 3:
        # fold the first two into one summand
        inner = ReducedTpTable("AB", {s: reduced_tp_wedge(ts[:2], s) for s in range(1, 4)})
        assert reduced_tp_wedge([inner, ts[2]], n) == base


def test_wedge_z_needs_torsion_free():
    t = ReducedTpTable("RP", {1: GradedAbelianGroup({1: Z2})}, ZZ)
    with pytest.raises(CoefficientPolicyError):
        reduced_tp_wedge([t], 1, ZZ)


def test_weak_compositions_are_lexicographic():
    assert list(weak_compositions(2, 2)) == sorted(weak_compositions(2, 2))
    assert len(list(weak_compositions(5, 3))) == compositions(3, 5)


def test_table_json_roundtrip():
    t = ReducedTpTable.circle(4)
    assert ReducedTpTable.from_json(t.to_json()) == t


def test_stage_zero_must_be_s0():
    with pytest.raises(ValueError):
        ReducedTpTable("bad", {0: GradedAbelianGroup({1: 1})})


# -- splitting ------------------------------------------------------------------------

def f2(n):
    return homology(tp_circle_complex(n), F2)


def test_lm_split_tp3_circle():
    assert lm_split_check(f2(3), f2(2), GradedAbelianGroup.sphere(3, reduced=True))


def test_lm_split_n1():
    x = GradedAbelianGroup({0: 1, 1: 2})
    assert lm_split_check(x, GradedAbelianGroup.point(), x.reduced())


def test_lm_split_detects_corruption():
    assert not lm_split_check(f2(3), f2(2), GradedAbelianGroup.sphere(2, reduced=True))


def test_lm_split_is_mod2_only():
    with pytest.raises(CoefficientPolicyError):
        lm_split_check(f2(3), f2(2), GradedAbelianGroup.sphere(3, reduced=True), ZZ)


# -- E1 connectivity ----------------------------------------------------------------

def test_bcm_examples():
    assert bcm_e1_connectivity(3, 4) == 2
    assert all(bcm_e1_connectivity(1, w) == 0 for w in range(6))
    assert bcm_e1_connectivity(5, 0) == 4
