"""Closed-form bounds and their verdicts on computed tables."""

import pytest

from braidhom import GradedAbelianGroup, homology, relative_homology
from braidhom.bounds import (
    CONSISTENT,
    NOT_MEASURED,
    VIOLATED,
    cohdim_bound,
    conn2_bound,
    connectivity_report,
    mod2_cohdim_euclidean,
    nakaoka_bound,
    scanning_connectivity,
    sp_connectivity_bound,
    stability_range,
    stability_table_check,
    tp_relative_bound,
)
from braidhom.braid import SpaceDescriptor
from braidhom.catalog import lookup
from braidhom.chain import homological_connectivity
from braidhom.errors import HypothesisError
from braidhom.sp2 import TwoComplexPresentation, reduced_sp_model
from braidhom.tp import tp_circle_complex


@pytest.mark.parametrize("d", range(2, 7))
def test_cohdim_punctured_sphere_k2(d):
    assert cohdim_bound(SpaceDescriptor(d, True, True, 1, d - 1), 2).bound == d - 1


@pytest.mark.parametrize("d", range(2, 7))
def test_cohdim_closed_sphere_k2(d):
    assert cohdim_bound(SpaceDescriptor(d, True, True, 0, d - 1), 2).bound == d


@pytest.mark.parametrize("k", range(2, 9))
def test_cohdim_surfaces(k):
    assert cohdim_bound(SpaceDescriptor(2, True, True, 0, 0), k).bound == k + 1
    assert cohdim_bound(SpaceDescriptor(2, True, True, 1, 0), k).bound == k


def test_cohdim_main3_cli_example():
    assert cohdim_bound(SpaceDescriptor(2, True, True, 0, 0), 5).bound == 6


def test_cohdim_verdicts():
    space = SpaceDescriptor(2, True, True, 1, 1)
    ok = cohdim_bound(space, 2, GradedAbelianGroup.from_ranks([1, 1]))
    assert ok.verdict == CONSISTENT and ok.measured == 1
    bad = cohdim_bound(space, 2, GradedAbelianGroup.from_ranks([1, 1, 1]))
    assert bad.verdict == VIOLATED and not bad.ok
    assert cohdim_bound(space, 2).verdict == NOT_MEASURED


def test_cohdim_needs_k2():
    with pytest.raises(HypothesisError):
        cohdim_bound(SpaceDescriptor(2), 1)


def test_sp_connectivity_sharp_on_sphere():
    sphere = TwoComplexPresentation.surface(0)
    for n in range(1, 6):
        assert sp_connectivity_bound(n, 1) == 2 * n - 1
        red = homology(reduced_sp_model(sphere, n))
        assert red == GradedAbelianGroup({2 * n: 1})
        assert homological_connectivity(red) == sp_connectivity_bound(n, 1)


def test_sp_connectivity_example_suspended_projective_space():
    entry = lookup("SPbar^2(S^k)")
    for k in (2, 3):
        g = entry.groups(k=k)
        assert sp_connectivity_bound(2, k - 1) == k + 1
        assert homological_connectivity(g) == k + 1


def test_sp_connectivity_needs_r1():
    with pytest.raises(HypothesisError):
        sp_connectivity_bound(2, 0)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_conn2_sharp_on_surfaces(g):
    x = TwoComplexPresentation.surface(g)
    for n in range(2 * g, 2 * g + 3):
        assert conn2_bound(n, 2 * g) == 2 * n - 2 * g - 1
        rep = connectivity_report("conntwo", conn2_bound(n, 2 * g), {"n": n},
                                  homology(reduced_sp_model(x, n)))
        assert rep.verdict == CONSISTENT and rep.measured == rep.bound


def test_nakaoka_and_relative_on_circle():
    # TP̄^k(S^1) = S^k and S^1 is 0-connected
    for k in range(1, 8):
        rel = relative_homology(tp_circle_complex(k), lambda name, k=k: int(name[5:]) < k)
        assert homological_connectivity(rel) >= nakaoka_bound(k, 0)
        assert homological_connectivity(rel) >= tp_relative_bound(k, 0)
        low = relative_homology(tp_circle_complex(k), lambda name, k=k: int(name[5:]) < k - 1)
        if k >= 2:
            assert homological_connectivity(low) >= tp_relative_bound(k, 0, "closed")


def test_relative_bound_flavors():
    assert tp_relative_bound(3, 1) == 3
    assert tp_relative_bound(3, 1, "closed") == 2
    with pytest.raises(ValueError):
        tp_relative_bound(3, 1, "open")


# -- stability ------------------------------------------------------------------------

def test_stability_examples():
    assert stability_range(7) == 3
    assert scanning_connectivity(7) == 3
    assert stability_range(5, "surface-punctured") == 4
    assert stability_range(1) == 0


def test_scanning_below_stability():
    for profile in ("generic", "surface-punctured"):
        for k in range(2, 60):
            assert scanning_connectivity(k, profile) <= stability_range(k, profile)


def test_custom_profile():
    assert stability_range(3, {3: 2}) == 2
    with pytest.raises(KeyError):
        stability_range(4, {3: 2})


def plane_tables():
    e = lookup("B(R^2,k) small k")
    return {k: GradedAbelianGroup.from_ranks(e.dims(k=k)) for k in range(1, 5)}


def test_stability_check_on_plane():
    assert stability_table_check(plane_tables()).verdict == CONSISTENT


def test_stability_check_constant():
    g = GradedAbelianGroup.from_ranks([1, 2])
    assert stability_table_check([g] * 5).verdict == CONSISTENT


def test_stability_check_detects_loss():
    tables = [GradedAbelianGroup.from_ranks([1, 1]), GradedAbelianGroup.from_ranks([1])]
    rep = stability_table_check(tables)
    assert rep.verdict == VIOLATED


def test_surface_profile_fails_in_genus_zero():
    # H_2(B(C,3); F2) = 0 but H_2(B(C,4); F2) = 1, inside q <= s(3) = 2
    rep = stability_table_check(plane_tables(), "surface-punctured")
    assert rep.verdict == VIOLATED
    assert "k=3" in rep.detail


def test_mod2_cohdim_below_bound():
    for k in range(2, 65):
        for d in range(2, 9):
            space = SpaceDescriptor(d, True, True, 1, d - 1)
            assert mod2_cohdim_euclidean(k, d) <= cohdim_bound(space, k).bound == (d - 1) * (k - 1)


def test_mod2_cohdim_matches_plane_tables():
    for k, g in plane_tables().items():
        assert g.top_degree == mod2_cohdim_euclidean(k, 2)


def test_report_json():
    rep = connectivity_report("x", 2, {"n": 1}, GradedAbelianGroup.zero())
    assert rep.to_json()["measured"] == "inf"
