"""Ground-truth oracle: triangulated products and their quotients."""

import pytest

from braidhom import F2, ZZ, GradedAbelianGroup, homology
from braidhom.errors import BudgetExceeded
from braidhom.oracle import (
    SimplicialComplex,
    circle,
    figure_eight,
    is_regular,
    load_space,
    oracle_homology,
    oracle_relative,
    orbit_quotient,
    point,
    product_triangulation,
    quotient_space,
    regularize,
    sphere_boundary,
    torus,
    wedge,
)

Z, Z2 = (1, ()), (0, (2,))


def test_builtin_complexes_have_expected_homology():
    assert homology(circle(3).chain_complex()).ranks() == [1, 1]
    assert homology(circle(4).chain_complex()).ranks() == [1, 1]
    assert homology(sphere_boundary(2).chain_complex()).ranks() == [1, 0, 1]
    assert homology(torus().chain_complex()).ranks() == [1, 2, 1]
    assert homology(figure_eight().chain_complex()).ranks() == [1, 2]


def test_facets_are_normalized():
    x = SimplicialComplex.from_facets([[0, 1, 2], [0, 1], [2, 3]])
    assert x.facets == ((2, 3), (0, 1, 2))
    assert SimplicialComplex.from_json(x.to_json()) == x


def test_wedge_glues_basepoints():
    x = wedge(circle(3), circle(4))
    assert x.vertices[0] == "*"
    assert len(x.vertices) == 1 + 2 + 3


def test_load_space_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"facets": [[0, 1], [1, 2], [0, 2]]}')
    assert homology(load_space(str(p)).chain_complex()).ranks() == [1, 1]


# -- product triangulation -------------------------------------------------------

def test_product_of_circles_is_torus():
    gx = product_triangulation(circle(3), 2)
    by_dim = gx.complex.simplices()
    assert len(by_dim[0]) == 9
    assert len(by_dim[2]) == 18
    assert homology(gx.complex.chain_complex()).ranks() == [1, 2, 1]
    assert len(gx.group) == 2


def test_product_of_point_is_point():
    gx = product_triangulation(point(), 3)
    assert gx.complex.count() == 1


def test_product_of_spheres_kunneth():
    gx = product_triangulation(sphere_boundary(2), 2)
    assert homology(gx.complex.chain_complex(), F2).ranks() == [1, 0, 2, 0, 1]


# -- barycentric route -------------------------------------------------------------

def test_regularized_swap_quotient_is_mobius_band():
    r = regularize(product_triangulation(circle(3), 2), passes=2)
    assert is_regular(r)
    assert homology(orbit_quotient(r)).ranks() == [1, 1]


def test_regularize_trivial_action_still_subdivides():
    gx = product_triangulation(circle(3), 1)
    r = regularize(gx, passes=1)
    assert is_regular(r)
    assert r.complex.count() > gx.complex.count()
    assert homology(orbit_quotient(r)).ranks() == [1, 1]


def test_regularized_sp2_of_sphere():
    # one subdivision already makes the swap regular on the staircase product;
    # two would exceed the default budget
    r = regularize(product_triangulation(sphere_boundary(2), 2), passes=1)
    assert homology(orbit_quotient(r, 2), F2).ranks() == [1, 0, 1, 0, 1]


# -- quotient modes ------------------------------------------------------------------

def test_tp2_circle_is_rp2():
    g = oracle_homology(circle(3), "TP", 2, ZZ, basepoint=0)
    assert g == GradedAbelianGroup({0: Z, 1: Z2})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_spbar_circle_is_contractible(n):
    # SP^{n-1}(S^1) -> SP^n(S^1) is an equivalence for n >= 2
    g = oracle_homology(circle(3), "SPbar", n, ZZ, basepoint=0)
    assert g == GradedAbelianGroup.point()


def test_spbar_circle_n1_is_circle():
    assert oracle_homology(circle(3), "SPbar", 1, ZZ, basepoint=0).ranks() == [1, 1]


def test_tpbar_sphere_quotient():
    # TP^2/TP^1 of S^2: reduced F2 homology in degrees 3 and 4
    g = oracle_homology(sphere_boundary(2), "TPbar", 2, F2, basepoint=0)
    assert g.ranks() == [1, 0, 0, 1, 1]


def test_tp_pair_sphere_closed_flavor():
    g = oracle_relative(sphere_boundary(2), 2, 0, 0, F2)
    assert g.ranks() == [0, 0, 1, 1, 1]
    gz = oracle_relative(sphere_boundary(2), 2, 0, 0, ZZ)
    assert gz == GradedAbelianGroup({2: Z2, 4: Z})


def test_figure_eight_sp2():
    assert oracle_homology(figure_eight(), "SP", 2, F2).ranks() == [1, 2, 1]


@pytest.mark.parametrize("mode", ["SP", "TP", "SPbar", "TPbar"])
def test_point_is_point_in_every_mode(mode):
    g = oracle_homology(point(), mode, 2, ZZ, basepoint=0)
    assert g == GradedAbelianGroup.point()


def test_sp3_circle():
    assert oracle_homology(circle(3), "SP", 3, ZZ).ranks() == [1, 1]


def test_sp_independent_of_triangulation():
    for n in (2, 3):
        a = oracle_homology(circle(3), "SP", n, ZZ)
        b = oracle_homology(circle(4), "SP", n, ZZ)
        assert a == b


def test_torus_sp2_over_f2():
    assert oracle_homology(torus(), "SP", 2, F2).ranks() == [1, 2, 2, 2, 1]


@pytest.mark.parametrize("mode", ["SPbar", "TP", "TPbar"])
def test_reduced_modes_keep_connectedness(mode):
    g = oracle_homology(figure_eight(), mode, 2, F2, basepoint="*")
    assert g.free(0) == 1


def test_tp_circle_family_matches_rp_n():
    for n in range(1, 5):
        g = oracle_homology(circle(3), "TP", n, ZZ, basepoint=0)
        want = {0: Z, n: Z if n % 2 else (0, ())}
        want.update({q: Z2 for q in range(1, n, 2)})
        assert g == GradedAbelianGroup(want)


def test_missing_basepoint_rejected():
    with pytest.raises(ValueError):
        quotient_space(circle(3), "TP", 2)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as err:
        oracle_homology(sphere_boundary(2), "SP", 3, ZZ, budget=100)
    assert err.value.budget == 100


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("BRAIDHOM_BUDGET", "50")
    with pytest.raises(BudgetExceeded):
        oracle_homology(sphere_boundary(2), "SP", 3, F2)
