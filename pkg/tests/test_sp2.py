"""The multiplicative cell model for symmetric products of 2-complexes."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidhom import F2, ZZ, GradedAbelianGroup, homology
from braidhom.bounds import conn2_bound
from braidhom.chain import homological_connectivity
from braidhom.errors import PresentationError
from braidhom.oracle import SimplicialComplex, figure_eight, oracle_homology, torus
from braidhom.sp2 import TwoComplexPresentation, build_sp_model, reduced_sp_model, sp_cells

T2 = TwoComplexPresentation.surface(1)
EIGHT = TwoComplexPresentation.wedge_of_circles(2)
# RP^2: one circle, one disk on a^2
RP2 = TwoComplexPresentation(1, (((1, 1), (1, 1)),))


def test_torus_sp2():
    g = homology(build_sp_model(T2, 2), ZZ)
    assert g.ranks() == [1, 2, 2, 2, 1]
    assert g.is_torsion_free()


def test_figure_eight_sp3():
    assert homology(build_sp_model(EIGHT, 3), ZZ).ranks() == [1, 2, 1]


@pytest.mark.parametrize("x", [T2, EIGHT, RP2, TwoComplexPresentation.surface(2)])
def test_n1_is_the_space_itself(x):
    c = build_sp_model(x, 1)
    assert [c.count(q) for q in range(3)] == [1, x.w, x.r]
    assert homology(c, ZZ) == homology(build_sp_model(x, 1), ZZ)


def test_rp2_cellular_complex():
    assert homology(build_sp_model(RP2, 1), ZZ) == GradedAbelianGroup({0: (1, ()), 1: (0, (2,))})


def test_reduced_torus_n3():
    g = homology(reduced_sp_model(T2, 3), ZZ)
    assert g.ranks() == [0, 0, 0, 0, 1, 2, 1]


def test_reduced_figure_eight_n2():
    c = reduced_sp_model(EIGHT, 2)
    assert c.cells == {2: ("e_a*e_b",)}
    assert homology(c, ZZ).ranks() == [0, 0, 1]


def test_reduced_n1_drops_basepoint():
    c = reduced_sp_model(T2, 1)
    assert c.count(0) == 0
    assert homology(c).ranks() == [0, 2, 1]


def test_cells_weight_and_degree():
    for cell in sp_cells(T2, 4):
        assert cell.weight == 4
        assert cell.degree == len(cell.circles) + 2 * sum(cell.disk_exponents)
        assert list(cell.circles) == sorted(set(cell.circles))


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_closed_surface_betti_closed_form(g, n):
    betti = homology(build_sp_model(TwoComplexPresentation.surface(g), n), ZZ).ranks(2 * n + 1)
    want = [sum(comb(2 * g, t) for t in range(i + 1) if (i - t) % 2 == 0 and t + (i - t) // 2 <= n)
            for i in range(2 * n + 1)]
    assert betti == want


def test_closed_surface_boundary_vanishes():
    c = build_sp_model(TwoComplexPresentation.surface(2), 3)
    assert all(m.is_zero() for m in c.boundaries.values())


@pytest.mark.parametrize("g", [1, 2])
def test_jacobian_shift(g):
    for n in range(2 * g, 2 * g + 4):
        ranks = homology(reduced_sp_model(TwoComplexPresentation.surface(g), n), ZZ).ranks(2 * n + 1)
        shift = 2 * n - 2 * g
        assert ranks == [comb(2 * g, i - shift) if i >= shift else 0 for i in range(2 * n + 1)]
        assert homological_connectivity(homology(reduced_sp_model(TwoComplexPresentation.surface(g), n))) \
            == conn2_bound(n, 2 * g)


@st.composite
def presentations(draw):
    w = draw(st.integers(0, 3))
    letter = st.tuples(st.integers(1, max(w, 1)), st.sampled_from([1, -1]))
    disks = draw(st.lists(st.lists(letter, max_size=4 if w else 0).map(tuple), max_size=2))
    return TwoComplexPresentation(w, tuple(disks))


@given(presentations(), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_steenrod_splitting(x, n):
    for coeff in (ZZ, F2):
        full = homology(build_sp_model(x, n, coeff), coeff)
        prev = homology(build_sp_model(x, n - 1, coeff), coeff)
        red = homology(reduced_sp_model(x, n, coeff), coeff)
        assert full == prev.direct_sum(red)


@given(presentations(), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_conntwo_bound_holds(x, n):
    red = homology(reduced_sp_model(x, n), ZZ)
    assert homological_connectivity(red) >= conn2_bound(n, x.w)


def test_f2_model_reduces_coefficients():
    c = build_sp_model(RP2, 2, F2)
    assert c.characteristic == 2
    assert homology(c, F2) == homology(build_sp_model(RP2, 2), ZZ).mod_p_dims(2)


def test_oracle_agrees_on_figure_eight_and_torus():
    assert oracle_homology(figure_eight(), "SP", 2, F2) == homology(build_sp_model(EIGHT, 2, F2), F2)
    assert oracle_homology(torus(), "SP", 2, F2) == homology(build_sp_model(T2, 2, F2), F2)


def test_oracle_agrees_on_projective_plane():
    # 6-vertex RP^2
    rp2 = SimplicialComplex.from_facets([
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]])
    assert homology(rp2.chain_complex()) == homology(build_sp_model(RP2, 1))
    assert oracle_homology(rp2, "SP", 2, F2) == homology(build_sp_model(RP2, 2, F2), F2)


def test_presentation_json_roundtrip():
    data = {"w": 2, "disks": [[["a", 1], ["b", 1], ["a", -1], ["b", -1]]]}
    x = TwoComplexPresentation.from_json(data)
    assert x.abelianized() == [{}]
    assert TwoComplexPresentation.from_json(x.to_json()) == x


def test_bad_presentation_rejected():
    with pytest.raises(PresentationError):
        TwoComplexPresentation(1, (((2, 1),),))
    with pytest.raises(PresentationError):
        TwoComplexPresentation(1, (((1, 2),),))


def test_punctured_surface_is_wedge():
    x = TwoComplexPresentation.surface(1, 2)
    assert (x.w, x.r) == (3, 0)
