from itertools import combinations

import pytest

from rp4tri.complex import simplex
from rp4tri.constructions import (
    GENERATORS,
    StageError,
    _expect,
    arnoux_marin_bound,
    c1_axis_orbits,
    c1_axis_permutation,
    c1_sigma,
    c2_antipodal_map,
    c2_forcing_check,
    c2_pipeline,
    kuehnel_involution,
    kuehnel_rp,
    rp2_6,
    rp3_11,
    rp4_from_k6,
)
from rp4tri.designs import build_k6
from rp4tri.homology import HomologyGroup, homology
from rp4tri.manifold import check_combinatorial_manifold, is_antipodal, is_closed_pseudomanifold
from rp4tri.symmetry import are_isomorphic

from cached import c1, c2, c3, k6, rp4_k6

Z, Z2, ZERO = HomologyGroup(1), HomologyGroup(0, (2,)), HomologyGroup(0)


def image(cx, g):
    return {simplex(g[v] for v in f) for f in cx.facets}


def test_c1_counts():
    assert c1().counts == {"x6": 6, "x12": 30, "x32": 330, "round1": 330, "s4_32": 300, "rp4": 150}
    assert c1().stages["x12"].n_vertices == 12
    assert c1().stages["x32"].n_vertices == 32


def test_c1_x12_is_five_cones_per_facet():
    x12 = c1().stages["x12"]
    for m in range(27, 33):
        assert len(x12.star_facets((m,))) == 5


def test_s4_32_axis_orbits():
    sizes = sorted(len(o) for o in c1_axis_orbits(c1().stages["s4_32"]))
    assert sizes == [30, 30, 120, 120]


def test_s4_32_orbits_pair_up_under_sigma():
    s4 = c1().stages["s4_32"]
    sigma = c1_sigma()
    orbits = c1_axis_orbits(s4)
    for o in orbits:
        img = {simplex(sigma(v) for v in f) for f in o}
        assert img in orbits
        assert img != o


@pytest.mark.parametrize("perm", [(2, 1, 3, 4, 5, 6), (2, 3, 4, 5, 6, 1)])
def test_s4_32_symmetric_and_sigma_commutes(perm):
    s4 = c1().stages["s4_32"]
    g = c1_axis_permutation(perm)
    sigma = c1_sigma()
    assert image(s4, g) == s4.facets
    assert image(s4, sigma.map) == s4.facets
    assert all(g[sigma(v)] == sigma(g[v]) for v in s4.vertices)


def test_x32_not_sigma_invariant():
    x32 = c1().stages["x32"]
    assert image(x32, c1_sigma().map) != x32.facets


def test_c1_rp4_is_two_neighborly():
    cx = c1().result
    assert set(cx.faces(1)) == set(combinations(cx.vertices, 2))


def test_c2_counts_and_boundaries():
    assert c2().counts == {"interior": 8, "cones": 16, "triangle_closures": 32, "edge_closures": 48,
                           "vertex_cones": 36, "cube_fill": 10}
    assert sum(c2().counts.values()) == 150
    assert c2().stages["x1"].f_vector() == (24, 88, 128, 64)
    assert c2().stages["x2"].f_vector() == (24, 120, 192, 96)
    assert c2().stages["x3"].f_vector() == (24, 120, 192, 96)


def test_c2_x3_ball_contractible_with_antipodal_boundary():
    ball = c2().stages["ball_edge_closures"]
    hs = homology(ball)
    assert hs[0] == Z and all(h == ZERO for h in hs[1:])
    assert is_antipodal(ball.boundary(), c2_antipodal_map()).ok


def test_c2_vertex_cones_join_opposite_axis_points():
    # the interior segment joins +-e1; the vertex cones join the other pairs
    assert c2().stages["ball_interior"].is_face((1, 2))
    ball = c2().stages["ball"]
    assert not any(c2().stages["ball_edge_closures"].is_face((2 * i - 1, 2 * i)) for i in (2, 3, 4))
    assert all(ball.is_face((2 * i - 1, 2 * i)) for i in (2, 3, 4))


def test_c2_diagonal_forcing():
    forced = c2_forcing_check()
    # a uniform choice of diagonals breaks antipodality; only mixed ones survive
    assert forced == {"oe": True, "eo": True, "oo": False, "ee": False}
    with pytest.raises(StageError):
        c2_pipeline(-1, -1)


def test_c2_mirror_choice_gives_same_complex():
    assert are_isomorphic(c2_pipeline(1, -1).result, c2().result) is not None


def test_c3_counts():
    assert tuple(c3().counts.values()) == (24, 16, 24, 8, 12, 2, 48, 8, 8)
    assert sum(c3().counts.values()) == 150
    assert c3().stages["boundary"].f_vector() == (22, 102, 160, 80)


def test_c3_ball_contractible():
    hs = homology(c3().stages["ball"])
    assert hs[0] == Z and all(h == ZERO for h in hs[1:])


@pytest.mark.parametrize("name", ["rp4-c1", "rp4-c2", "rp4-c3", "rp4-k6"])
def test_rp4_generators_are_manifolds(name):
    cx = {"rp4-c1": c1().result, "rp4-c2": c2().result, "rp4-c3": c3().result, "rp4-k6": rp4_k6()}[name]
    assert cx.f_vector() == (16, 120, 330, 375, 150)
    assert is_closed_pseudomanifold(cx).ok
    assert check_combinatorial_manifold(cx).ok
    assert homology(cx) == [Z, Z2, ZERO, Z2, ZERO]


def test_k6_generator_orbit_shape():
    cx = rp4_k6()
    small = {cx.vertex_by_label(v) for v in "ABCDEF"}
    hits = sorted(len(small & set(f)) for f in cx.facets)
    assert hits.count(1) == 30 and hits.count(2) == 120


def test_k6_generator_respects_relabelled_structure():
    other = build_k6("abcdef", "9876543210", "UVWXYZ")
    assert are_isomorphic(rp4_from_k6(other), rp4_k6()) is not None
    assert rp4_from_k6(k6()).facets == rp4_k6().facets


def test_small_spaces():
    assert rp2_6().f_vector() == (6, 15, 10)
    assert rp3_11().f_vector() == (11, 51, 80, 40)
    assert rp2_6().euler_characteristic() == 1
    assert rp3_11().euler_characteristic() == 0


@pytest.mark.parametrize("n, verts, facets", [(2, 7, 12), (3, 15, 60), (4, 31, 360)])
def test_kuehnel_sizes(n, verts, facets):
    cx = kuehnel_rp(n)
    assert cx.n_vertices == verts == 2 ** (n + 1) - 1
    assert len(cx.facets) == facets


def test_kuehnel_involution_is_complement():
    cx, inv = kuehnel_involution(2)
    assert not inv.fixed_points(cx.vertices)
    assert is_antipodal(cx, inv).ok


def test_kuehnel_rejects_small_n():
    with pytest.raises(Exception):
        kuehnel_rp(1)


def test_bound():
    assert [arnoux_marin_bound(n) for n in (3, 4, 5)] == [11, 16, 22]
    with pytest.raises(ValueError):
        arnoux_marin_bound(2)


def test_expect_raises_with_stage_name():
    with pytest.raises(StageError, match="X12"):
        _expect("X12", "facets", 29, 30)


def test_generator_table_names():
    assert {"x6", "x12", "x32", "s4-32", "rp4-c1", "rp4-c2", "rp4-c3", "rp4-k6", "rp2-6", "rp3-11"} <= set(GENERATORS)
