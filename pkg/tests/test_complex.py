from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from rp4tri.complex import (
    INFINITY,
    ComplexError,
    HasFixedPoint,
    Involution,
    NotInvariant,
    NotLinkSeparating,
    SimplicialComplex,
    barycentric_subdivision,
    cross_polytope_boundary,
    quotient,
    simplex_boundary,
)
from rp4tri.constructions import c1_sigma, rp2_6, rp3_11

from cached import c1, c2


def lattice_f_vector(cx):
    """Face counts grown one dimension at a time from the vertex set."""
    faces = {(v,) for v in cx.vertices}
    out = [len(faces)]
    facet_sets = [set(f) for f in cx.facets]
    for _ in range(cx.dim):
        bigger = set()
        for s in faces:
            for v in cx.vertices:
                if v > s[-1]:
                    t = s + (v,)
                    if any(set(t) <= f for f in facet_sets):
                        bigger.add(t)
        faces = bigger
        out.append(len(faces))
    return tuple(out)


def test_simplex_boundary_counts():
    cx = simplex_boundary(5)
    assert len(cx.facets) == 6 and cx.dim == 4
    assert cx.f_vector() == (6, 15, 20, 15, 6)
    assert len(cx.faces(1)) == 15


def test_cross_polytope_f_vector():
    assert cross_polytope_boundary(4).f_vector() == (8, 24, 32, 16)
    assert cross_polytope_boundary(4).label(1) == "+e1"


def test_barycentric_subdivision_size():
    b = barycentric_subdivision(simplex_boundary(5))
    assert b.n_vertices == 62
    assert len(b.facets) == 720


def test_faces_range_error():
    with pytest.raises(ComplexError):
        simplex_boundary(3).faces(4)


def test_not_pure_rejected():
    with pytest.raises(ComplexError):
        SimplicialComplex([(1, 2, 3), (3, 4)])


def test_nonpositive_vertex_rejected():
    with pytest.raises(ComplexError):
        SimplicialComplex([(0, 1)])


@pytest.mark.parametrize("make", [lambda: simplex_boundary(5), rp2_6, rp3_11,
                                  lambda: c1().result, lambda: c2().stages["x2"]])
def test_f_vector_two_ways(make):
    cx = make()
    assert cx.f_vector() == lattice_f_vector(cx)


def test_x2_triangles():
    assert len(c2().stages["x2"].faces(2)) == 192


def test_rp4_edges_complete_graph():
    cx = c1().result
    assert len(cx.faces(1)) == 120 == 16 * 15 // 2


def test_link_of_vertex_in_simplex_boundary():
    lk = simplex_boundary(5).link((3,))
    assert lk.facets == simplex_boundary(4).relabel({1: 1, 2: 2, 3: 4, 4: 5, 5: 6}).facets


def test_link_missing_face():
    with pytest.raises(ComplexError):
        rp2_6().link((1, 2, 5))


def test_link_of_facet_is_empty_complex():
    lk = rp2_6().link((1, 2, 3))
    assert lk.facets == frozenset({()})
    assert lk.dim == -1


def test_join_edge_with_square():
    edge = SimplicialComplex([(1, 2)])
    square = SimplicialComplex([(3, 4), (4, 5), (5, 6), (3, 6)])
    j = edge.join(square)
    assert len(j.facets) == 4 and j.dim == 3


def test_join_segment_octahedron_gives_interior():
    seg = SimplicialComplex([(1, 2)])
    octa = cross_polytope_boundary(3).relabel({i: i + 2 for i in range(1, 7)})
    j = seg.join(octa)
    ball = c2().stages["ball_interior"]
    assert j.facets == ball.facets


def test_cone_keeps_facet_count():
    cx = rp2_6()
    cone = cx.join(SimplicialComplex([(99,)]))
    assert len(cone.facets) == len(cx.facets)
    assert cone.dim == cx.dim + 1


def test_join_overlap_error():
    with pytest.raises(ComplexError):
        rp2_6().join(SimplicialComplex([(1,)]))


def test_distance_basics():
    cx = simplex_boundary(5)
    assert cx.skeleton_distance(2, 2) == 0
    assert all(cx.skeleton_distance(u, v) == 1 for u, v in combinations(cx.vertices, 2))
    with pytest.raises(ComplexError):
        cx.skeleton_distance(1, 42)


def test_distance_disconnected():
    cx = SimplicialComplex([(1, 2), (3, 4)])
    assert cx.skeleton_distance(1, 4) == INFINITY


def test_s4_32_antipodal_distance():
    s4 = c1().stages["s4_32"]
    sigma = c1_sigma()
    assert {s4.skeleton_distance(v, sigma(v)) for v in s4.vertices} == {3}


def test_quotient_s4_32():
    q = quotient(c1().stages["s4_32"], c1_sigma())
    assert q.n_vertices == 16 and len(q.facets) == 150
    assert q.vertices == tuple(range(1, 17))
    assert q.label(1) == "e1~b1"


def test_quotient_x32_not_invariant():
    with pytest.raises(NotInvariant):
        quotient(c1().stages["x32"], c1_sigma())


def test_quotient_simplex_boundary_not_separating():
    with pytest.raises(NotLinkSeparating):
        quotient(simplex_boundary(5), Involution({1: 2, 3: 4, 5: 6}))


def test_quotient_fixed_point():
    with pytest.raises(HasFixedPoint):
        quotient(simplex_boundary(5), Involution({1: 2, 3: 4}))


def test_involution_cycles_round_trip():
    inv = Involution.from_cycles("(1 27)(2, 28)(3)")
    assert inv(27) == 1 and inv(3) == 3
    assert Involution.from_cycles(inv.cycles()).map == inv.map
    with pytest.raises(ComplexError):
        Involution.from_cycles("(1 2 3)")
    with pytest.raises(ComplexError):
        Involution({1: 2, 2: 3})


def test_normalized_and_relabel():
    cx = SimplicialComplex([(2, 5, 9), (2, 5, 11)], {9: "x"})
    n = cx.normalized()
    assert n.vertices == (1, 2, 3, 4)
    assert n.label(3) == "x"
    with pytest.raises(ComplexError):
        cx.relabel({2: 1, 5: 1, 9: 3, 11: 4})


def test_boundary_of_ball():
    ball = c2().stages["ball_cones"]
    assert ball.boundary().f_vector() == (24, 88, 128, 64)
    with pytest.raises(ComplexError):
        simplex_boundary(3).boundary()


# property tests on random small complexes


@st.composite
def pure_complexes(draw, max_vertices=8):
    n = draw(st.integers(4, max_vertices))
    k = draw(st.integers(2, 4))
    all_faces = list(combinations(range(1, n + 1), k))
    chosen = draw(st.lists(st.sampled_from(all_faces), min_size=1, max_size=12, unique=True))
    return SimplicialComplex(chosen)


@settings(max_examples=60, deadline=None)
@given(pure_complexes(), st.data())
def test_link_of_link(cx, data):
    facet = data.draw(st.sampled_from(cx.sorted_facets))
    b_size = data.draw(st.integers(2, len(facet)))
    b = facet[:b_size]
    a = b[: data.draw(st.integers(1, b_size - 1))]
    rest = tuple(v for v in b if v not in a)
    assert cx.link(b).facets == cx.link(a).link(rest).facets


@settings(max_examples=60, deadline=None)
@given(pure_complexes())
def test_f_vector_matches_lattice(cx):
    assert cx.f_vector() == lattice_f_vector(cx)


@settings(max_examples=40, deadline=None)
@given(pure_complexes(), st.randoms(use_true_random=False))
def test_relabel_preserves_f_vector(cx, rnd):
    verts = list(cx.vertices)
    targets = rnd.sample(range(1, 100), len(verts))
    moved = cx.relabel(dict(zip(verts, targets)))
    assert moved.f_vector() == cx.f_vector()
    assert moved.normalized().f_vector() == cx.f_vector()
