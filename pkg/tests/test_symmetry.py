import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from rp4tri.complex import SimplicialComplex, cross_polytope_boundary, simplex_boundary
from rp4tri.constructions import kuehnel_rp, rp2_6, rp3_11
from rp4tri.symmetry import (
    act_on_facet,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    enumerate_group,
    format_cycles,
    is_automorphism,
)

from cached import c1


def shuffled(cx, seed):
    rnd = random.Random(seed)
    verts = list(cx.vertices)
    img = verts[:]
    rnd.shuffle(img)
    return cx.relabel(dict(zip(verts, img)))


def brute_force_order(cx):
    """Count vertex permutations preserving the facet set (tiny complexes only)."""
    verts = cx.vertices
    count = 0
    for p in permutations(verts):
        g = dict(zip(verts, p))
        if {act_on_facet(g, f) for f in cx.facets} == cx.facets:
            count += 1
    return count


@pytest.mark.parametrize(
    "make, order",
    [(lambda: simplex_boundary(5), 720), (lambda: cross_polytope_boundary(4), 384),
     (lambda: cross_polytope_boundary(3), 48)],
)
def test_known_orders(make, order):
    g = automorphism_group(make())
    assert g.order == order
    assert len(enumerate_group(g.generators, make().vertices)) == order


def test_rp2_6_order_matches_brute_force():
    cx = rp2_6()
    g = automorphism_group(cx)
    assert g.order == brute_force_order(cx) == 60


def test_rp3_11_group_enumerates():
    cx = rp3_11()
    g = automorphism_group(cx)
    assert len(enumerate_group(g.generators, cx.vertices)) == g.order
    assert all(is_automorphism(cx, x) for x in g.generators)


def test_rp4_group():
    cx = c1().result
    g = automorphism_group(cx)
    assert g.order == 720
    assert g.vertex_orbit_sizes == [6, 10]
    assert g.facet_orbit_sizes == [30, 120]
    assert len(enumerate_group(g.generators, cx.vertices)) == 720
    assert all(is_automorphism(cx, x) for x in g.generators)


def test_rp4_orbit_contents_match_k6_shape():
    cx = c1().result
    g = automorphism_group(cx)
    small = set(g.vertex_orbits[-1]) if len(g.vertex_orbits[-1]) == 6 else set(g.vertex_orbits[0])
    assert len(small) == 6
    for orbit in g.facet_orbits:
        hits = {len(small & set(f)) for f in orbit}
        assert hits == ({1} if len(orbit) == 30 else {2})


def test_rp4_edge_link_between_small_orbit_vertices_is_octahedron():
    cx = c1().result
    g = automorphism_group(cx)
    small = next(o for o in g.vertex_orbits if len(o) == 6)
    lk = cx.link(tuple(small[:2]))
    assert lk.n_vertices == 6 and not set(lk.vertices) & set(small)
    assert are_isomorphic(lk, cross_polytope_boundary(3)) is not None


def test_enumeration_limit():
    g = automorphism_group(simplex_boundary(7))
    with pytest.raises(OverflowError):
        enumerate_group(g.generators, simplex_boundary(7).vertices, limit=1000)


def test_iso_self_shuffle():
    cx = c1().result
    other = shuffled(cx, 5)
    m = are_isomorphic(cx, other)
    assert m is not None
    assert {act_on_facet(m, f) for f in cx.facets} == other.facets


def test_iso_absent_for_different_sizes():
    assert are_isomorphic(c1().result, kuehnel_rp(4)) is None


def test_iso_absent_same_f_vector():
    # two 6-vertex 2-spheres: the octahedron versus a different triangulation
    other = SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6)])
    octa = cross_polytope_boundary(3)
    assert other.f_vector() == octa.f_vector()
    assert are_isomorphic(octa, other) is None
    assert canonical_form(octa)[0] != canonical_form(other)[0]


def test_canonical_form_distinguishes():
    assert canonical_form(simplex_boundary(4))[0] != canonical_form(cross_polytope_boundary(4))[0]


def test_canonical_relabelling_is_consistent():
    cx = rp3_11()
    form, relabel = canonical_form(cx)
    assert tuple(sorted(act_on_facet(relabel, f) for f in cx.facets)) == form


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["rp2_6", "rp3_11", "octa"]), st.integers(0, 10_000))
def test_canonical_form_label_invariant(name, seed):
    cx = {"rp2_6": rp2_6, "rp3_11": rp3_11, "octa": lambda: cross_polytope_boundary(3)}[name]()
    assert canonical_form(shuffled(cx, seed))[0] == canonical_form(cx)[0]
    assert are_isomorphic(cx, shuffled(cx, seed)) is not None


def test_format_cycles():
    assert format_cycles({1: 2, 2: 1, 3: 3}) == "(1 2)"
    assert format_cycles({1: 1}) == "()"
