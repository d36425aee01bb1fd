from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from rp4tri.complex import SimplicialComplex, simplex_boundary
from rp4tri.constructions import rp2_6, rp3_11
from rp4tri.flips import (
    BistellarMove,
    InvalidMove,
    apply_batch,
    apply_flip,
    is_flippable,
    reduce,
    replay,
    valid_moves,
)
from rp4tri.homology import homology

from cached import c1


def tri_id(*xs):
    return 7 + list(combinations(range(1, 7), 3)).index(tuple(sorted(xs)))


def bar(m):
    return 26 + m


def test_round_one_move_found_in_x32():
    x32 = c1().stages["x32"]
    move = is_flippable(x32, (1, 2, bar(3)))
    assert move == BistellarMove((1, 2, bar(3)), tuple(sorted(tri_id(1, 2, l) for l in (4, 5, 6))))


def test_inner_triangle_not_flippable():
    x32 = c1().stages["x32"]
    inner = tuple(sorted((tri_id(1, 2, 3), tri_id(1, 2, 4), tri_id(1, 3, 4))))
    assert x32.is_face(inner)
    assert is_flippable(x32, inner) is None


def test_vertex_of_simplex_boundary_not_flippable():
    assert is_flippable(simplex_boundary(5), (1,)) is None


def test_facet_subdivision_uses_fresh_vertex():
    cx = simplex_boundary(3)
    m = is_flippable(cx, (1, 2, 3))
    assert m.in_face == (5,)
    out = apply_flip(cx, m)
    assert out.n_vertices == 5 and len(out.facets) == 6


def round1_moves():
    out = []
    for i in range(1, 7):
        for j in range(i + 1, 7):
            for k in range(1, 7):
                if k in (i, j):
                    continue
                rest = [l for l in range(1, 7) if l not in (i, j, k)]
                out.append(BistellarMove((i, j, bar(k)), tuple(sorted(tri_id(i, j, l) for l in rest))))
    return out


def test_round_one_sequentially_equals_batch():
    x32 = c1().stages["x32"]
    cx = x32
    for m in round1_moves():
        cx = apply_flip(cx, m)
        assert len(cx.facets) == 330
    assert cx == c1().stages["round1"]


def test_round_two_drops_to_300():
    mid = c1().stages["round1"]
    assert len(c1().stages["s4_32"].facets) == 300
    tet = sorted(tri_id(1, 2, l) for l in (3, 4, 5, 6))
    assert mid.link((1, 2)).facets == SimplicialComplex(combinations(tet, 3)).facets


def test_applying_twice_fails():
    x32 = c1().stages["x32"]
    m = round1_moves()[0]
    once = apply_flip(x32, m)
    with pytest.raises(InvalidMove):
        apply_flip(once, m)


def test_batch_interference_rejected():
    cx = simplex_boundary(3)
    m = is_flippable(cx, (1, 2, 3))
    with pytest.raises(InvalidMove):
        apply_batch(cx, [m, BistellarMove((1, 2, 3), (6,))])


def test_move_text_round_trip():
    m = BistellarMove((1, 2), (3, 4, 5))
    assert str(m) == "1 2 | 3 4 5"
    assert BistellarMove.parse(str(m)) == m
    assert m.reverse().reverse() == m
    assert m.dim_pair == (1, 2)


CORPUS = {"rp2_6": rp2_6, "rp3_11": rp3_11, "s3": lambda: simplex_boundary(4)}


def _grown(make, k):
    """A complex from the corpus after k facet subdivisions, so that it has moves."""
    cx = make()
    for f in cx.sorted_facets[:k]:
        cx = apply_flip(cx, is_flippable(cx, f))
    return cx


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_every_move_preserves_invariants(name):
    cx = _grown(CORPUS[name], 3)
    h = homology(cx)
    chi = cx.euler_characteristic()
    moves = valid_moves(cx)
    assert moves
    for m in moves:
        out = apply_flip(cx, m)
        assert out.euler_characteristic() == chi
        assert homology(out) == h
        assert apply_flip(out, m.reverse()) == cx


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(CORPUS)), st.integers(0, 5), st.randoms(use_true_random=False))
def test_random_walk_round_trip(name, k, rnd):
    cx = _grown(CORPUS[name], k)
    start = cx
    trace = []
    for _ in range(8):
        ms = valid_moves(cx)
        if not ms:
            break
        m = rnd.choice(ms)
        cx = apply_flip(cx, m)
        trace.append(m)
    assert replay(start, trace) == cx
    for m in reversed(trace):
        cx = apply_flip(cx, m.reverse())
    assert cx == start


def test_reduce_simplex_boundary_immediate():
    r = reduce(simplex_boundary(4))
    assert r.certified and r.moves == 0


def test_reduce_vertex_link_of_rp4():
    lk = c1().result.link((1,))
    r = reduce(lk, seed=0)
    assert r.certified
    assert replay(lk, r.trace).facets == r.complex.facets


def test_reduce_is_deterministic():
    cx = _grown(lambda: simplex_boundary(4), 6)
    a = reduce(cx, seed=11, restarts=2)
    b = reduce(cx, seed=11, restarts=2)
    assert [str(m) for m in a.trace] == [str(m) for m in b.trace]


def test_reduce_rp2_never_certifies():
    r = reduce(rp2_6(), seed=0, budget=200)
    assert not r.certified
