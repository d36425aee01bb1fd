"""Deterministic generators for the projective-space triangulations.

Every staged pipeline asserts its intermediate counts as it goes; a failed
count raises :class:`StageError` naming the stage.

Vertex numbering
----------------
* First construction (32-vertex sphere): ``e1..e6`` are 1..6, the triangle
  barycentres ``e_ijk`` are 7..26 in lexicographic order of ``ijk`` (label
  ``"123"``), the facet barycentres ``(1 - e_m)/5`` are 27..32 (label ``"b1"``).
* Cross-polytope/hypercube construction: ``+e_i`` is ``2i-1`` and ``-e_i`` is
  ``2i``; the cube corners ``q_eps`` follow as 9..24 in lexicographic order of
  the sign vector with ``+`` before ``-``.
* Suspended-cube construction: cube corners 1..8 (same sign order), the
  suspension points ``N``, ``S`` are 9 and 10, and the twelve dual points
  ``d(i, s, t)`` (pyramid over the square ``x_i = s`` with apex ``t``) are
  11..22.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb, prod

from .complex import (
    ComplexError,
    Involution,
    SimplicialComplex,
    barycentric_subdivision,
    quotient,
    simplex,
    simplex_boundary,
)
from .flips import BistellarMove, apply_batch


class StageError(ComplexError):
    """A construction stage produced the wrong number of faces."""


def _expect(stage: str, what: str, got, want) -> None:
    if got != want:
        raise StageError(f"{stage}: expected {what} {want}, got {got}")


@dataclass
class Pipeline:
    """Named intermediate complexes plus per-stage facet counts."""

    stages: dict[str, SimplicialComplex] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    result: SimplicialComplex | None = None


def _signs(n: int):
    return list(product((1, -1), repeat=n))


def _sign_label(eps) -> str:
    return "".join("+" if s > 0 else "-" for s in eps)


# ---------------------------------------------------------------------------
# barycentric subdivision of a 5-simplex boundary, then flips


def _c1_ids():
    e = {i: i for i in range(1, 7)}
    tri = {t: 7 + n for n, t in enumerate(combinations(range(1, 7), 3))}
    bar = {m: 26 + m for m in range(1, 7)}
    labels = {e[i]: f"e{i}" for i in e}
    labels.update({v: "".join(map(str, t)) for t, v in tri.items()})
    labels.update({v: f"b{m}" for m, v in bar.items()})
    return e, tri, bar, labels


def c1_sigma() -> Involution:
    """Swap e_i with the opposite facet barycentre and e_ijk with its complement."""
    e, tri, bar, _ = _c1_ids()
    pairs = {e[i]: bar[i] for i in range(1, 7)}
    for t, v in tri.items():
        comp = tuple(x for x in range(1, 7) if x not in t)
        pairs[v] = tri[comp]
    return Involution(pairs)


def c1_axis_permutation(perm) -> dict[int, int]:
    """Vertex map induced by a permutation of the six axes (perm[i-1] = image of i)."""
    e, tri, bar, _ = _c1_ids()
    p = {i + 1: perm[i] for i in range(6)}
    out = {e[i]: e[p[i]] for i in e}
    out.update({bar[i]: bar[p[i]] for i in bar})
    out.update({v: tri[tuple(sorted(p[x] for x in t))] for t, v in tri.items()})
    return out


def c1_pipeline() -> Pipeline:
    e, tri, bar, labels = _c1_ids()
    pipe = Pipeline()

    x6 = SimplicialComplex(simplex_boundary(5).facets, labels)
    _expect("X6", "facets", len(x6.facets), 6)
    pipe.stages["x6"] = x6

    x12_facets = []
    for m in range(1, 7):
        others = [i for i in range(1, 7) if i != m]
        for tet in combinations(others, 4):
            x12_facets.append([e[i] for i in tet] + [bar[m]])
    x12 = SimplicialComplex(x12_facets, labels)
    _expect("X12", "vertices", x12.n_vertices, 12)
    _expect("X12", "facets", len(x12.facets), 30)
    pipe.stages["x12"] = x12

    def t3(*xs):
        return tri[tuple(sorted(xs))]

    x32_facets = []
    for m in range(1, 7):
        others = [i for i in range(1, 7) if i != m]
        for tet in combinations(others, 4):
            pieces = []
            for i, j in combinations(tet, 2):
                k, l = [x for x in tet if x not in (i, j)]
                pieces.append((e[i], e[j], t3(i, j, k), t3(i, j, l)))
            for i in tet:
                j, k, l = [x for x in tet if x != i]
                pieces.append((e[i], t3(i, j, k), t3(i, j, l), t3(i, k, l)))
            pieces.append(tuple(t3(*c) for c in combinations(tet, 3)))
            _expect("X32", "pieces per tetrahedron", len(pieces), 11)
            x32_facets.extend(p + (bar[m],) for p in pieces)
    x32 = SimplicialComplex(x32_facets, labels)
    _expect("X32", "vertices", x32.n_vertices, 32)
    _expect("X32", "facets", len(x32.facets), 330)
    pipe.stages["x32"] = x32

    round1 = []
    for i, j in combinations(range(1, 7), 2):
        for k in range(1, 7):
            if k in (i, j):
                continue
            rest = [l for l in range(1, 7) if l not in (i, j, k)]
            round1.append(BistellarMove(simplex((e[i], e[j], bar[k])), simplex(t3(i, j, l) for l in rest)))
    _expect("flip round 1", "moves", len(round1), 60)
    mid = apply_batch(x32, round1)
    pipe.stages["round1"] = mid

    round2 = []
    for i, j in combinations(range(1, 7), 2):
        rest = [l for l in range(1, 7) if l not in (i, j)]
        round2.append(BistellarMove((e[i], e[j]), simplex(t3(i, j, l) for l in rest)))
    _expect("flip round 2", "moves", len(round2), 15)
    s4 = apply_batch(mid, round2)
    _expect("S4_32", "facets", len(s4.facets), 300)
    pipe.stages["s4_32"] = s4

    sizes = sorted(len(o) for o in c1_axis_orbits(s4))
    _expect("S4_32", "axis-permutation orbit sizes", sizes, [30, 30, 120, 120])

    rp4 = quotient(s4, c1_sigma())
    _expect("RP4 (c1)", "vertices", rp4.n_vertices, 16)
    _expect("RP4 (c1)", "facets", len(rp4.facets), 150)
    pipe.stages["rp4"] = rp4
    pipe.counts = {name: len(cx.facets) for name, cx in pipe.stages.items()}
    pipe.result = rp4
    return pipe


def c1_axis_orbits(cx: SimplicialComplex) -> list[set]:
    """Facet orbits of the 32-vertex sphere under all 720 axis permutations."""
    maps = [c1_axis_permutation(p) for p in permutations(range(1, 7))]
    seen: set = set()
    orbits = []
    for f in cx.sorted_facets:
        if f in seen:
            continue
        orb = {simplex(g[v] for v in f) for g in maps}
        seen |= orb
        orbits.append(orb)
    return orbits


# ---------------------------------------------------------------------------
# cross-polytope inside hypercube


def _c2_ids(n: int):
    def ev(i, s):
        return 2 * i - 1 if s > 0 else 2 * i

    labels = {}
    for i in range(1, n + 1):
        labels[ev(i, 1)] = f"+e{i}"
        labels[ev(i, -1)] = f"-e{i}"
    q = {eps: 2 * n + 1 + k for k, eps in enumerate(_signs(n))}
    labels.update({v: "q" + _sign_label(eps) for eps, v in q.items()})
    return ev, q, labels


def _c2_ball(parity_first: int = -1, parity_rest: int = 1) -> Pipeline:
    """Stages 0-3 of the ball; diagonal parities are the product of signs."""
    ev, q, labels = _c2_ids(4)
    pipe = Pipeline()
    stages: dict[str, list] = {}
    stages["interior"] = [
        [ev(1, 1), ev(1, -1), ev(2, a), ev(3, b), ev(4, c)] for a, b, c in _signs(3)
    ]
    stages["cones"] = [[ev(i + 1, s) for i, s in enumerate(eps)] + [q[eps]] for eps in _signs(4)]
    tri_closures = []
    for missing in range(4):
        idx = [i for i in range(4) if i != missing]
        for signs in _signs(3):
            eps = [0] * 4
            for i, s in zip(idx, signs):
                eps[i] = s
            ends = []
            for s in (-1, 1):
                eps[missing] = s
                ends.append(q[tuple(eps)])
            tri_closures.append([ev(i + 1, s) for i, s in zip(idx, signs)] + ends)
    stages["triangle_closures"] = tri_closures
    edge_closures = []
    for i, j in combinations(range(4), 2):
        k, l = [x for x in range(4) if x not in (i, j)]
        parity = parity_first if 0 in (i, j) else parity_rest
        for si, sj in _signs(2):
            square = []
            for sk, sl in _signs(2):
                eps = [0] * 4
                eps[i], eps[j], eps[k], eps[l] = si, sj, sk, sl
                square.append(tuple(eps))
            diag = [q[x] for x in square if prod(x) == parity]
            off = [q[x] for x in square if prod(x) != parity]
            for p in off:
                edge_closures.append([ev(i + 1, si), ev(j + 1, sj)] + diag + [p])
    stages["edge_closures"] = edge_closures
    for name, want in (("interior", 8), ("cones", 16), ("triangle_closures", 32), ("edge_closures", 48)):
        _expect(f"c2 {name}", "facets", len(stages[name]), want)
        pipe.counts[name] = want
    acc: list = []
    for name, bname in (("interior", None), ("cones", "x1"), ("triangle_closures", "x2"), ("edge_closures", "x3")):
        acc += stages[name]
        ball = SimplicialComplex(acc, labels)
        pipe.stages[f"ball_{name}"] = ball
        if bname:
            pipe.stages[bname] = ball.boundary()
    return pipe


def c2_antipodal_map() -> Involution:
    """x -> -x on all 24 vertices of the ball."""
    ev, q, _ = _c2_ids(4)
    pairs = {ev(i, 1): ev(i, -1) for i in range(1, 5)}
    for eps, v in q.items():
        pairs[v] = q[tuple(-s for s in eps)]
    return Involution(pairs)


def c2_pipeline(parity_first: int = -1, parity_rest: int = 1) -> Pipeline:
    """Hyperoctahedron inside the 4-cube, closed off link by link.

    ``parity_first`` is the sign product of the diagonals used in squares
    around edges through ``+-e1``; ``parity_rest`` for all other squares.
    """
    from .manifold import is_antipodal

    ev, q, labels = _c2_ids(4)
    pipe = _c2_ball(parity_first, parity_rest)
    _expect("X(1)", "boundary f-vector", pipe.stages["x1"].f_vector(), (24, 88, 128, 64))
    _expect("X(2)", "boundary f-vector", pipe.stages["x2"].f_vector(), (24, 120, 192, 96))
    x3 = pipe.stages["x3"]
    _expect("X(3)", "boundary f-vector", x3.f_vector(), (24, 120, 192, 96))
    anti = is_antipodal(x3, c2_antipodal_map())
    if not anti.ok:
        raise StageError(f"X(3) boundary is not antipodal: {anti.reason}, pair {anti.violating_pair}")

    facets = list(pipe.stages["ball_edge_closures"].facets)
    vertex_cones = []
    for i in range(2, 5):
        lk = x3.link((ev(i, 1),))
        _expect(f"link of +e{i}", "triangles", len(lk.facets), 12)
        vertex_cones += [f + (ev(i, 1), ev(i, -1)) for f in lk.facets]
    _expect("c2 vertex_cones", "facets", len(vertex_cones), 36)
    pipe.counts["vertex_cones"] = 36

    cube_fill = []
    for s in (1, -1):
        corners = [eps for eps in _signs(4) if eps[0] == s]
        inner = [q[eps] for eps in corners if prod(eps) == parity_first]
        cube_fill.append([ev(1, s)] + inner)
        for eps in corners:
            if prod(eps) == parity_first:
                continue
            nbrs = [tuple(-x if k == t else x for k, x in enumerate(eps)) for t in range(1, 4)]
            cube_fill.append([ev(1, s), q[eps]] + [q[x] for x in nbrs])
    _expect("c2 cube_fill", "facets", len(cube_fill), 10)
    pipe.counts["cube_fill"] = 10

    ball = SimplicialComplex(facets + vertex_cones + cube_fill, labels)
    _expect("c2 ball", "facets", len(ball.facets), 150)
    pipe.stages["ball"] = ball

    # identify q with -q; the +-e_i stay apart
    reps = sorted({min(v, q[tuple(-s for s in eps)]) for eps, v in q.items()})
    new = {r: 9 + k for k, r in enumerate(reps)}
    anti_map = c2_antipodal_map()
    mapping = {v: v for v in range(1, 9)}
    mapping.update({v: new[min(v, anti_map(v))] for v in q.values()})
    qlabels = {i: labels[i] for i in range(1, 9)}
    qlabels.update({new[r]: f"{labels[r]}~{labels[anti_map(r)]}" for r in reps})
    rp4 = ball.relabel(mapping, qlabels)
    _expect("RP4 (c2)", "facets", len(rp4.facets), 150)
    _expect("RP4 (c2)", "vertices", rp4.n_vertices, 16)
    pipe.stages["rp4"] = rp4
    pipe.result = rp4
    return pipe


def c2_forcing_check() -> dict[str, bool]:
    """Antipodality of the X(3) boundary for each uniform/mixed diagonal choice."""
    from .manifold import is_antipodal

    out = {}
    for first, rest in ((-1, 1), (1, -1), (-1, -1), (1, 1)):
        x3 = _c2_ball(first, rest).stages["x3"]
        key = f"{'o' if first < 0 else 'e'}{'o' if rest < 0 else 'e'}"
        out[key] = is_antipodal(x3, c2_antipodal_map()).ok
    return out


# ---------------------------------------------------------------------------
# suspended cube with a dual prismed octahedron


def _c3_ids():
    cube = {v: k + 1 for k, v in enumerate(_signs(3))}
    apex = {1: 9, -1: 10}
    dual = {}
    n = 11
    for i in range(3):
        for s in (1, -1):
            for t in (1, -1):
                dual[(i, s, t)] = n
                n += 1
    labels = {v: _sign_label(c) for c, v in cube.items()}
    labels.update({9: "N", 10: "S"})
    for (i, s, t), v in dual.items():
        coords = ["0", "0", "0"]
        coords[i] = "+3" if s > 0 else "-3"
        labels[v] = "d(" + ",".join(coords) + (",+3)" if t > 0 else ",-3)")
    return cube, apex, dual, labels


def _cube_edges():
    out = []
    for v in _signs(3):
        for i in range(3):
            if v[i] > 0:
                w = tuple(-x if k == i else x for k, x in enumerate(v))
                out.append((v, w, i))
    return out


def c3_pipeline() -> Pipeline:
    cube, apex, dual, labels = _c3_ids()
    pipe = Pipeline()
    st: dict[str, set] = {k: set() for k in "abcdefghi"}
    edges = _cube_edges()
    _expect("cube", "edges", len(edges), 12)

    def fixed(v, w):
        """Coordinates (index, sign) shared by both ends of a cube edge."""
        return [(i, v[i]) for i in range(3) if v[i] == w[i]]

    for v, w, _ in edges:
        (i, s), (j, t) = fixed(v, w)
        for a in (1, -1):
            st["a"].add(simplex((cube[v], cube[w], apex[a], dual[(i, s, a)], dual[(j, t, a)])))
    for v in _signs(3):
        for a in (1, -1):
            st["b"].add(simplex((cube[v], apex[a]) + tuple(dual[(i, v[i], a)] for i in range(3))))
    for v, w, _ in edges:
        for a in (1, -1):
            for i, s in fixed(v, w):
                square = [c for c in _signs(3) if c[i] == s and c not in (v, w)]
                (u,) = [c for c in square if prod(c) == 1]
                st["c"].add(simplex((cube[v], cube[w], apex[a], dual[(i, s, a)], cube[u])))
    for v in _signs(3):
        if prod(v) == -1:
            nbrs = [tuple(-x if k == i else x for k, x in enumerate(v)) for i in range(3)]
            for a in (1, -1):
                st["d"].add(simplex([cube[v], apex[a]] + [cube[x] for x in nbrs]))
    for i in range(3):
        for s in (1, -1):
            square = [c for c in _signs(3) if c[i] == s]
            plus = [cube[c] for c in square if prod(c) == 1]
            for c in square:
                if prod(c) == -1:
                    st["e"].add(simplex([cube[c]] + plus + [dual[(i, s, 1)], dual[(i, s, -1)]]))
    even = [cube[c] for c in _signs(3) if prod(c) == 1]
    for a in (1, -1):
        st["f"].add(simplex(even + [apex[a]]))

    for k, want in zip("abcdef", (24, 16, 24, 8, 12, 2)):
        _expect(f"c3 stage {k}", "facets", len(st[k]), want)

    ball = SimplicialComplex(set().union(*(st[k] for k in "abcdef")), labels)
    pipe.stages["ball"] = ball
    bd = ball.boundary()
    _expect("c3 ball", "boundary f-vector", bd.f_vector(), (22, 102, 160, 80))
    pipe.stages["boundary"] = bd

    # identify dual points d ~ -d; cube corners and apices stay
    mapping = {v: v for v in range(1, 11)}
    qlabels = {v: labels[v] for v in range(1, 11)}
    n = 11
    for (i, s, t), v in sorted(dual.items(), key=lambda kv: kv[1]):
        partner = dual[(i, -s, -t)]
        if v < partner:
            mapping[v] = mapping[partner] = n
            qlabels[n] = f"{labels[v]}~{labels[partner]}"
            n += 1

    def img(face):
        return tuple(mapping[x] for x in face)

    for v, w, _ in edges:
        for a, b in ((v, w), (tuple(-x for x in v), tuple(-x for x in w))):
            opp = [tuple(-x for x in a), tuple(-x for x in b)]
            (u,) = [c for c in opp if prod(c) == -1]
            star = bd.star_facets((cube[a], cube[b]))
            _expect(f"boundary star of edge {labels[cube[a]]}{labels[cube[b]]}", "tetrahedra", len(star), 4)
            for tet in star:
                st["g"].add(simplex(img(tet) + (cube[u],)))
    _expect("c3 stage g", "facets", len(st["g"]), 48)

    partial = SimplicialComplex({simplex(img(f)) for f in ball.facets} | st["g"])
    for c in _signs(3):
        if prod(c) != 1:
            continue
        v, w = cube[c], cube[tuple(-x for x in c)]
        hole = partial.link((v, w)).boundary()
        tris = _triangles_of_cycles(hole)
        _expect(f"link boundary of {labels[v]}{labels[w]}", "triangles", len(tris), 2)
        st["h"] |= {simplex((v, w) + t) for t in tris}
    _expect("c3 stage h", "facets", len(st["h"]), 8)

    for signs in _signs(3):
        face = [mapping[dual[(i, s, 1)]] for i, s in enumerate(signs)]
        st["i"].add(simplex(face + [apex[1], apex[-1]]))
    _expect("c3 stage i", "facets", len(st["i"]), 8)

    pipe.counts = {k: len(st[k]) for k in "abcdefghi"}
    facets = {simplex(img(f)) for f in ball.facets} | st["g"] | st["h"] | st["i"]
    rp4 = SimplicialComplex(facets, qlabels)
    _expect("RP4 (c3)", "facets", len(rp4.facets), 150)
    _expect("RP4 (c3)", "vertices", rp4.n_vertices, 16)
    pipe.stages["rp4"] = rp4
    pipe.result = rp4
    return pipe


def _triangles_of_cycles(cx: SimplicialComplex) -> list[tuple[int, ...]]:
    """Vertex triples of the 3-cycles of a 1-dimensional complex."""
    adj = cx.graph
    return sorted(t for t in combinations(cx.vertices, 3)
                  if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]])


# ---------------------------------------------------------------------------
# small projective spaces


def rp2_6() -> SimplicialComplex:
    """Six-vertex RP^2: a square split by [e1,-e1], four corner triangles,
    then the two identified corner points closed off."""
    e1, m1, e2, m2, a, b = 1, 2, 3, 4, 5, 6
    labels = {1: "+e1", 2: "-e1", 3: "+e2", 4: "-e2", 5: "q++~q--", 6: "q+-~q-+"}
    facets = [
        (e1, m1, e2), (e1, m1, m2),
        (e1, e2, a), (m1, m2, a), (e1, m2, b), (m1, e2, b),
        (e2, m2, a), (e2, m2, b),
        (e1, a, b), (m1, a, b),
    ]
    return SimplicialComplex(facets, labels)


def rp3_11() -> SimplicialComplex:
    """Eleven-vertex RP^3 from the octahedron, its cone point and the 3-cube."""
    origin = 1

    def ev(i, s):
        return 2 * i if s > 0 else 2 * i + 1

    q = {eps: 8 + k for k, eps in enumerate(_signs(3))}
    labels = {origin: "0"}
    for i in range(1, 4):
        labels[ev(i, 1)] = f"+e{i}"
        labels[ev(i, -1)] = f"-e{i}"
    labels.update({v: "q" + _sign_label(e) for e, v in q.items()})
    facets = []
    for eps in _signs(3):
        octa = [ev(i + 1, s) for i, s in enumerate(eps)]
        facets.append(octa + [origin])
        facets.append(octa + [q[eps]])
    for i, j in combinations(range(3), 2):
        (k,) = [x for x in range(3) if x not in (i, j)]
        for si, sj in _signs(2):
            ends = []
            for sk in (-1, 1):
                eps = [0, 0, 0]
                eps[i], eps[j], eps[k] = si, sj, sk
                ends.append(q[tuple(eps)])
            facets.append([ev(i + 1, si), ev(j + 1, sj)] + ends)
    ball = SimplicialComplex(facets, labels)
    _expect("rp3 ball", "facets", len(ball.facets), 28)
    bd = ball.boundary()

    def neg(eps):
        return tuple(-s for s in eps)

    new_ids, qlabels = {}, {v: labels[v] for v in range(1, 8)}
    n = 8
    for eps, v in q.items():
        if eps[0] > 0:
            new_ids[v] = new_ids[q[neg(eps)]] = n
            qlabels[n] = f"{labels[v]}~{labels[q[neg(eps)]]}"
            n += 1
    mapping = {v: v for v in range(1, 8)}
    mapping.update(new_ids)
    out = {simplex(mapping[x] for x in f) for f in ball.facets}
    for i in range(1, 4):
        square = bd.link((ev(i, 1),))
        _expect(f"rp3 boundary link of +e{i}", "edges", len(square.facets), 4)
        for edge in square.facets:
            out.add(simplex((ev(i, 1), ev(i, -1)) + tuple(mapping[x] for x in edge)))
    cx = SimplicialComplex(out, qlabels)
    _expect("rp3_11", "facets", len(cx.facets), 40)
    return cx


def kuehnel_involution(n: int) -> tuple[SimplicialComplex, Involution]:
    """Barycentric subdivision of the boundary of the (n+1)-simplex and the
    face-complement map on it."""
    if n < 2:
        raise ComplexError("n >= 2 required")
    cx = barycentric_subdivision(simplex_boundary(n + 1))
    full = set(range(1, n + 3))
    faces = sorted({s for k in range(n + 1) for s in simplex_boundary(n + 1).faces(k)},
                   key=lambda s: (len(s), s))
    ids = {s: i for i, s in enumerate(faces, 1)}
    pairs = {ids[s]: ids[tuple(sorted(full - set(s)))] for s in faces}
    return cx, Involution(pairs)


def kuehnel_rp(n: int) -> SimplicialComplex:
    cx, inv = kuehnel_involution(n)
    out = quotient(cx, inv)
    _expect(f"kuehnel RP^{n}", "vertices", out.n_vertices, 2 ** (n + 1) - 1)
    return out


def rp4_from_k6(k6=None) -> SimplicialComplex:
    """Facets read off the labelled K6: {v} + e(v,v') and {v,v'} + e(v,v'') - e(v,v')."""
    from .designs import build_k6

    k6 = k6 or build_k6()
    names = list(k6.vertices) + list(k6.bisection_names)
    ids = {name: k for k, name in enumerate(names, 1)}
    small, large = set(), set()
    for u, v in permutations(k6.vertices, 2):
        small.add(simplex([ids[u]] + [ids[b] for b in k6.e(u, v)]))
        for w in k6.vertices:
            if w in (u, v):
                continue
            rest = k6.e(u, w) - k6.e(u, v)
            large.add(simplex([ids[u], ids[v]] + [ids[b] for b in rest]))
    _expect("K6 facets", "small orbit", len(small), 30)
    _expect("K6 facets", "large orbit", len(large), 120)
    return SimplicialComplex(small | large, {k: name for name, k in ids.items()})


def arnoux_marin_bound(n: int) -> int:
    """Lower bound on the vertex count of a triangulated RP^n, valid for n >= 3."""
    if n < 3:
        raise ValueError("bound holds for n >= 3 only")
    return comb(n + 2, 2) + 1


GENERATORS = {
    "x6": lambda: c1_pipeline().stages["x6"],
    "x12": lambda: c1_pipeline().stages["x12"],
    "x32": lambda: c1_pipeline().stages["x32"],
    "s4-32": lambda: c1_pipeline().stages["s4_32"],
    "rp4-c1": lambda: c1_pipeline().result,
    "rp4-c2": lambda: c2_pipeline().result,
    "rp4-c3": lambda: c3_pipeline().result,
    "rp4-k6": rp4_from_k6,
    "rp2-6": rp2_6,
    "rp3-11": rp3_11,
}
