"""Automorphisms, isomorphisms and canonical forms of pure complexes.

Everything runs on individualization/refinement: vertex colours are refined
against the vertex-facet incidence structure until stable, then the search
branches over the first smallest non-trivial colour class.  Complexes here
have a few dozen vertices, so no automorphism pruning beyond the orbit
bookkeeping of the stabilizer chain is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complex import SimplicialComplex


def _rank(sigs: Sequence) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


class _Incidence:
    """Vertex-facet incidence with vertices renumbered 0..n-1."""

    def __init__(self, cx: SimplicialComplex, offset: int = 0):
        self.verts = list(cx.vertices)
        pos = {v: i + offset for i, v in enumerate(self.verts)}
        self.facets = [tuple(pos[v] for v in f) for f in cx.sorted_facets]


def _union(*parts: _Incidence):
    facets = [f for p in parts for f in p.facets]
    n = sum(len(p.verts) for p in parts)
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, f in enumerate(facets):
        for v in f:
            inc[v].append(i)
    return n, facets, inc


def _refine(colors: list[int], facets, inc) -> list[int]:
    k = len(set(colors))
    while True:
        fcol = _rank([tuple(sorted(colors[v] for v in f)) for f in facets])
        new = _rank([(colors[v], tuple(sorted(fcol[i] for i in inc[v]))) for v in range(len(colors))])
        k2 = len(set(new))
        if k2 == k:
            return new
        colors, k = new, k2


def _individualize(colors: list[int], chosen: Sequence[int]) -> list[int]:
    chosen = set(chosen)
    return [2 * c + (0 if v in chosen else 1) for v, c in enumerate(colors)]


def _target_cell(colors: list[int], members) -> int | None:
    """Colour of the first smallest class with more than one member."""
    sizes: dict[int, int] = {}
    for v in members:
        sizes[colors[v]] = sizes.get(colors[v], 0) + 1
    cands = [(s, c) for c, s in sizes.items() if s > 1]
    return min(cands)[1] if cands else None


def _initial_colors(n: int) -> list[int]:
    return [0] * n


def _find_isomorphism(a: SimplicialComplex, b: SimplicialComplex, fixed: Sequence[tuple[int, int]] = ()):
    """Vertex bijection a -> b carrying facets onto facets, extending ``fixed``."""
    if a.dim != b.dim or a.n_vertices != b.n_vertices or len(a.facets) != len(b.facets):
        return None
    ia, ib = _Incidence(a), _Incidence(b, offset=a.n_vertices)
    n, facets, inc = _union(ia, ib)
    na = a.n_vertices
    apos = {v: i for i, v in enumerate(ia.verts)}
    bpos = {v: i + na for i, v in enumerate(ib.verts)}
    colors = _initial_colors(n)
    for x, y in fixed:
        colors = _individualize(colors, (apos[x], bpos[y]))
    bfacets = b.facets

    def balanced(cols):
        cnt: dict[int, int] = {}
        for v in range(na):
            cnt[cols[v]] = cnt.get(cols[v], 0) + 1
        for v in range(na, n):
            cnt[cols[v]] = cnt.get(cols[v], 0) - 1
        return not any(cnt.values())

    def search(cols):
        cols = _refine(cols, facets, inc)
        if not balanced(cols):
            return None
        target = _target_cell(cols, range(na))
        if target is None:
            inv = {cols[v]: v for v in range(na, n)}
            mapping = {ia.verts[v]: ib.verts[inv[cols[v]] - na] for v in range(na)}
            if all(tuple(sorted(mapping[v] for v in f)) in bfacets for f in a.facets):
                return mapping
            return None
        x = next(v for v in range(na) if cols[v] == target)
        for y in range(na, n):
            if cols[y] == target:
                found = search(_individualize(cols, (x, y)))
                if found is not None:
                    return found
        return None

    return search(colors)


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> dict[int, int] | None:
    return _find_isomorphism(a, b)


@dataclass
class PermGroup:
    generators: list[dict[int, int]]
    order: int
    vertex_orbits: list[list[int]]
    facet_orbits: list[list[tuple[int, ...]]]
    base: list[int]

    @property
    def vertex_orbit_sizes(self) -> list[int]:
        return sorted(len(o) for o in self.vertex_orbits)

    @property
    def facet_orbit_sizes(self) -> list[int]:
        return sorted(len(o) for o in self.facet_orbits)


def _orbits(points, gens, act) -> list[list]:
    parent = {p: p for p in points}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for g in gens:
        for p in points:
            q = act(g, p)
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[max(rp, rq)] = min(rp, rq)
    groups: dict = {}
    for p in points:
        groups.setdefault(find(p), []).append(p)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: (-len(g), g))


def _orbit_of(point, gens) -> set:
    orbit = {point}
    frontier = [point]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = g[p]
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    return orbit


def act_on_facet(g: dict[int, int], f: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(g[v] for v in f))


def automorphism_group(cx: SimplicialComplex) -> PermGroup:
    """Full automorphism group via a stabilizer chain found by search.

    The order is the product of the basic orbit lengths.
    """
    inc = _Incidence(cx)
    n, facets, incl = _union(inc)
    verts = inc.verts
    base: list[int] = []
    gens: list[dict[int, int]] = []
    order = 1
    colors = _refine(_initial_colors(n), facets, incl)
    while True:
        target = _target_cell(colors, range(n))
        if target is None:
            break
        bi = next(v for v in range(n) if colors[v] == target)
        b = verts[bi]
        level_gens: list[dict[int, int]] = []
        orbit = {b}
        for ci in range(n):
            c = verts[ci]
            if colors[ci] != target or c in orbit:
                continue
            g = _find_isomorphism(cx, cx, [(x, x) for x in base] + [(b, c)])
            if g is not None:
                level_gens.append(g)
                orbit = _orbit_of(b, level_gens)
        order *= len(orbit)
        gens.extend(level_gens)
        base.append(b)
        colors = _refine(_individualize(colors, (bi,)), facets, incl)
    vorb = _orbits(list(cx.vertices), gens, lambda g, v: g[v])
    forb = _orbits(cx.sorted_facets, gens, act_on_facet)
    return PermGroup(gens, order, vorb, forb, base)


def enumerate_group(gens: Sequence[dict[int, int]], points: Sequence[int], limit: int = 10000) -> set[tuple[int, ...]]:
    """All elements of <gens> as image tuples over ``points`` (raises past ``limit``)."""
    ident = tuple(points)
    elems = {ident}
    frontier = [ident]
    gl = [tuple(g[p] for p in points) for g in gens]
    idx = {p: i for i, p in enumerate(points)}
    while frontier:
        e = frontier.pop()
        for g in gl:
            h = tuple(g[idx[x]] for x in e)
            if h not in elems:
                elems.add(h)
                if len(elems) > limit:
                    raise OverflowError("group larger than enumeration limit")
                frontier.append(h)
    return elems


def is_automorphism(cx: SimplicialComplex, g: dict[int, int]) -> bool:
    return {act_on_facet(g, f) for f in cx.facets} == cx.facets


def canonical_form(cx: SimplicialComplex) -> tuple[tuple[tuple[int, ...], ...], dict[int, int]]:
    """Lexicographically least relabelled facet list over all search leaves.

    Returns the facet list (vertices 1..n) and one relabelling achieving it.
    """
    inc = _Incidence(cx)
    n, facets, incl = _union(inc)
    best: list = [None, None]

    def search(cols):
        cols = _refine(cols, facets, incl)
        target = _target_cell(cols, range(n))
        if target is None:
            form = tuple(sorted(tuple(sorted(cols[v] + 1 for v in f)) for f in facets))
            if best[0] is None or form < best[0]:
                best[0] = form
                best[1] = {inc.verts[v]: cols[v] + 1 for v in range(n)}
            return
        for x in range(n):
            if cols[x] == target:
                search(_individualize(cols, (x,)))

    search(_initial_colors(n))
    return best[0], best[1]


def format_cycles(g: dict[int, int]) -> str:
    seen = set()
    out = []
    for v in sorted(g):
        if v in seen or g[v] == v:
            continue
        cyc = [v]
        seen.add(v)
        w = g[v]
        while w != v:
            cyc.append(w)
            seen.add(w)
            w = g[w]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"
