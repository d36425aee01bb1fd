"""Abstract simplicial complexes stored by their facets.

A simplex is a strictly increasing tuple of positive integer vertex ids.  A
complex is pure: every facet has the same size.  Geometry never enters; any
coordinates a construction wants to remember live in the ``labels`` table.
"""

from __future__ import annotations

import math
import re
from collections import deque
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping

Simplex = tuple  # strictly increasing tuple of ints

INFINITY = math.inf


class ComplexError(ValueError):
    """Malformed complex or invalid operation on one."""


class NotInvariant(ComplexError):
    pass


class NotLinkSeparating(ComplexError):
    pass


class HasFixedPoint(ComplexError):
    pass


def simplex(vertices: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(vertices))
    if len(set(s)) != len(s):
        raise ComplexError(f"repeated vertex in {s}")
    return s


class SimplicialComplex:
    """Pure simplicial complex given by its facet set.

    ``labels`` maps vertex ids to display strings; it never affects equality.
    The empty-face complex ``{()}`` (dimension -1) is allowed so that the link
    of a facet is representable.
    """

    def __init__(self, facets: Iterable[Iterable[int]], labels: Mapping[int, str] | None = None):
        fs = frozenset(simplex(f) for f in facets)
        if not fs:
            raise ComplexError("complex needs at least one facet")
        sizes = {len(f) for f in fs}
        if len(sizes) != 1:
            raise ComplexError(f"complex is not pure: facet sizes {sorted(sizes)}")
        for f in fs:
            if f and f[0] < 1:
                raise ComplexError(f"vertex ids must be positive, got {f}")
        self.facets = fs
        verts = {v for f in fs for v in f}
        self.labels = {v: s for v, s in (labels or {}).items() if v in verts}

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, n={self.n_vertices}, facets={len(self.facets)})"

    @cached_property
    def dim(self) -> int:
        return len(next(iter(self.facets))) - 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(self.facets)

    @cached_property
    def _vertex_star(self) -> dict[int, frozenset]:
        star: dict[int, set] = {v: set() for v in self.vertices}
        for f in self.facets:
            for v in f:
                star[v].add(f)
        return {v: frozenset(s) for v, s in star.items()}

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def star_facets(self, face: Iterable[int]) -> frozenset:
        """Facets containing ``face``."""
        face = tuple(face)
        if not face:
            return self.facets
        try:
            sets = sorted((self._vertex_star[v] for v in face), key=len)
        except KeyError:
            return frozenset()
        return frozenset(sets[0].intersection(*sets[1:]))

    def is_face(self, face: Iterable[int]) -> bool:
        return bool(self.star_facets(face))

    def faces(self, k: int) -> set[tuple[int, ...]]:
        if not -1 <= k <= self.dim:
            raise ComplexError(f"face dimension {k} out of range 0..{self.dim}")
        return {s for f in self.facets for s in combinations(f, k + 1)}

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def link(self, face: Iterable[int]) -> SimplicialComplex:
        face = simplex(face)
        star = self.star_facets(face)
        if not star:
            raise ComplexError(f"{face} is not a face")
        fs = set(face)
        return SimplicialComplex(
            (tuple(v for v in f if v not in fs) for f in star), self.labels
        )

    def join(self, other: SimplicialComplex) -> SimplicialComplex:
        if set(self.vertices) & set(other.vertices):
            raise ComplexError("join needs disjoint vertex sets")
        labels = {**self.labels, **other.labels}
        return SimplicialComplex((a + b for a in self.facets for b in other.facets), labels)

    def boundary(self) -> SimplicialComplex:
        """Ridges lying in exactly one facet (empty boundary raises)."""
        count: dict[tuple, int] = {}
        for f in self.facets:
            for r in combinations(f, len(f) - 1):
                count[r] = count.get(r, 0) + 1
        ridges = [r for r, c in count.items() if c == 1]
        if not ridges:
            raise ComplexError("complex has empty boundary")
        return SimplicialComplex(ridges, self.labels)

    @cached_property
    def graph(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for f in self.facets:
            for u, v in combinations(f, 2):
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def skeleton_distance(self, u: int, v: int) -> float:
        """Shortest path length in the 1-skeleton; ``INFINITY`` if disconnected."""
        adj = self.graph
        if u not in adj or v not in adj:
            raise ComplexError(f"unknown vertex {u if u not in adj else v}")
        if u == v:
            return 0
        seen = {u}
        queue = deque([(u, 0)])
        while queue:
            x, d = queue.popleft()
            for y in adj[x]:
                if y == v:
                    return d + 1
                if y not in seen:
                    seen.add(y)
                    queue.append((y, d + 1))
        return INFINITY

    def relabel(self, mapping: Mapping[int, int], labels: Mapping[int, str] | None = None) -> SimplicialComplex:
        """Apply a vertex map (not necessarily injective) facet by facet.

        Raises if some facet collapses.
        """
        out = []
        for f in self.facets:
            img = tuple(mapping[v] for v in f)
            if len(set(img)) != len(img):
                raise ComplexError(f"facet {f} collapses under the vertex map")
            out.append(img)
        if labels is None:
            labels = {mapping[v]: s for v, s in self.labels.items()}
        return SimplicialComplex(out, labels)

    def normalized(self) -> SimplicialComplex:
        """Renumber vertices to 1..n preserving order."""
        m = {v: i for i, v in enumerate(self.vertices, 1)}
        return self.relabel(m)

    def vertex_by_label(self, text: str) -> int:
        for v, s in self.labels.items():
            if s == text:
                return v
        raise KeyError(text)


class Involution:
    """Vertex permutation of order at most two."""

    def __init__(self, mapping: Mapping[int, int]):
        m = dict(mapping)
        for v, w in list(m.items()):
            m.setdefault(w, v)
        for v, w in m.items():
            if m.get(w) != v:
                raise ComplexError(f"not an involution: {v}->{w}->{m.get(w)}")
        self.map = m

    def __call__(self, v: int) -> int:
        return self.map.get(v, v)

    def __repr__(self):
        return f"Involution({self.cycles()})"

    @classmethod
    def from_cycles(cls, text: str) -> Involution:
        pairs = {}
        for body in re.findall(r"\(([^()]*)\)", text):
            items = [int(x) for x in re.split(r"[\s,]+", body.strip()) if x]
            if len(items) == 1:
                continue
            if len(items) != 2:
                raise ComplexError(f"involution cycles have length <= 2, got ({body})")
            pairs[items[0]] = items[1]
        if not pairs and text.strip() not in ("", "()"):
            raise ComplexError(f"cannot parse cycle notation {text!r}")
        return cls(pairs)

    def cycles(self) -> str:
        seen = set()
        out = []
        for v in sorted(self.map):
            w = self.map[v]
            if v in seen or v == w:
                continue
            seen.update((v, w))
            out.append(f"({v} {w})")
        return "".join(out) or "()"

    def fixed_points(self, vertices: Iterable[int]) -> list[int]:
        return [v for v in vertices if self(v) == v]


def quotient(cx: SimplicialComplex, inv: Involution) -> SimplicialComplex:
    """Identify each vertex with its image under a link-separating involution.

    Vertices of the result are numbered 1..n in order of the smaller orbit
    member; labels read ``a~b`` with the two cover labels.
    """
    if fp := inv.fixed_points(cx.vertices):
        raise HasFixedPoint(f"involution fixes {fp}")
    if any(inv(v) not in cx.graph for v in cx.vertices):
        raise NotInvariant("involution leaves the vertex set")
    image = {tuple(sorted(inv(v) for v in f)) for f in cx.facets}
    if image != cx.facets:
        missing = sorted(image - cx.facets)[0]
        raise NotInvariant(f"image facet {missing} is not a facet")
    for v in cx.vertices:
        if cx.skeleton_distance(v, inv(v)) < 3:
            raise NotLinkSeparating(f"d({v}, {inv(v)}) = {cx.skeleton_distance(v, inv(v))} < 3")
    reps = sorted({min(v, inv(v)) for v in cx.vertices})
    new_id = {r: i for i, r in enumerate(reps, 1)}
    m = {v: new_id[min(v, inv(v))] for v in cx.vertices}
    labels = {new_id[r]: f"{cx.label(r)}~{cx.label(inv(r))}" for r in reps}
    return cx.relabel(m, labels)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on vertices 1..n+1."""
    if n < 1:
        raise ComplexError("n >= 1 required")
    return SimplicialComplex(combinations(range(1, n + 2), n))


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope; +e_i is 2i-1, -e_i is 2i."""
    if n < 1:
        raise ComplexError("n >= 1 required")
    facets = []
    for signs in range(2 ** n):
        facets.append([2 * i + 1 + ((signs >> i) & 1) for i in range(n)])
    labels = {}
    for i in range(n):
        labels[2 * i + 1] = f"+e{i + 1}"
        labels[2 * i + 2] = f"-e{i + 1}"
    return SimplicialComplex(facets, labels)


def barycentric_subdivision(cx: SimplicialComplex) -> SimplicialComplex:
    """One vertex per nonempty face, one facet per maximal flag."""
    faces = sorted({s for k in range(cx.dim + 1) for s in cx.faces(k)}, key=lambda s: (len(s), s))
    ids = {s: i for i, s in enumerate(faces, 1)}
    facets = []
    for f in cx.facets:
        for order in permutations(f):
            facets.append([ids[tuple(sorted(order[: j + 1]))] for j in range(len(order))])
    labels = {i: "".join(cx.label(v) for v in s) for s, i in ids.items()}
    return SimplicialComplex(facets, labels)
