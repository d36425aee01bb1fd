"""The labelled K6, its two 16-point biplanes, and the 22-point Witt design.

Points are one-character strings: vertices ``A``..``F``, bisections
``0``..``9`` and one-factorizations ``U``..``Z``.  Bisections are numbered in
lexicographic order of the triple containing the first vertex, and
factorizations in lexicographic order of their sorted matching lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SimplicialComplex

Edge = frozenset  # two vertices
Matching = frozenset  # three disjoint edges


def _edge(u, v) -> Edge:
    return frozenset((u, v))


def _key(m: Matching):
    return tuple(sorted(tuple(sorted(e)) for e in m))


def perfect_matchings(vertices: Sequence[str]) -> list[Matching]:
    vs = sorted(vertices)
    if not vs:
        return [frozenset()]
    first, rest = vs[0], vs[1:]
    out = []
    for partner in rest:
        remaining = [v for v in rest if v != partner]
        for m in perfect_matchings(remaining):
            out.append(frozenset({_edge(first, partner)} | m))
    return sorted(out, key=_key)


def one_factorizations(vertices: Sequence[str]) -> list[frozenset]:
    ms = perfect_matchings(vertices)
    n_edges = len(vertices) * (len(vertices) - 1) // 2
    per = len(vertices) // 2
    out = []
    for combo in combinations(ms, n_edges // per):
        edges = set().union(*combo)
        if len(edges) == n_edges:
            out.append(frozenset(combo))
    return sorted(out, key=lambda f: sorted(_key(m) for m in f))


@dataclass
class K6Structure:
    vertices: tuple[str, ...]
    bisections: dict[str, tuple[frozenset, frozenset]]
    edge_labels: dict[Edge, frozenset]
    matchings: list[Matching]
    matching_labels: dict[Matching, frozenset]
    factorizations: dict[str, frozenset]
    dual_edges: dict[Edge, Matching]

    @property
    def bisection_names(self) -> tuple[str, ...]:
        return tuple(self.bisections)

    @property
    def factorization_names(self) -> tuple[str, ...]:
        return tuple(self.factorizations)

    def e(self, u: str, v: str) -> frozenset:
        return self.edge_labels[_edge(u, v)]

    def m(self, f: str, g: str) -> Matching:
        return self.dual_edges[_edge(f, g)]

    def factorizations_containing(self, matching: Matching) -> tuple[str, str]:
        fs = tuple(sorted(f for f, ms in self.factorizations.items() if matching in ms))
        assert len(fs) == 2
        return fs


def build_k6(vertices: str = "ABCDEF", bisection_names: str = "0123456789",
             factorization_names: str = "UVWXYZ") -> K6Structure:
    vs = tuple(vertices)
    first = vs[0]
    bis = {}
    triples = [t for t in combinations(vs, 3) if first in t]
    for name, t in zip(bisection_names, triples):
        side = frozenset(t)
        bis[name] = (side, frozenset(vs) - side)
    edge_labels = {}
    for u, v in combinations(vs, 2):
        edge_labels[_edge(u, v)] = frozenset(
            b for b, (s, t) in bis.items() if {u, v} <= s or {u, v} <= t
        )
    matchings = perfect_matchings(vs)
    all_b = frozenset(bis)
    mlabels = {m: all_b - frozenset().union(*(edge_labels[e] for e in m)) for m in matchings}
    facts = dict(zip(factorization_names, one_factorizations(vs)))
    dual = {}
    for f, g in combinations(facts, 2):
        common = facts[f] & facts[g]
        assert len(common) == 1
        dual[_edge(f, g)] = next(iter(common))
    return K6Structure(vs, bis, edge_labels, matchings, mlabels, facts, dual)


@dataclass
class Design:
    points: tuple[str, ...]
    blocks: list[tuple[str, ...]]

    def __post_init__(self):
        self.blocks = [tuple(sorted(b)) for b in self.blocks]
        self.points = tuple(sorted(self.points))

    def intersection_sizes(self) -> set[int]:
        return {len(set(a) & set(b)) for a, b in combinations(self.blocks, 2)}


def verify_design(design: Design, t: int, v: int, k: int, lam: int):
    """Exhaustive t-subset count.  Returns (ok, counterexample or None)."""
    if len(design.points) != v:
        return False, ("points", len(design.points))
    for b in design.blocks:
        if len(b) != k:
            return False, ("block size", b)
        if not set(b) <= set(design.points):
            return False, ("stray point", b)
    blocksets = [frozenset(b) for b in design.blocks]
    for sub in combinations(design.points, t):
        s = set(sub)
        count = sum(1 for b in blocksets if s <= b)
        if count != lam:
            return False, (sub, count)
    return True, None


def design_E(k6: K6Structure) -> Design:
    return Design(k6.bisection_names, list(k6.edge_labels.values()))


def design_M(k6: K6Structure) -> Design:
    return Design(k6.bisection_names, list(k6.matching_labels.values()))


def biplane_E(k6: K6Structure) -> Design:
    blocks = [tuple(e) + tuple(lab) for e, lab in k6.edge_labels.items()]
    blocks.append(k6.vertices)
    return Design(k6.vertices + k6.bisection_names, blocks)


def biplane_M(k6: K6Structure) -> Design:
    blocks = [tuple(fg) + tuple(k6.matching_labels[m]) for fg, m in k6.dual_edges.items()]
    blocks.append(k6.factorization_names)
    return Design(k6.bisection_names + k6.factorization_names, blocks)


def em_blocks(k6: K6Structure) -> list[tuple[str, ...]]:
    """One block per incident edge-matching pair."""
    all_b = frozenset(k6.bisection_names)
    out = []
    for m in k6.matchings:
        f, g = k6.factorizations_containing(m)
        for e in sorted(m, key=sorted):
            rest = all_b - (k6.edge_labels[e] | k6.matching_labels[m])
            out.append(tuple(sorted(tuple(e) + (f, g) + tuple(rest))))
    return out


def witt22(k6: K6Structure | None = None) -> Design:
    k6 = k6 or build_k6()
    blocks = biplane_E(k6).blocks + biplane_M(k6).blocks + em_blocks(k6)
    return Design(k6.vertices + k6.bisection_names + k6.factorization_names, blocks)


def ovals(design: Design, size: int = 4) -> list[tuple[str, ...]]:
    """Point sets of the given size with no three points in a common block."""
    triples = {s for b in design.blocks for s in combinations(b, 3)}
    return [q for q in combinations(design.points, size)
            if not any(s in triples for s in combinations(q, 3))]


def derived_by_deletion(design: Design, block: Iterable[str]):
    """Remove one block's points from every other block; split by residual size."""
    gone = set(block)
    rest = [tuple(p for p in b if p not in gone) for b in design.blocks if set(b) != gone]
    six = [b for b in rest if len(b) == 6]
    four = [b for b in rest if len(b) == 4]
    return six, four


@dataclass
class AxesReport:
    ok: bool
    quadruples: list[tuple[str, ...]]
    uncovered: list[tuple[str, ...]]


class LabelMismatch(ValueError):
    pass


def octahedral_axes_check(rp4: SimplicialComplex, k6: K6Structure) -> AxesReport:
    """Each vertex-orbit edge of the 16-vertex RP^4 has an octahedral link on
    bisection points; its three axes with the edge give quadruples that must
    each lie in a block of the edge-matching family."""
    ids = {}
    for name in k6.vertices + k6.bisection_names:
        try:
            ids[name] = rp4.vertex_by_label(name)
        except KeyError:
            raise LabelMismatch(f"no vertex labelled {name!r}") from None
    name_of = {i: n for n, i in ids.items()}
    em = [frozenset(b) for b in em_blocks(k6)]
    quads, missing = [], []
    for u, v in combinations(k6.vertices, 2):
        lk = rp4.link((ids[u], ids[v]))
        lv = [name_of.get(x) for x in lk.vertices]
        if len(lv) != 6 or not set(lv) <= set(k6.bisection_names):
            raise LabelMismatch(f"link of {u}{v} is not on six bisection points: {lv}")
        adj = lk.graph
        for x, y in combinations(lk.vertices, 2):
            if y not in adj[x]:
                q = tuple(sorted((u, v, name_of[x], name_of[y])))
                quads.append(q)
                if not any(set(q) <= b for b in em):
                    missing.append(q)
    return AxesReport(len(quads) == 45 and not missing, quads, missing)


def format_tables(k6: K6Structure) -> list[str]:
    lines = ["# bisections"]
    for b, (s, t) in k6.bisections.items():
        lines.append(f"{b} {''.join(sorted(s))}|{''.join(sorted(t))}")
    lines.append("# edges")
    for e, lab in sorted(k6.edge_labels.items(), key=lambda kv: sorted(kv[0])):
        lines.append(f"{''.join(sorted(e))} {''.join(sorted(lab))}")
    lines.append("# matchings")
    for m in k6.matchings:
        edges = " ".join("".join(sorted(e)) for e in sorted(m, key=sorted))
        lines.append(f"{edges} {''.join(sorted(k6.matching_labels[m]))}")
    lines.append("# factorizations")
    for f, ms in k6.factorizations.items():
        body = ", ".join(" ".join("".join(e) for e in _key(m)) for m in sorted(ms, key=_key))
        lines.append(f"{f} {body}")
    lines.append("# dual edges")
    for fg, m in sorted(k6.dual_edges.items(), key=lambda kv: sorted(kv[0])):
        lines.append(f"{''.join(sorted(fg))} {''.join(sorted(k6.matching_labels[m]))}")
    return lines
