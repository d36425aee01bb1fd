"""Pseudomanifold, combinatorial-manifold and antipodality checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import flips
from .complex import INFINITY, Involution, SimplicialComplex
from .homology import homology

SPHERE = "sphere"
NOT_SPHERE = "not_sphere"
UNKNOWN = "unknown"


@dataclass
class PseudomanifoldReport:
    ok: bool
    bad_ridges: list[tuple[int, ...]] = field(default_factory=list)
    components: int = 1


def is_closed_pseudomanifold(cx: SimplicialComplex) -> PseudomanifoldReport:
    """Every ridge in exactly two facets and facet adjacency connected."""
    if cx.dim < 0:
        return PseudomanifoldReport(False, components=0)
    ridges: dict[tuple, list] = {}
    for f in cx.facets:
        for r in combinations(f, len(f) - 1):
            ridges.setdefault(r, []).append(f)
    bad = sorted(r for r, fs in ridges.items() if len(fs) != 2)
    parent = {f: f for f in cx.facets}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fs in ridges.values():
        for g in fs[1:]:
            a, b = find(fs[0]), find(g)
            if a != b:
                parent[a] = b
    comps = len({find(f) for f in cx.facets})
    return PseudomanifoldReport(not bad and comps == 1, bad, comps)


def _is_homology_sphere(cx: SimplicialComplex) -> bool:
    groups = homology(cx)
    d = cx.dim
    for k, g in enumerate(groups):
        want = 1 if k in (0, d) else 0
        if g.rank != want or g.torsion:
            return False
    return True


def recognize_sphere(cx: SimplicialComplex, seed: int = 0, budget: int = 4000, restarts: int = 4) -> str:
    """Classify ``cx`` as SPHERE, NOT_SPHERE or UNKNOWN.

    Dimensions up to 2 are decided exactly; higher ones need a homology-sphere
    pre-screen and then a certifying flip reduction.
    """
    d = cx.dim
    if d == 0:
        return SPHERE if len(cx.facets) == 2 else NOT_SPHERE
    if not is_closed_pseudomanifold(cx).ok:
        return NOT_SPHERE
    if d == 1:
        return SPHERE
    if d == 2:
        if cx.euler_characteristic() != 2:
            return NOT_SPHERE
        for v in cx.vertices:
            if recognize_sphere(cx.link((v,))) != SPHERE:
                return NOT_SPHERE
        return SPHERE
    if not _is_homology_sphere(cx):
        return NOT_SPHERE
    report = flips.reduce(cx, seed=seed, budget=budget, restarts=restarts)
    return SPHERE if report.certified else UNKNOWN


@dataclass
class ManifoldReport:
    links: dict[int, str]
    pseudomanifold: bool

    @property
    def ok(self) -> bool:
        return self.pseudomanifold and all(s == SPHERE for s in self.links.values())

    @property
    def uncertified(self) -> list[int]:
        return [v for v, s in self.links.items() if s != SPHERE]


def _link_status(args):
    cx, v, seed = args
    return v, recognize_sphere(cx.link((v,)), seed=seed)


def check_combinatorial_manifold(cx: SimplicialComplex, seed: int = 0, jobs: int = 1) -> ManifoldReport:
    pm = is_closed_pseudomanifold(cx).ok
    tasks = [(cx, v, seed + v) for v in cx.vertices]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_link_status, tasks))
    else:
        results = [_link_status(t) for t in tasks]
    return ManifoldReport(dict(results), pm)


@dataclass
class AntipodalReport:
    ok: bool
    reason: str = ""
    min_distance: float = INFINITY
    violating_pair: tuple[int, int] | None = None


def is_antipodal(cx: SimplicialComplex, inv: Involution) -> AntipodalReport:
    fixed = inv.fixed_points(cx.vertices)
    if fixed:
        return AntipodalReport(False, "HasFixedPoint", 0, (fixed[0], fixed[0]))
    image = {tuple(sorted(inv(v) for v in f)) for f in cx.facets}
    if image != cx.facets:
        return AntipodalReport(False, "NotInvariant")
    best = INFINITY
    pair = None
    for v in cx.vertices:
        d = cx.skeleton_distance(v, inv(v))
        if d < best:
            best, pair = d, (v, inv(v))
    if best < 3:
        return AntipodalReport(False, "NotLinkSeparating", best, pair)
    return AntipodalReport(True, "", best, None)
