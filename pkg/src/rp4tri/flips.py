"""Bistellar moves and a randomized f-vector reducer.

A move (A, B) on a d-complex needs |A| + |B| = d + 2, link(A) = boundary(B)
and B not already a face; it swaps the facets A * boundary(B) for
B * boundary(A).  When A is a facet, B is a single fresh vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .complex import ComplexError, SimplicialComplex, simplex


class InvalidMove(ComplexError):
    pass


@dataclass(frozen=True, order=True)
class BistellarMove:
    out_face: tuple[int, ...]
    in_face: tuple[int, ...]

    @property
    def dim_pair(self) -> tuple[int, int]:
        return len(self.out_face) - 1, len(self.in_face) - 1

    def reverse(self) -> BistellarMove:
        return BistellarMove(self.in_face, self.out_face)

    def removed_facets(self) -> set[tuple[int, ...]]:
        return {simplex(self.out_face + r) for r in combinations(self.in_face, len(self.in_face) - 1)}

    def added_facets(self) -> set[tuple[int, ...]]:
        return {simplex(self.in_face + r) for r in combinations(self.out_face, len(self.out_face) - 1)}

    def __str__(self):
        return f"{' '.join(map(str, self.out_face))} | {' '.join(map(str, self.in_face))}"

    @classmethod
    def parse(cls, line: str) -> BistellarMove:
        left, _, right = line.partition("|")
        return cls(simplex(map(int, left.split())), simplex(map(int, right.split())))


def is_flippable(cx: SimplicialComplex, face: Iterable[int]) -> BistellarMove | None:
    a = simplex(face)
    star = cx.star_facets(a)
    if not star:
        raise ComplexError(f"{a} is not a face")
    d = cx.dim
    if len(a) == d + 1:
        return BistellarMove(a, (max(cx.vertices) + 1,))
    aset = set(a)
    link_verts = {v for f in star for v in f if v not in aset}
    if len(link_verts) != d + 2 - len(a) or len(star) != len(link_verts):
        return None
    b = tuple(sorted(link_verts))
    if cx.is_face(b):
        return None
    return BistellarMove(a, b)


def _check(cx: SimplicialComplex, move: BistellarMove) -> None:
    a, b = move.out_face, move.in_face
    if len(a) + len(b) != cx.dim + 2:
        raise InvalidMove(f"|A| + |B| must be {cx.dim + 2}")
    if set(a) & set(b):
        raise InvalidMove("A and B share a vertex")
    if not move.removed_facets() <= cx.facets:
        raise InvalidMove(f"link of {a} is not the boundary of {b}")
    if len(cx.star_facets(a)) != len(b):
        raise InvalidMove(f"link of {a} is larger than the boundary of {b}")
    if cx.is_face(b):
        raise InvalidMove(f"{b} is already a face")


def apply_flip(cx: SimplicialComplex, move: BistellarMove) -> SimplicialComplex:
    _check(cx, move)
    facets = (cx.facets - move.removed_facets()) | move.added_facets()
    return SimplicialComplex(facets, cx.labels)


def apply_batch(cx: SimplicialComplex, moves: Sequence[BistellarMove]) -> SimplicialComplex:
    """Apply moves simultaneously.

    Every move is validated against ``cx`` itself, and the replaced facet sets
    must be pairwise disjoint; then all replacements happen at once.
    """
    removed: set = set()
    added: set = set()
    for m in moves:
        _check(cx, m)
        out = m.removed_facets()
        if out & removed:
            raise InvalidMove(f"move {m} interferes with an earlier move in the batch")
        new = m.added_facets()
        if new & added or new & cx.facets:
            raise InvalidMove(f"move {m} creates a facet twice")
        removed |= out
        added |= new
    return SimplicialComplex((cx.facets - removed) | added, cx.labels)


def valid_moves(cx: SimplicialComplex) -> list[BistellarMove]:
    """Every valid move except facet subdivisions, in canonical order."""
    out = []
    for k in range(cx.dim):
        for a in sorted(cx.faces(k)):
            m = is_flippable(cx, a)
            if m is not None:
                out.append(m)
    return out


class _State:
    """Mutable facet set with incremental face counts.

    ``count[s]`` is the number of facets containing the face ``s``; a face of
    size k is a move candidate exactly when that number is d + 2 - k.
    """

    def __init__(self, cx: SimplicialComplex):
        self.d = cx.dim
        self.facets: set = set()
        self.count: dict[tuple, int] = {}
        self.sizes = [0] * (self.d + 2)
        self.cands: list[set] = [set() for _ in range(self.d + 2)]
        self.star: dict[int, set] = {}
        for f in cx.facets:
            self._add(f)

    def _bump(self, s, delta):
        k = len(s)
        c = self.count.get(s, 0)
        if c == self.d + 2 - k:
            self.cands[k].discard(s)
        c += delta
        if c:
            self.count[s] = c
        else:
            del self.count[s]
        if c == 1 and delta > 0:
            self.sizes[k] += 1
        elif c == 0:
            self.sizes[k] -= 1
        if c == self.d + 2 - k:
            self.cands[k].add(s)

    def _add(self, f):
        self.facets.add(f)
        for v in f:
            self.star.setdefault(v, set()).add(f)
        for k in range(1, self.d + 2):
            for s in combinations(f, k):
                self._bump(s, 1)

    def _remove(self, f):
        self.facets.remove(f)
        for v in f:
            self.star[v].discard(f)
            if not self.star[v]:
                del self.star[v]
        for k in range(1, self.d + 2):
            for s in combinations(f, k):
                self._bump(s, -1)

    def moves(self, size: int) -> list[BistellarMove]:
        out = []
        for a in sorted(self.cands[size]):
            aset = set(a)
            star = [f for f in self.star[a[0]] if aset <= set(f)]
            verts = {v for f in star for v in f if v not in aset}
            if len(verts) != self.d + 2 - size:
                continue
            b = tuple(sorted(verts))
            if b in self.count:
                continue
            out.append(BistellarMove(a, b))
        return out

    def apply(self, m: BistellarMove) -> None:
        for f in m.removed_facets():
            self._remove(f)
        for f in m.added_facets():
            self._add(f)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.sizes[1:])

    def is_simplex_boundary(self) -> bool:
        return self.sizes[1] == self.d + 2 and len(self.facets) == self.d + 2


@dataclass
class Schedule:
    """Annealing knobs.

    ``temperature`` is the chance of a non-reducing move while reducing moves
    exist; it decays by ``cooling`` per step.  When no reducing move exists the
    reducer makes ``heat`` random non-reducing moves, ``heat`` growing by one
    every ``patience`` fruitless plateaus, capped at ``max_heat``.  In even
    dimensions the smallest non-reducing moves are neutral and never change
    the 1-skeleton, so with probability ``uphill`` a heating step uses the
    next size up (which adds an edge) instead.
    """

    temperature: float = 0.02
    cooling: float = 0.995
    base_heat: int = 1
    patience: int = 3
    max_heat: int = 12
    uphill: float = 0.05


@dataclass
class ReductionReport:
    complex: SimplicialComplex
    certified: bool
    trace: list[BistellarMove] = field(default_factory=list)
    best: SimplicialComplex | None = None
    seed: int = 0

    @property
    def moves(self) -> int:
        return len(self.trace)


def _anneal(cx: SimplicialComplex, seed: int, budget: int, schedule: Schedule) -> ReductionReport:
    rng = random.Random(seed)
    st = _State(cx)
    d = st.d
    trace: list[BistellarMove] = []
    best_key = st.f_vector()
    best_facets = set(st.facets)
    heat_size = (d + 3) // 2  # smallest non-reducing |A|: neutral in even d, +1 edge-ish in odd d
    temperature = schedule.temperature
    plateaus = 0
    pending_heat = 0
    while not st.is_simplex_boundary() and len(trace) < budget:
        reducing: list[BistellarMove] = []
        for size in range(1, heat_size):
            reducing = st.moves(size)
            if reducing:
                break
        if reducing and pending_heat == 0 and rng.random() >= temperature:
            move = rng.choice(reducing)
        else:
            heating = []
            sizes = list(range(heat_size, d + 1))
            if d % 2 == 0 and len(sizes) > 1 and rng.random() < schedule.uphill:
                sizes = sizes[1:]  # skip the neutral moves this time
            for size in sizes:
                heating = st.moves(size)
                if heating:
                    break
            if not heating:
                break
            if pending_heat == 0:
                plateaus += 1
                pending_heat = min(schedule.max_heat, schedule.base_heat + plateaus // schedule.patience)
            pending_heat -= 1
            move = rng.choice(heating)
        st.apply(move)
        trace.append(move)
        temperature *= schedule.cooling
        key = st.f_vector()
        if key < best_key:
            best_key, best_facets = key, set(st.facets)
            plateaus = 0
    final = SimplicialComplex(st.facets, cx.labels)
    return ReductionReport(
        complex=final,
        certified=st.is_simplex_boundary(),
        trace=trace,
        best=SimplicialComplex(best_facets, cx.labels),
        seed=seed,
    )


def _restart_seed(seed: int, k: int) -> int:
    return seed if k == 0 else (seed * 1_000_003 + k) % 2 ** 64


def _run(args):
    cx, seed, budget, schedule = args
    return _anneal(cx, seed, budget, schedule)


def reduce(
    cx: SimplicialComplex,
    seed: int = 0,
    budget: int = 5000,
    restarts: int = 1,
    schedule: Schedule | None = None,
    jobs: int = 1,
) -> ReductionReport:
    """Try to flip ``cx`` down to the boundary of a (d+1)-simplex.

    Each restart is an independent seeded search with its own budget.  The
    lowest-numbered certified restart is returned, otherwise the restart whose
    best complex has the smallest f-vector.  ``certified=False`` only means
    the search gave up.
    """
    schedule = schedule or Schedule()
    tasks = [(cx, _restart_seed(seed, k), budget, schedule) for k in range(max(1, restarts))]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run, tasks))
    else:
        reports = []
        for t in tasks:
            r = _run(t)
            reports.append(r)
            if r.certified:
                break
    for r in reports:
        if r.certified:
            return r
    return min(reports, key=lambda r: r.best.f_vector())


def replay(cx: SimplicialComplex, trace: Iterable[BistellarMove]) -> SimplicialComplex:
    for m in trace:
        cx = apply_flip(cx, m)
    return cx
