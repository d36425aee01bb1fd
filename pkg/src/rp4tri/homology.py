"""Integer simplicial homology through Smith normal form.

Boundary matrices are eliminated sparsely on unit pivots first (those never
change the invariant factors); whatever is left is handed to a dense Smith
normal form over Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def smith_normal_form(matrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors d1 | d2 | ... of an integer matrix, and its rank.

    Smallest-absolute-value pivoting; exact integer arithmetic throughout.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                if row[j] and (piv is None or abs(row[j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                bad = next(
                    (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # move the smallest remaining entry of row/column t onto the pivot
            best = (t, t)
            for i in range(t, m):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, n):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag), len(diag)


def _sparse_invariant_factors(cols: list[dict[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse matrix given column-wise."""
    rows: dict[int, dict[int, int]] = {}
    for c, col in enumerate(cols):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
    colidx: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            colidx.setdefault(c, set()).add(r)

    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(colidx):
            rs = colidx.get(c)
            if not rs:
                colidx.pop(c, None)
                continue
            cand = [r for r in rs if rows[r][c] in (1, -1)]
            if not cand:
                continue
            r = min(cand, key=lambda x: (len(rows[x]), x))
            prow = rows.pop(r)
            sign = prow[c]
            for k in prow:
                colidx[k].discard(r)
            for s in list(colidx[c]):
                row = rows[s]
                factor = row[c] * sign
                for k, v in prow.items():
                    nv = row.get(k, 0) - factor * v
                    if nv:
                        if k not in row:
                            colidx[k].add(s)
                        row[k] = nv
                    elif k in row:
                        del row[k]
                        colidx[k].discard(s)
                if not row:
                    del rows[s]
            del colidx[c]
            units += 1
            progress = True
    if not rows:
        return [1] * units
    rlist = sorted(rows)
    clist = sorted({c for row in rows.values() for c in row})
    cpos = {c: j for j, c in enumerate(clist)}
    dense = []
    for r in rlist:
        line = [0] * len(clist)
        for c, v in rows[r].items():
            line[cpos[c]] = v
        dense.append(line)
    factors, _ = smith_normal_form(dense)
    return [1] * units + list(factors)


def ordered_faces(cx: SimplicialComplex) -> list[list[tuple[int, ...]]]:
    return [sorted(cx.faces(k)) for k in range(cx.dim + 1)]


def boundary_matrices(cx: SimplicialComplex) -> list[list[dict[int, int]]]:
    """Sparse boundary maps d_k (k = 1..dim) as lists of columns.

    Faces are ordered lexicographically; deleting vertex i carries sign (-1)^i.
    """
    faces = ordered_faces(cx)
    out = []
    for k in range(1, cx.dim + 1):
        index = {s: i for i, s in enumerate(faces[k - 1])}
        cols = []
        for s in faces[k]:
            cols.append({index[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
        out.append(cols)
    return out


def homology(cx: SimplicialComplex) -> list[HomologyGroup]:
    """H_0 .. H_dim with integer coefficients."""
    faces = ordered_faces(cx)
    mats = boundary_matrices(cx)
    factors = [_sparse_invariant_factors(m) for m in mats]
    ranks = [0] + [len(f) for f in factors] + [0]
    groups = []
    for k in range(cx.dim + 1):
        betti = len(faces[k]) - ranks[k] - ranks[k + 1]
        tors = tuple(sorted(t for t in (factors[k] if k < cx.dim else []) if t > 1))
        groups.append(HomologyGroup(betti, tors))
    return groups


def _rank_mod2(cols: list[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        x = 0
        for r, v in col.items():
            if v % 2:
                x |= 1 << r
        while x:
            top = x.bit_length() - 1
            if top in pivots:
                x ^= pivots[top]
            else:
                pivots[top] = x
                rank += 1
                break
    return rank


def betti_mod2(cx: SimplicialComplex) -> list[int]:
    """Betti numbers over GF(2)."""
    faces = ordered_faces(cx)
    ranks = [0] + [_rank_mod2(m) for m in boundary_matrices(cx)] + [0]
    return [len(faces[k]) - ranks[k] - ranks[k + 1] for k in range(cx.dim + 1)]


def betti_mod2_from_integral(groups: list[HomologyGroup]) -> list[int]:
    """Universal coefficients: b_k(Z/2) = r_k + #even torsion in H_k and H_{k-1}."""
    def even(g):
        return sum(1 for t in g.torsion if t % 2 == 0)

    return [g.rank + even(g) + (even(groups[k - 1]) if k else 0) for k, g in enumerate(groups)]


def euler_from_homology(groups: list[HomologyGroup]) -> int:
    return sum((-1) ** k * g.rank for k, g in enumerate(groups))


def boundary_squared_is_zero(cx: SimplicialComplex) -> bool:
    mats = boundary_matrices(cx)
    for lower, upper in zip(mats, mats[1:]):
        for col in upper:
            acc: dict[int, int] = {}
            for mid, v in col.items():
                for r, w in lower[mid].items():
                    acc[r] = acc.get(r, 0) + v * w
            if any(acc.values()):
                return False
    return True


def format_homology(groups: list[HomologyGroup]) -> list[str]:
    return [f"H_{k} = {g}" for k, g in enumerate(groups)]


__all__ = [
    "HomologyGroup",
    "betti_mod2",
    "betti_mod2_from_integral",
    "boundary_matrices",
    "boundary_squared_is_zero",
    "euler_from_homology",
    "format_homology",
    "homology",
    "smith_normal_form",
]
