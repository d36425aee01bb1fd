"""Facet-list text formats.

``fl``: a header ``d=<dim> n=<vertices> f=<facets>``, then one facet per line
as increasing integers, with optional ``# label <id> <string>`` lines.
Bracket format: ``[[1,2,3],[2,3,4],...]`` on one line, whitespace ignored.
"""

from __future__ import annotations

import json
import re

from .complex import ComplexError, SimplicialComplex

_HEADER = re.compile(r"^d=(-?\d+)\s+n=(\d+)\s+f=(\d+)\s*$")


class FormatError(ComplexError):
    pass


def dumps_fl(cx: SimplicialComplex) -> str:
    lines = [f"d={cx.dim} n={cx.n_vertices} f={len(cx.facets)}"]
    lines += [" ".join(map(str, f)) for f in cx.sorted_facets]
    lines += [f"# label {v} {cx.labels[v]}" for v in sorted(cx.labels)]
    return "\n".join(lines) + "\n"


def loads_fl(text: str) -> SimplicialComplex:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty input")
    m = _HEADER.match(lines[0])
    if not m:
        raise FormatError(f"bad header line: {lines[0]!r}")
    dim, n, nf = map(int, m.groups())
    facets, labels = [], {}
    for ln in lines[1:]:
        if ln.startswith("#"):
            parts = ln[1:].split(None, 2)
            if len(parts) == 3 and parts[0] == "label":
                try:
                    labels[int(parts[1])] = parts[2]
                except ValueError:
                    raise FormatError(f"bad label line: {ln!r}") from None
            continue
        try:
            f = [int(x) for x in ln.split()]
        except ValueError:
            raise FormatError(f"bad facet line: {ln!r}") from None
        if f != sorted(set(f)):
            raise FormatError(f"facet not strictly increasing: {ln!r}")
        facets.append(f)
    cx = SimplicialComplex(facets, labels)
    if (cx.dim, cx.n_vertices, len(cx.facets)) != (dim, n, nf) or len(facets) != nf:
        raise FormatError(
            f"header says d={dim} n={n} f={nf}, body has d={cx.dim} n={cx.n_vertices} f={len(facets)}"
        )
    return cx


def dumps_brackets(cx: SimplicialComplex) -> str:
    return "[" + ",".join("[" + ",".join(map(str, f)) + "]" for f in cx.sorted_facets) + "]\n"


def loads_brackets(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad bracket list: {exc}") from None
    if not isinstance(data, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) for v in f) for f in data
    ):
        raise FormatError("bracket format must be a list of integer lists")
    return SimplicialComplex(data)


def loads(text: str) -> SimplicialComplex:
    """Read either format, deciding by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return loads_brackets(stripped)
    return loads_fl(text)
