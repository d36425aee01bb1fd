"""Command-line entry point.

Exit codes: 0 success or true, 1 check failed or false, 2 usage error or
malformed input.  Reports are ``key=value`` lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions, designs, fileio, flips, manifold, symmetry
from .complex import (
    ComplexError,
    Involution,
    SimplicialComplex,
    cross_polytope_boundary,
    quotient,
    simplex_boundary,
)
from .homology import betti_mod2, format_homology, homology


class UsageError(Exception):
    pass


def _read(path: str) -> SimplicialComplex:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return fileio.loads(text)
    except ComplexError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(cx: SimplicialComplex, out: str, fmt: str) -> None:
    text = fileio.dumps_brackets(cx) if fmt == "brackets" else fileio.dumps_fl(cx)
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _join(xs) -> str:
    return ",".join(map(str, xs))


def _generate(name: str, stages_dir: str | None) -> SimplicialComplex:
    head, _, arg = name.partition(":")
    if arg:
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"bad size in {name!r}") from None
        try:
            if head == "kuehnel":
                return constructions.kuehnel_rp(n)
            if head == "simplex":
                return simplex_boundary(n)
            if head == "crosspoly":
                return cross_polytope_boundary(n)
        except ComplexError as exc:
            raise UsageError(str(exc)) from None
        raise UsageError(f"unknown generator {name!r}")
    pipelines = {
        "x6": (constructions.c1_pipeline, "x6"),
        "x12": (constructions.c1_pipeline, "x12"),
        "x32": (constructions.c1_pipeline, "x32"),
        "s4-32": (constructions.c1_pipeline, "s4_32"),
        "rp4-c1": (constructions.c1_pipeline, "rp4"),
        "rp4-c2": (constructions.c2_pipeline, "rp4"),
        "rp4-c3": (constructions.c3_pipeline, "rp4"),
    }
    if name in pipelines:
        build, key = pipelines[name]
        pipe = build()
        if stages_dir:
            d = Path(stages_dir)
            d.mkdir(parents=True, exist_ok=True)
            for stage, cx in pipe.stages.items():
                (d / f"{stage}.fl").write_text(fileio.dumps_fl(cx))
        return pipe.stages[key]
    if name in constructions.GENERATORS:
        return constructions.GENERATORS[name]()
    raise UsageError(f"unknown generator {name!r}")


def cmd_gen(a) -> int:
    _write(_generate(a.name, a.stages), a.output, a.format)
    return 0


def cmd_fvector(a) -> int:
    cx = _read(a.file)
    print(f"dim={cx.dim}")
    print(f"fvector={_join(cx.f_vector())}")
    print(f"euler={cx.euler_characteristic()}")
    return 0


def cmd_homology(a) -> int:
    cx = _read(a.file)
    for line in format_homology(homology(cx)):
        print(line.replace(" = ", "="))
    print(f"betti_mod2={_join(betti_mod2(cx))}")
    return 0


def cmd_aut(a) -> int:
    cx = _read(a.file)
    g = symmetry.automorphism_group(cx)
    print(f"order={g.order}")
    print(f"vertex_orbits={_join(g.vertex_orbit_sizes)}")
    print(f"facet_orbits={_join(g.facet_orbit_sizes)}")
    for gen in g.generators:
        print(f"generator={symmetry.format_cycles(gen)}")
    return 0


def cmd_iso(a) -> int:
    x, y = _read(a.first), _read(a.second)
    m = symmetry.are_isomorphic(x, y)
    print(f"isomorphic={'true' if m else 'false'}")
    if m is None:
        return 1
    for v in sorted(m):
        print(f"map {v}={m[v]}")
    return 0


def cmd_manifold(a) -> int:
    cx = _read(a.file)
    rep = manifold.check_combinatorial_manifold(cx, seed=a.seed, jobs=a.jobs)
    good = sum(1 for s in rep.links.values() if s == manifold.SPHERE)
    print(f"pseudomanifold={'true' if rep.pseudomanifold else 'false'}")
    print(f"links_certified={good}/{len(rep.links)}")
    for v in rep.uncertified:
        print(f"link {v}={rep.links[v]}")
    print(f"manifold={'true' if rep.ok else 'false'}")
    return 0 if rep.ok else 1


def _involution(text: str) -> Involution:
    try:
        return Involution.from_cycles(text)
    except ComplexError as exc:
        raise UsageError(str(exc)) from None


def cmd_antipodal(a) -> int:
    cx = _read(a.file)
    rep = manifold.is_antipodal(cx, _involution(a.inv))
    print(f"antipodal={'true' if rep.ok else 'false'}")
    print(f"min_distance={rep.min_distance}")
    if rep.reason:
        print(f"reason={rep.reason}")
    if rep.violating_pair:
        print(f"violating_pair={_join(rep.violating_pair)}")
    return 0 if rep.ok else 1


def cmd_quotient(a) -> int:
    cx = _read(a.file)
    try:
        q = quotient(cx, _involution(a.inv))
    except ComplexError as exc:
        print(f"error={type(exc).__name__}")
        print(f"detail={exc}")
        return 1
    _write(q, a.output, a.format)
    return 0


def cmd_reduce(a) -> int:
    cx = _read(a.file)
    rep = flips.reduce(cx, seed=a.seed, budget=a.budget, restarts=a.restarts, jobs=a.jobs)
    for m in rep.trace:
        print(m)
    print(
        f"# certified={'true' if rep.certified else 'false'} moves={rep.moves} "
        f"fvector={_join(rep.complex.f_vector())} best={_join(rep.best.f_vector())} seed={rep.seed}"
    )
    if a.output:
        _write(rep.best, a.output, "fl")
    return 0 if rep.certified else 1


def cmd_design(a) -> int:
    k6 = designs.build_k6()
    if a.which == "k6":
        for line in designs.format_tables(k6):
            print(line)
        return 0
    w = designs.witt22(k6)
    if a.blocks:
        for b in w.blocks:
            print(" ".join(b))
    if a.verify or not a.blocks:
        ok, bad = designs.verify_design(w, 3, 22, 6, 1)
        print(f"design=3-(22,6,1) blocks={len(w.blocks)} verified={'true' if ok else 'false'}")
        if not ok:
            print(f"counterexample={bad}")
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rp4tri", description="Triangulations of real projective space.")
    sub = p.add_subparsers(dest="command", required=True)

    def out_opts(sp):
        sp.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        sp.add_argument("--format", choices=("fl", "brackets"), default="fl")

    sp = sub.add_parser("gen", help="generate a named complex")
    sp.add_argument("name")
    sp.add_argument("--stages", metavar="DIR", help="also dump intermediate complexes here")
    out_opts(sp)
    sp.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("fvector", cmd_fvector, "f-vector and Euler characteristic"),
        ("homology", cmd_homology, "integral homology"),
        ("aut", cmd_aut, "automorphism group"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("iso", help="find an isomorphism")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("manifold", help="certify all vertex links as spheres")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_manifold)

    for name, func, helptext in (
        ("antipodal", cmd_antipodal, "check an involution is free and link-separating"),
        ("quotient", cmd_quotient, "quotient by an antipodal involution"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        sp.add_argument("--inv", required=True, help='involution in cycle notation, e.g. "(1 2)(3 4)"')
        if name == "quotient":
            out_opts(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("reduce", help="bistellar reduction towards a simplex boundary")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=5000)
    sp.add_argument("--restarts", type=int, default=1)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-o", "--output", help="write the smallest complex reached")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("design", help="K6 tables and the 22-point design")
    sp.add_argument("which", choices=("k6", "witt22"))
    sp.add_argument("--table", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--blocks", action="store_true")
    sp.set_defaults(func=cmd_design)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
