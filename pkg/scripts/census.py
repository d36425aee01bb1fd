"""Invariants of every built-in generator, one line per complex.

    python scripts/census.py [--skip-aut]
"""

import argparse

from rp4tri.constructions import GENERATORS, kuehnel_rp
from rp4tri.homology import format_homology, homology
from rp4tri.manifold import check_combinatorial_manifold
from rp4tri.symmetry import automorphism_group, canonical_form


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-aut", action="store_true", help="skip automorphism groups")
    args = ap.parse_args()

    complexes = {name: make() for name, make in GENERATORS.items()}
    for n in (2, 3, 4):
        complexes[f"kuehnel:{n}"] = kuehnel_rp(n)

    forms = {}
    for name, cx in complexes.items():
        hom = "; ".join(format_homology(homology(cx)))
        parts = [f"{name:<10}", f"fvector={cx.f_vector()}", f"euler={cx.euler_characteristic()}", hom]
        if cx.dim <= 4 and name.startswith(("rp", "kuehnel:2", "kuehnel:3")):
            parts.append(f"manifold={check_combinatorial_manifold(cx).ok}")
        if not args.skip_aut:
            parts.append(f"aut={automorphism_group(cx).order}")
        print("  ".join(parts), flush=True)
        if name.startswith("rp4-"):
            forms[name] = canonical_form(cx)[0]
    same = len(set(forms.values())) == 1
    print(f"rp4 generators share one canonical form: {same}")


if __name__ == "__main__":
    main()
