"""Bistellar reduction of the 31-vertex RP^4 towards 16 vertices.

Runs the annealing reducer from several seeds and reports, per seed, the
number of moves, the f-vector reached, and whether that complex is
isomorphic to the 16-vertex RP^4 built by the barycentric quotient pipeline.

    python scripts/reduce_kuehnel.py --seeds 0 1 2 --budget 40000
"""

import argparse
import time

from rp4tri.constructions import c1_pipeline, kuehnel_rp
from rp4tri.flips import reduce
from rp4tri.symmetry import are_isomorphic


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4, help="dimension of the projective space")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--budget", type=int, default=40000)
    args = ap.parse_args()

    start = kuehnel_rp(args.n)
    target = c1_pipeline().result if args.n == 4 else None
    print(f"start fvector={start.f_vector()}")
    for seed in args.seeds:
        t0 = time.time()
        rep = reduce(start, seed=seed, budget=args.budget)
        best = rep.best
        iso = "n/a"
        if target is not None and best.f_vector() == target.f_vector():
            iso = "true" if are_isomorphic(best.normalized(), target) else "false"
        print(f"seed={seed} moves={rep.moves} fvector={best.f_vector()} "
              f"iso_rp4_16={iso} seconds={time.time() - t0:.1f}", flush=True)


if __name__ == "__main__":
    main()
