"""Print the labelled K6 tables next to the published edge labelling.

The published drawing numbers the bisections differently; swapping 7 and 9
in our labels reproduces it exactly.  The factorization graph matches after
a renaming of U..Z, which is searched for and printed.

    python scripts/k6_tables.py
"""

from itertools import permutations

from rp4tri.designs import build_k6, format_tables

PUBLISHED_EDGES = (
    "AB0123 AC0456 BC0789 AD1489 BD1567 CD2347 AE2579 BE2468 CE1358 DE0369 "
    "AF3678 BF3459 CF1269 DF0258 EF0147"
).split()
PUBLISHED_DUAL = (
    "UV5689 UW1379 VW0249 UX1245 VX0357 WX0168 UY0348 VY1278 WY2356 XY4679 "
    "UZ0267 VZ1346 WZ4578 XZ2389 YZ0159"
).split()
SWAP = str.maketrans("79", "97")


def main():
    k6 = build_k6()
    for line in format_tables(k6):
        print(line)

    print("\n# edge labels: ours (7<->9 swapped) vs published")
    for word in PUBLISHED_EDGES:
        ours = "".join(sorted("".join(k6.e(word[0], word[1])).translate(SWAP)))
        print(f"{word[:2]} {ours} {word[2:]} {'ok' if ours == word[2:] else 'DIFF'}")

    print("\n# factorization graph: renaming that matches the published labels")
    target = {frozenset(w[:2]): "".join(sorted(w[2:])) for w in PUBLISHED_DUAL}
    names = k6.factorization_names
    for p in permutations(names):
        ren = dict(zip(names, p))
        ours = {frozenset(ren[x] for x in fg): "".join(sorted("".join(k6.matching_labels[m]).translate(SWAP)))
                for fg, m in k6.dual_edges.items()}
        if ours == target:
            print(" ".join(f"{a}->{b}" for a, b in ren.items()))
            break
    else:
        print("no renaming found")


if __name__ == "__main__":
    main()
