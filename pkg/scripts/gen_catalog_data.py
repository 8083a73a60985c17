#!/usr/bin/env python3
"""Regenerate the embedded catalog graph6 files.

Each graph is built from first principles here (LCF words, Kneser restriction,
generalized Petersen skeleton, affine-plane incidence, and a coset-graph
search in PSL(2,17) for Biggs-Smith), verified against its intersection
array, and only then written to src/drgc/data/catalog/.  Run from the repo
root:  python scripts/gen_catalog_data.py
"""

import itertools
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from drgc.constructions import (ag2_minus_parallel_class, coxeter, dodecahedron,
                                foster, icosahedron, tutte_12_cage)
from drgc.graph import Graph, g6_encode, intersection_array

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "drgc" / "data" / "catalog"


def biggs_smith() -> Graph:
    """Coset graph of PSL(2,17) on the 102 cosets of an S4 subgroup, joined
    along the symmetric double coset of size 72; verified below."""
    p = 17
    pts = list(range(p)) + [p]

    def make_perm(a, b, c, d):
        perm = []
        for z in pts:
            if z == p:
                perm.append(p if c % p == 0 else (a * pow(c, p - 2, p)) % p)
            else:
                num, den = (a * z + b) % p, (c * z + d) % p
                perm.append(p if den == 0 else (num * pow(den, p - 2, p)) % p)
        return tuple(perm)

    squares = {(x * x) % p for x in range(1, p)}
    group = sorted({make_perm(a, b, c, d)
                    for a, b, c, d in itertools.product(range(p), repeat=4)
                    if (a * d - b * c) % p in squares})
    ident = tuple(range(p + 1))

    def compose(f, g):
        return tuple(f[g[i]] for i in range(len(g)))

    def order(e):
        x, o = e, 1
        while x != ident:
            x = compose(x, e)
            o += 1
        return o

    inverse = {}
    for e in group:
        iv = [0] * (p + 1)
        for i, j in enumerate(e):
            iv[j] = i
        inverse[e] = tuple(iv)

    def closure(gens):
        H = {ident}
        frontier = [ident]
        while frontier:
            nf = []
            for x in frontier:
                for y in gens:
                    z = compose(x, y)
                    if z not in H:
                        H.add(z)
                        nf.append(z)
                        if len(H) > 24:
                            return H
            frontier = nf
        return H

    target = "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"
    invols = [e for e in group if order(e) == 2]
    order3 = [e for e in group if order(e) == 3]
    for s in invols:
        for t in order3:
            if order(compose(s, t)) != 4:
                continue
            H = closure([s, t])
            if len(H) != 24:
                continue
            reps, rep_index = [], {}
            coset_of = {}
            for g in group:
                cos = min(compose(h, g) for h in H)
                if cos not in coset_of:
                    coset_of[cos] = len(reps)
                    reps.append(cos)
                rep_index[g] = coset_of[cos]
            seen = set()
            for a in group:
                if a in seen:
                    continue
                dc = set()
                for h1 in H:
                    ha = compose(h1, a)
                    for h2 in H:
                        dc.add(compose(ha, h2))
                seen |= dc
                if len(dc) != 72 or inverse[a] not in dc:
                    continue
                edges = set()
                cubic = True
                for xi, x in enumerate(reps):
                    nbh = {rep_index[compose(d, x)] for d in dc}
                    if len(nbh) != 3 or xi in nbh:
                        cubic = False
                        break
                    edges.update((min(xi, y), max(xi, y)) for y in nbh)
                if not cubic:
                    continue
                g102 = Graph.from_edges(102, edges, "biggs-smith")
                try:
                    if str(intersection_array(g102)) == target:
                        return g102
                except Exception:
                    continue
    raise RuntimeError("Biggs-Smith coset search failed")


TARGETS = {
    "pappus": (lambda: ag2_minus_parallel_class(3, "pappus"), "{3,2,2,1;1,1,2,3}"),
    "coxeter": (coxeter, "{3,2,2,1;1,1,1,2}"),
    "dodecahedron": (dodecahedron, "{3,2,1,1,1;1,1,1,2,3}"),
    "icosahedron": (icosahedron, "{5,2,1;1,2,5}"),
    "tutte-12-cage": (tutte_12_cage, "{3,2,2,2,2,2;1,1,1,1,1,3}"),
    "foster": (foster, "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}"),
    "biggs-smith": (biggs_smith, "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (builder, expected) in TARGETS.items():
        g = builder()
        ia = intersection_array(g)
        assert str(ia) == expected, (name, str(ia), expected)
        path = OUT / f"{name}.g6"
        path.write_text(g6_encode(g) + "\n", encoding="ascii")
        print(f"{name}: n={g.n} array={ia} -> {path.name}")


if __name__ == "__main__":
    main()
