"""Constructions of the named small graphs and incidence geometries.

Every builder returns a Graph with a deterministic vertex labeling (vertices
sorted by their natural keys); callers verify intersection arrays, so nothing
here is trusted on provenance alone.
"""

from __future__ import annotations

from itertools import combinations, product

from .algebra import enumerate_subspaces, field, form_eval, subspace_elements
from .graph import Graph

__all__ = [
    "petersen", "shrikhande", "icosahedron", "dodecahedron", "coxeter",
    "k55_minus_matching", "pg2_incidence", "pg2_nonincidence",
    "ag2_minus_parallel_class", "symplectic_gq_incidence", "lcf_graph",
    "foster", "tutte_12_cage",
]


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set (disjointness adjacency)."""
    keys = list(combinations(range(5), 2))
    idx = {k: i for i, k in enumerate(keys)}
    edges = [(idx[a], idx[b]) for a, b in combinations(keys, 2)
             if not set(a) & set(b)]
    return Graph.from_edges(10, edges, "petersen")


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a, b in product(range(4), repeat=2):
        for da, db in conn:
            c, d = (a + da) % 4, (b + db) % 4
            edges.append((4 * a + b, 4 * c + d))
    return Graph.from_edges(16, {tuple(sorted(e)) for e in edges}, "shrikhande")


def icosahedron() -> Graph:
    # poles 0 and 1, upper ring 2..6, lower ring 7..11
    up = [2 + i for i in range(5)]
    lo = [7 + i for i in range(5)]
    edges = [(0, u) for u in up] + [(1, v) for v in lo]
    for i in range(5):
        edges.append((up[i], up[(i + 1) % 5]))
        edges.append((lo[i], lo[(i + 1) % 5]))
        edges.append((up[i], lo[i]))
        edges.append((up[i], lo[(i - 1) % 5]))
    return Graph.from_edges(12, edges, "icosahedron")


def dodecahedron() -> Graph:
    """Generalized Petersen graph GP(10,2)."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))        # outer cycle
        edges.append((i, 10 + i))              # spokes
        edges.append((10 + i, 10 + (i + 2) % 10))  # inner pentagram pair
    return Graph.from_edges(20, edges, "dodecahedron")


def coxeter() -> Graph:
    """Kneser graph of 3-subsets of a 7-set, restricted to non-lines of a
    Fano plane (each non-line triple is disjoint from exactly one line)."""
    lines = {frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)}
    keys = [t for t in combinations(range(7), 3) if frozenset(t) not in lines]
    idx = {k: i for i, k in enumerate(keys)}
    edges = [(idx[a], idx[b]) for a, b in combinations(keys, 2)
             if not set(a) & set(b)]
    return Graph.from_edges(28, edges, "coxeter")


def k55_minus_matching() -> Graph:
    edges = [(i, 5 + j) for i in range(5) for j in range(5) if i != j]
    return Graph.from_edges(10, edges, "k55-minus-matching")


def _pg2_points_lines(q: int):
    F = field(q)
    points = enumerate_subspaces(3, 1, F)
    lines = enumerate_subspaces(3, 2, F)
    line_sets = [subspace_elements(F, L) for L in lines]
    return points, lines, line_sets


def pg2_incidence(q: int, name: str = "") -> Graph:
    """Point-line incidence graph of the projective plane PG(2,q)."""
    points, lines, line_sets = _pg2_points_lines(q)
    np_ = len(points)
    edges = []
    for i, P in enumerate(points):
        vec = P[0]
        for j, ls in enumerate(line_sets):
            if vec in ls:
                edges.append((i, np_ + j))
    return Graph.from_edges(np_ + len(lines), edges, name or f"incidence-pg2-{q}")


def pg2_nonincidence(q: int = 2) -> Graph:
    points, lines, line_sets = _pg2_points_lines(q)
    np_ = len(points)
    edges = []
    for i, P in enumerate(points):
        vec = P[0]
        for j, ls in enumerate(line_sets):
            if vec not in ls:
                edges.append((i, np_ + j))
    return Graph.from_edges(np_ + len(lines), edges, f"nonincidence-pg2-{q}")


def ag2_minus_parallel_class(q: int, name: str = "") -> Graph:
    """Incidence graph of the affine plane AG(2,q) with the vertical parallel
    class removed: q^2 points, q^2 lines y = mx + b, each point on q lines."""
    F = field(q)
    points = sorted(product(range(q), repeat=2))
    pidx = {p: i for i, p in enumerate(points)}
    lines = sorted(product(range(q), repeat=2))   # (m, b)
    edges = []
    for j, (m, b) in enumerate(lines):
        for x in range(q):
            y = F.add(F.mul(m, x), b)
            edges.append((pidx[(x, y)], q * q + j))
    return Graph.from_edges(2 * q * q, edges, name or f"incidence-ag2-{q}-minus-class")


def symplectic_gq_incidence(q: int, name: str = "") -> Graph:
    """Incidence graph of the generalized quadrangle W(3,q): all projective
    points of F^4 versus totally isotropic lines of the symplectic form."""
    F = field(q)
    points = enumerate_subspaces(4, 1, F)
    lines = [L for L in enumerate_subspaces(4, 2, F)
             if all(form_eval("symplectic", F, u, v) == 0 for u in L for v in L)]
    line_sets = [subspace_elements(F, L) for L in lines]
    np_ = len(points)
    edges = []
    for i, P in enumerate(points):
        vec = P[0]
        for j, ls in enumerate(line_sets):
            if vec in ls:
                edges.append((i, np_ + j))
    return Graph.from_edges(np_ + len(lines), edges, name or f"incidence-gq-{q}{q}")


def lcf_graph(jumps, reps: int, name: str = "") -> Graph:
    """Hamiltonian cubic graph from LCF notation."""
    n = len(jumps) * reps
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + jumps[i % len(jumps)]) % n
        edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, {(min(a, b), max(a, b)) for a, b in edges}, name)


def foster() -> Graph:
    return lcf_graph([17, -9, 37, -37, 9, -17], 15, "foster")


def tutte_12_cage() -> Graph:
    return lcf_graph([17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21,
                      57, 11, -21, -57, 59, -17], 7, "tutte-12-cage")
