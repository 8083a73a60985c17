"""The infinite families at concrete parameters: constructors, descendant
subgraphs, and closed-form eigenvalue data.

Vertex labelings are deterministic: each family sorts its natural vertex keys
(subsets, strings, RREF matrices, coefficient tuples) and numbers them in
order, so descendant sets are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .algebra import (SUPPORTED_Q, enumerate_subspaces, field, form_eval,
                      matrix_rank, nullspace, subspace_elements)
from .constructions import shrikhande
from .errors import NoDescendant, ParamDomain, TooLarge
from .exact import SqrtVal
from .graph import Graph, bipartite_double

FAMILIES = ("johnson", "hamming", "doob", "halvedcube", "foldedcube",
            "foldedhalvedcube", "odd", "doubledodd", "grassmann",
            "bilinearforms", "alternatingforms", "hermitianforms",
            "quadraticforms", "dualpolarc", "halfdualpolar",
            "doubledgrassmann")

MAX_VERTICES = 20000


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParamDomain(f"unknown family {self.family!r}")
        _validate(self.family, self.params)

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"

    @staticmethod
    def parse(text: str) -> "FamilySpec":
        fam, _, rest = text.strip().lower().partition(":")
        if not rest:
            raise ParamDomain(f"family spec {text!r} needs parameters")
        return FamilySpec(fam, tuple(int(x) for x in rest.split(",")))


@dataclass(frozen=True)
class TheoryValues:
    k: int
    v: int
    theta1: SqrtVal

    @property
    def lambda1(self) -> SqrtVal:
        return (SqrtVal(self.k) - self.theta1) / self.k


def _validate(fam: str, p: tuple[int, ...]):
    def need(cond, msg):
        if not cond:
            raise ParamDomain(f"{fam}{p}: {msg}")

    if fam == "johnson":
        need(len(p) == 2 and p[0] >= 2 * p[1] >= 2, "need n >= 2e >= 2")
    elif fam == "hamming":
        need(len(p) == 2 and p[0] >= 1 and p[1] >= 2, "need d >= 1, q >= 2")
    elif fam == "doob":
        need(len(p) == 2 and p[0] >= 1 and p[1] >= 0, "need d1 >= 1, d2 >= 0")
    elif fam in ("halvedcube", "foldedcube"):
        need(len(p) == 1 and p[0] >= 3, "need n >= 3")
    elif fam == "foldedhalvedcube":
        need(len(p) == 1 and p[0] >= 3, "need n >= 3 (graph is on 2^(2n-2) vertices)")
    elif fam == "odd":
        need(len(p) == 1 and p[0] >= 3, "need valency k >= 3")
    elif fam == "doubledodd":
        need(len(p) == 1 and p[0] >= 2, "need m >= 2")
    elif fam == "grassmann":
        need(len(p) == 3, "need (q, n, e)")
        q, n, e = p
        need(q in SUPPORTED_Q, f"q = {q} unsupported")
        need(1 <= e and n >= 2 * e, "need n >= 2e >= 2")
    elif fam == "bilinearforms":
        need(len(p) == 3, "need (q, D, e)")
        q, D, e = p
        need(q in SUPPORTED_Q and 1 <= D <= e, "need q supported, 1 <= D <= e")
    elif fam == "alternatingforms":
        need(len(p) == 2, "need (q, n)")
        q, n = p
        need(q in SUPPORTED_Q and n >= 3, "need q supported, n >= 3")
    elif fam == "hermitianforms":
        need(len(p) == 2, "need (r, D)")
        r, D = p
        need(r * r in SUPPORTED_Q and D >= 1, "need r^2 supported, D >= 1")
    elif fam == "quadraticforms":
        need(len(p) == 2, "need (q, n)")
        q, n = p
        need(q in SUPPORTED_Q and n >= 2, "need q supported, n >= 2")
    elif fam == "dualpolarc":
        need(len(p) == 2, "need (q, D)")
        q, D = p
        need(q in SUPPORTED_Q and D >= 1, "need q supported, D >= 1")
    elif fam == "halfdualpolar":
        need(len(p) == 2, "need (q, n)")
        q, n = p
        need(q >= 2 and n >= 4, "need q >= 2, n >= 4")
    elif fam == "doubledgrassmann":
        need(len(p) == 2, "need (q, t)")
        q, t = p
        need(q in SUPPORTED_Q and t >= 1, "need q supported, t >= 1")


def _gauss1(m: int, q: int) -> int:
    return (q ** m - 1) // (q - 1) if m >= 0 else 0


# -- closed-form k, v, theta_1 -------------------------------------------------

def theory_values(spec: FamilySpec) -> TheoryValues:
    fam, p = spec.family, spec.params
    if fam == "johnson":
        n, e = p
        return TheoryValues(e * (n - e), comb(n, e), SqrtVal((e - 1) * (n - e - 1) - 1))
    if fam == "hamming":
        d, q = p
        return TheoryValues(d * (q - 1), q ** d, SqrtVal(q * (d - 1) - d))
    if fam == "doob":
        d1, d2 = p
        d = 2 * d1 + d2
        return TheoryValues(3 * d, 4 ** d, SqrtVal(6 * d1 + 3 * d2 - 4))
    if fam == "halvedcube":
        (n,) = p
        return TheoryValues(comb(n, 2), 2 ** (n - 1),
                            SqrtVal(Fraction((n - 2) ** 2 - n, 2)))
    if fam == "foldedcube":
        (n,) = p
        return TheoryValues(n, 2 ** (n - 1), SqrtVal(n - 4))
    if fam == "foldedhalvedcube":
        (n,) = p
        return TheoryValues(n * (2 * n - 1), 2 ** (2 * n - 2),
                            SqrtVal(2 * (n - 2) ** 2 - n))
    if fam == "odd":
        (k,) = p
        return TheoryValues(k, comb(2 * k - 1, k - 1), SqrtVal(k - 2))
    if fam == "doubledodd":
        (m,) = p
        return TheoryValues(m, 2 * comb(2 * m - 1, m - 1), SqrtVal(m - 1))
    if fam == "grassmann":
        q, n, e = p
        from .algebra import gb
        k = q * _gauss1(e, q) * _gauss1(n - e, q)
        t1 = q * q * _gauss1(e - 1, q) * _gauss1(n - e - 1, q) - 1
        return TheoryValues(k, gb(n, e, q), SqrtVal(t1))
    if fam == "bilinearforms":
        q, D, e = p
        k = _gauss1(D, q) * (q ** e - 1)
        t1 = Fraction((q ** (D - 1) - 1) * (q ** e - q), q - 1) - 1
        return TheoryValues(k, q ** (D * e), SqrtVal(t1))
    if fam == "alternatingforms":
        q, n = p
        Dh, m = n // 2, 2 * ((n + 1) // 2) - 1
        k = _gauss1(Dh, q * q) * (q ** m - 1)
        t1 = _gauss1(Dh - 1, q * q) * (q ** m - q * q) - 1
        return TheoryValues(k, q ** (n * (n - 1) // 2), SqrtVal(t1))
    if fam == "hermitianforms":
        r, D = p
        k = (r ** (2 * D) - 1) // (r + 1)
        t1 = (r ** (2 * D - 2) - 1) // (r + 1)
        return TheoryValues(k, r ** (D * D), SqrtVal(t1))
    if fam == "quadraticforms":
        q, n = p
        Dh, m = (n + 1) // 2, 2 * (n // 2) + 1
        k = _gauss1(Dh, q * q) * (q ** m - 1)
        t1 = _gauss1(Dh - 1, q * q) * (q ** m - q * q) - 1
        return TheoryValues(k, q ** (n * (n + 1) // 2), SqrtVal(t1))
    if fam == "dualpolarc":
        q, D = p
        v = 1
        for i in range(1, D + 1):
            v *= q ** i + 1
        return TheoryValues(q * _gauss1(D, q), v, SqrtVal(q * _gauss1(D - 1, q) - 1))
    if fam == "halfdualpolar":
        q, n = p
        Dh, m = n // 2, 2 * ((n + 1) // 2) - 1
        beta = Fraction(_gauss1(m + 1, q) - 1)
        alpha = Fraction(q * q + q)
        b = q * q
        k = Fraction(_gauss1(Dh, b)) * beta
        t1 = Fraction(_gauss1(Dh, b) - 1, b) * (beta - alpha) - 1
        v = 1
        for i in range(1, n):
            v *= q ** i + 1
        assert k.denominator == 1 and t1.denominator == 1
        return TheoryValues(int(k), v, SqrtVal(t1))
    if fam == "doubledgrassmann":
        q, t = p
        from .algebra import gb
        theta1 = SqrtVal(0, _gauss1(t, q), q)
        return TheoryValues(_gauss1(t + 1, q), 2 * gb(2 * t + 1, t, q), theta1)
    raise ParamDomain(f"no theory values for {fam}")


# -- constructors ---------------------------------------------------------------

def _graph_from_keys(keys, adjacent, name: str) -> Graph:
    rows = [[] for _ in keys]
    for i, a in enumerate(keys):
        for j in range(i + 1, len(keys)):
            if adjacent(a, keys[j]):
                rows[i].append(j)
                rows[j].append(i)
    return Graph(len(keys), rows, name)


def _hamming_keys(d, q):
    return list(product(range(q), repeat=d))


def _even_strings(length):
    return [s for s in product((0, 1), repeat=length) if sum(s) % 2 == 0]


def _hdist(a, b):
    return sum(x != y for x, y in zip(a, b))


def _cartesian_product_graph(factors, name):
    """Cartesian product: move in exactly one factor along one of its edges."""
    adjs = []
    sizes = []
    for f in factors:
        adjs.append([set(r) for r in f.adj])
        sizes.append(f.n)
    keys = list(product(*[range(s) for s in sizes]))

    def adjacent(a, b):
        diff = [i for i in range(len(a)) if a[i] != b[i]]
        return len(diff) == 1 and b[diff[0]] in adjs[diff[0]][a[diff[0]]]

    return _graph_from_keys(keys, adjacent, name), keys


def _upper_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _alt_full(F, n, upper):
    M = [[0] * n for _ in range(n)]
    for (i, j), val in upper.items():
        M[i][j] = val
        M[j][i] = F.neg(val)
    return M


def _quad_rank(F, coeffs, n):
    """Rank of the quadratic form sum a_ij x_i x_j (i <= j)."""
    # Gram matrix of the polarization B(e_i,e_j)
    B = [[0] * n for _ in range(n)]
    for (i, j), a in coeffs.items():
        if i == j:
            B[i][i] = F.add(a, a)
        else:
            B[i][j] = a
            B[j][i] = a
    rankB = matrix_rank(F, [tuple(r) for r in B])
    rad = nullspace(F, [tuple(r) for r in B], n)

    def qval(x):
        acc = 0
        for (i, j), a in coeffs.items():
            acc = F.add(acc, F.mul(a, F.mul(x[i], x[j])))
        return acc

    extra = 1 if any(qval(x) for x in rad) else 0
    return rankB + extra


def construct(spec: FamilySpec, max_vertices: int = MAX_VERTICES) -> Graph:
    tv = theory_values(spec)
    if tv.v > max_vertices:
        raise TooLarge(f"{spec} has {tv.v} vertices (cap {max_vertices})")
    fam, p = spec.family, spec.params
    name = str(spec)

    if fam == "johnson":
        n, e = p
        keys = [frozenset(c) for c in combinations(range(1, n + 1), e)]
        g = _graph_from_keys(keys, lambda a, b: len(a & b) == e - 1, name)
    elif fam == "hamming":
        d, q = p
        g = _graph_from_keys(_hamming_keys(d, q), lambda a, b: _hdist(a, b) == 1, name)
    elif fam == "doob":
        d1, d2 = p
        factors = [shrikhande()] * d1
        if d2:
            k4 = _graph_from_keys(list(range(4)), lambda a, b: True, "K4")
            factors += [k4] * d2
        g, _ = _cartesian_product_graph(factors, name)
    elif fam == "halvedcube":
        (n,) = p
        g = _graph_from_keys(_even_strings(n), lambda a, b: _hdist(a, b) == 2, name)
    elif fam == "foldedcube":
        (n,) = p
        keys = list(product((0, 1), repeat=n - 1))
        g = _graph_from_keys(keys, lambda a, b: _hdist(a, b) in (1, n - 1), name)
    elif fam == "foldedhalvedcube":
        (n,) = p
        keys = _even_strings(2 * n - 1)
        g = _graph_from_keys(keys, lambda a, b: _hdist(a, b) in (2, 2 * n - 2), name)
    elif fam == "odd":
        (k,) = p
        keys = [frozenset(c) for c in combinations(range(1, 2 * k), k - 1)]
        g = _graph_from_keys(keys, lambda a, b: not a & b, name)
    elif fam == "doubledodd":
        (m,) = p
        keys = [frozenset(c) for c in combinations(range(1, 2 * m), m - 1)]
        base = _graph_from_keys(keys, lambda a, b: not a & b, "")
        g = bipartite_double(base).renamed(name)
    elif fam == "grassmann":
        q, n, e = p
        F = field(q)
        keys = enumerate_subspaces(n, e, F)
        elems = [subspace_elements(F, U) for U in keys]
        low = q ** (e - 1)

        def adjacent_idx(i, j):
            return len(elems[i] & elems[j]) == low

        rows = [[] for _ in keys]
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                if adjacent_idx(i, j):
                    rows[i].append(j)
                    rows[j].append(i)
        g = Graph(len(keys), rows, name)
    elif fam == "bilinearforms":
        q, D, e = p
        F = field(q)
        keys = list(product(product(range(q), repeat=e), repeat=D))

        def adjacent(a, b):
            diff = [tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)]
            return matrix_rank(F, diff) == 1

        g = _graph_from_keys(keys, adjacent, name)
    elif fam == "alternatingforms":
        q, n = p
        F = field(q)
        pairs = _upper_pairs(n)
        keys = list(product(range(q), repeat=len(pairs)))

        def adjacent(a, b):
            upper = {pr: F.sub(x, y) for pr, x, y in zip(pairs, a, b)}
            return matrix_rank(F, [tuple(r) for r in _alt_full(F, n, upper)]) == 2

        g = _graph_from_keys(keys, adjacent, name)
    elif fam == "hermitianforms":
        r, D = p
        q = r * r
        F = field(q)
        fixed = [a for a in range(q) if F.conj(a) == a]
        pairs = _upper_pairs(D)
        keys = sorted(product(*([fixed] * D + [list(range(q))] * len(pairs))))

        def full(key):
            M = [[0] * D for _ in range(D)]
            for i in range(D):
                M[i][i] = key[i]
            for t, (i, j) in enumerate(pairs):
                M[i][j] = key[D + t]
                M[j][i] = F.conj(key[D + t])
            return M

        def adjacent(a, b):
            Ma, Mb = full(a), full(b)
            diff = [tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(Ma, Mb)]
            return matrix_rank(F, diff) == 1

        g = _graph_from_keys(keys, adjacent, name)
    elif fam == "quadraticforms":
        q, n = p
        F = field(q)
        monos = [(i, j) for i in range(n) for j in range(i, n)]
        keys = list(product(range(q), repeat=len(monos)))

        def adjacent(a, b):
            coeffs = {mo: F.sub(x, y) for mo, x, y in zip(monos, a, b)}
            return _quad_rank(F, coeffs, n) in (1, 2)

        g = _graph_from_keys(keys, adjacent, name)
    elif fam == "dualpolarc":
        q, D = p
        F = field(q)
        keys = [U for U in enumerate_subspaces(2 * D, D, F)
                if all(form_eval("symplectic", F, u, v) == 0 for u, v in combinations(U, 2))]
        elems = [subspace_elements(F, U) for U in keys]
        low = q ** (D - 1)
        rows = [[] for _ in keys]
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                if len(elems[i] & elems[j]) == low:
                    rows[i].append(j)
                    rows[j].append(i)
        g = Graph(len(keys), rows, name)
    elif fam == "doubledgrassmann":
        q, t = p
        F = field(q)
        small = enumerate_subspaces(2 * t + 1, t, F)
        big = enumerate_subspaces(2 * t + 1, t + 1, F)
        big_sets = [subspace_elements(F, W) for W in big]
        ns = len(small)
        edges = []
        for i, U in enumerate(small):
            for j, ws in enumerate(big_sets):
                if all(u in ws for u in U):
                    edges.append((i, ns + j))
        g = Graph.from_edges(ns + len(big), edges, name)
    elif fam == "halfdualpolar":
        raise ParamDomain(f"{fam} is parameters-only (no constructor); "
                          "use theory_values / half_dual_polar_descendant_check")
    else:  # pragma: no cover
        raise ParamDomain(f"no constructor for {fam}")

    k = g.regular_degree()
    if k != tv.k or g.n != tv.v:
        raise ParamDomain(
            f"{spec}: constructed (v,k)=({g.n},{k}) != theory ({tv.v},{tv.k})")
    return g


# -- descendant subgraphs --------------------------------------------------------

def descendant(spec: FamilySpec) -> frozenset:
    """The half-size induced subgraph with average valency >= theta_1, as a
    vertex set of construct(spec)'s labeling."""
    fam, p = spec.family, spec.params

    if fam == "johnson":
        n, e = p
        keys = [frozenset(c) for c in combinations(range(1, n + 1), e)]
        return frozenset(i for i, k in enumerate(keys) if 1 in k)
    if fam == "hamming":
        d, q = p
        keys = _hamming_keys(d, q)
        return frozenset(i for i, k in enumerate(keys) if k[0] == 0)
    if fam == "doob":
        d1, d2 = p
        if d2 > 0:
            sizes = [16] * d1 + [4] * d2
            keys = list(product(*[range(s) for s in sizes]))
            return frozenset(i for i, k in enumerate(keys) if k[d1] == 0)
        # 6-wheel in the first Shrikhande factor: a vertex and its hexagon
        sh = shrikhande()
        wheel = {0} | set(sh.adj[0])
        sizes = [16] * d1
        keys = list(product(*[range(s) for s in sizes]))
        return frozenset(i for i, k in enumerate(keys) if k[0] in wheel)
    if fam == "halvedcube":
        (n,) = p
        keys = _even_strings(n)
        return frozenset(i for i, k in enumerate(keys) if k[0] == 0)
    if fam == "foldedcube":
        (n,) = p
        keys = list(product((0, 1), repeat=n - 1))
        return frozenset(i for i, k in enumerate(keys) if k[0] == 0)
    if fam == "foldedhalvedcube":
        (n,) = p
        keys = _even_strings(2 * n - 1)
        return frozenset(i for i, k in enumerate(keys) if k[0] == 0 and k[1] == 0)
    if fam == "odd":
        (k,) = p
        keys = [frozenset(c) for c in combinations(range(1, 2 * k), k - 1)]
        inA = [{1, 2} <= s and not s & {3, 4} for s in keys]
        inB = [{3, 4} <= s and not s & {1, 2} for s in keys]
        return frozenset(i for i in range(len(keys)) if inA[i] or inB[i])
    if fam == "doubledodd":
        (m,) = p
        keys = [frozenset(c) for c in combinations(range(1, 2 * m), m - 1)]
        n = len(keys)
        out = set()
        for i, s in enumerate(keys):
            if 2 in s and 1 not in s:
                out.add(i)              # copy 0
            if 1 in s and 2 not in s:
                out.add(n + i)          # copy 1
        return frozenset(out)
    if fam == "grassmann":
        q, n, e = p
        keys = enumerate_subspaces(n, e, field(q))
        return frozenset(i for i, U in enumerate(keys)
                         if all(row[0] == 0 for row in U))
    if fam == "bilinearforms":
        q, D, e = p
        keys = list(product(product(range(q), repeat=e), repeat=D))
        zero = tuple([0] * e)
        return frozenset(i for i, M in enumerate(keys) if M[0] == zero)
    if fam == "alternatingforms":
        q, n = p
        pairs = _upper_pairs(n)
        keys = list(product(range(q), repeat=len(pairs)))
        touch0 = [t for t, (i, j) in enumerate(pairs) if i == 0]
        return frozenset(ix for ix, k in enumerate(keys)
                         if all(k[t] == 0 for t in touch0))
    if fam == "hermitianforms":
        r, D = p
        q = r * r
        F = field(q)
        fixed = [a for a in range(q) if F.conj(a) == a]
        pairs = _upper_pairs(D)
        keys = sorted(product(*([fixed] * D + [list(range(q))] * len(pairs))))
        touch0 = [D + t for t, (i, j) in enumerate(pairs) if i == 0]
        return frozenset(ix for ix, k in enumerate(keys)
                         if k[0] == 0 and all(k[t] == 0 for t in touch0))
    if fam == "quadraticforms":
        q, n = p
        monos = [(i, j) for i in range(n) for j in range(i, n)]
        keys = list(product(range(q), repeat=len(monos)))
        touch0 = [t for t, (i, j) in enumerate(monos) if i == 0]
        return frozenset(ix for ix, k in enumerate(keys)
                         if all(k[t] == 0 for t in touch0))
    if fam == "dualpolarc":
        q, D = p
        F = field(q)
        keys = [U for U in enumerate_subspaces(2 * D, D, F)
                if all(form_eval("symplectic", F, u, v) == 0 for u, v in combinations(U, 2))]
        e1 = tuple([1] + [0] * (2 * D - 1))
        return frozenset(i for i, U in enumerate(keys)
                         if e1 in subspace_elements(F, U))
    if fam in ("doubledgrassmann", "halfdualpolar"):
        raise NoDescendant(f"{fam}: handled analytically, no explicit descendant")
    raise NoDescendant(f"no descendant for {fam}")  # pragma: no cover


def half_dual_polar_descendant_check(q: int, n: int) -> tuple[bool, str]:
    """Symbolic check that the halved dual polar graph's descendant valency
    exceeds theta_1: q*[n-1 choose 2]_{q^2} > q^3*[n-2 choose 2]_{q^2}."""
    from .algebra import gb
    lhs = q * gb(n - 1, 2, q * q)
    rhs = q ** 3 * gb(n - 2, 2, q * q)
    return lhs > rhs, f"q[{n-1} 2]_(q^2) = {lhs} vs q^3[{n-2} 2]_(q^2) = {rhs}"


# -- default verification grid ---------------------------------------------------

def default_grid() -> list[FamilySpec]:
    """Every family instance verified by the batch harness (complete-graph
    cases D = 1 are excluded: lambda_1 > 1 there and the bounds are vacuous)."""
    specs: list[FamilySpec] = []
    for n in range(4, 10):
        for e in range(2, n // 2 + 1):
            specs.append(FamilySpec("johnson", (n, e)))
    for q in (2, 3, 4):
        for d in range(2, 5):
            specs.append(FamilySpec("hamming", (d, q)))
    specs += [FamilySpec("doob", (1, 0)), FamilySpec("doob", (1, 1))]
    specs += [FamilySpec("halvedcube", (n,)) for n in range(4, 9)]
    specs += [FamilySpec("foldedcube", (n,)) for n in range(4, 9)]
    specs += [FamilySpec("foldedhalvedcube", (n,)) for n in (4, 5)]
    specs += [FamilySpec("odd", (k,)) for k in (3, 4, 5)]
    specs += [FamilySpec("doubledodd", (m,)) for m in (2, 3, 4)]
    specs += [FamilySpec("grassmann", (q, n, 2)) for q in (2, 3) for n in (4, 5)]
    specs += [FamilySpec("bilinearforms", (2, 2, e)) for e in (2, 3)]
    specs += [FamilySpec("alternatingforms", (2, 4))]
    specs += [FamilySpec("hermitianforms", (2, 2))]
    specs += [FamilySpec("quadraticforms", (2, 3))]
    specs += [FamilySpec("dualpolarc", (q, D)) for q in (2, 3) for D in (2, 3)]
    return specs
