import math
from fractions import Fraction
from itertools import combinations

import pytest

from drgc.catalog import catalog_load
from drgc.errors import TooLarge
from drgc.graph import cut_stats
from drgc.search import (SearchConfig, best_upper_bound, exact_cheeger,
                         local_refine, sweep_cut)


def brute_force_cheeger(g):
    """Reference enumeration, written independently of the Gray-code walk."""
    best = None
    for size in range(1, g.n // 2 + 1):
        for S in combinations(range(g.n), size):
            if 2 * size == g.n and 0 not in S:
                continue
            st = cut_stats(g, S)
            r = Fraction(st.boundary, st.vol)
            if best is None or r < best:
                best = r
    return best


def test_exact_cube():
    g, _ = catalog_load("cube")
    h, S = exact_cheeger(g)
    assert h == Fraction(1, 3)
    assert h == brute_force_cheeger(g)


def test_exact_dodecahedron():
    g, _ = catalog_load("dodecahedron")
    h, S = exact_cheeger(g)
    assert h == Fraction(1, 5)
    assert cut_stats(g, S).boundary == Fraction(1, 5) * cut_stats(g, S).vol


def test_exact_petersen_in_window():
    g, e = catalog_load("petersen")
    h, _ = exact_cheeger(g)
    assert h == brute_force_cheeger(g)
    assert Fraction(1, 3) <= h <= Fraction(2, 3)


def test_exact_matches_brute_force_small():
    for name in ("k55-minus-matching", "icosahedron", "heawood"):
        g, _ = catalog_load(name)
        assert exact_cheeger(g)[0] == brute_force_cheeger(g), name


def test_exact_cap():
    g, _ = catalog_load("coxeter")      # 28 vertices
    with pytest.raises(TooLarge):
        exact_cheeger(g, exact_cap=24)
    with pytest.raises(TooLarge):
        SearchConfig(exact_cap=31)


def test_sweep_within_theorem_window():
    for name in ("cube", "petersen", "heawood", "dodecahedron", "foster",
                 "biggs-smith", "desargues"):
        g, e = catalog_load(name)
        cert = sweep_cut(g, e.lambda1)
        lam = float(e.lambda1)
        assert float(cert.ratio) <= math.sqrt(lam * (2 - lam)) + 1e-9, name


def test_sweep_even_bipartite_half():
    g, e = catalog_load("desargues")      # sides of 10
    cert = sweep_cut(g, e.lambda1)
    assert float(cert.ratio) <= 0.5 + 1e-12


def test_refine_never_increases_and_deterministic():
    g, e = catalog_load("dodecahedron")
    start = frozenset(range(10))
    r0 = Fraction(cut_stats(g, start).boundary, cut_stats(g, start).vol)
    a = local_refine(g, start, budget=5000, seed=3, lambda1=e.lambda1)
    b = local_refine(g, start, budget=5000, seed=3, lambda1=e.lambda1)
    assert a.ratio <= r0
    assert a.S == b.S and a.ratio == b.ratio


def test_refine_reaches_optimum_on_dodecahedron():
    g, e = catalog_load("dodecahedron")
    sw = sweep_cut(g, e.lambda1)
    cert = local_refine(g, sw.S, budget=20000, seed=0, lambda1=e.lambda1)
    assert cert.ratio == Fraction(1, 5)


def test_refine_fixed_point():
    g, _ = catalog_load("dodecahedron")
    _, S = exact_cheeger(g)
    cert = local_refine(g, S, budget=1000, seed=0)
    assert cert.ratio == Fraction(1, 5)


def test_exact_beats_all_other_certificates():
    from drgc.witness import girth_cycle_cut, bipartite_half_cut
    g, e = catalog_load("heawood")
    h, _ = exact_cheeger(g)
    assert h <= girth_cycle_cut(g, e.lambda1).ratio
    assert h <= bipartite_half_cut(g, e.lambda1).ratio
    assert h <= sweep_cut(g, e.lambda1).ratio


def test_best_upper_bound_uses_exact_when_small():
    g, e = catalog_load("cube")
    cert = best_upper_bound(g, SearchConfig(), e.lambda1)
    assert cert.method in ("exact",) and cert.ratio == Fraction(1, 3)


def test_best_upper_bound_deterministic_on_large():
    g, e = catalog_load("foster")
    cfg = SearchConfig()
    a = best_upper_bound(g, cfg, e.lambda1)
    b = best_upper_bound(g, cfg, e.lambda1)
    assert a.S == b.S and a.ratio == b.ratio
