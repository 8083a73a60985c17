import pathlib
import shutil

import pytest

from drgc import catalog as cat
from drgc.catalog import catalog_list, catalog_load
from drgc.errors import DataCorrupt, UnknownName
from drgc.graph import intersection_array, line_graph


def test_catalog_size_and_statuses():
    entries = catalog_list()
    assert len(entries) >= 25
    open_entries = [e.name for e in entries if e.status == "OPEN"]
    assert open_entries == ["flag-gh22", "gh33-incidence"]
    po = [e for e in entries if e.source == "parameters-only"]
    assert [e.name for e in po] == ["gh33-incidence"]
    assert float(po[0].lambda1) == pytest.approx(0.25)


def test_every_loadable_entry_verifies():
    for e in catalog_list():
        if e.source == "parameters-only":
            continue
        g, entry = catalog_load(e.name)
        assert intersection_array(g) == entry.array


def test_key_entries():
    g, e = catalog_load("biggs-smith")
    assert g.n == 102 and str(e.array) == "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"
    g, e = catalog_load("foster")
    assert g.n == 90 and e.theta1.triple() == (0, 1, 6)
    g, e = catalog_load("k55-minus-matching")
    assert str(e.array) == "{4,3,1;1,3,4}" and e.theta1 == 1
    g, e = catalog_load("tutte-12-cage")
    assert g.n == 126


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog_load("nonexistent-graph")
    with pytest.raises(UnknownName):
        catalog_load("gh33-incidence")      # parameters-only has no graph


def test_flag_graphs_are_line_graphs():
    hea, _ = catalog_load("heawood")
    flag, e = catalog_load("flag-pg22")
    assert intersection_array(line_graph(hea)) == e.array
    cage, _ = catalog_load("tutte-coxeter")
    flag, e = catalog_load("flag-gq22")
    assert intersection_array(line_graph(cage)) == e.array


def test_incidence_construction_invariants():
    # PG(2,q) incidence: 2(q^2+q+1) vertices, girth 6
    from drgc.graph import girth
    for name, q in (("heawood", 2), ("incidence-pg23", 3)):
        g, _ = catalog_load(name)
        assert g.n == 2 * (q * q + q + 1)
        assert girth(g) == 6
    # W(3,q) incidence: 2(q^2+1)(q+1) vertices, array {q+1,q,q,q;1,1,1,q+1}
    for name, q in (("tutte-coxeter", 2), ("incidence-gq33", 3)):
        g, e = catalog_load(name)
        assert g.n == 2 * (q * q + 1) * (q + 1)
        assert e.array.b == (q + 1, q, q, q) and e.array.c == (1, 1, 1, q + 1)


def test_flag_gq22_local_structure():
    # a_1 = 1 and k = 4: each closed neighborhood is two triangles at a point
    g, e = catalog_load("flag-gq22")
    assert e.array.a(1) == 1 and e.array.k == 4
    for x in (0, 7, 19):
        nbrs = g.adj[x]
        inner = sum(1 for i, u in enumerate(nbrs) for v in nbrs[i + 1:]
                    if v in g.adj[u])
        assert inner == 2


def test_data_corruption_detected(tmp_path, monkeypatch):
    src = pathlib.Path(cat.data_dir())
    work = tmp_path / "catalog"
    shutil.copytree(src, work)
    # swap the Foster graph's data for the Pappus graph's
    (work / "foster.g6").write_text((work / "pappus.g6").read_text())
    monkeypatch.setenv("DRGC_DATA_DIR", str(work))
    old_entries, old_graphs = cat._entries, dict(cat._graphs)
    cat._entries = None
    cat._graphs.clear()
    try:
        with pytest.raises(DataCorrupt):
            catalog_load("foster")
    finally:
        cat._entries = old_entries
        cat._graphs.clear()
        cat._graphs.update(old_graphs)
