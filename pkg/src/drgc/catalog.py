"""Named graphs: constructed from incidence geometry where a recipe exists,
loaded from embedded graph6 data otherwise.

Trust is established exclusively at load time: every graph must reproduce the
manifest's intersection array and second eigenvalue, so embedded data can
never silently drift.  One entry (gh33-incidence) is parameters-only and has
no graph.
"""

from __future__ import annotations

import os
import pathlib
from dataclasses import dataclass
from fractions import Fraction

from . import constructions as cons
from .errors import DataCorrupt, UnknownName
from .exact import SqrtVal
from .families import FamilySpec, construct
from .graph import (Graph, IntersectionArray, bipartite_double, g6_decode,
                    intersection_array, line_graph)
from .spectral import drg_spectrum, exact_theta1


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: str                       # constructed | embedded | parameters-only
    array: IntersectionArray
    theta1: SqrtVal
    status: str                       # OK | OPEN
    graphref: str

    @property
    def family(self) -> FamilySpec | None:
        if self.graphref.startswith("family:"):
            return FamilySpec.parse(self.graphref[len("family:"):])
        return None

    @property
    def lambda1(self) -> SqrtVal:
        k = self.array.k
        return (SqrtVal(k) - self.theta1) / k


_BUILDERS = {
    "pg2-incidence-2": lambda: cons.pg2_incidence(2, "heawood"),
    "pg2-incidence-3": lambda: cons.pg2_incidence(3, "incidence-pg23"),
    "nonincidence-pg22": cons.pg2_nonincidence,
    "gq-incidence-2": lambda: cons.symplectic_gq_incidence(2, "tutte-coxeter"),
    "gq-incidence-3": lambda: cons.symplectic_gq_incidence(3, "incidence-gq33"),
    "ag24-minus-class": lambda: cons.ag2_minus_parallel_class(4, "incidence-ag24"),
    "petersen": cons.petersen,
    "shrikhande": cons.shrikhande,
    "k55-minus-matching": cons.k55_minus_matching,
}

_entries: dict[str, CatalogEntry] | None = None
_graphs: dict[str, Graph] = {}


def data_dir() -> pathlib.Path:
    override = os.environ.get("DRGC_DATA_DIR")
    if override:
        return pathlib.Path(override)
    return pathlib.Path(__file__).parent / "data" / "catalog"


def _parse_theta1(text: str) -> SqrtVal:
    u, w, s = text.split("|")
    return SqrtVal(Fraction(u), Fraction(w), int(s))


def _load_manifest() -> dict[str, CatalogEntry]:
    global _entries
    if _entries is not None:
        return _entries
    path = data_dir() / "manifest.tsv"
    entries: dict[str, CatalogEntry] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise DataCorrupt(f"manifest line has {len(fields)} fields: {line!r}")
        name, source, array, theta1, status, graphref = fields
        entries[name] = CatalogEntry(name, source, IntersectionArray.parse(array),
                                     _parse_theta1(theta1), status, graphref)
    _entries = entries
    return entries


def catalog_list() -> list[CatalogEntry]:
    """All entries in manifest order (including the parameters-only one)."""
    return list(_load_manifest().values())


def _build(entry: CatalogEntry) -> Graph:
    ref = entry.graphref
    kind, _, arg = ref.partition(":")
    if kind == "g6":
        text = (data_dir() / arg).read_text(encoding="ascii")
        return g6_decode(text, name=entry.name)
    if kind == "builder":
        return _BUILDERS[arg]()
    if kind == "family":
        return construct(FamilySpec.parse(arg)).renamed(entry.name)
    if kind == "line":
        return line_graph(catalog_load(arg)[0]).renamed(entry.name)
    if kind == "double":
        return bipartite_double(catalog_load(arg)[0]).renamed(entry.name)
    raise DataCorrupt(f"{entry.name}: bad graphref {ref!r}")


def catalog_load(name: str):
    """Verified (Graph, CatalogEntry) pair; raises for the parameters-only entry."""
    entries = _load_manifest()
    if name not in entries:
        raise UnknownName(f"no catalog entry {name!r}")
    entry = entries[name]
    if entry.source == "parameters-only":
        raise UnknownName(f"{name} is parameters-only (no graph)")
    if name not in _graphs:
        g = _build(entry)
        ia = intersection_array(g)
        if ia != entry.array:
            raise DataCorrupt(f"{name}: array {ia} != expected {entry.array}")
        t1 = drg_spectrum(ia).theta1
        if abs(t1 - float(entry.theta1)) > 1e-9:
            raise DataCorrupt(f"{name}: theta1 {t1} != expected {float(entry.theta1)}")
        exact = exact_theta1(ia)
        if exact is not None and exact != entry.theta1:
            raise DataCorrupt(f"{name}: exact theta1 {exact} != {entry.theta1}")
        _graphs[name] = g
    return _graphs[name], entry


def catalog_entry(name: str) -> CatalogEntry:
    entries = _load_manifest()
    if name not in entries:
        raise UnknownName(f"no catalog entry {name!r}")
    return entries[name]
