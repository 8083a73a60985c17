import json
import math

import pytest

from drgc.cli import main
from drgc.report import default_targets, emit, verify_all, verify_one
from drgc.search import SearchConfig

FAST = SearchConfig(exact_cap=20, seeds=(0, 1), refine_budget=2000)


def test_verify_one_cube():
    r = verify_one("cube", FAST)
    assert r["status"] == "OK"
    assert r["exact_h"] == {"num": 1, "den": 3}
    assert r["spectrum_crosscheck"] is True
    assert r["array"] == "{3,2,1;1,2,3}"
    methods = {c["method"] for c in r["certificates"]}
    assert "descendant" in methods and "girth-cycle" in methods


def test_verify_one_family_target():
    r = verify_one("johnson:6,3", FAST)
    assert r["status"] == "OK"
    assert any(c["method"] == "descendant" and c["verdict"] == "ok"
               for c in r["certificates"])


def test_verify_one_g6_target():
    from drgc.catalog import catalog_load
    from drgc.graph import g6_encode
    g, _ = catalog_load("petersen")
    r = verify_one(g6_encode(g), FAST)
    assert r["status"] == "OK" and r["k"] == 3 and r["n"] == 10


def test_verify_one_parameters_only():
    r = verify_one("gh33-incidence", FAST)
    assert r["parameters_only"] is True
    assert r["status"] == "OPEN"
    assert r["lambda1"]["approx"] == pytest.approx(0.25)
    assert r["theta1"]["u"] == "3"


def test_heawood_lambda1_serialization():
    r = verify_one("heawood", FAST)
    lam = r["lambda1"]
    assert lam["u"] == "1" and lam["w"] == "-1/3" and lam["s"] == 2
    assert abs(lam["approx"] - (3 - math.sqrt(2)) / 3) < 1e-12


def test_emit_json_roundtrip_and_csv_rows():
    cfg = FAST
    report = verify_all(cfg, targets=["cube", "petersen", "gh33-incidence"])
    data = emit(report, "json")
    parsed = json.loads(data)
    assert parsed["schema"] == 1
    assert parsed["counts"]["OK"] == 2 and parsed["counts"]["OPEN"] == 1
    csv_data = emit(report, "csv").decode().splitlines()
    assert csv_data[0] == "# schema: 1"
    expected_rows = sum(len(r["certificates"]) + len(r["bounds"])
                        for r in parsed["records"])
    assert len(csv_data) == expected_rows + 2      # schema comment + header


def test_default_targets_cover_catalog_and_grid():
    targets = default_targets()
    assert "cube" in targets and "gh33-incidence" in targets
    assert "johnson:6,3" in targets and "dualpolarc:3,3" in targets
    assert len(targets) == len(set(targets))


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "flag-gh22" in out and "OPEN" in out


def test_cli_spectrum(capsys):
    assert main(["spectrum", "heawood"]) == 0
    out = capsys.readouterr().out
    assert "{3,2,2;1,1,3}" in out and "1.41421356237" in out


def test_cli_verify_json(tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "petersen", "--exact-cap", "12", "--seeds", "0",
                 "-o", str(out)])
    assert code == 0
    rec = json.loads(out.read_text())["records"][0]
    assert rec["status"] == "OK"


def test_cli_bad_target(capsys):
    assert main(["verify", "johnson:3,2"]) == 1
    assert "error:" in capsys.readouterr().err
