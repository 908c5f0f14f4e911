"""Golden-file and round-trip tests for every CLI subcommand."""

import importlib.resources
import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from reslat.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"
REGEN = bool(os.environ.get("REGEN_GOLDENS"))

FIXTURE_PATHS = {
    name: str(importlib.resources.files("reslat") / "fixtures" / f"{name}.rlat")
    for name in ("a6", "b6", "c6", "a8")
}
FILTER_ARG = {"a6": "c,d,1", "b6": "a,c,1", "c6": "1", "a8": "f,1"}


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return {"exit": code, "stdout": out.getvalue(), "stderr": err.getvalue()}


def check_golden(name, argv):
    got = run_cli(argv)
    path = GOLDEN_DIR / f"{name}.json"
    if REGEN:
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(json.dumps(got, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
    want = json.loads(path.read_text(encoding="utf-8"))
    assert got == want, f"golden mismatch for {name}"
    return got


SUBCOMMANDS = [
    ("validate", lambda p, f: ["validate", p]),
    ("filters", lambda p, f: ["filters", p]),
    ("spectrum", lambda p, f: ["spectrum", p, "--kind", "maximal"]),
    ("alpha", lambda p, f: ["alpha", p]),
    ("pure", lambda p, f: ["pure", p]),
    ("sigma", lambda p, f: ["sigma", p, "--filter", f]),
    ("rho", lambda p, f: ["rho", p, "--filter", f]),
    ("spp", lambda p, f: ["spp", p]),
    ("dtop", lambda p, f: ["dtop", p]),
    ("classify", lambda p, f: ["classify", p]),
    ("gelfand", lambda p, f: ["gelfand", p]),
    ("mp", lambda p, f: ["mp", p]),
    ("quotient", lambda p, f: ["quotient", p, "--filter", f]),
    ("check", lambda p, f: ["check", p, "--suite", "core"]),
]


@pytest.mark.parametrize("fixture_name", list(FIXTURE_PATHS))
@pytest.mark.parametrize("command,mk", SUBCOMMANDS,
                         ids=[c for c, _ in SUBCOMMANDS])
def test_subcommand_golden(command, mk, fixture_name):
    path = FIXTURE_PATHS[fixture_name]
    check_golden(f"{fixture_name}__{command}",
                 mk(path, FILTER_ARG[fixture_name]))


def test_gen_goldens():
    check_golden("gen__godel3", ["gen", "--family", "godel", "--size", "3"])
    check_golden("gen__luk4", ["gen", "--family", "lukasiewicz", "--size", "4"])


def test_gen_roundtrip(tmp_path):
    res = run_cli(["gen", "--family", "lukasiewicz", "--size", "4"])
    assert res["exit"] == 0
    path = tmp_path / "l4.rlat"
    path.write_text(res["stdout"], encoding="utf-8")
    assert run_cli(["validate", str(path)])["exit"] == 0
    res2 = run_cli(["gen", "--product", str(path), str(path)])
    assert res2["exit"] == 0 and "Luk4xLuk4" in res2["stdout"]


def test_gen_size_cap(tmp_path):
    res = run_cli(["gen", "--family", "godel", "--size", "5"])
    path = tmp_path / "g5.rlat"
    path.write_text(res["stdout"], encoding="utf-8")
    out = run_cli(["gen", "--product", str(path), str(path)])
    assert out["exit"] == 3


def test_json_outputs_round_trip():
    for fixture_name, path in FIXTURE_PATHS.items():
        for command, mk in SUBCOMMANDS:
            if command in ("gelfand", "mp"):
                continue                      # refusals covered separately
            argv = mk(path, FILTER_ARG[fixture_name]) + ["--json"]
            first = run_cli(argv)
            second = run_cli(argv)
            assert first == second            # recomputation is identical
            doc = json.loads(first["stdout"])
            assert set(doc) == {"lattice", "command", "result", "witnesses"}


def test_json_sets_are_token_arrays_in_file_order():
    res = run_cli(["filters", FIXTURE_PATHS["b6"], "--json"])
    doc = json.loads(res["stdout"])
    assert ["a", "c", "1"] in doc["result"]["filters"]


def test_classify_json_reports_witnesses():
    res = run_cli(["classify", FIXTURE_PATHS["a8"], "--json"])
    doc = json.loads(res["stdout"])
    flags = doc["result"]["flags"]
    assert flags["gelfand"]["value"] is True
    assert flags["mp"]["value"] is False
    assert any(w["flag"] == "mp" for w in doc["witnesses"])


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.rlat"
    bad.write_text("lattice Bad\nelements 0 a 1\nbottom 0\ntop 1\n"
                   "cover 0 a\ncover a 1\nmul a a 1\nend\n", encoding="utf-8")
    assert run_cli(["validate", str(bad)])["exit"] == 1
    assert run_cli(["gelfand", FIXTURE_PATHS["a6"]])["exit"] == 2
    assert run_cli(["mp", FIXTURE_PATHS["a8"]])["exit"] == 2
    assert run_cli(["validate", str(tmp_path / "missing.rlat")])["exit"] == 3
    assert run_cli(["spectrum", FIXTURE_PATHS["a6"], "--kind", "weird"])["exit"] == 3
    assert run_cli(["sigma", FIXTURE_PATHS["a6"], "--filter", "d"])["exit"] == 3
    assert run_cli(["sigma", FIXTURE_PATHS["a6"], "--filter", "q,1"])["exit"] == 3
    truncated = tmp_path / "trunc.rlat"
    truncated.write_text("lattice X\nelements 0 1\n", encoding="utf-8")
    assert run_cli(["validate", str(truncated)])["exit"] == 3


def test_unknown_flag_rejected():
    assert run_cli(["filters", FIXTURE_PATHS["a6"], "--frobnicate"])["exit"] == 3


def test_check_reports_violation_exit(monkeypatch, tmp_path):
    # a valid instance with all properties passing exits 0
    assert run_cli(["check", FIXTURE_PATHS["c6"], "--suite", "spp"])["exit"] == 0


def test_dot_outputs(tmp_path):
    hasse = tmp_path / "hasse.dot"
    res = run_cli(["validate", FIXTURE_PATHS["a6"], "--dot", str(hasse)])
    assert res["exit"] == 0
    assert hasse.read_text(encoding="utf-8").startswith("digraph")
    spp_dot = tmp_path / "spp.dot"
    res = run_cli(["spp", FIXTURE_PATHS["b6"], "--dot", str(spp_dot)])
    assert res["exit"] == 0
    text = spp_dot.read_text(encoding="utf-8")
    assert text.startswith("digraph") and "{a,c,1}" in text


def test_root_fixture_copies_match_package_data():
    root = Path(__file__).parent.parent / "fixtures"
    for name, pkg_path in FIXTURE_PATHS.items():
        assert (root / f"{name}.rlat").read_bytes() == \
            Path(pkg_path).read_bytes()
