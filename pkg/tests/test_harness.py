"""Generators, registry self-inventory, suite determinism and verdicts."""

import json

import numpy as np
import pytest

from reslat import harness as hz
from reslat.core import (RawTables, SizeLimit, ValidationReport, validate)
from reslat.classify import boolean_center


def test_fixture_generator(a6):
    assert hz.fixture("a6") is a6          # cached, cheap to share
    with pytest.raises(Exception):
        hz.fixture("z9")


def test_chain_generators():
    two = hz.godel_chain(2)
    assert boolean_center(two)["elements"] == two.all_mask
    l3 = hz.lukasiewicz_chain(3)
    m = l3.index("x1")
    assert l3.prod[m][m] == l3.bottom and l3.neg(m) == m
    with pytest.raises(SizeLimit):
        hz.lukasiewicz_chain(21)


def test_generate_families():
    fam = hz.InstanceFamily("fixture", ("b6",))
    assert hz.generate(fam)[0].name == "B6"
    prod = hz.InstanceFamily(
        "product", (hz.InstanceFamily("godel_chain", (2,)),
                    hz.InstanceFamily("lukasiewicz_chain", (3,))))
    (lat,) = hz.generate(prod)
    assert lat.n == 6


def test_acceptance_family_shape(family):
    names = [lat.name for lat in family]
    assert len(names) == len(set(names))
    assert {"A6", "B6", "C6", "A8"} <= set(names)
    assert "Godel8" in names and "Luk8" in names
    assert all(lat.n <= 16 for lat in family if "x" in lat.name)
    assert "Godel2xLuk8" in names and "A8xGodel2" in names


def test_registry_matches_manifest():
    hz.self_inventory_check()
    assert len(hz.PROPERTIES) == len(hz.SPEC_ANCHOR_MANIFEST) == 78


def test_suite_refuses_out_of_sync_registry(monkeypatch):
    broken = dict(hz.PROPERTIES)
    broken["made_up_anchor"] = ("core", lambda lat: hz.PASS)
    monkeypatch.setattr(hz, "PROPERTIES", broken)
    with pytest.raises(Exception, match="out of sync"):
        hz.run_theorem_suite([hz.fixture("a6")], "core")


def test_unknown_suite_rejected(a6):
    with pytest.raises(ValueError):
        hz.run_theorem_suite([a6], "everything")


def test_suite_on_fixtures_passes(fixtures4):
    rep = hz.run_theorem_suite(list(fixtures4), "all")
    assert rep.all_pass, rep.failures()
    counts = rep.counts()
    assert counts["fail"] == 0 and counts["pass"] > 200
    # conditional properties are skipped exactly where they do not apply
    assert rep.verdict("A6", "gelspphau").status == "not_applicable"
    assert rep.verdict("A8", "pureinterd").status == "not_applicable"
    assert rep.verdict("A8", "gelspphau").status == "pass"


def test_fixture_expectation_properties_na_off_fixture():
    rep = hz.run_theorem_suite([hz.godel_chain(3)], "core")
    assert rep.verdict("Godel3", "exa6").status == "not_applicable"
    assert rep.verdict("Godel3", "compeleex").status == "not_applicable"


def test_suite_reports_are_deterministic(fixtures4):
    rep1 = hz.run_theorem_suite(list(fixtures4), "purity")
    rep2 = hz.run_theorem_suite(list(fixtures4), "purity")
    blob1 = json.dumps(rep1.as_dict(), sort_keys=True)
    blob2 = json.dumps(rep2.as_dict(), sort_keys=True)
    assert blob1 == blob2


def test_mutated_fixture_fails_validation(a6):
    raw = RawTables("A6-broken", list(a6.names), np.array(a6.leq_np),
                    np.array(a6.prod_np), a6.bottom, a6.top)
    ai, ci = a6.index("a"), a6.index("c")
    raw.prod[ai, ci] = raw.prod[ci, ai] = ai
    rep = validate(raw)
    assert isinstance(rep, ValidationReport) and not rep.ok
    # the suite only accepts validated instances, so the pipeline stops here


def test_verdict_witness_on_failure(a6, monkeypatch):
    # force one fail verdict and check it carries a witness dict
    rep = hz.run_theorem_suite([a6], "core")
    assert rep.all_pass
    broken = dict(hz.PROPERTIES)
    broken["resproposition"] = (
        "core", lambda lat: hz._fail({"triple": ["a", "b", "c"]}))
    monkeypatch.setattr(hz, "PROPERTIES", broken)
    monkeypatch.setattr(hz, "SPEC_ANCHOR_MANIFEST",
                        tuple(broken))
    rep = hz.run_theorem_suite([a6], "core")
    assert not rep.all_pass
    (inst, pid, verdict), = rep.failures()
    assert verdict.witness == {"triple": ["a", "b", "c"]}
    assert rep.as_dict()["counts"]["fail"] == 1


def test_conjecture_recorded(fixtures4):
    rep = hz.run_theorem_suite(list(fixtures4), "spp")
    assert set(rep.conjecture_spp_is_purely_maximal) == \
        {"A6", "B6", "C6", "A8"}
    assert all(rep.conjecture_spp_is_purely_maximal.values())


def test_suite_groups_partition_registry():
    groups = {grp for grp, _ in hz.PROPERTIES.values()}
    assert groups == set(hz.GROUPS)
    total = sum(1 for _ in hz.PROPERTIES)
    assert total == sum(
        sum(1 for g, _ in hz.PROPERTIES.values() if g == grp)
        for grp in hz.GROUPS)
