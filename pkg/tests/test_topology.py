"""Generic finite-space machinery: separation, irreducibility, point maps."""

import pytest

from reslat import spectra as sp
from reslat.core import LatticeError
from reslat.purity import pure_spectrum
from reslat.topology import (FiniteSpace, PointMap, clopens,
                             irreducible_closed_sets, map_analysis,
                             minimal_neighborhoods, separation_report,
                             space_from_subbasis, specialization_dot,
                             subspace)


def _assorted_spaces(fixtures4):
    out = []
    for lat in fixtures4:
        out.append(sp.spec_space(lat, "h"))
        out.append(sp.spec_space(lat, "d"))
        out.append(sp.spec_space(lat, "patch"))
        out.append(pure_spectrum(lat).space)
    return out


def test_construction_rejects_non_topology():
    with pytest.raises(LatticeError):
        FiniteSpace(("p", "q"), frozenset({0, 0b11, 0b01, 0b10} - {0b11}))
    with pytest.raises(LatticeError):
        FiniteSpace(("p", "q", "r"), frozenset({0, 0b111, 0b011, 0b110}))


def test_subbasis_generation():
    space = space_from_subbasis(("p", "q", "r"), [0b011, 0b110])
    assert 0b010 in space.opens           # the pairwise intersection
    assert 0b111 in space.opens and 0 in space.opens


def test_separation_of_known_spaces(b6, a6):
    spp_b6 = pure_spectrum(b6).space
    rep = separation_report(spp_b6)
    assert rep == {"t0": True, "t1": True, "hausdorff": True, "sober": True,
                   "connected": False,
                   "compact_note": "trivially compact (finite)"}
    one_point = FiniteSpace(("pt",), frozenset({0, 1}))
    rep1 = separation_report(one_point)
    assert all(rep1[k] for k in ("t0", "t1", "hausdorff", "sober", "connected"))
    rep6 = separation_report(sp.spec_space(a6, "h"))
    assert rep6["t0"] and not rep6["t1"]


def test_separation_implications_hold(fixtures4):
    for space in _assorted_spaces(fixtures4):
        rep = separation_report(space)
        if rep["hausdorff"]:
            assert rep["t1"] and rep["sober"]
        if rep["t1"]:
            assert rep["t0"]


def test_sober_matches_generic_point_uniqueness(fixtures4):
    for space in _assorted_spaces(fixtures4):
        unique = all(len(g) == 1 for _, g in irreducible_closed_sets(space))
        assert separation_report(space)["sober"] == unique


def test_irreducible_closed_sets_examples(b6, a6):
    spp = pure_spectrum(b6).space
    irr = irreducible_closed_sets(spp)
    assert sorted(c for c, _ in irr) == [0b01, 0b10]
    assert all(g == (c.bit_length() - 1,) for c, g in irr)

    empty = FiniteSpace((), frozenset({0}))
    assert irreducible_closed_sets(empty) == []

    sh = sp.spec_space(a6, "h")
    whole = [(c, g) for c, g in irreducible_closed_sets(sh) if c == sh.full]
    assert len(whole) == 1
    (c, gens), = whole
    assert [sh.labels[i] for i in gens] == [a6.mask_of(["1"])]


def test_clopens_examples(b6, a6, fixtures4):
    assert len(clopens(pure_spectrum(b6).space)) == 4
    assert len(clopens(pure_spectrum(a6).space)) == 2
    for space in _assorted_spaces(fixtures4):
        cl = clopens(space)
        assert 0 in cl and space.full in cl


def test_identity_is_homeomorphism(b6):
    space = pure_spectrum(b6).space
    pm = PointMap(space, space, tuple(range(space.k)))
    rep = map_analysis(pm)
    assert rep["homeomorphism"] and rep["retraction_onto_image"]


def test_min_d_to_spp_identity_is_homeomorphism(b6):
    spp = pure_spectrum(b6)
    min_d = sp.hull_kernel_space(b6, spp.points, "d")
    pm = PointMap(min_d, spp.space, tuple(range(min_d.k)))
    assert map_analysis(pm)["homeomorphism"]


def test_a8_min_vs_spp_cannot_biject(a8):
    spp = pure_spectrum(a8)
    min_d = sp.hull_kernel_space(a8, sp.minimal_primes(a8), "d")
    assert min_d.k == 2 and spp.space.k == 1
    pm = PointMap(min_d, spp.space, (0, 0))
    rep = map_analysis(pm)
    assert not rep["injective"] and not rep["homeomorphism"]


def test_point_map_totality_enforced(b6):
    space = pure_spectrum(b6).space
    with pytest.raises(LatticeError):
        PointMap(space, space, (0,))
    with pytest.raises(LatticeError):
        PointMap(space, space, (0, 5))


def test_retraction_flag_respects_labels(a6):
    sh = sp.spec_space(a6, "h")
    maxset = set(sp.spectrum(a6, "maximal").points)
    mmask = sum(1 << i for i, p in enumerate(sh.labels) if p in maxset)
    sub = subspace(sh, mmask)
    mapping = []
    for p in sh.labels:
        mapping.append(sub.labels.index(p) if p in maxset else 0)
    rep = map_analysis(PointMap(sh, sub, tuple(mapping)))
    assert rep["retraction_onto_image"] == rep["continuous"]


def test_minimal_neighborhoods(b6):
    space = pure_spectrum(b6).space
    assert minimal_neighborhoods(space) == [0b01, 0b10]


def test_subspace_traces(a6):
    sh = sp.spec_space(a6, "h")
    sub = subspace(sh, 0b11)
    assert sub.k == 2
    assert all(o <= 0b11 for o in sub.opens)


def test_interior_closure_duality(fixtures4):
    for space in _assorted_spaces(fixtures4):
        for mask in range(min(1 << space.k, 64)):
            inter = space.interior(mask)
            assert space.is_open(inter) and inter & ~mask == 0
            cl = space.closure(mask)
            assert space.is_closed(cl) and mask & ~cl == 0


def test_specialization_dot(a6):
    # p -> q iff p lies in the closure of q; {1} is the dense generic point
    sh = sp.spec_space(a6, "h")
    dot = specialization_dot(sh, "SpecA6")
    assert dot.startswith('digraph "SpecA6"')
    assert '"{c,d,1}" -> "{1}";' in dot and '"{a,b,d,1}" -> "{1}";' in dot
