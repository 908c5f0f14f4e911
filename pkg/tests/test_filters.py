"""Filter generation, enumeration, coannihilators, quotients, flatness."""

import pytest
from hypothesis import given, settings, strategies as st

from reslat import filters as fi
from reslat.core import LatticeError, iter_bits
from reslat.harness import FIXTURE_EXPECT, godel_chain, lukasiewicz_chain

from conftest import tokset, toksets


def test_generated_filter_examples(a6):
    assert tokset(a6, fi.generated_filter(a6, a6.mask_of(["d"]))) == {"d", "1"}
    assert tokset(a6, fi.generated_filter(a6, 0)) == {"1"}
    assert tokset(a6, fi.generated_filter(a6, a6.mask_of(["b"]))) == \
        {"a", "b", "d", "1"}


def test_filter_tables_match_reference_sets(fixtures4):
    for lat in fixtures4:
        got = toksets(lat, fi.enumerate_filters(lat).filters)
        assert got == set(FIXTURE_EXPECT[lat.name]["filters"])


def test_incremental_oracle_agrees(fixtures4):
    for lat in list(fixtures4) + [godel_chain(5), lukasiewicz_chain(6)]:
        assert tuple(fi.enumerate_filters(lat).filters) == \
            fi.enumerate_filters_incremental(lat)


def test_two_chain_has_two_filters():
    assert len(fi.enumerate_filters(godel_chain(2))) == 2


def test_meet_join_tables(fixtures4):
    for lat in fixtures4:
        fl = fi.enumerate_filters(lat)
        for i, f in enumerate(fl.filters):
            for j, g in enumerate(fl.filters):
                assert fl.filters[fl.meet_t[i][j]] == f & g
                assert fl.filters[fl.join_t[i][j]] == \
                    fi.generated_filter(lat, f | g)


def test_filters_lattice_is_distributive(fixtures4):
    for lat in fixtures4:
        fl = fi.enumerate_filters(lat)
        for f in fl.filters:
            for g in fl.filters:
                for h in fl.filters:
                    lhs = f & fl.join_mask(g, h)
                    rhs = fi.generated_filter(lat, (f & g) | (f & h))
                    assert lhs == rhs


def test_generation_transport_identities(a6, b6):
    # F(F,x) n F(F,y) = F(F, x v y)  and  F(F,x) v F(F,y) = F(F, x * y)
    for lat in (a6, b6):
        fl = fi.enumerate_filters(lat)
        for f in fl.filters:
            for x in range(lat.n):
                fx = fi.generated_filter(lat, f | (1 << x))
                for y in range(lat.n):
                    fy = fi.generated_filter(lat, f | (1 << y))
                    assert fx & fy == fi.generated_filter(
                        lat, f | (1 << lat.join[x][y]))
                    assert fi.generated_filter(lat, fx | fy) == \
                        fi.generated_filter(lat, f | (1 << lat.prod[x][y]))


def test_every_filter_is_principal(fixtures4):
    for lat in fixtures4:
        for f in fi.enumerate_filters(lat).filters:
            gen = lat.top
            for x in iter_bits(f):
                gen = lat.prod[gen][x]
            assert fi.generated_filter(lat, 1 << gen) == f


def test_coannihilator_examples(a6, b6):
    unit6 = 1 << b6.top
    assert tokset(b6, fi.coannihilator(b6, unit6, b6.mask_of(["a"]))) == {"d", "1"}
    assert fi.coannihilator(a6, a6.mask_of(["d", "1"]), 0) == a6.all_mask
    assert tokset(a6, fi.coannihilator(a6, 1 << a6.top, a6.mask_of(["a"]))) == {"1"}


@settings(max_examples=200)
@given(data=st.data())
def test_coannihilator_is_filter(fixtures4, data):
    lat = data.draw(st.sampled_from(list(fixtures4)))
    f = data.draw(st.sampled_from(list(fi.enumerate_filters(lat).filters)))
    x = data.draw(st.integers(0, lat.all_mask))
    assert fi.is_filter(lat, fi.coannihilator(lat, f, x))


@settings(max_examples=200)
@given(data=st.data())
def test_generated_filter_is_prime_intersection(fixtures4, data):
    from reslat.spectra import prime_filters
    lat = data.draw(st.sampled_from(list(fixtures4)))
    x = data.draw(st.integers(0, lat.all_mask))
    inter = lat.all_mask
    for p in prime_filters(lat):
        if x & ~p == 0:
            inter &= p
    assert fi.generated_filter(lat, x) == inter


def test_coannulet_sublattice(fixtures4):
    # gamma_F sits inside Gamma_F closed under its meet and join
    for lat in fixtures4:
        for f in fi.enumerate_filters(lat).filters:
            gamma = {fi.coannihilator(lat, f, 1 << x) for x in range(lat.n)}
            for u in gamma:
                for v in gamma:
                    assert u & v in gamma
                    joined = fi.coannihilator(
                        lat, f, fi.coannihilator(lat, f, u | v))
                    assert joined in gamma


def test_radical_examples(a6, a8):
    assert tokset(a6, fi.radical(a6, a6.mask_of(["1"]))) == {"d", "1"}
    assert tokset(a8, fi.radical(a8, a8.mask_of(["1"]))) == \
        {"a", "c", "d", "e", "f", "1"}
    assert fi.radical(a6, a6.all_mask) == a6.all_mask


def test_quotient_by_unit_is_isomorphic(a6):
    qr = fi.quotient(a6, 1 << a6.top)
    assert not qr.degenerate
    assert qr.quotient.n == a6.n
    assert all(bin(c).count("1") == 1 for c in qr.classes)


def test_quotient_by_carrier_is_degenerate(a6):
    qr = fi.quotient(a6, a6.all_mask)
    assert qr.degenerate
    assert qr.quotient.n == 1
    assert qr.quotient.bottom == qr.quotient.top


def test_quotient_classes_example(a6):
    qr = fi.quotient(a6, a6.mask_of(["d", "1"]))
    assert toksets(a6, qr.classes) == \
        {frozenset("0"), frozenset(["a", "b"]), frozenset("c"),
         frozenset(["d", "1"])}
    top_class = qr.classes[qr.quotient.top]
    assert tokset(a6, top_class) == {"d", "1"}


def test_quotient_rejects_non_filter(a6):
    with pytest.raises(LatticeError):
        fi.quotient(a6, a6.mask_of(["d"]))


def test_quotient_filters_are_images(fixtures4):
    for lat in fixtures4:
        fl = fi.enumerate_filters(lat)
        for f in fl.filters:
            qr = fi.quotient(lat, f)
            images = {qr.push_mask(g) for g in fl.filters if f & ~g == 0}
            assert images == set(fi.enumerate_filters(qr.quotient).filters)


def test_lattice_ideals_and_omega(b6, c6):
    ideals = fi.lattice_ideals(b6)
    for i in ideals:
        for x in iter_bits(i):
            assert b6.down[x] & ~i == 0
    down_a = fi.principal_ideal(b6, b6.index("a"))
    assert tokset(b6, fi.omega_filter(b6, down_a)) == {"d", "1"}
    assert fi.omega_filter(b6, fi.principal_ideal(b6, b6.bottom)) == 1 << b6.top
    assert fi.omega_filter(b6, b6.all_mask) == b6.all_mask
    assert set(fi.omega_filters(c6)) <= set(fi.enumerate_filters(c6).filters)


def test_coannulets_are_omega_filters(fixtures4):
    for lat in fixtures4:
        omega = set(fi.omega_filters(lat))
        for x in range(lat.n):
            assert fi.x_perp(lat, x) in omega


def test_alpha_filters_match_reference_sets(fixtures4):
    for lat in fixtures4:
        got = toksets(lat, fi.enumerate_alpha(lat))
        assert got == set(FIXTURE_EXPECT[lat.name]["alpha"])


def test_alpha_examples(a6):
    assert not fi.is_alpha_filter(a6, a6.mask_of(["d", "1"]))
    assert fi.alpha_closure(a6, 0) == 1 << a6.top        # {1} is an alpha-filter
    assert fi.alpha_closure(a6, a6.mask_of(["d"])) == a6.all_mask


def test_ideal_generated(b6):
    x, y = b6.index("a"), b6.index("b")
    gen = fi.ideal_generated(b6, (1 << x) | (1 << y))
    c = b6.index("c")
    assert gen == b6.down[c]
    with pytest.raises(LatticeError):
        fi.ideal_generated(b6, 0)


def test_projection_flatness_examples(a6, b6):
    ok, wit = fi.is_projection_flat(b6, b6.mask_of(["d", "1"]))
    assert ok and wit is None
    ok, wit = fi.is_projection_flat(a6, 1 << a6.top)
    assert ok
    ok, wit = fi.is_projection_flat(a6, a6.mask_of(["d", "1"]))
    assert not ok
    g, a, x = wit
    # the witness re-verifies: x lies in (G v F : a) but not in (G : a) v F
    f = a6.mask_of(["d", "1"])
    lhs = fi.coannihilator(a6, fi.generated_filter(a6, g | f), 1 << a)
    rhs = fi.generated_filter(
        a6, fi.coannihilator(a6, g, 1 << a) | f)
    assert (lhs >> x) & 1 and not (rhs >> x) & 1
