"""Boolean center, direct summands, structural classification, certificates.

Every classification flag carries a witness: a re-verifiable violating
configuration when false, the identifier of the exhaustive check when
true.  The Gelfand and mp structure reports refuse non-qualifying inputs
outright; each of their clauses certifies one structural statement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LatticeError, ResiduatedLattice, iter_bits, mask_key
from .filters import (cached, coannihilator, enumerate_filters,
                      generated_filter, maximal_filters, omega_filters,
                      radical, x_perp)
from .spectra import (D_operator, hull_kernel_space, minimal_primes,
                      prime_filters, spec_space)
from .purity import (d_kappa, d_topology, pure_filters, pure_spectrum,
                     rho, sigma_filter)
from .topology import (PointMap, clopens, map_analysis, separation_report,
                       subspace)


class CenterMismatch(LatticeError):
    """The two Boolean-center computations disagree."""


class BijectionFailure(LatticeError):
    """The complemented-element/clopen correspondence is not a bijection."""


class NotApplicable(LatticeError):
    """A structure report was requested for a non-qualifying lattice."""


class GelfandCertFailure(LatticeError):
    def __init__(self, clause, detail):
        super().__init__(f"clause {clause}: {detail}")
        self.clause = clause


class MpCertFailure(LatticeError):
    def __init__(self, clause, detail):
        super().__init__(f"clause {clause}: {detail}")
        self.clause = clause


def boolean_center(lat: ResiduatedLattice) -> dict:
    """Complemented elements with their (unique) complements.

    Computed directly from the lattice order and cross-checked against
    the negation form {a | a v -a = 1}; the product/meet agreement of
    central elements is asserted as well.
    """
    def build():
        n, top, bottom = lat.n, lat.top, lat.bottom
        elems = 0
        complements = {}
        for x in range(n):
            comps = [y for y in range(n)
                     if lat.join[x][y] == top and lat.meet[x][y] == bottom]
            if comps:
                elems |= 1 << x
                if len(comps) != 1:
                    raise CenterMismatch(
                        f"{lat.name}: {lat.names[x]} has {len(comps)} complements")
                complements[x] = comps[0]
        via_neg = 0
        for a in range(n):
            if lat.join[a][lat.neg(a)] == top:
                via_neg |= 1 << a
        if via_neg != elems:
            raise CenterMismatch(
                f"{lat.name}: complemented elements {lat.set_str(elems)} != "
                f"{{a | a v -a = 1}} = {lat.set_str(via_neg)}")
        for e in iter_bits(elems):
            if complements[e] != lat.neg(e):
                raise CenterMismatch(
                    f"{lat.name}: complement of {lat.names[e]} is not its negation")
            for x in range(n):
                if lat.prod[e][x] != lat.meet[e][x]:
                    raise CenterMismatch(
                        f"{lat.name}: {lat.names[e]}*{lat.names[x]} != "
                        f"{lat.names[e]}^{lat.names[x]}")
        return {"elements": elems, "complements": complements}
    return cached(lat, "boolean_center", build)


def direct_summands(lat: ResiduatedLattice) -> tuple[int, ...]:
    """Filters F with F v F-perp = A, cross-checked two more ways."""
    def build():
        fl = enumerate_filters(lat)
        full = lat.all_mask
        unit = 1 << lat.top
        by_perp = []
        for f in fl.filters:
            fperp = coannihilator(lat, unit, f)
            if generated_filter(lat, f | fperp) == full:
                by_perp.append(f)
        beta = boolean_center(lat)["elements"]
        by_center = sorted({lat.up[e] for e in iter_bits(beta)}, key=mask_key)
        by_complement = [f for f in fl.filters
                         if any(f & g == unit
                                and generated_filter(lat, f | g) == full
                                for g in fl.filters)]
        if not (by_perp == by_center == by_complement):
            raise LatticeError(
                f"{lat.name}: direct-summand computations disagree: "
                f"{[lat.set_str(f) for f in by_perp]} / "
                f"{[lat.set_str(f) for f in by_center]} / "
                f"{[lat.set_str(f) for f in by_complement]}")
        return tuple(by_perp)
    return cached(lat, "direct_summands", build)


@dataclass(frozen=True)
class Flag:
    value: bool
    witness: dict


@dataclass(frozen=True)
class ClassificationReport:
    lattice: ResiduatedLattice
    gelfand: Flag
    mp: Flag
    hyperarchimedean: Flag
    directly_indecomposable: Flag
    boolean_center: int
    direct_summands: tuple[int, ...]

    def flags(self) -> dict:
        return {"gelfand": self.gelfand, "mp": self.mp,
                "hyperarchimedean": self.hyperarchimedean,
                "directly_indecomposable": self.directly_indecomposable}


def classify(lat: ResiduatedLattice) -> ClassificationReport:
    def build():
        spec = prime_filters(lat)
        maxf = maximal_filters(lat)
        minp = minimal_primes(lat)
        toks = lat.tokens_of

        gelfand = Flag(True, {"check": "every prime under exactly one maximal"})
        for p in spec:
            over = [m for m in maxf if p & ~m == 0]
            if len(over) != 1:
                gelfand = Flag(False, {"prime": toks(p),
                                       "maximals": [toks(m) for m in over]})
                break

        mp = Flag(True, {"check": "every prime over exactly one minimal prime"})
        for p in spec:
            under = [q for q in minp if q & ~p == 0]
            if len(under) != 1:
                mp = Flag(False, {"prime": toks(p),
                                  "minimal_primes": [toks(q) for q in under]})
                break

        antichain = True
        witness = {"check": "Spec is an antichain"}
        for p in spec:
            for q in spec:
                if p != q and p & ~q == 0:
                    antichain = False
                    witness = {"lower": toks(p), "upper": toks(q)}
                    break
            if not antichain:
                break
        fl = enumerate_filters(lat)
        via_summands = set(direct_summands(lat)) == set(fl.filters)
        via_pure = set(pure_filters(lat)) == set(fl.filters)
        if not (antichain == via_summands == via_pure):
            raise LatticeError(f"{lat.name}: hyperarchimedean cross-checks disagree")
        hyper = Flag(antichain, witness)

        beta = boolean_center(lat)["elements"]
        trivial = (1 << lat.bottom) | (1 << lat.top)
        indec = beta == trivial
        via_conn = separation_report(pure_spectrum(lat).space)["connected"]
        if indec != via_conn:
            raise LatticeError(
                f"{lat.name}: direct indecomposability cross-checks disagree")
        if indec:
            ind = Flag(True, {"check": "Boolean center is {0,1}"})
        else:
            extra = next(e for e in iter_bits(beta & ~trivial))
            ind = Flag(False, {"central_element": lat.names[extra]})

        return ClassificationReport(lat, gelfand, mp, hyper, ind, beta,
                                    direct_summands(lat))
    return cached(lat, "classification", build)


def verify_flag_witness(lat: ResiduatedLattice, name: str, flag: Flag) -> bool:
    """Re-verify a false flag's witness as an actual violating configuration."""
    if flag.value:
        return "check" in flag.witness
    w = flag.witness
    if name == "gelfand":
        p = lat.mask_of(w["prime"])
        ms = [lat.mask_of(t) for t in w["maximals"]]
        maxf = set(maximal_filters(lat))
        actual = [m for m in maxf if p & ~m == 0]
        return (p in set(prime_filters(lat)) and sorted(ms) == sorted(actual)
                and len(ms) != 1)
    if name == "mp":
        p = lat.mask_of(w["prime"])
        qs = [lat.mask_of(t) for t in w["minimal_primes"]]
        actual = [q for q in minimal_primes(lat) if q & ~p == 0]
        return (p in set(prime_filters(lat)) and sorted(qs) == sorted(actual)
                and len(qs) != 1)
    if name == "hyperarchimedean":
        lo, up = lat.mask_of(w["lower"]), lat.mask_of(w["upper"])
        spec = set(prime_filters(lat))
        return lo in spec and up in spec and lo != up and lo & ~up == 0
    if name == "directly_indecomposable":
        e = lat.index(w["central_element"])
        beta = boolean_center(lat)["elements"]
        return bool((beta >> e) & 1) and e not in (lat.bottom, lat.top)
    raise ValueError(f"unknown flag {name!r}")


def grothendieck_check(lat: ResiduatedLattice) -> dict:
    """e -> d_kappa(F(e)) must biject the center onto the Spp clopens."""
    spp = pure_spectrum(lat)
    beta = boolean_center(lat)["elements"]
    pairs = []
    seen = {}
    for e in iter_bits(beta):
        image = d_kappa(spp.points, lat.up[e])
        if image in seen:
            raise BijectionFailure(
                f"{lat.name}: {lat.names[seen[image]]} and {lat.names[e]} "
                "map to the same clopen")
        seen[image] = e
        pairs.append((e, image))
    clop = set(clopens(spp.space))
    images = set(seen)
    if not images <= clop:
        raise BijectionFailure(f"{lat.name}: some image is not clopen")
    if images != clop:
        missing = next(iter(clop - images))
        raise BijectionFailure(
            f"{lat.name}: clopen {missing:b} has no central preimage")
    return {"pairs": pairs, "clopen_count": len(clop)}


def _maximal_point_mask(lat) -> int:
    spec = prime_filters(lat)
    maxset = set(maximal_filters(lat))
    out = 0
    for i, p in enumerate(spec):
        if p in maxset:
            out |= 1 << i
    return out


def gelfand_structure(lat: ResiduatedLattice) -> dict:
    """Certify the Gelfand structure theorems clause by clause."""
    if not classify(lat).gelfand.value:
        raise NotApplicable(f"{lat.name} is not Gelfand")

    fl = enumerate_filters(lat)
    spp = pure_spectrum(lat)
    maxf = maximal_filters(lat)
    clauses = []

    def certify(cid, ok, detail=""):
        if not ok:
            raise GelfandCertFailure(cid, detail or "failed")
        clauses.append((cid, detail))

    max_h = hull_kernel_space(lat, sorted(maxf, key=mask_key), "h",
                              f"Max_h({lat.name})")
    idx = {p: i for i, p in enumerate(spp.points)}
    landing = [rho(lat, m) for m in max_h.labels]
    certify("rho_m_well_defined", all(r in idx for r in landing))
    rho_m = PointMap(max_h, spp.space, tuple(idx[r] for r in landing))
    certify("rho_m_homeomorphism", map_analysis(rho_m)["homeomorphism"])

    pmax = {p for p, is_m in zip(spp.points, spp.purely_maximal) if is_m}
    certify("spp_equals_max_sigma", set(spp.points) == pmax)
    certify("spp_equals_rho_of_max", set(spp.points) == set(landing))

    certify("spp_hausdorff", separation_report(spp.space)["hausdorff"])

    spec_h = spec_space(lat, "h")
    closed_forms = set()
    for c in spec_h.closed_sets:
        ms = [spec_h.labels[i] for i in iter_bits(c)
              if spec_h.labels[i] in set(maxf)]
        g = lat.all_mask
        for m in ms:
            g &= D_operator(lat, m)
        closed_forms.add(g)
    certify("pure_filters_closed_form", closed_forms == set(pure_filters(lat)),
            "pure filters are exactly the D-intersections over h-closed sets")

    mmask = _maximal_point_mask(lat)
    on_max_h = subspace(spec_h, mmask)
    on_max_d = subspace(d_topology(lat), mmask)
    certify("hull_kernel_equals_d_topology_on_max",
            on_max_h.opens == on_max_d.opens)

    adj = all((rho(lat, f) & ~g == 0) == (f & ~radical(lat, g) == 0)
              for f in fl.filters for g in fl.filters)
    certify("rho_rad_adjunction", adj)

    hm = lambda f: frozenset(m for m in maxf if f & ~m == 0)
    certify("hm_of_sigma_unchanged",
            all(hm(f) == hm(sigma_filter(lat, f)) for f in fl.filters))
    certify("rho_below_max_implies_f_below",
            all(not (rho(lat, f) & ~m == 0) or f & ~m == 0
                for f in fl.filters for m in maxf))
    certify("rho_equals_sigma",
            all(rho(lat, f) == sigma_filter(lat, f) for f in fl.filters))
    return {"lattice": lat.name, "qualifies": True, "clauses": clauses}


def f_a(lat: ResiduatedLattice, a: int) -> int:
    """F_a: intersection of the pure parts of the maximal filters over a."""
    out = lat.all_mask
    for m in maximal_filters(lat):
        if (m >> a) & 1:
            out &= rho(lat, m)
    return out


def mp_structure(lat: ResiduatedLattice) -> dict:
    """Certify the mp structure theorems clause by clause."""
    if not classify(lat).mp.value:
        raise NotApplicable(f"{lat.name} is not mp")

    full = lat.all_mask
    unit = 1 << lat.top
    minp = minimal_primes(lat)
    maxf = maximal_filters(lat)
    pure = set(pure_filters(lat))
    spp = pure_spectrum(lat)
    clauses = []

    def certify(cid, ok, detail=""):
        if not ok:
            raise MpCertFailure(cid, detail or "failed")
        clauses.append((cid, detail))

    certify("minimal_primes_comaximal",
            all(generated_filter(lat, p | q) == full
                for p in minp for q in minp if p != q))
    certify("comaximal_coannulets",
            all(lat.join[x][y] != lat.top
                or generated_filter(lat, x_perp(lat, x) | x_perp(lat, y)) == full
                for x in range(lat.n) for y in range(lat.n)))
    certify("omega_filters_pure", set(omega_filters(lat)) <= pure)
    certify("coannulets_pure",
            all(x_perp(lat, x) in pure for x in range(lat.n)))
    certify("d_of_maximal_pure_and_minimal",
            all(D_operator(lat, m) in pure and D_operator(lat, m) in set(minp)
                for m in maxf))
    pmax = {p for p, is_m in zip(spp.points, spp.purely_maximal) if is_m}
    certify("min_equals_max_sigma", set(minp) == pmax)
    certify("min_equals_spp", set(minp) == set(spp.points))
    certify("spp_in_max_sigma", set(spp.points) <= pmax)

    min_d = hull_kernel_space(lat, sorted(minp, key=mask_key), "d",
                              f"Min_d({lat.name})")
    pos = {p: i for i, p in enumerate(min_d.labels)}
    iota = PointMap(spp.space, min_d, tuple(pos[p] for p in spp.points))
    certify("iota_spp_to_min_d_homeomorphism",
            map_analysis(iota)["homeomorphism"])
    certify("min_d_hausdorff", separation_report(min_d)["hausdorff"])
    certify("spp_hausdorff", separation_report(spp.space)["hausdorff"])

    def kh_m(f):
        out = full
        for m in minp:
            if f & ~m == 0:
                out &= m
        return out

    certify("proper_pure_equal_kh_m",
            all(kh_m(f) == f for f in pure if f != full))

    spec_d = spec_space(lat, "d")
    spec = prime_filters(lat)
    minset = set(minp)
    forms = set()
    for c in spec_d.closed_sets:
        g = full
        for i in iter_bits(c):
            if spec[i] in minset:
                g &= spec[i]
        forms.add(g)
    certify("pure_filters_closed_form_min", forms == pure)

    certify("coannulet_meets_fa_trivially",
            all(x_perp(lat, a) & f_a(lat, a) == unit for a in range(lat.n)))
    certify("minimal_prime_is_join_of_fa",
            all(generated_filter(
                lat, _select_union(lat, m)) == m for m in minp))

    min_h = hull_kernel_space(lat, sorted(minp, key=mask_key), "h",
                              f"Min_h({lat.name})")
    iota_h = PointMap(min_h, spp.space,
                      tuple({p: i for i, p in enumerate(spp.points)}[q]
                            for q in min_h.labels))
    certify("min_h_homeomorphic_to_spp",
            map_analysis(iota_h)["homeomorphism"],
            "finiteness makes the compactness hypothesis vacuous")
    return {"lattice": lat.name, "qualifies": True, "clauses": clauses}


def _select_union(lat, m_mask: int) -> int:
    out = 0
    for a in iter_bits(m_mask):
        out |= f_a(lat, a)
    return out
