"""Pure filters: the sink, the pure part, and the pure spectrum.

The sink of a filter F collects the elements whose coannulet is comaximal
with F; F is pure when it equals its sink.  Purely-prime filters (the
meet-irreducible proper pure filters) carry the pure-spectrum topology
with opens d_kappa(F) = points not containing F.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LatticeError, ResiduatedLattice, iter_bits, mask_key
from .filters import (cached, enumerate_filters, generated_filter,
                      maximal_filters, omega_filter, x_perp, double_perp)
from .spectra import (D_operator, prime_filters, minimal_primes, spec_space,
                      h_set)
from .topology import FiniteSpace, PointMap, map_analysis


class FormulaMismatch(LatticeError):
    """The closed-form sink computations disagree (transcription bug)."""


def _k(lat, prime_masks) -> int:
    out = lat.all_mask
    for p in prime_masks:
        out &= p
    return out


def sigma_formulas(lat: ResiduatedLattice, f_mask: int) -> dict:
    """All closed forms of the sink, keyed by formula id.

    ``f3`` (coannulet comaximal with F) is the primary computation used by
    :func:`sigma_filter`; the rest exist to be checked against it.
    """
    full = lat.all_mask
    spec = prime_filters(lat)
    h_f = [p for p in spec if f_mask & ~p == 0]
    gh_f = [q for q in spec if any(q & ~p == 0 for p in h_f)]
    mins = set(minimal_primes(lat))

    f3 = 0
    for a in range(lat.n):
        if generated_filter(lat, x_perp(lat, a) | f_mask) == full:
            f3 |= 1 << a

    f4 = 0
    for a in range(lat.n):
        if any((f_mask >> lat.neg(b)) & 1 for b in iter_bits(x_perp(lat, a))):
            f4 |= 1 << a

    i_f = 0
    for a in range(lat.n):
        if generated_filter(lat, double_perp(lat, a) | f_mask) == full:
            i_f |= 1 << a
    f6 = omega_filter(lat, i_f)     # the bottom always lies in I_F

    return {
        "def": _k(lat, gh_f),
        "f1": _k(lat, [q for q in gh_f if q in mins]),
        "f2": _k(lat, [D_operator(lat, p) for p in h_f]),
        "f3": f3,
        "f4": f4,
        "f5": _k(lat, [D_operator(lat, m) for m in maximal_filters(lat)
                       if f_mask & ~m == 0]),
        "f6": f6,
    }


def sigma_filter(lat: ResiduatedLattice, f_mask: int,
                 cross_check: bool = False) -> int:
    """The sink of a filter; optionally verify every closed form agrees."""
    def build():
        full = lat.all_mask
        out = 0
        for a in range(lat.n):
            if generated_filter(lat, x_perp(lat, a) | f_mask) == full:
                out |= 1 << a
        return out

    s = cached(lat, ("sigma", f_mask), build)
    if cross_check:
        forms = sigma_formulas(lat, f_mask)
        for key, val in forms.items():
            if val != s:
                diff = val ^ s
                elt = lat.names[next(iter_bits(diff))]
                raise FormulaMismatch(
                    f"{lat.name}: sink of {lat.set_str(f_mask)}: formula "
                    f"{key} disagrees with f3 at element {elt}")
    return s


def is_pure(lat: ResiduatedLattice, f_mask: int) -> bool:
    return sigma_filter(lat, f_mask) == f_mask


def pure_filters(lat: ResiduatedLattice) -> tuple[int, ...]:
    def build():
        return tuple(f for f in enumerate_filters(lat).filters
                     if is_pure(lat, f))
    return cached(lat, "pure_filters", build)


def rho(lat: ResiduatedLattice, f_mask: int) -> int:
    """Pure part: the largest pure filter inside F (verified, not assumed)."""
    def build():
        inside = [g for g in pure_filters(lat) if g & ~f_mask == 0]
        union = 0
        for g in inside:
            union |= g
        r = generated_filter(lat, union)
        if not is_pure(lat, r) or r & ~f_mask:
            raise LatticeError(f"{lat.name}: pure part of {lat.set_str(f_mask)} "
                               "failed its defining checks")
        if any(g & ~r for g in inside):
            raise LatticeError(f"{lat.name}: pure part is not an upper bound")
        return r
    return cached(lat, ("rho", f_mask), build)


def d_of(lat: ResiduatedLattice, f_mask: int) -> int:
    """d(F) over Spec: index mask of the primes not containing F."""
    spec = prime_filters(lat)
    return ((1 << len(spec)) - 1) ^ h_set(spec, f_mask)


def d_kappa(points, f_mask: int) -> int:
    """d_kappa(F) over a point family: indices of points not containing F."""
    out = 0
    for i, p in enumerate(points):
        if f_mask & ~p:
            out |= 1 << i
    return out


def purely_prime_filters(lat: ResiduatedLattice) -> tuple[int, ...]:
    """Proper pure filters that are meet-irreducible among pure filters."""
    def build():
        pure = pure_filters(lat)
        full = lat.all_mask
        pts = []
        for p in pure:
            if p == full:
                continue
            ok = True
            for i, f1 in enumerate(pure):
                for f2 in pure[i:]:
                    if (f1 & f2) & ~p == 0 and f1 & ~p and f2 & ~p:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                pts.append(p)
        return tuple(sorted(pts, key=mask_key))
    return cached(lat, "purely_prime", build)


@dataclass(frozen=True)
class PureSpectrum:
    """Purely-prime points with the d_kappa topology and per-point flags."""

    lattice: ResiduatedLattice
    points: tuple[int, ...]
    space: FiniteSpace
    purely_maximal: tuple[bool, ...]
    purely_minimal: tuple[bool, ...]

    def __len__(self):
        return len(self.points)


def pure_spectrum(lat: ResiduatedLattice) -> PureSpectrum:
    def build():
        pts = purely_prime_filters(lat)
        pure = pure_filters(lat)
        fam = {d_kappa(pts, f) for f in pure}
        # the basis is already a topology; both identities are asserted
        fl = enumerate_filters(lat)
        for i, f1 in enumerate(pure):
            for f2 in pure[i:]:
                inter = d_kappa(pts, f1) & d_kappa(pts, f2)
                if inter != d_kappa(pts, f1 & f2):
                    raise LatticeError(f"{lat.name}: d_kappa meet identity fails")
                union = d_kappa(pts, f1) | d_kappa(pts, f2)
                if union != d_kappa(pts, fl.join_mask(f1, f2)):
                    raise LatticeError(f"{lat.name}: d_kappa join identity fails")
        space = FiniteSpace(pts, frozenset(fam), f"Spp({lat.name})",
                            tuple(lat.set_str(p) for p in pts))
        proper_pure = [f for f in pure if f != lat.all_mask]
        pmax = tuple(not any(q != p and p & ~q == 0 for q in proper_pure)
                     for p in pts)
        pmin = tuple(not any(q != p and q & ~p == 0 for q in pts) for p in pts)
        return PureSpectrum(lat, pts, space, pmax, pmin)
    return cached(lat, "pure_spectrum", build)


def d_topology(lat: ResiduatedLattice) -> FiniteSpace:
    """Opens d(F) for pure F, on the prime spectrum; coarser than flavor h."""
    def build():
        spec = prime_filters(lat)
        fam = frozenset(d_of(lat, f) for f in pure_filters(lat))
        space = FiniteSpace(spec, fam, f"Spec_D({lat.name})",
                            tuple(lat.set_str(p) for p in spec))
        if not fam <= spec_space(lat, "h").opens:
            raise LatticeError(f"{lat.name}: D-topology not coarser than "
                               "the hull-kernel topology")
        return space
    return cached(lat, "d_topology", build)


def pure_part_map(lat: ResiduatedLattice) -> PointMap:
    """Spec_h -> Spp sending a prime to its pure part (checked landing)."""
    def build():
        spp = pure_spectrum(lat)
        src = spec_space(lat, "h")
        idx = {p: i for i, p in enumerate(spp.points)}
        mapping = []
        for p in prime_filters(lat):
            r = rho(lat, p)
            if r not in idx:
                raise LatticeError(f"{lat.name}: pure part of a prime "
                                   f"{lat.set_str(p)} is not purely prime")
            mapping.append(idx[r])
        return PointMap(src, spp.space, tuple(mapping))
    return cached(lat, "pure_part_map", build)


def pure_part_map_report(lat: ResiduatedLattice) -> dict:
    """Continuity certificate: preimage of d_kappa(F) is d(F), every pure F."""
    pm = pure_part_map(lat)
    spp = pure_spectrum(lat)
    preimages_match = all(
        pm.preimage_mask(d_kappa(spp.points, f)) == d_of(lat, f)
        for f in pure_filters(lat))
    analysis = map_analysis(pm)
    return {"continuous": analysis["continuous"],
            "preimages_match": preimages_match,
            "analysis": analysis}
