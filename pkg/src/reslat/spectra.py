"""Prime, maximal and minimal-prime spectra with their hull-kernel topologies.

Spectrum points are filters (bitmasks over lattice elements); spaces over
them re-index the points 0..k-1 and carry the filter masks as labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LatticeError, ResiduatedLattice, iter_bits, mask_key
from .filters import cached, enumerate_filters, maximal_filters, x_perp
from .topology import FiniteSpace, space_from_subbasis


class NotPrime(LatticeError):
    """The argument must be a prime filter."""


def is_prime(lat: ResiduatedLattice, mask: int) -> bool:
    """Proper filter whose membership splits every join."""
    if mask == lat.all_mask:
        return False
    fl = enumerate_filters(lat)
    if mask not in fl.index:
        return False
    join = lat.join
    for x in range(lat.n):
        if (mask >> x) & 1:
            continue
        row = join[x]
        for y in range(x + 1, lat.n):
            if (mask >> row[y]) & 1 and not (mask >> y) & 1:
                return False
    return True


def prime_filters(lat: ResiduatedLattice) -> tuple[int, ...]:
    def build():
        return tuple(f for f in enumerate_filters(lat).proper
                     if is_prime(lat, f))
    return cached(lat, "prime_filters", build)


def minimal_primes(lat: ResiduatedLattice) -> tuple[int, ...]:
    def build():
        spec = prime_filters(lat)
        return tuple(p for p in spec
                     if not any(q != p and q & ~p == 0 for q in spec))
    return cached(lat, "minimal_primes", build)


@dataclass(frozen=True)
class SpectrumSelection:
    """A chosen family of prime filters, in canonical order."""

    lattice: ResiduatedLattice
    kind: str
    points: tuple[int, ...]

    def __post_init__(self):
        lat = self.lattice
        spec = set(prime_filters(lat))
        for p in self.points:
            if p == lat.all_mask:
                raise LatticeError(f"{lat.name}: spectrum point is not proper")
            if p not in spec:
                raise LatticeError(f"{lat.name}: {lat.set_str(p)} is not prime")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def spectrum(lat: ResiduatedLattice, kind: str, over: int = 0) -> SpectrumSelection:
    """The requested prime subfamily.

    ``kind``: prime | maximal | minimal_prime | minimal_prime_over
    (the latter takes the reference subset ``over``).
    """
    spec = prime_filters(lat)
    if kind == "prime":
        pts = spec
    elif kind == "maximal":
        pts = tuple(p for p in spec
                    if not any(q != p and p & ~q == 0 for q in spec))
        if set(pts) != set(maximal_filters(lat)):
            raise LatticeError(f"{lat.name}: maximal primes disagree with "
                               "maximal proper filters")
    elif kind == "minimal_prime":
        pts = minimal_primes(lat)
    elif kind == "minimal_prime_over":
        above = tuple(p for p in spec if over & ~p == 0)
        pts = tuple(p for p in above
                    if not any(q != p and q & ~p == 0 for q in above))
    else:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    return SpectrumSelection(lat, kind, tuple(sorted(pts, key=mask_key)))


def D_operator(lat: ResiduatedLattice, p_mask: int) -> int:
    """D(p) = elements joining to 1 with something outside p.

    The defining formula is cross-checked against the intersection of all
    primes inside p; disagreement is a hard error.
    """
    if not is_prime(lat, p_mask):
        raise NotPrime(f"{lat.name}: {lat.set_str(p_mask)} is not prime")

    def build():
        join = lat.join
        top = lat.top
        outside = [y for y in range(lat.n) if not (p_mask >> y) & 1]
        d = 0
        for a in range(lat.n):
            row = join[a]
            if any(row[y] == top for y in outside):
                d |= 1 << a
        below = [q for q in prime_filters(lat) if q & ~p_mask == 0]
        kg = lat.all_mask
        for q in below:
            kg &= q
        kg_min = lat.all_mask
        for q in minimal_primes(lat):
            if q & ~p_mask == 0:
                kg_min &= q
        if d != kg or d != kg_min:
            raise LatticeError(
                f"{lat.name}: D({lat.set_str(p_mask)}) formula/oracle mismatch: "
                f"{lat.set_str(d)} vs {lat.set_str(kg)} vs {lat.set_str(kg_min)}")
        return d

    return cached(lat, ("D", p_mask), build)


def h_set(points, x_mask: int) -> int:
    """Index mask of the points containing every element of ``x_mask``."""
    out = 0
    for i, p in enumerate(points):
        if x_mask & ~p == 0:
            out |= 1 << i
    return out


def d_set(points, x_mask: int) -> int:
    return ((1 << len(points)) - 1) ^ h_set(points, x_mask)


def hull_kernel_space(lat: ResiduatedLattice, points, flavor: str,
                      name: str = "") -> FiniteSpace:
    """Topologize a family of primes.

    flavor h: {h(x)} is a closed basis; flavor d: the same sets are an
    open basis; patch: generated by both.
    """
    pts = tuple(points)
    full = (1 << len(pts)) - 1
    hx = [h_set(pts, 1 << x) for x in range(lat.n)]
    if flavor == "h":
        sub = [full ^ m for m in hx]
    elif flavor == "d":
        sub = list(hx)
    elif flavor == "patch":
        sub = hx + [full ^ m for m in hx]
    else:
        raise ValueError(f"unknown topology flavor {flavor!r}")
    return space_from_subbasis(pts, sub, name or f"{lat.name}:{flavor}",
                               tuple(lat.set_str(p) for p in pts))


def spec_space(lat: ResiduatedLattice, flavor: str) -> FiniteSpace:
    def build():
        return hull_kernel_space(lat, prime_filters(lat), flavor,
                                 f"Spec_{flavor}({lat.name})")
    return cached(lat, ("spec_space", flavor), build)


def stability(lat: ResiduatedLattice, points, subset_mask: int, mode: str):
    """Closure of a subset under super-primes (S) or sub-primes (G)."""
    pts = tuple(points)
    chosen = [pts[i] for i in iter_bits(subset_mask)]
    out = 0
    for i, q in enumerate(pts):
        for p in chosen:
            hit = (p & ~q == 0) if mode == "S" else (q & ~p == 0)
            if hit:
                out |= 1 << i
                break
    return {"closure": out, "is_stable": out == subset_mask}


def support(lat: ResiduatedLattice, f_mask: int) -> int:
    """Supp(F): primes containing the coannulet of some member of F."""
    spec = prime_filters(lat)
    out = 0
    for f in iter_bits(f_mask):
        out |= h_set(spec, x_perp(lat, f))
    return out
