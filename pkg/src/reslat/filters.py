"""Filters of a finite residuated lattice and the structures they form.

A filter is a subset containing the unit, closed under the monoid product
and under join with arbitrary elements (equivalently: a product-closed
upset containing 1).  Filters are bitmasks; the whole filter lattice is
enumerated exhaustively, which the global size cap keeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (LatticeError, RawTables, ResiduatedLattice,
                   ValidationReport, iter_bits, mask_key, validate)


def cached(lat: ResiduatedLattice, key, build):
    """Memoize a pure per-lattice computation on the instance itself."""
    try:
        return lat._cache[key]
    except KeyError:
        val = lat._cache[key] = build()
        return val


def is_filter(lat: ResiduatedLattice, mask: int) -> bool:
    if not (mask >> lat.top) & 1:
        return False
    bits = list(iter_bits(mask))
    for i in bits:
        if lat.up[i] & ~mask:
            return False
    prod = lat.prod
    for ai, i in enumerate(bits):
        row = prod[i]
        for j in bits[ai:]:
            if not (mask >> row[j]) & 1:
                return False
    return True


def generated_filter(lat: ResiduatedLattice, mask: int) -> int:
    """Smallest filter containing the given subset.

    Closes under products first and takes the upward closure once; the
    product is monotone, so no further rounds are needed.
    """
    closed = mask | (1 << lat.top)
    prod = lat.prod
    frontier = closed
    while frontier:
        new = 0
        for i in iter_bits(frontier):
            row = prod[i]
            for j in iter_bits(closed):
                new |= 1 << row[j]
        new &= ~closed
        closed |= new
        frontier = new
    return lat.upset_of(closed)


@dataclass(frozen=True)
class FiltersLattice:
    """All filters, in deterministic order, with meet/join tables.

    Meet is set intersection; join of two filters is the filter generated
    by their union.  Tables hold filter indices.
    """

    lattice: ResiduatedLattice
    filters: tuple[int, ...]
    index: dict
    meet_t: tuple
    join_t: tuple

    def __len__(self):
        return len(self.filters)

    def idx(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise LatticeError(
                f"{self.lattice.name}: {self.lattice.set_str(mask)} is not a filter"
            ) from None

    def join_mask(self, f: int, g: int) -> int:
        return self.filters[self.join_t[self.idx(f)][self.idx(g)]]

    @property
    def proper(self) -> tuple[int, ...]:
        full = self.lattice.all_mask
        return tuple(f for f in self.filters if f != full)


def enumerate_filters(lat: ResiduatedLattice) -> FiltersLattice:
    """Exhaustive sweep of all subsets, with early-exit closure checks."""

    def build():
        found = [s for s in range(1 << lat.n) if is_filter(lat, s)]
        found.sort(key=mask_key)
        index = {f: i for i, f in enumerate(found)}
        k = len(found)
        meet_t = [[0] * k for _ in range(k)]
        join_t = [[0] * k for _ in range(k)]
        for i, f in enumerate(found):
            for j in range(i, k):
                g = found[j]
                m = f & g
                if m not in index:
                    raise LatticeError(
                        f"{lat.name}: intersection of filters is not a filter")
                v = index[generated_filter(lat, f | g)]
                meet_t[i][j] = meet_t[j][i] = index[m]
                join_t[i][j] = join_t[j][i] = v
        return FiltersLattice(lat, tuple(found), index,
                              tuple(tuple(r) for r in meet_t),
                              tuple(tuple(r) for r in join_t))

    return cached(lat, "filters_lattice", build)


def enumerate_filters_incremental(lat: ResiduatedLattice) -> tuple[int, ...]:
    """Closure-generation oracle for the exhaustive enumeration."""
    seen = {generated_filter(lat, 0)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for f in frontier:
            for x in range(lat.n):
                if not (f >> x) & 1:
                    g = generated_filter(lat, f | (1 << x))
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return tuple(sorted(seen, key=mask_key))


def coannihilator(lat: ResiduatedLattice, f_mask: int, x_mask: int) -> int:
    """(F : X) = elements whose join with every member of X lands in F."""
    out = 0
    join = lat.join
    for a in range(lat.n):
        row = join[a]
        if all((f_mask >> row[x]) & 1 for x in iter_bits(x_mask)):
            out |= 1 << a
    return out


def x_perp(lat: ResiduatedLattice, x: int) -> int:
    """Coannulet of x relative to {1}: the elements joining with x to 1."""
    return coannulets(lat)[x]


def coannulets(lat: ResiduatedLattice) -> tuple[int, ...]:
    def build():
        unit = 1 << lat.top
        return tuple(coannihilator(lat, unit, 1 << x) for x in range(lat.n))
    return cached(lat, "coannulets", build)


def double_perp(lat: ResiduatedLattice, x: int) -> int:
    def build():
        unit = 1 << lat.top
        return tuple(coannihilator(lat, unit, p) for p in coannulets(lat))
    return cached(lat, "double_perp", build)[x]


def coannulet_table(lat: ResiduatedLattice):
    """(F : a) for every filter F and element a, indexed like the filter list."""
    def build():
        fl = enumerate_filters(lat)
        return tuple(
            tuple(coannihilator(lat, f, 1 << a) for a in range(lat.n))
            for f in fl.filters)
    return cached(lat, "coannulet_table", build)


def maximal_filters(lat: ResiduatedLattice) -> tuple[int, ...]:
    """Inclusion-maximal proper filters, in the canonical filter order."""
    def build():
        proper = enumerate_filters(lat).proper
        return tuple(f for f in proper
                     if not any(f != g and f & g == f for g in proper))
    return cached(lat, "maximal_filters", build)


def radical(lat: ResiduatedLattice, f_mask: int) -> int:
    """Intersection of the maximal filters containing F (all of A for F = A)."""
    out = lat.all_mask
    for m in maximal_filters(lat):
        if f_mask & ~m == 0:
            out &= m
    return out


@dataclass(frozen=True)
class QuotientResult:
    """Quotient algebra by the congruence a ~ b iff a->b and b->a lie in F."""

    source: ResiduatedLattice
    quotient: ResiduatedLattice
    projection: tuple[int, ...]          # element index -> class index
    classes: tuple[int, ...]             # class index -> member mask
    degenerate: bool

    def push_mask(self, mask: int) -> int:
        """Image of a subset of the source under the projection."""
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.projection[x]
        return out

    def pull_mask(self, mask: int) -> int:
        """Preimage of a subset of the quotient."""
        out = 0
        for c in iter_bits(mask):
            out |= self.classes[c]
        return out


def quotient(lat: ResiduatedLattice, f_mask: int) -> QuotientResult:
    """Quotient by a filter; the result is re-validated, not trusted."""
    if not is_filter(lat, f_mask):
        raise LatticeError(f"{lat.name}: {lat.set_str(f_mask)} is not a filter")

    def build():
        n = lat.n
        res = lat.res
        cls_mask = []
        for x in range(n):
            m = 0
            for y in range(n):
                if (f_mask >> res[x][y]) & 1 and (f_mask >> res[y][x]) & 1:
                    m |= 1 << y
            cls_mask.append(m)
        classes = sorted({m for m in cls_mask}, key=mask_key)
        class_of = {}
        for ci, m in enumerate(classes):
            for y in iter_bits(m):
                class_of[y] = ci
        proj = tuple(class_of[x] for x in range(n))
        k = len(classes)
        if sum(bin(c).count("1") for c in classes) != n:
            raise LatticeError(f"{lat.name}: congruence classes do not partition")

        reps = [next(iter_bits(m)) for m in classes]
        names = ["|".join(lat.names[i] for i in iter_bits(m)) for m in classes]
        if k == 1:
            leq = np.ones((1, 1), dtype=bool)
            tbl = np.zeros((1, 1), dtype=np.int64)
            q = ResiduatedLattice(f"{lat.name}/{lat.set_str(f_mask)}", names,
                                  leq, tbl.copy(), tbl.copy(), tbl.copy(),
                                  tbl.copy(), 0, 0)
        else:
            leq = np.zeros((k, k), dtype=bool)
            prod = np.zeros((k, k), dtype=np.int64)
            for i in range(k):
                for j in range(k):
                    leq[i, j] = (f_mask >> res[reps[i]][reps[j]]) & 1
                    prod[i, j] = class_of[lat.prod[reps[i]][reps[j]]]
            raw = RawTables(f"{lat.name}/{lat.set_str(f_mask)}", names, leq,
                            prod, class_of[lat.bottom], class_of[lat.top])
            q = validate(raw)
            if isinstance(q, ValidationReport):
                raise LatticeError(f"quotient failed validation:\n{q}")

        result = QuotientResult(lat, q, proj, tuple(classes), k == 1)
        _check_projection(lat, result)
        return result

    return cached(lat, ("quotient", f_mask), build)


def _check_projection(lat, qr: QuotientResult):
    """The projection must preserve all operations and have cokernel F."""
    q, proj = qr.quotient, qr.projection
    pairs = (("join", lat.join, q.join), ("meet", lat.meet, q.meet),
             ("prod", lat.prod, q.prod), ("res", lat.res, q.res))
    for opname, src, dst in pairs:
        for x in range(lat.n):
            for y in range(lat.n):
                if proj[src[x][y]] != dst[proj[x]][proj[y]]:
                    raise LatticeError(
                        f"projection does not preserve {opname} at "
                        f"({lat.names[x]},{lat.names[y]})")
    if proj[lat.bottom] != q.bottom or proj[lat.top] != q.top:
        raise LatticeError("projection moves the bounds")
    coker = 0
    for x in range(lat.n):
        if proj[x] == q.top:
            coker |= 1 << x
    if coker != qr.classes[q.top]:
        raise LatticeError("cokernel bookkeeping is inconsistent")


def lattice_ideals(lat: ResiduatedLattice) -> tuple[int, ...]:
    """Nonempty join-closed downsets of the underlying lattice."""
    def build():
        out = []
        join = lat.join
        for s in range(1, 1 << lat.n):
            bits = list(iter_bits(s))
            ok = True
            for i in bits:
                if lat.down[i] & ~s:
                    ok = False
                    break
            if ok:
                for ai, i in enumerate(bits):
                    row = join[i]
                    for j in bits[ai:]:
                        if not (s >> row[j]) & 1:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                out.append(s)
        return tuple(sorted(out, key=mask_key))
    return cached(lat, "lattice_ideals", build)


def principal_ideal(lat: ResiduatedLattice, x: int) -> int:
    return lat.down[x]


def ideal_generated(lat: ResiduatedLattice, mask: int) -> int:
    """Smallest lattice ideal containing the subset (empty set refused)."""
    if mask == 0:
        raise LatticeError("the empty set generates no ideal")
    out = mask
    join = lat.join
    while True:
        ext = out
        for i in iter_bits(out):
            ext |= lat.down[i]
            row = join[i]
            for j in iter_bits(out):
                ext |= 1 << row[j]
        if ext == out:
            return out
        out = ext


def omega_filter(lat: ResiduatedLattice, ideal_mask: int) -> int:
    """omega(I) = elements joining with some member of I to the top."""
    out = 0
    join = lat.join
    top = lat.top
    for a in range(lat.n):
        row = join[a]
        if any(row[x] == top for x in iter_bits(ideal_mask)):
            out |= 1 << a
    if not is_filter(lat, out):
        raise LatticeError(f"{lat.name}: omega of {lat.set_str(ideal_mask)} "
                           "is not a filter")
    return out


def omega_filters(lat: ResiduatedLattice) -> tuple[int, ...]:
    """The set of all omega-filters (one per lattice ideal, deduplicated)."""
    def build():
        seen = {omega_filter(lat, i) for i in lattice_ideals(lat)}
        return tuple(sorted(seen, key=mask_key))
    return cached(lat, "omega_filters", build)


def is_alpha_filter(lat: ResiduatedLattice, f_mask: int) -> bool:
    """True when the double coannulet of every member stays inside."""
    return all(double_perp(lat, x) & ~f_mask == 0 for x in iter_bits(f_mask))


def alpha_closure(lat: ResiduatedLattice, mask: int) -> int:
    f = generated_filter(lat, mask)
    while True:
        ext = f
        for x in iter_bits(f):
            ext |= double_perp(lat, x)
        nxt = generated_filter(lat, ext)
        if nxt == f:
            return f
        f = nxt


def enumerate_alpha(lat: ResiduatedLattice) -> tuple[int, ...]:
    return tuple(f for f in enumerate_filters(lat).filters
                 if is_alpha_filter(lat, f))


def is_projection_flat(lat: ResiduatedLattice, f_mask: int):
    """Flatness of the canonical projection by the coannihilator criterion.

    Checks (G v F : a) <= (G : a) v F for every filter G and element a;
    on failure returns the witness (G, a, x) with x in the gap.
    """
    fl = enumerate_filters(lat)
    co = coannulet_table(lat)
    fi = fl.idx(f_mask)
    for gi, g in enumerate(fl.filters):
        ji = fl.join_t[gi][fi]
        for a in range(lat.n):
            lhs = co[ji][a]
            rhs_idx = fl.idx(co[gi][a])
            rhs = fl.filters[fl.join_t[rhs_idx][fi]]
            gap = lhs & ~rhs
            if gap:
                return False, (g, a, next(iter_bits(gap)))
    return True, None
