"""Finite topological spaces as explicit open-set families.

Points are indexed 0..k-1 and subsets of points are bitmasks, so every
separation or continuity question reduces to set algebra over ints.
Spaces verify at construction that the family really is a topology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LatticeError, iter_bits, mask_key


@dataclass(frozen=True)
class FiniteSpace:
    """A finite space: point labels plus the full family of open sets.

    ``labels`` are opaque identity carriers (filter bitmasks for spectra);
    ``label_text`` is the printable form used in reports and DOT output.
    """

    labels: tuple
    opens: frozenset
    name: str = ""
    label_text: tuple = ()

    def __post_init__(self):
        k = len(self.labels)
        full = (1 << k) - 1
        if 0 not in self.opens or full not in self.opens:
            raise LatticeError(f"space {self.name!r}: missing trivial opens")
        ops = list(self.opens)
        for i, u in enumerate(ops):
            for v in ops[i:]:
                if u | v not in self.opens or u & v not in self.opens:
                    raise LatticeError(
                        f"space {self.name!r}: opens not closed under "
                        "union/intersection")
        if not self.label_text:
            object.__setattr__(self, "label_text",
                               tuple(str(l) for l in self.labels))

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.k) - 1

    @property
    def closed_sets(self) -> frozenset:
        full = self.full
        return frozenset(full ^ o for o in self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed(self, mask: int) -> bool:
        return (self.full ^ mask) in self.opens

    def closure(self, mask: int) -> int:
        out = self.full
        for c in self.closed_sets:
            if mask & ~c == 0:
                out &= c
        return out

    def interior(self, mask: int) -> int:
        out = 0
        for o in self.opens:
            if o & ~mask == 0:
                out |= o
        return out

    def point_of_label(self, label) -> int:
        for i, l in enumerate(self.labels):
            if l == label:
                return i
        raise LatticeError(f"space {self.name!r}: no point labelled {label!r}")

    def sorted_opens(self) -> list[int]:
        return sorted(self.opens, key=mask_key)


def space_from_subbasis(labels, subbasis, name="", label_text=()) -> FiniteSpace:
    """Generate a topology: finite intersections, then arbitrary unions."""
    k = len(labels)
    full = (1 << k) - 1
    fam = {0, full} | set(subbasis)
    while True:
        extra = set()
        lst = list(fam)
        for i, u in enumerate(lst):
            for v in lst[i + 1:]:
                for w in (u | v, u & v):
                    if w not in fam:
                        extra.add(w)
        if not extra:
            break
        fam |= extra
    return FiniteSpace(tuple(labels), frozenset(fam), name, tuple(label_text))


def subspace(space: FiniteSpace, point_mask: int, name="") -> FiniteSpace:
    """Induced topology on a subset of points (relabelled 0..m-1)."""
    pts = list(iter_bits(point_mask))
    pos = {p: i for i, p in enumerate(pts)}
    trace = set()
    for o in space.opens:
        m = 0
        for p in pts:
            if (o >> p) & 1:
                m |= 1 << pos[p]
        trace.add(m)
    return FiniteSpace(tuple(space.labels[p] for p in pts), frozenset(trace),
                       name or f"{space.name}|sub",
                       tuple(space.label_text[p] for p in pts))


def clopens(space: FiniteSpace) -> list[int]:
    return sorted((o for o in space.opens if space.is_closed(o)), key=mask_key)


def irreducible_closed_sets(space: FiniteSpace):
    """Nonempty closed sets not covered by two smaller closed pieces.

    Returns (closed set, tuple of generic points) pairs; a generic point
    is one whose closure is the whole set.
    """
    closed = sorted(space.closed_sets, key=mask_key)
    out = []
    for c in closed:
        if c == 0:
            continue
        # only maximal proper closed traces inside c can witness a cover
        traces = {c & d for d in closed if c & ~d}
        maximal = [t for t in traces
                   if not any(t != u and t & ~u == 0 for u in traces)]
        irreducible = not any(t1 | t2 == c
                              for i, t1 in enumerate(maximal)
                              for t2 in maximal[i:])
        if irreducible:
            gen = tuple(p for p in iter_bits(c) if space.closure(1 << p) == c)
            out.append((c, gen))
    return out


def minimal_neighborhoods(space: FiniteSpace) -> list[int]:
    """Smallest open set around each point (an open, by intersection closure)."""
    nb = [space.full] * space.k
    for o in space.opens:
        for i in iter_bits(o):
            nb[i] &= o
    return nb


def separation_report(space: FiniteSpace) -> dict:
    """Separation axioms and connectedness, all from first principles.

    Minimal neighborhoods decide T0 and Hausdorff exactly: every open
    around a point contains its minimal one, so two points admit a
    distinguishing (resp. disjoint) pair of opens iff their minimal
    neighborhoods differ (resp. are disjoint).
    """
    k = space.k
    nb = minimal_neighborhoods(space)
    t0 = len(set(nb)) == k
    t1 = all(space.closure(1 << i) == 1 << i for i in range(k))
    hausdorff = all(not nb[i] & nb[j]
                    for i in range(k) for j in range(i + 1, k))
    sober = all(len(gen) == 1 for _, gen in irreducible_closed_sets(space))
    connected = len(clopens(space)) <= 2 if k else True
    return {"t0": t0, "t1": t1, "hausdorff": hausdorff, "sober": sober,
            "connected": connected,
            "compact_note": "trivially compact (finite)"}


@dataclass(frozen=True)
class PointMap:
    """A total map between finite spaces, given as an index table."""

    source: FiniteSpace
    target: FiniteSpace
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.k:
            raise LatticeError("point map is not total on the source")
        if any(not 0 <= t < self.target.k for t in self.mapping):
            raise LatticeError("point map leaves the target")

    def image_mask(self, mask: int) -> int:
        out = 0
        for p in iter_bits(mask):
            out |= 1 << self.mapping[p]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for p, t in enumerate(self.mapping):
            if (mask >> t) & 1:
                out |= 1 << p
        return out


def map_analysis(pm: PointMap) -> dict:
    """Continuity, openness, closedness and friends for a point map."""
    src, tgt = pm.source, pm.target
    continuous = all(pm.preimage_mask(o) in src.opens for o in tgt.opens)
    open_map = all(pm.image_mask(o) in tgt.opens for o in src.opens)
    closed_map = all(tgt.is_closed(pm.image_mask(c)) for c in src.closed_sets)
    injective = len(set(pm.mapping)) == src.k
    surjective = set(pm.mapping) == set(range(tgt.k))
    homeo = continuous and open_map and injective and surjective

    image_labels = {tgt.labels[t] for t in pm.mapping}
    fixes = all(tgt.labels[pm.mapping[s]] == src.labels[s]
                for s in range(src.k) if src.labels[s] in image_labels)
    return {"continuous": continuous, "open": open_map, "closed": closed_map,
            "injective": injective, "surjective": surjective,
            "homeomorphism": homeo,
            "retraction_onto_image": continuous and fixes}


def specialization_dot(space: FiniteSpace, graph_name="space") -> str:
    """DOT digraph of the specialization order: p -> q iff p in cl({q})."""
    lines = [f'digraph "{graph_name}" {{', "  rankdir=BT;",
             '  node [shape=plaintext];']
    for txt in space.label_text:
        lines.append(f'  "{txt}";')
    for q in range(space.k):
        cl = space.closure(1 << q)
        for p in iter_bits(cl):
            if p != q:
                lines.append(f'  "{space.label_text[p]}" -> "{space.label_text[q]}";')
    lines.append("}")
    return "\n".join(lines)
