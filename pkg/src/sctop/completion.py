"""The hyperspace of SI-closed sets and the strong completion.

Gamma_SI(X) carries the lower Vietoris topology, generated by the sets
diamond(U) = {C SI-closed | C meets U} for U SI-open. Its specialization
order is inclusion and it is strongly complete; both are verified at
construction. The strong completion of X is the subspace of Gamma_SI(X)
on the I-closure of the point-closure image Psi(X), with the unit sending
each point to its closure. The empty set is a member of Gamma_SI (closed,
vacuously sup-capturing) and is the bottom; Psi(X) never contains it.

Morphisms extend along the unit via f_star(C) = cl_SI(image of C), which is
left adjoint to preimage between the hyperspaces, followed by the
point-closure inverse k of the target.
"""

import warnings
from dataclasses import dataclass
from itertools import permutations, product

from . import bits
from .errors import (CapExceeded, NotSIPlusContinuous, NotStronglyComplete,
                     SpaceMismatch)
from .maps import SpaceMap, classify, compose, is_si_plus_continuous
from .order import DEFAULT_CAP, FinPoset
from .spaces import FinSpace


@dataclass
class GammaSI:
    base: FinSpace
    elements: tuple[int, ...]   # SI-closed subsets of the base, canonical order
    space: FinSpace             # lower Vietoris topology over element indices

    @property
    def labels(self) -> tuple[int, ...]:
        return self.elements

    def index_of(self, c: int) -> int:
        return self._index[c]

    @property
    def _index(self):
        d = getattr(self, "_index_cache", None)
        if d is None:
            d = {c: i for i, c in enumerate(self.elements)}
            self._index_cache = d
        return d

    def inclusion_poset(self) -> FinPoset:
        up = []
        for c in self.elements:
            up.append(bits.from_indices(
                j for j, d in enumerate(self.elements) if bits.is_subset(c, d)))
        return FinPoset(tuple(up))


_GAMMA_CACHE: dict[tuple, GammaSI] = {}


def gamma_si(x: FinSpace, cap: int = DEFAULT_CAP) -> GammaSI:
    """Enumerate the SI-closed sets and materialize the lower Vietoris
    topology by closing the diamond subbase under finite intersections and
    then unions (exact for finite carriers).

    The cap also applies to the hyperspace carrier itself: refusing loudly
    beats enumerating irreducible families of a large inclusion lattice.
    Results are cached per space (the construction is deterministic).
    """
    if x.size > cap:
        raise CapExceeded(x.size, cap, "hyperspace construction")
    key = (x, x.names)  # equality is extensional; labels depend on names
    cached = _GAMMA_CACHE.get(key)
    if cached is not None:
        if cached.space.size > cap:
            raise CapExceeded(cached.space.size, cap, "hyperspace carrier")
        return cached
    elements = x.si_closed_sets(cap)
    m = len(elements)
    if m > cap:
        raise CapExceeded(m, cap, "hyperspace carrier")
    gfull = bits.full_mask(m)
    subbase = []
    for u in x.si_opens(cap):
        subbase.append(bits.from_indices(
            i for i, c in enumerate(elements) if c & u))
    # empty intersection is the whole hyperspace; diamond of the empty open is empty
    inters = {gfull}
    frontier = [gfull]
    while frontier:
        nxt = []
        for a in frontier:
            for s in subbase:
                t = a & s
                if t not in inters:
                    inters.add(t)
                    nxt.append(t)
        frontier = nxt
    opens = set(inters)
    opens.add(0)
    frontier = list(opens)
    while frontier:
        nxt = []
        for a in frontier:
            for b in inters:
                t = a | b
                if t not in opens:
                    opens.add(t)
                    nxt.append(t)
        frontier = nxt
    names = tuple(bits.render(c, x.names) for c in elements)
    space = FinSpace(m, opens, names)
    g = GammaSI(x, elements, space)
    assert space.specialization == g.inclusion_poset(), \
        "hyperspace specialization is not the inclusion order"
    assert space.is_strongly_complete(cap), \
        "hyperspace is not strongly complete"
    _GAMMA_CACHE[key] = g
    return g


def psi(x: FinSpace, g: GammaSI) -> int:
    """Indices of the point closures inside the hyperspace carrier."""
    if g.base != x:
        raise SpaceMismatch("hyperspace was built from a different space")
    return bits.from_indices(g.index_of(x.closure(1 << p)) for p in range(x.size))


@dataclass
class CompletionResult:
    base: FinSpace
    gamma: GammaSI
    psi_mask: int          # over gamma indices
    completion_mask: int   # over gamma indices: cl_I of psi
    completion: FinSpace   # subspace of gamma.space on completion_mask
    eta: SpaceMap          # base -> completion
    witnesses: dict[str, bool]

    @property
    def new_point_count(self) -> int:
        return bits.popcount(self.completion_mask) - bits.popcount(self.psi_mask)


def strong_completion(x: FinSpace, cap: int = DEFAULT_CAP) -> CompletionResult:
    g = gamma_si(x, cap)
    pm = psi(x, g)
    cm = g.space.cl_i(pm, cap)
    with warnings.catch_warnings():
        if x.size == 0:
            warnings.simplefilter("ignore")
        completion = g.space.subspace(cm)
    carrier = bits.to_indices(cm)
    pos = {gi: k for k, gi in enumerate(carrier)}
    eta = SpaceMap(x, completion, tuple(
        pos[g.index_of(x.closure(1 << p))] for p in range(x.size)))
    report = classify(eta, cap)
    pe = eta.src.specialization
    pc = completion.specialization
    embedding = all(
        pe.leq(a, b) == pc.leq(eta.table[a], eta.table[b])
        for a in range(x.size) for b in range(x.size))
    onto_psi = bits.from_indices(
        carrier[i] for i in bits.iter_indices(eta.image_mask(x.full))) == pm
    witnesses = {
        "eta_continuous": report.continuous,
        "eta_si_continuous": report.si_continuous,
        "eta_si_plus_continuous": report.si_plus_continuous,
        "eta_order_embedding": embedding,
        "eta_onto_point_closures": onto_psi,
        "completion_strongly_complete": completion.is_strongly_complete(cap),
    }
    return CompletionResult(x, g, pm, cm, completion, eta, witnesses)


def f_star(f: SpaceMap, gx: GammaSI, gz: GammaSI, cap: int = DEFAULT_CAP) -> SpaceMap:
    """The hyperspace map C -> cl_SI(f(C)); left adjoint to preimage."""
    if gx.base != f.src or gz.base != f.dst:
        raise SpaceMismatch("hyperspaces do not match the map endpoints")
    if not is_si_plus_continuous(f, cap):
        raise NotSIPlusContinuous("the map is not SI+-continuous")
    table = []
    for c in gx.elements:
        img = f.image_mask(c)
        tgt = f.dst.full
        for d in gz.elements:
            if bits.is_subset(img, d):
                tgt &= d
        table.append(gz.index_of(tgt))
    return SpaceMap(gx.space, gz.space, tuple(table))


def adjunction_witness(f: SpaceMap, fs: SpaceMap, gx: GammaSI, gz: GammaSI):
    """A pair (C, A) with f_star(C) <= A not matching C <= preimage(A), else None."""
    for i, c in enumerate(gx.elements):
        fc = gz.elements[fs.table[i]]
        for a in gz.elements:
            if bits.is_subset(fc, a) != bits.is_subset(c, f.preimage_mask(a)):
                return (c, a)
    return None


def k_map(z: FinSpace, gz: GammaSI, cap: int = DEFAULT_CAP) -> SpaceMap:
    """Inverse of the unit on the point-closure subspace of the hyperspace."""
    if gz.base != z:
        raise SpaceMismatch("hyperspace was built from a different space")
    if not z.is_strongly_complete(cap):
        raise NotStronglyComplete("target space is not strongly complete")
    pm = psi(z, gz)
    with warnings.catch_warnings():
        if z.size == 0:
            warnings.simplefilter("ignore")
        dom = gz.space.subspace(pm)
    closure_to_point = {z.closure(1 << p): p for p in range(z.size)}
    table = tuple(closure_to_point[gz.elements[gi]] for gi in bits.iter_indices(pm))
    return SpaceMap(dom, z, table)


def extend(f: SpaceMap, c: CompletionResult, cap: int = DEFAULT_CAP) -> SpaceMap:
    """The unique SI+-continuous map on the completion with extend(f) after
    the unit equal to f; computed as the point of the target whose closure
    is f_star of the completion element."""
    if c.base != f.src:
        raise SpaceMismatch("completion was built from a different space")
    if not f.dst.is_strongly_complete(cap):
        raise NotStronglyComplete("target space is not strongly complete")
    gz = gamma_si(f.dst, cap)
    fs = f_star(f, c.gamma, gz, cap)
    closure_to_point = {f.dst.closure(1 << p): p for p in range(f.dst.size)}
    table = []
    for gi in bits.iter_indices(c.completion_mask):
        tgt = gz.elements[fs.table[gi]]
        if tgt not in closure_to_point:
            raise AssertionError(
                "f_star left the point closures on a strongly complete target")
        table.append(closure_to_point[tgt])
    return SpaceMap(c.completion, f.dst, tuple(table))


@dataclass
class UniversalPropertyEntry:
    f_table: tuple[int, ...]
    fhat_table: tuple[int, ...]
    factors: bool
    extension_count: int


@dataclass
class UniversalPropertyReport:
    x: FinSpace
    z: FinSpace
    entries: list[UniversalPropertyEntry]

    @property
    def passed(self) -> bool:
        return all(e.factors and e.extension_count == 1 for e in self.entries)


def check_universal_property(x: FinSpace, z: FinSpace,
                             bound: int = 4) -> UniversalPropertyReport:
    """For every SI+-continuous f: x -> z, the completion admits exactly one
    SI+-continuous factorization through the unit, namely extend(f)."""
    if x.size > bound or z.size > bound:
        raise CapExceeded(max(x.size, z.size), bound, "universal-property sweep")
    if not z.is_strongly_complete():
        raise NotStronglyComplete("target space is not strongly complete")
    c = strong_completion(x)
    entries = []
    for table in product(range(z.size), repeat=x.size):
        f = SpaceMap(x, z, table)
        if not is_si_plus_continuous(f):
            continue
        fhat = extend(f, c)
        factors = compose(fhat, c.eta) == f
        count = 0
        for gtable in product(range(z.size), repeat=c.completion.size):
            gmap = SpaceMap(c.completion, z, gtable)
            if compose(gmap, c.eta) == f and is_si_plus_continuous(gmap):
                count += 1
        entries.append(UniversalPropertyEntry(table, fhat.table, factors, count))
    return UniversalPropertyReport(x, z, entries)


@dataclass
class UniquenessEntry:
    perm: tuple[int, ...]
    homeo: tuple[int, ...] | None

    @property
    def found(self) -> bool:
        return self.homeo is not None


@dataclass
class UniquenessReport:
    x: FinSpace
    entries: list[UniquenessEntry]

    @property
    def passed(self) -> bool:
        return all(e.found for e in self.entries)


def check_uniqueness(x: FinSpace, rng=None, samples: int = 24,
                     cap: int = DEFAULT_CAP) -> UniquenessReport:
    """Completions over relabeled copies are connected by a homeomorphism
    commuting with the units; exhaustive over permutations up to size 4,
    sampled beyond."""
    n = x.size
    if n <= 4:
        perms = list(permutations(range(n)))
    else:
        if rng is None:
            import random
            rng = random.Random(0)
        pool = list(range(n))
        perms = []
        for _ in range(samples):
            rng.shuffle(pool)
            perms.append(tuple(pool))
    c1 = strong_completion(x, cap)
    entries = []
    for perm in perms:
        x2 = x.relabel(perm)
        c2 = strong_completion(x2, cap)
        found = None
        for h in c1.completion.iter_homeomorphisms(c2.completion):
            if all(h[c1.eta.table[p]] == c2.eta.table[perm[p]] for p in range(n)):
                found = h
                break
        entries.append(UniquenessEntry(tuple(perm), found))
    return UniquenessReport(x, entries)
