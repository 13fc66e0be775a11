"""Finite T0 spaces with an explicit open-set family.

Conventions:
    - the carrier is 0..size-1; subsets are int bitmasks (see `bits`)
    - `opens` is the full topology, stored as a frozenset of masks
    - `names` is optional display metadata and never takes part in equality

Construction validates the topology (empty set and carrier present, closure
under binary union and intersection) and the T0 axiom. On a finite carrier
this forces the opens to be exactly the up-sets of the specialization order,
so several predicates admit a has-maximum shortcut; the definitional paths
are kept alongside and the two are required to agree bit-exactly in tests.

Every enumeration honours a size cap (default 20) and raises CapExceeded
beyond it rather than truncating.
"""

import warnings
from functools import cached_property

from . import bits
from .errors import CapExceeded, T0Violation, TopologyError
from .order import DEFAULT_CAP, FinPoset


class FinSpace:
    def __init__(self, size: int, opens, names=None):
        opens = frozenset(opens)
        full = bits.full_mask(size)
        for u in opens:
            if u & ~full:
                raise TopologyError(f"open {u:#x} has members outside the carrier")
        if 0 not in opens:
            raise TopologyError("the empty set is missing from the opens")
        if full not in opens:
            raise TopologyError("the full carrier is missing from the opens")
        for u in opens:
            for v in opens:
                if u | v not in opens:
                    raise TopologyError(
                        f"opens not closed under union: {bits.render(u)} | {bits.render(v)}")
                if u & v not in opens:
                    raise TopologyError(
                        f"opens not closed under intersection: {bits.render(u)} & {bits.render(v)}")
        if names is not None:
            names = tuple(names)
            if len(names) != size:
                raise ValueError("names length does not match carrier size")
        self.size = size
        self.opens = opens
        self.names = names
        self.full = full
        min_open = []
        for i in range(size):
            m = full
            for u in opens:
                if bits.contains(u, i):
                    m &= u
            min_open.append(m)
        for i in range(size):
            for j in range(i + 1, size):
                if min_open[i] == min_open[j]:
                    raise T0Violation(self._label(i), self._label(j))
        self.min_open = tuple(min_open)

    def _label(self, i):
        return self.names[i] if self.names else i

    def __eq__(self, other):
        return (isinstance(other, FinSpace)
                and self.size == other.size and self.opens == other.opens)

    def __hash__(self):
        return hash((self.size, self.opens))

    def __repr__(self):
        return f"FinSpace(size={self.size}, opens={len(self.opens)})"

    def _cap(self, cap, what):
        if self.size > cap:
            raise CapExceeded(self.size, cap, what)

    @cached_property
    def opens_sorted(self) -> tuple[int, ...]:
        return bits.family_sort(self.opens, self.size)

    @cached_property
    def closed_sorted(self) -> tuple[int, ...]:
        return bits.family_sort((self.full & ~u for u in self.opens), self.size)

    def is_open(self, a: int) -> bool:
        return a in self.opens

    def is_closed(self, a: int) -> bool:
        return self.full & ~a in self.opens

    @cached_property
    def specialization(self) -> FinPoset:
        """Order with i <= j iff every open containing i contains j.

        The minimal open of i is exactly its principal filter, so the rows
        are the min-open masks; antisymmetry is the T0 axiom, already
        checked at construction.
        """
        return FinPoset(self.min_open)

    def closure(self, a: int) -> int:
        """Smallest closed superset: complement of the largest open avoiding a."""
        avoid = 0
        for u in self.opens:
            if u & a == 0:
                avoid |= u
        return self.full & ~avoid

    def interior(self, a: int) -> int:
        out = 0
        for u in self.opens:
            if bits.is_subset(u, a):
                out |= u
        return out

    # irreducibility -------------------------------------------------------

    def is_irreducible(self, f: int) -> bool:
        """Definitional test: f is nonempty and meets the intersection of
        every pair of opens it meets."""
        if f == 0:
            return False
        meeting = [u for u in self.opens if u & f]
        for u in meeting:
            for v in meeting:
                if u & v & f == 0:
                    return False
        return True

    def has_maximum(self, f: int) -> bool:
        return self.specialization.maximum_of(f) is not None

    def irr_sets(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """All irreducible subsets, via the finite shortcut.

        On a finite T0 space the irreducible sets are exactly the nonempty
        sets with a maximum (each is generated once from its maximum).
        The definitional route is `irr_sets_bruteforce`; the two must agree.
        """
        self._cap(cap, "irreducible-set enumeration")
        return self._irr_sets

    @cached_property
    def _irr_sets(self) -> tuple[int, ...]:
        p = self.specialization
        out = []
        for m in range(self.size):
            strictly_below = p.down[m] & ~(1 << m)
            top = 1 << m
            for s in bits.subsets_of(strictly_below):
                out.append(s | top)
        return bits.family_sort(out, self.size)

    def irr_sets_bruteforce(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """Definitional enumeration over every subset."""
        self._cap(cap, "irreducible-set enumeration")
        return bits.family_sort(
            (f for f in range(1, self.full + 1) if self.is_irreducible(f)), self.size)

    def irr_plus_sets(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """Irreducible subsets whose supremum exists in the specialization order."""
        self._cap(cap, "irreducible-set enumeration")
        return tuple(f for f, s in self._irr_with_sups if s is not None)

    @cached_property
    def _irr_with_sups(self) -> tuple[tuple[int, int | None], ...]:
        p = self.specialization
        return tuple((f, p.sup(f)) for f in self._irr_sets)

    # the irreducibly-derived (SI) topology --------------------------------

    def is_si_open(self, u: int, cap: int = DEFAULT_CAP) -> bool:
        """Open, and inaccessible by suprema of irreducible sets: whenever the
        sup of an irreducible set with existing sup lands in u, the set
        already meets u."""
        if u not in self.opens:
            return False
        self._cap(cap, "SI-open test")
        for f, s in self._irr_with_sups:
            if s is not None and bits.contains(u, s) and f & u == 0:
                return False
        return True

    def si_opens(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        self._cap(cap, "SI topology")
        return tuple(u for u in self.opens_sorted if self.is_si_open(u, cap))

    def si_space(self, cap: int = DEFAULT_CAP) -> "FinSpace":
        """The same carrier under the SI topology; equals the original space
        on finite carriers (every irreducible set owns its maximum)."""
        out = FinSpace(self.size, self.si_opens(cap), self.names)
        assert out.opens == self.opens, "SI topology diverged on a finite space"
        return out

    def is_si_closed(self, c: int, cap: int = DEFAULT_CAP) -> bool:
        """Closed, and containing the sup of every irreducible subset of it
        that has one. Must agree with complement-of-SI-open."""
        if not self.is_closed(c):
            return False
        self._cap(cap, "SI-closed test")
        for f, s in self._irr_with_sups:
            if s is not None and bits.is_subset(f, c) and not bits.contains(c, s):
                return False
        return True

    def si_closed_sets(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        return bits.family_sort(
            (self.full & ~u for u in self.si_opens(cap)), self.size)

    def cl_si(self, a: int, cap: int = DEFAULT_CAP) -> int:
        """Smallest SI-closed superset (the SI-closed sets form a closure
        system: intersections of closed, sup-capturing sets are such)."""
        out = self.full
        for c in self.si_closed_sets(cap):
            if bits.is_subset(a, c):
                out &= c
        return out

    # I-closed sets and the I-closure --------------------------------------

    def is_i_closed(self, a: int, cap: int = DEFAULT_CAP) -> bool:
        """Contains the sup of every irreducible subset that has one; unlike
        SI-closedness this does not require a itself to be closed."""
        self._cap(cap, "I-closed test")
        for f, s in self._irr_with_sups:
            if s is not None and bits.is_subset(f, a) and not bits.contains(a, s):
                return False
        return True

    def is_i_open(self, a: int, cap: int = DEFAULT_CAP) -> bool:
        return self.is_i_closed(self.full & ~a, cap)

    def theta(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """All I-closed subsets, canonically ordered."""
        self._cap(cap, "I-closed family")
        return bits.family_sort(
            (a for a in range(self.full + 1) if self.is_i_closed(a, cap)), self.size)

    def delta(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """All I-open subsets, canonically ordered."""
        return bits.family_sort(
            (self.full & ~c for c in self.theta(cap)), self.size)

    def cl_i(self, a: int, cap: int = DEFAULT_CAP) -> int:
        """I-closure: least I-closed superset, by saturating a with suprema
        of its irreducible subsets. Equals the intersection of all I-closed
        supersets (`cl_i_bruteforce`); extensive, monotone, idempotent."""
        self._cap(cap, "I-closure")
        cur = a
        changed = True
        while changed:
            changed = False
            for f, s in self._irr_with_sups:
                if s is not None and bits.is_subset(f, cur) and not bits.contains(cur, s):
                    cur |= 1 << s
                    changed = True
        return cur

    def cl_i_bruteforce(self, a: int, cap: int = DEFAULT_CAP) -> int:
        out = self.full
        for c in self.theta(cap):
            if bits.is_subset(a, c):
                out &= c
        return out

    # completeness and separation predicates --------------------------------

    def is_strongly_complete(self, cap: int = DEFAULT_CAP) -> bool:
        """Every irreducible subset has a supremum (the two families agree)."""
        self._cap(cap, "strong-completeness test")
        return all(s is not None for _, s in self._irr_with_sups)

    def is_dcpo(self, cap: int = DEFAULT_CAP) -> bool:
        self._cap(cap, "dcpo test")
        p = self.specialization
        for d in range(1, self.full + 1):
            if p.is_directed(d) and p.sup(d) is None:
                return False
        return True

    def is_sober(self, cap: int = DEFAULT_CAP) -> bool:
        """Every closed irreducible set is the closure of exactly one point."""
        self._cap(cap, "sobriety test")
        for c in self.closed_sorted:
            if self.is_irreducible(c):
                points = [x for x in range(self.size) if self.closure(1 << x) == c]
                if len(points) != 1:
                    return False
        return True

    # subspaces, connectedness, relabelling ---------------------------------

    def subspace(self, y: int) -> "FinSpace":
        """Relative topology on the members of y, reindexed in ascending order."""
        if y == 0 and self.size > 0:
            warnings.warn("taking an empty subspace", stacklevel=2)
        carrier = bits.to_indices(y)
        pos = {old: new for new, old in enumerate(carrier)}
        traces = set()
        for u in self.opens:
            traces.add(bits.from_indices(pos[i] for i in bits.iter_indices(u & y)))
        names = tuple(self.names[i] for i in carrier) if self.names else None
        return FinSpace(len(carrier), traces, names)

    def is_clopen(self, u: int) -> bool:
        return u in self.opens and self.full & ~u in self.opens

    def is_connected(self) -> bool:
        return all(u in (0, self.full) for u in self.opens if self.is_clopen(u))

    def relabel(self, perm) -> "FinSpace":
        remap = [bits.from_indices(perm[i] for i in bits.iter_indices(u))
                 for u in self.opens]
        names = None
        if self.names:
            names = [""] * self.size
            for i, nm in enumerate(self.names):
                names[perm[i]] = nm
        return FinSpace(self.size, remap, names)

    def iter_homeomorphisms(self, other: "FinSpace"):
        """Bijections carrying opens onto opens, found through order
        isomorphisms (finite T0 spaces carry exactly their up-set topology)."""
        if self.size != other.size:
            return
        for perm in self.specialization.iter_isomorphisms(other.specialization):
            if self.relabel(perm).opens == other.opens:
                yield perm

    def is_homeomorphic(self, other: "FinSpace") -> bool:
        return next(self.iter_homeomorphisms(other), None) is not None


def alexandroff(p: FinPoset, names=None) -> FinSpace:
    """The space whose opens are all up-sets of p; its specialization is p."""
    ups = [m for m in range(bits.full_mask(p.size) + 1) if p.is_up_set(m)]
    return FinSpace(p.size, ups, names)


def sierpinski() -> FinSpace:
    """Two points 0 < 1, opens {}, {1}, {0,1}."""
    return FinSpace(2, [0b00, 0b10, 0b11])
