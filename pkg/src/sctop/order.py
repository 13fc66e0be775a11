"""Finite posets over index carriers 0..size-1.

Conventions:
    - up[i] is the bitmask of all j with i <= j (principal filter, includes i)
    - down[i] is the bitmask of all j with j <= i (principal ideal)
    - subsets are int bitmasks, see `bits`

A FinPoset is immutable after construction and validates the order axioms
eagerly; an invalid relation is rejected with the violated axiom and a
witness pair.
"""

from functools import cached_property

from . import bits
from .errors import PosetAxiomError

DEFAULT_CAP = 20


class FinPoset:
    def __init__(self, up: tuple[int, ...]):
        up = tuple(up)
        n = len(up)
        full = bits.full_mask(n)
        for i, row in enumerate(up):
            if row & ~full:
                raise PosetAxiomError("carrier", (i, row))
            if not bits.contains(row, i):
                raise PosetAxiomError("reflexivity", (i, i))
        for i in range(n):
            for j in bits.iter_indices(up[i]):
                if not bits.is_subset(up[j], up[i]):
                    k = (up[j] & ~up[i]).bit_length() - 1
                    raise PosetAxiomError("transitivity", (i, j, k))
                if j != i and bits.contains(up[j], i):
                    raise PosetAxiomError("antisymmetry", (i, j))
        self.size = n
        self.up = up

    @classmethod
    def from_relation(cls, size: int, pairs) -> "FinPoset":
        """Build from the full relation given as (i, j) pairs meaning i <= j."""
        up = [0] * size
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise IndexError(f"pair ({i},{j}) out of range for size {size}")
            up[i] |= 1 << j
        return cls(tuple(up))

    @classmethod
    def from_cover_pairs(cls, size: int, pairs) -> "FinPoset":
        """Build from generating pairs; takes the reflexive-transitive closure.

        Cycles surface as antisymmetry failures in the closure.
        """
        up = [1 << i for i in range(size)]
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise IndexError(f"pair ({i},{j}) out of range for size {size}")
            up[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(size):
                row = up[i]
                for j in bits.iter_indices(row):
                    merged = row | up[j]
                    if merged != row:
                        row = merged
                        changed = True
                up[i] = row
        return cls(tuple(up))

    @classmethod
    def chain(cls, n: int) -> "FinPoset":
        return cls(tuple(bits.full_mask(n) & ~bits.full_mask(i) for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "FinPoset":
        return cls(tuple(1 << i for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, FinPoset) and self.up == other.up

    def __hash__(self):
        return hash(self.up)

    def __repr__(self):
        pairs = [(i, j) for i in range(self.size)
                 for j in bits.iter_indices(self.up[i]) if i != j]
        return f"FinPoset(size={self.size}, lt={pairs})"

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.size
        for i in range(self.size):
            for j in bits.iter_indices(self.up[i]):
                down[j] |= 1 << i
        return tuple(down)

    @cached_property
    def full(self) -> int:
        return bits.full_mask(self.size)

    def leq(self, i: int, j: int) -> bool:
        return bits.contains(self.up[i], j)

    def _check_mask(self, a: int):
        if a & ~self.full:
            raise IndexError(f"subset {a:#x} has members outside 0..{self.size - 1}")

    def down_closure(self, a: int) -> int:
        """Smallest down-set containing a: all x below or equal to some member."""
        self._check_mask(a)
        out = 0
        for i in bits.iter_indices(a):
            out |= self.down[i]
        return out

    def up_closure(self, a: int) -> int:
        """Smallest up-set containing a: all x above or equal to some member."""
        self._check_mask(a)
        out = 0
        for i in bits.iter_indices(a):
            out |= self.up[i]
        return out

    def is_down_set(self, a: int) -> bool:
        return self.down_closure(a) == a

    def is_up_set(self, a: int) -> bool:
        return self.up_closure(a) == a

    def is_directed(self, d: int) -> bool:
        """Nonempty, and every pair of members has an upper bound among members."""
        if d == 0:
            return False
        members = bits.to_indices(d)
        for a in members:
            for b in members:
                if not any(bits.contains(self.up[a], c) and bits.contains(self.up[b], c)
                           for c in members):
                    return False
        return True

    def upper_bounds(self, a: int) -> int:
        ub = self.full
        for i in bits.iter_indices(a):
            ub &= self.up[i]
        return ub

    def sup(self, a: int) -> int | None:
        """Least upper bound index, or None.

        sup of the empty subset is None by convention, even when a least
        element exists.
        """
        if a == 0:
            return None
        ub = self.upper_bounds(a)
        for u in bits.iter_indices(ub):
            if bits.is_subset(ub, self.up[u]):
                return u
        return None

    def maximum_of(self, a: int) -> int | None:
        """Greatest member of the subset itself, or None."""
        for m in bits.iter_indices(a):
            if bits.is_subset(a, self.down[m]):
                return m
        return None

    def maximal_elements(self, a: int) -> list[int]:
        return [m for m in bits.iter_indices(a) if self.up[m] & a == 1 << m]

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction as (lower, upper) pairs, sorted by index."""
        out = []
        for i in range(self.size):
            strict = self.up[i] & ~(1 << i)
            for j in bits.iter_indices(strict):
                between = strict & (self.down[j] & ~(1 << j))
                if between == 0:
                    out.append((i, j))
        return out

    def relabel(self, perm) -> "FinPoset":
        """Poset where perm[i] plays the role i played here."""
        n = self.size
        up = [0] * n
        for i in range(n):
            row = 0
            for j in bits.iter_indices(self.up[i]):
                row |= 1 << perm[j]
            up[perm[i]] = row
        return FinPoset(tuple(up))

    def iter_isomorphisms(self, other: "FinPoset"):
        """All order-isomorphisms self -> other as permutation tuples.

        Backtracking with degree-profile pruning; fine for the sizes the
        workbench enumerates (<= 8).
        """
        if self.size != other.size:
            return
        n = self.size

        def profile(p, i):
            return (bits.popcount(p.up[i]), bits.popcount(p.down[i]))

        mine = [profile(self, i) for i in range(n)]
        theirs = [profile(other, i) for i in range(n)]
        candidates = [[j for j in range(n) if theirs[j] == mine[i]] for i in range(n)]
        assign = [-1] * n
        used = [False] * n

        def ok(i, j):
            for k in range(i):
                if self.leq(i, k) != other.leq(j, assign[k]):
                    return False
                if self.leq(k, i) != other.leq(assign[k], j):
                    return False
            return True

        def backtrack(i):
            if i == n:
                yield tuple(assign)
                return
            for j in candidates[i]:
                if not used[j] and ok(i, j):
                    assign[i] = j
                    used[j] = True
                    yield from backtrack(i + 1)
                    used[j] = False
                    assign[i] = -1

        yield from backtrack(0)

    def is_isomorphic(self, other: "FinPoset") -> bool:
        return next(self.iter_isomorphisms(other), None) is not None
