"""Finitely-presented infinite spaces with bespoke decision procedures.

Entries code their points as integers; limit points get reserved negative
codes. Each entry ships exact procedures for the questions it supports
(order, irreducibility and directedness of descriptor-denoted subsets,
suprema, symbolic closed forms, the SI-openness clause) plus a finite
truncation used to cross-validate the symbolic answers against brute force.

Truncations take the Alexandroff topology of the induced order on the
first n enumerated points; for every entry here that equals the relative
topology. Traces of tails realize the up-sets of a finite chain segment,
traces of cofinite sets realize every subset of a finite carrier, and
Scott-open neighborhoods with column tails chosen beyond a finite sample
realize every induced up-set of the two-dimensional poset.

Descriptor admissibility is entry-specific and rejected loudly; nothing is
approximated silently.
"""

from dataclasses import dataclass

from .errors import (UnsupportedCompletion, UnsupportedDescriptor,
                     UnsupportedForm)
from .order import FinPoset
from .spaces import FinSpace, alexandroff

# ---------------------------------------------------------------------------
# descriptors of (nonempty) subsets and symbolic closed/open forms


@dataclass(frozen=True)
class FiniteSet:
    members: tuple[int, ...]


@dataclass(frozen=True)
class ChainTail:
    """All finite points from `start` on (never includes limit points)."""
    start: int


@dataclass(frozen=True)
class Cofinite:
    """All finite points except the listed ones."""
    excluded: tuple[int, ...] = ()


@dataclass(frozen=True)
class WholeSpace:
    pass


@dataclass(frozen=True)
class Column:
    j: int


@dataclass(frozen=True)
class ClosedEmpty:
    pass


@dataclass(frozen=True)
class ClosedFinite:
    members: tuple[int, ...]


@dataclass(frozen=True)
class ClosedWhole:
    pass


@dataclass(frozen=True)
class PrincipalIdeals:
    """Union of the down-sets of the listed generator codes."""
    generators: tuple[int, ...]


@dataclass(frozen=True)
class OpenEmpty:
    pass


@dataclass(frozen=True)
class OpenWhole:
    pass


@dataclass(frozen=True)
class TailOpen:
    """Everything from `start` on, limit points included."""
    start: int


@dataclass(frozen=True)
class CofiniteOpen:
    excluded: tuple[int, ...] = ()


@dataclass(frozen=True)
class FiniteOpen:
    members: tuple[int, ...]


@dataclass(frozen=True)
class CofinitePlusTop:
    """A cofinite set of finite points together with the added top."""
    excluded: tuple[int, ...] = ()


@dataclass(frozen=True)
class SymbolicCompletion:
    """Completion of a catalog entry: the target entry, the unit on point
    codes, and the codes the completion adds beyond the unit's image."""
    completion: "SymbolicSpace"
    new_point_codes: tuple[int, ...]
    notes: str

    def eta_code(self, code: int) -> int:
        return code


class SymbolicSpace:
    """Shared machinery; entries override the decision procedures."""

    id = "abstract"

    def contains_code(self, code: int) -> bool:
        raise NotImplementedError

    def point_at(self, i: int) -> int:
        """Canonical enumeration used by truncations."""
        raise NotImplementedError

    def describe_point(self, code: int) -> str:
        raise NotImplementedError

    def leq(self, a: int, b: int) -> bool:
        raise NotImplementedError

    # descriptors ----------------------------------------------------------

    def admissible(self, d) -> bool:
        raise NotImplementedError

    def _require(self, d):
        if not self.admissible(d):
            raise UnsupportedDescriptor(f"{d!r} is not admissible for {self.id}")

    def descriptor_member(self, d, code: int) -> bool:
        if not self.contains_code(code):
            return False
        if isinstance(d, FiniteSet):
            return code in d.members
        if isinstance(d, ChainTail):
            return code >= d.start
        if isinstance(d, Cofinite):
            return code >= 0 and code not in d.excluded
        if isinstance(d, WholeSpace):
            return True
        raise UnsupportedDescriptor(f"{d!r} has no membership test for {self.id}")

    def is_irreducible(self, d) -> bool:
        raise NotImplementedError

    def is_directed(self, d) -> bool:
        raise NotImplementedError

    def sup(self, d) -> int | None:
        raise NotImplementedError

    # closed and open forms ------------------------------------------------

    def closure_of_finite(self, codes) -> object:
        """Closed form of the closure of a finite point set. In every entry
        the closure of a point is its down-set, so this is a finite union
        of principal ideals, specialized per entry."""
        raise NotImplementedError

    def closed_member(self, form, code: int) -> bool:
        if isinstance(form, ClosedEmpty):
            return False
        if isinstance(form, ClosedWhole):
            return self.contains_code(code)
        if isinstance(form, ClosedFinite):
            return code in form.members
        if isinstance(form, PrincipalIdeals):
            return self.contains_code(code) and any(
                self.leq(code, g) for g in form.generators)
        raise UnsupportedForm(f"{form!r} is not a closed form of {self.id}")

    def valid_open_form(self, u) -> bool:
        raise UnsupportedForm(f"{self.id} has no symbolic open forms")

    def open_member(self, u, code: int) -> bool:
        raise UnsupportedForm(f"{self.id} has no symbolic open forms")

    def is_si_open(self, u) -> bool:
        raise UnsupportedForm(f"{self.id} has no symbolic open forms")

    # truncation and completion --------------------------------------------

    def truncate(self, n: int) -> FinSpace:
        """Alexandroff space of the induced order on the first n points."""
        if n < 0:
            raise ValueError("truncation size must be nonnegative")
        points = [self.point_at(i) for i in range(n)]
        pairs = [(i, j) for i in range(n) for j in range(n)
                 if self.leq(points[i], points[j])]
        poset = FinPoset.from_relation(n, pairs)
        return alexandroff(poset, tuple(self.describe_point(p) for p in points))

    def strong_completion(self) -> SymbolicCompletion:
        raise UnsupportedCompletion(f"{self.id} has no completion builder")


# ---------------------------------------------------------------------------
# chains: the naturals and the naturals plus a top, Scott topology


class OmegaScott(SymbolicSpace):
    """The naturals as a chain under the Scott topology.

    Opens are the empty set and the tails; every nonempty subset is
    directed (hence irreducible), and exactly the bounded subsets have
    suprema (their maxima). The space is not strongly complete: the whole
    chain is irreducible with no upper bound.
    """

    id = "omega"

    def contains_code(self, code):
        return code >= 0

    def point_at(self, i):
        return i

    def describe_point(self, code):
        return str(code)

    def leq(self, a, b):
        return a <= b

    def admissible(self, d):
        if isinstance(d, FiniteSet):
            return len(d.members) > 0 and all(self.contains_code(c) for c in d.members)
        if isinstance(d, ChainTail):
            return d.start >= 0
        if isinstance(d, Cofinite):
            return all(c >= 0 for c in d.excluded)
        return isinstance(d, WholeSpace)

    def is_irreducible(self, d):
        self._require(d)
        # two tails meeting a set share their larger tail, and any member of
        # the set inside the smaller tail sits under a member inside both
        return True

    def is_directed(self, d):
        self._require(d)
        return True

    def sup(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            return max(d.members)
        return None  # tails, cofinite sets and the whole chain are unbounded

    def closure_of_finite(self, codes):
        codes = tuple(codes)
        if not codes:
            return ClosedEmpty()
        return PrincipalIdeals((max(codes),))

    def valid_open_form(self, u):
        if isinstance(u, (OpenEmpty, OpenWhole)):
            return True
        if isinstance(u, TailOpen):
            return u.start >= 0
        raise UnsupportedForm(f"{u!r} is not an open form of {self.id}")

    def open_member(self, u, code):
        self.valid_open_form(u)
        if not self.contains_code(code):
            return False
        if isinstance(u, OpenEmpty):
            return False
        if isinstance(u, OpenWhole):
            return True
        return code >= u.start

    def is_si_open(self, u):
        self.valid_open_form(u)
        # the sets with suprema are the bounded ones, and a bounded chain
        # subset contains its own maximum; a sup landing in an open set
        # therefore always comes with a member of the set in that open
        return True

    def strong_completion(self):
        return SymbolicCompletion(
            OMEGA_PLUS_ONE, (OmegaPlusOneScott.OMEGA,),
            "the chain of point closures is irreducible in the hyperspace "
            "with supremum the whole carrier; its I-closure adds that single "
            "top, giving the chain of naturals with a limit point added")


class OmegaPlusOneScott(SymbolicSpace):
    """The chain of naturals with a top limit point, Scott topology.

    Strongly complete: bounded sets own their maxima and every unbounded
    set of naturals has the limit point as least upper bound. The limit
    point is enumerated first so truncations contain it.
    """

    id = "omega_plus_one"
    OMEGA = -1

    def contains_code(self, code):
        return code >= 0 or code == self.OMEGA

    def point_at(self, i):
        return self.OMEGA if i == 0 else i - 1

    def describe_point(self, code):
        return "w" if code == self.OMEGA else str(code)

    def leq(self, a, b):
        if b == self.OMEGA:
            return True
        if a == self.OMEGA:
            return False
        return a <= b

    def admissible(self, d):
        if isinstance(d, FiniteSet):
            return len(d.members) > 0 and all(self.contains_code(c) for c in d.members)
        if isinstance(d, ChainTail):
            return d.start >= 0
        if isinstance(d, Cofinite):
            return all(c >= 0 for c in d.excluded)
        return isinstance(d, WholeSpace)

    def is_irreducible(self, d):
        self._require(d)
        return True

    def is_directed(self, d):
        self._require(d)
        return True

    def sup(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            if self.OMEGA in d.members:
                return self.OMEGA
            return max(d.members)
        # tails, cofinite sets, and the whole space contain unboundedly
        # large naturals; the least upper bound is the limit point
        return self.OMEGA

    def closure_of_finite(self, codes):
        codes = tuple(codes)
        if not codes:
            return ClosedEmpty()
        if self.OMEGA in codes:
            return ClosedWhole()  # the down-set of the top is everything
        return PrincipalIdeals((max(codes),))

    def valid_open_form(self, u):
        if isinstance(u, (OpenEmpty, OpenWhole)):
            return True
        if isinstance(u, TailOpen):
            return u.start >= 0
        raise UnsupportedForm(f"{u!r} is not an open form of {self.id}")

    def open_member(self, u, code):
        self.valid_open_form(u)
        if not self.contains_code(code):
            return False
        if isinstance(u, OpenEmpty):
            return False
        if isinstance(u, OpenWhole):
            return True
        return code == self.OMEGA or code >= u.start

    def is_si_open(self, u):
        """Inaccessibility clause, checked against the descriptor classes.

        Bounded sets put their own maximum in any open that holds their
        sup. The sets with sup at the limit point are the unbounded ones
        (the tails and their supersets); a tail from s meets every open
        tail from k at max(s, k). So every open passes.
        """
        self.valid_open_form(u)
        if isinstance(u, (OpenEmpty, OpenWhole)):
            return True
        probe = ChainTail(u.start + 1)
        return self.open_member(u, self.sup(probe)) and any(
            self.open_member(u, c) and self.descriptor_member(probe, c)
            for c in range(u.start + 1, u.start + 3))

    def strong_completion(self):
        return SymbolicCompletion(
            self, (), "already strongly complete; the unit is a homeomorphism")


OMEGA_PLUS_ONE = OmegaPlusOneScott()


# ---------------------------------------------------------------------------
# the naturals with the cofinite topology, discrete specialization order


class NatCofinite(SymbolicSpace):
    """The naturals with the cofinite topology.

    T1, so the specialization order is flat. Irreducible subsets are the
    singletons and the infinite sets (two cofinite opens intersect in a
    cofinite set, which every infinite set meets); only the singletons
    have suprema. The completion adds a single top point.
    """

    id = "nat_cofinite"

    def contains_code(self, code):
        return code >= 0

    def point_at(self, i):
        return i

    def describe_point(self, code):
        return str(code)

    def leq(self, a, b):
        return a == b

    def admissible(self, d):
        if isinstance(d, FiniteSet):
            return len(d.members) > 0 and all(self.contains_code(c) for c in d.members)
        if isinstance(d, (ChainTail, Cofinite)):
            return True
        return isinstance(d, WholeSpace)

    def is_irreducible(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            # distinct points a, b admit opens avoiding everything but a
            # (resp. b); the pair intersection misses the set entirely
            return len(set(d.members)) == 1
        return True

    def is_directed(self, d):
        self._require(d)
        return isinstance(d, FiniteSet) and len(set(d.members)) == 1

    def sup(self, d):
        self._require(d)
        if isinstance(d, FiniteSet) and len(set(d.members)) == 1:
            return d.members[0]
        return None  # distinct points never share an upper bound here

    def closure_of_finite(self, codes):
        codes = tuple(sorted(set(codes)))
        if not codes:
            return ClosedEmpty()
        return ClosedFinite(codes)

    def valid_open_form(self, u):
        if isinstance(u, (OpenEmpty, OpenWhole, CofiniteOpen)):
            return True
        raise UnsupportedForm(f"{u!r} is not an open form of {self.id}")

    def open_member(self, u, code):
        self.valid_open_form(u)
        if not self.contains_code(code):
            return False
        if isinstance(u, OpenEmpty):
            return False
        if isinstance(u, OpenWhole):
            return True
        return code not in u.excluded

    def is_si_open(self, u):
        self.valid_open_form(u)
        # the only irreducible sets with suprema are singletons, and a
        # singleton whose member lies in an open set meets it
        return True

    def strong_completion(self):
        return SymbolicCompletion(
            NAT_COFINITE_COMPLETION, (NatCofinitePlusTop.TOP,),
            "the family of all point closures is irreducible in the "
            "hyperspace (every finite intersection of its subbasic opens is "
            "a nonempty cofinite condition) with supremum the whole carrier, "
            "so the point-closure image is not I-closed; its I-closure adds "
            "exactly that one top")


class NatCofinitePlusTop(SymbolicSpace):
    """Completion target for the cofinite naturals: a flat antichain of
    naturals under one added top. Opens are the empty set and the sets
    (cofinite set of naturals) + top; in particular every nonempty open
    contains the top."""

    id = "nat_cofinite_completion"
    TOP = -1

    def contains_code(self, code):
        return code >= 0 or code == self.TOP

    def point_at(self, i):
        return self.TOP if i == 0 else i - 1

    def describe_point(self, code):
        return "top" if code == self.TOP else str(code)

    def leq(self, a, b):
        return a == b or b == self.TOP

    def admissible(self, d):
        if isinstance(d, FiniteSet):
            return len(d.members) > 0 and all(self.contains_code(c) for c in d.members)
        if isinstance(d, (ChainTail, Cofinite)):
            return True
        return isinstance(d, WholeSpace)

    def is_irreducible(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            members = set(d.members)
            if self.TOP in members or len(members) == 1:
                # every nonempty open contains the top
                return True
            return False
        return True  # infinite sets of naturals meet cofinite conditions

    def is_directed(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            members = set(d.members)
            return self.TOP in members or len(members) == 1
        return False  # pairs of distinct naturals have no bound inside

    def sup(self, d):
        self._require(d)
        if isinstance(d, FiniteSet):
            members = set(d.members)
            if len(members) == 1 and self.TOP not in members:
                return next(iter(members))
            return self.TOP
        return self.TOP  # the top is the unique upper bound of infinite sets

    def closure_of_finite(self, codes):
        codes = tuple(sorted(set(codes)))
        if not codes:
            return ClosedEmpty()
        if self.TOP in codes:
            return ClosedWhole()
        return ClosedFinite(codes)

    def valid_open_form(self, u):
        if isinstance(u, (OpenEmpty, OpenWhole, CofinitePlusTop)):
            return True
        raise UnsupportedForm(f"{u!r} is not an open form of {self.id}")

    def open_member(self, u, code):
        self.valid_open_form(u)
        if not self.contains_code(code):
            return False
        if isinstance(u, OpenEmpty):
            return False
        if isinstance(u, OpenWhole):
            return True
        return code == self.TOP or code not in u.excluded

    def is_si_open(self, u):
        self.valid_open_form(u)
        return True

    def probe_is_open(self, natural_part: str, include_top: bool) -> bool:
        """Ground-truth membership in the topology for a described subset.

        natural_part is 'empty', 'finite' (nonempty), or 'cofinite'. Open
        sets are the empty set and the cofinite-plus-top sets, nothing else.
        """
        if natural_part == "empty" and not include_top:
            return True
        return include_top and natural_part == "cofinite"

    def strong_completion(self):
        return SymbolicCompletion(
            self, (), "already strongly complete; the unit is a homeomorphism")


NAT_COFINITE_COMPLETION = NatCofinitePlusTop()


class NatAntichain(SymbolicSpace):
    """The naturals under the discrete (Alexandroff antichain) topology.

    Irreducible sets are exactly the singletons (distinct points sit in
    disjoint opens), so the space is already strongly complete and its
    completion is itself.
    """

    id = "nat_antichain"

    def contains_code(self, code):
        return code >= 0

    def point_at(self, i):
        return i

    def describe_point(self, code):
        return str(code)

    def leq(self, a, b):
        return a == b

    def admissible(self, d):
        if isinstance(d, FiniteSet):
            return len(d.members) > 0 and all(self.contains_code(c) for c in d.members)
        if isinstance(d, (ChainTail, Cofinite)):
            return True
        return isinstance(d, WholeSpace)

    def is_irreducible(self, d):
        self._require(d)
        return isinstance(d, FiniteSet) and len(set(d.members)) == 1

    def is_directed(self, d):
        self._require(d)
        return isinstance(d, FiniteSet) and len(set(d.members)) == 1

    def sup(self, d):
        self._require(d)
        if isinstance(d, FiniteSet) and len(set(d.members)) == 1:
            return d.members[0]
        return None

    def closure_of_finite(self, codes):
        codes = tuple(sorted(set(codes)))
        if not codes:
            return ClosedEmpty()
        return ClosedFinite(codes)

    def valid_open_form(self, u):
        if isinstance(u, (OpenEmpty, OpenWhole, CofiniteOpen, FiniteOpen)):
            return True
        raise UnsupportedForm(f"{u!r} is not an open form of {self.id}")

    def open_member(self, u, code):
        self.valid_open_form(u)
        if not self.contains_code(code):
            return False
        if isinstance(u, OpenEmpty):
            return False
        if isinstance(u, OpenWhole):
            return True
        if isinstance(u, FiniteOpen):
            return code in u.members
        return code not in u.excluded

    def is_si_open(self, u):
        self.valid_open_form(u)
        return True

    def strong_completion(self):
        return SymbolicCompletion(
            self, (),
            "the point-closure image is already I-closed: an irreducible "
            "family of singleton closures is a single point closure")


# ---------------------------------------------------------------------------
# the two-dimensional poset with a top row of column limits


def _cantor_pair(j: int, k: int) -> int:
    return (j + k) * (j + k + 1) // 2 + k


def _cantor_unpair(c: int) -> tuple[int, int]:
    w = int(((8 * c + 1) ** 0.5 - 1) // 2)
    while (w + 1) * (w + 2) // 2 <= c:
        w += 1
    while w * (w + 1) // 2 > c:
        w -= 1
    k = c - w * (w + 1) // 2
    return (w - k, k)


class _JohnstoneBase(SymbolicSpace):
    """Points (j, k) with j a natural and k a natural or the column limit.

    (a, b) <= (c, d) iff the points share a column with b below d, or d is
    a column limit with b a natural at most c. Column limits are coded as
    -(j+1); finite points by the Cantor pairing. The enumeration
    interleaves finite points with column limits so truncations see both.
    """

    OMEGA = None  # internal marker for a column limit's second coordinate

    def decode(self, code: int) -> tuple[int, int | None]:
        if code < 0:
            return (-(code + 1), None)
        return _cantor_unpair(code)

    def encode(self, j: int, k: int | None) -> int:
        if k is None:
            return -(j + 1)
        return _cantor_pair(j, k)

    def contains_code(self, code):
        return True if code < 0 else code >= 0

    def point_at(self, i):
        if i % 2 == 1:
            return -(i // 2 + 1)
        return i // 2

    def describe_point(self, code):
        j, k = self.decode(code)
        return f"({j},w)" if k is None else f"({j},{k})"

    def leq(self, a, b):
        aj, ak = self.decode(a)
        bj, bk = self.decode(b)
        if bk is None:
            if ak is None:
                return aj == bj
            return aj == bj or ak <= bj
        if ak is None:
            return False
        return aj == bj and ak <= bk

    def admissible(self, d):
        if isinstance(d, Column):
            return d.j >= 0
        return isinstance(d, WholeSpace)

    def descriptor_member(self, d, code):
        if isinstance(d, Column):
            return self.decode(code)[0] == d.j
        if isinstance(d, WholeSpace):
            return True
        raise UnsupportedDescriptor(f"{d!r} has no membership test for {self.id}")

    def is_directed(self, d):
        self._require(d)
        if isinstance(d, Column):
            return True  # a column is a chain with its limit on top
        # the column limits are pairwise incomparable maximal points, so
        # e.g. (0,w) and (1,w) have no upper bound at all
        return False

    def sup(self, d):
        self._require(d)
        if isinstance(d, Column):
            return self.encode(d.j, None)
        return None  # no point sits above every column limit

    def closure_of_finite(self, codes):
        codes = tuple(codes)
        if not codes:
            return ClosedEmpty()
        gens = [c for c in codes
                if not any(o != c and self.leq(c, o) for o in codes)]
        return PrincipalIdeals(tuple(sorted(set(gens))))


class JohnstoneScott(_JohnstoneBase):
    """Scott topology on the two-dimensional poset.

    A nonempty Scott open containing any point must contain a cofinal tail
    of some column, hence all column limits from some index on; two such
    opens overlap on a far-out column limit. The whole space is therefore
    irreducible even though it is not directed.
    """

    id = "johnstone"

    def is_irreducible(self, d):
        self._require(d)
        return True


class JohnstoneAlex(_JohnstoneBase):
    """Alexandroff topology on the same poset: opens are all up-sets, and a
    column limit's singleton up-set is open. Irreducible then means
    directed, so the whole space is reducible."""

    id = "johnstone_alex"

    def is_irreducible(self, d):
        self._require(d)
        return isinstance(d, Column)


CATALOG: dict[str, SymbolicSpace] = {}
for _entry in (OmegaScott(), OMEGA_PLUS_ONE, NatCofinite(),
               NAT_COFINITE_COMPLETION, NatAntichain(),
               JohnstoneScott(), JohnstoneAlex()):
    CATALOG[_entry.id] = _entry


def get_entry(name: str) -> SymbolicSpace:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog space {name!r}; "
                       f"known: {', '.join(sorted(CATALOG))}") from None


# functional aliases over the entry methods ------------------------------------

def sym_is_irreducible(s: SymbolicSpace, d) -> bool:
    return s.is_irreducible(d)


def sym_is_directed(s: SymbolicSpace, d) -> bool:
    return s.is_directed(d)


def sym_sup(s: SymbolicSpace, d) -> int | None:
    return s.sup(d)


def sym_is_si_open(s: SymbolicSpace, u) -> bool:
    return s.is_si_open(u)


def sym_strong_completion(s: SymbolicSpace) -> SymbolicCompletion:
    return s.strong_completion()


def truncate(s: SymbolicSpace, n: int) -> FinSpace:
    return s.truncate(n)


def parse_descriptor(text: str):
    """CLI syntax: whole | finite:1,2 | tail:5 | cofinite:1,2 | column:3."""
    head, _, rest = text.partition(":")
    head = head.strip()
    if head == "whole":
        return WholeSpace()
    if head == "finite":
        return FiniteSet(tuple(int(t) for t in rest.split(",") if t.strip()))
    if head == "tail":
        return ChainTail(int(rest))
    if head == "cofinite":
        return Cofinite(tuple(int(t) for t in rest.split(",") if t.strip()))
    if head == "column":
        return Column(int(rest))
    raise ValueError(f"cannot read descriptor {text!r}")


def parse_open_form(text: str):
    """CLI syntax: empty | whole | tail:5 | cofinite:1,2 | finite:1,2 |
    cofinite+top:1,2."""
    head, _, rest = text.partition(":")
    head = head.strip()
    if head == "empty":
        return OpenEmpty()
    if head == "whole":
        return OpenWhole()
    if head == "tail":
        return TailOpen(int(rest))
    if head == "cofinite":
        return CofiniteOpen(tuple(int(t) for t in rest.split(",") if t.strip()))
    if head == "finite":
        return FiniteOpen(tuple(int(t) for t in rest.split(",") if t.strip()))
    if head == "cofinite+top":
        return CofinitePlusTop(tuple(int(t) for t in rest.split(",") if t.strip()))
    raise ValueError(f"cannot read open form {text!r}")
