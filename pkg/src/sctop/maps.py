"""Total maps between finite spaces and their continuity grades.

The grades: continuous (preimages of opens are open), I-continuous
(preimages of I-closed sets are I-closed), SI-continuous (continuous for
the SI topologies on both sides), SI+-continuous (continuous and
SI-continuous), and sup preservation over irreducible sets with sups.

`classify` reports every grade and must attach a counterexample witness to
each failed flag; a False without a witness is a bug.
"""

from dataclasses import dataclass, field

from . import bits
from .errors import SpaceMismatch
from .order import DEFAULT_CAP
from .spaces import FinSpace


class SpaceMap:
    def __init__(self, src: FinSpace, dst: FinSpace, table):
        table = tuple(table)
        if len(table) != src.size:
            raise ValueError(f"table length {len(table)} != carrier size {src.size}")
        for i, v in enumerate(table):
            if not (0 <= v < dst.size):
                raise ValueError(f"image of {i} is {v}, outside the target carrier")
        self.src = src
        self.dst = dst
        self.table = table

    def __eq__(self, other):
        return (isinstance(other, SpaceMap) and self.src == other.src
                and self.dst == other.dst and self.table == other.table)

    def __hash__(self):
        return hash((self.src, self.dst, self.table))

    def __repr__(self):
        return f"SpaceMap({self.table})"

    def __call__(self, i: int) -> int:
        return self.table[i]

    def image_mask(self, a: int) -> int:
        out = 0
        for i in bits.iter_indices(a):
            out |= 1 << self.table[i]
        return out

    def preimage_mask(self, b: int) -> int:
        out = 0
        for i, v in enumerate(self.table):
            if bits.contains(b, v):
                out |= 1 << i
        return out


def identity_map(x: FinSpace) -> SpaceMap:
    return SpaceMap(x, x, range(x.size))


def compose(g: SpaceMap, f: SpaceMap) -> SpaceMap:
    """g after f; the middle spaces must agree extensionally."""
    if f.dst != g.src:
        raise SpaceMismatch("inner target differs from outer source")
    return SpaceMap(f.src, g.dst, tuple(g.table[v] for v in f.table))


@dataclass(frozen=True)
class Witness:
    kind: str
    data: tuple
    text: str


@dataclass
class ContinuityReport:
    continuous: bool
    monotone: bool
    i_continuous: bool
    si_continuous: bool
    si_plus_continuous: bool
    preserves_irr_sups: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {
            "continuous": self.continuous,
            "monotone": self.monotone,
            "i_continuous": self.i_continuous,
            "si_continuous": self.si_continuous,
            "si_plus_continuous": self.si_plus_continuous,
            "preserves_irr_sups": self.preserves_irr_sups,
        }


def continuity_witness(f: SpaceMap) -> int | None:
    """A target open with non-open preimage, or None."""
    for v in f.dst.opens_sorted:
        if f.preimage_mask(v) not in f.src.opens:
            return v
    return None


def monotonicity_witness(f: SpaceMap) -> tuple[int, int] | None:
    ps, pd = f.src.specialization, f.dst.specialization
    for a in range(f.src.size):
        for b in bits.iter_indices(ps.up[a]):
            if not pd.leq(f.table[a], f.table[b]):
                return (a, b)
    return None


def i_continuity_witness(f: SpaceMap, cap: int = DEFAULT_CAP) -> int | None:
    """An I-closed target set whose preimage is not I-closed, or None."""
    for b in f.dst.theta(cap):
        if not f.src.is_i_closed(f.preimage_mask(b), cap):
            return b
    return None


def si_continuity_witness(f: SpaceMap, cap: int = DEFAULT_CAP) -> int | None:
    """An SI-open target set whose preimage is not SI-open, or None."""
    for v in f.dst.si_opens(cap):
        if not f.src.is_si_open(f.preimage_mask(v), cap):
            return v
    return None


def irr_sup_witness(f: SpaceMap, cap: int = DEFAULT_CAP) -> int | None:
    """An irreducible source set with a sup whose image sup is missing or
    different from the image of the sup, or None."""
    ps, pd = f.src.specialization, f.dst.specialization
    f.src._cap(cap, "sup-preservation test")
    for fset, s in f.src._irr_with_sups:
        if s is None:
            continue
        t = pd.sup(f.image_mask(fset))
        if t is None or t != f.table[s]:
            return fset
    return None


def is_continuous(f: SpaceMap) -> bool:
    return continuity_witness(f) is None


def is_monotone(f: SpaceMap) -> bool:
    return monotonicity_witness(f) is None


def is_i_continuous(f: SpaceMap, cap: int = DEFAULT_CAP) -> bool:
    return i_continuity_witness(f, cap) is None


def is_si_continuous(f: SpaceMap, cap: int = DEFAULT_CAP) -> bool:
    return si_continuity_witness(f, cap) is None


def is_si_plus_continuous(f: SpaceMap, cap: int = DEFAULT_CAP) -> bool:
    return is_continuous(f) and is_si_continuous(f, cap)


def preserves_irr_sups(f: SpaceMap, cap: int = DEFAULT_CAP) -> bool:
    return irr_sup_witness(f, cap) is None


def classify(f: SpaceMap, cap: int = DEFAULT_CAP) -> ContinuityReport:
    witnesses = {}

    def note(flag, kind, data, text):
        witnesses[flag] = Witness(kind, data, text)

    w = continuity_witness(f)
    cont = w is None
    if w is not None:
        note("continuous", "open", (w,),
             f"preimage of open {bits.render(w, f.dst.names)} is not open")
    w = monotonicity_witness(f)
    mono = w is None
    if w is not None:
        a, b = w
        note("monotone", "pair", w,
             f"{f.src._label(a)} <= {f.src._label(b)} but images are not ordered")
    w = i_continuity_witness(f, cap)
    icont = w is None
    if w is not None:
        note("i_continuous", "i_closed", (w,),
             f"preimage of I-closed {bits.render(w, f.dst.names)} is not I-closed")
    w = si_continuity_witness(f, cap)
    sicont = w is None
    if w is not None:
        note("si_continuous", "si_open", (w,),
             f"preimage of SI-open {bits.render(w, f.dst.names)} is not SI-open")
    w = irr_sup_witness(f, cap)
    pres = w is None
    if w is not None:
        note("preserves_irr_sups", "irr_set", (w,),
             f"sup of the image of {bits.render(w, f.src.names)} is missing or moved")
    siplus = cont and sicont
    if not siplus:
        which = "continuous" if not cont else "si_continuous"
        note("si_plus_continuous", "conjunct", (which,), f"not {which}")
    report = ContinuityReport(cont, mono, icont, sicont, siplus, pres, witnesses)
    assert report.si_plus_continuous == (report.continuous and report.si_continuous)
    if cont:
        # three-way equivalence for continuous maps
        assert icont == sicont == pres, f"equivalence broke for {f!r}"
    return report
