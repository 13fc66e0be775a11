"""Executable verification suites.

Each suite sweeps an exhaustive population (all labeled T0 spaces up to a
size, all maps between them, catalog truncations) and checks one batch of
facts: the elementary irreducibility properties, the finite-space
collapses, the continuity-grade implications, the hyperspace facts, the
universal property of the completion, the catalog ground truths, and the
parser/serializer laws. A failing check names the fact, serializes the
offending space/map, and shows the witness subset.
"""

import random
from dataclasses import dataclass

from . import bits
from .catalog import (CATALOG, ChainTail, Cofinite, Column, FiniteSet,
                      WholeSpace, get_entry)
from .completion import (adjunction_witness, check_uniqueness,
                         check_universal_property, f_star, gamma_si, psi,
                         strong_completion)
from .dsl import MapDoc, elaborate, elaborate_map, parse_document, print_doc
from .enumeration import all_tables, random_space, spaces_up_to
from .errors import ParseError, SchemaError, SemanticError
from .jsonio import Family, from_json, to_json
from .maps import (SpaceMap, continuity_witness, i_continuity_witness,
                   irr_sup_witness, monotonicity_witness,
                   si_continuity_witness)
from .spaces import FinSpace, alexandroff


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    checked: int
    witness: str = ""

    def line(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        extra = f"  [{self.witness}]" if self.witness else ""
        return f"{mark}  {self.suite}/{self.name}  ({self.checked} checks){extra}"


class _Agg:
    def __init__(self, suite: str, name: str):
        self.suite = suite
        self.name = name
        self.checked = 0
        self.witness = ""
        self.passed = True

    def add(self, ok: bool, witness: str = ""):
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness

    def result(self) -> CheckResult:
        return CheckResult(self.suite, self.name, self.passed, self.checked,
                           self.witness)


def _w(x: FinSpace, extra: str = "") -> str:
    tail = f" {extra}" if extra else ""
    return f"space={to_json(x)}{tail}"


# ---------------------------------------------------------------------------
# finite collapse


def suite_finite_collapse(max_size: int = 4) -> list[CheckResult]:
    suite = "finite-collapse"
    aggs = {name: _Agg(suite, name) for name in (
        "irr-definitional-vs-shortcut",
        "irreducible-iff-has-maximum",
        "irr-equals-irr-plus",
        "si-topology-is-identity",
        "theta-is-powerset",
        "cl-i-is-identity",
        "cl-i-fixpoint-vs-intersection",
        "strongly-complete",
        "completion-homeomorphic-via-eta",
    )}
    for x in spaces_up_to(max_size):
        aggs["irr-definitional-vs-shortcut"].add(
            x.irr_sets() == x.irr_sets_bruteforce(), _w(x))
        ok = all(x.is_irreducible(f) == x.has_maximum(f)
                 for f in range(x.full + 1))
        aggs["irreducible-iff-has-maximum"].add(ok, _w(x))
        aggs["irr-equals-irr-plus"].add(x.irr_sets() == x.irr_plus_sets(), _w(x))
        aggs["si-topology-is-identity"].add(
            set(x.si_opens()) == x.opens, _w(x))
        aggs["theta-is-powerset"].add(
            x.theta() == bits.family_sort(range(x.full + 1), x.size), _w(x))
        aggs["cl-i-is-identity"].add(
            all(x.cl_i(a) == a for a in range(x.full + 1)), _w(x))
        aggs["cl-i-fixpoint-vs-intersection"].add(
            all(x.cl_i(a) == x.cl_i_bruteforce(a) for a in range(x.full + 1)),
            _w(x))
        aggs["strongly-complete"].add(x.is_strongly_complete(), _w(x))
        c = strong_completion(x)
        bijective = (c.completion.size == x.size
                     and len(set(c.eta.table)) == x.size)
        homeo = bijective and (
            x.size == 0 or x.relabel(c.eta.table).opens == c.completion.opens)
        aggs["completion-homeomorphic-via-eta"].add(
            homeo and all(c.witnesses.values()),
            _w(x, f"witnesses={c.witnesses}"))
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# elementary irreducibility and I-closure facts


def suite_elementary(max_size: int = 4) -> list[CheckResult]:
    suite = "elementary"
    aggs = {name: _Agg(suite, name) for name in (
        "singletons-irreducible",
        "irreducible-iff-closure-irreducible",
        "directed-implies-irreducible",
        "continuous-image-irreducible",
        "subspace-irreducibles-filter",
        "subspace-order-agrees",
        "point-closure-triple-closed",
        "si-closed-iff-complement-si-open",
        "clopen-agrees-with-si",
        "connected-agrees-with-si",
        "upper-sets-i-closed",
        "opens-cap-delta-equals-si-opens",
        "irr-subset-of-si-irr",
        "theta-intersection-closed",
        "cl-i-closure-operator",
        "opens-are-up-sets",
    )}
    for x in spaces_up_to(max_size):
        p = x.specialization
        aggs["singletons-irreducible"].add(
            all(x.is_irreducible(1 << i) for i in range(x.size)), _w(x))
        aggs["irreducible-iff-closure-irreducible"].add(
            all(x.is_irreducible(f) == x.is_irreducible(x.closure(f))
                for f in range(1, x.full + 1)), _w(x))
        aggs["directed-implies-irreducible"].add(
            all(x.is_irreducible(d) for d in range(1, x.full + 1)
                if p.is_directed(d)), _w(x))
        ok = True
        witness = ""
        irr = x.irr_sets()
        for table in all_tables(x.size, x.size):
            f = SpaceMap(x, x, table)
            if continuity_witness(f) is not None:
                continue
            for fset in irr:
                if not x.is_irreducible(f.image_mask(fset)):
                    ok = False
                    witness = _w(x, f"map={table} set={bits.render(fset)}")
                    break
            if not ok:
                break
        aggs["continuous-image-irreducible"].add(ok, witness)
        ok_irr = ok_ord = True
        for y in range(1, x.full + 1):
            sub = x.subspace(y)
            carrier = bits.to_indices(y)
            back = {new: old for new, old in enumerate(carrier)}
            lifted = bits.family_sort(
                (bits.from_indices(back[i] for i in bits.iter_indices(f))
                 for f in sub.irr_sets()), x.size)
            expected = bits.family_sort(
                (f for f in x.irr_sets() if bits.is_subset(f, y)), x.size)
            if lifted != expected:
                ok_irr = False
            ps = sub.specialization
            if not all(ps.leq(a, b) == p.leq(back[a], back[b])
                       for a in range(sub.size) for b in range(sub.size)):
                ok_ord = False
        aggs["subspace-irreducibles-filter"].add(ok_irr, _w(x))
        aggs["subspace-order-agrees"].add(ok_ord, _w(x))
        aggs["point-closure-triple-closed"].add(
            all(x.closure(1 << i) == p.down[i]
                and x.cl_si(1 << i) == p.down[i]
                and x.is_si_closed(p.down[i])
                and x.is_i_closed(p.down[i])
                and x.is_closed(p.down[i])
                for i in range(x.size)), _w(x))
        aggs["si-closed-iff-complement-si-open"].add(
            all(x.is_si_closed(c) == x.is_si_open(x.full & ~c)
                for c in range(x.full + 1)), _w(x))
        si = x.si_space()
        aggs["clopen-agrees-with-si"].add(
            all(x.is_clopen(u) == si.is_clopen(u) for u in range(x.full + 1)),
            _w(x))
        aggs["connected-agrees-with-si"].add(
            x.is_connected() == si.is_connected(), _w(x))
        aggs["upper-sets-i-closed"].add(
            all(x.is_i_closed(a) for a in range(x.full + 1) if p.is_up_set(a)),
            _w(x))
        delta = set(x.delta())
        aggs["opens-cap-delta-equals-si-opens"].add(
            tuple(u for u in x.opens_sorted if u in delta) == x.si_opens(),
            _w(x))
        aggs["irr-subset-of-si-irr"].add(
            set(x.irr_sets()) <= set(si.irr_sets()), _w(x))
        theta = x.theta()
        tset = set(theta)
        aggs["theta-intersection-closed"].add(
            x.full in tset and all(a & b in tset for a in theta for b in theta),
            _w(x))
        ok_op = all(bits.is_subset(a, x.cl_i(a))
                    and x.cl_i(x.cl_i(a)) == x.cl_i(a)
                    for a in range(x.full + 1))
        if ok_op:
            for b in range(x.full + 1):
                cb = x.cl_i(b)
                if not all(bits.is_subset(x.cl_i(a), cb)
                           for a in bits.subsets_of(b)):
                    ok_op = False
                    break
        aggs["cl-i-closure-operator"].add(ok_op, _w(x))
        aggs["opens-are-up-sets"].add(
            all(p.is_up_set(u) for u in x.opens), _w(x))
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# the continuity hierarchy


def suite_continuity(max_size: int = 3) -> list[CheckResult]:
    suite = "continuity"
    aggs = {name: _Agg(suite, name) for name in (
        "continuous-implies-monotone",
        "si-continuous-implies-monotone",
        "continuous-image-of-closure",
        "continuous-image-irreducible",
        "monotone-implies-sup-preserving",
        "three-way-equivalence",
        "si-plus-image-of-cl-i",
        "si-plus-closed-under-composition",
        "continuous-closed-under-composition",
    )}
    spaces = spaces_up_to(max_size)
    si_plus: dict[tuple[int, int], set] = {}
    cont_tables: dict[tuple[int, int], set] = {}
    for xi, x in enumerate(spaces):
        for zi, z in enumerate(spaces):
            sp = set()
            ct = set()

            def wit(table, extra=""):
                return _w(x, f"map={table} dst={to_json(z)}{extra}")

            for table in all_tables(x.size, z.size):
                f = SpaceMap(x, z, table)
                cont = continuity_witness(f) is None
                mono = monotonicity_witness(f) is None
                sic = si_continuity_witness(f) is None
                if cont:
                    ct.add(table)
                    aggs["continuous-implies-monotone"].add(
                        mono, "" if mono else wit(table))
                if sic:
                    aggs["si-continuous-implies-monotone"].add(
                        mono, "" if mono else wit(table))
                if mono:
                    # on a finite carrier I-continuity is automatic, so this
                    # instantiates "monotone and I-continuous preserve sups"
                    pres_m = irr_sup_witness(f) is None
                    aggs["monotone-implies-sup-preserving"].add(
                        pres_m, "" if pres_m else wit(table))
                if cont:
                    ok = all(bits.is_subset(
                        f.image_mask(x.closure(a)), z.closure(f.image_mask(a)))
                        for a in range(x.full + 1))
                    aggs["continuous-image-of-closure"].add(
                        ok, "" if ok else wit(table))
                    ok = all(z.is_irreducible(f.image_mask(fset))
                             for fset in x.irr_sets())
                    aggs["continuous-image-irreducible"].add(
                        ok, "" if ok else wit(table))
                    ic = i_continuity_witness(f) is None
                    pres = irr_sup_witness(f) is None
                    ok = ic == sic == pres
                    aggs["three-way-equivalence"].add(
                        ok, "" if ok else wit(table, f" i={ic} si={sic} sup={pres}"))
                if cont and sic:
                    sp.add(table)
                    ok = all(bits.is_subset(
                        f.image_mask(x.cl_i(a)), z.cl_i(f.image_mask(a)))
                        for a in range(x.full + 1))
                    aggs["si-plus-image-of-cl-i"].add(
                        ok, "" if ok else wit(table))
            si_plus[(xi, zi)] = sp
            cont_tables[(xi, zi)] = ct
    agg_sp = aggs["si-plus-closed-under-composition"]
    agg_ct = aggs["continuous-closed-under-composition"]
    for yi, y in enumerate(spaces):
        for xi, x in enumerate(spaces):
            inner = si_plus[(xi, yi)]
            inner_c = cont_tables[(xi, yi)]
            if not inner and not inner_c:
                continue
            for zi, z in enumerate(spaces):
                outer = si_plus[(yi, zi)]
                target = si_plus[(xi, zi)]
                for ft in inner:
                    for gt in outer:
                        comp = tuple(gt[v] for v in ft)
                        ok = comp in target
                        agg_sp.add(ok, "" if ok else (
                            f"src={to_json(x)} mid={to_json(y)} "
                            f"dst={to_json(z)} f={ft} g={gt}"))
                outer_c = cont_tables[(yi, zi)]
                target_c = cont_tables[(xi, zi)]
                for ft in inner_c:
                    for gt in outer_c:
                        comp = tuple(gt[v] for v in ft)
                        ok = comp in target_c
                        agg_ct.add(ok, "" if ok else (
                            f"src={to_json(x)} mid={to_json(y)} "
                            f"dst={to_json(z)} f={ft} g={gt}"))
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# the hyperspace of SI-closed sets


def suite_gamma(max_size: int = 4) -> list[CheckResult]:
    suite = "hyperspace"
    aggs = {name: _Agg(suite, name) for name in (
        "specialization-is-inclusion",
        "strongly-complete",
        "lower-vietoris-equals-upset-topology",
        "psi-i-closed-over-complete-base",
        "eta-si-plus-order-embedding",
    )}
    for x in spaces_up_to(max_size):
        g = gamma_si(x)
        aggs["specialization-is-inclusion"].add(
            g.space.specialization == g.inclusion_poset(), _w(x))
        aggs["strongly-complete"].add(
            g.space.is_strongly_complete(max(20, g.space.size)), _w(x))
        aggs["lower-vietoris-equals-upset-topology"].add(
            g.space.opens == alexandroff(g.inclusion_poset()).opens, _w(x))
        pm = psi(x, g)
        aggs["psi-i-closed-over-complete-base"].add(
            g.space.cl_i(pm, max(20, g.space.size)) == pm, _w(x))
        c = strong_completion(x)
        aggs["eta-si-plus-order-embedding"].add(
            c.witnesses["eta_si_plus_continuous"]
            and c.witnesses["eta_order_embedding"]
            and c.witnesses["eta_onto_point_closures"], _w(x))
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# universal property, adjunction, uniqueness


def suite_universal(max_size: int = 3) -> list[CheckResult]:
    suite = "universal-property"
    aggs = {name: _Agg(suite, name) for name in (
        "unique-si-plus-factorization",
        "left-adjoint-of-preimage",
        "f-star-preserves-irr-sups",
        "uniqueness-up-to-homeomorphism",
    )}
    spaces = spaces_up_to(max_size)
    for x in spaces:
        gx = gamma_si(x)
        for z in spaces:
            rep = check_universal_property(x, z, bound=max(4, max_size))
            aggs["unique-si-plus-factorization"].add(
                rep.passed,
                _w(x, f"dst={to_json(z)} "
                      f"entries={[(e.f_table, e.factors, e.extension_count) for e in rep.entries if not (e.factors and e.extension_count == 1)]}"))
            gz = gamma_si(z)
            for table in all_tables(x.size, z.size):
                f = SpaceMap(x, z, table)
                if continuity_witness(f) is not None \
                        or si_continuity_witness(f) is not None:
                    continue
                fs = f_star(f, gx, gz)
                aggs["left-adjoint-of-preimage"].add(
                    adjunction_witness(f, fs, gx, gz) is None,
                    _w(x, f"map={table} dst={to_json(z)}"))
                aggs["f-star-preserves-irr-sups"].add(
                    irr_sup_witness(fs, max(20, gx.space.size)) is None,
                    _w(x, f"map={table} dst={to_json(z)}"))
        rep = check_uniqueness(x)
        aggs["uniqueness-up-to-homeomorphism"].add(
            rep.passed,
            _w(x, f"failing={[e.perm for e in rep.entries if not e.found]}"))
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# catalog ground truths and truncation consistency


def _truncation_checks(agg_cl, agg_irr, agg_dir, entry, n: int):
    t = entry.truncate(n)
    codes = [entry.point_at(i) for i in range(n)]
    subset_cap = n if n <= 6 else 2
    pool = range(t.full + 1) if subset_cap == n else \
        [0] + [1 << i for i in range(n)] + \
        [(1 << i) | (1 << j) for i in range(n) for j in range(i)]
    supports_finite_sets = entry.admissible(FiniteSet((codes[0],))) if n else False
    for mask in pool:
        members = tuple(codes[i] for i in bits.iter_indices(mask))
        form = entry.closure_of_finite(members)
        sym_cl = bits.from_indices(
            i for i in range(n) if entry.closed_member(form, codes[i]))
        agg_cl.add(sym_cl == t.closure(mask),
                   f"entry={entry.id} n={n} set={members}")
        if mask and supports_finite_sets:
            d = FiniteSet(members)
            agg_irr.add(entry.is_irreducible(d) == t.is_irreducible(mask),
                        f"entry={entry.id} n={n} set={members}")
            agg_dir.add(
                entry.is_directed(d) == t.specialization.is_directed(mask),
                f"entry={entry.id} n={n} set={members}")


def suite_catalog(trunc_n: int = 10, probe: int = 64) -> list[CheckResult]:
    suite = "catalog"
    aggs = {name: _Agg(suite, name) for name in (
        "truncation-closures",
        "truncation-irreducibility",
        "truncation-directedness",
        "omega-completion-is-chain-plus-top",
        "omega-eta-embeds-order",
        "nat-cofinite-completion-opens",
        "nat-cofinite-psi-not-i-closed",
        "nat-antichain-completion-identity",
        "johnstone-whole-space",
        "johnstone-columns",
        "completions-strongly-complete-descriptorwise",
        "extension-determined-on-embedded-copy",
    )}
    for entry in CATALOG.values():
        for n in range(trunc_n + 1):
            _truncation_checks(aggs["truncation-closures"],
                               aggs["truncation-irreducibility"],
                               aggs["truncation-directedness"], entry, n)

    omega = get_entry("omega")
    sc = omega.strong_completion()
    comp = sc.completion
    ok = comp.id == "omega_plus_one" and sc.new_point_codes == (-1,)
    top = -1
    for a in range(probe):
        ok = ok and comp.leq(a, top) and not comp.leq(top, a)
        for b in range(probe):
            ok = ok and comp.leq(a, b) == (a <= b)
    aggs["omega-completion-is-chain-plus-top"].add(ok, f"completion={comp.id}")
    aggs["omega-eta-embeds-order"].add(
        all(sc.eta_code(i) == i for i in range(probe))
        and len(sc.new_point_codes) == 1, "eta moved a point")

    natc = get_entry("nat_cofinite")
    scn = natc.strong_completion()
    target = scn.completion
    probes = [
        ("empty", False, True),      # the empty set
        ("cofinite", True, True),    # the whole carrier and any cofinite + top
        ("cofinite", False, False),  # a cofinite set missing the top
        ("finite", True, False),     # a finite set plus the top
        ("finite", False, False),    # a finite set of naturals
        ("empty", True, False),      # the top alone
    ]
    ok = target.id == "nat_cofinite_completion" and scn.new_point_codes == (-1,)
    for natural_part, include_top, expect in probes:
        ok = ok and target.probe_is_open(natural_part, include_top) == expect
    aggs["nat-cofinite-completion-opens"].add(ok, "opens characterization")
    aggs["nat-cofinite-psi-not-i-closed"].add(
        len(scn.new_point_codes) == 1,
        "completion should add exactly one point")

    nata = get_entry("nat_antichain")
    sca = nata.strong_completion()
    aggs["nat-antichain-completion-identity"].add(
        sca.completion is nata and sca.new_point_codes == (), "")

    js = get_entry("johnstone")
    ja = get_entry("johnstone_alex")
    aggs["johnstone-whole-space"].add(
        js.is_irreducible(WholeSpace())
        and not js.is_directed(WholeSpace())
        and js.sup(WholeSpace()) is None
        and not ja.is_irreducible(WholeSpace())
        and not ja.is_directed(WholeSpace()), "")
    ok = True
    for j in range(4):
        col = Column(j)
        top = js.encode(j, None)
        ok = ok and js.is_irreducible(col) and js.is_directed(col) \
            and js.sup(col) == top and ja.is_irreducible(col) \
            and ja.sup(col) == top
    aggs["johnstone-columns"].add(ok, "")

    descriptors = ([FiniteSet((k,)) for k in range(4)]
                   + [FiniteSet((0, 1)), FiniteSet((2, 5, 7))]
                   + [ChainTail(k) for k in (0, 3)]
                   + [Cofinite(()), Cofinite((1, 4)), WholeSpace()])
    ok = True
    witness = ""
    for name in ("omega_plus_one", "nat_cofinite_completion", "nat_antichain"):
        entry = get_entry(name)
        for d in descriptors:
            if not entry.admissible(d):
                continue
            if entry.is_irreducible(d) and entry.sup(d) is None:
                ok = False
                witness = f"{name}: {d!r} irreducible without a sup"
    aggs["completions-strongly-complete-descriptorwise"].add(ok, witness)

    # maps out of the omega completion are pinned on the top by their values
    # on the embedded copy: the top is the sup of any tail, so an
    # SI-continuous map must send it to the sup of the image of a tail
    # (identity image, shifted image, constant image)
    opo = get_entry("omega_plus_one")
    cases = [(ChainTail(0), opo.OMEGA), (ChainTail(3), opo.OMEGA),
             (FiniteSet((7,)), 7)]
    ok = all(opo.sup(image_descriptor) == expected
             for image_descriptor, expected in cases)
    aggs["extension-determined-on-embedded-copy"].add(
        ok, "sup of the image descriptor must pin the extension at the top")
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# DSL, JSON, DOT


VALID_CORPUS = [
    "finite { elems: a }",
    "finite { elems: a, b }",
    "finite { elems: a, b; leq: a < b }",
    "finite { elems: a, b, t; leq: a < t, b < t }",
    "finite { elems: a, b, c; leq: a < b, b < c }",
    "finite { elems: x, y, z, w; leq: x < y, x < z, y < w, z < w }",
    "finite { elems: p, q, r; leq: p < q }",
    "finite { elems: m, n; leq: }",
    "finite { elems: one }",
    "finite { elems: a, b, c, d; leq: a < b, c < d }",
    "finite { elems: s, t, u; leq: s < t, s < u }",
    "finite { elems: a, b, c; leq: a < c, b < c, a < b }",
    "omega",
    "omega_plus_one",
    "nat_cofinite",
    "nat_antichain",
    "johnstone",
    "johnstone_alex",
    "lift(finite { elems: a, b })",
    "lift(finite { elems: bot })",
    "lift(lift(finite { elems: a }))",
    "sum(finite { elems: a }, finite { elems: b })",
    "sum(finite { elems: a, b; leq: a < b }, finite { elems: c, d; leq: c < d })",
    "sum(lift(finite { elems: a }), finite { elems: c })",
    "lift(sum(finite { elems: a }, finite { elems: b }))",
    "map { from: finite { elems: a, b; leq: a < b }; "
    "to: finite { elems: a, b; leq: a < b }; pairs: a -> a, b -> b }",
    "map { from: finite { elems: a, b }; to: finite { elems: c }; "
    "pairs: a -> c, b -> c }",
    "map { from: finite { elems: a, b; leq: a < b }; "
    "to: finite { elems: x, y, t; leq: x < t, y < t }; pairs: a -> x, b -> t }",
    "map { from: finite { elems: p }; to: finite { elems: q, r; leq: q < r }; "
    "pairs: p -> r }",
    "map { from: finite { elems: a, b, c; leq: a < b, b < c }; "
    "to: finite { elems: a, b, c; leq: a < b, b < c }; "
    "pairs: a -> a, b -> b, c -> c }",
]

MALFORMED_CORPUS = [
    "finite { elems: a; leq: a<a? }",
    "finite { elems: }",
    "finite { elems: a, a }",
    "finite { elems: a, b; leq: a < c }",
    "finite { elems: a, b; leq: a < b, b < a }",
    "finite elems: a }",
    "lift(finite { elems: a }",
    "sum(finite { elems: a } finite { elems: b })",
    "unknown_atom_name",
    "map { from: finite { elems: a }; to: finite { elems: b }; pairs: }",
    "map { from: finite { elems: a }; to: finite { elems: b }; pairs: a -> q }",
    "map { from: omega; to: finite { elems: b }; pairs: }",
    "finite { elems: a, b } trailing",
    "sum(omega, finite { elems: a })",
    "lift(omega)",
]


def suite_dsl() -> list[CheckResult]:
    suite = "dsl-io"
    aggs = {name: _Agg(suite, name) for name in (
        "parse-print-parse-fixpoint",
        "valid-corpus-elaborates",
        "malformed-errors-are-positioned",
        "json-round-trip",
        "json-rejects-bad-documents",
        "dot-is-deterministic",
    )}
    for text in VALID_CORPUS:
        try:
            d1 = parse_document(text)
            s1 = print_doc(d1)
            d2 = parse_document(s1)
            aggs["parse-print-parse-fixpoint"].add(
                d1 == d2 and print_doc(d2) == s1, f"doc={text!r}")
        except (ParseError, SemanticError) as e:
            aggs["parse-print-parse-fixpoint"].add(False, f"doc={text!r}: {e}")
    for text in VALID_CORPUS:
        try:
            doc = parse_document(text)
            if isinstance(doc, MapDoc):
                elaborate_map(doc)
            else:
                value = elaborate(doc)
                if isinstance(value, FinSpace):
                    if set(value.si_opens()) != value.opens:
                        raise AssertionError("SI topology diverged")
            aggs["valid-corpus-elaborates"].add(True)
        except Exception as e:  # noqa: BLE001 - report, do not crash the suite
            aggs["valid-corpus-elaborates"].add(False, f"doc={text!r}: {e}")
    for text in MALFORMED_CORPUS:
        try:
            doc = parse_document(text)
            if isinstance(doc, MapDoc):
                elaborate_map(doc)
            else:
                elaborate(doc)
            aggs["malformed-errors-are-positioned"].add(
                False, f"doc={text!r} was accepted")
        except (ParseError, SemanticError) as e:
            aggs["malformed-errors-are-positioned"].add(
                e.line >= 1 and e.col >= 1, f"doc={text!r}: {e}")
        except Exception as e:  # noqa: BLE001
            aggs["malformed-errors-are-positioned"].add(
                False, f"doc={text!r} raised {type(e).__name__}: {e}")
    vee = elaborate(parse_document("finite { elems: a, b, t; leq: a < t, b < t }"))
    samples = [
        elaborate(parse_document("finite { elems: a, b; leq: a < b }")),
        vee,
        FinSpace(0, [0]),
        vee.specialization,
        SpaceMap(vee, vee, (0, 1, 2)),
        Family(3, (0b001, 0b101, 0b111)),
        get_entry("omega"),
        strong_completion(vee),
    ]
    for value in samples:
        try:
            text = to_json(value)
            back = from_json(text)
            aggs["json-round-trip"].add(to_json(back) == text and back == value,
                                        f"value={text[:120]}")
        except SchemaError as e:
            aggs["json-round-trip"].add(False, f"{e}")
    bad = [
        '{"kind":"space","size":1,"opens":[[0]],"names":null}',
        '{"kind":"space","size":2,"opens":[[],[0],[0,1],[1]],"names":"x"}',
        '{"kind":"map","src":{"kind":"space","size":1,"opens":[[],[0]],'
        '"names":null},"dst":{"kind":"space","size":1,"opens":[[],[0]],'
        '"names":null},"table":[4]}',
        '{"kind":"poset","size":2,"leq":[[0,1],[1,0],[0,0],[1,1]]}',
        '{"kind":"wat"}',
        'not json at all',
    ]
    for text in bad:
        try:
            from_json(text)
            aggs["json-rejects-bad-documents"].add(False, f"accepted {text[:60]}")
        except SchemaError as e:
            aggs["json-rejects-bad-documents"].add(
                bool(e.path), f"no path in {e}")
    from .dot import to_dot
    chain2 = elaborate(parse_document("finite { elems: a, b; leq: a < b }"))
    expected = ('digraph hasse {\n  rankdir=BT;\n  n0 [label="a"];\n'
                '  n1 [label="b"];\n  n0 -> n1;\n}\n')
    aggs["dot-is-deterministic"].add(to_dot(chain2) == expected,
                                     f"got {to_dot(chain2)!r}")
    dot_vee = to_dot(vee)
    aggs["dot-is-deterministic"].add(
        dot_vee.count("->") == 2 and dot_vee == to_dot(vee), "join poset export")
    return [a.result() for a in aggs.values()]


# ---------------------------------------------------------------------------
# runners


SUITES = {
    "finite-collapse": suite_finite_collapse,
    "elementary": suite_elementary,
    "continuity": suite_continuity,
    "hyperspace": suite_gamma,
    "universal-property": suite_universal,
    "catalog": suite_catalog,
    "dsl-io": suite_dsl,
}


def run_suites(names=None, max_size: int = 4) -> list[CheckResult]:
    results: list[CheckResult] = []
    chosen = list(SUITES) if not names else list(names)
    for name in chosen:
        fn = SUITES[name]
        if name in ("continuity", "universal-property"):
            results.extend(fn(min(max_size, 3)))
        elif name in ("catalog", "dsl-io"):
            results.extend(fn())
        else:
            results.extend(fn(max_size))
    return results


def results_to_obj(results) -> list[dict]:
    return [{"suite": r.suite, "name": r.name, "passed": r.passed,
             "checked": r.checked, "witness": r.witness} for r in results]


def write_csv(results, path: str) -> None:
    import csv
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["suite", "name", "passed", "checked", "witness"])
        for r in results:
            w.writerow([r.suite, r.name, int(r.passed), r.checked, r.witness])


def search_delta_counterexample(samples: int = 25, max_size: int = 8,
                                seed: int = 0, trunc_n: int = 6) -> dict:
    """Look for two I-open sets whose intersection is not I-open, over
    random finite spaces and catalog truncations. Reports honestly: a
    missing witness is not a nonexistence proof."""
    rng = random.Random(seed)
    spaces: list[tuple[str, FinSpace]] = []
    for k in range(samples):
        n = rng.randint(1, max_size)
        spaces.append((f"random-{k}(n={n})", random_space(rng, n)))
    for name, entry in sorted(CATALOG.items()):
        spaces.append((f"truncate({name},{trunc_n})", entry.truncate(trunc_n)))
    pairs = 0
    for label, x in spaces:
        delta = x.delta(max(20, x.size))
        dset = set(delta)
        for u in delta:
            for v in delta:
                pairs += 1
                if u & v not in dset:
                    return {"witness": {"space": label, "u": bits.to_indices(u),
                                        "v": bits.to_indices(v)},
                            "spaces_checked": len(spaces),
                            "pairs_checked": pairs}
    return {"witness": None, "spaces_checked": len(spaces),
            "pairs_checked": pairs}
