import pytest

from sctop import (CATALOG, ChainTail, Cofinite, Column, FiniteSet, FinPoset,
                   UnsupportedCompletion, UnsupportedDescriptor,
                   UnsupportedForm, WholeSpace, alexandroff, get_entry,
                   sym_is_directed, sym_is_irreducible, sym_is_si_open,
                   sym_strong_completion, sym_sup, truncate)
from sctop.bits import from_indices, iter_indices
from sctop.catalog import (CofiniteOpen, CofinitePlusTop, OpenEmpty,
                           OpenWhole, TailOpen)

OMEGA = get_entry("omega")
OPO = get_entry("omega_plus_one")
NATC = get_entry("nat_cofinite")
NATA = get_entry("nat_antichain")
JS = get_entry("johnstone")
JA = get_entry("johnstone_alex")


class TestAdmissibility:
    def test_unknown_entry(self):
        with pytest.raises(KeyError):
            get_entry("nope")

    def test_johnstone_rejects_finite_sets(self):
        with pytest.raises(UnsupportedDescriptor):
            JS.is_irreducible(FiniteSet((0, 1)))

    def test_omega_rejects_columns(self):
        with pytest.raises(UnsupportedDescriptor):
            OMEGA.is_irreducible(Column(0))

    def test_empty_finite_set_rejected(self):
        with pytest.raises(UnsupportedDescriptor):
            OMEGA.is_irreducible(FiniteSet(()))

    def test_johnstone_has_no_open_forms(self):
        with pytest.raises(UnsupportedForm):
            JS.is_si_open(TailOpen(0))


class TestIrreducibility:
    def test_nat_cofinite_whole_carrier(self):
        assert sym_is_irreducible(NATC, Cofinite(()))
        assert sym_is_irreducible(NATC, WholeSpace())

    def test_nat_antichain_pair_reducible(self):
        assert not sym_is_irreducible(NATA, FiniteSet((3, 5)))
        assert sym_is_irreducible(NATA, FiniteSet((3,)))

    def test_johnstone_whole_irreducible_not_directed(self):
        assert sym_is_irreducible(JS, WholeSpace())
        assert not sym_is_directed(JS, WholeSpace())
        assert sym_sup(JS, WholeSpace()) is None

    def test_johnstone_alex_whole_reducible(self):
        assert not sym_is_irreducible(JA, WholeSpace())
        assert not sym_is_directed(JA, WholeSpace())

    def test_columns_are_directed_with_top_sup(self):
        for j in range(3):
            assert sym_is_directed(JS, Column(j))
            assert sym_sup(JS, Column(j)) == JS.encode(j, None)

    def test_chain_subsets_always_irreducible(self):
        for d in (FiniteSet((0, 4, 9)), ChainTail(2), Cofinite((1,)),
                  WholeSpace()):
            assert sym_is_irreducible(OMEGA, d)
            assert sym_is_directed(OMEGA, d)


class TestSup:
    def test_omega_tail_has_no_sup(self):
        assert sym_sup(OMEGA, ChainTail(5)) is None

    def test_omega_plus_one_tail_sups_to_limit(self):
        assert sym_sup(OPO, ChainTail(5)) == OPO.OMEGA

    def test_singleton_sups_to_itself(self):
        for entry in (OMEGA, OPO, NATC, NATA):
            assert sym_sup(entry, FiniteSet((7,))) == 7

    def test_omega_finite_set_sups_to_max(self):
        assert sym_sup(OMEGA, FiniteSet((2, 9, 4))) == 9

    def test_nat_cofinite_infinite_sets_have_no_sup(self):
        assert sym_sup(NATC, Cofinite(())) is None
        assert sym_sup(NATC, ChainTail(3)) is None

    def test_nat_antichain_pairs_have_no_sup(self):
        assert sym_sup(NATA, FiniteSet((1, 2))) is None


class TestSIOpen:
    def test_omega_tails_si_open(self):
        assert sym_is_si_open(OMEGA, TailOpen(4))
        assert sym_is_si_open(OMEGA, OpenWhole())
        assert sym_is_si_open(OMEGA, OpenEmpty())

    def test_nat_cofinite_opens_si_open(self):
        assert sym_is_si_open(NATC, CofiniteOpen((1, 2)))

    def test_omega_plus_one_tail_checked_against_tails(self):
        assert sym_is_si_open(OPO, TailOpen(3))

    def test_invalid_form_rejected(self):
        with pytest.raises(UnsupportedForm):
            sym_is_si_open(OMEGA, CofinitePlusTop(()))


class TestClosedForms:
    def test_omega_closure_is_principal_ideal(self):
        form = OMEGA.closure_of_finite((2, 0))
        members = [c for c in range(6) if OMEGA.closed_member(form, c)]
        assert members == [0, 1, 2]

    def test_omega_plus_one_closure_of_limit_is_whole(self):
        form = OPO.closure_of_finite((OPO.OMEGA,))
        assert OPO.closed_member(form, 12345)

    def test_nat_cofinite_closure_is_the_set_itself(self):
        form = NATC.closure_of_finite((4, 1))
        assert [c for c in range(6) if NATC.closed_member(form, c)] == [1, 4]

    def test_johnstone_closure_from_column_top(self):
        top = JS.encode(1, None)
        form = JS.closure_of_finite((top,))
        assert JS.closed_member(form, JS.encode(1, 10))   # same column
        assert JS.closed_member(form, JS.encode(9, 1))    # second coord <= 1
        assert not JS.closed_member(form, JS.encode(0, 2))


class TestTruncation:
    def test_omega_three_is_chain(self):
        assert truncate(OMEGA, 3) == alexandroff(FinPoset.chain(3))

    def test_nat_cofinite_four_is_discrete(self):
        assert len(truncate(NATC, 4).opens) == 16

    def test_zero_is_empty(self):
        for entry in CATALOG.values():
            assert truncate(entry, 0).size == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            truncate(OMEGA, -1)

    def test_omega_plus_one_contains_the_limit(self):
        t = truncate(OPO, 4)
        assert t.names[0] == "w"
        assert t.specialization.is_isomorphic(FinPoset.chain(4))

    def test_johnstone_truncations_with_two_tops_not_directed(self):
        t = truncate(JS, 10)
        tops = [i for i, nm in enumerate(t.names) if nm.endswith(",w)")]
        assert len(tops) >= 2
        assert not t.specialization.is_directed(t.full)

    def test_consistency_against_symbolic_answers(self):
        for entry in CATALOG.values():
            for n in range(7):
                t = truncate(entry, n)
                codes = [entry.point_at(i) for i in range(n)]
                for i in range(n):
                    for j in range(n):
                        assert t.specialization.leq(i, j) == \
                            entry.leq(codes[i], codes[j])
                for mask in range(t.full + 1):
                    members = tuple(codes[i] for i in iter_indices(mask))
                    form = entry.closure_of_finite(members)
                    sym = from_indices(
                        i for i in range(n)
                        if entry.closed_member(form, codes[i]))
                    assert sym == t.closure(mask)
                    if mask and entry.admissible(FiniteSet(members)):
                        d = FiniteSet(members)
                        assert entry.is_irreducible(d) == t.is_irreducible(mask)
                        assert entry.is_directed(d) == \
                            t.specialization.is_directed(mask)


class TestCompletions:
    def test_omega_completes_to_omega_plus_one(self):
        sc = sym_strong_completion(OMEGA)
        assert sc.completion is OPO
        assert sc.new_point_codes == (OPO.OMEGA,)
        for n in range(64):
            assert sc.eta_code(n) == n
            assert sc.completion.leq(n, OPO.OMEGA)
            assert not sc.completion.leq(OPO.OMEGA, n)

    def test_nat_cofinite_gains_exactly_a_top(self):
        sc = sym_strong_completion(NATC)
        target = sc.completion
        assert target.id == "nat_cofinite_completion"
        assert sc.new_point_codes == (target.TOP,)
        assert target.probe_is_open("cofinite", True)
        assert target.probe_is_open("empty", False)
        assert not target.probe_is_open("cofinite", False)
        assert not target.probe_is_open("finite", True)
        assert not target.probe_is_open("empty", True)

    def test_nat_cofinite_completion_is_strongly_complete_descriptorwise(self):
        target = sym_strong_completion(NATC).completion
        for d in (FiniteSet((0,)), FiniteSet((0, 1)), FiniteSet((target.TOP, 3)),
                  ChainTail(0), Cofinite((2,)), WholeSpace()):
            if target.is_irreducible(d):
                assert target.sup(d) is not None

    def test_nat_antichain_completes_to_itself(self):
        sc = sym_strong_completion(NATA)
        assert sc.completion is NATA
        assert sc.new_point_codes == ()

    def test_already_complete_entries_complete_to_themselves(self):
        assert sym_strong_completion(OPO).completion is OPO

    def test_johnstone_completion_unsupported(self):
        for entry in (JS, JA):
            with pytest.raises(UnsupportedCompletion):
                sym_strong_completion(entry)

    def test_extension_is_pinned_by_embedded_values(self):
        # SI-continuity forces the image of the added top to be the sup of
        # the image of any tail; distinct values there are impossible
        assert OPO.sup(ChainTail(0)) == OPO.OMEGA
        assert OPO.sup(FiniteSet((7,))) == 7
