import pytest

from sctop import (CapExceeded, FinPoset, FinSpace, NotSIPlusContinuous,
                   SpaceMap, alexandroff, check_uniqueness,
                   check_universal_property, compose, extend, f_star,
                   gamma_si, k_map, psi, sierpinski, strong_completion)
from sctop.bits import family_sort, popcount, to_indices
from sctop.completion import adjunction_witness
from sctop.enumeration import all_tables, spaces_up_to
from sctop.maps import is_si_plus_continuous


class TestGamma:
    def test_sierpinski_hyperspace_is_three_chain(self, sierpinski):
        g = gamma_si(sierpinski)
        assert g.elements == family_sort([0b00, 0b01, 0b11], 2)
        assert g.space.specialization.is_isomorphic(FinPoset.chain(3))

    def test_one_point_space(self):
        one = FinSpace(1, [0, 1])
        g = gamma_si(one)
        assert g.elements == (0, 1)
        assert g.space == sierpinski()

    def test_lower_vietoris_is_upset_topology(self):
        for x in spaces_up_to(3):
            g = gamma_si(x)
            assert g.space.opens == alexandroff(g.inclusion_poset()).opens

    def test_empty_base(self, empty_space):
        g = gamma_si(empty_space)
        assert g.elements == (0,)
        assert g.space.size == 1

    def test_hyperspace_cap(self):
        x = alexandroff(FinPoset.antichain(5))  # 32 closed sets
        with pytest.raises(CapExceeded):
            gamma_si(x, cap=20)

    def test_names_render_labels(self, vee):
        g = gamma_si(vee)
        assert "{a,b,t}" in g.space.names


class TestPsi:
    def test_sierpinski_point_closures(self, sierpinski):
        g = gamma_si(sierpinski)
        pm = psi(sierpinski, g)
        labels = {g.elements[i] for i in to_indices(pm)}
        assert labels == {0b01, 0b11}

    def test_one_point(self):
        one = FinSpace(1, [0, 1])
        assert popcount(psi(one, gamma_si(one))) == 1

    def test_empty(self, empty_space):
        assert psi(empty_space, gamma_si(empty_space)) == 0


class TestStrongCompletion:
    def test_every_small_space_completes_to_itself(self):
        for x in spaces_up_to(4):
            c = strong_completion(x)
            assert c.completion.size == x.size
            assert all(c.witnesses.values()), c.witnesses
            if x.size:
                assert x.relabel(c.eta.table).opens == c.completion.opens

    def test_sierpinski_completion(self, sierpinski):
        c = strong_completion(sierpinski)
        assert c.completion.specialization.is_isomorphic(FinPoset.chain(2))
        assert sorted(c.eta.table) == [0, 1]

    def test_empty_completion(self, empty_space):
        c = strong_completion(empty_space)
        assert c.completion.size == 0
        assert c.new_point_count == 0

    def test_psi_already_i_closed(self, vee):
        c = strong_completion(vee)
        assert c.completion_mask == c.psi_mask


class TestFStar:
    def test_identity_gives_identity(self, sierpinski):
        g = gamma_si(sierpinski)
        fs = f_star(SpaceMap(sierpinski, sierpinski, (0, 1)), g, g)
        assert fs.table == tuple(range(g.space.size))

    def test_constant_at_top_of_sierpinski(self, sierpinski):
        g = gamma_si(sierpinski)
        fs = f_star(SpaceMap(sierpinski, sierpinski, (1, 1)), g, g)
        # empty set stays empty, nonempty closed sets land on the carrier
        for i, c in enumerate(g.elements):
            assert g.elements[fs.table[i]] == (0 if c == 0 else 0b11)

    def test_requires_si_plus(self, sierpinski):
        g = gamma_si(sierpinski)
        with pytest.raises(NotSIPlusContinuous):
            f_star(SpaceMap(sierpinski, sierpinski, (1, 0)), g, g)

    def test_adjunction_exhaustive_small(self):
        for x in spaces_up_to(2):
            gx = gamma_si(x)
            for z in spaces_up_to(2):
                gz = gamma_si(z)
                for t in all_tables(x.size, z.size):
                    f = SpaceMap(x, z, t)
                    if is_si_plus_continuous(f):
                        fs = f_star(f, gx, gz)
                        assert adjunction_witness(f, fs, gx, gz) is None


class TestKMap:
    def test_sierpinski_inverts_point_closures(self, sierpinski):
        g = gamma_si(sierpinski)
        k = k_map(sierpinski, g)
        pm = psi(sierpinski, g)
        for pos, gi in enumerate(to_indices(pm)):
            assert sierpinski.closure(1 << k.table[pos]) == g.elements[gi]

    def test_k_after_eta_is_identity(self):
        for x in spaces_up_to(3):
            g = gamma_si(x)
            k = k_map(x, g)
            pm = psi(x, g)
            pos = {gi: p for p, gi in enumerate(to_indices(pm))}
            for p in range(x.size):
                gi = g.index_of(x.closure(1 << p))
                assert k.table[pos[gi]] == p

    def test_one_point(self):
        one = FinSpace(1, [0, 1])
        k = k_map(one, gamma_si(one))
        assert k.table == (0,)

    def test_k_is_si_plus_continuous(self):
        for x in spaces_up_to(3):
            k = k_map(x, gamma_si(x))
            assert is_si_plus_continuous(k)


class TestExtend:
    def test_extension_factors_everywhere_small(self):
        for x in spaces_up_to(3):
            c = strong_completion(x)
            for z in spaces_up_to(2):
                for t in all_tables(x.size, z.size):
                    f = SpaceMap(x, z, t)
                    if is_si_plus_continuous(f):
                        fhat = extend(f, c)
                        assert compose(fhat, c.eta) == f

    def test_eta_extends_to_identity_up_to_homeo(self, sierpinski):
        c = strong_completion(sierpinski)
        fhat = extend(c.eta, c)
        assert sorted(fhat.table) == list(range(c.completion.size))
        assert compose(fhat, c.eta) == c.eta


class TestUniversalProperty:
    def test_sierpinski_to_sierpinski_has_three_maps(self, sierpinski):
        rep = check_universal_property(sierpinski, sierpinski)
        assert len(rep.entries) == 3
        assert rep.passed

    def test_target_a_point_gives_unique_constant(self, vee):
        one = FinSpace(1, [0, 1])
        rep = check_universal_property(vee, one)
        assert len(rep.entries) == 1
        assert rep.passed

    def test_cap(self):
        big = alexandroff(FinPoset.chain(5))
        with pytest.raises(CapExceeded):
            check_universal_property(big, big, bound=4)


class TestUniqueness:
    def test_identity_relabeling_found_as_identity(self, sierpinski):
        rep = check_uniqueness(sierpinski)
        ident = next(e for e in rep.entries if e.perm == (0, 1))
        assert ident.homeo == (0, 1)
        assert rep.passed

    def test_relabeled_vee(self, vee):
        rep = check_uniqueness(vee)
        assert rep.passed
        assert len(rep.entries) == 6

    def test_sampled_four_element_spaces(self):
        for p in (FinPoset.antichain(4), FinPoset.chain(4),
                  FinPoset.from_cover_pairs(4, [(0, 2), (1, 2), (2, 3)])):
            assert check_uniqueness(alexandroff(p)).passed
