import pytest

from sctop import (SpaceMap, SpaceMismatch, classify, compose,
                   identity_map, is_continuous, is_i_continuous, is_monotone,
                   is_si_continuous, is_si_plus_continuous,
                   preserves_irr_sups)
from sctop.enumeration import all_tables, spaces_up_to
from sctop.maps import continuity_witness, monotonicity_witness

from oracles import o_continuous, opens_of


def swap(x):
    return SpaceMap(x, x, (1, 0))


class TestBasics:
    def test_table_must_be_total(self, sierpinski):
        with pytest.raises(ValueError):
            SpaceMap(sierpinski, sierpinski, (0,))

    def test_table_range_checked(self, sierpinski):
        with pytest.raises(ValueError):
            SpaceMap(sierpinski, sierpinski, (0, 5))

    def test_image_and_preimage(self, sierpinski):
        f = swap(sierpinski)
        assert f.image_mask(0b01) == 0b10
        assert f.preimage_mask(0b10) == 0b01


class TestContinuity:
    def test_identity_continuous(self, vee):
        assert is_continuous(identity_map(vee))

    def test_constant_continuous(self, vee):
        for v in range(vee.size):
            assert is_continuous(SpaceMap(vee, vee, (v, v, v)))

    def test_sierpinski_swap_not_continuous(self, sierpinski):
        f = swap(sierpinski)
        assert not is_continuous(f)
        assert continuity_witness(f) == 0b10  # preimage of {1} is {0}

    def test_matches_oracle_on_small_pairs(self):
        for x in spaces_up_to(2):
            for z in spaces_up_to(2):
                for t in all_tables(x.size, z.size):
                    f = SpaceMap(x, z, t)
                    assert is_continuous(f) == o_continuous(
                        x.size, opens_of(x), opens_of(z), t)


class TestMonotone:
    def test_identity_monotone(self, vee):
        assert is_monotone(identity_map(vee))

    def test_swap_not_monotone(self, sierpinski):
        f = swap(sierpinski)
        assert not is_monotone(f)
        assert monotonicity_witness(f) == (0, 1)

    def test_continuous_implies_monotone(self):
        for x in spaces_up_to(3):
            for t in all_tables(x.size, x.size):
                f = SpaceMap(x, x, t)
                if is_continuous(f):
                    assert is_monotone(f)


class TestGrades:
    def test_identity_has_every_grade(self, vee):
        rep = classify(identity_map(vee))
        assert all(rep.flags().values())
        assert rep.witnesses == {}

    def test_constant_has_every_grade(self, vee):
        rep = classify(SpaceMap(vee, vee, (2, 2, 2)))
        assert all(rep.flags().values())

    def test_swap_fails_with_witnesses(self, sierpinski):
        rep = classify(swap(sierpinski))
        assert not rep.continuous and not rep.si_continuous
        assert not rep.si_plus_continuous
        for flag, value in rep.flags().items():
            if not value:
                assert flag in rep.witnesses, f"false {flag} lacks a witness"

    def test_every_false_flag_has_witness_exhaustively(self):
        for x in spaces_up_to(2):
            for z in spaces_up_to(2):
                for t in all_tables(x.size, z.size):
                    rep = classify(SpaceMap(x, z, t))
                    for flag, value in rep.flags().items():
                        assert value or flag in rep.witnesses

    def test_i_continuity_always_holds_between_finite_spaces(self):
        for x in spaces_up_to(2):
            for z in spaces_up_to(2):
                for t in all_tables(x.size, z.size):
                    assert is_i_continuous(SpaceMap(x, z, t))

    def test_three_way_equivalence_for_continuous_maps(self):
        for x in spaces_up_to(3):
            for t in all_tables(x.size, x.size):
                f = SpaceMap(x, x, t)
                if is_continuous(f):
                    assert is_i_continuous(f) == is_si_continuous(f) \
                        == preserves_irr_sups(f)

    def test_preserves_irr_sups_for_constant(self, vee):
        assert preserves_irr_sups(SpaceMap(vee, vee, (0, 0, 0)))

    def test_monotone_maps_preserve_sups_on_finite_carriers(self):
        # I-continuity is automatic here, so monotonicity alone must give
        # sup preservation over the irreducible sets
        for x in spaces_up_to(3):
            for t in all_tables(x.size, x.size):
                f = SpaceMap(x, x, t)
                if is_monotone(f):
                    assert preserves_irr_sups(f)

    def test_continuous_image_of_closure_is_inside_closure_of_image(self):
        for x in spaces_up_to(3):
            for t in all_tables(x.size, x.size):
                f = SpaceMap(x, x, t)
                if is_continuous(f):
                    for a in range(x.full + 1):
                        img = f.image_mask(x.closure(a))
                        assert img & ~x.closure(f.image_mask(a)) == 0


class TestCompose:
    def test_identity_laws(self, vee):
        f = SpaceMap(vee, vee, (2, 2, 2))
        assert compose(f, identity_map(vee)) == f
        assert compose(identity_map(vee), f) == f

    def test_space_mismatch(self, vee, sierpinski):
        with pytest.raises(SpaceMismatch):
            compose(identity_map(sierpinski), identity_map(vee))

    def test_si_plus_closed_under_composition_small(self):
        spaces = spaces_up_to(2)
        for x in spaces:
            for y in spaces:
                for z in spaces:
                    fs = [SpaceMap(x, y, t) for t in all_tables(x.size, y.size)]
                    gs = [SpaceMap(y, z, t) for t in all_tables(y.size, z.size)]
                    for f in fs:
                        if not is_si_plus_continuous(f):
                            continue
                        for g in gs:
                            if is_si_plus_continuous(g):
                                assert is_si_plus_continuous(compose(g, f))
