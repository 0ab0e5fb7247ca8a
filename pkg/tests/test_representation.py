"""Action on the indexed basis, Fock indexing, vacuum shifts."""

from fractions import Fraction

import pytest

from cuntz import (
    Element,
    IndexRangeError,
    StateVector,
    apply_generator,
    apply_generator_adjoint,
    bogoliubov_family,
    decode_index,
    fock_build,
    fock_index,
    rep_apply,
    rfs_p_fock_index,
    verify_car,
    verify_vacuum,
)
from cuntz.sampling import random_element

e = StateVector.unit


class TestGeneratorAction:
    def test_s1_fixes_e1(self):
        assert apply_generator(1, e(1), 2) == e(1)

    def test_adjoint_annihilates_wrong_branch(self):
        # s1* e_{2n} = 0 over two letters
        for n in (1, 2, 5):
            assert apply_generator_adjoint(1, e(2 * n), 2).is_zero
            assert apply_generator_adjoint(2, e(2 * n), 2) == e(n)

    def test_branch_arithmetic(self):
        assert apply_generator(2, e(3), 2) == e(6)

    def test_index_out_of_range(self):
        with pytest.raises(IndexRangeError):
            apply_generator(3, e(1), 2)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_cuntz_relations_on_basis(self, d):
        for n in range(1, 65):
            v = e(n)
            for i in range(1, d + 1):
                for j in range(1, d + 1):
                    out = apply_generator_adjoint(i, apply_generator(j, v, d), d)
                    assert out == (v if i == j else StateVector.zero())
            total = StateVector.zero()
            for i in range(1, d + 1):
                total = total + apply_generator(i, apply_generator_adjoint(i, v, d), d)
            assert total == v

    def test_large_indices_are_exact(self):
        # branch indices grow geometrically; stay exact far past 64 bits
        v = e(1)
        for _ in range(200):
            v = apply_generator(2, v, 2)
        (index, amp), = v.items()
        assert amp == 1 and index == 2**200


class TestRepApply:
    def test_word_action(self):
        assert rep_apply(Element.word(2, (1,), (2,)), e(2)) == e(1)

    def test_seed_anticommutator_acts_as_identity(self, std_o2):
        a = std_o2.seeds[0]
        x = a * a.adjoint() + a.adjoint() * a
        for n in range(1, 17):
            assert rep_apply(x, e(n)) == e(n)

    def test_normal_form_acts_identically(self, rng):
        for _ in range(40):
            x = random_element(rng, 2)
            for n in (1, 2, 3, 17, 32):
                assert rep_apply(x, e(n)) == rep_apply(x.normal_form(), e(n))

    def test_products_compose(self, rng):
        for _ in range(25):
            x, y = random_element(rng, 2), random_element(rng, 2)
            for n in (1, 5, 32):
                assert rep_apply(x * y, e(n)) == rep_apply(x, rep_apply(y, e(n)))

    def test_linear_combinations(self):
        x = Element(2, {((1,), ()): Fraction(1, 2), ((2,), ()): 1})
        out = rep_apply(x, e(1))
        assert out == StateVector({1: Fraction(1, 2), 2: 1})


class TestFockIndexing:
    def test_paper_values(self):
        assert fock_index([1]) == 2
        assert fock_index([]) == 1
        assert fock_index([1, 2]) == 4

    def test_decode_round_trip(self):
        for index in range(1, 2**12 + 1):
            assert fock_index(decode_index(index)) == index
        assert decode_index(fock_index([2, 5, 9])) == (2, 5, 9)

    def test_modes_must_increase(self):
        with pytest.raises(IndexRangeError):
            fock_index([2, 2])
        with pytest.raises(IndexRangeError):
            fock_index([3, 1])


class TestFockBuild:
    def test_single_modes(self, std_o2):
        assert fock_build(std_o2, [1]) == e(2)
        assert fock_build(std_o2, [3]) == e(5)

    def test_vacuum(self, std_o2):
        assert fock_build(std_o2, []) == e(1)

    def test_pair_common_to_p2(self, std_o2, rfs2):
        assert fock_build(std_o2, [1, 2]) == e(4)
        assert fock_build(rfs2, [1, 2]) == e(4)

    @pytest.mark.parametrize("modes", [(1,), (2, 3), (1, 4, 6), (5,), (1, 2, 3, 4)])
    def test_all_systems_agree(self, std_o2, rfs2, rfs3, modes):
        target = e(fock_index(modes))
        for system in (std_o2, rfs2, rfs3):
            assert fock_build(system, modes) == target

    def test_cyclicity_at_desk_scale(self, std_o2):
        # every e_N, N <= 64, is reached from the vacuum
        for index in range(1, 65):
            assert fock_build(std_o2, decode_index(index)) == e(index)


class TestVacuum:
    def test_standard_families(self, std_o2, rfs3):
        assert verify_vacuum(std_o2, 8).ok
        assert verify_vacuum(rfs3, 9).ok

    def test_projection_family_fails(self, std_o2):
        from cuntz import GeneratorFamily

        bad = GeneratorFamily(2, lambda n: Element.word(2, (1,), (1,)))
        report = verify_vacuum(bad, 2)
        assert not report.ok
        assert report.first_failure().witness


class TestBogoliubov:
    def test_empty_flip_is_identity(self, std_o2):
        family = bogoliubov_family(std_o2, [])
        for n in range(1, 5):
            assert family.generator(n) == std_o2.generator(n)

    def test_flipped_modes_create_on_old_vacuum(self, std_o2):
        family = bogoliubov_family(std_o2, [1, 2])
        assert rep_apply(family.generator(1), e(1)) == e(2)

    def test_shifted_vacuum(self, std_o2):
        # after swapping modes {1,2}, e_4 is annihilated by every generator
        family = bogoliubov_family(std_o2, [1, 2])
        vac = e(fock_index([1, 2]))
        for n in range(1, 7):
            assert rep_apply(family.generator(n), vac).is_zero

    def test_car_preserved(self, std_o2):
        family = bogoliubov_family(std_o2, [1, 2])
        assert verify_car(family, 4).ok


class TestRfsPFockIndex:
    def test_single_pair(self):
        assert rfs_p_fock_index([(1, 1)], 2) == 2

    def test_coincident_level_merges_digits(self):
        assert rfs_p_fock_index([(1, 1), (1, 2)], 2) == 4

    def test_mixed_levels(self):
        assert rfs_p_fock_index([(1, 1), (2, 2)], 2) == 10

    def test_agrees_with_flat_fock_index(self):
        pairs = [(1, 2), (2, 1), (3, 2)]
        p = 2
        flat = [p * (m - 1) + i for m, i in pairs]
        assert rfs_p_fock_index(pairs, p) == fock_index(flat)

    def test_agrees_with_fock_build_over_four_letters(self, rfs2):
        pairs = [(1, 1), (2, 2)]
        flat = [2 * (m - 1) + i for m, i in pairs]
        index = rfs_p_fock_index(pairs, 2)
        assert fock_build(rfs2, flat) == e(index)

    def test_monotonicity_enforced(self):
        with pytest.raises(IndexRangeError):
            rfs_p_fock_index([(1, 2), (1, 1)], 2)
        with pytest.raises(IndexRangeError):
            rfs_p_fock_index([(1, 3)], 2)


class TestStateVector:
    def test_no_zero_amplitudes(self):
        assert StateVector({3: 0}).is_zero

    def test_rejects_bad_index(self):
        with pytest.raises(IndexRangeError):
            StateVector({0: 1})

    def test_arithmetic(self):
        v = StateVector({1: 1, 2: Fraction(1, 2)})
        w = StateVector({2: Fraction(-1, 2), 3: 2})
        assert (v + w) == StateVector({1: 1, 3: 2})
        assert (v - v).is_zero
        assert 2 * v == StateVector({1: 2, 2: 1})

    def test_rendering(self):
        assert str(StateVector.zero()) == "0"
        assert str(e(4)) == "e_4"
        assert str(StateVector({2: Fraction(1, 2)})) == "1/2 e_2"
