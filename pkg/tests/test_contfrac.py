from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fibersurf.contfrac import (
    apply_cf1,
    apply_cf1p,
    apply_cf2,
    apply_cf2p,
    apply_move_m,
    apply_moves,
    cf_length,
    coefficient_sum,
    enumerate_mcfe,
    eval_cf,
    format_cf,
    invert_cf1,
    invert_cf1p,
    invert_cf2,
    invert_cf2p,
    is_mcfe,
    is_scfe,
    mcfe_move_sets,
    parse_cf,
    partial_fraction,
    scfe,
)
from fibersurf.exact import ExtendedRational, sign


def reduced(max_q):
    for q in range(1, max_q + 1):
        for p in range(-2 * q, 2 * q + 1):
            if gcd(p, q) == 1:
                yield ExtendedRational(p, q)


class TestEvaluation:
    def test_empty_is_zero(self):
        assert eval_cf(()) == ExtendedRational(0, 1)

    def test_examples(self):
        assert eval_cf((2, -1, 2, -2)) == Fraction(7, 19)
        assert eval_cf((2, -1)) == Fraction(1, 3)
        assert eval_cf((0,)) == ExtendedRational(1, 0)

    def test_intermediate_infinity(self):
        # the tail [1, 1] is 1/0, so the prefix term vanishes
        assert eval_cf((1, 1)) == ExtendedRational(1, 0)
        assert eval_cf((5, 1, 1)) == 0
        assert eval_cf((0, 0)) == 0
        assert eval_cf((2, 1, 2)) == ExtendedRational(1, 0)

    def test_partial_fractions(self):
        assert partial_fraction((3, 4, 2, 1), 2) == Fraction(4, 11)
        assert partial_fraction((3, 4, 2, 1), 0) == 0
        with pytest.raises(IndexError):
            partial_fraction((3, 4), 3)

    def test_sum_and_length(self):
        assert coefficient_sum((3, 4, 2, 1)) == 10
        assert coefficient_sum(()) == 0
        assert cf_length((3, 3, -2, 0)) == 4


class TestPredicates:
    def test_scfe_and_mcfe(self):
        assert is_scfe((2, -1, 2, -2)) and not is_mcfe((2, -1, 2, -2))
        assert is_mcfe((3, 4, 2))
        assert is_scfe((0, -1)) and not is_mcfe((0, -1))

    def test_scfe_rejects(self):
        assert not is_scfe((2, 2))
        assert not is_scfe((2, -1))
        assert not is_scfe((2, 0, -2))
        assert not is_scfe((0, 1, -1))


class TestSCFE:
    @pytest.mark.parametrize("x, expected", [
        ("7/19", (2, -1, 2, -2)),
        ("-12/19", (-1, 1, -1, 2, -2)),
        ("45/109", (2, -2, 2, -1, 2, -2)),
        ("1", (0, -1)),
        ("-1", (0, 1)),
        ("2", (0, -2)),
        ("-3/2", (0, 1, -2)),
        ("0", ()),
    ])
    def test_examples(self, x, expected):
        assert scfe(x) == expected

    def test_infinity_rejected(self):
        with pytest.raises(ValueError):
            scfe(ExtendedRational(1, 0))

    def test_round_trip_up_to_200(self):
        for q in range(1, 201):
            for p in range(-q, q + 1):
                if gcd(p, q) != 1:
                    continue
                b = scfe(ExtendedRational(p, q))
                assert is_scfe(b)
                assert eval_cf(b) == ExtendedRational(p, q)

    def test_first_coefficient_sign(self):
        for x in reduced(40):
            if x in (ExtendedRational(1, 1), ExtendedRational(-1, 1), ExtendedRational(0, 1)):
                continue
            b = scfe(x)
            f = x.to_fraction()
            if b[0] != 0:
                assert abs(f) < 1 and sign(f.numerator) == sign(b[0])
            else:
                assert abs(f) > 1 and sign(f.numerator) == -sign(b[1])


class TestElementaryMoves:
    def test_cf1_example(self):
        assert apply_cf1((3, 3), 0, 1) == (4, 1, 4)
        assert eval_cf((3, 3)) == eval_cf((4, 1, 4))

    def test_cf2_example(self):
        assert apply_cf2((4,), 0, 2) == (2, 0, 2)
        assert eval_cf((4,)) == eval_cf((2, 0, 2))

    def test_inverses(self):
        assert invert_cf1((4, 1, 4), 1) == (3, 3)
        assert invert_cf1p(apply_cf1p((2, 5), -1)) == (2, 5)
        assert invert_cf2((2, 0, 2), 1) == (4,)
        assert invert_cf2p(apply_cf2p((2, 5), 3)) == (2, 5)

    def test_bad_positions(self):
        with pytest.raises(IndexError):
            apply_cf1((3,), 0, 1)
        with pytest.raises(ValueError):
            apply_cf1((3, 3), 0, 2)
        with pytest.raises(ValueError):
            invert_cf1((3, 3), 1)


class TestMoveM:
    def test_endpoint_move(self):
        for x in (3, -4, 7):
            assert apply_move_m((x, 2), 1) == (x - 1, -2)
            assert eval_cf((x, 2)) == eval_cf((x - 1, -2))

    def test_unit_collapses(self):
        assert apply_move_m((5, -1, 2), 1) == (6, 3)
        assert eval_cf((5, -1, 2)) == eval_cf((6, 3))

    def test_first_coefficient_not_allowed(self):
        with pytest.raises(IndexError):
            apply_move_m((3, 4), 0)

    def test_zero_not_allowed(self):
        with pytest.raises(ValueError):
            apply_move_m((3, 0, 4), 1)

    def test_endpoint_flag_checked(self):
        assert apply_move_m((3, 4), 1, endpoint=True) == apply_move_m((3, 4), 1)
        with pytest.raises(ValueError):
            apply_move_m((3, 4, 5), 1, endpoint=True)

    def test_adjacent_rejected(self):
        with pytest.raises(ValueError):
            apply_moves((2, -1, 2, -2), [1, 2])


class TestEnumeration:
    def test_example_odd(self):
        assert enumerate_mcfe("7/19", odd_length_only=True) == [(3, 3, -2), (3, 4, 2)]
        assert enumerate_mcfe("-12/19", odd_length_only=True) == []

    def test_small_cases(self):
        assert enumerate_mcfe("1/2") == [(2,)]
        assert enumerate_mcfe("0") == [()]
        assert enumerate_mcfe("3/2") == []
        assert enumerate_mcfe(ExtendedRational(1, 0)) == []

    @pytest.mark.parametrize("z", [3, 4, 5, 6])
    def test_genus_two_family_n0_list(self, z):
        # the seven listed expansions for p(0)/q(0) all occur, plus two more families
        x = ExtendedRational(6 * z * z - 3 * z, 1 + 12 * z * z)
        listed = {
            (2, -z, -2, -2, z, 2),
            (2, -z, -2, -3) + (-2,) * (z - 2) + (-3,),
            (2, 1 - z, 3, z, -2),
            (2, 1 - z, 3, z + 1, 2),
            (3,) + (2,) * (z - 2) + (3,) + (-2,) * (z - 1) + (-3,),
            (3,) + (2,) * (z - 2) + (4, z, -2),
            (3,) + (2,) * (z - 2) + (4, z + 1, 2),
        }
        found = set(enumerate_mcfe(x))
        assert listed <= found
        assert found - listed == {
            (2, -z, -2, -2, z - 1, -2),
            (2, 1 - z, 2) + (-2,) * (z - 1) + (-3,),
        }

    @pytest.mark.parametrize("z", [3, 4, 5])
    def test_genus_two_family_n_minus_one_list(self, z):
        x = ExtendedRational(-1 - 3 * z - 6 * z * z, 1 + 12 * z * z)
        listed = {
            (-2, -z - 1, -2, -3) + (-2,) * (z - 2) + (-3,),
            (-2, -z - 1, -2, -2, z, 2),
            (-2, -z - 1, -2, -2, z - 1, -2),
            (-2, -z, 2) + (-2,) * (z - 1) + (-3,),
            (-2, -z, 3, z + 1, 2),
            (-2, -z, 3, z, -2),
        }
        assert set(enumerate_mcfe(x)) == listed

    def test_sorted_unique_and_valid(self):
        for x in reduced(60):
            found = enumerate_mcfe(x)
            assert found == sorted(set(found))
            for m in found:
                assert is_mcfe(m) and eval_cf(m) == x

    def test_move_witnesses(self):
        for x in reduced(50):
            if abs(x.numerator) >= x.denominator and x.numerator:
                continue
            base = scfe(x)
            witnesses = mcfe_move_sets(x)
            assert sorted(witnesses) == enumerate_mcfe(x)
            for m, positions in witnesses.items():
                assert apply_moves(base, positions) == m
                assert all(base[p] != 0 for p in positions)
                assert all(b - a >= 2 for a, b in zip(positions, positions[1:]))


class TestFormatting:
    def test_round_trip(self):
        assert format_cf((2, -1, 2, -2)) == "[2,-1,2,-2]"
        assert parse_cf("[2,-1,2,-2]") == (2, -1, 2, -2)
        assert parse_cf("[]") == ()
        assert parse_cf("3 -4") == (3, -4)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            parse_cf("[2,x]")


# -- move calculus properties -----------------------------------------------------

coeffs = st.lists(st.integers(-7, 7), min_size=1, max_size=9)
signs = st.sampled_from([1, -1])


@given(coeffs, st.data(), signs)
def test_cf1_invariants(cf, data, s):
    assume(len(cf) >= 2)
    pos = data.draw(st.integers(0, len(cf) - 2))
    new = apply_cf1(cf, pos, s)
    assert eval_cf(new) == eval_cf(cf)
    assert coefficient_sum(new) - coefficient_sum(cf) == 3 * s
    assert len(new) - len(cf) == 1
    assert invert_cf1(new, pos + 1) == tuple(cf)


@given(coeffs, signs)
def test_cf1p_invariants(cf, s):
    new = apply_cf1p(cf, s)
    assert eval_cf(new) == eval_cf(cf)
    assert coefficient_sum(new) - coefficient_sum(cf) == 2 * s
    assert len(new) - len(cf) == 1


@given(coeffs, st.data(), st.integers(-7, 7))
def test_cf2_invariants(cf, data, r):
    pos = data.draw(st.integers(0, len(cf) - 1))
    new = apply_cf2(cf, pos, r)
    assert eval_cf(new) == eval_cf(cf)
    assert coefficient_sum(new) == coefficient_sum(cf)
    assert len(new) - len(cf) == 2


@given(coeffs, st.integers(-7, 7))
def test_cf2p_invariants(cf, s):
    new = apply_cf2p(cf, s)
    assert eval_cf(new) == eval_cf(cf)
    assert coefficient_sum(new) - coefficient_sum(cf) == s
    assert len(new) - len(cf) == 2


@given(coeffs, st.data())
def test_move_m_invariants(cf, data):
    assume(len(cf) >= 2)
    pos = data.draw(st.integers(1, len(cf) - 1))
    assume(cf[pos] != 0)
    a = cf[pos]
    new = apply_move_m(cf, pos)
    assert eval_cf(new) == eval_cf(cf)
    if pos < len(cf) - 1:
        assert coefficient_sum(new) - coefficient_sum(cf) == -3 * a
    else:
        assert coefficient_sum(new) - coefficient_sum(cf) == -3 * a + sign(a)
    assert len(new) - len(cf) == abs(a) - 2
