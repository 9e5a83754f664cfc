"""Staircase model: colength, Hilbert functions, Borel moves, JSON."""

import json

import pytest
from hypothesis import given

from staircase_lab import hilbert as H
from staircase_lab import staircase as S
from staircase_lab.errors import DomainError, MalformedIdealError

from .strategies import ideals_small


def full_ideal():
    return S.from_generators([(0, 0)])


class TestColength:
    def test_full_ideal(self):
        assert full_ideal().colength == 0

    def test_even_special_ideal(self):
        ideal = S.from_generators([(2, 0), (1, 2), (0, 4)])
        assert ideal.colength == 6

    def test_handle_and_power(self):
        ideal = S.from_generators([(1, 1), (0, 2), (4, 0)])
        assert ideal.colength == 5

    @given(ideals_small)
    def test_matches_hilbert_function(self, ideal):
        assert ideal.colength == ideal.hilbert_function().colength

    def test_infinite_colength_rejected(self):
        with pytest.raises(MalformedIdealError):
            S.from_generators([(1, 1), (2, 0)])


class TestHilbertFunction:
    def test_full(self):
        phi = full_ideal().hilbert_function()
        assert phi.diff == (1,)
        assert all(phi.value(n) == (n + 1) * (n + 2) // 2 for n in range(6))

    def test_colength_three_staircase(self):
        ideal = S.from_generators([(0, 1), (3, 0)])  # (y, x^3)
        assert ideal.hilbert_function().diff == (0, 1, 2, 4)
        assert ideal.hilbert_function().g_star() == 1

    def test_odd_special_ideal_function(self):
        ideal = S.from_generators([(2, 0), (1, 3), (0, 4)])
        chi = ideal.hilbert_function()
        assert chi.colength == 7
        assert chi == H.special_chi(7)

    def test_even_special_ideal_function(self):
        for e in range(4, 9):
            ideal = S.from_generators([(2, 0), (1, e - 2), (0, e)])
            assert ideal.hilbert_function() == H.special_chi(2 * (e - 1))

    @given(ideals_small)
    def test_always_admissible(self, ideal):
        diff = [len(ideal.column(n)) for n in range(ideal.stable_from + 2)]
        assert H.is_valid(diff)

    @given(ideals_small)
    def test_columns_full_from_the_colength_on(self, ideal):
        d = ideal.colength
        for n in range(d, d + 3):
            assert len(ideal.column(n)) == n + 1


class TestBorel:
    def test_lex_segment_columns_are_fixed(self):
        assert S.from_generators([(2, 0), (1, 2), (0, 4)]).is_borel_fixed()

    def test_full_ideal_fixed(self):
        assert full_ideal().is_borel_fixed()

    def test_handle_ideal_not_fixed(self):
        assert not S.from_generators([(1, 1), (0, 2), (4, 0)]).is_borel_fixed()

    @given(ideals_small)
    def test_closure_is_fixed_and_never_larger_colength(self, ideal):
        closure = ideal.borel_closure()
        assert closure.is_borel_fixed()
        assert closure.colength <= ideal.colength
        if ideal.is_borel_fixed():
            assert closure == ideal


class TestValidation:
    def test_growth_violation_rejected(self):
        with pytest.raises(MalformedIdealError):
            S.GradedMonomialIdeal.from_columns([[0], []], 2)

    def test_out_of_range_exponent_rejected(self):
        with pytest.raises(MalformedIdealError):
            S.GradedMonomialIdeal.from_columns([[1]], 1)

    def test_negative_stable_from_rejected(self):
        with pytest.raises(MalformedIdealError):
            S.GradedMonomialIdeal(tuple(), -1).validate()


class TestJson:
    @given(ideals_small)
    def test_round_trip_is_bit_exact(self, ideal):
        text = ideal.to_json()
        back = S.GradedMonomialIdeal.from_json(text)
        assert back == ideal
        assert back.to_json() == text

    def test_columns_beyond_the_array_are_full(self):
        ideal = S.GradedMonomialIdeal.from_json(json.dumps({"columns": [[], [0]], "stable_from": 2}))
        assert ideal.column(5) == frozenset(range(6))

    def test_malformed_json_rejected(self):
        with pytest.raises(DomainError):
            S.GradedMonomialIdeal.from_json_dict({"columns": [[0]]})


class TestEnumeration:
    def test_counts_are_partition_numbers(self):
        assert [len(S.enumerate_ideals(d)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    @pytest.mark.parametrize("d", range(9))
    def test_agreement_with_function_enumeration(self, d):
        via_ideals = {ideal.hilbert_function() for ideal in S.enumerate_ideals(d)}
        assert via_ideals == set(H.enumerate_hilbert_functions(d))

    def test_all_distinct_and_right_colength(self):
        for d in range(8):
            ideals = S.enumerate_ideals(d)
            assert len(set(ideals)) == len(ideals)
            assert all(ideal.colength == d for ideal in ideals)


class TestGenerators:
    @given(ideals_small)
    def test_round_trip_through_generators(self, ideal):
        if ideal.colength == 0:
            return
        assert S.from_generators(ideal.generators()) == ideal
