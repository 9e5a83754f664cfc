"""Semi-invariant spaces, chains, and their limit staircases."""

import pytest

from staircase_lab import staircase as S
from staircase_lab import torus as T
from staircase_lab.catalog import build_space, case_by_name, double_deformation_space
from staircase_lab.errors import DegenerateLimitError, DomainError
from staircase_lab.monomials import Monomial


def handle_space(m=4, level=None):
    return build_space(case_by_name("7.3"), m, level)


class TestSpaces:
    def test_dimension_matches_the_section_count(self):
        space = handle_space()
        ideal = S.from_generators([(1, 1), (0, 2), (4, 0)])
        assert space.dimension == len(ideal.section_monomials(space.degree))

    def test_duplicate_initials_rejected(self):
        weight = T.TorusWeight((-1, 0, 1))
        chain = T.Chain(Monomial(2, 0, 0), frozenset([0]))
        with pytest.raises(DomainError):
            T.SemiInvariantSpace(weight, (chain, chain))

    def test_mixed_degrees_rejected(self):
        weight = T.TorusWeight((-1, 0, 1))
        with pytest.raises(DomainError):
            T.SemiInvariantSpace(
                weight,
                (T.Chain(Monomial(2, 0, 0), frozenset([0])), T.Chain(Monomial(1, 0, 0), frozenset([0]))),
            )

    def test_bad_weight_rejected(self):
        with pytest.raises(DomainError):
            T.TorusWeight((1, 1, 1))
        with pytest.raises(DomainError):
            T.TorusWeight((0, 0, 0))

    def test_json_round_trip(self):
        space = handle_space()
        text = space.to_json()
        back = T.SemiInvariantSpace.from_json(text)
        assert back == space
        assert back.to_json() == text


class TestLimits:
    def test_binomial_deformation_limits(self):
        space = handle_space(m=4)
        zero = T.limit_ideal(space, "zero")
        infinity = T.limit_ideal(space, "infinity")
        assert zero == S.from_generators([(1, 1), (0, 2), (4, 0)])
        assert infinity == S.from_generators([(0, 1), (5, 0)])

    def test_all_monomial_space_is_fixed(self):
        ideal = S.from_generators([(1, 1), (0, 2), (4, 0)])
        space = T.section_space(ideal, 6, T.TorusWeight((-1, 0, 1)))
        assert T.limit_ideal(space, "zero") == ideal
        assert T.limit_ideal(space, "infinity") == ideal

    def test_single_monomial_chain_is_fixed_both_ways(self):
        weight = T.TorusWeight((-2, 1, 1))
        chains = (T.Chain(Monomial(0, 3, 0), frozenset([0])),)
        space = T.SemiInvariantSpace(weight, chains)
        assert T.limit_ideal(space, "zero") == T.limit_ideal(space, "infinity")

    def test_colliding_finals_degenerate(self):
        space = double_deformation_space()
        T.limit_ideal(space, "zero")  # distinct initials are fine
        with pytest.raises(DegenerateLimitError):
            T.limit_ideal(space, "infinity")

    def test_unknown_direction_rejected(self):
        with pytest.raises(DomainError):
            T.limit_ideal(handle_space(), "sideways")

    def test_limits_independent_of_the_level(self):
        for level in (5, 6, 8):
            space = handle_space(m=4, level=level)
            assert T.limit_ideal(space, "zero") == S.from_generators([(1, 1), (0, 2), (4, 0)])
            assert T.limit_ideal(space, "infinity") == S.from_generators([(0, 1), (5, 0)])


class TestBuilder:
    def test_steps_inside_the_section_space_reduce_away(self):
        # over the handle staircase, x * f steps into a plain section monomial
        ideal = S.from_generators([(1, 1), (0, 2), (4, 0)])
        weight = T.TorusWeight((-4, 1, 3))
        space = T.deformed_section_space(
            ideal, 6, weight, [(Monomial(5, 0, 1), [1]), (Monomial(4, 0, 2), [1])]
        )
        by_initial = {c.initial: c for c in space.chains}
        assert by_initial[Monomial(5, 0, 1)].support == frozenset([0])
        assert by_initial[Monomial(4, 0, 2)].support == frozenset([0, 1])

    def test_initial_outside_the_sections_rejected(self):
        ideal = S.from_generators([(1, 1), (0, 2), (4, 0)])
        weight = T.TorusWeight((-4, 1, 3))
        with pytest.raises(DomainError):
            T.deformed_section_space(ideal, 6, weight, [(Monomial(0, 0, 6), [1])])

    def test_step_onto_another_initial_rejected(self):
        ideal = S.from_generators([(0, 1), (2, 0)])
        weight = T.TorusWeight((-1, 1, 0))
        with pytest.raises(DomainError):
            T.deformed_section_space(
                ideal, 3, weight, [(Monomial(2, 0, 1), [1]), (Monomial(1, 1, 1), [1])]
            )
