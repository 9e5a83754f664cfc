"""Decomposition, type chains, markers, and standard-form detection."""

import pytest
from hypothesis import given

from staircase_lab import hilbert as H
from staircase_lab import staircase as S
from staircase_lab import standard_form as SF
from staircase_lab import torus as T
from staircase_lab.catalog import build_space, case_by_name
from staircase_lab.errors import DomainError, MarkerUndefinedError
from staircase_lab.monomials import Monomial

from .strategies import hf_small

FULL = H.HilbertFunction((1,))


class TestDecompose:
    def test_special_function_has_no_split(self):
        for d in range(5, 16):
            assert SF.decompose(H.special_chi(d)) is None

    def test_small_colength_has_no_split(self):
        for d in range(0, 5):
            for phi in H.enumerate_hilbert_functions(d):
                assert SF.decompose(phi) is None

    def test_inverts_compose(self):
        psi = H.enumerate_hilbert_functions(1)[0]
        phi = SF.compose(psi, 4)
        assert phi.colength == 5 and phi.g_star() == 3
        assert SF.decompose(phi) == (psi, 4)

    @given(hf_small)
    def test_round_trip_when_defined(self, phi):
        split = SF.decompose(phi)
        if split is None:
            return
        psi, m = split
        assert SF.compose(psi, m) == phi
        assert m >= psi.colength + 2
        assert psi.colength + m == phi.colength

    def test_ladder_over_enumeration(self):
        for d in range(5, 15):
            bound = H.deformation_bound(d)
            for phi in H.enumerate_hilbert_functions(d):
                if phi.g_star() > bound:
                    psi, m = SF.decompose(phi)
                    assert m >= psi.colength + 2

    def test_kernel_below_its_bound_forces_doubled_m(self):
        hits = 0
        for d in range(12, 19):
            for phi in H.enumerate_hilbert_functions(d):
                if phi.g_star() <= H.deformation_bound(d):
                    continue
                psi, m = SF.decompose(phi)
                c = psi.colength
                if c >= 5 and psi.g_star() <= H.deformation_bound(c):
                    hits += 1
                    assert m >= 2 * c + 1
        assert hits > 0


class TestCompose:
    def test_empty_kernel(self):
        phi = SF.compose(FULL, 5)
        assert phi.colength == 5
        assert phi.g_star() == 6  # = g(full) + 5*2/2 + 0 with g(full) = 1

    def test_colength_two_kernel(self):
        psi = H.enumerate_hilbert_functions(2)[0]
        phi = SF.compose(psi, 5)
        assert phi.colength == 7
        assert phi.g_star() == psi.g_star() + 5 + 2

    def test_m_too_small_rejected(self):
        psi = H.enumerate_hilbert_functions(2)[0]
        with pytest.raises(DomainError):
            SF.compose(psi, psi.regularity + 1)


class TestTypeChain:
    def test_special_function_is_type_minus_one(self):
        for d in range(5, 12):
            assert SF.type_of(H.special_chi(d)).r == -1

    def test_small_colength_is_type_minus_one(self):
        for d in range(0, 5):
            for phi in H.enumerate_hilbert_functions(d):
                chain = SF.type_of(phi)
                assert chain.r == -1
                assert chain.kernel_c == d

    def test_two_level_chain(self):
        phi = SF.compose(SF.compose(FULL, 5), 12)
        chain = SF.type_of(phi)
        assert (chain.r, chain.ms, chain.kernel_c, chain.kernel_kappa) == (1, (12, 5), 0, 0)

    def test_smallest_type_two_chain_exists(self):
        # oracle search: grow the top regularity until the ladder is valid
        inner = SF.compose(SF.compose(FULL, 5), 12)
        for m0 in range(14, 40):
            phi = SF.compose(inner, m0)
            chain = SF.type_of(phi)
            if chain.r == 2:
                assert chain.ms == (m0, 12, 5)
                return
        raise AssertionError("no type-2 chain with empty kernel found")

    def test_invariants_over_enumeration(self):
        for d in range(5, 15):
            for phi in H.enumerate_hilbert_functions(d):
                SF.type_of(phi).check_invariants()

    def test_rendering(self):
        chain = SF.TypeChain((14, 5), 0, 0, ("y", "x"))
        assert chain.as_text() == "r=1; ells=y,x; ms=14,5; c=0; kappa=0"


class TestMarkers:
    def test_iota_example(self):
        assert SF.iota_table(("x", "y", "x", "x", "y", "y")) == (0, 0, 1, 1, 1, 2, 3)

    def test_type_zero_lower_marker_is_a_pure_power(self):
        markers = SF.marker_monomials(SF.TypeChain((7,), 0, 0, ("y",)))
        assert markers[0].m_down == Monomial(7, 0, 0)

    def test_vice_markers_divide_one_power(self):
        chain = SF.TypeChain((14, 5), 0, 0, ("y", "y"))
        for level in SF.marker_monomials(chain):
            assert level.n_up == level.m_up.shift(0, -1, 1)
            assert level.n_down == level.m_down.shift(-1, 0, 1)
            assert level.e_down == level.m_down.shift(-2, 0, 2)

    def test_all_markers_live_in_the_top_degree(self):
        chain = SF.TypeChain((20, 8, 4), 1, 0, ("y", "x", "y"))
        for level in SF.marker_monomials(chain):
            for mon in (level.m_up, level.m_down, level.n_up, level.n_down, level.e_up, level.e_down):
                assert mon.degree == 20

    def test_negative_exponent_rejected(self):
        with pytest.raises(MarkerUndefinedError):
            SF.marker_monomials(SF.TypeChain((2, 1), 0, 0, ("y", "y")))

    def test_needs_labels(self):
        with pytest.raises(DomainError):
            SF.marker_monomials(SF.TypeChain((7,), 0, 0))


class TestDetect:
    def test_handle_ideal_is_y_form(self):
        form = SF.detect_standard_form(S.from_generators([(1, 1), (0, 2), (4, 0)]))
        assert form.ell == "y"
        assert form.m == 4
        assert form.kernel.colength == 1

    def test_mirror_ideal_is_x_form(self):
        form = SF.detect_standard_form(S.from_generators([(1, 1), (2, 0), (0, 4)]))
        assert form.ell == "x"
        assert form.m == 4

    def test_special_ideal_has_no_form(self):
        ideal = S.from_generators([(2, 0), (1, 2), (0, 4)])
        assert SF.detect_standard_form(ideal) is None

    def test_agreement_with_function_level_split(self):
        for d in range(5, 12):
            for ideal in S.enumerate_ideals(d):
                phi = ideal.hilbert_function()
                split = SF.decompose(phi)
                form = SF.detect_standard_form(ideal)
                if split is None:
                    assert form is None
                else:
                    psi, m = split
                    assert form is not None
                    assert (form.kernel.colength, form.m) == (psi.colength, m)
                    assert form.kernel.hilbert_function() == psi

    @pytest.mark.parametrize("name,m", [("7.3", 4), ("7.3", 6), ("7.4a", 5), ("7.5e", 6)])
    def test_limits_keep_the_y_form(self, name, m):
        space = build_space(case_by_name(name), m)
        for direction in ("zero", "infinity"):
            limit = T.limit_ideal(space, direction)
            form = SF.detect_standard_form(limit)
            assert form is not None and form.ell == "y"
