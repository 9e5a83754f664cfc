"""Degrees of one-parameter orbit closures of monomial data (alpha-grades).

The alpha-grade of a monomial subspace is a column-wise weight: a column of
y-degrees {c_1 < ... < c_r} contributes (c_1 + ... + c_r) - (1 + ... + (r-1)).
For a staircase this yields the degree of the orbit-closure cycle of its
graded pieces, constant once the degree is at least the colength.  For a
semi-invariant space, selecting one supported monomial per chain (collisions
contribute nothing) and taking extremes of the alpha-grade gives computable
bounds for the true orbit degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import (
    DegenerateSpaceError,
    DomainError,
    InternalInconsistencyError,
    RangeError,
)
from .hilbert import special_chi
from .monomials import Monomial
from .staircase import GradedMonomialIdeal, from_generators
from .torus import SemiInvariantSpace

SELECTION_BUDGET = 10**6


def column_alpha_grade(column) -> int:
    col = sorted(set(column))
    return sum(col) - comb(len(col), 2)


def alpha_grade_columns(columns) -> int:
    """Alpha-grade of a graded monomial subspace given per-degree y-exponent sets."""
    return sum(column_alpha_grade(col) for col in columns)


def alpha_grade_monomials(monomials) -> int:
    """Alpha-grade of a set of equal-degree monomials, grouped by z-layer."""
    cols: dict[int, set[int]] = {}
    for mon in monomials:
        cols.setdefault(mon.xy_degree, set()).add(mon.ey)
    return alpha_grade_columns(cols.values())


def cycle_degree(ideal: GradedMonomialIdeal, n: int) -> int:
    """Degree of the orbit-closure cycle read off the degree-n section space.

    Defined for n >= colength - 1; the value does not depend on n there.
    """
    if n < ideal.colength - 1:
        raise RangeError(f"degree {n} below the stabilization range {ideal.colength - 1}")
    return alpha_grade_columns(ideal.column(i) for i in range(min(n, ideal.stable_from) + 1))


def q_value(d: int, n: int) -> int:
    """Complementary Hilbert polynomial value in the plane: C(n+2, 2) - d."""
    return comb(n + 2, 2) - d


@dataclass(frozen=True)
class DomainSplit:
    """Split of equal-degree monomials at total x,y-degree c + r."""

    threshold: int

    def __post_init__(self):
        if self.threshold < 0:
            raise DomainError("split threshold must be nonnegative")

    def is_left(self, mon: Monomial) -> bool:
        return mon.xy_degree <= self.threshold

    def is_right(self, mon: Monomial) -> bool:
        return mon.xy_degree > self.threshold


def _selections(space: SemiInvariantSpace):
    """Collision-free selections of one supported monomial per chain."""
    options = [chain.monomials(space.weight) for chain in space.chains]
    budget = 1
    for opt in options:
        budget *= len(opt)
        if budget > SELECTION_BUDGET:
            raise RangeError(f"selection budget exceeded: > {SELECTION_BUDGET} combinations")
    fixed = [opt[0] for opt in options if len(opt) == 1]
    if len(set(fixed)) != len(fixed):
        raise InternalInconsistencyError("duplicate initial monomials slipped through")
    fixed_set = set(fixed)
    variable = [opt for opt in options if len(opt) > 1]
    for picks in itertools.product(*variable):
        if len(set(picks)) != len(picks):
            continue
        if any(p in fixed_set for p in picks):
            continue
        yield fixed + list(picks)


def minmax_alpha_grade(space: SemiInvariantSpace) -> tuple[int, int]:
    """Exhaustive (min, max) of the alpha-grade over chain selections."""
    lo = hi = None
    for sel in _selections(space):
        g = alpha_grade_monomials(sel)
        if lo is None or g < lo:
            lo = g
        if hi is None or g > hi:
            hi = g
    if lo is None:
        raise DegenerateSpaceError("no collision-free selection exists")
    return lo, hi


def right_domain_spread(space: SemiInvariantSpace, split: DomainSplit) -> int:
    """Spread of the right-domain alpha-grade between extreme selections.

    From the selections attaining the global maximum (resp. minimum), keep
    only monomials right of the split and measure the alpha-grade; the
    spread is the difference of the two restricted values.
    """
    lo, hi = minmax_alpha_grade(space)
    right_at_max = None
    right_at_min = None
    for sel in _selections(space):
        g = alpha_grade_monomials(sel)
        restricted = alpha_grade_monomials([m for m in sel if split.is_right(m)])
        if g == hi:
            right_at_max = restricted if right_at_max is None else max(right_at_max, restricted)
        if g == lo:
            right_at_min = restricted if right_at_min is None else min(right_at_min, restricted)
    assert right_at_max is not None and right_at_min is not None
    return right_at_max - right_at_min


def check_bang(space: SemiInvariantSpace, phi) -> bool:
    """Whether Q(m-1) + min-alpha-grade > max-alpha-grade for the space of an
    ideal with Hilbert function phi and regularity m."""
    lo, hi = minmax_alpha_grade(space)
    return q_value(phi.colength, phi.regularity - 1) + lo > hi


def a_bound(case: str, *, c: int, r: int, ms: tuple[int, ...] = ()) -> int:
    """Closed-form bound for the right-domain alpha-grade spread, per regime.

    Cases "I1"/"I2" need the full chain m_0..m_r; "II1"/"II2" need r >= 1 and
    use only m_0.
    """
    if r < 0 or c < 0:
        raise DomainError(f"need r >= 0 and c >= 0, got r={r}, c={c}")
    if case in ("I1", "I2"):
        if r == 0:
            return 0
        if len(ms) != r + 1:
            raise DomainError(f"case {case} needs m_0..m_{r}, got {ms}")
        tail = sum(ms[1:])
        return r * (r + 3) + tail if case == "I1" else r * (r + c) + tail
    if case in ("II1", "II2"):
        if r < 1:
            raise DomainError(f"case {case} is stated for r >= 1")
        if not ms:
            raise DomainError(f"case {case} needs m_0")
        m0 = ms[0]
        if case == "II1":
            return 4 * m0 + r * (r + 3) - c - 1
        return (c + 2) * m0 + r * r - 2 * (c + 2) + comb(c, 2)
    raise DomainError(f"unknown bound case {case!r}")


def genus_nu(d: int, nu: int) -> int:
    """Genus of the cone family: (nu - 1) d - C(nu + 2, 3) + 1, nu >= 1."""
    if nu < 1:
        raise DomainError(f"need nu >= 1, got {nu}")
    return (nu - 1) * d - comb(nu + 2, 3) + 1


def chapter14_ideals(e: int) -> list[GradedMonomialIdeal]:
    """The five deformation staircases of colength 2(e-1) sharing the even
    special Hilbert function, ordered by their closed-form cycle degrees."""
    if e < 4:
        raise DomainError(f"need e >= 4, got {e}")
    return [
        from_generators([(1, 1), (e - 1, 0), (0, e)]),
        from_generators([(1, 1), (e, 0), (0, e - 1)]),
        from_generators([(0, 2), (e - 2, 1), (e, 0)]),
        from_generators([(0, 2), (e - 1, 0)]),
        from_generators([(2, 0), (0, e - 1)]),
    ]


def chapter14_degrees(e: int) -> tuple[int, int, int, int, int]:
    """Cycle degrees of the five deformation staircases of colength 2(e-1).

    The values must match the closed forms
    (C(e-2,2), C(e-2,2)+(e-1), 2C(e-2,2)+(e-1), 2C(e-2,2)+(e-2), 1).
    """
    ideals = chapter14_ideals(e)
    d = 2 * (e - 1)
    chi = special_chi(d)
    for ideal in ideals:
        if ideal.hilbert_function() != chi:
            raise InternalInconsistencyError(f"{ideal} does not have the special Hilbert function")
    degs = tuple(cycle_degree(ideal, d) for ideal in ideals)
    b = comb(e - 2, 2)
    expected = (b, b + (e - 1), 2 * b + (e - 1), 2 * b + (e - 2), 1)
    if degs != expected:
        raise InternalInconsistencyError(f"cycle degrees {degs} != closed forms {expected}")
    return degs
