"""Pyramids of monomials below the staircase diagonal and their weights.

A pyramid with frame c holds, for each 0 <= i < c, a set of y-degrees inside
[0, i].  Its colength is the number of missing entries, and the weight of a
column {a_1 < ... < a_m} is (a_1 + ... + a_m) - (1 + ... + (m-1)).  The
maximal weight over all pyramids of type (c, d) has a closed form indexed by
the unique representation d = n(n+1) - r or d = n^2 - r with 0 <= r < n,
which the brute-force searches here exist to confirm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .errors import DomainError, InternalInconsistencyError, InvalidMoveError, RangeError

TOP_SEGMENT_FRAME_CAP = 9
FULL_SUBSET_FRAME_CAP = 5


def column_weight(column) -> int:
    col = sorted(set(column))
    m = len(col)
    return sum(col) - comb(m, 2)


@dataclass(frozen=True)
class Pyramid:
    frame: int
    columns: tuple[frozenset[int], ...]

    @staticmethod
    def from_columns(columns) -> "Pyramid":
        cols = tuple(frozenset(int(a) for a in col) for col in columns)
        pyr = Pyramid(len(cols), cols)
        pyr.validate()
        return pyr

    @staticmethod
    def from_initial_degrees(avec) -> "Pyramid":
        """Top-segment pyramid from its initial degrees; a(i) = i + 1 means empty."""
        cols = []
        for i, a in enumerate(avec):
            if not 0 <= a <= i + 1:
                raise DomainError(f"initial degree a({i})={a} outside [0, {i + 1}]")
            cols.append(frozenset(range(a, i + 1)))
        return Pyramid.from_columns(cols)

    def validate(self) -> None:
        if self.frame < 1:
            raise DomainError("pyramid frame must be positive")
        if len(self.columns) != self.frame:
            raise DomainError("pyramid needs one column per degree below the frame")
        for i, col in enumerate(self.columns):
            if any(a < 0 or a > i for a in col):
                raise DomainError(f"column {i} has degree outside [0, {i}]: {sorted(col)}")
        if not 1 <= self.colength <= comb(self.frame + 1, 2):
            raise DomainError(
                f"colength {self.colength} outside [1, {comb(self.frame + 1, 2)}]"
            )

    @property
    def colength(self) -> int:
        return sum(i + 1 - len(col) for i, col in enumerate(self.columns))

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    def weight(self) -> int:
        return sum(column_weight(col) for col in self.columns)

    def is_top_segment(self) -> bool:
        return all(
            col == frozenset(range(min(col), i + 1)) if col else True
            for i, col in enumerate(self.columns)
        )

    def initial_degrees(self) -> tuple[int, ...]:
        """a(i) per column of a top-segment pyramid (i + 1 for an empty column)."""
        if not self.is_top_segment():
            raise DomainError("initial degrees only defined for top-segment pyramids")
        return tuple(min(col) if col else i + 1 for i, col in enumerate(self.columns))

    def shifted(self) -> "Pyramid":
        """The pyramid with every monomial multiplied by y (frame grows by one)."""
        cols = [frozenset()] + [frozenset(a + 1 for a in col) for col in self.columns]
        return Pyramid(self.frame + 1, tuple(cols))


def weight(pyramid: Pyramid) -> int:
    return pyramid.weight()


def move_delta(pyramid: Pyramid, i: int, j: int) -> int:
    """Exact weight change of moving the initial monomial of column i one
    step below the initial monomial of column j: 2(a(j) - a(i)) - (j - i) - 2.
    """
    avec = pyramid.initial_degrees()
    if i == j:
        raise InvalidMoveError("move needs two distinct columns")
    if not (0 <= i < pyramid.frame and 0 <= j < pyramid.frame):
        raise InvalidMoveError(f"column index outside the frame: {(i, j)}")
    if not pyramid.columns[i]:
        raise InvalidMoveError(f"column {i} is empty, nothing to move")
    if avec[j] <= 0:
        raise InvalidMoveError(f"column {j} already starts at degree 0")
    return 2 * (avec[j] - avec[i]) - (j - i) - 2


def apply_move(pyramid: Pyramid, i: int, j: int) -> Pyramid:
    delta = move_delta(pyramid, i, j)  # validates the move
    avec = list(pyramid.initial_degrees())
    avec[i] += 1
    avec[j] -= 1
    moved = Pyramid.from_initial_degrees(avec)
    assert moved.weight() - pyramid.weight() == delta
    return moved


@dataclass(frozen=True)
class NRDecomposition:
    """The unique representation d = n(n+1) - r or d = n^2 - r, 0 <= r < n."""

    case: str  # "square_pronic" (d = n(n+1) - r) or "square" (d = n^2 - r)
    n: int
    r: int

    def value(self) -> int:
        base = self.n * (self.n + 1) if self.case == "square_pronic" else self.n * self.n
        return base - self.r


def nr_decomposition(d: int) -> NRDecomposition:
    if d < 1:
        raise DomainError(f"decomposition needs d >= 1, got {d}")
    n = isqrt(d)
    if n * n < d:
        n += 1
    candidates = []
    if 0 <= n * n - d < n:
        candidates.append(NRDecomposition("square", n, n * n - d))
    for m in (n - 1, n):
        if m >= 1 and 0 <= m * (m + 1) - d < m:
            candidates.append(NRDecomposition("square_pronic", m, m * (m + 1) - d))
    if len(candidates) != 1:
        raise InternalInconsistencyError(f"d={d} admits {len(candidates)} representations")
    return candidates[0]


def max_weight_closed_form(c: int, d: int) -> int:
    """Maximal weight of a pyramid of type (c, d), 1 <= d <= c.

    Evaluated through two equivalent rational rewritings whose fractional
    parts must cancel; integrality and agreement are asserted.
    """
    if not 1 <= d <= c:
        raise DomainError(f"need 1 <= d <= c, got d={d}, c={c}")
    dec = nr_decomposition(d)
    n, r = Fraction(dec.n), Fraction(dec.r)
    if dec.case == "square_pronic":
        direct = n * ((c - Fraction(3, 2)) * n + (c + 2 * r - Fraction(1, 6)) - Fraction(4, 3) * n**2) - r * c
        expanded = -Fraction(4, 3) * n**3 - Fraction(3, 2) * n**2 + (2 * r - Fraction(1, 6)) * n + d * c
    else:
        direct = n * ((c + Fraction(1, 2)) * n + (2 * r - Fraction(1, 6)) - Fraction(4, 3) * n**2) - r * (c + 1)
        expanded = -Fraction(4, 3) * n**3 + Fraction(1, 2) * n**2 + (2 * r - Fraction(1, 6)) * n - r + d * c
    if direct != expanded:
        raise InternalInconsistencyError(f"closed-form rewritings disagree at (c={c}, d={d})")
    if direct.denominator != 1:
        raise InternalInconsistencyError(f"closed form not integral at (c={c}, d={d}): {direct}")
    return int(direct)


def endpoint_consistency(c: int, n: int) -> bool:
    """The two closed forms agree where their parameter intervals meet.

    At d = n^2 the first form with r = n must match the second with r = 0;
    at d = (n-1)n the first with (n-1, r=0) must match the second with (n, r=n).
    """
    if n < 1 or c < 1:
        raise DomainError(f"need c >= 1 and n >= 1, got c={c}, n={n}")

    def pronic_form(nn, rr):
        nn, rr = Fraction(nn), Fraction(rr)
        return nn * ((c - Fraction(3, 2)) * nn + (c + 2 * rr - Fraction(1, 6)) - Fraction(4, 3) * nn**2) - rr * c

    def square_form(nn, rr):
        nn, rr = Fraction(nn), Fraction(rr)
        return nn * ((c + Fraction(1, 2)) * nn + (2 * rr - Fraction(1, 6)) - Fraction(4, 3) * nn**2) - rr * (c + 1)

    seam_square = pronic_form(n, n) == square_form(n, 0)
    seam_pronic = pronic_form(n - 1, 0) == square_form(n, n)
    return seam_square and seam_pronic


def _top_segment_candidates(c: int, d: int):
    """All top-segment pyramids of type (c, d) as initial-degree vectors."""

    def extend(prefix: list[int], deficit: int):
        i = len(prefix)
        if i == c:
            if deficit == 0:
                yield tuple(prefix)
            return
        hi = min(i + 1, deficit)
        for a in range(hi + 1):
            yield from extend(prefix + [a], deficit - a)

    yield from extend([], d)


def brute_force_max_weight(c: int, d: int, full_subsets: bool = False):
    """Exhaustive maximum weight over pyramids of type (c, d) with a witness.

    The default search runs over top-segment pyramids only (every maximal
    weight is attained on one); ``full_subsets=True`` searches arbitrary
    column subsets to guard that reduction, at a smaller frame cap.
    """
    if not 1 <= d <= c:
        raise RangeError(f"need 1 <= d <= c, got d={d}, c={c}")
    cap = FULL_SUBSET_FRAME_CAP if full_subsets else TOP_SEGMENT_FRAME_CAP
    if c > cap:
        raise RangeError(f"frame {c} beyond the search budget ({cap})")
    best = None
    best_key = None
    if full_subsets:
        pools = [
            [frozenset(sub) for k in range(i + 2) for sub in itertools.combinations(range(i + 1), k)]
            for i in range(c)
        ]
        for cols in itertools.product(*pools):
            pyr = Pyramid(c, cols)
            if pyr.colength != d:
                continue
            w = pyr.weight()
            key = (-w, tuple(tuple(sorted(col)) for col in cols))
            if best_key is None or key < best_key:
                best, best_key = (w, pyr), key
    else:
        for avec in _top_segment_candidates(c, d):
            pyr = Pyramid.from_initial_degrees(avec)
            w = pyr.weight()
            key = (-w, avec)
            if best_key is None or key < best_key:
                best, best_key = (w, pyr), key
    assert best is not None
    return best
