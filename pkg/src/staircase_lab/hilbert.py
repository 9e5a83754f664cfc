"""Hilbert functions of finite-colength ideals in the plane.

A Hilbert function is stored through its difference sequence
``diff[n] = phi(n) - phi(n-1)``.  A sequence is admissible iff
``diff[n] <= n + 1`` everywhere and ``diff`` increases strictly from the
minimal degree alpha onwards until it reaches the diagonal value ``n + 1``,
where it stays.  The colength is the total deficiency
``sum(n + 1 - diff[n])``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import DomainError, InternalInconsistencyError

Verdict = str  # "less" | "equal" | "greater" | "incomparable"


def _canonical_diff(raw) -> tuple[int, ...]:
    """Validate a raw difference sequence and trim/extend it to the first
    diagonal index (diff[e] == e + 1), with the diagonal tail implied."""
    seq = [int(v) for v in raw]
    if any(v < 0 for v in seq):
        raise DomainError(f"negative entry in difference sequence {seq}")
    if not _diff_is_valid(seq):
        raise DomainError(f"not a valid difference sequence: {seq}")
    # extend until the diagonal is reached
    n = 0
    out = []
    prev = 0
    while True:
        v = seq[n] if n < len(seq) else n + 1
        out.append(v)
        if v == n + 1:
            break
        prev = v
        n += 1
    return tuple(out)


def _diff_is_valid(seq) -> bool:
    started = False
    prev = 0
    on_diagonal = False
    for n, v in enumerate(seq):
        if v < 0 or v > n + 1:
            return False
        if on_diagonal and v != n + 1:
            return False
        if started and not on_diagonal and v < prev + 1:
            return False
        if v > 0:
            started = True
        if v == n + 1:
            on_diagonal = True
        prev = v
    return True


def is_valid(raw) -> bool:
    """Whether an integer sequence is an admissible difference sequence."""
    try:
        seq = [int(v) for v in raw]
    except (TypeError, ValueError):
        return False
    return _diff_is_valid(seq)


@dataclass(frozen=True)
class HilbertFunction:
    """A Hilbert function, canonically stored up to its regularity index."""

    diff: tuple[int, ...]

    @staticmethod
    def from_diff(raw) -> "HilbertFunction":
        return HilbertFunction(_canonical_diff(raw))

    @staticmethod
    def parse(text: str) -> "HilbertFunction":
        """Parse the comma-separated textual form, e.g. ``"0,0,3"``."""
        try:
            raw = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise DomainError(f"cannot parse difference sequence {text!r}") from exc
        return HilbertFunction.from_diff(raw)

    def __post_init__(self):
        if self.diff != _canonical_diff(self.diff):
            raise DomainError(f"non-canonical difference sequence {self.diff}")

    def diff_at(self, n: int) -> int:
        if n < 0:
            return 0
        return self.diff[n] if n < len(self.diff) else n + 1

    def value(self, n: int) -> int:
        """phi(n), the cumulative value."""
        if n < 0:
            return 0
        if n < len(self.diff):
            return sum(self.diff[: n + 1])
        return comb(n + 2, 2) - self.colength

    @property
    def colength(self) -> int:
        return sum(n + 1 - v for n, v in enumerate(self.diff))

    @property
    def alpha(self) -> int:
        """Minimal degree with a nonzero value."""
        for n, v in enumerate(self.diff):
            if v > 0:
                return n
        raise AssertionError("canonical diff always reaches the diagonal")

    @property
    def regularity(self) -> int:
        """Smallest n with diff[n] = n + 1 (0 for the full ideal)."""
        return len(self.diff) - 1

    def g_star(self) -> int:
        """The genus functional.

        Evaluated through two independent formulas (a cumulative sum up to
        the colength, and a closed form in terms of the partial sum below
        the regularity); they must agree exactly.
        """
        d = self.colength
        e = self.regularity
        by_sum = sum(self.value(n) for n in range(d + 1)) - comb(d + 3, 3) + d * d + 1
        s = sum(self.value(i) for i in range(e - 1))
        by_closed = s - comb(e + 1, 3) + d * (e - 2) + 1
        if by_sum != by_closed:
            raise InternalInconsistencyError(
                f"genus functional mismatch on {self.diff}: {by_sum} != {by_closed}"
            )
        return by_sum

    def as_text(self) -> str:
        return ",".join(str(v) for v in self.diff)

    def __str__(self) -> str:
        return self.as_text()


def compare(phi: HilbertFunction, psi: HilbertFunction) -> Verdict:
    """Pointwise partial-order verdict between equal-colength functions."""
    if phi.colength != psi.colength:
        raise DomainError("comparing Hilbert functions of different colengths")
    hi = max(phi.regularity, psi.regularity)
    le = all(phi.value(n) <= psi.value(n) for n in range(hi + 1))
    ge = all(phi.value(n) >= psi.value(n) for n in range(hi + 1))
    if le and ge:
        return "equal"
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def enumerate_hilbert_functions(d: int) -> list[HilbertFunction]:
    """All Hilbert functions of colength d, in lexicographic diff order."""
    if d < 0:
        raise DomainError("colength must be nonnegative")
    out: list[HilbertFunction] = []

    def extend(prefix: list[int], deficit: int):
        n = len(prefix)
        started = any(v > 0 for v in prefix)
        prev = prefix[-1] if prefix else 0
        lo = prev + 1 if started else 0
        for v in range(lo, n + 2):
            rest = deficit - (n + 1 - v)
            if rest < 0:
                continue
            if v == n + 1:
                if rest == 0:
                    out.append(HilbertFunction(tuple(prefix + [v])))
                continue
            extend(prefix + [v], rest)

    extend([], d)
    return out


def deformation_bound(d: int) -> int:
    """The threshold value separating the two genus regimes, defined for d >= 5."""
    if d < 5:
        raise DomainError(f"deformation bound is defined only for colength >= 5, got {d}")
    if d % 2 == 0:
        assert (d - 2) ** 2 % 4 == 0
        return (d - 2) ** 2 // 4
    assert (d - 1) * (d - 3) % 4 == 0
    return (d - 1) * (d - 3) // 4


def special_chi(d: int) -> HilbertFunction:
    """The Hilbert function of the extremal three-generator ideal of colength d.

    For even d this is the function of (x^2, x*y^(e-2), y^e) with e = d/2 + 1;
    for odd d the function of (x^2, x*y^(e-1), y^e) with e = (d+1)/2.  Its
    genus functional equals the deformation bound.
    """
    if d < 5:
        raise DomainError(f"special Hilbert function needs colength >= 5, got {d}")
    if d % 2 == 0:
        e = d // 2 + 1
        diff = [0, 0] + list(range(1, e - 2)) + [e - 1, e + 1]
    else:
        e = (d + 1) // 2
        diff = [0, 0] + list(range(1, e - 1)) + [e + 1]
    return HilbertFunction.from_diff(diff)


@dataclass(frozen=True)
class MacaulayCoefficients:
    """Coefficient pair (a, b) of a complementary Hilbert polynomial in 3-space."""

    a: int
    b: int

    def __post_init__(self):
        if not 4 <= self.a <= self.b:
            raise DomainError(f"need 4 <= a <= b, got a={self.a}, b={self.b}")


def macaulay_to_dg(mc: MacaulayCoefficients) -> tuple[int, int]:
    """(degree, genus) of the curves parametrized by the pair (a, b)."""
    a, b = mc.a, mc.b
    num = a * a - 3 * a + 4
    assert num % 2 == 0
    return a - 1, num // 2 - b


def dg_to_macaulay(d: int, g: int) -> MacaulayCoefficients:
    """Inverse of :func:`macaulay_to_dg`."""
    a = d + 1
    num = a * a - 3 * a + 4
    assert num % 2 == 0
    b = num // 2 - g
    return MacaulayCoefficients(a, b)


def hilbert_polynomial_value(d: int, g: int, n: int) -> int:
    """P(n) = d*n - g + 1, the curve Hilbert polynomial the pair encodes."""
    return d * n - g + 1


def lex_most(d: int) -> HilbertFunction:
    """The lexicographically largest function of colength d (regularity d)."""
    if d == 0:
        return HilbertFunction((1,))
    return HilbertFunction.from_diff([0] + list(range(1, d)) + [d + 1])


def pairwise_comparable(functions) -> list[tuple[HilbertFunction, HilbertFunction]]:
    """All strictly comparable ordered pairs (phi, psi) with phi < psi."""
    pairs = []
    for phi, psi in itertools.permutations(functions, 2):
        if compare(phi, psi) == "less":
            pairs.append((phi, psi))
    return pairs
