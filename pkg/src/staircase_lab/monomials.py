"""Monomials of k[x, y, z] with the inverse-lexicographic order (x < y < z)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True, order=False)
class Monomial:
    """A monomial x^ex * y^ey * z^ez with nonnegative exponents."""

    ex: int
    ey: int
    ez: int

    def __post_init__(self):
        if self.ex < 0 or self.ey < 0 or self.ez < 0:
            raise DomainError(f"negative exponent in monomial {(self.ex, self.ey, self.ez)}")

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    @property
    def xy_degree(self) -> int:
        """Total degree in x and y, i.e. degree minus the z-exponent."""
        return self.ex + self.ey

    def sort_key(self):
        """Inverse-lexicographic key: low z first, then low y.

        Within one total degree, the minimum is the monomial surviving the
        z -> 0 limit (the "initial" monomial of a semi-invariant chain) and
        the maximum survives z -> infinity.
        """
        return (self.ez, self.ey, self.ex)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def shift(self, dx: int, dy: int, dz: int) -> "Monomial":
        """Multiply by x^dx y^dy z^dz; raises on a negative resulting exponent."""
        return Monomial(self.ex + dx, self.ey + dy, self.ez + dz)

    def __str__(self) -> str:
        parts = []
        for sym, e in (("x", self.ex), ("y", self.ey), ("z", self.ez)):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        return "*".join(parts) if parts else "1"

    def as_list(self) -> list[int]:
        return [self.ex, self.ey, self.ez]


def monomial_from_list(exps) -> Monomial:
    if len(exps) != 3:
        raise DomainError(f"monomial needs 3 exponents, got {exps!r}")
    return Monomial(int(exps[0]), int(exps[1]), int(exps[2]))
