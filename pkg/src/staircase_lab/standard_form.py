"""Standard-form decompositions of Hilbert functions and staircases.

A Hilbert function whose genus functional exceeds the deformation bound
splits off a kernel function and a regularity m (the difference sequence is
the kernel's shifted by one degree below m, diagonal from m on).  Iterating
the split yields the type chain (m_0 > m_1 > ... > m_r plus the residual
kernel); on the ideal side the same split identifies an x- or y-standard
form, and the chain data generate the marker monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, InternalInconsistencyError, MarkerUndefinedError
from .hilbert import HilbertFunction, deformation_bound
from .monomials import Monomial
from .staircase import GradedMonomialIdeal


def decompose(phi: HilbertFunction) -> Optional[tuple[HilbertFunction, int]]:
    """Split phi into (kernel psi, m) when its genus functional exceeds the
    deformation bound; otherwise (colength <= 4 or below the bound) None."""
    d = phi.colength
    if d <= 4:
        return None
    if phi.g_star() <= deformation_bound(d):
        return None
    m = phi.regularity
    kernel_diff = [phi.diff_at(n + 1) for n in range(m - 1)]
    try:
        psi = HilbertFunction.from_diff(kernel_diff)
    except DomainError as exc:
        raise InternalInconsistencyError(
            f"shifted kernel of {phi.diff} is not a Hilbert function"
        ) from exc
    c = psi.colength
    if c + m != d or m < psi.regularity + 2:
        raise InternalInconsistencyError(
            f"decomposition shape violated on {phi.diff}: kernel {psi.diff}, m={m}"
        )
    if m < c + 2:
        raise InternalInconsistencyError(f"m={m} < c+2={c + 2} on {phi.diff}")
    return psi, m


def compose(psi: HilbertFunction, m: int) -> HilbertFunction:
    """Glue a kernel function below degree m to a diagonal tail from m on.

    Requires m >= regularity(psi) + 2.  The genus functional of the result
    equals g(psi) + m(m-3)/2 + colength(psi), which is checked exactly.
    """
    if m < psi.regularity + 2:
        raise DomainError(f"need m >= regularity + 2 = {psi.regularity + 2}, got {m}")
    diff = [0] + [psi.diff_at(n - 1) for n in range(1, m)] + [m + 1]
    phi = HilbertFunction.from_diff(diff)
    c = psi.colength
    if phi.colength != c + m or phi.regularity != m:
        raise InternalInconsistencyError(f"glued function has wrong shape: {phi.diff}")
    lhs = phi.g_star()
    rhs = psi.g_star() + m * (m - 3) // 2 + c  # m(m-3) is even: opposite parities
    if lhs != rhs:
        raise InternalInconsistencyError(
            f"genus identity failed: g({phi.diff})={lhs} but kernel side gives {rhs}"
        )
    return phi


@dataclass(frozen=True)
class TypeChain:
    """Chain data of the iterated decomposition.

    ``ms`` lists m_0 > m_1 > ... > m_r (empty for type -1); ``kernel_c`` and
    ``kernel_kappa`` are the colength and regularity of the residual kernel.
    ``ells`` (one of 'x'/'y' per level) exists only for ideal-level chains;
    Hilbert functions do not determine it.
    """

    ms: tuple[int, ...]
    kernel_c: int
    kernel_kappa: int
    ells: Optional[tuple[str, ...]] = None

    @property
    def r(self) -> int:
        return len(self.ms) - 1

    def __post_init__(self):
        if self.ells is not None:
            if len(self.ells) != len(self.ms):
                raise DomainError("need one linear-form label per chain level")
            if any(ell not in ("x", "y") for ell in self.ells):
                raise DomainError(f"labels must be 'x' or 'y', got {self.ells}")

    def colengths(self) -> tuple[int, ...]:
        """d_i = kernel_c + m_r + ... + m_i for i = 0..r, plus the kernel at the end."""
        out = [self.kernel_c]
        for m in reversed(self.ms):
            out.append(out[-1] + m)
        return tuple(reversed(out))

    def check_invariants(self) -> None:
        r = self.r
        if r < 0:
            return
        c = self.kernel_c
        if self.ms[-1] < c + 2:
            raise InternalInconsistencyError(f"m_r={self.ms[-1]} < c+2={c + 2}")
        if self.ms[0] < 2**r * (c + 2):
            raise InternalInconsistencyError(f"m_0={self.ms[0]} < 2^r(c+2)={2**r * (c + 2)}")
        if r >= 1:
            for i in range(r + 1):
                for j in range(i + 1, r + 1):
                    if not self.ms[j] + j < self.ms[i] + i - 1:
                        raise InternalInconsistencyError(
                            f"m_{j}+{j} >= m_{i}+{i}-1 in chain {self.ms}"
                        )

    def as_text(self) -> str:
        ms = ",".join(str(m) for m in self.ms)
        ells = ",".join(self.ells) if self.ells else "-"
        return f"r={self.r}; ells={ells}; ms={ms}; c={self.kernel_c}; kappa={self.kernel_kappa}"

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "ms": list(self.ms),
            "kernel_c": self.kernel_c,
            "kernel_kappa": self.kernel_kappa,
            "ells": list(self.ells) if self.ells else None,
        }


def type_of(phi: HilbertFunction) -> TypeChain:
    """Iterate the decomposition down to a residual kernel of type -1."""
    ms = []
    cur = phi
    while True:
        split = decompose(cur)
        if split is None:
            chain = TypeChain(tuple(ms), cur.colength, cur.regularity)
            chain.check_invariants()
            return chain
        cur, m = split[0], split[1]
        ms.append(m)


def iota_table(ells) -> tuple[int, ...]:
    """iota(i) = number of indices j < i with ells[j] = 'y', for i = 0..r+1."""
    if any(ell not in ("x", "y") for ell in ells):
        raise DomainError(f"labels must be 'x' or 'y', got {ells}")
    out = [0]
    for ell in ells:
        out.append(out[-1] + (1 if ell == "y" else 0))
    return tuple(out)


@dataclass(frozen=True)
class MarkerSet:
    """The six distinguished monomials attached to one chain level."""

    m_up: Monomial
    m_down: Monomial
    n_up: Monomial
    n_down: Monomial
    e_up: Monomial
    e_down: Monomial


def marker_monomials(chain: TypeChain) -> list[MarkerSet]:
    """Marker monomials per chain level, all of total degree m_0.

    Level i with labels iota(i): the initial markers are
    M_up = x^(i-iota) y^(m_i+iota) z^(m_0-m_i-i) and
    M_down = x^(m_i+i-iota) y^iota z^(m_0-m_i-i); N and E divide one and two
    more powers of y (resp. x) into z.  Negative exponents are rejected.
    """
    if chain.r < 0:
        raise DomainError("marker monomials need a chain of type >= 0")
    if chain.ells is None:
        raise DomainError("marker monomials need the linear-form labels")
    iota = iota_table(chain.ells)
    m0 = chain.ms[0]
    out = []
    for i, mi in enumerate(chain.ms):
        zdeg = m0 - mi - i
        try:
            m_up = Monomial(i - iota[i], mi + iota[i], zdeg)
            m_down = Monomial(mi + i - iota[i], iota[i], zdeg)
            n_up = m_up.shift(0, -1, 1)
            n_down = m_down.shift(-1, 0, 1)
            e_up = m_up.shift(0, -2, 2)
            e_down = m_down.shift(-2, 0, 2)
        except DomainError as exc:
            raise MarkerUndefinedError(f"marker with negative exponent at level {i}") from exc
        for mon in (m_up, m_down, n_up, n_down, e_up, e_down):
            if mon.degree != m0:
                raise InternalInconsistencyError(f"marker {mon} has degree != {m0}")
        out.append(MarkerSet(m_up, m_down, n_up, n_down, e_up, e_down))
    return out


@dataclass(frozen=True)
class StandardForm:
    """Ideal-level split I = ell * K(-1) + (monomial) * O(-m)."""

    ell: str  # 'x' or 'y'
    kernel: GradedMonomialIdeal
    m: int


def detect_standard_form(ideal: GradedMonomialIdeal) -> Optional[StandardForm]:
    """Detect the x- or y-standard form of a staircase, when defined.

    Returns None when the genus functional does not exceed the deformation
    bound (including colength <= 4), where the form is not defined.  The two
    outcomes are mutually exclusive.
    """
    phi = ideal.hilbert_function()
    d = phi.colength
    if d <= 4 or phi.g_star() <= deformation_bound(d):
        return None
    m = phi.regularity
    x_divides = all(n not in ideal.column(n) for n in range(m))
    y_divides = all(0 not in ideal.column(n) for n in range(m))
    if x_divides and y_divides:
        raise InternalInconsistencyError(f"both forms detected on {ideal}")
    if not x_divides and not y_divides:
        return None
    if y_divides:
        kernel_cols = [
            [a for a in range(n + 1) if a + 1 in ideal.column(n + 1)]
            for n in range(ideal.stable_from + 1)
        ]
    else:
        kernel_cols = [
            [a for a in range(n + 1) if a in ideal.column(n + 1)]
            for n in range(ideal.stable_from + 1)
        ]
    kernel = GradedMonomialIdeal.from_columns(kernel_cols, ideal.stable_from + 1)
    if kernel.colength + m != d:
        raise InternalInconsistencyError(
            f"kernel colength {kernel.colength} + m {m} != {d} on {ideal}"
        )
    return StandardForm("y" if y_divides else "x", kernel, m)
