"""Closed-form generating functions for partitions with bounded largest part
and fixed GBG-rank modulo a prime t.

Every function takes the largest-part bound in the split form t*N + nu with
0 <= nu <= t-1 and returns a Series truncated at the requested order.  Empty
feasibility (a negative box size or Pochhammer length) yields the zero series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .qseries import Series, gaussian_binomial, inv_pochhammer, monomial, mul, pochhammer, product
from .residue import is_prime


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class FormulaParams:
    t: int
    N: int
    nu: int
    k: int
    order: int
    j: Optional[int] = None

    def __post_init__(self):
        if not is_prime(self.t):
            raise ValueError(f"t must be prime, got {self.t}")
        if self.N < 0:
            raise ValueError("N must be non-negative")
        if not 0 <= self.nu <= self.t - 1:
            raise ValueError(f"nu must lie in 0..{self.t - 1}")
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.j is not None and not 1 <= self.j <= self.t - 1:
            raise ValueError(f"j must lie in 1..{self.t - 1}")

    @property
    def bound(self) -> int:
        return self.t * self.N + self.nu


def _prefactor(exponent: int, order: int) -> Optional[Series]:
    # core norms are never negative; anything beyond the order truncates to zero
    if exponent > order:
        return None
    return monomial(exponent, order)


def quotient_bounds(p: FormulaParams) -> list[int]:
    """Upper bounds on the number of parts of each quotient component (integral rank k)."""
    t, N, nu, k = p.t, p.N, p.nu, p.k
    return [N + ceil_div(nu - i, t) - k * (i == 0) + k * (i == t - 1) for i in range(t)]


def g_formula(p: FormulaParams) -> Series:
    """Partitions with parts <= tN+nu and GBG-rank equal to the integer k."""
    if p.j is not None:
        raise ValueError("g_formula takes no j; use g_omega_formula")
    t, k, M = p.t, p.k, p.order
    pre = _prefactor(t * k * k - (t - 1) * k, M)
    if pre is None:
        return Series.zero(M)
    return product([pre] + [inv_pochhammer(t, t, L, M) for L in quotient_bounds(p)], M)


def gsc2_formula(p: FormulaParams) -> Series:
    """Self-conjugate partitions with parts <= 2N+nu and BG-rank k."""
    if p.t != 2:
        raise ValueError("gsc2_formula requires t = 2")
    N, nu, k, M = p.N, p.nu, p.k, p.order
    pre = _prefactor(2 * k * k - k, M)
    if pre is None:
        return Series.zero(M)
    return mul(pre, gaussian_binomial(2 * N + nu, N + k, 4, M))


def gsc_odd_formula(p: FormulaParams) -> Series:
    """Self-conjugate partitions with parts <= tN+nu and GBG-rank k, t an odd prime."""
    t, N, nu, k, M = p.t, p.N, p.nu, p.k, p.order
    if t == 2:
        raise ValueError("gsc_odd_formula requires an odd prime; use gsc2_formula for t = 2")
    pre = _prefactor(t * k * k - (t - 1) * k, M)
    if pre is None:
        return Series.zero(M)
    middle = N + ceil_div(2 * nu - (t - 1), 2 * t)
    if middle < 0:
        return Series.zero(M)
    factors = [
        pre,
        pochhammer(t, 2 * t, middle, -1, M),
        gaussian_binomial(2 * N + ceil_div(nu, t), N + k, 2 * t, M),
    ]
    for i in range(1, (t - 3) // 2 + 1):
        lower = N + (nu + i) // t
        factors.append(gaussian_binomial(2 * N + ceil_div(nu - i, t) + (nu + i) // t, lower, 2 * t, M))
    return product(factors, M)


def gtilde_formula(p: FormulaParams) -> Series:
    """Partitions with parts <= tN+nu, each repeated at most t-1 times, GBG-rank k."""
    M = p.order
    return mul(pochhammer(p.t, p.t, p.bound, 1, M), g_formula(p))


def g_omega_formula(p: FormulaParams) -> Series:
    """Partitions with parts <= tN+nu and GBG-rank k*w^j, t odd, 1 <= j <= t-1."""
    t, N, nu, k, j, M = p.t, p.N, p.nu, p.k, p.j, p.order
    if t == 2:
        raise ValueError("g_omega_formula requires an odd prime t")
    if j is None:
        raise ValueError("g_omega_formula requires j")
    pre = _prefactor(t * k * k + k, M)
    if pre is None:
        return Series.zero(M)
    lengths = [N + k * (i == j - 1) - k * (i == j) + ceil_div(nu - i, t) for i in range(t)]
    return product([pre] + [inv_pochhammer(t, t, L, M) for L in lengths], M)


def bg_two_factor_formula(N: int, nu: int, k: int, order: int) -> Series:
    """BG-rank k partitions with parts <= 2N+nu, in the two-factor form."""
    if nu not in (0, 1):
        raise ValueError("nu must be 0 or 1")
    if N < 0:
        raise ValueError("N must be non-negative")
    pre = _prefactor(2 * k * k - k, order)
    if pre is None:
        return Series.zero(order)
    return product([pre, inv_pochhammer(2, 2, N + k, order), inv_pochhammer(2, 2, N + nu - k, order)], order)


def _bg_two_factor(p: FormulaParams) -> Series:
    if p.t != 2:
        raise ValueError("the two-factor BG-rank formula requires t = 2")
    return bg_two_factor_formula(p.N, p.nu, p.k, p.order)


FORMULAS = {
    "g": g_formula,
    "gsc2": gsc2_formula,
    "gsc_odd": gsc_odd_formula,
    "gtilde": gtilde_formula,
    "g_omega": g_omega_formula,
    "bg2": _bg_two_factor,
}

# numeric labels accepted by the command line
ALIASES = {"2.1": "g", "2.2": "gsc2", "2.3": "gsc_odd", "2.4": "gtilde", "4.1": "g_omega", "1.4": "bg2"}


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in FORMULAS:
        choices = ", ".join(list(FORMULAS) + list(ALIASES))
        raise ValueError(f"unknown formula {name!r}; expected one of {choices}")
    return name


def formula(name: str, p: FormulaParams) -> Series:
    return FORMULAS[resolve(name)](p)
