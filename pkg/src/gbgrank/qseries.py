"""Truncated power series in q with exact integer coefficients.

A Series of order M holds the coefficients of q^0 .. q^M.  Binary operations
narrow to the smaller order of the two operands.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

SAFE_INT = 2**53 - 1


class Series:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return monomial(0, order)

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e <= self.order else 0

    def truncate(self, order: int) -> Series:
        return Series(self.coeffs, min(order, self.order))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a nonzero coefficient, None for the zero series."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def __add__(self, other: Series) -> Series:
        m = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(m + 1)], m)

    def __sub__(self, other: Series) -> Series:
        m = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(m + 1)], m)

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series([other * c for c in self.coeffs], self.order)
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def agrees_with(self, other: Series, order: Optional[int] = None) -> bool:
        m = min(self.order, other.order) if order is None else order
        return all(self[i] == other[i] for i in range(m + 1))

    def first_difference(self, other: Series) -> Optional[int]:
        for i in range(min(self.order, other.order) + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c if abs(c) <= SAFE_INT else str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Series:
        return cls([int(c) for c in data["coeffs"]], int(data["order"]))

    def __repr__(self):
        return f"Series({self.coeffs}, order={self.order})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                mono = str(c)
            else:
                power = "q" if e == 1 else f"q^{e}"
                mono = power if c == 1 else ("-" + power if c == -1 else f"{c}*{power}")
            terms.append(mono)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def monomial(e: int, order: int) -> Series:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    s = Series.zero(order)
    if e <= order:
        s.coeffs[e] = 1
    return s


def mul(a: Series, b: Series) -> Series:
    m = min(a.order, b.order)
    out = [0] * (m + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs[: m + 1]):
        if x == 0:
            continue
        for j in range(m + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return Series(out, m)


def product(factors: Sequence[Series], order: int) -> Series:
    acc = Series.one(order)
    for f in factors:
        acc = mul(acc, f)
    return acc


def _mul_binomial(coeffs, e, sign):
    # in place: coeffs *= (1 - sign*q^e)
    for i in range(len(coeffs) - 1, e - 1, -1):
        coeffs[i] -= sign * coeffs[i - e]


def _div_binomial(coeffs, e):
    # in place: coeffs /= (1 - q^e)
    for i in range(e, len(coeffs)):
        coeffs[i] += coeffs[i - e]


def pochhammer(shift: int, step: int, length: int, sign: int, order: int) -> Series:
    """prod_{k=0}^{length-1} (1 - sign*q^(shift + step*k)), truncated at q^order.

    sign=-1 gives (-q^shift; q^step)_length.
    """
    if shift < 1 or step < 1:
        raise ValueError("shift and step must be positive")
    if length < 0:
        raise ValueError("length must be non-negative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = Series.one(order)
    for k in range(length):
        e = shift + step * k
        if e > order:
            break
        _mul_binomial(s.coeffs, e, sign)
    return s


def inv_pochhammer(shift: int, step: int, length: int, order: int) -> Series:
    """1 / prod_{k=0}^{length-1} (1 - q^(shift + step*k)), truncated at q^order.

    A negative length yields the zero series: the product it sits in counts
    partitions subject to an infeasible bound.
    """
    if shift < 1 or step < 1:
        raise ValueError("shift and step must be positive")
    if length < 0:
        return Series.zero(order)
    s = Series.one(order)
    for k in range(length):
        e = shift + step * k
        if e > order:
            break
        _div_binomial(s.coeffs, e)
    return s


def gaussian_binomial(m: int, n: int, base: int, order: int) -> Series:
    """[m choose n] evaluated at q^base, zero unless m >= n >= 0.

    Built with the recurrence [m;n] = [m-1;n] + q^(base*(m-n)) [m-1;n-1].
    """
    if base < 1:
        raise ValueError("base exponent must be positive")
    if not 0 <= n <= m:
        return Series.zero(order)
    n = min(n, m - n)
    # row[r] holds [mm; r] for the current mm
    row = [Series.one(order).coeffs] + [[0] * (order + 1) for _ in range(n)]
    for mm in range(1, m + 1):
        for r in range(min(n, mm), 0, -1):
            shift = base * (mm - r)
            prev = row[r - 1]
            cur = row[r]
            for e in range(order, shift - 1, -1):
                cur[e] += prev[e - shift]
    return Series(row[n], order)
