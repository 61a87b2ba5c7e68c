"""t-residue diagrams, residue-count vectors and the GBG-rank.

Cell (i, j) of a Young diagram (1-indexed row i, column j) carries the label
(j - i) mod t.  The GBG-rank is sum_j r_j w^j for w a primitive t-th root
of unity; for prime t the only integer relation among 1, w, ..., w^(t-1) is
that they sum to zero, so the rank is stored in the basis 1, w, ..., w^(t-2)
with coordinates r_j - r_(t-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .partitions import Partition


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(t: int) -> None:
    if not is_prime(t):
        raise ValueError(f"t must be prime, got {t}")


def _check_modulus(t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


@dataclass(frozen=True)
class ResidueCounts:
    t: int
    r: tuple[int, ...]

    def __post_init__(self):
        if len(self.r) != self.t:
            raise ValueError("residue vector must have length t")


@dataclass(frozen=True)
class NVector:
    t: int
    n: tuple[int, ...]


@dataclass(frozen=True)
class CyclotomicRank:
    """GBG-rank in the integral basis 1, w, ..., w^(t-2)."""

    t: int
    canon: tuple[int, ...]

    def __str__(self):
        terms = []
        for j, c in enumerate(self.canon):
            if c == 0:
                continue
            base = "" if j == 0 else ("w" if j == 1 else f"w^{j}")
            if not base:
                terms.append(str(c))
            elif c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{c}{base}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def residue_counts(pi: Iterable[int], t: int) -> ResidueCounts:
    _check_modulus(t)
    r = [0] * t
    for i, length in enumerate(pi, start=1):
        for c in range(t):
            # smallest column j >= 1 with (j - i) % t == c
            a = (c + i) % t or t
            if length >= a:
                r[c] += (length - a) // t + 1
    return ResidueCounts(t, tuple(r))


def n_vector(rc: ResidueCounts) -> NVector:
    r, t = rc.r, rc.t
    return NVector(t, tuple(r[i] - r[(i + 1) % t] for i in range(t)))


def rank_from_counts(rc: ResidueCounts) -> CyclotomicRank:
    check_prime(rc.t)
    last = rc.r[-1]
    return CyclotomicRank(rc.t, tuple(x - last for x in rc.r[:-1]))


def gbg_rank(pi: Iterable[int], t: int) -> CyclotomicRank:
    check_prime(t)
    return rank_from_counts(residue_counts(pi, t))


def bg_rank(pi: Iterable[int]) -> int:
    r = residue_counts(pi, 2).r
    return r[0] - r[1]


def as_integer(rank: CyclotomicRank) -> Optional[int]:
    """Return k if the rank equals the integer k, else None."""
    if any(rank.canon[1:]):
        return None
    return rank.canon[0]


def as_k_omega_j(rank: CyclotomicRank) -> Optional[tuple[int, int]]:
    """Return (k, j) if the rank equals k*w^j, else None.

    Zero is reported as (0, 0).  k*w^(t-1) = -k(1 + w + ... + w^(t-2)) shows up
    as a constant canon vector.
    """
    canon = rank.canon
    nonzero = [j for j, c in enumerate(canon) if c]
    if not nonzero:
        return (0, 0)
    if len(nonzero) == 1:
        j = nonzero[0]
        return (canon[j], j)
    if len(set(canon)) == 1:
        return (-canon[0], rank.t - 1)
    return None


def rank_of_k_omega_j(t: int, k: int, j: int = 0) -> CyclotomicRank:
    """Canonical rank for k*w^j."""
    check_prime(t)
    if not 0 <= j <= t - 1:
        raise ValueError(f"j must lie in 0..{t - 1}")
    if j == t - 1:
        return CyclotomicRank(t, (-k,) * (t - 1))
    canon = [0] * (t - 1)
    canon[j] = k
    return CyclotomicRank(t, tuple(canon))


def exposed_cells(pi: Iterable[int], t: int, rows: int) -> list[tuple[int, int]]:
    """(label, region) of the exposed cell at the end of rows 1..rows.

    Rows beyond the last part end in column 0 of the extended diagram.
    """
    _check_modulus(t)
    parts = tuple(pi)
    out = []
    for k in range(1, rows + 1):
        length = parts[k - 1] if k <= len(parts) else 0
        d = length - k
        out.append((d % t, d // t + 1))
    return out


def chi(pi: Iterable[int], t: int, i: int) -> int:
    """Largest region of the extended diagram in which label i is exposed."""
    _check_modulus(t)
    if not 0 <= i < t:
        raise ValueError(f"label must lie in 0..{t - 1}")
    pi = Partition(pi)
    # rows #(pi)+1 .. #(pi)+t expose every label, and lower rows only go further down
    cells = exposed_cells(pi, t, len(pi) + t)
    return max(region for label, region in cells if label == i)


def word_segment(pi: Iterable[int], t: int, i: int, r_min: int, r_max: int) -> list[str]:
    """Letters of the word W_i over regions r_min..r_max ('E' exposed, 'N' not)."""
    if r_min > r_max:
        raise ValueError("r_min must not exceed r_max")
    pi = Partition(pi)
    # row k ends in region <= (length-k)//t + 1; empty rows reach region r_min once k >= t*(1-r_min)
    rows = max(len(pi), t * (1 - r_min)) + t
    hit = {region for label, region in exposed_cells(pi, t, rows) if label == i}
    return ["E" if r in hit else "N" for r in range(r_min, r_max + 1)]
