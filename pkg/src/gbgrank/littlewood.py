"""Littlewood decomposition of a partition into its t-core and t-quotient.

The decomposition works on a beta-set whose size s is a multiple of t, so bead
beta lies on runner beta mod t and the end of row k carries residue label
(lambda_k - k) mod t = beta_k mod t.  Runner c therefore corresponds to label
c.  Quotient component c is the conjugate of the partition read off runner c:
with that convention the number of parts of component c equals chi_c - n_c
and the conjugation rule quotient(pi') = (conj q_{t-1}, ..., conj q_0) holds.

The rim-hook routines below operate on the Young diagram directly and serve as
an independent check on the abacus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .partitions import Partition, conjugate
from .residue import NVector


@dataclass(frozen=True)
class Decomposition:
    t: int
    core: Partition
    quotient: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.quotient) != self.t:
            raise ValueError(f"quotient must have exactly t={self.t} components")

    @property
    def quotient_sizes(self) -> tuple[int, ...]:
        return tuple(len(q) for q in self.quotient)

    @property
    def norm(self) -> int:
        return self.core.norm + self.t * sum(q.norm for q in self.quotient)


def _check_modulus(t):
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


def beta_set(pi: Sequence[int], s: int) -> list[int]:
    """Strictly decreasing beta numbers lambda_i + s - i, i = 1..s."""
    if s < len(pi):
        raise ValueError("beta-set size must be at least the number of parts")
    parts = list(pi) + [0] * (s - len(pi))
    return [parts[i] + s - (i + 1) for i in range(s)]


def from_beta_set(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    s = len(beta)
    return Partition(p for p in (b - s + i for i, b in enumerate(beta, start=1)) if p > 0)


def _runner_partition(positions: list[int]) -> Partition:
    """Partition encoded by bead positions on a single runner."""
    positions = sorted(positions, reverse=True)
    b = len(positions)
    return Partition(p for p in (pos - (b - m) for m, pos in enumerate(positions, start=1)) if p > 0)


def decompose(pi: Iterable[int], t: int) -> Decomposition:
    _check_modulus(t)
    pi = Partition(pi)
    s = t * (-(-(len(pi) + 1) // t))
    runners: list[list[int]] = [[] for _ in range(t)]
    for beta in beta_set(pi, s):
        runners[beta % t].append(beta // t)
    quotient = tuple(conjugate(_runner_partition(pos)) for pos in runners)
    core_beta = [c + t * p for c in range(t) for p in range(len(runners[c]))]
    return Decomposition(t, from_beta_set(core_beta), quotient)


def recompose(d: Decomposition) -> Partition:
    """Inverse of :func:`decompose`."""
    t = d.t
    _check_modulus(t)
    core = Partition(d.core)
    if not is_t_core(core, t):
        raise ValueError(f"{core} is not a {t}-core")
    runner_parts = [conjugate(q) for q in d.quotient]
    s = t * (-(-(len(core) + 1) // t))
    while True:
        counts = [0] * t
        for beta in beta_set(core, s):
            counts[beta % t] += 1
        if all(counts[c] >= len(runner_parts[c]) for c in range(t)):
            break
        s += t
    beta = []
    for c in range(t):
        b = counts[c]
        mu = list(runner_parts[c]) + [0] * (b - len(runner_parts[c]))
        beta.extend(t * (mu[m] + b - 1 - m) + c for m in range(b))
    return from_beta_set(beta)


def conjugate_decomposition(d: Decomposition) -> Decomposition:
    return Decomposition(d.t, conjugate(d.core), tuple(conjugate(q) for q in reversed(d.quotient)))


def core_norm_from_n(n: NVector | Sequence[int], t: Optional[int] = None) -> int:
    """|core| = (t/2) n.n + (0, 1, ..., t-1).n for an n-vector summing to zero."""
    if isinstance(n, NVector):
        t, n = n.t, n.n
    elif t is None:
        t = len(n)
    n = tuple(n)
    if len(n) != t:
        raise ValueError("n-vector must have length t")
    if sum(n) != 0:
        raise ValueError("n-vector components must sum to 0")
    twice = t * sum(x * x for x in n) + 2 * sum(i * x for i, x in enumerate(n))
    return twice // 2


# --- Young-diagram side -----------------------------------------------------

def hook_lengths(pi: Iterable[int]) -> list[list[int]]:
    pi = Partition(pi)
    conj = conjugate(pi)
    return [[pi[i] - j + conj[j] - i - 1 for j in range(pi[i])] for i in range(len(pi))]


def _hook_cells(pi, t):
    conj = conjugate(pi)
    for i, length in enumerate(pi):
        for j in range(length):
            if length - j + conj[j] - i - 1 == t:
                yield i, j


def remove_rim_hook(pi: Sequence[int], i: int, j: int) -> Partition:
    """Remove the rim hook running from the end of row i to the foot of column j (0-indexed)."""
    conj = conjugate(pi)
    bottom = conj[j] - 1
    rows = list(pi)
    for r in range(i, bottom):
        rows[r] = pi[r + 1] - 1
    rows[bottom] = j
    return Partition(p for p in rows if p > 0)


def rim_hooks(pi: Iterable[int], t: int) -> list[tuple[int, int]]:
    """Cells (0-indexed) whose hook has length t, i.e. removable t-rim hooks."""
    return list(_hook_cells(Partition(pi), t))


def t_core_by_rim_hooks(pi: Iterable[int], t: int, rng: Optional[random.Random] = None) -> Partition:
    """Strip t-rim hooks until none remain.

    By default the hook whose head lies in the topmost row is removed first;
    pass ``rng`` to pick a random removable hook at each step instead.
    """
    _check_modulus(t)
    pi = Partition(pi)
    while True:
        cells = rim_hooks(pi, t)
        if not cells:
            return pi
        i, j = rng.choice(cells) if rng is not None else cells[0]
        pi = remove_rim_hook(pi, i, j)


def is_t_core(pi: Iterable[int], t: int) -> bool:
    _check_modulus(t)
    return not rim_hooks(pi, t)
