"""Integer partitions: representation, conjugation and bounded enumeration."""

from __future__ import annotations

from typing import Iterable, Iterator


class Partition(tuple):
    """A non-increasing tuple of positive parts.

    The empty partition ``Partition()`` is a normal value with norm 0.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def norm(self) -> int:
        return sum(self)

    @property
    def num_parts(self) -> int:
        return len(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def frequencies(self) -> FrequencyForm:
        return FrequencyForm.from_partition(self)

    def __repr__(self):
        return format_partition(self)

    __str__ = __repr__


class FrequencyForm:
    """Multiplicity form (1^f_1, 2^f_2, ..., N^f_N) of a partition."""

    __slots__ = ("freq",)

    def __init__(self, freq: Iterable[int]):
        freq = tuple(int(f) for f in freq)
        if any(f < 0 for f in freq):
            raise ValueError("frequencies must be non-negative")
        # drop trailing zeros so that equal partitions compare equal
        n = len(freq)
        while n and freq[n - 1] == 0:
            n -= 1
        self.freq = freq[:n]

    @property
    def max_part(self) -> int:
        return len(self.freq)

    def __getitem__(self, part: int) -> int:
        if 1 <= part <= len(self.freq):
            return self.freq[part - 1]
        return 0

    @classmethod
    def from_partition(cls, pi: Iterable[int]) -> FrequencyForm:
        pi = Partition(pi)
        freq = [0] * pi.largest
        for p in pi:
            freq[p - 1] += 1
        return cls(freq)

    def to_partition(self) -> Partition:
        parts = []
        for part in range(len(self.freq), 0, -1):
            parts.extend([part] * self.freq[part - 1])
        return Partition(parts)

    def __eq__(self, other):
        return isinstance(other, FrequencyForm) and self.freq == other.freq

    def __hash__(self):
        return hash(self.freq)

    def __repr__(self):
        terms = ",".join(f"{i + 1}^{f}" for i, f in enumerate(self.freq) if f)
        return f"({terms})"


def parse_partition(text: str) -> Partition:
    """Parse ``"[10,7,4,3]"`` (brackets optional) into a Partition."""
    body = text.strip().removeprefix("[").removesuffix("]")
    fields = [f.strip() for f in body.split(",") if f.strip()]
    try:
        return Partition(int(f) for f in fields)
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(pi: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in pi) + "]"


def conjugate(pi: Iterable[int]) -> Partition:
    pi = tuple(pi)
    if not pi:
        return Partition()
    return Partition(sum(1 for p in pi if p >= j) for j in range(1, pi[0] + 1))


def is_self_conjugate(pi: Iterable[int]) -> bool:
    pi = Partition(pi)
    return conjugate(pi) == pi


def enumerate_bounded(max_part: int, max_norm: int) -> Iterator[Partition]:
    """Yield every partition with largest part <= max_part and norm <= max_norm.

    Order is lexicographically descending within each branch; callers should
    not rely on it.
    """
    yield from _bounded(max_part, max_norm, None)


def _bounded(max_part, budget, max_mult):
    # max_mult caps the multiplicity of every part (None = unbounded)
    def rec(prefix, cap, left):
        yield Partition(prefix)
        for part in range(min(cap, left), 0, -1):
            limit = left // part
            if max_mult is not None:
                limit = min(limit, max_mult)
            for mult in range(1, limit + 1):
                prefix.extend([part] * mult)
                yield from rec(prefix, part - 1, left - part * mult)
                del prefix[-mult:]

    yield from rec([], max_part, budget)


def enumerate_frequency_bounded(max_part: int, t: int, max_norm: int) -> Iterator[Partition]:
    """Partitions with parts <= max_part, norm <= max_norm, each part repeated at most t-1 times."""
    if t < 2:
        raise ValueError("t must be at least 2")
    yield from _bounded(max_part, max_norm, t - 1)


def fold_hooks(hooks: Iterable[int]) -> Partition:
    """Self-conjugate partition whose principal hooks are the given distinct odd numbers."""
    hooks = sorted(hooks, reverse=True)
    arms = [(h - 1) // 2 for h in hooks]
    if any(h % 2 == 0 or h < 1 for h in hooks) or any(a <= b for a, b in zip(arms, arms[1:])):
        raise ValueError(f"hooks must be distinct positive odd numbers: {hooks}")
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = arms[0] + 1 if arms else 0
    for r in range(d + 1, depth + 1):
        rows.append(sum(1 for m in range(d) if arms[m] + m + 1 >= r))
    return Partition(rows)


def enumerate_self_conjugate(max_part: int, max_norm: int) -> Iterator[Partition]:
    """Self-conjugate partitions with largest part <= max_part and norm <= max_norm.

    Generated as distinct odd principal hooks; a hook of size 2a+1 at the
    corner gives largest part a+1, so hooks are capped at 2*max_part-1.
    """
    top = 2 * max_part - 1

    def rec(hooks, cap, left):
        yield fold_hooks(hooks)
        h = min(cap, left)
        if h % 2 == 0:
            h -= 1
        while h >= 1:
            hooks.append(h)
            yield from rec(hooks, h - 2, left - h)
            hooks.pop()
            h -= 2

    yield from rec([], top, max_norm)


def factor_rows(pi: Iterable[int], t: int) -> tuple[Partition, Partition]:
    """Split pi into (pi1, pi2): pi1 takes t*q_i copies of each part, pi2 the remainders f_i < t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    freq = FrequencyForm.from_partition(pi).freq
    full = FrequencyForm([t * (f // t) for f in freq]).to_partition()
    rest = FrequencyForm([f % t for f in freq]).to_partition()
    return full, rest


def merge_rows(pi1: Iterable[int], pi2: Iterable[int]) -> Partition:
    return Partition(sorted(tuple(pi1) + tuple(pi2), reverse=True))
