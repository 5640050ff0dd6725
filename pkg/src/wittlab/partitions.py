"""Partitions as plain tuples of positive ints, plus finite windows of them.

A partition is stored weakly decreasing with no trailing zeros, so the zero
partition is ``()``.  Parts beyond the stored length read as 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InputError

Partition = tuple[int, ...]

ZERO: Partition = ()


def make(parts: Iterable[int]) -> Partition:
    """Validate and normalise a sequence into a partition (drops trailing zeros)."""
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise InputError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError(f"parts of {lam} are not weakly decreasing")
    return strip(lam)


def strip(lam: Iterable[int]) -> Partition:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def from_vector(vec: Iterable[int]) -> Partition:
    """Sort an arbitrary nonnegative vector into a partition."""
    return tuple(sorted((v for v in vec if v), reverse=True))


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part, 1-indexed, reading 0 past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu is contained in lam, i.e. mu_i <= lam_i for all i."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def part_sum(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum (lam_1 + mu_1, lam_2 + mu_2, ...)."""
    n = max(len(lam), len(mu))
    return tuple(part(lam, i) + part(mu, i) for i in range(1, n + 1))


def interleave(lam: Partition, mu: Partition) -> Partition:
    """Sorted multiset union of the parts."""
    return tuple(sorted(lam + mu, reverse=True))


def union(lam: Partition, mu: Partition) -> Partition:
    """Componentwise maximum; the smallest partition containing both."""
    n = max(len(lam), len(mu))
    return tuple(max(part(lam, i), part(mu, i)) for i in range(1, n + 1))


def rect(a: int, b: int) -> Partition:
    """The partition with the part a repeated b times."""
    if a < 0 or b < 0:
        raise InputError("rectangle sides must be nonnegative")
    if a == 0 or b == 0:
        return ()
    return (a,) * b


def is_rectangle(lam: Partition) -> bool:
    return bool(lam) and lam[0] == lam[-1]


def scale(r: int, lam: Partition) -> Partition:
    if r < 1:
        raise InputError("scale factor must be at least 1")
    return tuple(r * p for p in lam)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order lam >= mu (for partitions of the same size)."""
    a = b = 0
    for i in range(1, max(len(lam), len(mu)) + 1):
        a += part(lam, i)
        b += part(mu, i)
        if a < b:
            return False
    return True


def multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


@dataclass(frozen=True)
class Window:
    """Finite truncation of the set of partitions.

    ``None`` for ``max_part`` or ``max_length`` means no bound beyond the one
    implied by ``max_size``.
    """

    max_size: int
    max_part: Optional[int] = None
    max_length: Optional[int] = None

    def __post_init__(self):
        for name in ("max_size", "max_part", "max_length"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise InputError(f"{name} must be nonnegative")

    @classmethod
    def box(cls, max_part: int, max_length: int) -> "Window":
        """All partitions inside the max_length x max_part rectangle."""
        return cls(max_part * max_length, max_part, max_length)

    def __contains__(self, lam: Partition) -> bool:
        if sum(lam) > self.max_size:
            return False
        if self.max_part is not None and lam and lam[0] > self.max_part:
            return False
        if self.max_length is not None and len(lam) > self.max_length:
            return False
        return True

    def partitions(self) -> list[Partition]:
        return enumerate_window(self)

    def to_json(self) -> dict:
        out = {"max_size": self.max_size}
        if self.max_part is not None:
            out["max_part"] = self.max_part
        if self.max_length is not None:
            out["max_length"] = self.max_length
        return out


def partitions_of(n: int, max_part: Optional[int] = None,
                  max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, e.g. (2,) before (1, 1)."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_length)


def enumerate_window(window: Window) -> list[Partition]:
    """All partitions in the window: graded by size, reverse lexicographic within a size."""
    out: list[Partition] = []
    for n in range(window.max_size + 1):
        out.extend(partitions_of(n, window.max_part, window.max_length))
    return out


_PART_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse(text: str) -> Partition:
    """Parse the text form ``[3,2,1]``; ``[]`` is the zero partition."""
    if not _PART_RE.match(text):
        raise InputError(f"not a partition: {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return ()
    return make(int(tok) for tok in body.split(","))


def fmt(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
