"""Partition ideals on a finite window, primality, and the prime classification search.

An ideal is stored by its minimal generators.  Membership of an arbitrary
partition (inside the window or not) is decided by the generators, so an
ideal here is really the ideal of P generated by finitely many window
partitions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional

from . import monomial as M
from . import partitions as P
from . import schur as S
from .errors import InputError, WindowError
from .symfunc import MONOMIAL, SCHUR, sort_key

Partition = P.Partition

# enumerate_ideals refuses windows with more partitions than this
MAX_ENUMERATION_PARTITIONS = 45


def minimal_elements(parts: Iterable[Partition]) -> tuple[Partition, ...]:
    parts = sorted(set(parts), key=sort_key)
    out: list[Partition] = []
    for lam in parts:
        if not any(P.contains(lam, g) for g in out):
            out.append(lam)
    return tuple(out)


@dataclass(frozen=True)
class PartitionIdeal:
    generators: tuple[Partition, ...]
    window: P.Window

    def __post_init__(self):
        gens = tuple(sorted({P.make(g) for g in self.generators}, key=sort_key))
        for g in gens:
            if g not in self.window:
                raise WindowError(f"generator {P.fmt(g)} lies outside the window")
        if minimal_elements(gens) != gens:
            raise InputError("generators must form an antichain")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def generated_by(cls, parts: Iterable[Partition], window: P.Window) -> "PartitionIdeal":
        return cls(minimal_elements(P.make(p) for p in parts), window)

    def __contains__(self, lam) -> bool:
        return any(P.contains(lam, g) for g in self.generators)

    def members(self) -> list[Partition]:
        return [lam for lam in self.window.partitions() if lam in self]

    def is_empty(self) -> bool:
        return not self.generators

    def is_full(self) -> bool:
        return () in self.generators

    def rectangle(self) -> Optional[tuple[int, int]]:
        """(x, y) when the ideal is I_(x,y), i.e. generated by the rectangle (y+1)^(x+1)."""
        if len(self.generators) == 1 and P.is_rectangle(self.generators[0]):
            g = self.generators[0]
            return len(g) - 1, g[0] - 1
        return None

    def to_json(self) -> dict:
        return {"generators": [[str(p) for p in g] for g in self.generators],
                "window": self.window.to_json()}

    @classmethod
    def from_json(cls, data) -> "PartitionIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [P.make(int(p) for p in g) for g in data["generators"]]
        return cls(tuple(gens), P.Window(**data["window"]))

    def __repr__(self):
        return "Ideal<" + ", ".join(P.fmt(g) for g in self.generators) + ">"


def is_ideal(parts: Iterable[Partition], window: P.Window) -> bool:
    """Upward closed inside the window.  Adding one box at a time suffices."""
    s = set(parts)
    for lam in s:
        if lam not in window:
            raise WindowError(f"{P.fmt(lam)} lies outside the window")
        for bigger in _covers(lam):
            if bigger in window and bigger not in s:
                return False
    return True


def _covers(lam: Partition) -> Iterator[Partition]:
    """Partitions obtained by adding one box."""
    rows = list(lam) + [0]
    for i in range(len(rows)):
        if i == 0 or rows[i - 1] > rows[i]:
            out = list(rows)
            out[i] += 1
            yield P.strip(out)


def _cocovers(lam: Partition) -> Iterator[Partition]:
    """Partitions obtained by removing one box."""
    for i in range(len(lam)):
        if P.part(lam, i + 2) < lam[i]:
            out = list(lam)
            out[i] -= 1
            yield P.strip(out)


def ideal_from_rectangle(x: int, y: int, window: P.Window) -> PartitionIdeal:
    r = P.rect(y + 1, x + 1)
    if r not in window:
        raise WindowError(f"rectangle {P.fmt(r)} lies outside the window")
    return PartitionIdeal((r,), window)


def pker(values: Mapping[Partition, int]) -> set[Partition]:
    """The zero set of a {0,1}-valued map on basis elements."""
    for lam, v in values.items():
        if v not in (0, 1):
            raise InputError(f"value at {P.fmt(lam)} is not a bit")
    return {lam for lam, v in values.items() if v == 0}


# ---------------------------------------------------------------------------
# primality


def constituent_function(basis: str) -> Callable[[Partition, Partition], list[Partition]]:
    if basis == MONOMIAL:
        return M.constituents
    if basis == SCHUR:
        return S.schur_constituents
    raise InputError(f"unknown basis {basis!r}")


def _check_test_window(ideal: PartitionIdeal, test_window: Optional[P.Window]) -> P.Window:
    if test_window is None:
        return ideal.window
    w = ideal.window

    def within(a, b):
        return b is None or (a is not None and a <= b)

    if test_window.max_size > w.max_size or not within(test_window.max_part, w.max_part) \
            or not within(test_window.max_length, w.max_length):
        raise WindowError("test window must lie inside the ideal's window")
    return test_window


def prime_witness(ideal: PartitionIdeal, test_window: Optional[P.Window] = None,
                  basis: str = MONOMIAL) -> Optional[tuple[Partition, Partition]]:
    """A pair (lam, mu) outside the ideal whose product has every constituent inside.

    Returns ``None`` when no such pair exists on the test window.  The full
    ideal is reported with the witness (0, 0).
    """
    tw = _check_test_window(ideal, test_window)
    if ideal.is_full():
        return (), ()
    constituents = constituent_function(basis)
    outside = [lam for lam in tw.partitions() if lam not in ideal]
    for i, lam in enumerate(outside):
        for mu in outside[i:]:
            # the extreme constituents are cheap and usually decide the pair
            if P.part_sum(lam, mu) not in ideal or P.interleave(lam, mu) not in ideal:
                continue
            if all(nu in ideal for nu in constituents(lam, mu)):
                return lam, mu
    return None


def is_monomial_prime(ideal: PartitionIdeal, test_window: Optional[P.Window] = None) -> bool:
    return prime_witness(ideal, test_window, MONOMIAL) is None


def is_schur_prime(ideal: PartitionIdeal, test_window: Optional[P.Window] = None) -> bool:
    return prime_witness(ideal, test_window, SCHUR) is None


def absorbs_products(kernel: set[Partition], window: P.Window, basis: str = MONOMIAL) -> bool:
    """The {0,1} map with this kernel sends x to 0 => xy to 0, on products inside the window."""
    constituents = constituent_function(basis)
    parts = window.partitions()
    for lam in kernel:
        for mu in parts:
            if sum(lam) + sum(mu) > window.max_size:
                continue
            for nu in constituents(lam, mu):
                if nu in window and nu not in kernel:
                    return False
    return True


# ---------------------------------------------------------------------------
# enumeration and the classification search


def _downsets(parts: list[Partition], choose: Callable) -> Iterator[int]:
    """Decide membership in canonical order, forcing upward closure.

    ``choose(k, in_mask, out_mask, forced)`` returns the bits to try for
    partition k; yields the final ideal masks.
    """
    index = {lam: k for k, lam in enumerate(parts)}
    below = [[index[m] for m in _cocovers(lam) if m in index] for lam in parts]
    n = len(parts)

    def rec(k: int, in_mask: int, out_mask: int):
        if k == n:
            yield in_mask
            return
        forced = any(in_mask >> j & 1 for j in below[k])
        for bit in choose(k, in_mask, out_mask, forced):
            if bit:
                yield from rec(k + 1, in_mask | (1 << k), out_mask)
            else:
                yield from rec(k + 1, in_mask, out_mask | (1 << k))

    yield from rec(0, 0, 0)


def _mask_to_ideal(mask: int, parts: list[Partition], window: P.Window) -> PartitionIdeal:
    return PartitionIdeal.generated_by((parts[k] for k in range(len(parts)) if mask >> k & 1), window)


def enumerate_ideals(window: P.Window) -> list[PartitionIdeal]:
    """Every upward-closed subset of the window, in a fixed order."""
    parts = window.partitions()
    if len(parts) > MAX_ENUMERATION_PARTITIONS:
        raise WindowError(
            f"window has {len(parts)} partitions; the number of ideals grows too fast "
            f"to list beyond {MAX_ENUMERATION_PARTITIONS}")

    def choose(k, in_mask, out_mask, forced):
        return (1,) if forced else (0, 1)

    return [_mask_to_ideal(m, parts, window) for m in _downsets(parts, choose)]


def count_antichains(parts: list[Partition]) -> int:
    """Independent count of antichains under containment, by include/exclude recursion."""
    n = len(parts)
    comparable = [
        sum(1 << j for j in range(n) if j != i and (P.contains(parts[i], parts[j]) or P.contains(parts[j], parts[i])))
        for i in range(n)
    ]

    def rec(allowed: int) -> int:
        if not allowed:
            return 1
        i = (allowed & -allowed).bit_length() - 1
        rest = allowed & ~(1 << i)
        return rec(rest) + rec(rest & ~comparable[i])

    return rec((1 << n) - 1)


@dataclass
class ClassificationResult:
    window: P.Window
    basis: str
    primes: list[PartitionIdeal]
    nodes: int

    def nonempty_primes(self) -> list[PartitionIdeal]:
        return [I for I in self.primes if not I.is_empty()]


def classify_primes(window: P.Window, basis: str = MONOMIAL,
                    test_window: Optional[P.Window] = None) -> ClassificationResult:
    """All prime ideals of the window, by an exhaustive search with sound pruning.

    Membership is decided in canonical order.  A pair (lam, mu), both decided
    outside, whose constituents all lie in the partial ideal stays a witness
    for every completion (ideals only grow), so that branch is cut.  Leaves
    that survive are exactly the ideals with no witness on the test window.
    """
    parts = window.partitions()
    index = {lam: k for k, lam in enumerate(parts)}
    tw = test_window or window
    tests = [lam for lam in tw.partitions()]
    for lam in tests:
        if lam not in index:
            raise WindowError("test window must lie inside the window")
    constituents = constituent_function(basis)
    below_cache: dict[Partition, int] = {}

    def below(nu: Partition) -> int:
        m = below_cache.get(nu)
        if m is None:
            m = 0
            for k, lam in enumerate(parts):
                if P.contains(nu, lam):
                    m |= 1 << k
            below_cache[nu] = m
        return m

    # each test pair becomes (i, j, masks): nu is in the ideal iff masks[nu] meets it
    pairs_at: list[list[tuple]] = [[] for _ in parts]
    pairs_by_bit: list[list[tuple]] = [[] for _ in parts]
    for a, lam in enumerate(tests):
        for mu in tests[a:]:
            i, j = sorted((index[lam], index[mu]))
            masks = sorted({below(nu) for nu in constituents(lam, mu)}, key=lambda m: bin(m).count("1"))
            kept: list[int] = []
            for m in masks:
                if not any(k & m == k for k in kept):
                    kept.append(m)
            pair = (i, j, tuple(kept))
            pairs_at[j].append(pair)
            bits = 0
            for m in kept:
                bits |= m
            for k in range(len(parts)):
                if bits >> k & 1:
                    pairs_by_bit[k].append(pair)

    def violated(pair, in_mask, out_mask):
        i, j, masks = pair
        if not (out_mask >> i & 1 and out_mask >> j & 1):
            return False
        return all(m & in_mask for m in masks)

    nodes = 0

    def choose(k, in_mask, out_mask, forced):
        nonlocal nodes
        nodes += 1
        options = []
        if k == 0:
            # 0 in the ideal gives the full window, which is never prime
            candidates = (0,)
        else:
            candidates = (1,) if forced else (0, 1)
        for bit in candidates:
            if bit:
                new_in = in_mask | (1 << k)
                if any(violated(p, new_in, out_mask) for p in pairs_by_bit[k]):
                    continue
            else:
                new_out = out_mask | (1 << k)
                if any(violated(p, in_mask, new_out) for p in pairs_at[k]):
                    continue
            options.append(bit)
        return options

    primes = [_mask_to_ideal(m, parts, window) for m in _downsets(parts, choose)]
    return ClassificationResult(window, basis, primes, nodes)


def rectangle_ideals(window: P.Window) -> list[PartitionIdeal]:
    """I_(x,y) for every rectangle inside the window."""
    out = []
    for lam in window.partitions():
        if P.is_rectangle(lam):
            out.append(PartitionIdeal((lam,), window))
    return out
