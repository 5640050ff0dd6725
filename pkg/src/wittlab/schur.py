"""Schur-basis computations: LR coefficients, Kostka numbers, conjugation, dimensions."""

from __future__ import annotations

import functools
import math
from typing import Iterator, Optional, Sequence

from . import partitions as P
from .errors import InputError, PropertyViolation
from .linalg import det_int
from .memo import persistent
from .monomial import coproduct_mul_m
from .symfunc import MONOMIAL, SCHUR, SymFunc, Tensor

Partition = P.Partition


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


@persistent()
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam mu}: LR tableaux of shape nu/lam and content mu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition can be checked at every placement.
    """
    lam, mu, nu = P.make(lam), P.make(mu), P.make(nu)
    if sum(lam) + sum(mu) != sum(nu) or not P.contains(nu, lam) or not P.contains(nu, mu):
        return 0
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, P.part(lam, r + 1) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    count = [0] * (len(mu) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = filling.get((r, c + 1), len(mu))
        lo = filling.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if count[v] >= mu[v - 1]:
                continue
            if v > 1 and count[v] >= count[v - 1]:
                continue
            count[v] += 1
            filling[(r, c)] = v
            total += rec(k + 1)
            del filling[(r, c)]
            count[v] -= 1
        return total

    return rec(0)


def _lr_row_fillings(inner: Partition, content: Optional[Partition] = None,
                     outer: Optional[Partition] = None,
                     value_caps: Optional[dict[int, int]] = None) -> Iterator[tuple[Partition, Partition]]:
    """Enumerate LR tableaux through their row contents.

    An LR tableau is determined by the numbers a[r][j] of entries j in row r.
    Yields (outer shape, content) per tableau.  Either ``content`` or
    ``outer`` (or both) is fixed.  ``value_caps`` maps a 0-indexed value to
    the largest number of times it may occur.
    """
    caps = value_caps or {}
    if content is None and outer is None:
        raise InputError("need a content or an outer shape")
    if content is not None:
        total = sum(content)
        nvals = len(content)
        rows = len(inner) + len(content)
    else:
        total = sum(outer) - sum(inner)
        rows = len(outer)
        nvals = rows
    if outer is not None:
        rows = len(outer)

    def rec(r: int, prev_row: list[int], prev_shape: int, used: list[int], placed: int, shape: list[int]):
        # used[j]: number of j+1's placed in rows < r
        if placed == total:
            tail = [P.part(inner, k + 1) for k in range(len(shape), max(rows, len(inner)))]
            if outer is not None and P.strip(shape + tail) != outer:
                return
            nu = P.strip(shape + tail)
            if not all(nu[i] >= nu[i + 1] for i in range(len(nu) - 1)):
                return
            yield nu, P.strip(used)
            return
        if r >= rows:
            return
        base = P.part(inner, r + 1)
        limit_shape = prev_shape if r > 0 else None
        target = P.part(outer, r + 1) if outer is not None else None
        row = [0] * nvals

        def fill(j: int, width: int):
            # width: columns used so far in this row (including inner part)
            if j == min(nvals, r + 1):
                if target is not None and width != target:
                    return
                if limit_shape is not None and width > limit_shape:
                    return
                new_used = [u + a for u, a in zip(used, row)]
                yield from rec(r + 1, list(row), width, new_used, placed + sum(row), shape + [width])
                return
            cap = (content[j] - used[j]) if content is not None else total - placed - sum(row)
            if j > 0:
                # lattice: entries j+1 up to this row <= entries j in earlier rows
                cap = min(cap, used[j - 1] - used[j])
            if r > 0:
                # column strictness against the row above
                above = (P.part(inner, r) + sum(prev_row[:j]))
                cap = min(cap, above - width)
            if target is not None:
                cap = min(cap, target - width)
            if j in caps:
                cap = min(cap, caps[j] - used[j])
            for a in range(max(cap, -1), -1, -1):
                row[j] = a
                yield from fill(j + 1, width + a)
            row[j] = 0

        yield from fill(0, base)

    yield from rec(0, [], 0, [0] * nvals, 0, [])


@functools.lru_cache(maxsize=None)
def _lr_expand(lam: Partition, mu: Partition) -> tuple:
    """Same tableaux as _lr_row_fillings, counted by a DP over rows.

    The rows below r only see the counts used so far and the contents of
    row r-1, so suffixes are shared between tableaux.
    """
    nvals = len(mu)
    total = sum(mu)
    rows = len(lam) + nvals

    @functools.lru_cache(maxsize=None)
    def suffixes(r: int, used: tuple, prev_row: tuple) -> dict:
        if sum(used) == total:
            return {tuple(lam[r:]): 1}
        if r >= rows:
            return {}
        base = P.part(lam, r + 1)
        above_base = P.part(lam, r)
        prev_width = above_base + sum(prev_row)
        out: dict = {}
        row = [0] * nvals
        top = min(nvals, r + 1)

        def fill(j: int, width: int, before_above: int):
            # before_above: cells of row r-1 (inner included) holding values < j+1
            if j == top:
                if r > 0 and width > prev_width:
                    return
                nxt = tuple(u + a for u, a in zip(used, row))
                for tail, c in suffixes(r + 1, nxt, tuple(row)).items():
                    key = (width,) + tail
                    out[key] = out.get(key, 0) + c
                return
            cap = mu[j] - used[j]
            if j > 0:
                cap = min(cap, used[j - 1] - used[j])
            if r > 0:
                cap = min(cap, before_above - width)
            for a in range(cap, -1, -1):
                row[j] = a
                fill(j + 1, width + a, before_above + (prev_row[j] if r > 0 and j < len(prev_row) else 0))
            row[j] = 0

        fill(0, base, above_base)
        return out

    acc: dict[Partition, int] = {}
    for shape, c in suffixes(0, (0,) * nvals, ()).items():
        nu = P.strip(shape)
        acc[nu] = acc.get(nu, 0) + c
    return tuple(acc.items())


def lr_expand(lam, mu) -> dict[Partition, int]:
    """All c^nu_{lam mu} at once, as a dict nu -> coefficient.

    The smaller factor is used as the content, which keeps the search narrow.
    """
    lam, mu = P.make(lam), P.make(mu)
    if (sum(mu), len(mu)) > (sum(lam), len(lam)):
        lam, mu = mu, lam
    return dict(_lr_expand(lam, mu))


def schur_constituents(lam, mu) -> list[Partition]:
    return list(lr_expand(lam, mu))


def schur_product(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != SCHUR or g.basis != SCHUR:
        raise InputError("schur_product needs Schur-basis inputs")
    acc: dict[Partition, int] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            for nu, c in lr_expand(lam, mu).items():
                acc[nu] = acc.get(nu, 0) + a * b * c
    return SymFunc(acc, SCHUR)


@functools.lru_cache(maxsize=None)
def _coproduct_add_s(lam: Partition) -> tuple:
    acc: dict = {}
    for mu in P.enumerate_window(P.Window(sum(lam), P.part(lam, 1), len(lam))):
        if not P.contains(lam, mu):
            continue
        for nu_outer, content in _lr_row_fillings(mu, outer=lam):
            key = (mu, content)
            acc[key] = acc.get(key, 0) + 1
    return tuple(acc.items())


def coproduct_add_s(lam) -> Tensor:
    """Delta+(s_lam) = sum c^lam_{mu nu} s_mu (x) s_nu."""
    return Tensor(dict(_coproduct_add_s(P.make(lam))), SCHUR)


def skew_contents(outer: Partition, inner: Partition,
                  value_caps: Optional[dict[int, int]] = None) -> Iterator[Partition]:
    """Contents nu with c^outer_{inner nu} > 0, one per LR tableau (repeats possible)."""
    if not P.contains(outer, inner):
        return
    for _, content in _lr_row_fillings(inner, outer=outer, value_caps=value_caps):
        yield content


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """Inverse Kostka: peel off s_lam from the dominance-largest term downwards.

    Raises PropertyViolation when f is not a natural combination of Schur functions.
    """
    if f.basis != MONOMIAL:
        raise InputError("expected a monomial-basis function")
    rest: dict[Partition, int] = dict(f.items())
    out: dict[Partition, int] = {}
    for n in sorted({sum(l) for l in rest}, reverse=True):
        for lam in P.partitions_of(n):
            c = rest.get(lam, 0)
            if c == 0:
                continue
            if c < 0:
                raise PropertyViolation(f"negative Schur coefficient at {P.fmt(lam)}")
            out[lam] = c
            for mu in P.partitions_of(n):
                if P.dominates(lam, mu):
                    k = kostka(lam, mu)
                    if k:
                        rest[mu] = rest.get(mu, 0) - c * k
    return SymFunc(out, SCHUR)


@functools.lru_cache(maxsize=None)
def _coproduct_mul_s(lam: Partition) -> tuple:
    mono_side = schur_to_monomial(SymFunc({lam: 1}, SCHUR))
    acc: dict = {}
    for rho, c in mono_side.items():
        for (a, b), d in coproduct_mul_m(rho).items():
            acc[(a, b)] = acc.get((a, b), 0) + c * d
    # convert the left factor, then the right one
    by_right: dict = {}
    for (a, b), c in acc.items():
        by_right.setdefault(b, {})[a] = c
    half: dict = {}
    for b, left in by_right.items():
        for a, c in monomial_to_schur(SymFunc(left, MONOMIAL)).items():
            half.setdefault(a, {})[b] = c
    out: dict = {}
    for a, right in half.items():
        for b, c in monomial_to_schur(SymFunc(right, MONOMIAL)).items():
            out[(a, b)] = c
    return tuple(out.items())


def coproduct_mul_s(lam) -> Tensor:
    """Delta-x(s_lam) (Kronecker coefficients), through monomials and inverse Kostka.

    Only meant for small sizes; it exists to check the Schur-side laws from
    first principles.
    """
    return Tensor(dict(_coproduct_mul_s(P.make(lam))), SCHUR)


# ---------------------------------------------------------------------------
# Kostka numbers


def _horizontal_strips(shape: Partition, k: int, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of k boxes."""
    n = len(shape) + 1
    rows = list(shape) + [0]

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield P.strip(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for a in range(cap, -1, -1):
            yield from rec(i + 1, left - a, acc + [rows[i] + a])

    for out in rec(0, k, []):
        if max_len is None or len(out) <= max_len:
            yield out


@persistent()
def kostka(lam: Partition, mu: Sequence[int]) -> int:
    """Semistandard tableaux of shape lam and content mu (any composition)."""
    lam = P.make(lam)
    mu = tuple(int(m) for m in mu)
    if sum(lam) != sum(mu) or any(m < 0 for m in mu):
        return 0

    @functools.lru_cache(maxsize=None)
    def rec(shape: Partition, j: int) -> int:
        if j == len(mu):
            return 1 if shape == lam else 0
        total = 0
        for nxt in _horizontal_strips(shape, mu[j]):
            if P.contains(lam, nxt):
                total += rec(nxt, j + 1)
        return total

    return rec((), 0)


def kostka_by_fillings(lam, mu) -> int:
    """Oracle: fill the diagram cell by cell and count semistandard fillings."""
    lam = P.make(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    fill: dict = {}
    left = list(mu)

    def rec(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        lo = max(fill.get((r, c - 1), 1), fill.get((r - 1, c), 0) + 1)
        total = 0
        for v in range(lo, len(mu) + 1):
            if left[v - 1]:
                left[v - 1] -= 1
                fill[(r, c)] = v
                total += rec(k + 1)
                del fill[(r, c)]
                left[v - 1] += 1
        return total

    return rec(0)


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != SCHUR:
        raise InputError("expected a Schur-basis function")
    acc: dict[Partition, int] = {}
    for lam, c in f.items():
        for mu in P.partitions_of(sum(lam)):
            if P.dominates(lam, mu):
                k = kostka(lam, mu)
                if k:
                    acc[mu] = acc.get(mu, 0) + c * k
    return SymFunc(acc, MONOMIAL)


def omega_schur(f: SymFunc) -> SymFunc:
    if f.basis != SCHUR:
        raise InputError("expected a Schur-basis function")
    return SymFunc({P.conjugate(lam): c for lam, c in f.items()}, SCHUR)


# ---------------------------------------------------------------------------
# dimensions


def dim_irrep(lam) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    lam = P.make(lam)
    conj = P.conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(sum(lam)) // hooks


@functools.lru_cache(maxsize=None)
def count_standard_tableaux(lam: Partition) -> int:
    """Oracle: the largest entry sits in a removable corner; recurse."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, row in enumerate(lam):
        if P.part(lam, i + 2) < row:
            smaller = list(lam)
            smaller[i] -= 1
            total += count_standard_tableaux(P.strip(smaller))
    return total


# ---------------------------------------------------------------------------
# Jacobi-Trudi


def jacobi_trudi_e(lam, evalues: Sequence[int]) -> int:
    """Value of s_lam under e_n -> evalues[n], via det(e_{lam'_i - i + j}).

    ``evalues[0]`` must be 1 and every index the determinant touches
    (up to lam'_1 + len(lam') - 1) must be supplied.
    """
    lam = P.make(lam)
    ev = [int(v) for v in evalues]
    if not ev or ev[0] != 1:
        raise InputError("evalues[0] must be 1")
    conj = P.conjugate(lam)
    k = len(conj)
    if k == 0:
        return 1
    need = conj[0] + k - 1
    if len(ev) <= need:
        raise InputError(f"need e-values up to index {need}, got {len(ev) - 1}")

    def eval_at(n):
        return ev[n] if n >= 0 else 0

    mat = [[eval_at(conj[i] - i + j) for j in range(k)] for i in range(k)]
    return det_int(mat)
