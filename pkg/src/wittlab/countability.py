"""Witt vectors over the truncations N/(n = n+1), seen through a window.

A partial homomorphism assigns a value in {0..n} to each m_lam in the
window, with m_0 -> 1, and must respect every product m_lam m_mu whose
constituents stay in the window.  Additivity is automatic on a basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Mapping, Optional, Sequence

from . import partitions as P
from .boolean_witt import BoolWitt
from .errors import InputError, PropertyViolation, WindowError
from .monomial import basis_product

Partition = P.Partition

MAX_COUNT_SIZE = 6


# ---------------------------------------------------------------------------
# the truncated semiring


def sat(v: int, n: int) -> int:
    return v if v < n else n


@dataclass(frozen=True)
class TruncatedNat:
    n: int
    value: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.value <= self.n:
            raise InputError(f"{self.value} is not an element of N/({self.n}={self.n}+1)")

    def __add__(self, other: "TruncatedNat") -> "TruncatedNat":
        self._same(other)
        return TruncatedNat(self.n, sat(self.value + other.value, self.n))

    def __mul__(self, other: "TruncatedNat") -> "TruncatedNat":
        self._same(other)
        return TruncatedNat(self.n, sat(self.value * other.value, self.n))

    def _same(self, other):
        if other.n != self.n:
            raise InputError("truncation levels differ")

    def __repr__(self):
        return str(self.value)


def truncated_ops(n: int) -> dict[str, list[list[int]]]:
    if n < 0:
        raise InputError("n must be natural")
    r = range(n + 1)
    return {"add": [[sat(a + b, n) for b in r] for a in r],
            "mul": [[sat(a * b, n) for b in r] for a in r]}


# ---------------------------------------------------------------------------
# windowed homomorphisms


@dataclass(frozen=True)
class PartialHom:
    n: int
    window: P.Window
    values: Mapping[Partition, int]

    def __post_init__(self):
        if self.values.get(()) != 1 and self.n >= 1:
            raise InputError("m_0 must map to 1")
        for lam, v in self.values.items():
            if lam not in self.window:
                raise WindowError(f"{P.fmt(lam)} lies outside the window")
            if not 0 <= v <= self.n:
                raise InputError(f"value {v} at {P.fmt(lam)} is outside 0..{self.n}")
        missing = [lam for lam in self.window.partitions() if lam not in self.values]
        if missing:
            raise InputError(f"no value at {P.fmt(missing[0])}")

    def __call__(self, lam: Partition) -> int:
        return self.values[lam]

    def key(self) -> tuple:
        return tuple(self.values[lam] for lam in self.window.partitions())

    def reduction(self) -> "PartialHom":
        """Image under N/(n=n+1) -> B."""
        return PartialHom(1, self.window, {lam: min(v, 1) for lam, v in self.values.items()})

    def to_json(self) -> dict:
        return {"n": self.n, "window": self.window.to_json(),
                "values": [[list(lam), v] for lam, v in
                           sorted(self.values.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))]}

    @classmethod
    def from_json(cls, data) -> "PartialHom":
        return cls(int(data["n"]), P.Window(**data["window"]),
                   {P.make(lam): int(v) for lam, v in data["values"]})


@lru_cache(maxsize=None)
def window_products(window: P.Window) -> tuple:
    """(lam, mu, ((nu, c), ...)) for unordered nonzero pairs whose product stays in the window."""
    parts = [lam for lam in window.partitions() if lam]
    out = []
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            if sum(lam) + sum(mu) > window.max_size:
                continue
            prod = basis_product(lam, mu)
            if all(nu in window for nu in prod):
                out.append((lam, mu, tuple(sorted(prod.items()))))
    return tuple(out)


@dataclass(frozen=True)
class MultiplicativityVerdict:
    passed: bool
    witness: Optional[tuple[Partition, Partition]] = None
    lhs: int = 0
    rhs: int = 0

    def to_json(self) -> dict:
        if self.passed:
            return {"verdict": "pass"}
        return {"verdict": "fail", "witness": [list(self.witness[0]), list(self.witness[1])],
                "product": self.lhs, "image_of_product": self.rhs}


def verify_multiplicativity(f: PartialHom) -> MultiplicativityVerdict:
    n = f.n
    for lam, mu, prod in window_products(f.window):
        lhs = sat(f(lam) * f(mu), n)
        rhs = sat(sum(c * f(nu) for nu, c in prod), n)
        if lhs != rhs:
            return MultiplicativityVerdict(False, (lam, mu), lhs, rhs)
    return MultiplicativityVerdict(True)


def u_family_hom(U, n: int, window: P.Window) -> PartialHom:
    """m_0 -> 1, m_lam -> n-1 on U, n on every other nonzero lam."""
    if n < 3:
        raise InputError("the construction needs (n-1)^2 >= n, i.e. n >= 3")
    U = {P.make(lam) for lam in U}
    for lam in U:
        if not lam:
            raise InputError("U must consist of nonzero partitions")
        if lam not in window:
            raise WindowError(f"{P.fmt(lam)} lies outside the window")
    return PartialHom(n, window, {lam: 1 if not lam else (n - 1 if lam in U else n)
                                  for lam in window.partitions()})


def nat_image(k: int, n: int, window: P.Window) -> PartialHom:
    """The image of k under N -> W(N/(n=n+1)): m_lam at k ones, saturated."""
    def count(lam):
        # number of distinct monomials of shape lam in k variables
        mult = P.multiplicities(lam)
        total, left = 1, k
        for m in mult.values():
            if m > left:
                return 0
            total *= comb(left, m)
            left -= m
        return total

    return PartialHom(n, window, {lam: sat(count(lam), n) for lam in window.partitions()})


# ---------------------------------------------------------------------------
# counting


class _Problem:
    """Variables (nonzero partitions in size order) and the product constraints on them."""

    def __init__(self, n: int, window: P.Window):
        self.n = n
        self.window = window
        self.parts = [lam for lam in window.partitions() if lam]
        self.index = {lam: i for i, lam in enumerate(self.parts)}
        self.constraints = []
        for lam, mu, prod in window_products(window):
            terms = tuple((self.index[nu], c) for nu, c in prod)
            self.constraints.append((self.index[lam], self.index[mu], terms))
        # checks fire at the largest summand index; partial checks at every summand
        self.full = [[] for _ in self.parts]
        self.partial = [[] for _ in self.parts]
        for con in self.constraints:
            idxs = [i for i, _ in con[2]]
            self.full[max(idxs)].append(con)
            for i in set(idxs):
                if i != max(idxs):
                    self.partial[i].append(con)
        sizes = [sum(lam) for lam in self.parts]
        self.top = sizes.index(max(sizes)) if self.parts else 0
        self.top_constraints = [con for con in self.constraints
                                if con[2] and min(i for i, _ in con[2]) >= self.top]

    def ok(self, vals: list, k: int) -> bool:
        n = self.n
        for a, b, terms in self.full[k]:
            if sat(vals[a] * vals[b], n) != sat(sum(c * vals[i] for i, c in terms), n):
                return False
        for a, b, terms in self.partial[k]:
            target = sat(vals[a] * vals[b], n)
            partial = sat(sum(c * vals[i] for i, c in terms if i <= k), n)
            if partial > target:
                return False
        return True

    def solutions(self, vals: list, k: int, stop: int) -> Iterator[list]:
        if k == stop:
            yield vals
            return
        for v in range(self.n + 1):
            vals[k] = v
            if self.ok(vals, k):
                yield from self.solutions(vals, k + 1, stop)
        vals[k] = None


def _check_count_window(window: P.Window) -> None:
    if window.max_size > MAX_COUNT_SIZE:
        raise WindowError(f"exhaustive counting is limited to size <= {MAX_COUNT_SIZE}")


def enumerate_partial_homs(n: int, window: P.Window) -> Iterator[PartialHom]:
    _check_count_window(window)
    prob = _Problem(n, window)
    vals: list = [None] * len(prob.parts)
    for sol in prob.solutions(vals, 0, len(prob.parts)):
        values = {(): 1}
        values.update(zip(prob.parts, sol))
        yield PartialHom(n, window, values)


def count_partial_homs(n: int, window: P.Window) -> int:
    """Exact count by backtracking, memoised on the two largest sizes.

    Top-size values occur only as summands, so given everything below, their
    number of completions depends only on the top targets f(lam) f(mu).  The
    values one size down enter the top only through products with size-1
    parts, so their contribution is memoised on their own targets, the
    remaining top targets, and those size-1 factors.
    """
    _check_count_window(window)
    if n < 1:
        raise InputError("n must be at least 1")
    prob = _Problem(n, window)
    if not prob.parts:
        return 1
    sizes = [sum(lam) for lam in prob.parts]
    top_size = sizes[-1]
    mid = sizes.index(top_size - 1) if top_size - 1 in sizes else prob.top
    if top_size < 3:
        mid = prob.top

    mid_cons = [c for c in prob.constraints if c[2] and mid <= min(i for i, _ in c[2]) < prob.top]
    top_cons = prob.top_constraints
    fixed = [k for k, (a, b, _) in enumerate(top_cons) if a < mid and b < mid]
    mixed = [k for k, (a, b, _) in enumerate(top_cons) if not (a < mid and b < mid)]

    top_memo: dict = {}

    def top_count(vals) -> int:
        key = tuple(sat(vals[a] * vals[b], n) for a, b, _ in top_cons)
        if key not in top_memo:
            top_memo[key] = sum(1 for _ in prob.solutions(list(vals), prob.top, len(prob.parts)))
        return top_memo[key]

    mid_memo: dict = {}
    total = 0
    vals: list = [None] * len(prob.parts)
    for low in prob.solutions(vals, 0, mid):
        key = (tuple(sat(low[a] * low[b], n) for a, b, _ in mid_cons),
               tuple(sat(low[top_cons[k][0]] * low[top_cons[k][1]], n) for k in fixed),
               tuple(low[min(top_cons[k][:2])] for k in mixed))
        if key not in mid_memo:
            mid_memo[key] = sum(top_count(v) for v in prob.solutions(list(low), mid, prob.top))
        total += mid_memo[key]
    return total


def count_partial_homs_plain(n: int, window: P.Window) -> int:
    """Oracle: count the enumeration one hom at a time."""
    return sum(1 for _ in enumerate_partial_homs(n, window))


def count_restrictions(window: P.Window) -> int:
    """Distinct restrictions of elements of W(B) to the window."""
    parts = window.partitions()
    seen = set()
    bound = window.max_size + 1
    for w in [BoolWitt(None)] + [BoolWitt(x, y) for x in range(bound) for y in range(bound)]:
        seen.add(tuple(w.evaluate(lam) for lam in parts))
    return len(seen)


def count_boolean_homs_brute(window: P.Window) -> int:
    """Oracle for n = 1: every subset of nonzero partitions as a zero set."""
    parts = [lam for lam in window.partitions() if lam]
    if len(parts) > 20:
        raise WindowError("brute force is limited to 20 partitions")
    prods = window_products(window)
    count = 0
    for mask in range(1 << len(parts)):
        val = {lam: 0 if mask >> i & 1 else 1 for i, lam in enumerate(parts)}
        if all((val[lam] & val[mu]) == max(val[nu] for nu, _ in prod) for lam, mu, prod in prods):
            count += 1
    return count


# ---------------------------------------------------------------------------
# n = 2: forcing


def boundary_shapes(z: BoolWitt, window: P.Window) -> list[Partition]:
    """u^x for 1 <= u <= 2y+1 inside the window (none for z = inf or x = 0)."""
    if z.is_infinite or z.x == 0:
        return []
    return [lam for lam in (P.rect(u, z.x) for u in range(1, 2 * z.y + 2)) if lam in window]


@dataclass(frozen=True)
class ForcingResult:
    hom: Optional[PartialHom]
    contradiction: Optional[str] = None
    reasons: Optional[Mapping[Partition, str]] = None


def forcing_closure(boundary: Mapping, z: BoolWitt, window: P.Window, n: int = 2) -> ForcingResult:
    """Every a(m_lam) in the window for a vector over Bool-reduction z, from boundary values.

    Cases, in order: lam in I_z is 0; lam_{x+1} > 0 is 2 (m_lam^2 has a
    cross-term constituent outside the kernel); lam_{x+1} = 0 with a descent
    among the first x parts is 2 (two distinct constituents of m_lam^2
    survive); the remaining u^x take boundary values for u <= 2y+1 and obey
    f(u^x) = f((y+1)^x) f((u-y-1)^x) beyond.
    """
    if n != 2:
        raise InputError("the forcing argument is specific to n = 2")
    boundary = {P.make(k): int(v) for k, v in boundary.items()}
    expected = set(boundary_shapes(z, window))
    if set(boundary) != expected:
        return ForcingResult(None, f"boundary must cover exactly {sorted(map(P.fmt, expected))}")
    for lam, v in boundary.items():
        if v not in (1, 2):
            return ForcingResult(None, f"boundary value {v} at {P.fmt(lam)}: "
                                       f"{P.fmt(lam)} is outside the kernel of {z}, so the value is 1 or 2")
    values: dict = {(): 1}
    reasons: dict = {(): "unit"}
    for lam in window.partitions():
        if not lam:
            continue
        if z.is_infinite:
            values[lam], reasons[lam] = 2, "idempotent, two constituents, empty kernel"
            continue
        x, y = z.x, z.y
        tail = P.part(lam, x + 1)
        if tail >= y + 1:
            values[lam], reasons[lam] = 0, "kernel"
        elif tail > 0:
            values[lam], reasons[lam] = 2, "cross term outside kernel"
        elif any(P.part(lam, i) > P.part(lam, i + 1) for i in range(1, x)):
            values[lam], reasons[lam] = 2, "two constituents outside kernel"
        else:
            u = lam[0]
            values[lam], reasons[lam] = _rectangle_value(u, x, y, boundary), \
                "boundary" if u <= 2 * y + 1 else "rectangle recurrence"
    return ForcingResult(PartialHom(2, window, values), None, reasons)


def _rectangle_value(u: int, x: int, y: int, boundary: Mapping) -> int:
    if u <= 2 * y + 1:
        return boundary[P.rect(u, x)]
    return sat(_rectangle_value(y + 1, x, y, boundary) * _rectangle_value(u - y - 1, x, y, boundary), 2)


def forced_half(z: BoolWitt, window: P.Window) -> list[Partition]:
    """Partitions on which the forcing argument only uses products inside the window."""
    out = []
    for lam in window.partitions():
        rect_like = not z.is_infinite and P.part(lam, z.x + 1) == 0 and \
            all(P.part(lam, i) == P.part(lam, i + 1) for i in range(1, z.x))
        if 2 * sum(lam) <= window.max_size or z.evaluate(lam) == 0 or rect_like:
            out.append(lam)
    return out


def forcing_bound(window: P.Window) -> int:
    """Upper bound on n = 2 partial homs: sum over Boolean reductions of 2^(unforced values).

    A nonzero value is forced to 2 when m_lam^2 lies in the window and has
    surviving constituents of total multiplicity >= 2, and is forced to
    f(lam) f(mu) when m_lam m_mu has a single surviving constituent, with
    coefficient 1, inside the window.
    """
    _check_count_window(window)
    prods = window_products(window)
    total = 0
    for red in enumerate_partial_homs(1, window):
        alive = {lam for lam, v in red.values.items() if v and lam}
        forced = set()
        for lam, mu, prod in prods:
            if lam == mu and lam in alive and sum(c for nu, c in prod if nu in alive) >= 2:
                forced.add(lam)
        changed = True
        while changed:
            changed = False
            for lam, mu, prod in prods:
                surv = [(nu, c) for nu, c in prod if nu in alive]
                if lam in alive and mu in alive and len(surv) == 1 and surv[0][1] == 1:
                    nu = surv[0][0]
                    if nu not in forced and lam in forced and mu in forced:
                        forced.add(nu)
                        changed = True
        total += 2 ** len(alive - forced)
    return total


def check_forcing_against_enumeration(window: P.Window, bound: int = 2) -> int:
    """Every n = 2 partial hom whose zero set is I_z in the window agrees with forcing_closure
    on forced_half(z).  Returns the number of (hom, z) pairs compared."""
    _check_count_window(window)
    # only z whose kernel rectangle sits in the window can be read off a window
    zs = [BoolWitt(x, y) for x in range(bound + 1) for y in range(bound + 1)
          if P.rect(y + 1, x + 1) in window]
    by_zero_set = {}
    parts = window.partitions()
    for z in zs:
        by_zero_set.setdefault(frozenset(lam for lam in parts if not z.evaluate(lam)), []).append(z)
    compared = 0
    for f in enumerate_partial_homs(2, window):
        zero = frozenset(lam for lam in parts if f(lam) == 0)
        for z in by_zero_set.get(zero, []):
            boundary = {lam: f(lam) for lam in boundary_shapes(z, window)}
            res = forcing_closure(boundary, z, window)
            if res.hom is None:
                raise PropertyViolation(f"boundary of {f.to_json()} rejected: {res.contradiction}")
            for lam in forced_half(z, window):
                if res.hom(lam) != f(lam):
                    raise PropertyViolation(f"forcing for z={z} disagrees at {P.fmt(lam)}")
            compared += 1
    return compared


def nonzero_count(window: P.Window) -> int:
    return sum(1 for lam in window.partitions() if lam)


def count_table(ns: Sequence[int], sizes: Sequence[int]) -> list[tuple[int, int, int]]:
    return [(w, n, count_partial_homs(n, P.Window(w))) for w in sizes for n in ns]
