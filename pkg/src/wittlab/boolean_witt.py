"""Big and Schur Witt vectors over the Boolean semiring.

Both semirings live on N^2 plus a point at infinity.  A finite element (x, y)
sends a basis element indexed by lam to 0 exactly when lam_{x+1} >= y+1,
that is, when lam contains the rectangle (y+1)^(x+1).  Infinity sends every
basis element to 1.

The arithmetic below is the closed form of the laws.  The ``law_check_*``
functions recompute a sum or product from scratch, by pairing the two inputs
against a coproduct and reading off the kernel, and are the reference the
closed forms are tested against.
"""

from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import monomial as M
from . import partitions as P
from . import schur as S
from .errors import IndeterminateError, InputError, PropertyViolation, WindowError
from .symfunc import SymFunc

Partition = P.Partition


# ---------------------------------------------------------------------------
# values


class _Pair:
    """Shared storage: (x, y) or infinity (x is None)."""

    __slots__ = ("x", "y")

    def __init__(self, x: Optional[int], y: Optional[int] = None):
        if x is None:
            self.x = self.y = None
            return
        if not isinstance(x, int) or not isinstance(y, int) or x < 0 or y < 0:
            raise InputError(f"coordinates must be natural numbers, got ({x!r},{y!r})")
        self.x, self.y = x, y

    @property
    def is_infinite(self) -> bool:
        return self.x is None

    def coords(self) -> Optional[tuple[int, int]]:
        return None if self.x is None else (self.x, self.y)

    def __eq__(self, other):
        return type(other) is type(self) and other.x == self.x and other.y == self.y

    def __hash__(self):
        return hash((type(self).__name__, self.x, self.y))

    def __repr__(self):
        return "inf" if self.x is None else f"({self.x},{self.y})"

    def to_json(self) -> dict:
        if self.x is None:
            return {"kind": "infinity"}
        return {"kind": "finite", "x": self.x, "y": self.y}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("kind") == "infinity":
            return cls(None)
        if data.get("kind") == "finite":
            return cls(int(data["x"]), int(data["y"]))
        raise InputError(f"bad Witt vector payload {data!r}")

    def evaluate(self, lam: Partition) -> int:
        """The bit assigned to the basis element indexed by lam."""
        if self.x is None:
            return 1
        return 0 if P.part(lam, self.x + 1) >= self.y + 1 else 1

    def kernel_rectangle(self) -> Optional[Partition]:
        return None if self.x is None else P.rect(self.y + 1, self.x + 1)


_PAIR_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$")


class BoolWitt(_Pair):
    """An element of W(B)."""

    __slots__ = ()

    @classmethod
    def parse(cls, text: str) -> "BoolWitt":
        t = text.strip()
        if t in ("inf", "infinity", "∞"):
            return cls(None)
        m = _PAIR_RE.match(t)
        if not m:
            raise InputError(f"not a Witt vector: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


class SchurBoolWitt(_Pair):
    """An element of W^Sch(B): (x, y) stands for x + y*eta in N[eta]/(eta^2 = 1)."""

    __slots__ = ()

    @classmethod
    def parse(cls, text: str) -> "SchurBoolWitt":
        t = text.strip().replace(" ", "")
        if t in ("inf", "infinity", "∞"):
            return cls(None)
        m = _PAIR_RE.match(t)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"(\d+)?(?:\+?(\d+)?\*?eta)?", t)
        if t and m and (m.group(1) or "eta" in t):
            x = int(m.group(1) or 0)
            y = (int(m.group(2)) if m.group(2) else 1) if "eta" in t else 0
            return cls(x, y)
        raise InputError(f"not a Schur Witt vector: {text!r}")

    def as_eta(self) -> str:
        if self.x is None:
            return "inf"
        return f"{self.x}+{self.y}*eta"


INF = BoolWitt(None)
SINF = SchurBoolWitt(None)


def finite(x: int, y: int) -> BoolWitt:
    return BoolWitt(x, y)


def from_nat(n: int) -> BoolWitt:
    """Image of n under N -> W(B)."""
    return BoolWitt(n, 0)


def sample(bound: int) -> list[BoolWitt]:
    """All finite elements with coordinates <= bound, then infinity."""
    return [BoolWitt(x, y) for x in range(bound + 1) for y in range(bound + 1)] + [INF]


def sample_schur(bound: int) -> list[SchurBoolWitt]:
    return [SchurBoolWitt(x, y) for x in range(bound + 1) for y in range(bound + 1)] + [SINF]


# ---------------------------------------------------------------------------
# W(B): closed-form laws


def eval_m(w: BoolWitt, lam) -> int:
    return w.evaluate(P.make(lam))


def add_w(a: BoolWitt, b: BoolWitt) -> BoolWitt:
    if a.is_infinite or b.is_infinite:
        return INF
    return BoolWitt(a.x + b.x, max(a.y, b.y))


def _mul_generators(a: BoolWitt, b: BoolWitt) -> BoolWitt:
    """Products of the generators (x,0) and (0,y) and of infinity with them."""
    if a.is_infinite and b.is_infinite:
        return INF
    if a.is_infinite or b.is_infinite:
        z = b if a.is_infinite else a
        # inf*(x,0) = inf for x >= 1, inf*(0,y) = (0,y)
        if z.x == 0:
            return z
        return INF
    if a.y == 0 and b.y == 0:
        return BoolWitt(a.x * b.x, 0)
    if a.x == 0 and b.x == 0:
        return BoolWitt(0, min(a.y, b.y))
    # (x,0)*(0,y): x copies of (0,y), and (0,y)+(0,y) = (0,y)
    n, z = (a.x, b) if a.y == 0 else (b.x, a)
    return z if n >= 1 else BoolWitt(0, 0)


def _split(a: BoolWitt) -> list[BoolWitt]:
    if a.is_infinite:
        return [INF]
    return [BoolWitt(a.x, 0), BoolWitt(0, a.y)]


def mul_w(a: BoolWitt, b: BoolWitt) -> BoolWitt:
    """Distribute over (x,y) = (x,0) + (0,y) and add up the generator products."""
    total = BoolWitt(0, 0)
    for u in _split(a):
        for v in _split(b):
            total = add_w(total, _mul_generators(u, v))
    return total


def leq_w(a: BoolWitt, b: BoolWitt) -> bool:
    if b.is_infinite:
        return True
    if a.is_infinite:
        return False
    return a.x <= b.x and a.y <= b.y


def leq_pointwise(a: _Pair, b: _Pair, window: P.Window) -> bool:
    """a(s) <= b(s) for every basis element s of the window."""
    return all(a.evaluate(lam) <= b.evaluate(lam) for lam in window.partitions())


# ---------------------------------------------------------------------------
# ghost map and Dorroh extension


@dataclass(frozen=True)
class GhostVector:
    """r -> bit for r >= 1: 1 for r <= threshold, then 0.  threshold None means all 1."""

    threshold: Optional[int]

    def bit(self, r: int) -> int:
        if r < 1:
            raise InputError("ghost components are indexed from 1")
        return 1 if self.threshold is None or r <= self.threshold else 0

    def bits(self, n: int) -> list[int]:
        return [self.bit(r) for r in range(1, n + 1)]

    def pointwise_max(self, other: "GhostVector") -> "GhostVector":
        if self.threshold is None or other.threshold is None:
            return GhostVector(None)
        return GhostVector(max(self.threshold, other.threshold))

    def pointwise_min(self, other: "GhostVector") -> "GhostVector":
        if self.threshold is None:
            return other
        if other.threshold is None:
            return self
        return GhostVector(min(self.threshold, other.threshold))

    def __repr__(self):
        return "<1,1,...>" if self.threshold is None else f"<1^{self.threshold},0,...>"


def ghost(w: BoolWitt) -> GhostVector:
    """r -> w(psi_r).  Only (0, y) has a finite threshold."""
    if not w.is_infinite and w.x == 0:
        return GhostVector(w.y)
    return GhostVector(None)


@dataclass(frozen=True)
class DorrohElement:
    """(a, b) with a in N and b in N' = N u {inf}; b = None is inf."""

    a: int
    b: Optional[int]

    def __post_init__(self):
        if self.a < 0 or (self.b is not None and self.b < 0):
            raise InputError("Dorroh coordinates must be natural")


def _f(n: int) -> Optional[int]:
    """N -> N', 0 -> 0 and everything else -> inf."""
    return 0 if n == 0 else None


def _nmax(u: Optional[int], v: Optional[int]) -> Optional[int]:
    return None if u is None or v is None else max(u, v)


def _nmin(u: Optional[int], v: Optional[int]) -> Optional[int]:
    if u is None:
        return v
    if v is None:
        return u
    return min(u, v)


def dorroh_add(p: DorrohElement, q: DorrohElement) -> DorrohElement:
    return DorrohElement(p.a + q.a, _nmax(p.b, q.b))


def dorroh_mul(p: DorrohElement, q: DorrohElement) -> DorrohElement:
    """(x,y)(x',y') = (xx', f(x)y' + y f(x') + yy') with + = max and * = min on N'."""
    b = _nmax(_nmax(_nmin(_f(p.a), q.b), _nmin(p.b, _f(q.a))), _nmin(p.b, q.b))
    return DorrohElement(p.a * q.a, b)


def dorroh_project(p: DorrohElement) -> BoolWitt:
    return INF if p.b is None else BoolWitt(p.a, p.b)


# ---------------------------------------------------------------------------
# kernel identification


def identify_kernel(kernel: Iterable[Partition], window: P.Window,
                    bound: Optional[tuple[int, int]] = None) -> Optional[tuple[int, int]]:
    """Read (x, y) off a kernel computed on a window; ``None`` means infinity.

    A nonempty kernel must have a single minimal element, a rectangle
    (y+1)^(x+1), and must be the whole of I_(x,y) on the window; anything
    else is a PropertyViolation.  Windows are closed under taking smaller
    partitions, so a nonempty answer is exact.

    An empty kernel is reported as infinity only if every rectangle
    (y+1)^(x+1) with x <= bx, y <= by lies in the window, so that no finite
    answer up to ``bound`` could have gone unseen.  Without a bound, the
    largest square the window covers is used, and it must be at least 2x2.
    """
    kernel = set(kernel)
    parts = window.partitions()
    if kernel:
        mins = [lam for lam in kernel if not any(mu != lam and P.contains(lam, mu) for mu in kernel)]
        if len(mins) != 1 or not P.is_rectangle(mins[0]):
            raise PropertyViolation(f"kernel minima {[P.fmt(m) for m in mins]} are not a single rectangle")
        r = mins[0]
        expected = {lam for lam in parts if P.contains(lam, r)}
        if expected != kernel:
            raise PropertyViolation(f"kernel is not the ideal generated by {P.fmt(r)} on the window")
        return len(r) - 1, r[0] - 1
    if bound is None:
        side = 0
        while P.rect(side + 1, side + 1) in window:
            side += 1
        if side < 2:
            raise IndeterminateError("window too small to tell infinity from a finite answer")
        bound = (side - 1, side - 1)
    bx, by = bound
    if P.rect(by + 1, bx + 1) not in window:
        raise IndeterminateError(
            f"empty kernel, but the window does not contain {P.fmt(P.rect(by + 1, bx + 1))}; "
            "cannot rule out a finite answer up to the bound")
    return None


def corner_window(w: _Pair) -> P.Window:
    """Smallest window that can identify a finite answer w exactly."""
    return P.Window.box(w.y + 1, w.x + 1)


# ---------------------------------------------------------------------------
# first-principles pairing in the monomial basis


def _add_pairing(fa: Callable, fb: Callable, lam: Partition) -> int:
    """(a (x) b)(Delta+ m_lam): splittings of the parts of lam into two multisets."""
    for mu, nu in M.coproduct_add_m(lam):
        if fa(mu) and fb(nu):
            return 1
    return 0


def _mul_pairing(fa: Callable, fb: Callable, lam: Partition) -> int:
    """(a (x) b)(Delta-x m_lam).

    Delta-x m_lam is supported on pairs (row sums, column sums) of matrices
    over N whose nonzero entries are the parts of lam.  Parts are placed
    largest first into empty cells, rows and columns being labelled in order
    of first use.  fa and fb are monotone (their kernels are upward closed)
    and partial sums only grow, so a partial matrix whose row or column sums
    already evaluate to 0 is abandoned.
    """
    if not lam:
        return 1 if fa(()) and fb(()) else 0
    parts = list(lam)
    rows: list[int] = []
    cols: list[int] = []
    used: set[tuple[int, int]] = set()

    def ok() -> bool:
        return bool(fa(P.from_vector(rows)) and fb(P.from_vector(cols)))

    def rec(k: int, last: Optional[tuple[int, int]]) -> bool:
        if k == len(parts):
            return True
        v = parts[k]
        for r in range(len(rows) + 1):
            for c in range(len(cols) + 1):
                if (r, c) in used:
                    continue
                # equal parts go into increasing cells, which removes reorderings
                if last is not None and parts[k - 1] == v and (r, c) < last:
                    continue
                new_r, new_c = r == len(rows), c == len(cols)
                if new_r:
                    rows.append(0)
                if new_c:
                    cols.append(0)
                rows[r] += v
                cols[c] += v
                used.add((r, c))
                if ok() and rec(k + 1, (r, c)):
                    return True
                used.discard((r, c))
                rows[r] -= v
                cols[c] -= v
                if new_c:
                    cols.pop()
                if new_r:
                    rows.pop()
        return False

    return 1 if rec(0, None) else 0


def pairing_table(a: BoolWitt, b: BoolWitt, op: str, window: P.Window) -> dict[Partition, int]:
    pair = {"add": _add_pairing, "mul": _mul_pairing}.get(op)
    if pair is None:
        raise InputError(f"unknown operation {op!r}")
    return {lam: pair(a.evaluate, b.evaluate, lam) for lam in window.partitions()}


def law_check_via_coproduct(a: BoolWitt, b: BoolWitt, op: str, window: P.Window,
                            bound: Optional[tuple[int, int]] = None) -> BoolWitt:
    """a op b recomputed from the coproduct; see identify_kernel for the window contract."""
    table = pairing_table(a, b, op, window)
    found = identify_kernel((lam for lam, v in table.items() if v == 0), window, bound)
    return INF if found is None else BoolWitt(*found)


def mul_pairing_by_tensor(a: BoolWitt, b: BoolWitt, lam: Partition) -> int:
    """The same pairing read off the full tensor Delta-x m_lam (small sizes only)."""
    for mu, nu in M.coproduct_mul_m(lam):
        if a.evaluate(mu) and b.evaluate(nu):
            return 1
    return 0


# ---------------------------------------------------------------------------
# plethysm action


def pleth_act_m(lam, w: BoolWitt, window: Optional[P.Window] = None,
                bound: Optional[tuple[int, int]] = None) -> BoolWitt:
    """m_lam acting on w.

    On infinity and on (0, y) the answer is known in closed form.  Otherwise
    it is computed: the result sends m_mu to w(m_mu o m_lam), and its kernel
    is identified on ``window``.
    """
    lam = P.make(lam)
    if not lam:
        raise InputError("m_0 does not act by a Witt vector operation")
    if w.is_infinite:
        return INF
    if w.x == 0:
        return BoolWitt(0, w.y // lam[0])
    return pleth_act_m_via_plethysm(lam, w, window, bound)


def pleth_act_m_via_plethysm(lam, w: BoolWitt, window: Optional[P.Window] = None,
                             bound: Optional[tuple[int, int]] = None) -> BoolWitt:
    lam = P.make(lam)
    if not lam:
        raise InputError("m_0 does not act by a Witt vector operation")
    window = window or P.Window(4)
    kernel = []
    for mu in window.partitions():
        comp = M.plethysm_expand(SymFunc({mu: 1}), SymFunc({lam: 1}),
                                 degcap=sum(mu) * sum(lam))
        value = 1 if any(w.evaluate(nu) for nu in comp) else 0
        if value == 0:
            kernel.append(mu)
    found = identify_kernel(kernel, window, bound)
    return INF if found is None else BoolWitt(*found)


# ---------------------------------------------------------------------------
# W^Sch(B)


def eval_s(w: SchurBoolWitt, lam) -> int:
    return w.evaluate(P.make(lam))


def add_s(a: SchurBoolWitt, b: SchurBoolWitt) -> SchurBoolWitt:
    if a.is_infinite or b.is_infinite:
        return SINF
    return SchurBoolWitt(a.x + b.x, a.y + b.y)


def _is_zero(a: _Pair) -> bool:
    return a.x == 0 and a.y == 0


def mul_s(a: SchurBoolWitt, b: SchurBoolWitt) -> SchurBoolWitt:
    """(x + y eta)(x' + y' eta) with eta^2 = 1; infinity absorbs everything but 0."""
    if a.is_infinite or b.is_infinite:
        other = b if a.is_infinite else a
        return SchurBoolWitt(0, 0) if not other.is_infinite and _is_zero(other) else SINF
    return SchurBoolWitt(a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x)


def anti_teichmuller_bool() -> SchurBoolWitt:
    """eta: s_lam -> 1 exactly when lam is a single column."""
    return SchurBoolWitt(0, 1)


def to_schur_witt(w: BoolWitt) -> SchurBoolWitt:
    if not w.is_infinite and w.y == 0:
        return SchurBoolWitt(w.x, 0)
    return SINF


def leq_s(a: SchurBoolWitt, b: SchurBoolWitt) -> bool:
    if b.is_infinite:
        return True
    if a.is_infinite:
        return False
    return a.x <= b.x and a.y <= b.y


def _schur_add_pairing(fa: Callable, a: _Pair, b: _Pair, lam: Partition) -> int:
    """(a (x) b)(Delta+ s_lam), searching only the splittings that could give 1.

    mu runs over those mu in lam with a(s_mu) = 1; for b finite, contents nu
    with nu_{x'+1} > y' are cut inside the LR search.
    """
    caps = None if b.is_infinite else {b.x: b.y}
    for mu in _sub_partitions(lam):
        if not fa(mu):
            continue
        for nu in S.skew_contents(lam, mu, caps):
            if b.evaluate(nu):
                return 1
    return 0


@functools.lru_cache(maxsize=None)
def _sub_partitions_cached(lam: Partition) -> tuple:
    out = []
    for n in range(sum(lam) + 1):
        out.extend(mu for mu in P.partitions_of(n, P.part(lam, 1), len(lam)) if P.contains(lam, mu))
    return tuple(out)


def _sub_partitions(lam: Partition):
    return _sub_partitions_cached(lam)


def schur_pairing_table(a: SchurBoolWitt, b: SchurBoolWitt, window: P.Window) -> dict[Partition, int]:
    return {lam: _schur_add_pairing(a.evaluate, a, b, lam) for lam in window.partitions()}


def law_check_schur_via_coproduct(a: SchurBoolWitt, b: SchurBoolWitt, op: str, window: P.Window,
                                  bound: Optional[tuple[int, int]] = None) -> SchurBoolWitt:
    """a op b recomputed from the Schur coproducts.

    Addition uses the LR coproduct on any window.  Multiplication uses the
    Kronecker tensor, which is only computed up to size KRONECKER_MAX_SIZE.
    """
    if op == "add":
        table = schur_pairing_table(a, b, window)
    elif op == "mul":
        if window.max_size > KRONECKER_MAX_SIZE:
            raise WindowError(f"Kronecker coproducts are computed up to size {KRONECKER_MAX_SIZE}")
        table = {lam: schur_mul_pairing(a, b, lam) for lam in window.partitions()}
    else:
        raise InputError(f"unknown operation {op!r}")
    found = identify_kernel((lam for lam, v in table.items() if v == 0), window, bound)
    return SINF if found is None else SchurBoolWitt(*found)


KRONECKER_MAX_SIZE = 8


def schur_mul_pairing(a: SchurBoolWitt, b: SchurBoolWitt, lam: Partition) -> int:
    """(a (x) b)(Delta-x s_lam) from the Kronecker tensor; small sizes only."""
    for mu, nu in S.coproduct_mul_s(lam):
        if a.evaluate(mu) and b.evaluate(nu):
            return 1
    return 0


def schur_kernel_by_addition(x: int, y: int, window: P.Window) -> set[Partition]:
    """Kernel of x + y*eta built as a pairing of repeated sums of 1 and eta.

    Starts from the evaluations of 1 (single rows) and eta (single columns)
    and adds one summand at a time through the LR coproduct, never using
    the closed-form kernel of an intermediate sum.
    """
    if x == 0 and y == 0:
        return {lam for lam in window.partitions() if lam}
    summands = [lambda lam: 1 if len(lam) <= 1 else 0] * x + \
               [lambda lam: 1 if all(p == 1 for p in lam) else 0] * y
    current = summands[0]
    parts = window.partitions()
    for nxt in summands[1:]:
        table = {}
        for lam in parts:
            value = 0
            for mu in _sub_partitions(lam):
                if not current(mu):
                    continue
                if any(nxt(nu) for nu in S.skew_contents(lam, mu)):
                    value = 1
                    break
            table[lam] = value
        current = table.__getitem__
    return {lam for lam in parts if not current(lam)}
