"""Integer rational series g/h, total positivity of their Toeplitz matrices,
and the Witt vectors over N they define.

A series f = 1 + a_1 t + a_2 t^2 + ... is read as the Schur Witt vector with
a(e_n) = a_n; Schur values then come from the dual Jacobi-Trudi determinant.
Everything is exact: roots are located by Sturm sequences over Q and minors
are integer determinants.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from . import partitions as P
from .boolean_witt import BoolWitt, SchurBoolWitt
from .errors import IndeterminateError, InputError, PropertyViolation
from .linalg import det_int
from .schur import jacobi_trudi_e, kostka

Partition = P.Partition

MAX_MINOR_ORDER = 5
MAX_MINOR_INDEX = 12


# ---------------------------------------------------------------------------
# polynomials


class IntPolynomial:
    """Integer polynomial, constant term first, trailing zeros dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"not a coefficient list: {text!r}") from exc
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise InputError(f"not an integer coefficient list: {text!r}")
        return cls(data)

    @classmethod
    def from_roots_factors(cls, factors: Sequence[int]) -> "IntPolynomial":
        """prod (1 + a t) over the given a."""
        out = cls([1])
        for a in factors:
            out = out * cls([1, a])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def reflect(self) -> "IntPolynomial":
        """p(-t)."""
        return IntPolynomial([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return json.dumps(list(self.coeffs))

    def to_json(self) -> list:
        return list(self.coeffs)


# rational polynomial helpers: lists of Fraction, constant first


def _q(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list, b: list) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    rem = list(a)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] / b[-1]
        quot[shift] = c
        for i, bc in enumerate(b):
            rem[shift + i] -= c * bc
        rem = _trim(rem)
    return _trim(quot), rem


def _poly_gcd_q(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _derivative(a: list) -> list:
    return _trim([i * a[i] for i in range(1, len(a))])


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive integer gcd with positive constant term (or leading term if the constant is 0)."""
    g = _poly_gcd_q(_q(a), _q(b))
    if not g:
        return IntPolynomial([])
    den = 1
    for c in g:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = IntPolynomial([int(c * den) for c in g])
    k = ints.content()
    out = IntPolynomial([c // k for c in ints.coeffs])
    pivot = out.coeffs[0] if out.coeffs[0] else out.coeffs[-1]
    return out if pivot > 0 else IntPolynomial([-c for c in out.coeffs])


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    q, r = _divmod(_q(a), _q(b))
    if r or any(c.denominator != 1 for c in q):
        raise PropertyViolation(f"{b} does not divide {a} over Z")
    return IntPolynomial([int(c) for c in q])


# ---------------------------------------------------------------------------
# Sturm sequences


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_sequence(a: list) -> list[list]:
    seq = [_trim(a), _derivative(a)]
    while seq[-1]:
        rem = _divmod(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append([-c for c in rem])
    return [s for s in seq if s]


def _eval(a: list, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _at_infinity(a: list, sign: int) -> Fraction:
    """Sign of a at +inf (sign=1) or -inf (sign=-1)."""
    deg = len(a) - 1
    return a[-1] * (sign ** deg)


def count_real_roots(p: IntPolynomial, lo: Optional[Fraction] = None,
                     hi: Optional[Fraction] = None) -> int:
    """Distinct real roots in (lo, hi]; None means the corresponding infinity."""
    if p.is_zero():
        raise InputError("the zero polynomial has no root count")
    seq = _sturm_sequence(_q(p))
    left = [_at_infinity(s, -1) for s in seq] if lo is None else [_eval(s, Fraction(lo)) for s in seq]
    right = [_at_infinity(s, 1) for s in seq] if hi is None else [_eval(s, Fraction(hi)) for s in seq]
    return _sign_changes(left) - _sign_changes(right)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(p, IntPolynomial([i * c for i, c in enumerate(p.coeffs)][1:]))
    return exact_quotient(p, g) if g.degree > 0 else p


def roots_negative_real(g: IntPolynomial) -> bool:
    """All complex roots of g are negative reals (vacuous for constants)."""
    if g.is_zero():
        raise InputError("the zero polynomial is not allowed")
    if g[0] == 0:
        return False
    r = squarefree_part(g)
    # Sturm counts roots in (-inf, 0]; g(0) != 0 so this is (-inf, 0)
    return count_real_roots(r, None, Fraction(0)) == r.degree


def roots_positive_real(h: IntPolynomial) -> bool:
    return roots_negative_real(h.reflect())


# ---------------------------------------------------------------------------
# series


@dataclass(frozen=True)
class IntRationalSeries:
    g: IntPolynomial
    h: IntPolynomial
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for name in ("g", "h"):
            p = getattr(self, name)
            if p[0] != 1:
                raise InputError(f"{name} must have constant term 1, got {p}")
        if poly_gcd(self.g, self.h).degree > 0:
            raise InputError(f"g={self.g} and h={self.h} are not coprime")

    @classmethod
    def of(cls, g: Sequence[int], h: Sequence[int] = (1,)) -> "IntRationalSeries":
        return cls(IntPolynomial(g), IntPolynomial(h))

    @classmethod
    def lowest_terms(cls, g: IntPolynomial, h: IntPolynomial) -> "IntRationalSeries":
        d = poly_gcd(g, h)
        if d[0] != 1:
            raise InputError("common factor with constant term other than 1")
        return cls(exact_quotient(g, d), exact_quotient(h, d))

    def __mul__(self, other: "IntRationalSeries") -> "IntRationalSeries":
        return IntRationalSeries.lowest_terms(self.g * other.g, self.h * other.h)

    def to_json(self) -> dict:
        return {"g": self.g.to_json(), "h": self.h.to_json()}

    @classmethod
    def from_json(cls, data) -> "IntRationalSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.of(data["g"], data["h"])

    def __repr__(self):
        return f"({self.g})/({self.h})"


def expand(s: IntRationalSeries, n: int) -> list[int]:
    """a_0..a_n of g/h by long division (h has constant term 1)."""
    key = ("expand", n)
    if key in s._cache:
        return list(s._cache[key])
    a: list[int] = []
    for k in range(n + 1):
        v = s.g[k] - sum(s.h[i] * a[k - i] for i in range(1, min(k, s.h.degree) + 1))
        a.append(v)
    s._cache[key] = tuple(a)
    return a


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


# ---------------------------------------------------------------------------
# minors of the Toeplitz matrix (a_{i-j})


@dataclass(frozen=True)
class ToeplitzWindow:
    coeffs: tuple[int, ...]
    max_minor_order: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise InputError("a_0 must be 1")
        if not 1 <= self.max_minor_order <= MAX_MINOR_ORDER:
            raise InputError(f"minor order must be in 1..{MAX_MINOR_ORDER}")
        if len(self.coeffs) - 1 > MAX_MINOR_INDEX:
            raise InputError(f"indices are limited to 0..{MAX_MINOR_INDEX}")

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def entry(self, i: int, j: int) -> int:
        d = i - j
        return self.coeffs[d] if 0 <= d <= self.n else 0

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> int:
        return det_int([[self.entry(i, j) for j in cols] for i in rows])


@dataclass(frozen=True)
class MinorVerdict:
    passed: bool
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    value: int = 0
    checked: int = 0

    def label(self) -> str:
        return "window-pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"verdict": self.label(), "checked": self.checked}
        if not self.passed:
            out["witness"] = {"rows": list(self.rows), "cols": list(self.cols), "det": self.value}
        return out


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colex order."""
    def rec(top, k):
        if k == 0:
            yield ()
            return
        for last in range(k - 1, top):
            for head in rec(last, k - 1):
                yield head + (last,)
    yield from rec(n, k)


def toeplitz_minors(w: ToeplitzWindow) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Index pairs that can carry a nonzero minor, in canonical order.

    The order is by size, then colex on rows, then colex on columns.  Two
    reductions keep this small without changing the first negative witness:
    a minor with i_r < j_r for some r vanishes (the matrix is lower
    triangular in that block), and shifting both index sets down by the
    same amount leaves the minor unchanged while moving it earlier, so the
    first witness always has smallest column 0.
    """
    size = w.n + 1
    for k in range(1, w.max_minor_order + 1):
        for rows in colex_subsets(size, k):
            for cols in _bounded_columns(rows):
                yield rows, cols


def _bounded_columns(rows: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Column sets starting at 0 with c_r <= rows_r, in colex order."""
    def rec(k, top):
        if k == 1:
            yield (0,)
            return
        for last in range(k - 1, min(rows[k - 1], top - 1) + 1):
            for head in rec(k - 1, last):
                yield head + (last,)
    yield from rec(len(rows), rows[-1] + 1)


class _MinorTable:
    """Minors by expansion along the last row, memoised up to a common shift."""

    def __init__(self, w: ToeplitzWindow):
        self.coeffs = w.coeffs
        self.memo: dict = {}

    def __call__(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
        s = cols[0]
        if s:
            rows = tuple(r - s for r in rows)
            cols = tuple(c - s for c in cols)
        key = rows + cols
        memo = self.memo
        if key in memo:
            return memo[key]
        k = len(rows)
        if k == 1:
            d = rows[0] - cols[0]
            v = self.coeffs[d] if 0 <= d < len(self.coeffs) else 0
            memo[key] = v
            return v
        last, head = rows[-1], rows[:-1]
        coeffs, n = self.coeffs, len(self.coeffs)
        total = 0
        sign = 1 if (k - 1) % 2 == 0 else -1
        for idx in range(k):
            d = last - cols[idx]
            if 0 <= d < n and coeffs[d]:
                rest = cols[:idx] + cols[idx + 1:]
                # a row index below its column index makes the block vanish
                if all(r >= c for r, c in zip(head, rest)):
                    total += sign * coeffs[d] * self(head, rest)
            sign = -sign
        memo[key] = total
        return total


def minor_check(w: ToeplitzWindow) -> MinorVerdict:
    checked = 0
    table = _MinorTable(w)
    for rows, cols in toeplitz_minors(w):
        checked += 1
        v = table(rows, cols)
        if v < 0:
            return MinorVerdict(False, rows, cols, v, checked)
    return MinorVerdict(True, checked=checked)


def minor_check_exhaustive(w: ToeplitzWindow) -> MinorVerdict:
    """Oracle: every k x k minor with indices <= N, no reductions."""
    size = w.n + 1
    checked = 0
    for k in range(1, w.max_minor_order + 1):
        for rows in colex_subsets(size, k):
            for cols in colex_subsets(size, k):
                checked += 1
                v = w.minor(rows, cols)
                if v < 0:
                    return MinorVerdict(False, rows, cols, v, checked)
    return MinorVerdict(True, checked=checked)


def series_window(s: IntRationalSeries, n: int = MAX_MINOR_INDEX, k: int = 4) -> ToeplitzWindow:
    return ToeplitzWindow(tuple(expand(s, n)), k)


# ---------------------------------------------------------------------------
# Witt vectors over N


def is_wsch_N_member(s: IntRationalSeries) -> bool:
    return roots_negative_real(s.g) and roots_positive_real(s.h)


def eval_schur_N(s: IntRationalSeries, lam) -> int:
    lam = P.make(lam)
    conj = P.conjugate(lam)
    need = (conj[0] + len(conj)) if conj else 1
    return jacobi_trudi_e(lam, expand(s, need))


def schur_kernel(s: IntRationalSeries, window: P.Window) -> set[Partition]:
    return {lam for lam in window.partitions() if eval_schur_N(s, lam) == 0}


def bool_invariant(s: IntRationalSeries, window: Optional[P.Window] = None) -> SchurBoolWitt:
    """(deg g, deg h), checked against the zero set of lam -> a(s_lam) on the window."""
    if not is_wsch_N_member(s):
        raise InputError(f"{s} is not in the image of W^Sch(N)")
    inv = SchurBoolWitt(s.g.degree, s.h.degree)
    window = P.Window(10) if window is None else window
    expected = {lam for lam in window.partitions() if not inv.evaluate(lam)}
    got = schur_kernel(s, window)
    if got != expected:
        diff = sorted(got ^ expected, key=lambda m: (sum(m), m))
        raise PropertyViolation(f"kernel of {s} disagrees with I{inv} at {P.fmt(diff[0])}")
    return inv


def monomial_in_schur(lam) -> dict[Partition, int]:
    """m_lam = sum c_nu s_nu with signed integer c, by unitriangularity of Kostka numbers."""
    lam = P.make(lam)
    n = sum(lam)
    order = list(P.partitions_of(n))           # reverse lex: dominance-larger first
    target = {mu: (1 if mu == lam else 0) for mu in order}
    out: dict[Partition, int] = {}
    for nu in order:
        c = target[nu]
        if c:
            out[nu] = c
            for mu in order:
                k = kostka(nu, mu)
                if k:
                    target[mu] -= c * k
    return out


def eval_monomial_N(s: IntRationalSeries, lam) -> int:
    return sum(c * eval_schur_N(s, nu) for nu, c in monomial_in_schur(lam).items())


def bool_invariant_monomial(s: IntRationalSeries, window: Optional[P.Window] = None) -> BoolWitt:
    if s.h.degree != 0 or not roots_negative_real(s.g):
        raise InputError(f"{s} is not in the image of W(N)")
    inv = BoolWitt(s.g.degree, 0)
    window = P.Window(8) if window is None else window
    for lam in window.partitions():
        v = eval_monomial_N(s, lam)
        if v < 0:
            raise PropertyViolation(f"a(m_{P.fmt(lam)}) = {v} < 0")
        if (v != 0) != bool(inv.evaluate(lam)):
            raise PropertyViolation(f"monomial kernel of {s} disagrees with {inv} at {P.fmt(lam)}")
    return inv


def extinction_scan(s: IntRationalSeries, kmax: int) -> list[int]:
    """min over lam |- k of a(s_lam), for k = 0..kmax."""
    return [min(eval_schur_N(s, lam) for lam in P.partitions_of(k)) for k in range(kmax + 1)]


def extinction_bound(s: IntRationalSeries) -> int:
    return (s.g.degree + 1) * (s.h.degree + 1)


# ---------------------------------------------------------------------------
# recovering g/h from coefficients


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    n = len(mat)
    a = [row[:] + [r] for row, r in zip(mat, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c] / a[c][c]
                for k in range(c, n + 1):
                    a[r][k] -= f * a[c][k]
    return [a[i][n] / a[i][i] for i in range(n)]


def reconstruct_rational(coeffs: Sequence[int], max_degree: int) -> IntRationalSeries:
    """The g/h of least total degree fitting every given coefficient.

    For each (deg g, deg h) = (dg, dh), the recurrence sum_k h_k a_{n-k} = 0
    for n = dg+1 .. dg+dh is a square Toeplitz system for h_1..h_dh; a
    solution is accepted only if it reproduces all remaining coefficients.
    """
    a = [Fraction(c) for c in coeffs]
    n = len(a) - 1
    for total in range(2 * max_degree + 1):
        for dh in range(min(total, max_degree) + 1):
            dg = total - dh
            if dg > max_degree or dg + 2 * dh > n:
                continue
            if dh:
                mat = [[a[m - k] if m - k >= 0 else Fraction(0) for k in range(1, dh + 1)]
                       for m in range(dg + 1, dg + dh + 1)]
                rhs = [-a[m] for m in range(dg + 1, dg + dh + 1)]
                sol = _solve(mat, rhs)
                if sol is None:
                    continue
            else:
                sol = []
            h = [Fraction(1)] + sol
            fits = all(sum(h[k] * a[m - k] for k in range(dh + 1) if m - k >= 0) == 0
                       for m in range(dg + 1, n + 1))
            if not fits:
                continue
            g = [sum(h[k] * a[m - k] for k in range(min(dh, m) + 1)) for m in range(dg + 1)]
            if any(c.denominator != 1 for c in g + h):
                raise PropertyViolation("recurrence fit has non-integral coefficients")
            return IntRationalSeries.lowest_terms(IntPolynomial([int(c) for c in g]),
                                                  IntPolynomial([int(c) for c in h]))
    raise IndeterminateError(f"no rational fit of degree <= {max_degree} to {n + 1} coefficients")


# ---------------------------------------------------------------------------
# verdicts and samples


@dataclass(frozen=True)
class PositivityReport:
    series: IntRationalSeries
    label: str
    minors: MinorVerdict
    schur_witness: Optional[tuple[Partition, int]] = None

    def to_json(self) -> dict:
        out = {"series": self.series.to_json(), "verdict": self.label, "minors": self.minors.to_json()}
        if self.schur_witness:
            lam, v = self.schur_witness
            out["schur_witness"] = {"partition": list(lam), "value": v}
        return out


def classify_series(s: IntRationalSeries, k: int = 4, n: int = MAX_MINOR_INDEX,
                    schur_window: Optional[P.Window] = None) -> PositivityReport:
    """certified member, window-pass only, fail, or inconclusive."""
    schur_window = P.Window(10) if schur_window is None else schur_window
    mv = minor_check(series_window(s, n, k))
    member = is_wsch_N_member(s)
    if not mv.passed:
        if member:
            raise PropertyViolation(f"member {s} has a negative minor {mv.to_json()}")
        return PositivityReport(s, "fail", mv)
    if member:
        return PositivityReport(s, "certified member", mv)
    for lam in schur_window.partitions():
        v = eval_schur_N(s, lam)
        if v < 0:
            return PositivityReport(s, "fail", mv, (lam, v))
    return PositivityReport(s, "inconclusive", mv)


def sample_members(count: int, seed: int = 0, max_factors: int = 3,
                   max_coeff: int = 3) -> list[IntRationalSeries]:
    """prod (1 + a t) / prod (1 - b t) with up to max_factors factors on each side."""
    rng = random.Random(seed)
    seen: dict = {}
    while len(seen) < count:
        ga = sorted(rng.randint(1, max_coeff) for _ in range(rng.randint(0, max_factors)))
        hb = sorted(rng.randint(1, max_coeff) for _ in range(rng.randint(0, max_factors)))
        s = IntRationalSeries(IntPolynomial.from_roots_factors(ga),
                              IntPolynomial.from_roots_factors([-b for b in hb]))
        seen.setdefault((s.g, s.h), s)
    return list(seen.values())


def sample_non_members(count: int, seed: int = 1, max_coeff: int = 3) -> list[IntRationalSeries]:
    """Series with a complex root or a root of the wrong sign, built from small factors."""
    rng = random.Random(seed)
    bad_factors = [[1, 1, 1], [1, 0, 1], [1, 1, 2], [1, 2, 3], [1, -1, 1]]
    seen: dict = {}
    while len(seen) < count:
        g = IntPolynomial([1])
        h = IntPolynomial([1])
        kind = rng.randrange(3)
        if kind == 0:
            g = g * IntPolynomial(rng.choice(bad_factors))
        elif kind == 1:
            g = g * IntPolynomial([1, -rng.randint(1, max_coeff)])
        else:
            h = h * IntPolynomial([1, rng.randint(1, max_coeff)])
        for _ in range(rng.randint(0, 2)):
            g = g * IntPolynomial([1, rng.randint(1, max_coeff)])
        for _ in range(rng.randint(0, 2)):
            h = h * IntPolynomial([1, -rng.randint(1, max_coeff)])
        try:
            s = IntRationalSeries.lowest_terms(g, h)
        except InputError:
            continue
        if not is_wsch_N_member(s):
            seen.setdefault((s.g, s.h), s)
    return list(seen.values())
