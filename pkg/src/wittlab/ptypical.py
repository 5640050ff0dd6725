"""p-typical symmetric functions and p-typical Witt vectors over B.

The generators are d_{i,j} = d^{oi} o psi^{oj}, where psi = sum x^p and
d = ((sum x)^p - sum x^p)/p.  A p-typical Boolean Witt vector is an array
a_{i,j} = a(d_{i,j}) of bits; the finite element (x, y) has a_{i,j} = 0
exactly for i >= x and j >= y.

Sums and products are recomputed from first principles by a small symbolic
calculus.  In Lambda (x) Lambda write X_{k,l} = d_{k,l} (x) 1 and
Y_{k,l} = 1 (x) d_{k,l}.  Plethysm by psi is a ring map with
psi(X_{k,l}) = X_{k,l+1}, plethysm by d sends X_{k,l} to X_{k+1,l}, and d of
a sum or product follows the rules

    d(a + b) = d(a) + d(b) + ((a + b)^p - a^p - b^p)/p
    d(ab)    = psi(a) d(b) + d(a) b^p

all with natural coefficients (psi(a) = a^p - p d(a)).  Co-addition sends d_{i,j} to
d^i(X_{0,j} + Y_{0,j}) and co-multiplication to d^i(X_{0,j} Y_{0,j}).
"""

from __future__ import annotations

import functools
import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterator, Optional

from . import monomial as M
from . import partitions as P
from .boolean_witt import BoolWitt
from .errors import IndeterminateError, InputError, PropertyViolation, UnderdeterminedError
from .memo import persistent
from .symfunc import MONOMIAL, SymFunc, Tensor

Partition = P.Partition

# largest i + j whose d_{i,j} we expand in the monomial basis, per prime
MONOMIAL_FEASIBILITY = {2: 3, 3: 2}
DEFAULT_FEASIBILITY = 1


def feasible_k(p: int) -> int:
    return MONOMIAL_FEASIBILITY.get(p, DEFAULT_FEASIBILITY)


def _check_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise InputError(f"{p} is not a prime")


# ---------------------------------------------------------------------------
# d, d_{i,j} and the defining relation


def _sf_encode(f: SymFunc):
    return f.to_json()


def _sf_decode(data):
    return SymFunc.from_json(data)


@persistent(_sf_encode, _sf_decode)
def d_poly(p: int, nvars: Optional[int] = None) -> SymFunc:
    """d as an element of Lambda_N, by literal expansion in nvars variables."""
    _check_prime(p)
    nvars = p if nvars is None else nvars
    if nvars < p:
        raise InputError(f"need at least {p} variables to see every monomial of degree {p}")
    linear = M.expand_polynomial(M.psi(1), nvars)
    power = {(0,) * nvars: 1}
    for _ in range(p):
        power = M.poly_mul(power, linear)
    for i in range(nvars):
        exp = tuple(p if k == i else 0 for k in range(nvars))
        power[exp] -= 1
    quotient = {}
    for exp, c in power.items():
        if c % p:
            raise PropertyViolation(f"coefficient {c} of {exp} is not divisible by {p}")
        if c:
            quotient[exp] = c // p
    return M.collect_monomials(quotient)


@persistent(_sf_encode, _sf_decode)
def d_ij(p: int, i: int, j: int, degcap: Optional[int] = None) -> SymFunc:
    """d^{oi} o psi_p^{oj}, computed by repeated plethysm."""
    _check_prime(p)
    if i < 0 or j < 0:
        raise InputError("indices must be natural")
    deg = p ** (i + j)
    degcap = deg if degcap is None else degcap
    if deg > degcap:
        raise InputError(f"d_({i},{j}) has degree {deg} > cap {degcap}")
    f = M.psi(1)
    for _ in range(j):
        f = M.plethysm_expand(M.psi(p), f, degcap=deg)
    d = d_poly(p)
    for _ in range(i):
        f = M.plethysm_expand(d, f, degcap=deg)
    return f


def verify_relation(p: int, i: int, j: int, degcap: Optional[int] = None) -> bool:
    """d_{i,j}^p = p d_{i+1,j} + d_{i,j+1}, exactly in the monomial basis."""
    deg = p ** (i + j + 1)
    degcap = deg if degcap is None else degcap
    if deg > degcap:
        raise InputError(f"the relation lives in degree {deg} > cap {degcap}")
    lhs = M.mono_power(d_ij(p, i, j), p)
    rhs = p * d_ij(p, i + 1, j) + d_ij(p, i, j + 1)
    return lhs == rhs


def d_nat(n: int, p: int) -> int:
    """d on a natural number: (n^p - n)/p."""
    return (n ** p - n) // p


# ---------------------------------------------------------------------------
# values


class PTypicalBoolWitt:
    """(x, y) or infinity in W_(p)(B); the prime travels with the value."""

    __slots__ = ("p", "x", "y")

    def __init__(self, p: int, x: Optional[int], y: Optional[int] = None):
        _check_prime(p)
        self.p = p
        if x is None:
            self.x = self.y = None
            return
        if not isinstance(x, int) or not isinstance(y, int) or x < 0 or y < 0:
            raise InputError("coordinates must be natural numbers")
        self.x, self.y = x, y

    @property
    def is_infinite(self) -> bool:
        return self.x is None

    def entry(self, i: int, j: int) -> int:
        """a_{i,j}."""
        if self.x is None:
            return 1
        return 0 if i >= self.x and j >= self.y else 1

    def restrict(self, k: int) -> "TruncatedArray":
        return TruncatedArray(k, {(i, j): self.entry(i, j) for i, j in triangle(k)})

    def __eq__(self, other):
        return isinstance(other, PTypicalBoolWitt) and (other.p, other.x, other.y) == (self.p, self.x, self.y)

    def __hash__(self):
        return hash(("ptyp", self.p, self.x, self.y))

    def __repr__(self):
        return f"p={self.p}:" + ("inf" if self.x is None else f"({self.x},{self.y})")

    def to_json(self) -> dict:
        if self.x is None:
            return {"p": self.p, "kind": "infinity"}
        return {"p": self.p, "kind": "finite", "x": self.x, "y": self.y}

    @classmethod
    def from_json(cls, data) -> "PTypicalBoolWitt":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("kind") == "infinity":
            return cls(int(data["p"]), None)
        return cls(int(data["p"]), int(data["x"]), int(data["y"]))

    @classmethod
    def parse(cls, text: str, p: Optional[int] = None) -> "PTypicalBoolWitt":
        t = text.strip().replace(" ", "")
        m = re.fullmatch(r"(?:p=(\d+):)?(inf|\((\d+),(\d+)\))", t)
        if not m:
            raise InputError(f"not a p-typical Witt vector: {text!r}")
        prime = int(m.group(1)) if m.group(1) else p
        if prime is None:
            raise InputError("no prime given")
        if p is not None and prime != p:
            raise InputError(f"prime mismatch: {prime} vs {p}")
        if m.group(2) == "inf":
            return cls(prime, None)
        return cls(prime, int(m.group(3)), int(m.group(4)))


def sample_p(p: int, bound: int) -> list[PTypicalBoolWitt]:
    return [PTypicalBoolWitt(p, x, y) for x in range(bound + 1) for y in range(bound + 1)] + \
           [PTypicalBoolWitt(p, None)]


def apply_d(a: PTypicalBoolWitt) -> PTypicalBoolWitt:
    """d(a)_{i,j} = a_{i+1,j}: (x,y) -> (x-1,y), rounded up to 0."""
    return a if a.is_infinite else PTypicalBoolWitt(a.p, max(a.x - 1, 0), a.y)


def apply_psi(a: PTypicalBoolWitt) -> PTypicalBoolWitt:
    return a if a.is_infinite else PTypicalBoolWitt(a.p, a.x, max(a.y - 1, 0))


def leq_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> bool:
    if b.is_infinite:
        return True
    if a.is_infinite:
        return False
    return a.x <= b.x and a.y <= b.y


def leq_p_pointwise(a: PTypicalBoolWitt, b: PTypicalBoolWitt, k: int) -> bool:
    return all(a.entry(i, j) <= b.entry(i, j) for i, j in triangle(k))


# ---------------------------------------------------------------------------
# the listed laws, closed under decomposition and distributivity


def _max_nat_image(p: int) -> int:
    return 2 if p == 2 else 1


def from_nat_p(n: int, p: int) -> PTypicalBoolWitt:
    """Image of n under N -> W_(p)(B)."""
    if n < 0:
        raise InputError("n must be natural")
    return PTypicalBoolWitt(p, n, 0) if n <= _max_nat_image(p) else PTypicalBoolWitt(p, None)


def from_nat_p_by_iteration(n: int, p: int, steps: int = 16) -> PTypicalBoolWitt:
    """The same image read off a_{i,0} = [d^i(n) != 0], with psi fixing naturals.

    d is increasing on N, so once d(v) >= v >= 2 the iterates never reach 0
    and the image is infinity.
    """
    if n < 0:
        raise InputError("n must be natural")
    v = n
    for i in range(steps):
        if v == 0:
            return PTypicalBoolWitt(p, i, 0)
        nxt = d_nat(v, p)
        if v >= 2 and nxt >= v:
            return PTypicalBoolWitt(p, None)
        v = nxt
    raise IndeterminateError(f"d^i({n}) nonzero for i < {steps}")


@dataclass(frozen=True)
class Derivation:
    value: PTypicalBoolWitt
    rules: tuple[str, ...]


def _sum_of_nat_parts(x: int, xp: int, p: int) -> tuple[Optional[int], str]:
    """(x,0) + (x',0): the first coordinate, or None for infinity."""
    if x == 0 or xp == 0:
        return x + xp, "identity"
    if x <= _max_nat_image(p) and xp <= _max_nat_image(p):
        # both are images of naturals, and N -> W_(p)(B) is additive
        s = from_nat_p(x + xp, p)
        return (None if s.is_infinite else s.x), "(e)"
    if x >= 2 and xp >= 2:
        return None, "(f)"
    # one summand is 1, the other at least 2: bounded below by 1 + 2 = 3
    if from_nat_p(3, p).is_infinite:
        return None, "order+(e)"
    raise UnderdeterminedError(f"({x},0)+({xp},0) not forced")


def derive_add(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Derivation:
    p = _same_prime(a, b)
    if a.is_infinite or b.is_infinite:
        return Derivation(PTypicalBoolWitt(p, None), ("(i)",))
    x, rule = _sum_of_nat_parts(a.x, b.x, p)
    rules = ["(h)", rule, "(g)"]
    if x is None:
        return Derivation(PTypicalBoolWitt(p, None), tuple(rules + ["(i)"]))
    return Derivation(PTypicalBoolWitt(p, x, max(a.y, b.y)), tuple(rules))


def _nat_product(x: int, xp: int, p: int) -> tuple[Optional[int], str]:
    if x == 0 or xp == 0:
        return 0, "zero"
    if x == 1:
        return xp, "(e)"
    if xp == 1:
        return x, "(e)"
    return None, "(j)"


def derive_mul(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Derivation:
    """Expand both factors as (x,0) + (0,y) (or infinity) and add the four products."""
    p = _same_prime(a, b)
    zero = PTypicalBoolWitt(p, 0, 0)
    rules: list[str] = []

    def parts(w):
        if w.is_infinite:
            return [("inf", None)]
        return [("nat", w.x), ("ray", w.y)]

    def product(u, v) -> PTypicalBoolWitt:
        (ku, cu), (kv, cv) = u, v
        if ku == "inf" and kv == "inf":
            rules.append("order:inf*inf>=inf*1")
            return PTypicalBoolWitt(p, None)
        if kv == "inf":
            (ku, cu), (kv, cv) = (kv, cv), (ku, cu)
        if ku == "inf":
            if kv == "ray":
                rules.append("(m)")
                return PTypicalBoolWitt(p, 0, cv)
            if cv == 0:
                return zero
            rules.append("(n)")
            return PTypicalBoolWitt(p, None)
        if ku == "nat" and kv == "nat":
            x, rule = _nat_product(cu, cv, p)
            rules.append(rule)
            return PTypicalBoolWitt(p, None) if x is None else PTypicalBoolWitt(p, x, 0)
        if ku == "ray" and kv == "ray":
            rules.append("(k)")
            return PTypicalBoolWitt(p, 0, min(cu, cv))
        n, y = (cu, cv) if ku == "nat" else (cv, cu)
        if n == 0:
            return zero
        rules.append("(l)")
        return PTypicalBoolWitt(p, 0, y)

    total = zero
    for u in parts(a):
        for v in parts(b):
            total = derive_add(total, product(u, v)).value
    rules.append("distributivity")
    return Derivation(total, tuple(dict.fromkeys(rules)))


def add_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> PTypicalBoolWitt:
    return derive_add(a, b).value


def mul_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> PTypicalBoolWitt:
    return derive_mul(a, b).value


def _same_prime(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> int:
    if a.p != b.p:
        raise InputError(f"cannot combine p={a.p} with p={b.p}")
    return a.p


# ---------------------------------------------------------------------------
# symbolic d / psi calculus on N[X_{k,l}, Y_{k,l}]

# a variable is (side, k, l) with side 0 for X and 1 for Y; a monomial is a
# sorted tuple of (variable, exponent); a polynomial is a dict monomial -> coeff

Var = tuple[int, int, int]
Mono = tuple[tuple[Var, int], ...]


def _mono_mul(a: Mono, b: Mono) -> Mono:
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def poly_add(*polys: dict) -> dict:
    out: dict = {}
    for f in polys:
        for m, c in f.items():
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def poly_scale(f: dict, c: int) -> dict:
    return {m: c * v for m, v in f.items()} if c else {}


def poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return out


def poly_pow(f: dict, n: int) -> dict:
    out = {(): 1}
    for _ in range(n):
        out = poly_mul(out, f)
    return out


def variable(side: int, k: int, l: int) -> dict:
    return {(((side, k, l), 1),): 1}


def psi_poly(f: dict) -> dict:
    out: dict = {}
    for m, c in f.items():
        nm = tuple(sorted(((s, k, l + 1), e) for (s, k, l), e in m))
        out[nm] = out.get(nm, 0) + c
    return out


class Calculus:
    """d on polynomials for a fixed prime, memoised on monomials."""

    def __init__(self, p: int):
        _check_prime(p)
        self.p = p
        self._mono_memo: dict[Mono, dict] = {}

    def _exact_div(self, f: dict) -> dict:
        out = {}
        for m, c in f.items():
            if c % self.p:
                raise PropertyViolation(f"coefficient {c} not divisible by {self.p}")
            if c:
                out[m] = c // self.p
        return out

    def d_mono(self, m: Mono) -> dict:
        if m in self._mono_memo:
            return self._mono_memo[m]
        p = self.p
        if not m:
            out: dict = {}
        else:
            (v, e), rest = m[0], m[1:]
            if e == 1 and not rest:
                s, k, l = v
                out = variable(s, k + 1, l)
            else:
                # split off one factor of v and use the product rule
                a: Mono = ((v, 1),)
                b: Mono = (((v, e - 1),) if e > 1 else ()) + rest
                b = tuple(sorted(b))
                fa, fb = {a: 1}, {b: 1}
                da, db = self.d_mono(a), self.d_mono(b)
                out = poly_add(poly_mul(psi_poly(fa), db), poly_mul(da, poly_pow(fb, p)))
        self._mono_memo[m] = out
        return out

    def d(self, f: dict) -> dict:
        p = self.p
        linear = poly_add(*(poly_scale(self.d_mono(m), c) for m, c in f.items())) if f else {}
        cross = poly_pow(f, p)
        for m, c in f.items():
            mp = tuple((v, e * p) for v, e in m)
            cross[mp] = cross.get(mp, 0) - c
        return poly_add(linear, self._exact_div(cross))

    def d_iter(self, f: dict, i: int) -> dict:
        for _ in range(i):
            f = self.d(f)
        return f


@functools.lru_cache(maxsize=None)
def coproduct_poly(p: int, op: str, i: int, j: int) -> tuple:
    """Delta^op(d_{i,j}) as a polynomial in the X and Y variables."""
    calc = _calculus(p)
    if op == "add":
        base = poly_add(variable(0, 0, j), variable(1, 0, j))
    elif op == "mul":
        base = poly_mul(variable(0, 0, j), variable(1, 0, j))
    else:
        raise InputError(f"unknown operation {op!r}")
    return tuple(calc.d_iter(base, i).items())


@functools.lru_cache(maxsize=None)
def _calculus(p: int) -> Calculus:
    return Calculus(p)


def evaluate_bool(poly, a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> int:
    """Substitute X_{k,l} -> a_{k,l}, Y_{k,l} -> b_{k,l} in B."""
    sides = (a, b)
    for m, c in poly:
        if c and all(sides[s].entry(k, l) for (s, k, l), _ in m):
            return 1
    return 0


def triangle(k: int) -> list[tuple[int, int]]:
    """T_k = {(i, j) : i + j <= k}, ordered by i + j then i."""
    return [(i, s - i) for s in range(k + 1) for i in range(s + 1)]


def pairing_array(a: PTypicalBoolWitt, b: PTypicalBoolWitt, op: str, k: int) -> "TruncatedArray":
    p = _same_prime(a, b)
    return TruncatedArray(k, {(i, j): evaluate_bool(coproduct_poly(p, op, i, j), a, b)
                              for i, j in triangle(k)})


def identify_array(t: "TruncatedArray", p: int,
                   bound: Optional[tuple[int, int]] = None) -> PTypicalBoolWitt:
    """Read (x, y) off the zero set on T_k; see law_check_p_via_coproduct."""
    zeros = [ij for ij, bit in t.bits.items() if bit == 0]
    if zeros:
        x = min(i for i, _ in zeros)
        y = min(j for _, j in zeros)
        if x + y > t.k:
            raise PropertyViolation(f"zero set on T_{t.k} has no corner")
        expected = {(i, j) for i, j in triangle(t.k) if i >= x and j >= y}
        if set(zeros) != expected:
            raise PropertyViolation(f"zero set on T_{t.k} is not a quadrant")
        return PTypicalBoolWitt(p, x, y)
    if bound is None:
        if t.k < 2:
            raise IndeterminateError(f"no zeros on T_{t.k}: infinity or a corner beyond it")
        bound = (t.k // 2, t.k // 2)
    if bound[0] + bound[1] > t.k:
        raise IndeterminateError(f"no zeros on T_{t.k}, and T_{t.k} cannot rule out a corner up to {bound}")
    return PTypicalBoolWitt(p, None)


def law_check_p_via_coproduct(a: PTypicalBoolWitt, b: PTypicalBoolWitt, op: str, p: int,
                              window_k: Optional[int] = None,
                              bound: Optional[tuple[int, int]] = None) -> PTypicalBoolWitt:
    """a op b from the coproduct of d_{i,j}, read off T_k.

    A zero set on T_k identifies (x, y) exactly.  An empty zero set only
    shows there is no corner (x, y) with x + y <= k; it is reported as
    infinity when ``bound`` (default (k//2, k//2)) fits inside T_k, and is
    indeterminate otherwise.
    """
    if a.p != p or b.p != p:
        raise InputError("prime mismatch")
    k = feasible_k(p) if window_k is None else window_k
    if k > feasible_k(p):
        raise InputError(f"window k={k} beyond the feasibility limit {feasible_k(p)} for p={p}")
    return identify_array(pairing_array(a, b, op, k), p, bound)


def coproduct_tensor_symbolic(p: int, op: str, i: int, j: int) -> Tensor:
    """The polynomial mapped into m (x) m by X_{k,l} -> d_{k,l} (x) 1 and Y_{k,l} -> 1 (x) d_{k,l}."""
    acc: dict = {}
    for m, c in coproduct_poly(p, op, i, j):
        sides = [SymFunc({(): 1}), SymFunc({(): 1})]
        for (s, k, l), e in m:
            sides[s] = M.mono_product(sides[s], M.mono_power(d_ij(p, k, l), e))
        for lam, u in sides[0].items():
            for mu, v in sides[1].items():
                acc[(lam, mu)] = acc.get((lam, mu), 0) + c * u * v
    return Tensor(acc)


def coproduct_tensor_monomial(p: int, op: str, i: int, j: int) -> Tensor:
    """Delta^op(d_{i,j}) from its monomial expansion and the monomial coproducts."""
    cop = M.coproduct_add_m if op == "add" else M.coproduct_mul_m
    return M.tensor_linear(d_ij(p, i, j), cop)


# ---------------------------------------------------------------------------
# truncated arrays


@dataclass(frozen=True)
class TruncatedArray:
    k: int
    bits: dict

    def __post_init__(self):
        if set(self.bits) != set(triangle(self.k)):
            raise InputError(f"array must cover T_{self.k} exactly")
        if any(b not in (0, 1) for b in self.bits.values()):
            raise InputError("array entries are bits")

    def __hash__(self):
        return hash((self.k, tuple(sorted(self.bits.items()))))

    def is_valid(self) -> bool:
        """a_{i,j} = 0 iff a_{i,j+1} = a_{i+1,j} = 0, for i + j <= k-1."""
        for i, j in triangle(self.k - 1) if self.k >= 1 else []:
            zero = self.bits[(i, j)] == 0
            both = self.bits[(i, j + 1)] == 0 and self.bits[(i + 1, j)] == 0
            if zero != both:
                return False
        return True

    def restrict(self, k: int) -> "TruncatedArray":
        if k > self.k:
            raise InputError("cannot restrict to a larger triangle")
        return TruncatedArray(k, {ij: self.bits[ij] for ij in triangle(k)})

    def zero_blocks(self) -> int:
        """Number of connected groups of zeros (4-neighbour adjacency)."""
        zeros = {ij for ij, b in self.bits.items() if b == 0}
        seen: set = set()
        blocks = 0
        for z in sorted(zeros):
            if z in seen:
                continue
            blocks += 1
            stack = [z]
            while stack:
                i, j = stack.pop()
                if (i, j) in seen:
                    continue
                seen.add((i, j))
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb in zeros and nb not in seen:
                        stack.append(nb)
        return blocks

    def encode(self) -> str:
        """Row r lists a_{k-r,0}, ..., a_{k-r,r}; rows joined by ';'."""
        return ";".join("".join(str(self.bits[(self.k - r, j)]) for j in range(r + 1))
                        for r in range(self.k + 1))

    @classmethod
    def decode(cls, text: str) -> "TruncatedArray":
        rows = text.strip().split(";")
        k = len(rows) - 1
        bits = {}
        for r, row in enumerate(rows):
            if len(row) != r + 1 or any(ch not in "01" for ch in row):
                raise InputError(f"row {r} of {text!r} must have {r + 1} bits")
            for j, ch in enumerate(row):
                bits[(k - r, j)] = int(ch)
        return cls(k, bits)

    def __repr__(self):
        return f"T{self.k}[{self.encode()}]"


def _from_diagonal(k: int, diagonal: tuple[int, ...]) -> TruncatedArray:
    """The unique valid array with the given entries a_{i,k-i} on the last diagonal."""
    bits = {(i, k - i): diagonal[i] for i in range(k + 1)}
    for s in range(k - 1, -1, -1):
        for i in range(s + 1):
            j = s - i
            bits[(i, j)] = 1 if bits[(i, j + 1)] or bits[(i + 1, j)] else 0
    return TruncatedArray(k, bits)


MAX_TRUNCATION = 6


def enumerate_truncated(p: int, k: int) -> list[TruncatedArray]:
    """Every valid array on T_k.  Upper entries are forced by the last diagonal."""
    _check_prime(p)
    if not 0 <= k <= MAX_TRUNCATION:
        raise InputError(f"k must lie in 0..{MAX_TRUNCATION}")
    return [_from_diagonal(k, diag) for diag in itertools.product((0, 1), repeat=k + 1)]


def enumerate_truncated_brute(k: int) -> list[TruncatedArray]:
    """Oracle: all 2^|T_k| bit arrays filtered by the local condition."""
    cells = triangle(k)
    out = []
    for bits in itertools.product((0, 1), repeat=len(cells)):
        t = TruncatedArray(k, dict(zip(cells, bits)))
        if t.is_valid():
            out.append(t)
    return out


def lifts(t: TruncatedArray, k2: int, p: int = 2) -> list[TruncatedArray]:
    if k2 < t.k:
        raise InputError("lifts go to a larger triangle")
    return [u for u in enumerate_truncated(p, k2) if u.restrict(t.k) == t]


TWO_BLOCK_ARRAY = "0;11;110"


# ---------------------------------------------------------------------------
# W(B) -> W_(p)(B)


def from_big_witt(w: BoolWitt, p: int) -> PTypicalBoolWitt:
    _check_prime(p)
    if w.is_infinite or w.x > _max_nat_image(p):
        return PTypicalBoolWitt(p, None)
    z = 0
    while p ** z <= w.y:
        z += 1
    return PTypicalBoolWitt(p, w.x, z)


def from_big_witt_array(w: BoolWitt, p: int, k: Optional[int] = None) -> TruncatedArray:
    """w restricted to d_{i,j}: a bit is 1 iff w is 1 on some monomial constituent."""
    k = feasible_k(p) if k is None else k
    return TruncatedArray(k, {(i, j): (1 if any(w.evaluate(lam) for lam in d_ij(p, i, j)) else 0)
                              for i, j in triangle(k)})
