"""Symmetric functions over N in the monomial basis.

The product m_lam * m_mu is computed by enumerating the ways of pairing the
parts of lam with the parts of mu (either side may pair with an implicit
zero).  Each pairing gives the constituent obtained by sorting the pair
sums; the number of positional arrangements realising that sorted vector is
the multinomial correction applied in ``_pairing_weight``.

Independent routes kept for regression:

* ``mono_product_oracle`` multiplies honest polynomials in finitely many
  variables and re-collects monomials;
* ``coproduct_add_oracle`` / ``coproduct_mul_oracle`` expand in two
  alphabets;
* ``plethysm_by_substitution`` substitutes the monomials of the inner
  function as a new alphabet.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from . import partitions as P
from .errors import InputError, PropertyViolation, WindowError
from .symfunc import MONOMIAL, SymFunc, Tensor, mono

Partition = P.Partition


def min_vars_for_product(f: SymFunc, g: SymFunc) -> int:
    """Variables needed so that no constituent of f*g is lost on collection."""
    return (f.degree() or 0) + (g.degree() or 0)


def e(n: int) -> SymFunc:
    """Elementary symmetric function e_n = m_{1^n}."""
    if n < 0:
        raise InputError("e(n) needs n >= 0")
    return mono(P.rect(1, n))


def psi(n: int) -> SymFunc:
    """Power sum psi_n = m_(n)."""
    if n < 1:
        raise InputError("psi(n) needs n >= 1")
    return mono((n,))


# ---------------------------------------------------------------------------
# products


def _pairings(lam: Partition, mu: Partition) -> Iterator[Counter]:
    """Multisets of pairs (a, b) matching the parts of lam and mu, zeros allowed."""
    lam_vals = sorted(P.multiplicities(lam).items(), reverse=True)
    mu_vals = sorted(P.multiplicities(mu).items(), reverse=True)

    def place(bi: int, avail: list[int], acc: Counter):
        if bi == len(mu_vals):
            out = Counter(acc)
            for (a, _), left in zip(lam_vals, avail):
                if left:
                    out[(a, 0)] += left
            yield out
            return
        b, count = mu_vals[bi]
        yield from split(bi, b, count, 0, avail, acc)

    def split(bi, b, count, ai, avail, acc):
        # distribute `count` copies of b over the lam values ai.. and zero
        if ai == len(lam_vals):
            acc2 = Counter(acc)
            if count:
                acc2[(0, b)] += count
            yield from place(bi + 1, avail, acc2)
            return
        a = lam_vals[ai][0]
        for k in range(min(count, avail[ai]), -1, -1):
            acc2 = acc
            if k:
                acc2 = Counter(acc)
                acc2[(a, b)] += k
            avail2 = avail
            if k:
                avail2 = list(avail)
                avail2[ai] -= k
            yield from split(bi, b, count - k, ai + 1, avail2, acc2)

    yield from place(0, [c for _, c in lam_vals], Counter())


def _pairing_weight(pairs: Counter) -> tuple[Partition, int]:
    sums: Counter = Counter()
    for (a, b), k in pairs.items():
        sums[a + b] += k
    weight = 1
    for v, k in sums.items():
        weight *= math.factorial(k)
    for k in pairs.values():
        weight //= math.factorial(k)
    nu = tuple(sorted((v for v, k in sums.items() for _ in range(k)), reverse=True))
    return nu, weight


@functools.lru_cache(maxsize=None)
def _basis_product(lam: Partition, mu: Partition) -> tuple:
    acc: dict[Partition, int] = {}
    for pairs in _pairings(lam, mu):
        nu, w = _pairing_weight(pairs)
        acc[nu] = acc.get(nu, 0) + w
    return tuple(acc.items())


def basis_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Coefficients of m_lam * m_mu as a plain dict."""
    if lam > mu:
        lam, mu = mu, lam
    return dict(_basis_product(lam, mu))


def constituents(lam: Partition, mu: Partition) -> list[Partition]:
    return list(basis_product(lam, mu))


def mono_product(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != MONOMIAL or g.basis != MONOMIAL:
        raise InputError("mono_product needs monomial-basis inputs")
    acc: dict[Partition, int] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            for nu, c in basis_product(lam, mu).items():
                acc[nu] = acc.get(nu, 0) + a * b * c
    return SymFunc(acc)


def mono_power(f: SymFunc, k: int) -> SymFunc:
    out = mono(())
    for _ in range(k):
        out = mono_product(out, f)
    return out


# ---------------------------------------------------------------------------
# polynomial oracle


def distinct_permutations(vec: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    counts = Counter(vec)
    n = len(vec)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


def expand_polynomial(f: SymFunc, nvars: int) -> dict[tuple[int, ...], int]:
    """f as an honest polynomial in nvars variables (exponent vector -> coefficient)."""
    poly: dict[tuple[int, ...], int] = {}
    for lam, c in f.items():
        if len(lam) > nvars:
            continue
        for vec in distinct_permutations(lam + (0,) * (nvars - len(lam))):
            poly[vec] = poly.get(vec, 0) + c
    return poly


def collect_monomials(poly: dict[tuple[int, ...], int]) -> SymFunc:
    """Read off m-coefficients from the weakly decreasing exponent vectors."""
    acc = {}
    for vec, c in poly.items():
        if all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1)):
            if c < 0:
                raise PropertyViolation(f"negative coefficient {c} at {vec}")
            acc[P.strip(vec)] = c
    return SymFunc(acc)


def poly_mul(p: dict, q: dict, keep: Optional[Callable] = None) -> dict:
    out: dict = {}
    for a, x in p.items():
        for b, y in q.items():
            v = tuple(i + j for i, j in zip(a, b))
            if keep is not None and not keep(v):
                continue
            out[v] = out.get(v, 0) + x * y
    return out


def mono_product_oracle(f: SymFunc, g: SymFunc, nvars: int) -> SymFunc:
    need = min_vars_for_product(f, g)
    if nvars < max(need, 1):
        raise WindowError(f"oracle needs at least {max(need, 1)} variables, got {nvars}")
    return collect_monomials(poly_mul(expand_polynomial(f, nvars), expand_polynomial(g, nvars)))


# ---------------------------------------------------------------------------
# coproducts


def _sub_multisets(lam: Partition) -> Iterator[tuple[Partition, Partition]]:
    items = sorted(P.multiplicities(lam).items(), reverse=True)

    def rec(i, left, right):
        if i == len(items):
            yield P.from_vector(left), P.from_vector(right)
            return
        v, k = items[i]
        for j in range(k + 1):
            yield from rec(i + 1, left + [v] * j, right + [v] * (k - j))

    yield from rec(0, [], [])


def coproduct_add_m(lam) -> Tensor:
    """Delta+(m_lam): sum of m_mu (x) m_nu over splittings of the parts of lam."""
    lam = P.make(lam)
    return Tensor({pair: 1 for pair in _sub_multisets(lam)})


def coproduct_add_oracle(lam, nvars: int) -> Tensor:
    """Expand m_lam in the alphabet x_1..x_n, y_1..y_n and collect both sides."""
    lam = P.make(lam)
    if nvars < len(lam):
        raise InputError(f"need at least {len(lam)} variables per alphabet")
    acc: dict = {}
    for vec in distinct_permutations(lam + (0,) * (2 * nvars - len(lam))):
        xs, ys = vec[:nvars], vec[nvars:]
        if _is_sorted(xs) and _is_sorted(ys):
            key = (P.strip(xs), P.strip(ys))
            acc[key] = acc.get(key, 0) + 1
    return Tensor(acc)


def _is_sorted(v) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def _tensor_add(acc: dict, t: dict, scale: int) -> None:
    for k, c in t.items():
        acc[k] = acc.get(k, 0) + scale * c


@functools.lru_cache(maxsize=None)
def _coproduct_mul(lam: Partition) -> tuple:
    if len(lam) <= 1:
        return (((lam, lam), 1),)
    # m_(a) m_rho = mult_a(lam) m_lam + (constituents of smaller length)
    a = lam[0]
    rho = lam[1:]
    mult = lam.count(a)
    left = dict(_coproduct_mul(rho))
    acc: dict = {}
    for (mu, nu), c in left.items():
        for mu2, x in basis_product((a,), mu).items():
            for nu2, y in basis_product((a,), nu).items():
                key = (mu2, nu2)
                acc[key] = acc.get(key, 0) + c * x * y
    for nu, c in basis_product((a,), rho).items():
        if nu != lam:
            _tensor_add(acc, dict(_coproduct_mul(nu)), -c)
    out = []
    for key, c in acc.items():
        if c % mult:
            raise PropertyViolation(f"non-integral coproduct coefficient for {lam}")
        c //= mult
        if c < 0:
            raise PropertyViolation(f"negative coproduct coefficient for {lam}")
        if c:
            out.append((key, c))
    return tuple(out)


def coproduct_mul_m(lam, nvars: Optional[int] = None) -> Tensor:
    """Delta-x(m_lam), the substitution x_i -> x_i y_j collected in both alphabets.

    Computed from multiplicativity of Delta-x and Delta-x(m_(n)) = m_(n) (x) m_(n),
    peeling one part at a time.  ``nvars``, if given, is the number of
    variables per alphabet the caller has in mind; it must be at least
    size(lam) or constituents would be truncated.
    """
    lam = P.make(lam)
    if nvars is not None and nvars < sum(lam):
        raise InputError(f"need at least {sum(lam)} variables per alphabet")
    return Tensor(dict(_coproduct_mul(lam)))


def coproduct_mul_oracle(lam, nvars: int) -> Tensor:
    """Substitute the n*n alphabet x_i y_j into m_lam and collect."""
    lam = P.make(lam)
    if nvars < sum(lam):
        raise InputError(f"need at least {sum(lam)} variables per alphabet")
    acc: dict = {}
    cells = nvars * nvars
    if len(lam) > cells:
        return Tensor({})
    for vec in distinct_permutations(lam + (0,) * (cells - len(lam))):
        rows = [0] * nvars
        cols = [0] * nvars
        for idx, v in enumerate(vec):
            if v:
                rows[idx // nvars] += v
                cols[idx % nvars] += v
        if _is_sorted(rows) and _is_sorted(cols):
            key = (P.strip(rows), P.strip(cols))
            acc[key] = acc.get(key, 0) + 1
    return Tensor(acc)


def tensor_linear(f: SymFunc, cop: Callable[[Partition], Tensor]) -> Tensor:
    acc: dict = {}
    for lam, c in f.items():
        _tensor_add(acc, cop(lam), c)
    return Tensor(acc)


def counit_add(lam: Partition) -> int:
    return 1 if lam == () else 0


# ---------------------------------------------------------------------------
# plethysm


def _truncate(acc: dict, degcap: int) -> dict:
    return {k: v for k, v in acc.items() if v and sum(k) <= degcap}


def _signed_product(f: dict, g: dict, degcap: int) -> dict:
    acc: dict = {}
    for lam, a in f.items():
        for mu, b in g.items():
            if sum(lam) + sum(mu) > degcap:
                continue
            for nu, c in basis_product(lam, mu).items():
                acc[nu] = acc.get(nu, 0) + a * b * c
    return {k: v for k, v in acc.items() if v}


def _adams(f: dict, r: int, degcap: int) -> dict:
    return {P.scale(r, lam): c for lam, c in f.items() if r * sum(lam) <= degcap}


def _augmented(comp: tuple[int, ...], inner: dict, degcap: int, memo: dict) -> dict:
    """Sum over distinct indices of prod y_i^comp_i, with y the inner alphabet."""
    comp = tuple(sorted(comp, reverse=True))
    if comp in memo:
        return memo[comp]
    if not comp:
        res = {(): 1}
    else:
        first, rest = comp[0], comp[1:]
        res = _signed_product(_adams(inner, first, degcap), _augmented(rest, inner, degcap, memo), degcap)
        for k in range(len(rest)):
            bumped = list(rest)
            bumped[k] += first
            for nu, c in _augmented(tuple(bumped), inner, degcap, memo).items():
                res[nu] = res.get(nu, 0) - c
        res = {k: v for k, v in res.items() if v}
    memo[comp] = res
    return res


def plethysm_expand(outer: SymFunc, inner: SymFunc, nvars: Optional[int] = None,
                    degcap: int = 8) -> SymFunc:
    """outer o inner, truncated to total degree <= degcap.

    The inner function's monomials form the new alphabet; power sums of that
    alphabet are Adams operations of ``inner``, and each m_lam of the outer
    function is rebuilt from them through augmented monomials.  All
    arithmetic stays in the monomial basis, so the answer is exact in
    infinitely many variables.  If ``nvars`` is given it must be at least
    ``degcap`` (the longest partition of size degcap has degcap parts).
    """
    if outer.basis != MONOMIAL or inner.basis != MONOMIAL:
        raise InputError("plethysm needs monomial-basis inputs")
    if not inner:
        raise InputError("inner function must be nonzero")
    if nvars is not None and nvars < degcap:
        raise WindowError(f"{nvars} variables cannot represent degree {degcap}")
    inner_d = dict(inner.items())
    memo: dict = {}
    acc: dict = {}
    for lam, c in outer.items():
        aug = _augmented(lam, inner_d, degcap, memo)
        denom = 1
        for k in P.multiplicities(lam).values():
            denom *= math.factorial(k)
        for nu, v in aug.items():
            acc[nu] = acc.get(nu, 0) + Fraction(c * v, denom)
    out = {}
    for nu, v in acc.items():
        if v.denominator != 1 or v < 0:
            raise PropertyViolation(f"plethysm produced coefficient {v} at {nu}")
        if v:
            out[nu] = int(v)
    return SymFunc(_truncate(out, degcap))


def plethysm_by_substitution(outer: SymFunc, inner: SymFunc, nvars: int, degcap: int) -> SymFunc:
    """Literal substitution oracle: list inner's monomials, feed them to outer.

    Slow; only for small degrees.  Monomials of degree above degcap are
    dropped as soon as they appear.
    """
    if nvars < degcap:
        raise WindowError(f"{nvars} variables cannot represent degree {degcap}")
    alphabet: list[tuple[int, ...]] = []
    for vec, c in expand_polynomial(inner, nvars).items():
        alphabet.extend([vec] * c)
    keep = lambda v: sum(v) <= degcap
    total: dict = {}
    for lam, c in outer.items():
        # m_lam(alphabet): choose distinct alphabet positions for the distinct parts
        for vec in _injective_monomials(lam, alphabet, nvars, degcap):
            total[vec] = total.get(vec, 0) + c
    return SymFunc({k: v for k, v in collect_monomials(total).items() if sum(k) <= degcap})


def _injective_monomials(lam: Partition, alphabet: list, nvars: int, degcap: int):
    n = len(alphabet)
    groups = sorted(P.multiplicities(lam).items(), reverse=True)
    zero = (0,) * nvars

    def power(vec, k):
        return tuple(k * x for x in vec)

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def rec(gi, used: frozenset, acc):
        if sum(acc) > degcap:
            return
        if gi == len(groups):
            yield acc
            return
        part, k = groups[gi]
        yield from choose(gi, part, k, 0, used, acc)

    def choose(gi, part, k, start, used, acc):
        if k == 0:
            yield from rec(gi + 1, used, acc)
            return
        for i in range(start, n):
            if i not in used:
                yield from choose(gi, part, k - 1, i + 1, used | {i}, add(acc, power(alphabet[i], part)))

    yield from rec(0, frozenset(), zero)
