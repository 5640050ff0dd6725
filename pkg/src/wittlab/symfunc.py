"""Value types for symmetric functions and tensors with natural-number coefficients."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from . import partitions as P
from .errors import InputError

MONOMIAL = "monomial"
SCHUR = "schur"


def sort_key(lam: P.Partition):
    """Canonical order: by size, then reverse lexicographic."""
    return (sum(lam), tuple(-p for p in lam))


class SymFunc(Mapping):
    """Finite N-linear combination of basis elements indexed by partitions.

    Zero coefficients are never stored, so the empty combination is the zero
    function.  Instances are immutable and hashable.
    """

    __slots__ = ("_c", "basis", "_h")

    def __init__(self, coeffs: Mapping[P.Partition, int] | Iterable = (), basis: str = MONOMIAL):
        if basis not in (MONOMIAL, SCHUR):
            raise InputError(f"unknown basis {basis!r}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[P.Partition, int] = {}
        for lam, c in items:
            if not isinstance(c, int) or c < 0:
                raise InputError(f"coefficient of {lam} must be a natural number, got {c!r}")
            if c:
                lam = P.make(lam)
                acc[lam] = acc.get(lam, 0) + c
        self._c = dict(sorted(acc.items(), key=lambda kv: sort_key(kv[0])))
        self.basis = basis
        self._h = None

    @classmethod
    def basis_element(cls, lam, basis: str = MONOMIAL) -> "SymFunc":
        return cls({P.make(lam): 1}, basis)

    def __getitem__(self, lam):
        return self._c.get(tuple(lam), 0)

    def __iter__(self) -> Iterator[P.Partition]:
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self._c == other._c

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.basis, tuple(self._c.items())))
        return self._h

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._same_basis(other)
        acc = dict(self._c)
        for lam, c in other.items():
            acc[lam] = acc.get(lam, 0) + c
        return SymFunc(acc, self.basis)

    def __rmul__(self, k: int) -> "SymFunc":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return SymFunc({lam: k * c for lam, c in self.items()}, self.basis)

    def _same_basis(self, other):
        if other.basis != self.basis:
            raise InputError("cannot combine functions in different bases")

    def degree(self):
        """Largest size of a basis element; ``None`` for the zero function."""
        return max((sum(lam) for lam in self._c), default=None)

    def support(self) -> list[P.Partition]:
        return list(self._c)

    def __repr__(self):
        if not self._c:
            return "0"
        sym = "m" if self.basis == MONOMIAL else "s"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + f"{sym}{P.fmt(lam)}" for lam, c in self._c.items()
        )

    def to_json(self) -> dict:
        out: dict = {P.fmt(lam): c for lam, c in self._c.items()}
        if self.basis == SCHUR:
            out["basis"] = "schur"
        return out

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        data = dict(data)
        basis = SCHUR if data.pop("basis", "monomial") == "schur" else MONOMIAL
        return cls({P.parse(k): v for k, v in data.items()}, basis)


def mono(lam) -> SymFunc:
    return SymFunc.basis_element(lam, MONOMIAL)


def schur(lam) -> SymFunc:
    return SymFunc.basis_element(lam, SCHUR)


def zero(basis: str = MONOMIAL) -> SymFunc:
    return SymFunc({}, basis)


class Tensor(Mapping):
    """Finite N-linear combination of pairs of basis elements."""

    __slots__ = ("_c", "basis")

    def __init__(self, coeffs: Mapping | Iterable = (), basis: str = MONOMIAL):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for (lam, mu), c in items:
            if not isinstance(c, int) or c < 0:
                raise InputError(f"tensor coefficient must be natural, got {c!r}")
            if c:
                key = (P.make(lam), P.make(mu))
                acc[key] = acc.get(key, 0) + c
        self._c = dict(sorted(acc.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1]))))
        self.basis = basis

    def __getitem__(self, key):
        lam, mu = key
        return self._c.get((tuple(lam), tuple(mu)), 0)

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.basis == other.basis and self._c == other._c

    def __hash__(self):
        return hash((self.basis, tuple(self._c.items())))

    def swap(self) -> "Tensor":
        return Tensor({(mu, lam): c for (lam, mu), c in self.items()}, self.basis)

    def __repr__(self):
        if not self._c:
            return "0"
        sym = "m" if self.basis == MONOMIAL else "s"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + f"{sym}{P.fmt(a)}(x){sym}{P.fmt(b)}"
            for (a, b), c in self._c.items()
        )

    def to_json(self) -> list:
        return [[P.fmt(a), P.fmt(b), c] for (a, b), c in self._c.items()]

    @classmethod
    def from_json(cls, data, basis: str = MONOMIAL) -> "Tensor":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(P.parse(a), P.parse(b)): c for a, b, c in data}, basis)
