"""Multiplicity codes on product sets: encoding and distances."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import Mapping, Sequence

from .field import PrimeField
from .poly import Jet, MultiPoly, eval_jet


@total_ordering
@dataclass(frozen=True, eq=False)
class HalfInt:
    """Exact half-integer, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        f = Fraction(value)
        if (2 * f).denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(2 * f))

    @classmethod
    def half(cls, numerator: int) -> HalfInt:
        """``numerator / 2``."""
        return cls(numerator)

    def _other(self, other):
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, (int, Fraction)):
            return HalfInt.of(other).twice
        return None

    def __eq__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice == t

    def __lt__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice < t

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __add__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else HalfInt(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else HalfInt(self.twice - t)

    def __neg__(self):
        return HalfInt(-self.twice)

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self):
        return self.twice / 2

    def __repr__(self):
        if self.twice % 2 == 0:
            return f"HalfInt({self.twice // 2})"
        return f"HalfInt({self.twice}/2)"


@dataclass(frozen=True)
class Grid:
    """Product set T_1 x ... x T_m; each axis is kept sorted."""

    field: PrimeField
    sets: tuple

    def __post_init__(self):
        sets = []
        for T in self.sets:
            vals = [int(t) for t in T]
            if any(not 0 <= t < self.field.p for t in vals):
                raise ValueError(f"evaluation set {vals} not inside {self.field}")
            if len(set(vals)) != len(vals):
                raise ValueError(f"evaluation set {vals} has repeated elements")
            sets.append(tuple(sorted(vals)))
        if not sets or not sets[0]:
            raise ValueError("grid needs at least one non-empty axis")
        if len({len(T) for T in sets}) != 1:
            raise ValueError("all evaluation sets must have the same size")
        object.__setattr__(self, "sets", tuple(sets))

    @classmethod
    def cube(cls, field: PrimeField, T: Sequence[int], m: int) -> Grid:
        return cls(field, tuple(tuple(T) for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def n(self) -> int:
        return len(self.sets[0])

    def points(self):
        """Grid points in lexicographic order."""
        return product(*self.sets)

    def tail(self) -> Grid:
        return Grid(self.field, self.sets[1:])


@dataclass(frozen=True)
class CodeParams:
    s: int
    d: int
    grid: Grid

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("multiplicity s must be >= 1")
        if self.d < 0:
            raise ValueError("degree bound d must be >= 0")
        if self.d >= self.s * self.grid.n:
            raise ValueError(f"need d < s*n, got d={self.d}, s*n={self.s * self.grid.n}")

    @property
    def field(self) -> PrimeField:
        return self.grid.field

    @property
    def m(self) -> int:
        return self.grid.m

    @property
    def n(self) -> int:
        return self.grid.n


@dataclass(frozen=True, eq=False)
class ReceivedWord:
    """A map from grid points to order-s jets in m variables."""

    params: CodeParams
    symbols: Mapping = dc_field(repr=False)

    def __post_init__(self):
        pr = self.params
        syms = dict(self.symbols)
        pts = list(pr.grid.points())
        if len(syms) != len(pts) or any(pt not in syms for pt in pts):
            raise ValueError("received word must carry exactly one jet per grid point")
        for pt in pts:
            j = syms[pt]
            if j.m != pr.m or j.order != pr.s or j.field != pr.field:
                raise ValueError(f"symbol at {pt} is not an order-{pr.s} jet in {pr.m} variables")
        object.__setattr__(self, "symbols", syms)

    def __getitem__(self, point):
        return self.symbols[tuple(point)]

    def points(self):
        return self.params.grid.points()

    def __eq__(self, other):
        if not isinstance(other, ReceivedWord):
            return NotImplemented
        return self.params == other.params and self.symbols == other.symbols

    @classmethod
    def _unchecked(cls, params, symbols):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "params", params)
        object.__setattr__(obj, "symbols", symbols)
        return obj

    def replace(self, updates: Mapping) -> ReceivedWord:
        syms = dict(self.symbols)
        syms.update({tuple(k): v for k, v in updates.items()})
        return ReceivedWord(self.params, syms)


def encode(P: MultiPoly, params: CodeParams) -> ReceivedWord:
    if P.field != params.field or P.m != params.m:
        raise ValueError("polynomial does not match the code's field / dimension")
    if P.total_degree() > params.d:
        raise ValueError(f"degree {P.total_degree()} exceeds the bound d={params.d}")
    syms = {pt: eval_jet(P, pt, params.s) for pt in params.grid.points()}
    return ReceivedWord._unchecked(params, syms)


def zero_word(params: CodeParams) -> ReceivedWord:
    z = Jet.zero(params.field, params.m, params.s)
    return ReceivedWord._unchecked(params, {pt: z for pt in params.grid.points()})


def dmin_s(R: Jet, s: int) -> int:
    """``min(s, lowest degree of a nonzero monomial of R)``; ``s`` for R = 0."""
    low = R.min_degree()
    return s if low is None else min(s, low)


def _pair_check(f: ReceivedWord, g: ReceivedWord):
    if f.params != g.params:
        raise ValueError("words come from different codes")


def delta_mult(f: ReceivedWord, g: ReceivedWord) -> int:
    _pair_check(f, g)
    s = f.params.s
    total = 0
    for pt, u in f.symbols.items():
        v = g.symbols[pt]
        if u != v:
            total += s - dmin_s(u - v, s)
    return total


def hamming(f: ReceivedWord, g: ReceivedWord) -> int:
    _pair_check(f, g)
    return sum(1 for pt, u in f.symbols.items() if u != g.symbols[pt])


def _low_order(coeffs_f: Sequence[int], coeffs_g: Sequence[int], cap: int) -> int:
    for k in range(cap):
        a = coeffs_f[k] if k < len(coeffs_f) else 0
        b = coeffs_g[k] if k < len(coeffs_g) else 0
        if a != b:
            return k
    return cap


def _univ_coeffs(j) -> list:
    if isinstance(j, Jet):
        if j.m != 1:
            raise ValueError("expected univariate jets")
        out = [0] * j.order
        for (k,), c in j.coeffs.items():
            out[k] = c
        return out
    return list(j)


def delta_mult_varying(f: Sequence, g: Sequence, svec: Sequence[int]) -> int:
    """Multiplicity distance between two univariate jet words (aligned
    sequences of Jets or coefficient lists) with per-point multiplicity."""
    if not len(f) == len(g) == len(svec):
        raise ValueError("words and multiplicity vector must have equal length")
    total = 0
    for u, v, sa in zip(f, g, svec):
        if sa < 0:
            raise ValueError("multiplicities must be non-negative")
        for j in (u, v):
            if isinstance(j, Jet) and j.order < sa:
                raise ValueError(f"multiplicity {sa} exceeds stored jet order {j.order}")
        total += sa - _low_order(_univ_coeffs(u), _univ_coeffs(v), sa)
    return total


def unique_decoding_radius(params: CodeParams) -> HalfInt:
    n, m, s, d = params.n, params.m, params.s, params.d
    return HalfInt(n ** (m - 1) * (s * n - d))


def within_radius(dist: int, params: CodeParams) -> bool:
    """Strict ``dist < n^(m-1) (s n - d) / 2``."""
    return 2 * dist < params.n ** (params.m - 1) * (params.s * params.n - params.d)
