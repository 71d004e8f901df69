"""Weighted univariate multiplicity decoding.

The input is a fractional word: a jet word ``g`` of order ``r`` together
with a confidence weight ``w(a, i)`` for every point ``a`` and derivative
level ``i`` (large weight = low confidence). The decoder searches over
step thresholds, erases low-confidence levels and hands the rest to the
varying-multiplicity decoder in :mod:`multcode.unidec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .field import PrimeField
from .mcode import HalfInt
from .poly import Jet, MultiPoly, shift_dense
from . import unidec


def _coeff_tuple(j, r: int) -> tuple:
    if isinstance(j, Jet):
        vals = [0] * r
        for (k,), c in j.coeffs.items():
            if k < r:
                vals[k] = c
        return tuple(vals)
    vals = [int(c) for c in j][:r]
    return tuple(vals + [0] * (r - len(vals)))


@dataclass(frozen=True)
class WeightedInstance:
    field: PrimeField
    points: tuple
    d: int
    s: int
    m: int
    ell: int
    r: int
    g: tuple   # per point: r coefficients of z^0..z^(r-1)
    w: tuple   # per point: r HalfInt weights

    def __post_init__(self):
        p = self.field.p
        pts = [int(a) for a in self.points]
        n = len(pts)
        if len(set(pts)) != n or n == 0:
            raise ValueError("evaluation points must be distinct and non-empty")
        if not 0 <= self.ell <= self.d:
            raise ValueError(f"local degree {self.ell} must lie in [0, d={self.d}]")
        if self.m < 2:
            raise ValueError("dimension parameter m must be at least 2")
        if self.r != self.s - (self.d - self.ell) // n or self.r < 1:
            raise ValueError(f"r must equal s - floor((d - ell)/n) = {self.s - (self.d - self.ell) // n} and be >= 1")
        if not len(self.g) == len(self.w) == n:
            raise ValueError("g and w need one entry per point")
        rows = sorted(zip(pts, self.g, self.w), key=lambda t: t[0])
        g = tuple(tuple(c % p for c in _coeff_tuple(row[1], self.r)) for row in rows)
        w = []
        for a, _, wa in rows:
            wa = tuple(HalfInt.of(x) for x in wa)
            if len(wa) != self.r:
                raise ValueError(f"point {a} needs {self.r} weights")
            for i, x in enumerate(wa):
                if x.twice < 0 or x.twice > self.cap_twice(i, n):
                    raise ValueError(f"weight w({a},{i}) = {x} outside [0, {HalfInt(self.cap_twice(i, n))}]")
            w.append(wa)
        object.__setattr__(self, "points", tuple(r[0] for r in rows))
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "w", tuple(w))
        object.__setattr__(self, "_w2", tuple(tuple(x.twice for x in wa) for wa in w))

    @property
    def n(self) -> int:
        return len(self.points)

    def cap_twice(self, i: int, n: Optional[int] = None) -> int:
        """Twice the weight cap at level i: n^(m-2) (n (s-i) - (d-ell))."""
        n = self.n if n is None else n
        return n ** (self.m - 2) * (n * (self.s - i) - (self.d - self.ell))

    @property
    def radius_twice(self) -> int:
        """Twice the acceptance radius n^m (s - d/n) / 2."""
        return self.n ** (self.m - 1) * (self.s * self.n - self.d)

    def omega(self) -> tuple:
        """Per-point maximum weight over the r levels."""
        return tuple(max(wa) for wa in self.w)


@dataclass(frozen=True)
class StepThreshold:
    theta: tuple

    def __post_init__(self):
        th = tuple(HalfInt.of(t) for t in self.theta)
        if any(a < b for a, b in zip(th, th[1:])):
            raise ValueError(f"step threshold must be non-increasing, got {th}")
        object.__setattr__(self, "theta", th)


def agreement_order(g_a, R: MultiPoly, a: int, r: int) -> int:
    """Largest ``j <= r`` with ``g_a = R(a + z) mod z^j``."""
    shifted = shift_dense(R.univariate_coeffs(), int(a), r, R.field.p)
    ga = _coeff_tuple(g_a, r)
    for k in range(r):
        if ga[k] != shifted[k]:
            return k
    return r


def _gamma_twice(inst: WeightedInstance, R: MultiPoly) -> int:
    p, r = inst.field.p, inst.r
    coeffs = R.univariate_coeffs()
    total = 0
    for a, ga, wa in zip(inst.points, inst.g, inst._w2):
        shifted = shift_dense(coeffs, a, r, p)
        i = next((k for k in range(r) if ga[k] != shifted[k]), r)
        prev = max(wa[:i], default=0)
        if i == r:
            total += prev
        else:
            total += max(inst.cap_twice(i) * 2 - wa[i], prev)
    return total


def gamma(inst: WeightedInstance, R: MultiPoly) -> HalfInt:
    """Weighted distance between the fractional word and ``R``.

    A point agreeing with R to order exactly i < r costs
    ``max(n^(m-1)((s-i) - (d-ell)/n) - w(a,i), max_{j<i} w(a,j))``; a point
    agreeing to full order r costs ``max_{j<r} w(a,j)``. Empty maxima are 0.
    """
    if R.m != 1 or R.field != inst.field:
        raise ValueError("R must be a univariate polynomial over the instance field")
    if R.total_degree() > inst.ell:
        raise ValueError(f"deg R = {R.total_degree()} exceeds ell = {inst.ell}")
    return HalfInt(_gamma_twice(inst, R))


def gamma_accepts(inst: WeightedInstance, R: MultiPoly) -> bool:
    return _gamma_twice(inst, R) < inst.radius_twice


def enumerate_thresholds(inst: WeightedInstance) -> list:
    """All non-increasing r-tuples over the observed per-point maxima plus
    the sentinel -1/2 (which erases every point)."""
    values = sorted({x.twice for x in inst.omega()} | {-1}, reverse=True)
    return [StepThreshold(tuple(HalfInt(t) for t in combo))
            for combo in combinations_with_replacement(values, inst.r)]


def retained_multiplicities(inst: WeightedInstance, theta: StepThreshold) -> tuple:
    """Number of leading levels kept at each point: ``#{i : omega(a) <= theta_i}``."""
    th = [t.twice for t in theta.theta]
    return tuple(sum(1 for t in th if om.twice <= t) for om in inst.omega())


def decode_with_threshold(inst: WeightedInstance):
    """Like :func:`decode` but also reports the first threshold whose
    candidate passed the radius check (None when falling back to 0)."""
    zero = MultiPoly.zero(inst.field, 1)
    tried: dict = {}
    for theta in enumerate_thresholds(inst):
        svec = retained_multiplicities(inst, theta)
        if svec in tried:
            continue
        if sum(svec) <= inst.ell:
            R = None
        else:
            R = unidec.decode(unidec.UniDecodeInstance(
                inst.field, inst.points, inst.ell, svec, inst.g))
        R = zero if R is None else R
        ok = _gamma_twice(inst, R) < inst.radius_twice
        tried[svec] = ok
        if ok:
            return R, theta
    return zero, None


def decode(inst: WeightedInstance) -> MultiPoly:
    """The unique ``R`` of degree <= ell within the weighted radius, else 0."""
    return decode_with_threshold(inst)[0]


def make_instance(field: PrimeField, points: Sequence[int], d: int, s: int, m: int,
                  ell: int, g, w, r: Optional[int] = None) -> WeightedInstance:
    n = len(points)
    if r is None:
        r = s - (d - ell) // n
    return WeightedInstance(field, tuple(points), d, s, m, ell, r, tuple(g), tuple(w))
