"""Welch-Berlekamp style decoding of univariate multiplicity codes whose
multiplicity may vary from point to point.

A point with multiplicity 0 is an erasure, so this doubles as an
errors-and-erasures Reed-Solomon decoder when every multiplicity is 0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .field import PrimeField
from .linsolve import kernel_vector_raw
from .poly import Jet, MultiPoly, divmod_dense, shift_dense, shift_powers, trim


def _jet_coeffs(j, order: int) -> tuple:
    if isinstance(j, Jet):
        if j.m != 1:
            raise ValueError("received symbols must be univariate jets")
        if j.order < order:
            raise ValueError(f"jet of order {j.order} cannot supply multiplicity {order}")
        vals = [0] * order
        for (k,), c in j.coeffs.items():
            if k < order:
                vals[k] = c
        return tuple(vals)
    vals = [int(c) for c in j][:order]
    return tuple(vals + [0] * (order - len(vals)))


@dataclass(frozen=True)
class UniDecodeInstance:
    """Decoder input: points ``T``, degree bound ``e``, multiplicities
    ``svec`` and received jets ``h`` (aligned with ``points``).

    Symbols are sorted by point and truncated to their multiplicity.
    """

    field: PrimeField
    points: tuple
    e: int
    svec: tuple
    h: tuple

    def __post_init__(self):
        p = self.field.p
        pts = [int(a) for a in self.points]
        if not len(pts) == len(self.svec) == len(self.h):
            raise ValueError("points, svec and h must have equal length")
        if len(set(pts)) != len(pts) or any(not 0 <= a < p for a in pts):
            raise ValueError("points must be distinct field elements")
        if self.e < 0:
            raise ValueError("degree bound must be non-negative")
        if any(int(sa) < 0 for sa in self.svec):
            raise ValueError("multiplicities must be non-negative")
        rows = sorted(zip(pts, (int(sa) for sa in self.svec), self.h), key=lambda t: t[0])
        object.__setattr__(self, "points", tuple(r[0] for r in rows))
        object.__setattr__(self, "svec", tuple(r[1] for r in rows))
        object.__setattr__(self, "h", tuple(tuple(c % p for c in _jet_coeffs(r[2], r[1])) for r in rows))
        if self.N <= self.e:
            raise ValueError(f"total multiplicity N={self.N} must exceed the degree bound e={self.e}")

    @property
    def N(self) -> int:
        return sum(self.svec)

    @property
    def D(self) -> int:
        return (self.N + self.e) // 2 + 1


def interpolation_matrix(inst: UniDecodeInstance) -> list:
    """Rows of the homogeneous system for ``B0(a+z) + h_a(z) B1(a+z) = 0 mod z^s(a)``.

    Rows run over points ascending then z-power ascending; columns are the
    coefficients of B0 (ascending degree) followed by those of B1.
    """
    p = inst.field.p
    D, e = inst.D, inst.e
    rows = []
    for a, sa, ha in zip(inst.points, inst.svec, inst.h):
        if sa == 0:
            continue
        H = shift_powers(a, D - 1, sa, p)  # H[j][k] = [z^k] (a+z)^j
        for k in range(sa):
            row = [H[j][k] for j in range(D)]
            for j in range(D - e):
                Hj = H[j]
                row.append(sum(ha[t] * Hj[k - t] for t in range(k + 1)) % p)
            rows.append(row)
    return rows


def interpolate(inst: UniDecodeInstance):
    """Nonzero ``(B0, B1)`` with ``deg B0 < D``, ``deg B1 < D - e``."""
    D, e = inst.D, inst.e
    v = kernel_vector_raw(interpolation_matrix(inst), 2 * D - e, inst.field.p)
    if v is None:
        raise RuntimeError("interpolation system has a trivial kernel; this cannot happen when 2D - e > N")
    B0, B1 = v[:D], v[D:]
    if not any(B1):
        raise RuntimeError("interpolation produced B1 = 0, contradicting the counting argument")
    return MultiPoly.univariate(inst.field, B0), MultiPoly.univariate(inst.field, B1)


def encode_varying(R: MultiPoly, points: Sequence[int], svec: Sequence[int]) -> list:
    """``Enc^(svec)(R)`` as a list of coefficient tuples."""
    coeffs = R.univariate_coeffs()
    p = R.field.p
    return [tuple(shift_dense(coeffs, a, sa, p)) for a, sa in zip(points, svec)]


def varying_distance(inst: UniDecodeInstance, R: MultiPoly) -> int:
    p = inst.field.p
    coeffs = R.univariate_coeffs()
    total = 0
    for a, sa, ha in zip(inst.points, inst.svec, inst.h):
        if sa == 0:
            continue
        enc = shift_dense(coeffs, a, sa, p)
        for k in range(sa):
            if enc[k] != ha[k]:
                total += sa - k
                break
    return total


def decode(inst: UniDecodeInstance) -> Optional[MultiPoly]:
    """The unique ``R`` with ``deg R <= e`` and ``2 * dist(h, Enc(R)) < N - e``,
    or None when no such polynomial exists."""
    p = inst.field.p
    B0, B1 = interpolate(inst)
    q, r = divmod_dense([(-c) % p for c in B0.univariate_coeffs()], B1.univariate_coeffs(), p)
    if r:
        return None
    if len(trim(q)) - 1 > inst.e:
        return None
    R = MultiPoly.univariate(inst.field, q)
    if 2 * varying_distance(inst, R) < inst.N - inst.e:
        return R
    return None


def decode_word(field: PrimeField, points, e: int, svec, h) -> Optional[MultiPoly]:
    return decode(UniDecodeInstance(field, tuple(points), e, tuple(svec), tuple(h)))
