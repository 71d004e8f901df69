"""Brute-force nearest-codeword search for tiny parameters.

Nothing here calls a decoder; it only encodes every polynomial in the
message space and measures distances, so it can serve as ground truth.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from itertools import product
from math import comb
from typing import Iterator, Optional, Sequence

from .field import PrimeField
from .mcode import CodeParams, ReceivedWord, delta_mult, encode
from .mcode import delta_mult_varying
from .poly import MultiPoly, graded_exponents, shift_dense

DEFAULT_ENUM_CAP = 10 ** 6
CAP_ENV = "MULTCODE_ENUM_CAP"


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise ValueError(f"{CAP_ENV} must be positive")
    return cap


class EnumerationTooLarge(ValueError):
    pass


@dataclass
class PolySpace:
    """All polynomials of total degree <= d in m variables over GF(p)."""

    params: CodeParams
    cap: Optional[int] = None
    _encoded: Optional[list] = dc_field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.cap is None:
            self.cap = enumeration_cap()
        if self.size > self.cap:
            raise EnumerationTooLarge(
                f"{self.params.field.p}^{self.dim} = {self.size} polynomials exceed the cap {self.cap}")

    @property
    def dim(self) -> int:
        return comb(self.params.d + self.params.m, self.params.m)

    @property
    def size(self) -> int:
        return self.params.field.p ** self.dim

    def encodings(self) -> list:
        """``(P, Enc(P))`` for every P, computed once and cached."""
        if self._encoded is None:
            self._encoded = [(P, encode(P, self.params)) for P in enumerate_polys(self)]
        return self._encoded


def _odometer(p: int, length: int) -> Iterator[tuple]:
    # itertools.product varies its last slot fastest; reverse so slot 0 is fastest.
    for digits in product(range(p), repeat=length):
        yield digits[::-1]


def enumerate_polys(space: PolySpace) -> Iterator[MultiPoly]:
    """Every polynomial once; the coefficient of the first graded-lex
    monomial is the fastest-moving odometer digit."""
    pr = space.params
    monos = graded_exponents(pr.m, pr.d + 1)
    for digits in _odometer(pr.field.p, len(monos)):
        yield MultiPoly._raw(pr.field, pr.m, {e: c for e, c in zip(monos, digits) if c})


# ``enumerate`` is the public name; the alias keeps the builtin usable here.
enumerate = enumerate_polys


@dataclass(frozen=True)
class Nearest:
    poly: MultiPoly
    dist: int
    unique: bool

    def __iter__(self):
        return iter((self.poly, self.dist, self.unique))


def nearest_codeword(f: ReceivedWord, space: Optional[PolySpace] = None) -> Nearest:
    """Minimizer of ``Delta_mult(f, Enc(P))``; the earliest one in
    enumeration order wins ties and ``unique`` reports whether there was one."""
    if space is None:
        space = PolySpace(f.params)
    elif space.params != f.params:
        raise ValueError("word and polynomial space use different code parameters")
    best, best_d, count = None, None, 0
    for P, word in space.encodings():
        dist = delta_mult(f, word)
        if best_d is None or dist < best_d:
            best, best_d, count = P, dist, 1
        elif dist == best_d:
            count += 1
    return Nearest(best, best_d, count == 1)


def nearest_varying(field: PrimeField, points: Sequence[int], e: int,
                    svec: Sequence[int], h: Sequence) -> Nearest:
    """Univariate analogue with a per-point multiplicity vector."""
    if (field.p ** (e + 1)) > enumeration_cap():
        raise EnumerationTooLarge(f"{field.p}^{e + 1} polynomials exceed the cap")
    p = field.p
    best, best_d, count = None, None, 0
    for digits in _odometer(p, e + 1):
        coeffs = list(digits)
        enc = [shift_dense(coeffs, a, sa, p) for a, sa in zip(points, svec)]
        dist = delta_mult_varying(h, enc, svec)
        if best_d is None or dist < best_d:
            best, best_d, count = coeffs, dist, 1
        elif dist == best_d:
            count += 1
    return Nearest(MultiPoly.univariate(field, best), best_d, count == 1)
