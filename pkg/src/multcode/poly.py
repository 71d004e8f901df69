"""Sparse multivariate polynomials, truncated jets and Taylor shifts.

Exponent vectors are tuples of non-negative ints. Every enumeration of
exponents in this package uses graded-lex order: total degree ascending,
ties broken by ascending tuple comparison.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .field import FieldElement, PrimeField

Exponent = tuple


@lru_cache(maxsize=None)
def exponents_of_degree(m: int, k: int) -> tuple:
    """All exponent vectors of length ``m`` with ``|e|_1 == k``, ascending."""
    if m == 0:
        return ((),) if k == 0 else ()
    return tuple(sorted(e for e in product(range(k + 1), repeat=m) if sum(e) == k))


@lru_cache(maxsize=None)
def graded_exponents(m: int, below: int) -> tuple:
    """All ``e`` with ``|e|_1 < below`` in graded-lex order.

    For ``below = s`` this is the jet index set, of size C(s+m-1, m).
    """
    out = []
    for k in range(below):
        out.extend(exponents_of_degree(m, k))
    return tuple(out)


def _grlex_key(e):
    return (sum(e), e)


def _normalize(field: PrimeField, m: int, coeffs) -> dict:
    p = field.p
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    out: dict = {}
    for e, c in items:
        e = tuple(int(x) for x in e)
        if len(e) != m or any(x < 0 for x in e):
            raise ValueError(f"bad exponent {e} for {m} variables")
        if isinstance(c, FieldElement):
            if c.field != field:
                raise TypeError(f"coefficient from {c.field}, expected {field}")
            c = c.value
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


class MultiPoly:
    """Polynomial in ``m`` variables over a prime field, sparse form.

    Zero coefficients are never stored, so ``total_degree`` is exact (it is
    -1 for the zero polynomial).
    """

    __slots__ = ("field", "m", "coeffs")

    def __init__(self, field: PrimeField, m: int, coeffs=()):
        self.field = field
        self.m = m
        self.coeffs = _normalize(field, m, coeffs)

    @classmethod
    def _raw(cls, field, m, coeffs):
        obj = cls.__new__(cls)
        obj.field, obj.m, obj.coeffs = field, m, coeffs
        return obj

    @classmethod
    def zero(cls, field, m):
        return cls._raw(field, m, {})

    @classmethod
    def constant(cls, field, m, c):
        return cls(field, m, {(0,) * m: c})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, len(e), {tuple(e): c})

    @classmethod
    def variable(cls, field, m, i):
        e = [0] * m
        e[i] = 1
        return cls(field, m, {tuple(e): 1})

    @classmethod
    def univariate(cls, field, coeffs: Sequence[int]):
        """Build ``sum_k coeffs[k] x^k``."""
        return cls(field, 1, {(k,): c for k, c in enumerate(coeffs)})

    def univariate_coeffs(self) -> list:
        if self.m != 1:
            raise ValueError("not univariate")
        out = [0] * (self.total_degree() + 1)
        for (k,), c in self.coeffs.items():
            out[k] = c
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=-1)

    def coeff(self, e) -> int:
        return self.coeffs.get(tuple(e), 0)

    def terms(self):
        """(exponent, coefficient) pairs in graded-lex order."""
        return sorted(self.coeffs.items(), key=lambda t: _grlex_key(t[0]))

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return False
        if other.field != self.field or other.m != self.m:
            raise ValueError("polynomials live in different rings")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        p = self.field.p
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.field, self.m, out)

    def __neg__(self):
        p = self.field.p
        return MultiPoly._raw(self.field, self.m, {e: p - c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int):
        p = self.field.p
        c %= p
        if c == 0:
            return MultiPoly.zero(self.field, self.m)
        return MultiPoly._raw(self.field, self.m, {e: v * c % p for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(int(other))
        if not self._check(other):
            return NotImplemented
        p = self.field.p
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return MultiPoly._raw(self.field, self.m, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __call__(self, point: Sequence[int]) -> int:
        p = self.field.p
        point = [int(x) for x in point]
        if len(point) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(point)}")
        total = 0
        for e, c in self.coeffs.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * pow(x, k, p) % p
            total += t
        return total % p

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.m, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"MultiPoly(0 over {self.field})"
        names = ["x"] if self.m == 1 else [f"x{i + 1}" for i in range(self.m)]
        parts = []
        for e, c in reversed(self.terms()):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            parts.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return f"MultiPoly({' + '.join(parts)} over {self.field})"


def coeff_of(P: MultiPoly, e) -> FieldElement:
    return FieldElement(P.coeff(e), P.field)


class Jet:
    """Element of F[z_1..z_m] / <z>^order, stored sparsely.

    One code symbol of an order-``order`` multiplicity code.
    """

    __slots__ = ("field", "m", "order", "coeffs")

    def __init__(self, field: PrimeField, m: int, order: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.field = field
        self.m = m
        self.order = order
        self.coeffs = _normalize(field, m, coeffs)
        for e in self.coeffs:
            if sum(e) >= order:
                raise ValueError(f"exponent {e} outside jet of order {order}")

    @classmethod
    def _raw(cls, field, m, order, coeffs):
        obj = cls.__new__(cls)
        obj.field, obj.m, obj.order, obj.coeffs = field, m, order, coeffs
        return obj

    @classmethod
    def zero(cls, field, m, order):
        return cls._raw(field, m, order, {})

    @classmethod
    def from_vector(cls, field, m, order, values: Sequence[int]):
        """Inverse of :meth:`vector`."""
        idx = graded_exponents(m, order)
        if len(values) != len(idx):
            raise ValueError(f"expected {len(idx)} coefficients, got {len(values)}")
        p = field.p
        return cls._raw(field, m, order, {e: v % p for e, v in zip(idx, values) if v % p})

    def vector(self) -> list:
        """Coefficients over the full index set, graded-lex order."""
        return [self.coeffs.get(e, 0) for e in graded_exponents(self.m, self.order)]

    def items(self):
        return sorted(self.coeffs.items(), key=lambda t: _grlex_key(t[0]))

    def coeff(self, e) -> int:
        return self.coeffs.get(tuple(e), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_degree(self):
        """Lowest total degree carrying a nonzero coefficient (None for 0)."""
        return min((sum(e) for e in self.coeffs), default=None)

    def truncate(self, order: int) -> Jet:
        if order > self.order:
            raise ValueError(f"cannot raise jet order {self.order} to {order}")
        return Jet._raw(self.field, self.m, order,
                        {e: c for e, c in self.coeffs.items() if sum(e) < order})

    def _check(self, other):
        if not isinstance(other, Jet):
            return False
        if other.field != self.field or other.m != self.m or other.order != self.order:
            raise ValueError(
                f"jet mismatch: (m={self.m}, order={self.order}) vs (m={other.m}, order={other.order})"
            )
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        p = self.field.p
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Jet._raw(self.field, self.m, self.order, out)

    def __neg__(self):
        p = self.field.p
        return Jet._raw(self.field, self.m, self.order, {e: p - c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.field.p
            return Jet._raw(self.field, self.m, self.order,
                            {e: c * other % p for e, c in self.coeffs.items() if c * other % p})
        if not self._check(other):
            return NotImplemented
        p, s = self.field.p, self.order
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) >= s:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Jet._raw(self.field, self.m, s, {e: c for e, c in out.items() if c})

    def __call__(self, point: Sequence[int]) -> int:
        """Evaluate the stored truncated polynomial at ``z = point``."""
        return MultiPoly._raw(self.field, self.m, self.coeffs)(point)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.field == other.field and self.m == other.m
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.m, self.order, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"Jet(m={self.m}, order={self.order}, {dict(self.items())})"


def jet_add(u: Jet, v: Jet) -> Jet:
    return u + v


def jet_sub(u: Jet, v: Jet) -> Jet:
    return u - v


def jet_truncated_mul(u: Jet, v: Jet) -> Jet:
    return u * v


# -- dense univariate helpers (lists of ints, index = degree) -------------

def shift_dense(coeffs: Sequence[int], a: int, s: int, p: int) -> list:
    """Coefficients of ``P(a + z) mod z^s`` by Horner's rule, length ``s``."""
    out = [0] * s
    if s == 0:
        return out
    for c in reversed(coeffs):
        # out <- out * (a + z) + c, truncated
        for k in range(s - 1, 0, -1):
            out[k] = (out[k] * a + out[k - 1]) % p
        out[0] = (out[0] * a + c) % p
    return out


def shift_powers(a: int, top: int, s: int, p: int) -> list:
    """``[(a + z)^k mod z^s for k in 0..top]`` by repeated multiplication."""
    cur = [1] + [0] * (s - 1) if s else []
    out = [list(cur)]
    for _ in range(top):
        nxt = [0] * s
        for k in range(s):
            nxt[k] = (cur[k] * a + (cur[k - 1] if k else 0)) % p
        cur = nxt
        out.append(list(cur))
    return out


def trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def divmod_dense(num: Sequence[int], den: Sequence[int], p: int):
    num = trim([c % p for c in num])
    den = trim([c % p for c in den])
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) < len(den):
        return [], num
    inv_lead = pow(den[-1], -1, p)
    q = [0] * (len(num) - len(den) + 1)
    r = list(num)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(den) - 1] * inv_lead % p
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                r[k + j] = (r[k + j] - c * dj) % p
    return trim(q), trim(r[: len(den) - 1])


# -- jet evaluation ---------------------------------------------------------

def eval_jet(P: MultiPoly, a: Sequence, s: int) -> Jet:
    """``P(a + z) mod <z>^s``.

    Each variable is substituted as ``x_i -> a_i + z_i`` with powers of
    ``(a_i + z_i)`` built by repeated truncated multiplication, so no
    factorials appear and the result is valid in every characteristic.
    """
    if s < 1:
        raise ValueError("order must be at least 1")
    field, m, p = P.field, P.m, P.field.p
    a = [int(x) % p for x in a]
    if len(a) != m:
        raise ValueError(f"point has {len(a)} coordinates, polynomial has {m} variables")
    if m == 1:
        return Jet._raw(field, 1, s, {(k,): c for k, c in
                                      enumerate(shift_dense(P.univariate_coeffs(), a[0], s, p)) if c})
    tops = [0] * m
    for e in P.coeffs:
        for i, k in enumerate(e):
            if k > tops[i]:
                tops[i] = k
    pows = [shift_powers(a[i], tops[i], s, p) for i in range(m)]
    out: dict = {}
    for e, c in P.coeffs.items():
        term = {(0,) * m: c}
        for i, k in enumerate(e):
            if k == 0:
                continue
            u = pows[i][k]
            new: dict = {}
            for ee, cv in term.items():
                room = s - sum(ee)
                for j in range(min(room, s)):
                    uv = u[j]
                    if uv:
                        ne = ee[:i] + (j,) + ee[i + 1:]
                        new[ne] = (new.get(ne, 0) + cv * uv) % p
            term = new
            if not term:
                break
        for ee, cv in term.items():
            out[ee] = (out.get(ee, 0) + cv) % p
    return Jet._raw(field, m, s, {e: c for e, c in out.items() if c})


def taylor_shift_univ(P: MultiPoly, a, s: int) -> Jet:
    if P.m != 1:
        raise ValueError("taylor_shift_univ needs a univariate polynomial")
    return eval_jet(P, [int(a)], s)


def exact_divide(num: MultiPoly, den: MultiPoly):
    """Quotient ``num / den`` of univariate polynomials, or None when the
    division leaves a remainder."""
    if num.m != 1 or den.m != 1:
        raise ValueError("exact_divide works on univariate polynomials")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = divmod_dense(num.univariate_coeffs(), den.univariate_coeffs(), num.field.p)
    if r:
        return None
    return MultiPoly.univariate(num.field, q)


def random_poly(field: PrimeField, m: int, d: int, rng) -> MultiPoly:
    """Uniform polynomial of total degree <= d (``rng`` is a random.Random)."""
    p = field.p
    return MultiPoly._raw(field, m, {e: c for e in graded_exponents(m, d + 1)
                                     if (c := rng.randrange(p))})


def monomials_upto(m: int, d: int) -> Iterable:
    return graded_exponents(m, d + 1)
