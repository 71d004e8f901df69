"""Concatenated codes and generalized-minimum-distance decoding.

The outer code is Reed-Solomon over a prime field GF(p_out). Each outer
symbol is written as ``k`` base-q digits (least significant first) and
mapped through a linear inner code over GF(q). Decoding runs a brute-force
maximum-likelihood inner decoder per block, turns each block distance into
a confidence weight and then tries every erasure threshold with the
errors-and-erasures decoder of :mod:`multcode.unidec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .field import PrimeField, is_prime
from .poly import MultiPoly, shift_dense
from . import unidec

# Pairwise verification of the inner distance is skipped above this many labels.
VERIFY_LABEL_LIMIT = 1 << 10


@dataclass(frozen=True)
class ConcatCode:
    """``RS[GF(p_out), S, K]`` composed with an inner ``[n_in, k]_q`` code.

    ``d_in`` may be left as None, in which case it is computed. A declared
    value is checked against the used labels when there are at most
    ``VERIFY_LABEL_LIMIT`` of them.
    """

    p_out: int
    S: tuple
    K: int
    q: int
    generator: tuple
    d_in: Optional[int] = None

    def __post_init__(self):
        field = PrimeField(self.p_out)
        if not is_prime(self.q):
            raise ValueError(f"inner alphabet size {self.q} must be prime")
        S = tuple(int(a) for a in self.S)
        if len(set(S)) != len(S) or any(not 0 <= a < self.p_out for a in S):
            raise ValueError("outer evaluation set must be distinct elements of GF(p_out)")
        if not 1 <= self.K <= len(S):
            raise ValueError(f"need 1 <= K <= N, got K={self.K}, N={len(S)}")
        G = tuple(tuple(int(x) % self.q for x in row) for row in self.generator)
        if not G or len({len(row) for row in G}) != 1 or not G[0]:
            raise ValueError("generator must be a non-empty k x n_in matrix")
        k = len(G)
        if self.p_out > self.q ** k:
            raise ValueError(f"p_out={self.p_out} exceeds q^k={self.q ** k}; labels would collide")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "generator", G)
        object.__setattr__(self, "_field", field)
        book = tuple(self._inner_encode_raw(v) for v in range(self.p_out))
        object.__setattr__(self, "_codebook", book)
        if self.d_in is None or self.p_out <= VERIFY_LABEL_LIMIT:
            true_d = min((_hamming(u, v) for u, v in combinations(book, 2)), default=len(G[0]))
            if self.d_in is None:
                object.__setattr__(self, "d_in", true_d)
            elif self.d_in != true_d:
                raise ValueError(f"declared d_in={self.d_in} but the used labels have distance {true_d}")
        if self.d_in < 1:
            raise ValueError("inner code is not injective on the used labels")

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def N(self) -> int:
        return len(self.S)

    @property
    def D(self) -> int:
        return self.N - self.K + 1

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def n_in(self) -> int:
        return len(self.generator[0])

    def label(self, v: int) -> tuple:
        """Base-q digits of ``v``, least significant first, length k."""
        v = int(v) % self.p_out
        digits = []
        for _ in range(self.k):
            v, r = divmod(v, self.q)
            digits.append(r)
        return tuple(digits)

    def _inner_encode_raw(self, v: int) -> tuple:
        digits = self.label(v)
        q = self.q
        return tuple(sum(c * row[j] for c, row in zip(digits, self.generator)) % q
                     for j in range(self.n_in))

    def inner_encode(self, v: int) -> tuple:
        return self._codebook[int(v) % self.p_out]

    def outer_encode(self, msg: Sequence[int]) -> list:
        if len(msg) != self.K:
            raise ValueError(f"message must have K={self.K} symbols")
        coeffs = [int(c) % self.p_out for c in msg]
        return [shift_dense(coeffs, a, 1, self.p_out)[0] for a in self.S]


@dataclass(frozen=True)
class GmdReceived:
    """N blocks of length n_in over [q]."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(int(x) for x in b) for b in self.blocks))

    def check(self, code: ConcatCode) -> None:
        if len(self.blocks) != code.N:
            raise ValueError(f"expected {code.N} blocks, got {len(self.blocks)}")
        for b in self.blocks:
            if len(b) != code.n_in or any(not 0 <= x < code.q for x in b):
                raise ValueError(f"block {b} is not a length-{code.n_in} word over [{code.q}]")

    def flat(self) -> tuple:
        return tuple(x for b in self.blocks for x in b)


def _hamming(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def concat_encode(msg: Sequence[int], code: ConcatCode) -> GmdReceived:
    return GmdReceived(tuple(code.inner_encode(v) for v in code.outer_encode(msg)))


def inner_ml_decode(block: Sequence[int], code: ConcatCode):
    """Nearest used inner codeword as ``(symbol, distance)``; ties go to the
    smallest symbol."""
    block = tuple(block)
    best, best_d = 0, None
    for v, cw in enumerate(code._codebook):
        dist = _hamming(cw, block)
        if best_d is None or dist < best_d:
            best, best_d = v, dist
    return best, best_d


def block_weights(f: GmdReceived, code: ConcatCode):
    """Inner decisions and integer weights ``W(i) = min(2 * dist_i, d_in)``."""
    decided = [inner_ml_decode(b, code) for b in f.blocks]
    return [sym for sym, _ in decided], [min(2 * dist, code.d_in) for _, dist in decided]


def gmd_decode(f: GmdReceived, code: ConcatCode) -> Optional[list]:
    """The K message symbols whose concatenated codeword is within Hamming
    distance ``< D * d_in / 2`` of ``f``, or None."""
    f.check(code)
    symbols, W = block_weights(f, code)
    flat = f.flat()
    e = code.K - 1
    tried = set()
    for t in sorted(set(W) | {-1}):
        svec = tuple(1 if w <= t else 0 for w in W)
        if sum(svec) <= e or svec in tried:
            continue
        tried.add(svec)
        R = unidec.decode(unidec.UniDecodeInstance(
            code.field, code.S, e, svec, tuple((sym,) for sym in symbols)))
        if R is None:
            continue
        msg = R.univariate_coeffs()[:code.K]
        msg += [0] * (code.K - len(msg))
        if 2 * _hamming(concat_encode(msg, code).flat(), flat) < code.D * code.d_in:
            return msg
    return None


def parity_example() -> ConcatCode:
    """GF(3) outer RS with N=3, K=1 over the binary [3,2,2] parity code."""
    return ConcatCode(3, (0, 1, 2), 1, 2, ((1, 0, 1), (0, 1, 1)), d_in=2)
