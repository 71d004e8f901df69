"""Unique decoding of m-variate multiplicity codes on product sets.

The message polynomial is peeled one x_1-layer at a time,

    P = sum_ell sum_{|e'| = d - ell} P_{ell,e'}(x_1) * x'^{e'},

where ``x' = (x_2, ..., x_m)``. In iteration ``ell`` every column
``x_1 = a`` and derivative level ``i`` of the residual word is decoded as an
(m-1)-variate code (a univariate one when m = 2). The leading coefficients
of those column decodings form fractional words from which the weighted
decoder extracts each ``P_{ell,e'}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .mcode import (CodeParams, HalfInt, ReceivedWord, delta_mult, encode,
                    within_radius)
from .poly import Jet, MultiPoly, eval_jet, exponents_of_degree
from . import unidec, wdec


@dataclass
class LayerState:
    """Mutable decoder state: the residual ``f - Enc(sum of recovered layers)``
    and the layers found so far, keyed by ``(ell, e_rest)``."""

    ell: int
    residual: dict
    recovered: dict = field(default_factory=dict)

    def partial_sum(self, field_, m: int) -> MultiPoly:
        coeffs = {}
        for (_, e_rest), R in self.recovered.items():
            for (k,), c in R.coeffs.items():
                coeffs[(k,) + e_rest] = c
        return MultiPoly._raw(field_, m, coeffs)


@dataclass
class LayerTrace:
    """What the weighted decoder saw while recovering one ``P_{ell,e'}``."""

    ell: int
    e_rest: tuple
    instance: wdec.WeightedInstance
    result: MultiPoly
    threshold: Optional[wdec.StepThreshold]


def slice(f, a: int, i: int) -> dict:
    """Column ``x_1 = a`` at z_1-degree ``i`` of a jet word.

    ``f`` is a ReceivedWord or a ``{point: Jet}`` mapping of order ``s``.
    Returns ``{rest_of_point: Jet}`` with jets of order ``s - i`` in the
    remaining m - 1 variables.
    """
    symbols = f.symbols if isinstance(f, ReceivedWord) else f
    a = int(a)
    out = {}
    for pt, jet in symbols.items():
        if pt[0] != a:
            continue
        s = jet.order
        if not 0 <= i < s:
            raise ValueError(f"level {i} outside [0, {s})")
        coeffs = {e[1:]: c for e, c in jet.coeffs.items() if e[0] == i}
        out[pt[1:]] = Jet._raw(jet.field, jet.m - 1, s - i, coeffs)
    if not out:
        raise ValueError(f"{a} is not a first coordinate of the grid")
    return out


def _column_decode(params: CodeParams, column: dict, s_sub: int, d_sub: int):
    """Decode one column; returns (polynomial in m-1 variables, distance)."""
    field, m = params.field, params.m
    tail = params.grid.tail()
    if m == 2:
        pts = tail.sets[0]
        inst = unidec.UniDecodeInstance(field, pts, d_sub, (s_sub,) * len(pts),
                                        tuple(column[(b,)] for b in pts))
        G = unidec.decode(inst)
        if G is None:
            G = MultiPoly.zero(field, 1)
        return G, unidec.varying_distance(inst, G)
    sub_params = CodeParams(s_sub, d_sub, tail)
    sub_word = ReceivedWord._unchecked(sub_params, column)
    G = _decode(sub_word, None, False)
    if G is None:
        G = MultiPoly.zero(field, m - 1)
    return G, delta_mult(sub_word, encode(G, sub_params))


def _decode(f: ReceivedWord, trace, check_residual) -> Optional[MultiPoly]:
    pr = f.params
    F, m, s, d, n = pr.field, pr.m, pr.s, pr.d, pr.n
    T1 = pr.grid.sets[0]
    state = LayerState(0, dict(f.symbols))
    for ell in range(d + 1):
        state.ell = ell
        r = s - (d - ell) // n
        cols = {}
        weights = {}
        for a in T1:
            for i in range(r):
                s_sub, d_sub = s - i, d - ell
                assert n * s_sub > d_sub
                G, dist = _column_decode(pr, slice(state.residual, a, i), s_sub, d_sub)
                cap2 = n ** (m - 2) * (n * s_sub - d_sub)
                cols[a, i] = G
                weights[a, i] = HalfInt(min(2 * dist, cap2))
        w_rows = tuple(tuple(weights[a, i] for i in range(r)) for a in T1)
        layer = {}
        for e_rest in exponents_of_degree(m - 1, d - ell):
            g = tuple(tuple(cols[a, i].coeff(e_rest) for i in range(r)) for a in T1)
            inst = wdec.WeightedInstance(F, T1, d, s, m, ell, r, g, w_rows)
            Pl, theta = wdec.decode_with_threshold(inst)
            if trace is not None:
                trace.append(LayerTrace(ell, e_rest, inst, Pl, theta))
            state.recovered[ell, e_rest] = Pl
            for (k,), c in Pl.coeffs.items():
                layer[(k,) + e_rest] = c
        if layer:
            layer_poly = MultiPoly._raw(F, m, layer)
            res = state.residual
            for pt in res:
                res[pt] = res[pt] - eval_jet(layer_poly, pt, s)
        if check_residual:
            full = encode(state.partial_sum(F, m), pr)
            if any(state.residual[pt] != f.symbols[pt] - full.symbols[pt] for pt in state.residual):
                raise AssertionError(f"residual drifted from f - Enc(P) after layer {ell}")
    P = state.partial_sum(F, m)
    if within_radius(delta_mult(f, encode(P, pr)), pr):
        return P
    return None


def decode(f: ReceivedWord, *, trace: Optional[list] = None,
           check_residual: bool = False) -> Optional[MultiPoly]:
    """Return the unique P with deg P <= d and
    ``Delta_mult(f, Enc(P)) < n^(m-1) (s n - d) / 2``, or None.

    ``trace``, if given, is a list that receives one :class:`LayerTrace`
    per weighted-decoder call of the top-level recursion.
    ``check_residual`` re-encodes the partial sum after every layer.
    """
    if f.params.m < 2:
        raise ValueError("use multcode.unidec for univariate words")
    return _decode(f, trace, check_residual)


def decode_bivariate(f: ReceivedWord, **kwargs) -> Optional[MultiPoly]:
    if f.params.m != 2:
        raise ValueError(f"expected a bivariate word, got m={f.params.m}")
    return decode(f, **kwargs)
