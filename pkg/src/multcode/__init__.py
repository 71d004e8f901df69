"""Encoding and unique decoding of multivariate multiplicity codes over
prime fields, plus GMD decoding of concatenated codes and brute-force
oracles for checking them."""

from .field import FieldElement, PrimeField
from .poly import Jet, MultiPoly, eval_jet, random_poly
from .mcode import (CodeParams, Grid, HalfInt, ReceivedWord, delta_mult,
                    delta_mult_varying, encode, hamming, unique_decoding_radius,
                    within_radius)
from . import channel, gmd, mvdec, oracle, unidec, wdec

__all__ = [
    "FieldElement", "PrimeField", "Jet", "MultiPoly", "eval_jet", "random_poly",
    "CodeParams", "Grid", "HalfInt", "ReceivedWord", "delta_mult",
    "delta_mult_varying", "encode", "hamming", "unique_decoding_radius",
    "within_radius", "channel", "gmd", "mvdec", "oracle", "unidec", "wdec",
]
