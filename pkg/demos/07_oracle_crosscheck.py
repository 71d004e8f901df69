"""Ground truth by exhaustion: over GF(3) with d=2 there are only 729
bivariate messages, so the nearest codeword can be found by brute force
and compared with the decoder."""

import random

from multcode import CodeParams, Grid, PrimeField, channel, encode, mvdec, oracle, random_poly
from multcode import within_radius

rng = random.Random(1)
F = PrimeField(3)
params = CodeParams(s=2, d=2, grid=Grid.cube(F, range(3), 2))
space = oracle.PolySpace(params)
print(f"{space.size} polynomials, radius 6")

agree = 0
for trial in range(30):
    if trial % 2:
        f = channel.random_word(params, rng)
    else:
        f = channel.corrupt_random(encode(random_poly(F, 2, 2, rng), params), rng.randrange(2, 8), rng)
    best = oracle.nearest_codeword(f, space)
    out = mvdec.decode(f)
    verdict = best.poly if within_radius(best.dist, params) else None
    agree += out == verdict
    if trial < 8:
        kind = "random word     " if trial % 2 else "noisy codeword  "
        print(f"  {kind} nearest at {best.dist:2} (unique={best.unique!s:5}) decoder -> "
              f"{'fail' if out is None else out}")
print(f"decoder agreed with brute force on {agree}/30 words")
