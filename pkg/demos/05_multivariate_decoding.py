"""Three variables: each column is decoded by the bivariate decoder, and
the recursion bottoms out in univariate interpolation."""

import random
import time

from multcode import CodeParams, Grid, PrimeField, channel, delta_mult, encode, mvdec, random_poly

rng = random.Random(7)
F = PrimeField(13)
params = CodeParams(s=2, d=3, grid=Grid.cube(F, range(4), 3))
print("radius 40 on a 4x4x4 grid")
for budget in (0, 20, 39):
    P = random_poly(F, 3, 3, rng)
    f = channel.corrupt_random(encode(P, params), budget, rng, exact=True)
    start = time.perf_counter()
    out = mvdec.decode(f)
    print(f"  distance {delta_mult(f, encode(P, params)):2}: recovered={out == P}  "
          f"({time.perf_counter() - start:.2f}s)")
