"""Bivariate unique decoding up to half the minimum distance.

Corrupt a codeword to multiplicity distance 20 (radius 21) and decode,
then inspect what the weighted decoder saw in each layer.
"""

import random

from multcode import CodeParams, Grid, PrimeField, channel, delta_mult, encode, mvdec, random_poly
from multcode import unique_decoding_radius

rng = random.Random(2024)
F = PrimeField(13)
params = CodeParams(s=2, d=5, grid=Grid.cube(F, range(6), 2))
P = random_poly(F, 2, 5, rng)
sent = encode(P, params)
received = channel.corrupt_random(sent, 20, rng, exact=True)
print(f"radius {float(unique_decoding_radius(params))}, distance {delta_mult(received, sent)}")

trace = []
out = mvdec.decode(received, trace=trace, check_residual=True)
print("recovered the message:", out == P)
print("\nlayer  r  threshold        recovered P_ell(x1)")
for t in trace:
    th = "fallback" if t.threshold is None else str(tuple(float(x) for x in t.threshold.theta))
    print(f"  {t.ell}    {t.instance.r}  {th:16} {t.result}")

# Past the radius the decoder may refuse; it never returns a far codeword.
far = channel.corrupt_random(sent, 60, rng, exact=True)
print("\nat distance 60:", mvdec.decode(far))
