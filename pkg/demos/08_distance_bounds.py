"""The multiplicity Schwartz-Zippel bound in action: two distinct
messages of degree <= d differ by at least n^(m-1) (s n - d) in
multiplicity distance, and never by more than s times their Hamming
distance."""

import random

from multcode import CodeParams, Grid, MultiPoly, PrimeField, delta_mult, encode, hamming, random_poly

rng = random.Random(3)
F = PrimeField(13)
params = CodeParams(s=2, d=5, grid=Grid.cube(F, range(6), 2))
bound = 6 * (2 * 6 - 5)
seen = []
for _ in range(300):
    P, Q = random_poly(F, 2, 5, rng), random_poly(F, 2, 5, rng)
    if P == Q:
        continue
    a, b = encode(P, params), encode(Q, params)
    seen.append((delta_mult(a, b), hamming(a, b)))
print(f"bound {bound}; smallest multiplicity distance seen {min(x for x, _ in seen)}")
print("every pair within s * hamming:", all(x <= 2 * h for x, h in seen))

# Random pairs rarely come close to the bound. A product of five linear
# factors in x1 vanishes on five grid lines and meets it exactly.
x1 = MultiPoly.variable(F, 2, 0)
tight = MultiPoly.constant(F, 2, 1)
for t in range(5):
    tight = tight * (x1 - MultiPoly.constant(F, 2, t))
dist = delta_mult(encode(tight, params), encode(MultiPoly.zero(F, 2), params))
print(f"(x1-0)(x1-1)...(x1-4) vs 0: distance {dist}")
