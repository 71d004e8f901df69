"""Univariate decoding when every point carries its own multiplicity.

A point with multiplicity 0 is erased, so the same routine covers
Reed-Solomon errors-and-erasures decoding.
"""

from multcode import MultiPoly, PrimeField, unidec

F = PrimeField(5)

# Plain Reed-Solomon: four points, degree <= 1, one error at x = 3.
R = unidec.decode_word(F, [0, 1, 2, 3], 1, [1, 1, 1, 1], [(0,), (1,), (2,), (4,)])
print("RS with one error ->", R)

# Multiplicities (2, 2, 1): the derivative at 0 is wrong (3 instead of 2).
truth = MultiPoly.univariate(F, [1, 2])
h = [(1, 3), (3, 2), (0,)]
R = unidec.decode_word(F, [0, 1, 2], 1, [2, 2, 1], h)
print("varying multiplicity ->", R, "(expected", truth, ")")

# The interpolation step in detail.
inst = unidec.UniDecodeInstance(F, (0, 1, 2), 1, (2, 2, 1), tuple(h))
B0, B1 = unidec.interpolate(inst)
print(f"N={inst.N}, D={inst.D}; B0={B0}, B1={B1}; -B0/B1 = {R}")

# Erase the bad point entirely: multiplicity 0 at x = 0.
R = unidec.decode_word(F, [0, 1, 2], 1, [0, 2, 1], h)
print("after erasing x=0 ->", R)

# Too many errors: the decoder reports failure (None) rather than guessing.
print("garbage ->", unidec.decode_word(F, [0, 1, 2, 3], 1, [1] * 4, [(0,), (0,), (1,), (1,)]))
