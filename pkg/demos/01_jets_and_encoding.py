"""Encoding: each code symbol is the truncated Taylor expansion (a jet) of
the message polynomial at a grid point."""

from multcode import CodeParams, Grid, MultiPoly, PrimeField, encode, eval_jet

F = PrimeField(7)

# x^2 at a=1: (1+z)^2 = 1 + 2z + z^2, truncated at order 2.
square = MultiPoly.univariate(F, [0, 0, 1])
print("x^2 at 1, order 2:", eval_jet(square, [1], 2))

# In characteristic 2 the z-term vanishes; no factorials are involved.
print("x^2 at 1 over GF(2):", eval_jet(MultiPoly.univariate(PrimeField(2), [0, 0, 1]), [1], 2))

# A bivariate code on a 3x3 grid with multiplicity 2.
params = CodeParams(s=2, d=3, grid=Grid.cube(F, range(3), 2))
P = MultiPoly(F, 2, {(1, 1): 1, (0, 2): 3, (0, 0): 5})
word = encode(P, params)
print(f"\nEncoding {P} with s=2 on {{0,1,2}}^2:")
for pt in word.points():
    print(f"  {pt}: {word[pt]}")
print("\nEach symbol lists 1 + 2 = 3 coefficients (constant, z2, z1 in graded-lex order):")
print("  (1, 2) ->", word[(1, 2)].vector())
