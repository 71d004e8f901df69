"""Weighted decoding with step thresholds.

Level 0 of every point is right but carries weight 4 (moderate doubt);
level 1 is wrong everywhere but carries weight 0 (full confidence). A single
cut-off for all levels either keeps the poisoned level 1 or throws away
everything. A step threshold keeps level 0 and drops level 1.
"""

from multcode import HalfInt, MultiPoly, PrimeField, unidec, wdec

F = PrimeField(17)
pts = list(range(9))
truth = MultiPoly.univariate(F, [5])
g = [(5, (3 * a + 1) % 17 or 1) for a in pts]
inst = wdec.make_instance(F, pts, d=7, s=2, m=2, ell=0, g=g, w=[(4, 0)] * 9)

print(f"r = {inst.r} levels, acceptance needs 2*Gamma < {inst.radius_twice}")
for theta in wdec.enumerate_thresholds(inst):
    svec = wdec.retained_multiplicities(inst, theta)
    R = unidec.decode(unidec.UniDecodeInstance(F, inst.points, 0, svec, inst.g)) if sum(svec) else None
    R = R or MultiPoly.zero(F, 1)
    print(f"  theta={tuple(float(t) for t in theta.theta)}  keep {svec[0]} level(s)"
          f"  -> R={R}, Gamma={float(wdec.gamma(inst, R))}, accepted={wdec.gamma_accepts(inst, R)}")

R, theta = wdec.decode_with_threshold(inst)
print("decoded", R, "via", tuple(float(t) for t in theta.theta), "expected", truth)
print("Gamma of the truth:", wdec.gamma(inst, truth), "<", HalfInt(inst.radius_twice))
