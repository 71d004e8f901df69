"""Forney's generalized minimum distance decoding of a concatenated code.

Outer Reed-Solomon over GF(3) (N=3, K=1) composed with the binary [3,2,2]
parity code. Plain inner-then-outer decoding breaks on two bit errors;
weighting each block by its inner distance and trying every erasure
threshold does not.
"""

from itertools import combinations

from multcode import gmd, unidec

code = gmd.parity_example()
print(f"N={code.N} K={code.K} D={code.D}, inner n={code.n_in} d={code.d_in}, "
      f"corrects fewer than {code.D * code.d_in / 2} bit errors")

msg = [2]
sent = gmd.concat_encode(msg, code)
flat = list(sent.flat())
flat[0] ^= 1
flat[4] ^= 1
recv = gmd.GmdReceived((tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9])))
symbols, W = gmd.block_weights(recv, code)
print("sent", sent.blocks, "received", recv.blocks)
print("inner guesses", symbols, "weights", W)

naive = unidec.decode(unidec.UniDecodeInstance(code.field, code.S, 0, (1, 1, 1), tuple((s,) for s in symbols)))
print("hard-decision outer decode:", naive)
print("GMD decode:", gmd.gmd_decode(recv, code))

total = sum(1 for k in range(3) for _ in combinations(range(9), k))
good = 0
for m in range(3):
    base = list(gmd.concat_encode([m], code).flat())
    for k in range(3):
        for pos in combinations(range(9), k):
            w = list(base)
            for i in pos:
                w[i] ^= 1
            r = gmd.GmdReceived((tuple(w[0:3]), tuple(w[3:6]), tuple(w[6:9])))
            good += gmd.gmd_decode(r, code) == [m]
print(f"all patterns of <= 2 flips: {good}/{3 * total} decoded")
