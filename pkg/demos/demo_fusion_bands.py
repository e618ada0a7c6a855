#!/usr/bin/env python3
"""Fusion at a root of unity and the truncated product.

Tensor products split into irreducibles plus 2M-dimensional
indecomposables.  Keeping only the lowest band - the irreducible quotients
of the indecomposables - yields an associative product with the classical
low-energy content; the fully reducible part lives one band up and is
discarded.
"""

from qads.cyclo import QParams
from qads.uqsl2 import build_irrep2, tensor_decompose2, truncated_tensor2

p = QParams(8, 1)
for (d, dp) in ((2, 2), (3, 3), (4, 3), (4, 4)):
    a, b = build_irrep2(d, 1, p), build_irrep2(dp, 1, p)
    dec = tensor_decompose2(a, b)
    tt = truncated_tensor2(a, b)
    parts = [f"V({x},{z})" for x, z in dec["v_parts"]]
    parts += [f"I(p={blk.p},z={blk.z})" for blk in dec["i_parts"]]
    kept = [f"V({x},{z})" for x, z in tt["kept"]] or ["0"]
    print(f"V({d},1) x V({dp},1) = " + " + ".join(parts))
    print(f"   truncated product: " + " + ".join(kept)
          + f"   [{tt['convention']}]")
print("\nEach indecomposable has dimension exactly 2M = %d and carries" % (2 * p.M))
print("precisely two singular vectors, the top of the staircase and the")
print("image of the lowest vector under (X+)^(p-1).")
