#!/usr/bin/env python3
"""Tour of the rank-1 story: which V_{d,z} carry a positive invariant form.

At q = exp(2 pi i n/m) every irreducible is finite dimensional; under the
noncompact star the verdict flips with the parity of the band index z,
while the compact star prefers even z.  Both facts drop out of exact sign
chains of the Gram pivots.
"""

from qads.cyclo import QParams
from qads.uqsl2 import SO21, SU2, unitarity_sl2

m = 8
p = QParams(m, 1)
print(f"q = exp(2 pi i/{m}), M = {p.M}\n")
print("      " + "   ".join(f"z={z:+d}" for z in range(-2, 3)))
for d in range(1, p.M + 1):
    row = []
    for z in range(-2, 3):
        so21 = unitarity_sl2(d, z, p, SO21)["verdict"]
        su2 = unitarity_sl2(d, z, p, SU2)["verdict"]
        row.append(("A" if so21 else ".") + ("c" if su2 else "."))
    print(f"d={d}   " + "    ".join(row))
print("\nA = unitary for the Anti-de Sitter star, c = for the compact star.")
print("For d >= 2 the AdS verdict is exactly 'z odd'; one-dimensional")
print("representations are unitary in every band.")
