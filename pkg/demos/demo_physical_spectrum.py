#!/usr/bin/env python3
"""Positive-energy representations at m = 12: the physical band.

Integral lowest weights (E0, s) with E0 >= s+1 inside the band are
unitarizable; at the massless edge E0 = s+1 a null subspace of pure
gauges appears and is factored out, leaving one irreducible of spin s-1
less - exactly the classical photon/graviton counting.
"""

from fractions import Fraction

from qads.cyclo import QParams
from qads.uqso5.irreps import physical_rep

params = QParams(12, 1)
for mu in ((1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (5, 2)):
    rep = physical_rep(mu, params)
    line = f"(E0,s) = {mu}: dim {rep.dim:4d}, unitary = {rep.unitary}"
    if rep.gauge:
        line += (f", gauge modes at {rep.gauge['lowest_weight']}"
                 f" (dim {rep.gauge['dimension']})")
    print(line)

print("\nsingletons:")
for name, mu in (("Rac", (Fraction(1, 2), 0)), ("Di", (1, Fraction(1, 2)))):
    rep = physical_rep(mu, params)
    mults = sorted(set(rep.character.values()))
    print(f"  {name} {tuple(map(str, mu))}: dim {rep.dim}, "
          f"multiplicities {mults}, unitary = {rep.unitary}")
