#!/usr/bin/env python3
"""The determinant of the invariant form on a Verma weight space against
the closed product formula, at generic q and at a root of unity.

At the border weight of the massless family both sides vanish, and the
exact jet machinery certifies that they vanish to the same order along
the deformation q -> q e^(i pi h), lambda -> lambda + h rho.
"""

from qads.b2 import Weight
from qads.cyclo import QParams
from qads.scalars import CycloDomain, SymbolicDomain
from qads.uqso5.verma import gram_det, shapovalov_det_formula, verify_det

lam = Weight.of(3, 1)
print("generic q, highest weight (E0, s) = (3, 1):")
for eta in (Weight.from_alpha(1, 0), Weight.from_alpha(1, 1),
            Weight.from_alpha(1, 2), Weight.from_alpha(2, 2)):
    rep = verify_det(lam, eta, SymbolicDomain())
    sign, t, b = rep["calibration"]
    unit = f"{'+' if sign > 0 else '-'}u^{t}" + (f" (u+1/u)^{b}" if b else "")
    print(f"  eta = {tuple(map(int, eta.alpha))}: match = {rep['match']}, "
          f"unit = {unit}")

params = QParams(12, 1)
dom = CycloDomain(params)
lam = Weight.of(4, 1)      # border of the massless family at m = 12
eta = Weight.from_alpha(1, 2)
print("\nm = 12, border weight (4, 1), eta = b4:")
print("  det(Gram) = 0:", gram_det(dom, lam, eta).is_zero())
print("  formula   = 0:", shapovalov_det_formula(dom, lam, eta).is_zero())
rep = verify_det(lam, eta, dom, params)
print(f"  vanishing orders (Gram, formula) = {rep['vanishing_order']}"
      f" -> match = {rep['match']}")
