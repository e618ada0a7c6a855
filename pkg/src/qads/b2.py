"""The B2 root system, weight coordinates, partition counts and strong linkage.

Conventions: simple roots a1 (long), a2 (short) with pairing
(a_i, a_j) = [[2,-1],[-1,1]], Cartan matrix A = [[2,-2],[-1,2]],
d = (1, 1/2).  Positive roots in convex order:

    b1 = a1,  b3 = a1+a2,  b4 = a1+2a2,  b2 = a2

rho = 3/2 a1 + 2 a2.  Weights are stored in the (b3, b2) basis,
lam = e0*b3 + s*b2; for lowest-weight (positive energy) labels the b2
coefficient is -s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

PAIRING = ((Fraction(2), Fraction(-1)), (Fraction(-1), Fraction(1)))
CARTAN = ((2, -2), (-1, 2))   # A[i][j] = 2(a_i,a_j)/(a_j,a_j)
D_SIMPLE = (Fraction(1), Fraction(1, 2))


def _pair_alpha(c1, c2):
    a1, b1 = c1
    a2, b2 = c2
    return (a1 * PAIRING[0][0] * a2 + a1 * PAIRING[0][1] * b2
            + b1 * PAIRING[1][0] * a2 + b1 * PAIRING[1][1] * b2)


@dataclass(frozen=True)
class Weight:
    """Point in weight space; e0, s are the (b3, b2) coordinates."""

    e0: Fraction
    s: Fraction

    @staticmethod
    def of(e0, s):
        return Weight(Fraction(e0), Fraction(s))

    @staticmethod
    def from_alpha(a, b):
        a, b = Fraction(a), Fraction(b)
        return Weight(a, b - a)

    @property
    def alpha(self):
        """Coordinates (a, b) with lam = a*a1 + b*a2."""
        return (self.e0, self.e0 + self.s)

    def dot(self, other):
        return _pair_alpha(self.alpha, other.alpha)

    def h_eigenvalues(self):
        """(H1, H2) eigenvalues: (lam, a_i)/d_i."""
        return (self.dot(ALPHA1), self.dot(ALPHA2) / D_SIMPLE[1])

    def height(self):
        a, b = self.alpha
        return a + b

    def is_integral(self):
        for beta in POSITIVE_ROOTS:
            if (self.dot(beta.root) / beta.d).denominator != 1:
                return False
        return True

    def in_positive_cone(self):
        a, b = self.alpha
        return a >= 0 and b >= 0 and a.denominator == 1 and b.denominator == 1

    def __add__(self, other):
        return Weight(self.e0 + other.e0, self.s + other.s)

    def __sub__(self, other):
        return Weight(self.e0 - other.e0, self.s - other.s)

    def __neg__(self):
        return Weight(-self.e0, -self.s)

    def scale(self, c):
        c = Fraction(c)
        return Weight(self.e0 * c, self.s * c)

    def lw_labels(self):
        """(E0, s) labels in the lowest-weight convention mu = E0*b3 - s*b2."""
        return (self.e0, -self.s)

    def to_json(self):
        return {"E0": str(self.e0), "s": str(self.s)}

    @staticmethod
    def from_json(obj):
        if "E0" in obj:
            return Weight(Fraction(obj["E0"]), Fraction(obj["s"]))
        return Weight.from_alpha(Fraction(obj["a1"]), Fraction(obj["a2"]))

    def __repr__(self):
        return f"Weight(e0={self.e0}, s={self.s})"


ALPHA1 = Weight.from_alpha(1, 0)
ALPHA2 = Weight.from_alpha(0, 1)
RHO = Weight.from_alpha(Fraction(3, 2), 2)


@dataclass(frozen=True)
class PositiveRoot:
    label: int          # 1, 3, 4, 2 following the convex order
    root: Weight

    @property
    def d(self):
        return self.root.dot(self.root) / 2


BETA1 = PositiveRoot(1, Weight.from_alpha(1, 0))
BETA3 = PositiveRoot(3, Weight.from_alpha(1, 1))
BETA4 = PositiveRoot(4, Weight.from_alpha(1, 2))
BETA2 = PositiveRoot(2, Weight.from_alpha(0, 1))

#: positive roots in the fixed convex order (makes PBW straightening terminate)
POSITIVE_ROOTS = (BETA1, BETA3, BETA4, BETA2)
ROOT_BY_LABEL = {r.label: r for r in POSITIVE_ROOTS}


class RootDatum:
    """Immutable bundle of the B2 constants (kept as one object for reports)."""

    cartan = CARTAN
    d = D_SIMPLE
    simple_roots = (ALPHA1, ALPHA2)
    positive_roots = POSITIVE_ROOTS
    rho = RHO

    @staticmethod
    def pairing(x, y):
        return x.dot(y)


def par_count(eta):
    """|Par(eta)|: number of ways to write eta as a Z+ combination of the
    positive roots, by direct enumeration. Zero off the positive cone."""
    if not eta.in_positive_cone():
        return 0
    a, b = eta.alpha
    a, b = int(a), int(b)
    count = 0
    for k4 in range(min(a, b // 2) + 1):
        for k3 in range(min(a - k4, b - 2 * k4) + 1):
            # k1, k2 are then forced
            count += 1
    return count


def par_tuples(eta):
    """All (k1, k3, k4, k2) with k1*b1 + k3*b3 + k4*b4 + k2*b2 = eta."""
    if not eta.in_positive_cone():
        return []
    a, b = eta.alpha
    a, b = int(a), int(b)
    out = []
    for k4 in range(min(a, b // 2) + 1):
        for k3 in range(min(a - k4, b - 2 * k4) + 1):
            k1 = a - k4 - k3
            k2 = b - 2 * k4 - k3
            out.append((k1, k3, k4, k2))
    out.sort()
    return out


@dataclass(frozen=True)
class AffineReflection:
    """Reflection through the plane perpendicular to `root` passing through
    -rho + (m/(4n d_beta)) * level * root."""

    root: PositiveRoot
    level: int


def reflection_step(lam, beta, level, params):
    """The coefficient k with sigma_{beta,l}(lam) = lam - k*beta."""
    bb = beta.root.dot(beta.root)
    return (2 * (lam + RHO).dot(beta.root) - Fraction(params.m, params.n) * level) / bb


def reflect(lam, refl, params):
    """Affine reflection image of lam; an involution for fixed (root, level)."""
    k = reflection_step(lam, refl.root, refl.level, params)
    return lam - refl.root.root.scale(k)


def allowed_levels(lam, beta, params, k_max):
    """Integer levels l whose reflection maps lam to lam - k*beta with
    1 <= k <= k_max and k an integer (these keep the image in lam + Q).

    Exposed separately because the admissible level set is exactly the
    integrality condition on k; non-integral weights get their levels from
    this same predicate."""
    out = []
    bb = beta.root.dot(beta.root)
    top = 2 * (lam + RHO).dot(beta.root)
    step = Fraction(params.m, params.n)
    # k(l) = (top - step*l)/bb decreases in l; solve 1 <= k <= k_max
    l_lo = (top - bb * k_max) / step
    l_hi = (top - bb) / step
    l = -(-l_lo.numerator // l_lo.denominator)  # ceil
    while l <= l_hi:
        k = (top - step * l) / bb
        if k.denominator == 1 and 1 <= k <= k_max:
            out.append((l, int(k)))
        l += 1
    return out


def translation_steps(beta, params, k_max):
    """Steps k from vanishing quantum integers: multiples of M_(i)."""
    mi = params.M_sub[beta.label]
    return list(range(mi, k_max + 1, mi))


def strongly_linked(lam, params, depth):
    """All weights strongly linked to lam within total height `depth`.

    A step subtracts k*beta where either [k]_beta = 0 at the root of unity
    or the affine reflection condition holds with integer k; chains of such
    steps stay inside lam + Q.  Includes lam itself."""
    depth = int(depth)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nu = frontier.pop()
        used = int((lam - nu).height())
        for beta in POSITIVE_ROOTS:
            h = int(beta.root.height())
            k_max = (depth - used) // h
            if k_max < 1:
                continue
            steps = set(translation_steps(beta, params, k_max))
            steps.update(k for _, k in allowed_levels(nu, beta, params, k_max))
            for k in steps:
                new = nu - beta.root.scale(k)
                if new not in seen:
                    seen.add(new)
                    frontier.append(new)
    return seen


def linkage_steps(nu, params, depth):
    """Single linkage steps from nu: list of (beta, k, nu - k*beta)."""
    out = []
    for beta in POSITIVE_ROOTS:
        h = int(beta.root.height())
        k_max = int(depth) // h
        if k_max < 1:
            continue
        steps = set(translation_steps(beta, params, k_max))
        steps.update(k for _, k in allowed_levels(nu, beta, params, k_max))
        for k in sorted(steps):
            out.append((beta, k, nu - beta.root.scale(k)))
    return out


def default_depth(params):
    """Height of 2*(m/2n)*(b3+b2): covers one full affine cell."""
    cell = Fraction(params.m, params.n) * (BETA3.root + BETA2.root).height()
    return int(cell)


def classify_weight(lam, params):
    """Basic / compact / integral flags for a prospective highest weight."""
    bound = Fraction(params.m, 2 * params.n)
    e0 = lam.dot(BETA3.root)
    e0s = lam.dot(BETA4.root)
    basic = (0 <= e0 < bound) and (0 <= e0s < bound)
    integral = lam.is_integral()
    compact = (basic and integral and lam.s >= 0
               and lam.dot(BETA1.root) >= 0)
    return {"basic": basic, "compact": compact, "integral": integral}


def one_dim_weights(params):
    """Generators of the lattice of one-dimensional representation weights."""
    c = Fraction(params.m, 2 * params.n)
    return (ALPHA1.scale(c), ALPHA2.scale(c))


def omega_weight(params):
    """Weight (m/2n)*b3 of the shift representation."""
    return BETA3.root.scale(Fraction(params.m, 2 * params.n))


def shift_by_omega(lam, params):
    """Lowest weight -lam + (m/2n)*b3 of the shifted module."""
    return -lam + omega_weight(params)


def singleton_weights(params):
    """The two non-integral basic weights carrying unitary irreps."""
    m = params.m
    rac = Weight.of(Fraction(m - 1, 2), 0)
    di = Weight.of(Fraction(m, 2) - 1, Fraction(1, 2))
    return {"rac": rac, "di": di}
