"""Verma modules of the rank-2 algebra: PBW weight spaces, invariant Gram
forms, the De Concini-Kac determinant formula, and the exact comparison
between the two (value, zero locus, and vanishing order along the
deformation q -> q e^(i pi h), lambda -> lambda + h rho).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .. import linalg
from ..b2 import (ALPHA1, ALPHA2, POSITIVE_ROOTS, RHO, Weight, par_tuples,
                  par_count)
from ..scalars import JetDomain, LinFrac, SymbolicDomain, jet_det_ord
from .algebra import SO5, SO23, STAR_SIGNS, ZERO4, SLOT, engine_for, _k_sub, _first_slot

_LABEL_ROOT = {r.label: r for r in POSITIVE_ROOTS}


class DeformedWeight:
    """lambda + h*rho with exact h-slopes (for jet computations)."""

    def __init__(self, lam):
        a, b = lam.alpha
        ra, rb = RHO.alpha
        self._alpha = (LinFrac(a, ra), LinFrac(b, rb))

    @property
    def alpha(self):
        return self._alpha

    def dot(self, other):
        a1, b1 = self._alpha
        a2, b2 = other.alpha
        return (a1 * (2 * a2) + a1 * (-b2) + b1 * (-a2) + b1 * b2)

    def h_eigenvalues(self):
        return (self.dot(ALPHA1), self.dot(ALPHA2) * 2)


class VermaModule:
    """Highest-weight module data over an arbitrary scalar domain.

    The Gram matrix of the invariant Hermitian form is assembled by the
    layer recursion  (F_g a, b) = sign_g * (a, E_g b), with the raising
    action computed once per (root, monomial) from the cached commutation
    tables.
    """

    def __init__(self, domain, lam, form=SO5):
        self.dom = domain
        self.eng = engine_for(domain)
        self.lam = lam
        self.form = form
        self.h1, self.h2 = lam.h_eigenvalues()
        self._basis = {}
        self._gram = {}
        self._raise = {}

    def basis(self, eta):
        key = eta.alpha
        if key not in self._basis:
            self._basis[key] = par_tuples(eta)
        return self._basis[key]

    def _k_at_lambda(self, r):
        """Evaluation of K_r on the highest-weight vector."""
        x = (r[0] * self.h1 + r[1] * self.h2) / 4
        return self.dom.q_power(x)

    def raise_action(self, gamma, k):
        """E_gamma . F_k w as a list of (k', coeff).

        In the normal form the Cartan part stands directly against w, so it
        is evaluated at lambda itself."""
        key = (gamma, k)
        out = self._raise.get(key)
        if out is not None:
            return out
        kE = [0, 0, 0, 0]
        kE[SLOT[gamma]] = 1
        terms = self.eng.mul_EF(tuple(kE), k)
        res = []
        for (kf, kv, ke), c in terms.items():
            if ke != ZERO4:
                continue
            res.append((kf, c * self._k_at_lambda(kv)))
        self._raise[key] = res
        return res

    def raise_matrix(self, eta, i):
        """Matrix of X_i^+ from the weight space at lambda-eta to lambda-eta+alpha_i."""
        root = ALPHA1 if i == 1 else ALPHA2
        src = self.basis(eta)
        dst_eta = eta - root
        dst = par_tuples(dst_eta)
        idx = {k: t for t, k in enumerate(dst)}
        cols = []
        for k in src:
            col = [self.dom.zero] * len(dst)
            for kf, c in self.raise_action(i, k):
                col[idx[kf]] = col[idx[kf]] + c
            cols.append(col)
        return [[cols[j][i2] for j in range(len(src))] for i2 in range(len(dst))], src, dst

    def gram(self, eta):
        key = eta.alpha
        G = self._gram.get(key)
        if G is not None:
            return G
        basis = self.basis(eta)
        n = len(basis)
        if key == (0, 0):
            G = [[self.dom.one]]
            self._gram[key] = G
            return G
        idx = {k: t for t, k in enumerate(basis)}
        sg = STAR_SIGNS[self.form]
        G = [[self.dom.zero] * n for _ in range(n)]
        # cache lower layer indexed lookups per leading root
        for i, k in enumerate(basis):
            gamma = _first_slot(k)
            k_rest = _k_sub(k, SLOT[gamma])
            root = _LABEL_ROOT[gamma].root
            sub_eta = eta - root
            Gs = self.gram(sub_eta)
            sub_idx = {kk: t for t, kk in enumerate(par_tuples(sub_eta))}
            ir = sub_idx[k_rest]
            s = sg[gamma]
            for j, kp in enumerate(basis):
                acc = self.dom.zero
                for ka, c in self.raise_action(gamma, kp):
                    acc = acc + c * Gs[ir][sub_idx[ka]]
                G[i][j] = acc if s > 0 else -acc
        self._gram[key] = G
        return G

    def lower_vector(self, k, vec_eta, vec):
        """F_k applied to a vector in the weight space at lambda - vec_eta.

        vec is a coefficient list over par_tuples(vec_eta); the result lives
        at vec_eta + content(k)."""
        src = par_tuples(vec_eta)
        a = k[0] + k[1] + k[2]
        b = k[1] + 2 * k[2] + k[3]
        dst_eta = vec_eta + Weight.from_alpha(a, b)
        dst = par_tuples(dst_eta)
        idx = {kk: t for t, kk in enumerate(dst)}
        out = [self.dom.zero] * len(dst)
        for c, kk in zip(vec, src):
            if not c:
                continue
            for kf, cf in self.eng.f_mono_mul(k, kk).items():
                out[idx[kf]] = out[idx[kf]] + c * cf
        return dst_eta, out


# ---------------------------------------------------------------------------
# De Concini-Kac determinant

def shapovalov_factors(lam, eta, params=None):
    """The (root, level, exponent) data of the determinant formula at eta."""
    out = []
    for beta in POSITIVE_ROOTS:
        c = 1
        while True:
            rem = eta - beta.root.scale(c)
            e = par_count(rem)
            if rem.alpha[0] < 0 or rem.alpha[1] < 0:
                break
            if e:
                out.append((beta, c, e))
            c += 1
    return out


def shapovalov_det_formula(domain, lam, eta):
    """Closed product formula for det of the invariant form at lambda - eta."""
    dom = domain
    total = dom.one
    for beta, c, e in shapovalov_factors(lam, eta):
        d = beta.d
        x = lam.dot(beta.root) + RHO.dot(beta.root) \
            - Fraction(c, 2) * beta.root.dot(beta.root)
        den = dom.q_power(d) - dom.q_power(-d)
        bracket = dom.q_power(d * c) - dom.q_power(-d * c)
        rfac = dom.q_power(x) - dom.q_power(-x)
        factor = bracket * rfac * (dom.one / (den * den))
        for _ in range(e):
            total = total * factor
    return total


_VM_CACHE = {}


def verma_module_for(domain, lam, form=SO5):
    """Shared VermaModule instances so Gram layers accumulate per weight."""
    try:
        key = (id(domain), lam, form)
        cached = _VM_CACHE.get(key)
    except TypeError:
        return VermaModule(domain, lam, form)
    if cached is None:
        cached = VermaModule(domain, lam, form)
        _VM_CACHE[key] = cached
    return cached


def gram_det(domain, lam, eta, form=SO5):
    vm = verma_module_for(domain, lam, form)
    G = vm.gram(eta)
    if isinstance(domain, SymbolicDomain):
        from ..scalars import ratfunc_matrix_det
        return ratfunc_matrix_det(G)
    return linalg.det(G, domain.zero, domain.one)


_CALIBRATION = {}

# candidate generic weights: half-integral coordinates keep all q-powers
# Laurent in u; per eta the smallest two with no vanishing formula factor
# are used (smaller exponents keep the symbolic determinants cheap)
_GENERIC_CANDIDATES = [
    Weight.of(Fraction(9, 2), Fraction(3, 2)),
    Weight.of(Fraction(11, 2), Fraction(5, 2)),
    Weight.of(Fraction(13, 2), Fraction(7, 2)),
    Weight.of(Fraction(17, 2), Fraction(7, 2)),
    Weight.of(Fraction(19, 2), Fraction(9, 2)),
    Weight.of(Fraction(27, 2), Fraction(9, 2)),
    Weight.of(Fraction(31, 2), Fraction(11, 2)),
]


def _generic_weights_for(eta):
    picked = []
    for lam in _GENERIC_CANDIDATES:
        ok = True
        for beta, c, _ in shapovalov_factors(lam, eta):
            x = lam.dot(beta.root) + RHO.dot(beta.root) \
                - Fraction(c, 2) * beta.root.dot(beta.root)
            if x == 0:
                ok = False
                break
        if ok:
            picked.append(lam)
            if len(picked) == 2:
                return picked
    raise RuntimeError(f"no generic calibration weights for eta={eta}")


def _unit_shape(ratio):
    """Decompose a calibration ratio as sign * u^t * (u + 1/u)^b.

    The (u + 1/u)-power is the normalization of the long composite root
    vector relative to the rescaled one; anything outside this shape is an
    error."""
    from ..scalars import _pdivmod
    num, den = list(ratio.num), list(ratio.den)
    # den is u^k up to scale for a Laurent monomial times (1+u^2)^b
    nz_den = [i for i, c in enumerate(den) if c]
    assert len(nz_den) == 1, f"unexpected calibration denominator {ratio}"
    t = -nz_den[0]
    scale = den[nz_den[0]]
    b = 0
    num = tuple(c / scale for c in num)
    while True:
        q, r = _pdivmod(num, (Fraction(1), Fraction(0), Fraction(1)))
        if r or not q:
            break
        num = q
        b += 1
        t -= 1
    nz = [i for i, c in enumerate(num) if c]
    assert len(nz) == 1 and num[nz[0]] in (1, -1), \
        f"calibration ratio outside the expected shape: {ratio}"
    return (int(num[nz[0]]), t + nz[0], b)


def calibration_unit(eta):
    """Basis-normalization unit between the computed Gram determinant and
    the closed formula, calibrated once per eta at generic weights.

    Returns (ratio, (sign, t, b)) with ratio = sign * u^t * (u+1/u)^b;
    independence of the highest weight is asserted."""
    key = eta.alpha
    if key in _CALIBRATION:
        return _CALIBRATION[key]
    dom = SymbolicDomain()
    ratios = []
    for lam in _generic_weights_for(eta):
        det = gram_det(dom, lam, eta, SO5)
        formula = shapovalov_det_formula(dom, lam, eta)
        ratios.append(det / formula)
    assert ratios[0] == ratios[1], f"calibration unit depends on weight at {key}"
    shape = _unit_shape(ratios[0])
    _CALIBRATION[key] = (ratios[0], shape)
    return _CALIBRATION[key]


def _formula_ord_root_of_unity(lam, eta, params):
    """Exact vanishing order of the formula along (lambda + h rho, q e^{i pi h}).

    Each sine-type factor exp-angle is theta0 + pi c1 h + pi c2 h^2 with
    rational data, so orders are decided by exact rational arithmetic."""
    m, n = params.m, params.n

    def sin_ord(y0, yh):
        # order of q'^y - q'^{-y} at h = 0, y = y0 + yh*h
        t0 = Fraction(2 * n, m) * y0          # theta0 / pi
        if t0.denominator != 1:
            return 0
        c1 = y0 + Fraction(2 * n, m) * yh
        if c1:
            return 1
        if yh:
            return 2
        raise ValueError("identically vanishing factor in determinant formula")

    total = 0
    for beta, c, e in shapovalov_factors(lam, eta):
        d = beta.d
        x0 = (lam + RHO).dot(beta.root) - Fraction(c, 2) * beta.root.dot(beta.root)
        xh = RHO.dot(beta.root)
        ordv = sin_ord(d * c, Fraction(0)) + sin_ord(x0, xh) \
            - 2 * sin_ord(d, Fraction(0))
        total += ordv * e
    return total


def gram_det_ord(lam, eta, params, max_order=None):
    """Vanishing order of det(Gram) along the same deformation, via exact
    jets with pi formal; None when it exceeds the truncation order."""
    if max_order is None:
        max_order = _formula_ord_root_of_unity(lam, eta, params) + 2
    dom = JetDomain(params, max_order)
    vm = VermaModule(dom, DeformedWeight(lam), SO5)
    G = vm.gram(eta)
    return jet_det_ord(dom, G)


def verify_det(lam, eta, domain, params=None):
    """Compare det(Gram) with the closed formula.

    Exact equality up to the calibrated unit; at a root of unity the
    vanishing orders along the h-deformation must also agree.  A mismatch
    is a hard failure."""
    ratio, shape = calibration_unit(eta)
    det = gram_det(domain, lam, eta, SO5)
    formula = shapovalov_det_formula(domain, lam, eta)
    unit = domain.from_ratfunc(ratio)
    match_value = det == unit * formula
    report = {"match": match_value, "calibration": shape}
    if params is not None and match_value:
        f_ord = _formula_ord_root_of_unity(lam, eta, params)
        if f_ord:
            g_ord = gram_det_ord(lam, eta, params, f_ord + 2)
            report["vanishing_order"] = (g_ord, f_ord)
            report["match"] = g_ord == f_ord
        else:
            # nonzero at h=0 on both sides iff nonzero values matched
            zero = det.is_zero() if hasattr(det, "is_zero") else not det
            report["vanishing_order"] = (0 if not zero else None, 0)
            report["match"] = not zero
    if not report["match"]:
        report["detail"] = {"det": det, "formula": formula}
    return report
