"""Irreducible highest-weight representations at a root of unity:
characters, singular vectors, compact and Anti-de Sitter unitarity,
gauge subspaces and singleton structure.

The maximal submodule of a Verma module is the radical of the invariant
form, and it is spanned by the descendants of the singular vectors; the
layer sweep uses that fact to certify weight-space multiplicities with a
fast modular pre-pass (rank over F_p is a lower bound, descendant spans
give the matching upper bound) and falls back to exact elimination when
the certificate does not close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .. import linalg
from ..b2 import (ALPHA1, ALPHA2, BETA2, BETA3, BETA4, RHO, Weight,
                  classify_weight, default_depth, omega_weight, par_tuples,
                  singleton_weights, strongly_linked)
from ..cyclo import QParams, sign_of_real
from ..scalars import CycloDomain
from .algebra import SO5, SO23
from .verma import VermaModule

_EXACT_SIZE = 12


@dataclass
class WeightSpaceData:
    eta: Weight
    mult: int
    pivots: list
    null_basis: list          # exact vectors spanning the radical here
    new_singular: int         # dimension of fresh primitive singular vectors
    positive: bool = True
    first_negative: object = None


@dataclass
class IrrepReport:
    lam: Weight
    params: QParams
    form: str
    depth: int
    character: dict = field(default_factory=dict)
    complete: bool = False
    dim: int = 0
    singular_weights: list = field(default_factory=list)
    unitary: bool = None
    first_negative: object = None
    gauge: object = None
    classification: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "highest_weight": self.lam.to_json(),
            "params": {"m": self.params.m, "n": self.params.n},
            "form": self.form,
            "depth": self.depth,
            "character": [{"eta": list(map(int, k)), "mult": v}
                          for k, v in sorted(self.character.items()) if v],
            "complete": self.complete,
            "dim": self.dim,
            "singular_weights": [{"eta": [int(a) for a in e], "count": c}
                                 for e, c in self.singular_weights],
            "unitarity": {"form": self.form, "verdict": self.unitary,
                          **({"first_negative_pivot": str(self.first_negative)}
                             if self.first_negative else {})},
            "gauge_subspace": self.gauge,
            "classification": self.classification,
        }


def _etas_of_height(h):
    return [Weight.from_alpha(a, h - a) for a in range(h + 1)]


class ModuleSweep:
    """Layer-by-layer analysis of M(lam) and its irreducible quotient."""

    def __init__(self, params, lam, form=SO5, domain=None):
        self.params = params
        self.dom = domain or CycloDomain(params)
        self.vm = VermaModule(self.dom, lam, form)
        self.lam = lam
        self.form = form
        if self.dom.name == "cyclo":
            self.hom = linalg.hom_for_order(params.field.order)
        elif self.dom.name == "rational":
            self.hom = linalg.hom_for_order(8)
        else:
            self.hom = None
        self.singulars = []       # (eta, [vectors over par basis])
        self.data = {}            # eta.alpha -> WeightSpaceData

    # -- descendants -------------------------------------------------------

    def _descendants_at(self, eta):
        out = []
        for eta0, vecs in self.singulars:
            diff = eta - eta0
            a, b = diff.alpha
            if a < 0 or b < 0 or a.denominator != 1 or b.denominator != 1:
                continue
            for k in par_tuples(diff):
                for v in vecs:
                    _, w = self.vm.lower_vector(k, eta0, v)
                    if any(w):
                        out.append(w)
        return out

    def _raise_stack(self, eta):
        m1, src, _ = self.vm.raise_matrix(eta, 1)
        m2, _, _ = self.vm.raise_matrix(eta, 2)
        return m1 + m2, src

    # -- one weight space ---------------------------------------------------

    def process(self, eta, need_signature):
        key = eta.alpha
        if key in self.data:
            return self.data[key]
        basis = self.vm.basis(eta)
        n = len(basis)
        if n == 0:
            d = WeightSpaceData(eta, 0, [], [], 0)
            self.data[key] = d
            return d
        G = self.vm.gram(eta)
        desc = self._descendants_at(eta)
        mult = pivots = null_basis = None
        fresh = 0
        if self.hom is not None:
            # modular certificate: rank_p(G) is a lower bound for the rank,
            # the descendant span a lower bound for the nullity; when they
            # meet, both are exact and no new singular vector can hide
            r_p, piv_p = linalg.mod_rank_and_pivots(G, self.hom)
            d_p = linalg.mod_rank_and_pivots(desc, self.hom)[0] if desc else 0
            if r_p + d_p == n:
                mult = r_p
                pivots = piv_p
                null_basis = self._independent_mod_p(desc, d_p)
        if mult is None:
            ker = linalg.kernel_basis(G, n, self.dom.zero, self.dom.one)
            nullity = len(ker)
            mult = n - nullity
            work = [list(r) for r in G]
            pivots, _ = linalg.row_reduce(work)
            null_basis = ker
            # fresh primitive singular vectors live in null(G) but outside
            # the descendant span
            desc_rank = linalg.rank(desc) if desc else 0
            if nullity > desc_rank:
                stack, src = self._raise_stack(eta)
                if stack:
                    sing = linalg.kernel_basis(stack, n, self.dom.zero, self.dom.one)
                else:
                    sing = [[self.dom.one if i == j else self.dom.zero
                             for i in range(n)] for j in range(n)]
                prim = self._primitive(sing, desc)
                if prim:
                    self.singulars.append((eta, prim))
                    fresh = len(prim)
        d = WeightSpaceData(eta, mult, pivots, null_basis, fresh)
        if need_signature and mult:
            self._signature(d, G)
        self.data[key] = d
        return d

    def _independent_mod_p(self, desc, d_p):
        if not desc:
            return []
        hom = self.hom
        p = hom.p
        rows = []
        picked = []
        count = 0
        red = []
        for v in desc:
            mv = [hom.map(e) if e else 0 for e in v]
            for r, piv in red:
                if mv[piv]:
                    f = mv[piv]
                    mv = [(a - f * b) % p for a, b in zip(mv, r)]
            piv = next((i for i, x in enumerate(mv) if x), None)
            if piv is not None:
                inv = pow(mv[piv], -1, p)
                red.append(([x * inv % p for x in mv], piv))
                picked.append(v)
                count += 1
                if count == d_p:
                    break
        return picked

    def _primitive(self, sing, desc):
        span = [list(v) for v in desc]
        out = []
        for v in sing:
            rows = span + [list(v)]
            if linalg.rank(rows) > linalg.rank(span):
                span.append(list(v))
                out.append(v)
        return out

    def _signature(self, d, G):
        J = d.pivots
        sub = [[G[i][j] for j in J] for i in J]
        # symmetric elimination with exact pivot signs
        n = len(sub)
        active = list(range(n))
        while active:
            piv = next((i for i in active if not sub[i][i].is_zero()), None)
            if piv is None:
                i, j = None, None
                for a_idx, ii in enumerate(active):
                    for jj in active[a_idx + 1:]:
                        if not sub[ii][jj].is_zero():
                            i, j = ii, jj
                            break
                    if i is not None:
                        break
                assert i is not None, "degenerate quotient form"
                t = sub[i][j].inverse()
                tc = t.conjugate()
                for k in active:
                    sub[i][k] = sub[i][k] + tc * sub[j][k]
                for k in active:
                    sub[k][i] = sub[k][i] + sub[k][j] * t
                continue
            s = sign_of_real(sub[piv][piv])
            if s < 0:
                d.positive = False
                d.first_negative = (d.eta.alpha, piv)
                return
            dd = sub[piv][piv]
            active.remove(piv)
            rest = list(active)
            dinv = dd.inverse()
            col = {k: sub[k][piv] for k in rest}
            row = {k: sub[piv][k] for k in rest}
            for k in rest:
                ck = col[k] * dinv
                if ck.is_zero():
                    continue
                for l in rest:
                    sub[k][l] = sub[k][l] - ck * row[l]


_SWEEP_CACHE = {}


def sweep_module(params, lam, form=SO5, depth=None, need_signature=False,
                 stop_early_on_negative=True, domain=None):
    """Layer sweep of M(lam); returns an IrrepReport."""
    cap = depth if depth is not None else default_depth(params)
    cache_key = None
    if domain is None:
        cache_key = (params.m, params.n, lam, form, cap, need_signature,
                     stop_early_on_negative)
        if cache_key in _SWEEP_CACHE:
            return _SWEEP_CACHE[cache_key]
    sweep = ModuleSweep(params, lam, form, domain)
    report = IrrepReport(lam=lam, params=params, form=form, depth=cap)
    zero_layers = 0
    h = 0
    unitary = True
    first_neg = None
    while h <= cap:
        layer_total = 0
        for eta in _etas_of_height(h):
            d = sweep.process(eta, need_signature and unitary)
            layer_total += d.mult
            if d.mult:
                report.character[eta.alpha] = d.mult
            if not d.positive and unitary:
                unitary = False
                first_neg = d.first_negative
                if stop_early_on_negative and need_signature:
                    report.unitary = False
                    report.first_negative = first_neg
                    report.dim = sum(report.character.values())
                    report.singular_weights = [(e.alpha, len(v))
                                               for e, v in sweep.singulars]
                    report.spaces = sweep.data
                    report.sweep = sweep
                    if cache_key is not None:
                        _SWEEP_CACHE[cache_key] = report
                    return report
        if layer_total == 0 and h > 0:
            zero_layers += 1
            if zero_layers >= 2:
                report.complete = True
                break
        else:
            zero_layers = 0
        h += 1
    report.unitary = unitary if need_signature else None
    report.first_negative = first_neg
    report.dim = sum(report.character.values())
    report.singular_weights = [(e.alpha, len(v)) for e, v in sweep.singulars]
    report.spaces = sweep.data
    report.sweep = sweep
    if cache_key is not None:
        _SWEEP_CACHE[cache_key] = report
    return report


def irrep_character(lam, params, depth=None, domain=None):
    """Character of L(lam): multiplicity = rank of the invariant form on
    each Verma weight space (the radical is the maximal submodule)."""
    return sweep_module(params, lam, SO5, depth, need_signature=False,
                        domain=domain)


def singular_vectors(lam, params, depth, domain=None):
    """All weights mu = lam - eta carrying joint kernel vectors of the two
    raising operators, with kernel bases, within the given height."""
    dom = domain or CycloDomain(params)
    vm = VermaModule(dom, lam, SO5)
    out = []
    for h in range(1, int(depth) + 1):
        for eta in _etas_of_height(h):
            basis = vm.basis(eta)
            if not basis:
                continue
            m1, src, _ = vm.raise_matrix(eta, 1)
            m2, _, _ = vm.raise_matrix(eta, 2)
            stack = m1 + m2
            if stack:
                ker = linalg.kernel_basis(stack, len(basis), dom.zero, dom.one)
            else:
                ker = [[dom.one if i == j else dom.zero
                        for i in range(len(basis))] for j in range(len(basis))]
            if ker:
                out.append({"eta": eta, "weight": lam - eta, "kernel": ker,
                            "basis": basis})
    linked = strongly_linked(lam, params, int(depth))
    for item in out:
        assert item["weight"] in linked, \
            f"singular weight {item['weight']} not strongly linked"
    return out


def _massless_family(lam, params):
    bound = Fraction(params.m, 2 * params.n)
    return (bound.denominator == 1 and lam.s >= 1
            and lam.e0 == bound - 1 - lam.s)


def unitarity_so5(lam, params, depth=None, stop_early=True):
    """Positivity of the invariant form on L(lam) under the compact star.

    The verdict is the exact Hermitian signature of every weight-space
    quotient form; the report notes which structural special case applied
    (extra vector at lam - b4 for the border family, the two non-integral
    singleton weights, or none)."""
    rep = sweep_module(params, lam, SO5, depth, need_signature=True,
                       stop_early_on_negative=stop_early)
    rep.classification = classify_weight(lam, params)
    case = "none"
    if _massless_family(lam, params):
        case = "a"
    else:
        sw = singleton_weights(params)
        if lam in (sw["rac"], sw["di"]):
            case = "b"
    rep.classification["special_case"] = case
    if case == "a":
        b4 = BETA4.root.alpha
        rep.classification["extra_singular_at_b4"] = any(
            e == b4 for e, _ in rep.singular_weights)
    return rep


def physical_rep(mu_labels, params, depth=None, check_shift=True):
    """Analysis of the lowest-weight module with lowest weight (E0, s).

    The module is handled through the weight-flip automorphism (raising and
    lowering exchanged), under which the Anti-de Sitter star keeps its
    form; the direct verdict is cross-checked against the compact verdict
    of the shifted weight, which must agree."""
    e0, s = Fraction(mu_labels[0]), Fraction(mu_labels[1])
    mu = Weight(e0, -s)                     # mu = E0 b3 - s b2
    mirror = -mu                            # highest weight of the flipped module
    rep = sweep_module(params, mirror, SO23, depth, need_signature=True,
                       stop_early_on_negative=False)
    rep.classification = _classify_physical(e0, s, params)
    if rep.classification["flag"] == "unsupported":
        rep.unitary = None
        return rep
    if rep.classification["massless"]:
        b4 = BETA4.root.alpha
        has_gauge = any(e == b4 for e, _ in rep.singular_weights)
        rep.classification["gauge_singular_found"] = has_gauge
        if has_gauge:
            # the factored gauge subspace is one irrep of spin s-1
            gauge_rep = physical_rep((e0 + 1, s - 1), params, depth,
                                     check_shift=False)
            rep.gauge = {"lowest_weight": (str(e0 + 1), str(s - 1)),
                         "dimension": gauge_rep.dim}
    if check_shift:
        lam_c = omega_weight(params) - mu
        compact = unitarity_so5(lam_c, params, depth)
        assert compact.unitary == rep.unitary, \
            f"shift equivalence violated at mu=({e0},{s})"
        rep.classification["shift_verdict"] = compact.unitary
    return rep


def _classify_physical(e0, s, params):
    mu = Weight(e0, -s)
    integral = mu.is_integral()
    ratio = Fraction(params.m, 2 * params.n)
    out = {"integral": integral, "massless": False, "di": False, "rac": False,
           "flag": "ok"}
    if ratio.denominator == 1 and s >= 1 and e0 == s + 1 \
            and (2 * s).denominator == 1:
        out["massless"] = True
    if params.n == 1 and (e0, s) == (1, Fraction(1, 2)):
        out["di"] = True
    if params.n == 1 and (e0, s) == (Fraction(1, 2), 0):
        out["rac"] = True
    if not integral and not (out["di"] or out["rac"]):
        out["flag"] = "unsupported"
    return out


