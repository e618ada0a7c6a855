"""Energy-truncated unitary lowest-weight modules, their tensor products,
and the truncated tensor product that keeps only physical constituents.

Modules are built through the weight-flip automorphism from the Verma
sweep: quotient bases are pivot monomials modulo the radical, and the
generator matrices are straightened PBW products projected back to the
quotient.  Lowest-weight vectors of a tensor product are joint kernels of
the coproduct lowering operators, one weight block at a time.
"""

from __future__ import annotations

from fractions import Fraction

from .. import linalg
from ..b2 import ALPHA1, ALPHA2, BETA3, Weight, classify_weight, omega_weight, par_tuples
from ..cyclo import QParams
from ..scalars import CycloDomain
from .algebra import SO23, ZERO4, engine_for
from .irreps import ModuleSweep, physical_rep
from .verma import VermaModule


def is_physical_label(e0, s, params):
    """Unitarizability of the lowest-weight irrep (E0, s), decided through
    the compact classification of the shifted weight (plus the two
    non-integral singleton weights)."""
    e0, s = Fraction(e0), Fraction(s)
    mu = Weight(e0, -s)
    lam_c = omega_weight(params) - mu
    flags = classify_weight(lam_c, params)
    if flags["compact"]:
        return True
    from ..b2 import singleton_weights
    sw = singleton_weights(params)
    return params.n == 1 and params.m % 2 == 0 and lam_c in (sw["rac"], sw["di"])


class PhysModule:
    """Lowest-weight module with lowest weight mu = (E0, s), truncated at
    h3 <= energy_cutoff, with exact generator matrices on the irreducible
    quotient."""

    def __init__(self, params, mu_labels, energy_cutoff, domain=None):
        self.params = params
        self.dom = domain or CycloDomain(params)
        self.e0 = Fraction(mu_labels[0])
        self.s = Fraction(mu_labels[1])
        self.mu = Weight(self.e0, -self.s)
        self.cutoff = Fraction(energy_cutoff)
        self.mirror = -self.mu
        self.sweep = ModuleSweep(params, self.mirror, SO23, domain=self.dom)
        self.vm = self.sweep.vm
        self.spaces = {}     # eta.alpha -> dict(basis, pivots, solver data)
        self.states = []     # (eta.alpha, local index)
        self.state_index = {}
        self._build()
        self._matrices = {}

    # -- construction --------------------------------------------------------

    def _build(self):
        a_max = int(self.cutoff - self.e0)
        etas = []
        for a in range(a_max + 1):
            b_cap = 2 * a + int(2 * self.s) + 2
            row = []
            for b in range(b_cap + 1):
                eta = Weight.from_alpha(a, b)
                d = self.sweep.process(eta, need_signature=False)
                row.append((eta, d))
            # the spin strings close: the last two multiplicities must vanish
            assert row[-1][1].mult == 0 and row[-2][1].mult == 0, \
                f"spin bound too small at energy step {a}"
            etas.extend(row)
        for eta, d in etas:
            if d.mult == 0:
                continue
            key = eta.alpha
            basis = self.vm.basis(eta)
            self.spaces[key] = {
                "eta": eta,
                "basis": basis,
                "pivots": d.pivots,
                "null": d.null_basis,
            }
            for j in range(d.mult):
                self.state_index[(key, j)] = len(self.states)
                self.states.append((key, j))

    def weight_of(self, key):
        """Actual weight mu + eta of a quotient space."""
        return self.mu + Weight.from_alpha(*key)

    def dim(self):
        return len(self.states)

    def _project(self, key, vec):
        """Quotient coordinates of a vector over the PBW basis at eta."""
        sp = self.spaces.get(key)
        if sp is None:
            n = len(vec)
            assert all(not x for x in vec), "vector escapes the module support"
            return None
        piv = sp["pivots"]
        null = sp["null"]
        n = len(vec)
        cols = []
        for j in piv:
            col = [self.dom.zero] * n
            col[j] = self.dom.one
            cols.append(col)
        cols.extend(null)
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
        sol = linalg.solve(mat, list(vec), self.dom.zero)
        assert sol is not None, "projection failed (quotient basis bug)"
        return sol[:len(piv)]

    def op_matrix(self, gen):
        """Sparse matrix of a generator on the quotient states.

        gen in {'e1','e2','f1','f2'}; raising operators of the module are
        lowering PBW multiplications of the flipped picture and vice versa.
        Returns dict (state_to, state_from) -> coeff."""
        if gen in self._matrices:
            return self._matrices[gen]
        out = {}
        for key, j in self.states:
            sp = self.spaces[key]
            eta = sp["eta"]
            k = sp["basis"][sp["pivots"][j]]
            src = self.state_index[(key, j)]
            if gen in ("e1", "e2"):
                root = ALPHA1 if gen == "e1" else ALPHA2
                kg = (1, 0, 0, 0) if gen == "e1" else (0, 0, 0, 1)
                prod = self.vm.eng.f_mono_mul(kg, k)
                dst_eta = eta + root
                dst_key = dst_eta.alpha
                if dst_key not in self.spaces:
                    # either truncated in energy or a zero-multiplicity
                    # space (the image then lies in the radical)
                    continue
                dst = par_tuples(dst_eta)
                idx = {kk: t for t, kk in enumerate(dst)}
                vec = [self.dom.zero] * len(dst)
                for kf, c in prod.items():
                    vec[idx[kf]] = vec[idx[kf]] + c
                coeffs = self._project(dst_key, vec)
                for t, c in enumerate(coeffs):
                    if c:
                        out[(self.state_index[(dst_key, t)], src)] = c
            else:
                i = 1 if gen == "f1" else 2
                root = ALPHA1 if i == 1 else ALPHA2
                dst_eta = eta - root
                a, b = dst_eta.alpha
                if a < 0 or b < 0:
                    continue
                dst_key = dst_eta.alpha
                dst = par_tuples(dst_eta)
                idx = {kk: t for t, kk in enumerate(dst)}
                vec = [self.dom.zero] * len(dst)
                for kf, c in self.vm.raise_action(i, k):
                    vec[idx[kf]] = vec[idx[kf]] + c
                if dst_key not in self.spaces:
                    continue
                coeffs = self._project(dst_key, vec)
                for t, c in enumerate(coeffs):
                    if c:
                        out[(self.state_index[(dst_key, t)], src)] = c
        self._matrices[gen] = out
        return out

    def h_eigenvalues(self, state):
        key, _ = self.states[state]
        return self.weight_of(key).h_eigenvalues()

    def check_relations(self, sample=None):
        """[e_i, f_j] = delta_ij [H_i]_{q_i} on the truncated quotient.

        Checked away from the cutoff boundary (raising past the cutoff is
        truncated)."""
        dom = self.dom
        for i, (e, f) in enumerate((("e1", "f1"), ("e2", "f2")), start=1):
            E, F = self.op_matrix(e), self.op_matrix(f)
            d = Fraction(1) if i == 1 else Fraction(1, 2)
            for s in range(self.dim()):
                key, _ = self.states[s]
                ev = self.weight_of(key).h_eigenvalues()[i - 1]
                energy = self.weight_of(key).dot(BETA3.root)
                if energy + 2 > self.cutoff:
                    continue
                acc = {}
                for (t, u), c in F.items():
                    if u != s:
                        continue
                    for (t2, u2), c2 in E.items():
                        if u2 == t:
                            acc[t2] = acc.get(t2, dom.zero) + c2 * c
                for (t, u), c in E.items():
                    if u != s:
                        continue
                    for (t2, u2), c2 in F.items():
                        if u2 == t:
                            acc[t2] = acc.get(t2, dom.zero) - c2 * c
                num = dom.q_power(d * ev) - dom.q_power(-d * ev)
                den = dom.q_power(d) - dom.q_power(-d)
                expected = num * (dom.one / den)
                for t, c in acc.items():
                    want = expected if t == s else dom.zero
                    assert c == want, f"[e{i},f{i}] fails at state {s}"
        return True


class TensorProduct:
    """Coproduct action on the product of two truncated modules."""

    def __init__(self, A, B, cutoff):
        assert A.params == B.params
        self.A, self.B = A, B
        self.params = A.params
        self.dom = A.dom
        self.cutoff = Fraction(cutoff)
        self.blocks = {}       # actual weight (e0c, sc coords) -> list of (ia, ib)
        for ia in range(A.dim()):
            wa = A.weight_of(A.states[ia][0])
            for ib in range(B.dim()):
                wb = B.weight_of(B.states[ib][0])
                w = wa + wb
                if w.dot(BETA3.root) <= self.cutoff:
                    self.blocks.setdefault((w.e0, w.s), []).append((ia, ib))

    def _delta_matrix(self, gen, src_w, dst_w):
        """Delta(f_i) from the block at src_w to the block at dst_w."""
        A, B = self.A, self.B
        dom = self.dom
        i = 1 if gen == "f1" else 2
        d = Fraction(1) if i == 1 else Fraction(1, 2)
        F_A = A.op_matrix(gen)
        F_B = B.op_matrix(gen)
        src = self.blocks.get(src_w, [])
        dst = self.blocks.get(dst_w, [])
        dst_idx = {p: t for t, p in enumerate(dst)}
        mat = [[dom.zero] * len(src) for _ in range(len(dst))]
        for c_src, (ia, ib) in enumerate(src):
            hb = B.weight_of(B.states[ib][0]).h_eigenvalues()[i - 1]
            qb = dom.q_power(d * hb / 2)
            for (ta, ua), c in F_A.items():
                if ua != ia:
                    continue
                t = dst_idx.get((ta, ib))
                if t is not None:
                    mat[t][c_src] = mat[t][c_src] + c * qb
            ha = A.weight_of(A.states[ia][0]).h_eigenvalues()[i - 1]
            qa = dom.q_power(-d * ha / 2)
            for (tb, ub), c in F_B.items():
                if ub != ib:
                    continue
                t = dst_idx.get((ia, tb))
                if t is not None:
                    mat[t][c_src] = mat[t][c_src] + qa * c
        return mat

    def lowest_weight_vectors(self):
        """Multiset of lowest weights: joint kernels of Delta(f1), Delta(f2).

        Only blocks with h2 <= 0 can carry lowest-weight vectors."""
        out = {}
        for (e0c, sc), pairs in sorted(self.blocks.items()):
            w = Weight(e0c, sc)
            if w.h_eigenvalues()[1] > 0:
                continue
            m1 = self._delta_matrix("f1", (e0c, sc),
                                    ((w - ALPHA1).e0, (w - ALPHA1).s))
            m2 = self._delta_matrix("f2", (e0c, sc),
                                    ((w - ALPHA2).e0, (w - ALPHA2).s))
            stack = m1 + m2
            n = len(pairs)
            if stack:
                ker = len(linalg.kernel_basis(stack, n, self.dom.zero, self.dom.one))
            else:
                ker = n
            if ker:
                out[w.lw_labels()] = ker
        return out


_MODULE_CACHE = {}


def get_module(params, labels, cutoff, domain=None):
    labels = (Fraction(labels[0]), Fraction(labels[1]))
    if domain is None:
        key = (params.m, params.n, labels, Fraction(cutoff))
        if key not in _MODULE_CACHE:
            _MODULE_CACHE[key] = PhysModule(params, labels, cutoff)
        return _MODULE_CACHE[key]
    return PhysModule(params, labels, cutoff, domain)


def truncated_tensor_so23(mu, mu2, params, depth, domain=None,
                          require_physical=True):
    """Truncated tensor product of two physical lowest-weight irreps.

    Finds all lowest-weight vectors of the coproduct action with total
    energy at most `depth` and returns the multiset of the physical ones as
    (E0, s) labels.  Empty when m/2n is not an integer (integral factors
    then admit no physical lowest weights); non-integral factors are
    rejected."""
    e0a, sa = Fraction(mu[0]), Fraction(mu[1])
    e0b, sb = Fraction(mu2[0]), Fraction(mu2[1])
    if not Weight(e0a, -sa).is_integral() or not Weight(e0b, -sb).is_integral():
        raise ValueError("truncated tensor product needs integral factors")
    ratio = Fraction(params.m, 2 * params.n)
    if ratio.denominator != 1:
        return {"kept": {}, "all": {}, "note": "no physical lowest weights"}
    cut = Fraction(depth)
    A = get_module(params, (e0a, sa), cut - e0b, domain)
    B = get_module(params, (e0b, sb), cut - e0a, domain)
    T = TensorProduct(A, B, cut)
    found = T.lowest_weight_vectors()
    kept = {}
    for (e0c, sc), mult in sorted(found.items()):
        if not require_physical or is_physical_label(e0c, sc, params):
            kept[(e0c, sc)] = mult
    return {"kept": kept, "all": found}


def truncated_chain(mu_list, params, depth, left=True, domain=None,
                    require_physical=True):
    """Iterated truncated product with the chosen bracketing.

    Returns the multiset of (E0, s) labels with total multiplicity."""
    cut = Fraction(depth)
    order = list(mu_list) if left else list(reversed(mu_list))
    current = {tuple(map(Fraction, order[0])): 1}
    for nxt in order[1:]:
        acc = {}
        for lbl, mult in current.items():
            pair = (lbl, tuple(map(Fraction, nxt))) if left \
                else (tuple(map(Fraction, nxt)), lbl)
            res = truncated_tensor_so23(pair[0], pair[1], params, cut,
                                        domain, require_physical)
            for lbl2, m2 in res["kept"].items():
                acc[lbl2] = acc.get(lbl2, 0) + mult * m2
        current = acc
    return current
