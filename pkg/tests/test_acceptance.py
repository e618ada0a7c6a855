"""Acceptance criteria.

One test per criterion; each prints a PASS line with its headline numbers
(run with `pytest -s tests/test_acceptance.py` to see them).  Every
comparison is exact; there are no tolerances anywhere.
"""

import itertools
from collections import Counter
from fractions import Fraction

import pytest

from qads import linalg
from qads.b2 import (ALPHA1, ALPHA2, BETA4, POSITIVE_ROOTS, RHO, Weight,
                     classify_weight, linkage_steps, par_count, par_tuples,
                     strongly_linked)
from qads.cyclo import QParams, hermitian_signature, qint, sign_of_real
from qads.scalars import CycloDomain, RationalDomain, SymbolicDomain
from qads.uqsl2 import (SO21, build_irrep2, check_rmatrix_properties,
                        tensor_decompose2, truncated_tensor2, unitarity_sl2)
from qads.uqso5 import irreps as so5_irreps
from qads.uqso5 import tensor as so5_tensor
from qads.uqso5 import verma as so5_verma


def _report(n, text):
    print(f"\nACCEPTANCE {n}: PASS - {text}")


# -- criterion 1 -------------------------------------------------------------

def test_criterion_1_rank1_unitarity():
    """Sign-formula verdict equals the exact Gram-signature verdict for
    n = 1, m in {4,6,8,10,12}, all d <= M, |z| <= 3; below the band edge
    the verdict is exactly 'z odd'."""
    cases = 0
    for m in (4, 6, 8, 10, 12):
        p = QParams(m, 1)
        for d in range(1, p.M + 1):
            for z in range(-3, 4):
                res = unitarity_sl2(d, z, p, SO21)
                # independent recomputation of both verdicts
                rep = build_irrep2(d, z, p)
                chain = all(
                    sign_of_real(-qint(k, 1, p) * p.qnum(rep.j - k + 1, 1)) > 0
                    for k in range(1, d))
                sig = hermitian_signature(rep.gram(SO21)) == (d, 0, 0)
                assert chain == sig == res["verdict"]
                # one-dimensional representations have an empty condition
                # set and are unitarizable for every z
                if d >= 2 and Fraction(d - 1) < Fraction(m, 2):
                    assert res["verdict"] == (z % 2 == 1)
                cases += 1
    _report(1, f"{cases} (m,d,z) cases, both verdicts agree everywhere")


# -- criterion 2 -------------------------------------------------------------

def test_criterion_2_fusion_bookkeeping():
    """Constructive fusion with exact dimension accounting; indecomposables
    have dimension 2M and exactly the two staircase singular vectors."""
    pairs = blocks = 0
    for m in (8, 12):
        p = QParams(m, 1)
        M = p.M
        for d in range(1, M + 1):
            for dp in range(1, M + 1):
                dec = tensor_decompose2(build_irrep2(d, 1, p),
                                        build_irrep2(dp, 1, p))
                total = sum(x for x, _ in dec["v_parts"]) \
                    + sum(b.dim for b in dec["i_parts"])
                assert total == d * dp
                for blk in dec["i_parts"]:
                    assert blk.dim == 2 * M
                    assert len(blk.singular_hw) == 2
                    assert len(blk.singular_lw) == 2
                    blocks += 1
                pairs += 1
    _report(2, f"{pairs} tensor products decomposed, {blocks} indecomposable "
               "blocks verified (dim 2M, two singular vectors each)")


# -- criterion 3 -------------------------------------------------------------

def test_criterion_3_truncated_associativity():
    """Bracketing independence of the truncated product on all triples."""
    triples = 0
    for m in (8, 12):
        p = QParams(m, 1)
        reps = {d: build_irrep2(d, 1, p) for d in range(2, p.M)}

        def tprod(labels, other, on_left):
            out = []
            for (d, z) in labels:
                a = build_irrep2(d, z, p)
                r = truncated_tensor2(a, other) if on_left \
                    else truncated_tensor2(other, a)
                out.extend(r["kept"])
            return out

        for da, db, dc in itertools.product(range(2, p.M), repeat=3):
            left = Counter(tprod(tprod([(da, 1)], reps[db], True),
                                 reps[dc], True))
            right = Counter(tprod(tprod([(dc, 1)], reps[db], False),
                                  reps[da], False))
            assert left == right, (m, da, db, dc)
            triples += 1
    _report(3, f"{triples} bracketing comparisons, all multisets identical")


# -- criteria 4 and 5 share a weight grid ------------------------------------

GRID = [Weight.of(e0, s) for e0 in range(5) for s in range(4)] \
    + [Weight.of(Fraction(5, 2), Fraction(1, 2)),
       Weight.of(Fraction(7, 2), Fraction(3, 2))]

ETA_CAP = 8


def _eta_list():
    out = []
    for h in range(1, ETA_CAP + 1):
        for a in range(h + 1):
            eta = Weight.from_alpha(a, h - a)
            if 1 <= par_count(eta) <= 6:
                out.append(eta)
    return out


def test_criterion_4_determinant_formula():
    """det(Gram) against the closed product formula: exact value up to the
    calibrated unit at generic q, plus zero locus and vanishing order at
    q = exp(i pi/4) and exp(i pi/6)."""
    assert len(GRID) >= 20
    etas = _eta_list()
    sym = SymbolicDomain()
    doms = [(sym, None),
            (CycloDomain(QParams(8, 1)), QParams(8, 1)),
            (CycloDomain(QParams(12, 1)), QParams(12, 1))]
    checks = vanishing = 0
    for lam in GRID:
        for eta in etas:
            for dom, params in doms:
                rep = so5_verma.verify_det(lam, eta, dom, params)
                assert rep["match"], (lam, eta.alpha, params, rep)
                checks += 1
                if rep.get("vanishing_order", (0, 0))[1]:
                    vanishing += 1
    _report(4, f"{checks} determinant comparisons over {len(GRID)} weights x "
               f"{len(etas)} weight spaces ({vanishing} vanishing orders matched)")


def test_criterion_5_strong_linkage():
    """Detected singular weights are strongly linked; every single linkage
    step within depth forces a vanishing Gram determinant."""
    depth = 6
    sing_checks = det_checks = 0
    for params in (QParams(8, 1), QParams(12, 1)):
        dom = CycloDomain(params)
        for lam in GRID:
            sv = so5_irreps.singular_vectors(lam, params, depth)
            linked = strongly_linked(lam, params, depth)
            for s in sv:
                assert s["weight"] in linked
                sing_checks += 1
            for beta, k, mu in linkage_steps(lam, params, ETA_CAP):
                eta = lam - mu
                if par_count(eta) > 6:
                    continue
                det = so5_verma.gram_det(dom, lam, eta)
                assert det.is_zero(), (lam, beta.label, k)
                det_checks += 1
    _report(5, f"{sing_checks} singular weights all strongly linked; "
               f"{det_checks} single-step determinants vanish exactly")


# -- criterion 6 -------------------------------------------------------------

def _classical_singular_etas(lam, depth):
    out = set()
    for i, alpha in ((1, ALPHA1), (2, ALPHA2)):
        k = 2 * (lam + RHO).dot(alpha) / alpha.dot(alpha)
        if k.denominator == 1 and 1 <= k and int(k) * alpha.height() <= depth:
            out.add((alpha.scale(int(k))).alpha)
    return out


def test_criterion_6_compact_structure():
    """At m = 12 the border family lam = (5-s) b3 + s b2 has exactly one
    extra singular vector, at lam - b4; generic compact weights have none
    beyond the classical ones; all these irreps are positive definite."""
    params = QParams(12, 1)
    depth = 6
    b4 = BETA4.root.alpha
    extra_found = 0
    for s in (Fraction(1), Fraction(3, 2), Fraction(2)):
        lam = Weight.of(5 - s, s)
        rep = so5_irreps.unitarity_so5(lam, params)
        assert rep.unitary, lam
        sv = {e for e, _ in rep.singular_weights
              if sum(e) <= depth}
        classical = _classical_singular_etas(lam, depth)
        assert sv == classical | {b4}, (lam, sv, classical)
        extra_found += 1
    generic = 0
    for lam in GRID:
        flags = classify_weight(lam, params)
        if not flags["compact"]:
            continue
        if lam.e0 + lam.s == 5:      # border family handled above
            continue
        rep = so5_irreps.unitarity_so5(lam, params)
        assert rep.unitary, lam
        sv = {e for e, _ in rep.singular_weights if sum(e) <= depth}
        classical = _classical_singular_etas(lam, depth)
        assert sv == classical, (lam, sv, classical)
        generic += 1
    _report(6, f"3 border weights with exactly the extra b4 vector; "
               f"{generic} generic compact weights with classical structure only; "
               "all positive definite")


# -- criterion 7 -------------------------------------------------------------

def _integral_mu_grid(params):
    bound = Fraction(params.m, 2 * params.n)
    out = []
    for twice_s in range(0, 5):
        s = Fraction(twice_s, 2)
        e0 = s + 1
        while e0 < bound:
            if Weight(e0, -s).is_integral():
                out.append((e0, s))
            e0 += 1
    return out


def test_criterion_7_physical_representations():
    """All integral mu = (E0, s) with s <= 2, s+1 <= E0 < m/2n are
    unitarizable at m = 12; massless weights need the gauge quotient with
    lowest weight (E0+1, s-1); Rac and Di have all multiplicities one.
    Low-energy character data stabilizes across m in {8, 12, 16}."""
    params = QParams(12, 1)
    grid = _integral_mu_grid(params)
    assert len(grid) >= 15
    massless = 0
    for (e0, s) in grid:
        rep = so5_irreps.physical_rep((e0, s), params)
        assert rep.unitary, (e0, s)
        if s >= 1 and e0 == s + 1:
            assert rep.gauge is not None
            assert rep.gauge["lowest_weight"] == (str(e0 + 1), str(s - 1))
            massless += 1
        else:
            assert rep.gauge is None
    rac = so5_irreps.physical_rep((Fraction(1, 2), 0), params)
    di = so5_irreps.physical_rep((1, Fraction(1, 2)), params)
    assert rac.unitary and set(rac.character.values()) == {1}
    assert di.unitary and set(di.character.values()) == {1}
    stab = {}
    for m in (8, 12, 16):
        rep = so5_irreps.physical_rep((2, 1), QParams(m, 1), check_shift=False)
        stab[m] = {k: v for k, v in rep.character.items() if k[0] + k[1] <= 2}
    assert stab[8] == stab[12] == stab[16]
    _report(7, f"{len(grid)} integral weights unitarizable ({massless} massless "
               "with gauge quotients); Rac and Di multiplicity-one; low-energy "
               "characters stable across m in {8,12,16}")


# -- criterion 8 -------------------------------------------------------------

def test_criterion_8_shift_equivalence():
    """Compact verdict of lam equals the Anti-de Sitter verdict of the
    shifted lowest weight -lam + (m/2n) b3, over the full grid (two
    independent Gram computations)."""
    params = QParams(12, 1)
    agree = 0
    for lam in GRID:
        flags = classify_weight(lam, params)
        if not flags["integral"]:
            continue
        compact_rep = so5_irreps.unitarity_so5(lam, params,
                                               stop_early=False)
        from qads.b2 import shift_by_omega
        mu = shift_by_omega(lam, params)
        e0, s = mu.lw_labels()
        ads_rep = so5_irreps.sweep_module(params, -mu, "SO23",
                                          need_signature=True,
                                          stop_early_on_negative=False)
        assert compact_rep.unitary == ads_rep.unitary, (lam, mu)
        agree += 1
    _report(8, f"{agree} weights: compact and shifted AdS verdicts agree "
               "(100%)")


# -- criterion 9 -------------------------------------------------------------

def test_criterion_9_rmatrix_properties():
    """Intertwiner identity and R* = R^{-1} hold exactly on V_{d,z} (x)
    V_{d',z'} for all d, d' <= M at m = 8 (z-structure is periodic; one
    even and one odd band each are exercised)."""
    p = QParams(8, 1)
    count = 0
    for d in range(1, p.M + 1):
        for dp in range(1, p.M + 1):
            for z, zp in ((1, 1), (1, 2), (2, 1), (0, 1)):
                assert check_rmatrix_properties(build_irrep2(d, z, p),
                                                build_irrep2(dp, zp, p))
                count += 1
    _report(9, f"{count} tensor products: sigma.Delta(u) R = R Delta(u) and "
               "R* R = 1 exactly")


# -- criterion 10 ------------------------------------------------------------

def test_criterion_10_so23_truncated_product():
    """mu = mu' = (2,1) at m = 16: associative across bracketings at depth
    E <= 8, every output unitarizable, and the multiset at energies
    <= m/4n equals the generic-q brute-force decomposition."""
    params = QParams(16, 1)
    depth = 8
    res = so5_tensor.truncated_tensor_so23((2, 1), (2, 1), params, depth)
    for (e0, s), mult in res["kept"].items():
        rep = so5_irreps.physical_rep((e0, s), params, check_shift=False)
        assert rep.unitary, (e0, s)
    oracle = so5_tensor.truncated_tensor_so23(
        (2, 1), (2, 1), params, depth,
        domain=RationalDomain(Fraction(9, 7)), require_physical=False)
    bound = Fraction(params.m, 4 * params.n)
    low = {k: v for k, v in res["kept"].items() if k[0] <= bound}
    low_oracle = {k: v for k, v in oracle["all"].items() if k[0] <= bound}
    assert low == low_oracle and low
    left = so5_tensor.truncated_chain([(2, 1)] * 3, params, depth, left=True)
    right = so5_tensor.truncated_chain([(2, 1)] * 3, params, depth, left=False)
    assert left == right
    _report(10, f"assoc. multiset of {sum(left.values())} outputs at depth "
                f"E<=8 identical for both bracketings; {len(res['kept'])} "
                f"distinct outputs unitarizable; classical regime (E <= 4) "
                "matches the generic-q oracle exactly")
